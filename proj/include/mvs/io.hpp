// io.hpp -- line-oriented text formats for every domain object, plus file
// loading that resolves cross-references between documents

#ifndef MVS_IO_HPP
#define MVS_IO_HPP

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mvs/algebra.hpp"
#include "mvs/quasimetric.hpp"
#include "mvs/relation.hpp"
#include "mvs/topology.hpp"
#include "mvs/words.hpp"

namespace mvs {

enum class DocKind { Mvs, Relation, Map, Quasimetric, Topology, Presentation };

std::string kind_name(DocKind kind);

/// Pairs of element names; the universe is supplied when binding to a
/// value set. Listed pairs only: reflexive pairs must be written out.
struct RelationDoc {
  std::vector<std::array<std::string, 2>> pairs;

  bool operator==(const RelationDoc&) const = default;
};

/// A function between the value sets stored in two other files.
struct MapDoc {
  std::string from;
  std::string to;
  std::vector<std::array<std::string, 2>> sends;

  bool operator==(const MapDoc&) const = default;
};

/// A point-indexed matrix of element names over the value set stored in
/// another file.
struct QuasimetricDoc {
  std::vector<std::string> points;
  std::string mvs_path;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const QuasimetricDoc&) const = default;
};

struct TopologyDoc {
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> opens;

  bool operator==(const TopologyDoc&) const = default;
};

struct PresentationDoc {
  std::vector<std::string> letters;
  std::vector<std::array<std::string, 3>> relations;

  bool operator==(const PresentationDoc&) const = default;
};

struct Document {
  DocKind kind;
  std::variant<RawTable, RelationDoc, MapDoc, QuasimetricDoc, TopologyDoc, PresentationDoc>
      body;

  bool operator==(const Document&) const = default;
};

/// Parses one document. The grammar is line-oriented: the first meaningful
/// line names the kind, '#' starts a comment, names are alphanumeric, and
/// '{', '}', ':' separate themselves from neighbouring tokens.
Document parse_document(std::string_view text);

/// Canonical text form; parse(serialize(d)) == d, and serialize is the
/// identity on canonically formatted input.
std::string serialize(const Document& doc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

/// Loads and validates a value-set file.
FiniteMvs load_mvs(const std::string& path);

/// Resolves the names of a relation document against a carrier.
ElemRelation bind_relation(const RelationDoc& doc, const FiniteMvs& m);

/// Loads a map file; the two value-set paths are resolved relative to the
/// map file's directory. The result passed the homomorphism checks.
MvsMap load_map(const std::string& path);

/// Loads a quasimetric file; the value-set path is resolved relative to
/// the quasimetric file's directory.
QuasimetricTable load_quasimetric(const std::string& path);

/// Loads a topology file; returns the topology and the point names.
std::pair<FiniteTopology, std::vector<std::string>> load_topology(const std::string& path);

Presentation load_presentation(const std::string& path);

Document to_document(const RawTable& raw);
Document to_document(const ElemRelation& rel, const std::vector<std::string>& names);
Document to_document(const MapDoc& doc);
Document to_document(const QuasimetricTable& q, const std::string& mvs_path);
Document to_document(const FiniteTopology& t, const std::vector<std::string>& point_names);
Document to_document(const Presentation& p);

} // namespace mvs

#endif // MVS_IO_HPP
