// io.cpp -- document scanner, per-kind section parsers, canonical
// serialization, and file loaders

#include "mvs/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mvs/error.hpp"

namespace mvs {

namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t col = 0; // 1-based column of the first character
};

using TokenLine = std::vector<Token>;

std::vector<TokenLine> scan(std::string_view text) {
  std::vector<TokenLine> lines;
  std::size_t line_no = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? std::string_view::npos : end - start);
    TokenLine tokens;
    for (std::size_t i = 0; i < line.size();) {
      const char ch = line[i];
      if (ch == '#') {
        break;
      }
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
        continue;
      }
      if (ch == '{' || ch == '}' || ch == ':') {
        tokens.push_back({std::string(1, ch), line_no, i + 1});
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
             line[j] != '{' && line[j] != '}' && line[j] != ':' && line[j] != '#') {
        ++j;
      }
      tokens.push_back({std::string(line.substr(i, j - i)), line_no, i + 1});
      i = j;
    }
    if (!tokens.empty()) {
      lines.push_back(std::move(tokens));
    }
    if (end == std::string_view::npos) {
      break;
    }
    start = end + 1;
    ++line_no;
  }
  return lines;
}

bool valid_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c));
  });
}

[[noreturn]] void fail(const Token& at, const std::string& message) {
  throw SyntaxError(at.line, at.col, message);
}

const Token& expect_more(const TokenLine& line, std::size_t idx, const std::string& what) {
  if (idx >= line.size()) {
    const Token& last = line.back();
    throw SyntaxError(last.line, last.col + last.text.size(), "expected " + what);
  }
  return line[idx];
}

std::string expect_name(const TokenLine& line, std::size_t idx, const std::string& what) {
  const Token& tok = expect_more(line, idx, what);
  if (!valid_name(tok.text)) {
    fail(tok, "invalid name '" + tok.text + "'; names are alphanumeric");
  }
  return tok.text;
}

void expect_end(const TokenLine& line, std::size_t idx) {
  if (idx < line.size()) {
    fail(line[idx], "unexpected '" + line[idx].text + "'");
  }
}

void expect_keyword(const TokenLine& line, const std::string& keyword) {
  if (line[0].text != keyword) {
    fail(line[0], "expected '" + keyword + "', got '" + line[0].text + "'");
  }
}

std::vector<std::string> names_from(const TokenLine& line, std::size_t idx,
                                    const std::string& what) {
  std::vector<std::string> out;
  expect_more(line, idx, what);
  for (std::size_t i = idx; i < line.size(); ++i) {
    if (!valid_name(line[i].text)) {
      fail(line[i], "invalid name '" + line[i].text + "'; names are alphanumeric");
    }
    out.push_back(line[i].text);
  }
  return out;
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& name,
                     const std::string& what) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) {
    throw SemanticError("unknown " + what + " '" + name + "'");
  }
  return static_cast<std::size_t>(it - names.begin());
}

Document parse_mvs(const std::vector<TokenLine>& lines) {
  if (lines.empty()) {
    throw SemanticError("mvs document has no elems line");
  }
  expect_keyword(lines[0], "elems");
  RawTable raw;
  raw.names = names_from(lines[0], 1, "element names");
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const TokenLine& line = lines[r];
    expect_keyword(line, "row");
    const std::string label = expect_name(line, 1, "row element");
    if (r - 1 >= raw.names.size()) {
      throw SemanticError("table not square");
    }
    if (label != raw.names[r - 1]) {
      throw SemanticError("row labelled '" + label + "'; expected row for '" +
                          raw.names[r - 1] + "'");
    }
    const Token& colon = expect_more(line, 2, "':'");
    if (colon.text != ":") {
      fail(colon, "expected ':' after row label");
    }
    std::vector<ElemId> row;
    for (const std::string& entry : names_from(line, 3, "row entries")) {
      row.push_back(index_of(raw.names, entry, "element"));
    }
    if (row.size() != raw.names.size()) {
      throw SemanticError("table not square");
    }
    raw.table.push_back(std::move(row));
  }
  if (raw.table.size() != raw.names.size()) {
    throw SemanticError("table not square");
  }
  return Document{DocKind::Mvs, std::move(raw)};
}

Document parse_relation(const std::vector<TokenLine>& lines) {
  RelationDoc doc;
  for (const TokenLine& line : lines) {
    expect_keyword(line, "pairs");
    std::vector<std::string> names;
    for (std::size_t i = 1; i < line.size(); ++i) {
      if (!valid_name(line[i].text)) {
        fail(line[i], "invalid name '" + line[i].text + "'; names are alphanumeric");
      }
      names.push_back(line[i].text);
    }
    if (names.size() % 2 != 0) {
      const Token& last = line.back();
      fail(last, "pairs line has an odd number of names");
    }
    for (std::size_t i = 0; i + 1 < names.size(); i += 2) {
      doc.pairs.push_back({names[i], names[i + 1]});
    }
  }
  return Document{DocKind::Relation, std::move(doc)};
}

Document parse_map(const std::vector<TokenLine>& lines) {
  if (lines.size() < 2) {
    throw SemanticError("map document needs 'from' and 'to' lines");
  }
  expect_keyword(lines[0], "from");
  MapDoc doc;
  doc.from = expect_more(lines[0], 1, "a file path").text;
  expect_end(lines[0], 2);
  expect_keyword(lines[1], "to");
  doc.to = expect_more(lines[1], 1, "a file path").text;
  expect_end(lines[1], 2);
  for (std::size_t r = 2; r < lines.size(); ++r) {
    const TokenLine& line = lines[r];
    expect_keyword(line, "send");
    const std::string src = expect_name(line, 1, "an element name");
    const Token& arrow = expect_more(line, 2, "'->'");
    if (arrow.text != "->") {
      fail(arrow, "expected '->'");
    }
    const std::string dst = expect_name(line, 3, "an element name");
    expect_end(line, 4);
    doc.sends.push_back({src, dst});
  }
  return Document{DocKind::Map, std::move(doc)};
}

Document parse_quasimetric(const std::vector<TokenLine>& lines) {
  if (lines.size() < 2) {
    throw SemanticError("quasimetric document needs 'points' and 'mvs' lines");
  }
  expect_keyword(lines[0], "points");
  QuasimetricDoc doc;
  doc.points = names_from(lines[0], 1, "point names");
  expect_keyword(lines[1], "mvs");
  doc.mvs_path = expect_more(lines[1], 1, "a file path").text;
  expect_end(lines[1], 2);
  for (std::size_t r = 2; r < lines.size(); ++r) {
    const TokenLine& line = lines[r];
    expect_keyword(line, "row");
    const std::string label = expect_name(line, 1, "row point");
    const std::size_t row_idx = r - 2;
    if (row_idx >= doc.points.size()) {
      throw SemanticError("more rows than points");
    }
    if (label != doc.points[row_idx]) {
      throw SemanticError("row labelled '" + label + "'; expected row for '" +
                          doc.points[row_idx] + "'");
    }
    const Token& colon = expect_more(line, 2, "':'");
    if (colon.text != ":") {
      fail(colon, "expected ':' after row label");
    }
    doc.rows.push_back(names_from(line, 3, "row entries"));
    if (doc.rows.back().size() != doc.points.size()) {
      throw SemanticError("row length differs from point count");
    }
  }
  if (doc.rows.size() != doc.points.size()) {
    throw SemanticError("row count differs from point count");
  }
  return Document{DocKind::Quasimetric, std::move(doc)};
}

Document parse_topology(const std::vector<TokenLine>& lines) {
  if (lines.empty()) {
    throw SemanticError("topology document has no points line");
  }
  expect_keyword(lines[0], "points");
  TopologyDoc doc;
  doc.points = names_from(lines[0], 1, "point names");
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const TokenLine& line = lines[r];
    expect_keyword(line, "open");
    const Token& brace = expect_more(line, 1, "'{'");
    if (brace.text != "{") {
      fail(brace, "expected '{'");
    }
    std::vector<std::string> members;
    std::size_t i = 2;
    for (; i < line.size() && line[i].text != "}"; ++i) {
      if (!valid_name(line[i].text)) {
        fail(line[i], "invalid name '" + line[i].text + "'; names are alphanumeric");
      }
      members.push_back(line[i].text);
    }
    if (i >= line.size()) {
      const Token& last = line.back();
      throw SyntaxError(last.line, last.col + last.text.size(), "expected '}'");
    }
    expect_end(line, i + 1);
    doc.opens.push_back(std::move(members));
  }
  return Document{DocKind::Topology, std::move(doc)};
}

Document parse_presentation(const std::vector<TokenLine>& lines) {
  if (lines.empty()) {
    throw SemanticError("presentation document has no letters line");
  }
  expect_keyword(lines[0], "letters");
  PresentationDoc doc;
  doc.letters = names_from(lines[0], 1, "letter names");
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const TokenLine& line = lines[r];
    expect_keyword(line, "rel");
    const std::string a = expect_name(line, 1, "a letter");
    const std::string b = expect_name(line, 2, "a letter");
    const Token& tilde = expect_more(line, 3, "'~'");
    if (tilde.text != "~") {
      fail(tilde, "expected '~'");
    }
    const std::string c = expect_name(line, 4, "a letter");
    expect_end(line, 5);
    doc.relations.push_back({a, b, c});
  }
  return Document{DocKind::Presentation, std::move(doc)};
}

} // namespace

std::string kind_name(DocKind kind) {
  switch (kind) {
  case DocKind::Mvs:
    return "mvs";
  case DocKind::Relation:
    return "relation";
  case DocKind::Map:
    return "map";
  case DocKind::Quasimetric:
    return "quasimetric";
  case DocKind::Topology:
    return "topology";
  case DocKind::Presentation:
    return "presentation";
  }
  return "?";
}

Document parse_document(std::string_view text) {
  const std::vector<TokenLine> all = scan(text);
  if (all.empty()) {
    throw SyntaxError(1, 1, "empty document");
  }
  const TokenLine& head = all[0];
  if (head.size() != 1) {
    fail(head[1], "expected nothing after the document kind");
  }
  const std::vector<TokenLine> rest(all.begin() + 1, all.end());
  const std::string& kind = head[0].text;
  if (kind == "mvs") {
    return parse_mvs(rest);
  }
  if (kind == "relation") {
    return parse_relation(rest);
  }
  if (kind == "map") {
    return parse_map(rest);
  }
  if (kind == "quasimetric") {
    return parse_quasimetric(rest);
  }
  if (kind == "topology") {
    return parse_topology(rest);
  }
  if (kind == "presentation") {
    return parse_presentation(rest);
  }
  fail(head[0], "unknown document kind '" + kind + "'");
}

namespace {

void join_names(std::ostringstream& out, const std::vector<std::string>& names) {
  for (const std::string& n : names) {
    out << ' ' << n;
  }
}

} // namespace

std::string serialize(const Document& doc) {
  std::ostringstream out;
  out << kind_name(doc.kind) << '\n';
  switch (doc.kind) {
  case DocKind::Mvs: {
    const auto& raw = std::get<RawTable>(doc.body);
    out << "elems";
    join_names(out, raw.names);
    out << '\n';
    for (std::size_t i = 0; i < raw.table.size(); ++i) {
      out << "row " << raw.names[i] << ":";
      for (ElemId v : raw.table[i]) {
        out << ' ' << raw.names[v];
      }
      out << '\n';
    }
    break;
  }
  case DocKind::Relation: {
    const auto& rel = std::get<RelationDoc>(doc.body);
    out << "pairs";
    for (const auto& p : rel.pairs) {
      out << ' ' << p[0] << ' ' << p[1];
    }
    out << '\n';
    break;
  }
  case DocKind::Map: {
    const auto& map = std::get<MapDoc>(doc.body);
    out << "from " << map.from << '\n';
    out << "to " << map.to << '\n';
    for (const auto& s : map.sends) {
      out << "send " << s[0] << " -> " << s[1] << '\n';
    }
    break;
  }
  case DocKind::Quasimetric: {
    const auto& qm = std::get<QuasimetricDoc>(doc.body);
    out << "points";
    join_names(out, qm.points);
    out << '\n';
    out << "mvs " << qm.mvs_path << '\n';
    for (std::size_t i = 0; i < qm.rows.size(); ++i) {
      out << "row " << qm.points[i] << ":";
      join_names(out, qm.rows[i]);
      out << '\n';
    }
    break;
  }
  case DocKind::Topology: {
    const auto& top = std::get<TopologyDoc>(doc.body);
    out << "points";
    join_names(out, top.points);
    out << '\n';
    for (const auto& open : top.opens) {
      out << "open {";
      for (std::size_t i = 0; i < open.size(); ++i) {
        out << (i == 0 ? "" : " ") << open[i];
      }
      out << "}\n";
    }
    break;
  }
  case DocKind::Presentation: {
    const auto& pres = std::get<PresentationDoc>(doc.body);
    out << "letters";
    join_names(out, pres.letters);
    out << '\n';
    for (const auto& r : pres.relations) {
      out << "rel " << r[0] << ' ' << r[1] << " ~ " << r[2] << '\n';
    }
    break;
  }
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot read file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot write file: " + path);
  }
  out << text;
  if (!out) {
    throw Error("cannot write file: " + path);
  }
}

namespace {

const Document& require_kind(const Document& doc, DocKind kind, const std::string& path) {
  if (doc.kind != kind) {
    throw SemanticError(path + ": expected a " + kind_name(kind) + " document, got " +
                        kind_name(doc.kind));
  }
  return doc;
}

std::string sibling_path(const std::string& anchor, const std::string& relative) {
  std::filesystem::path p(relative);
  if (p.is_absolute()) {
    return relative;
  }
  return (std::filesystem::path(anchor).parent_path() / p).string();
}

ElemId elem_id(const FiniteMvs& m, const std::string& name) {
  const auto id = m.id_of(name);
  if (!id) {
    throw SemanticError("unknown element '" + name + "'");
  }
  return *id;
}

} // namespace

FiniteMvs load_mvs(const std::string& path) {
  const Document doc = parse_document(read_file(path));
  require_kind(doc, DocKind::Mvs, path);
  return validate(std::get<RawTable>(doc.body));
}

ElemRelation bind_relation(const RelationDoc& doc, const FiniteMvs& m) {
  ElemRelation rel(m.card());
  for (const auto& p : doc.pairs) {
    rel.set(elem_id(m, p[0]), elem_id(m, p[1]), true);
  }
  return rel;
}

MvsMap load_map(const std::string& path) {
  const Document doc = parse_document(read_file(path));
  require_kind(doc, DocKind::Map, path);
  const auto& map = std::get<MapDoc>(doc.body);
  FiniteMvs from = load_mvs(sibling_path(path, map.from));
  FiniteMvs to = load_mvs(sibling_path(path, map.to));
  std::vector<ElemId> mapping(from.card(), 0);
  std::vector<char> seen(from.card(), 0);
  for (const auto& s : map.sends) {
    const ElemId src = elem_id(from, s[0]);
    if (seen[src]) {
      throw SemanticError("duplicate send for '" + s[0] + "'");
    }
    seen[src] = 1;
    mapping[src] = elem_id(to, s[1]);
  }
  for (ElemId i = 0; i < from.card(); ++i) {
    if (!seen[i]) {
      throw SemanticError("no image for '" + from.name(i) + "'");
    }
  }
  return make_hom(std::move(from), std::move(to), std::move(mapping));
}

QuasimetricTable load_quasimetric(const std::string& path) {
  const Document doc = parse_document(read_file(path));
  require_kind(doc, DocKind::Quasimetric, path);
  const auto& qm = std::get<QuasimetricDoc>(doc.body);
  for (std::size_t i = 0; i < qm.points.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (qm.points[i] == qm.points[j]) {
        throw SemanticError("duplicate point name '" + qm.points[i] + "'");
      }
    }
  }
  FiniteMvs m = load_mvs(sibling_path(path, qm.mvs_path));
  std::vector<std::vector<ElemId>> values;
  for (const auto& row : qm.rows) {
    std::vector<ElemId> ids;
    for (const std::string& name : row) {
      ids.push_back(elem_id(m, name));
    }
    values.push_back(std::move(ids));
  }
  return make_quasimetric(qm.points, std::move(m), std::move(values));
}

std::pair<FiniteTopology, std::vector<std::string>> load_topology(const std::string& path) {
  const Document doc = parse_document(read_file(path));
  require_kind(doc, DocKind::Topology, path);
  const auto& top = std::get<TopologyDoc>(doc.body);
  if (top.points.size() > kMaxPoints) {
    throw SemanticError("too many points: " + std::to_string(top.points.size()));
  }
  for (std::size_t i = 0; i < top.points.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (top.points[i] == top.points[j]) {
        throw SemanticError("duplicate point name '" + top.points[i] + "'");
      }
    }
  }
  std::vector<PointSet> opens;
  for (const auto& open : top.opens) {
    PointSet mask = 0;
    for (const std::string& name : open) {
      mask |= PointSet{1} << index_of(top.points, name, "point");
    }
    opens.push_back(mask);
  }
  return {FiniteTopology(top.points.size(), std::move(opens)), top.points};
}

Presentation load_presentation(const std::string& path) {
  const Document doc = parse_document(read_file(path));
  require_kind(doc, DocKind::Presentation, path);
  const auto& pres = std::get<PresentationDoc>(doc.body);
  return Presentation(pres.letters, pres.relations);
}

Document to_document(const RawTable& raw) { return Document{DocKind::Mvs, raw}; }

Document to_document(const ElemRelation& rel, const std::vector<std::string>& names) {
  if (rel.size() != names.size()) {
    throw DomainMismatch("relation size differs from name count");
  }
  RelationDoc doc;
  for (ElemId i = 0; i < rel.size(); ++i) {
    for (ElemId j = 0; j < rel.size(); ++j) {
      if (rel.at(i, j)) {
        doc.pairs.push_back({names[i], names[j]});
      }
    }
  }
  return Document{DocKind::Relation, std::move(doc)};
}

Document to_document(const MapDoc& doc) { return Document{DocKind::Map, doc}; }

Document to_document(const QuasimetricTable& q, const std::string& mvs_path) {
  QuasimetricDoc doc;
  doc.points = q.points();
  doc.mvs_path = mvs_path;
  for (std::size_t i = 0; i < doc.points.size(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < doc.points.size(); ++j) {
      row.push_back(q.mvs().name(q.value(i, j)));
    }
    doc.rows.push_back(std::move(row));
  }
  return Document{DocKind::Quasimetric, std::move(doc)};
}

Document to_document(const FiniteTopology& t, const std::vector<std::string>& point_names) {
  if (point_names.size() != t.point_count()) {
    throw DomainMismatch("point name count differs from the topology");
  }
  TopologyDoc doc;
  doc.points = point_names;
  for (PointSet open : t.opens()) {
    std::vector<std::string> members;
    for (std::size_t i = 0; i < t.point_count(); ++i) {
      if (open & (PointSet{1} << i)) {
        members.push_back(point_names[i]);
      }
    }
    doc.opens.push_back(std::move(members));
  }
  return Document{DocKind::Topology, std::move(doc)};
}

Document to_document(const Presentation& p) {
  PresentationDoc doc;
  doc.letters = p.alphabet().letters();
  for (const Rel& r : p.relations()) {
    doc.relations.push_back(
        {p.alphabet().letter(r.a), p.alphabet().letter(r.b), p.alphabet().letter(r.c)});
  }
  return Document{DocKind::Presentation, std::move(doc)};
}

} // namespace mvs
