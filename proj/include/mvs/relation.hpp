// relation.hpp -- dense boolean relations over a finite carrier

#ifndef MVS_RELATION_HPP
#define MVS_RELATION_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace mvs {

/// Index of an element within a finite carrier. After validation the
/// neutral element always sits at index 0.
using ElemId = std::size_t;

/// A binary relation on {0, ..., size-1} stored as a dense boolean matrix.
/// Holds induced orders, congruences and kernels.
class ElemRelation {
public:
  ElemRelation() = default;
  explicit ElemRelation(std::size_t size) : size_(size), bits_(size * size, 0) {}

  static ElemRelation identity(std::size_t size);
  static ElemRelation full(std::size_t size);

  std::size_t size() const { return size_; }

  bool at(ElemId a, ElemId b) const { return bits_[a * size_ + b] != 0; }
  void set(ElemId a, ElemId b, bool value = true) { bits_[a * size_ + b] = value ? 1 : 0; }

  bool operator==(const ElemRelation&) const = default;

  // Witnesses are the lexicographically smallest offending tuples.
  std::optional<ElemId> reflexivity_witness() const;
  std::optional<std::array<ElemId, 2>> symmetry_witness() const;
  std::optional<std::array<ElemId, 3>> transitivity_witness() const;

  bool is_reflexive() const { return !reflexivity_witness(); }
  bool is_symmetric() const { return !symmetry_witness(); }
  bool is_transitive() const { return !transitivity_witness(); }
  bool is_equivalence() const { return is_reflexive() && is_symmetric() && is_transitive(); }

  bool subrelation_of(const ElemRelation& other) const;

  /// Equivalence classes ordered by smallest member, each sorted ascending.
  /// Requires is_equivalence().
  std::vector<std::vector<ElemId>> classes() const;

  /// Position of each element's class within classes().
  std::vector<std::size_t> class_index() const;

private:
  std::size_t size_ = 0;
  std::vector<char> bits_;
};

} // namespace mvs

#endif // MVS_RELATION_HPP
