// topology.hpp -- finite topologies as families of bitmask subsets

#ifndef MVS_TOPOLOGY_HPP
#define MVS_TOPOLOGY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mvs/error.hpp"

namespace mvs {

/// Subset of a point set with at most kMaxPoints members, bit i = point i.
using PointSet = std::uint32_t;

inline constexpr std::size_t kMaxPoints = 16;

/// A topology on {0, ..., n-1}: contains the empty and the full set and is
/// closed under pairwise union and intersection. Open sets are kept sorted
/// by mask value; instances are immutable after construction.
class FiniteTopology {
public:
  FiniteTopology(std::size_t point_count, std::vector<PointSet> opens);

  static FiniteTopology discrete(std::size_t point_count);
  static FiniteTopology indiscrete(std::size_t point_count);

  std::size_t point_count() const { return point_count_; }
  PointSet full_set() const {
    return static_cast<PointSet>((std::uint64_t{1} << point_count_) - 1);
  }

  const std::vector<PointSet>& opens() const { return opens_; }
  bool contains(PointSet u) const;

  /// Every open set of this topology is open in other.
  bool subfamily_of(const FiniteTopology& other) const;

  bool operator==(const FiniteTopology&) const = default;

private:
  std::size_t point_count_ = 0;
  std::vector<PointSet> opens_;
};

} // namespace mvs

#endif // MVS_TOPOLOGY_HPP
