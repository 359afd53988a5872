// topology.cpp

#include "mvs/topology.hpp"

#include <algorithm>

namespace mvs {

FiniteTopology::FiniteTopology(std::size_t point_count, std::vector<PointSet> opens)
    : point_count_(point_count), opens_(std::move(opens)) {
  if (point_count_ > kMaxPoints) {
    throw SemanticError("more than " + std::to_string(kMaxPoints) + " points");
  }
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());

  const PointSet full = full_set();
  for (PointSet u : opens_) {
    if ((u & ~full) != 0) {
      throw SemanticError("open set contains unknown points");
    }
  }
  if (!contains(0) || !contains(full)) {
    throw SemanticError("topology must contain the empty and the full set");
  }
  for (PointSet u : opens_) {
    for (PointSet v : opens_) {
      if (!contains(u | v) || !contains(u & v)) {
        throw SemanticError("family not closed under union and intersection");
      }
    }
  }
}

FiniteTopology FiniteTopology::discrete(std::size_t point_count) {
  const PointSet full = static_cast<PointSet>((std::uint64_t{1} << point_count) - 1);
  std::vector<PointSet> opens;
  opens.reserve(std::size_t{1} << point_count);
  for (PointSet u = 0;; ++u) {
    opens.push_back(u);
    if (u == full) {
      break;
    }
  }
  return FiniteTopology(point_count, std::move(opens));
}

FiniteTopology FiniteTopology::indiscrete(std::size_t point_count) {
  const PointSet full = static_cast<PointSet>((std::uint64_t{1} << point_count) - 1);
  return FiniteTopology(point_count, {0, full});
}

bool FiniteTopology::contains(PointSet u) const {
  return std::binary_search(opens_.begin(), opens_.end(), u);
}

bool FiniteTopology::subfamily_of(const FiniteTopology& other) const {
  if (point_count_ != other.point_count_) {
    throw PointSetMismatch("topologies live on different point sets");
  }
  for (PointSet u : opens_) {
    if (!other.contains(u)) {
      return false;
    }
  }
  return true;
}

} // namespace mvs
