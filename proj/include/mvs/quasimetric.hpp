// quasimetric.hpp -- value-set-valued distance tables, open balls and the
// induced topologies

#ifndef MVS_QUASIMETRIC_HPP
#define MVS_QUASIMETRIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvs/hom.hpp"
#include "mvs/topology.hpp"

namespace mvs {

/// Outcome of checking a distance table. Asymmetry (f3) is informational:
/// it separates metrics from quasimetrics but never invalidates a table.
struct QuasimetricCheck {
  bool f1 = false; // f(x,z) divides f(x,y) + f(y,z)
  bool f2 = false; // f(x,x) = 0
  bool f3 = false; // f(x,y) = f(y,x)

  std::optional<std::array<std::size_t, 3>> f1_witness;
  std::optional<std::size_t> f2_witness;
  std::optional<std::array<std::size_t, 2>> f3_witness;

  bool valid() const { return f1 && f2; }
};

QuasimetricCheck check_quasimetric(const FiniteMvs& m,
                                   const std::vector<std::vector<ElemId>>& values);

class QuasimetricViolation : public Error {
public:
  explicit QuasimetricViolation(QuasimetricCheck check);
  const QuasimetricCheck& check() const { return check_; }

private:
  QuasimetricCheck check_;
};

/// A validated distance table f : X x X -> M satisfying the triangle and
/// diagonal conditions. Immutable.
class QuasimetricTable {
public:
  /// Empty placeholder; every real instance comes from make_quasimetric().
  QuasimetricTable() = default;

  const std::vector<std::string>& points() const { return points_; }
  std::size_t point_count() const { return points_.size(); }
  std::optional<std::size_t> point_id(std::string_view name) const;

  const FiniteMvs& mvs() const { return mvs_; }
  ElemId value(std::size_t x, std::size_t y) const { return values_[x][y]; }
  const std::vector<std::vector<ElemId>>& values() const { return values_; }

  bool symmetric() const { return symmetric_; }

  bool operator==(const QuasimetricTable& other) const {
    return points_ == other.points_ && mvs_ == other.mvs_ && values_ == other.values_;
  }

private:
  friend QuasimetricTable make_quasimetric(std::vector<std::string>, FiniteMvs,
                                           std::vector<std::vector<ElemId>>);

  std::vector<std::string> points_;
  FiniteMvs mvs_;
  std::vector<std::vector<ElemId>> values_;
  bool symmetric_ = false;
};

/// Validates the table; throws QuasimetricViolation with the full report
/// when the triangle or diagonal condition fails.
QuasimetricTable make_quasimetric(std::vector<std::string> points, FiniteMvs m,
                                  std::vector<std::vector<ElemId>> values);

/// Points strictly within radius of x: { y : f(x,y) strictly divides radius }.
/// The radius must be nonzero, else NeutralRadius.
PointSet open_ball(const QuasimetricTable& q, std::size_t x, ElemId radius);

/// A set is open when every member has an open ball inside the set. Balls
/// at a fixed centre are directed, so this family is a topology.
FiniteTopology induced_topology(const QuasimetricTable& q);

/// The table f(m, n) = 0 if n divides m, else n, on the carrier of m
/// itself. Requires a commutative value set.
QuasimetricTable canonical_quasimetric(const FiniteMvs& m);

/// Every open set induced by coarser is induced by finer. Point names
/// must coincide, else PointSetMismatch.
bool is_finer(const QuasimetricTable& finer, const QuasimetricTable& coarser);

/// The two tables induce the same topology.
bool are_equivalent(const QuasimetricTable& a, const QuasimetricTable& b);

/// Applies h to each entry; requires the table's value set to equal the
/// domain of h. Preserves validity and symmetry.
QuasimetricTable transform(const MvsMap& h, const QuasimetricTable& q);

/// quotient_metrize() output: the transformed table plus the projection
/// used, whose codomain is the partially ordered quotient.
struct QuotientMetrize {
  QuasimetricTable table;
  MvsMap projection;
};

/// Pushes the table onto the quotient by the mutual-order congruence; the
/// induced topology is unchanged (asserted). Requires commutativity.
QuotientMetrize quotient_metrize(const QuasimetricTable& q);

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 24;

struct SearchOptions {
  std::uint64_t budget = kDefaultSearchBudget;
  bool symmetric_only = false;
};

/// Backtracking search for a table over m inducing exactly t. Off-diagonal
/// cells are filled in row-major order with values tried ascending, with
/// the triangle condition forward-checked, so the first hit is the
/// lexicographically smallest table. Throws BudgetExceeded when the
/// worst-case node count card(M)^(cells) exceeds the budget.
std::optional<QuasimetricTable> search_metrizable(const FiniteTopology& t, const FiniteMvs& m,
                                                  std::vector<std::string> point_names = {},
                                                  const SearchOptions& options = {});

} // namespace mvs

#endif // MVS_QUASIMETRIC_HPP
