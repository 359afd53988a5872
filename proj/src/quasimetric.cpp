// quasimetric.cpp

#include "mvs/quasimetric.hpp"

#include <cassert>
#include <stdexcept>

namespace mvs {

namespace {

std::string quasimetric_summary(const QuasimetricCheck& chk) {
  std::string out = "not a quasimetric:";
  if (!chk.f1) {
    out += " triangle condition fails;";
  }
  if (!chk.f2) {
    out += " diagonal is not zero;";
  }
  if (out.back() == ';') {
    out.pop_back();
  }
  return out;
}

void require_square(const FiniteMvs& m, const std::vector<std::vector<ElemId>>& values) {
  const std::size_t n = values.size();
  for (const auto& row : values) {
    if (row.size() != n) {
      throw SemanticError("distance table not square");
    }
    for (ElemId v : row) {
      if (v >= m.card()) {
        throw SemanticError("distance value out of range");
      }
    }
  }
}

} // namespace

QuasimetricCheck check_quasimetric(const FiniteMvs& m,
                                   const std::vector<std::vector<ElemId>>& values) {
  require_square(m, values);
  const std::size_t n = values.size();

  QuasimetricCheck chk;
  chk.f1 = true;
  for (std::size_t x = 0; x < n && chk.f1; ++x) {
    for (std::size_t y = 0; y < n && chk.f1; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (!m.leq(values[x][z], m.add(values[x][y], values[y][z]))) {
          chk.f1 = false;
          chk.f1_witness = {x, y, z};
          break;
        }
      }
    }
  }

  chk.f2 = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (values[x][x] != 0) {
      chk.f2 = false;
      chk.f2_witness = x;
      break;
    }
  }

  chk.f3 = true;
  for (std::size_t x = 0; x < n && chk.f3; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (values[x][y] != values[y][x]) {
        chk.f3 = false;
        chk.f3_witness = {x, y};
        break;
      }
    }
  }

  return chk;
}

QuasimetricViolation::QuasimetricViolation(QuasimetricCheck check)
    : Error(quasimetric_summary(check)), check_(std::move(check)) {}

std::optional<std::size_t> QuasimetricTable::point_id(std::string_view name) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] == name) {
      return i;
    }
  }
  return std::nullopt;
}

QuasimetricTable make_quasimetric(std::vector<std::string> points, FiniteMvs m,
                                  std::vector<std::vector<ElemId>> values) {
  if (points.size() > kMaxPoints) {
    throw SemanticError("more than " + std::to_string(kMaxPoints) + " points");
  }
  if (values.size() != points.size()) {
    throw SemanticError("distance table not square");
  }
  QuasimetricCheck chk = check_quasimetric(m, values);
  if (!chk.valid()) {
    throw QuasimetricViolation(std::move(chk));
  }

  QuasimetricTable q;
  q.points_ = std::move(points);
  q.mvs_ = std::move(m);
  q.values_ = std::move(values);
  q.symmetric_ = chk.f3;
  return q;
}

PointSet open_ball(const QuasimetricTable& q, std::size_t x, ElemId radius) {
  if (radius == 0) {
    throw NeutralRadius("open ball requires a nonzero radius");
  }
  PointSet ball = 0;
  for (std::size_t y = 0; y < q.point_count(); ++y) {
    if (q.mvs().lt(q.value(x, y), radius)) {
      ball |= PointSet{1} << y;
    }
  }
  return ball;
}

FiniteTopology induced_topology(const QuasimetricTable& q) {
  const std::size_t n = q.point_count();
  const FiniteMvs& m = q.mvs();

  // balls[x] lists open_ball(q, x, r) for every nonzero radius r.
  std::vector<std::vector<PointSet>> balls(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (ElemId r = 1; r < m.card(); ++r) {
      balls[x].push_back(open_ball(q, x, r));
    }
  }

  const PointSet full = static_cast<PointSet>((std::uint64_t{1} << n) - 1);
  std::vector<PointSet> opens;
  for (PointSet u = 0;; ++u) {
    bool open = true;
    for (std::size_t x = 0; x < n && open; ++x) {
      if (!(u & (PointSet{1} << x))) {
        continue;
      }
      bool inner = false;
      for (PointSet b : balls[x]) {
        if ((b & ~u) == 0) {
          inner = true;
          break;
        }
      }
      open = inner;
    }
    if (open) {
      opens.push_back(u);
    }
    if (u == full) {
      break;
    }
  }
  return FiniteTopology(n, std::move(opens));
}

QuasimetricTable canonical_quasimetric(const FiniteMvs& m) {
  if (!m.commutative()) {
    throw NotCommutative("canonical quasimetric requires a commutative value set");
  }
  const std::size_t n = m.card();
  std::vector<std::vector<ElemId>> values(n, std::vector<ElemId>(n, 0));
  for (ElemId x = 0; x < n; ++x) {
    for (ElemId y = 0; y < n; ++y) {
      values[x][y] = m.leq(y, x) ? 0 : y;
    }
  }
  return make_quasimetric(m.names(), m, std::move(values));
}

bool is_finer(const QuasimetricTable& finer, const QuasimetricTable& coarser) {
  if (finer.points() != coarser.points()) {
    throw PointSetMismatch("tables live on different point sets");
  }
  return induced_topology(coarser).subfamily_of(induced_topology(finer));
}

bool are_equivalent(const QuasimetricTable& a, const QuasimetricTable& b) {
  if (a.points() != b.points()) {
    throw PointSetMismatch("tables live on different point sets");
  }
  return induced_topology(a) == induced_topology(b);
}

QuasimetricTable transform(const MvsMap& h, const QuasimetricTable& q) {
  if (!(q.mvs() == h.domain())) {
    throw DomainMismatch("table values live outside the domain of the map");
  }
  std::vector<std::vector<ElemId>> values = q.values();
  for (auto& row : values) {
    for (ElemId& v : row) {
      v = h.apply(v);
    }
  }
  return make_quasimetric(q.points(), h.codomain(), std::move(values));
}

QuotientMetrize quotient_metrize(const QuasimetricTable& q) {
  MvsMap projection = canonical_projection(q.mvs(), mutual_order_congruence(q.mvs()));
  QuasimetricTable out = transform(projection, q);
  if (!are_equivalent(q, out)) {
    throw std::logic_error("quotient table changed the induced topology");
  }
  return {std::move(out), std::move(projection)};
}

namespace {

struct MetrizeSearch {
  const FiniteTopology& target;
  const FiniteMvs& m;
  std::size_t n;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  bool symmetric;
  std::vector<std::vector<ElemId>> values;
  std::vector<std::vector<char>> assigned;

  bool triangle_ok() const {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!assigned[x][y]) {
          continue;
        }
        for (std::size_t z = 0; z < n; ++z) {
          if (assigned[x][z] && assigned[y][z] &&
              !m.leq(values[x][z], m.add(values[x][y], values[y][z]))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool dfs(std::size_t cell, std::optional<std::vector<std::vector<ElemId>>>& found) {
    if (cell == cells.size()) {
      assert(check_quasimetric(m, values).valid());
      QuasimetricTable q = make_quasimetric(std::vector<std::string>(n, ""), m, values);
      // Point names are irrelevant for the induced family of masks.
      if (induced_topology(q) == target) {
        found = values;
        return true;
      }
      return false;
    }
    const auto [x, y] = cells[cell];
    for (ElemId v = 0; v < m.card(); ++v) {
      values[x][y] = v;
      assigned[x][y] = 1;
      if (symmetric) {
        values[y][x] = v;
        assigned[y][x] = 1;
      }
      if (triangle_ok() && dfs(cell + 1, found)) {
        return true;
      }
      assigned[x][y] = 0;
      if (symmetric) {
        assigned[y][x] = 0;
      }
    }
    values[x][y] = 0;
    if (symmetric) {
      values[y][x] = 0;
    }
    return false;
  }
};

} // namespace

std::optional<QuasimetricTable> search_metrizable(const FiniteTopology& t, const FiniteMvs& m,
                                                  std::vector<std::string> point_names,
                                                  const SearchOptions& options) {
  const std::size_t n = t.point_count();
  if (point_names.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      point_names.push_back("p" + std::to_string(i));
    }
  }
  if (point_names.size() != n) {
    throw PointSetMismatch("point name count does not match the topology");
  }

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = options.symmetric_only ? x + 1 : 0; y < n; ++y) {
      if (x != y) {
        cells.emplace_back(x, y);
      }
    }
  }

  // Worst-case node count card(M)^cells must fit the budget.
  std::uint64_t worst = 1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (worst > options.budget / std::max<std::uint64_t>(m.card(), 1)) {
      throw BudgetExceeded("search worst case exceeds budget of " +
                           std::to_string(options.budget) + " nodes");
    }
    worst *= m.card();
  }
  if (worst > options.budget) {
    throw BudgetExceeded("search worst case exceeds budget of " +
                         std::to_string(options.budget) + " nodes");
  }

  MetrizeSearch search{t,
                       m,
                       n,
                       std::move(cells),
                       options.symmetric_only,
                       std::vector<std::vector<ElemId>>(n, std::vector<ElemId>(n, 0)),
                       std::vector<std::vector<char>>(n, std::vector<char>(n, 0))};
  for (std::size_t x = 0; x < n; ++x) {
    search.assigned[x][x] = 1; // diagonal fixed at zero
  }

  std::optional<std::vector<std::vector<ElemId>>> found;
  search.dfs(0, found);
  if (!found) {
    return std::nullopt;
  }
  return make_quasimetric(std::move(point_names), m, std::move(*found));
}

} // namespace mvs
