// algebra.cpp

#include "mvs/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace mvs {

namespace {

std::string axiom_summary(const AxiomReport& rep) {
  std::ostringstream out;
  out << "not a metric value set:";
  if (!rep.card_ok) {
    out << " carrier has fewer than two elements;";
  }
  if (!rep.m1_holds) {
    out << " associativity fails;";
  }
  if (!rep.m2_holds) {
    out << " no neutral element;";
  }
  if (!rep.m3_holds) {
    out << " neutral element decomposes;";
  }
  if (!rep.m4_holds) {
    out << " common left divisor missing;";
  }
  std::string text = out.str();
  if (text.back() == ';') {
    text.pop_back();
  }
  return text;
}

std::string congruence_summary(const CongruenceCheck& chk) {
  switch (chk.failure) {
    case CongruenceCheck::Failure::NotReflexive:
      return "relation is not reflexive";
    case CongruenceCheck::Failure::NotSymmetric:
      return "relation is not symmetric";
    case CongruenceCheck::Failure::NotTransitive:
      return "relation is not transitive";
    case CongruenceCheck::Failure::Incompatible:
      return "relation is not compatible with +";
    case CongruenceCheck::Failure::None:
      break;
  }
  return "relation is a congruence";
}

// divides[x][y]: x + k = y for some k (k may be the neutral candidate or not;
// callers restrict as needed).
std::vector<std::vector<char>> divides_matrix(const RawTable& raw) {
  const std::size_t n = raw.card();
  std::vector<std::vector<char>> d(n, std::vector<char>(n, 0));
  for (ElemId x = 0; x < n; ++x) {
    for (ElemId k = 0; k < n; ++k) {
      d[x][raw.table[x][k]] = 1;
    }
  }
  return d;
}

} // namespace

void require_well_formed(const RawTable& raw) {
  const std::size_t n = raw.card();
  if (raw.table.size() != n) {
    throw SemanticError("table not square");
  }
  std::set<std::string> seen;
  for (const auto& name : raw.names) {
    if (name.empty()) {
      throw SemanticError("empty element name");
    }
    if (!seen.insert(name).second) {
      throw SemanticError("duplicate element name: " + name);
    }
  }
  for (const auto& row : raw.table) {
    if (row.size() != n) {
      throw SemanticError("table not square");
    }
    for (ElemId entry : row) {
      if (entry >= n) {
        throw SemanticError("table entry out of range");
      }
    }
  }
}

AxiomReport check_axioms(const RawTable& raw) {
  require_well_formed(raw);
  const std::size_t n = raw.card();
  const auto& t = raw.table;

  AxiomReport rep;
  rep.card_ok = n >= 2;

  rep.m1_holds = true;
  for (ElemId a = 0; a < n && rep.m1_holds; ++a) {
    for (ElemId b = 0; b < n && rep.m1_holds; ++b) {
      for (ElemId c = 0; c < n; ++c) {
        if (t[t[a][b]][c] != t[a][t[b][c]]) {
          rep.m1_holds = false;
          rep.m1_witness = {a, b, c};
          break;
        }
      }
    }
  }

  // A two-sided neutral element is unique when it exists.
  for (ElemId e = 0; e < n && !rep.neutral; ++e) {
    bool ok = true;
    for (ElemId m = 0; m < n; ++m) {
      if (t[e][m] != m || t[m][e] != m) {
        ok = false;
        break;
      }
    }
    if (ok) {
      rep.neutral = e;
    }
  }
  rep.m2_holds = rep.neutral.has_value();
  if (!rep.m2_holds) {
    for (ElemId c = 0; c < n; ++c) {
      for (ElemId m = 0; m < n; ++m) {
        if (t[c][m] != m || t[m][c] != m) {
          rep.m2_witness.push_back({c, m});
          break;
        }
      }
    }
  }

  // The remaining axioms are stated relative to the neutral element.
  rep.m3_holds = true;
  rep.m4_holds = true;
  if (rep.neutral) {
    const ElemId e = *rep.neutral;

    for (ElemId a = 0; a < n && rep.m3_holds; ++a) {
      for (ElemId b = 0; b < n; ++b) {
        if (t[a][b] == e && !(a == e && b == e)) {
          rep.m3_holds = false;
          rep.m3_witness = {a, b};
          break;
        }
      }
    }

    const auto div = divides_matrix(raw);
    for (ElemId m1 = 0; m1 < n && rep.m4_holds; ++m1) {
      if (m1 == e) {
        continue;
      }
      for (ElemId m2 = 0; m2 < n; ++m2) {
        if (m2 == e) {
          continue;
        }
        bool found = false;
        for (ElemId m3 = 0; m3 < n; ++m3) {
          if (m3 != e && div[m3][m1] && div[m3][m2]) {
            found = true;
            break;
          }
        }
        if (!found) {
          rep.m4_holds = false;
          rep.m4_witness = {m1, m2};
          break;
        }
      }
    }
  }

  return rep;
}

AxiomViolation::AxiomViolation(AxiomReport report)
    : Error(axiom_summary(report)), report_(std::move(report)) {}

std::optional<ElemId> FiniteMvs::id_of(std::string_view name) const {
  for (ElemId i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      return i;
    }
  }
  return std::nullopt;
}

FiniteMvs validate(const RawTable& raw, std::size_t max_card) {
  require_well_formed(raw);
  if (raw.card() > max_card) {
    throw CarrierTooLarge("carrier size " + std::to_string(raw.card()) + " exceeds cap " +
                          std::to_string(max_card));
  }
  AxiomReport rep = check_axioms(raw);
  if (!rep.all_hold()) {
    throw AxiomViolation(std::move(rep));
  }

  const std::size_t n = raw.card();
  const ElemId e = *rep.neutral;

  // Swap the neutral element to index 0; the swap is its own inverse.
  auto perm = [e](ElemId i) -> ElemId {
    if (i == 0) {
      return e;
    }
    if (i == e) {
      return 0;
    }
    return i;
  };

  FiniteMvs m;
  m.names_.resize(n);
  m.table_.assign(n, std::vector<ElemId>(n, 0));
  for (ElemId i = 0; i < n; ++i) {
    m.names_[i] = raw.names[perm(i)];
    for (ElemId j = 0; j < n; ++j) {
      m.table_[i][j] = perm(raw.table[perm(i)][perm(j)]);
    }
  }

  m.leq_ = ElemRelation(n);
  m.lt_ = ElemRelation(n);
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId k = 0; k < n; ++k) {
      m.leq_.set(a, m.table_[a][k]);
      if (k != 0) {
        m.lt_.set(a, m.table_[a][k]);
      }
    }
  }

  m.commutative_ = true;
  for (ElemId a = 0; a < n && m.commutative_; ++a) {
    for (ElemId b = 0; b < n; ++b) {
      if (m.table_[a][b] != m.table_[b][a]) {
        m.commutative_ = false;
        break;
      }
    }
  }

  // Consequences of the axioms; cheap enough to keep as hard checks.
  assert(!m.leq_.reflexivity_witness());
  assert(!m.leq_.transitivity_witness());
  assert(m.lt_.subrelation_of(m.leq_));

  return m;
}

OrderClassification order_class(const FiniteMvs& m) {
  const std::size_t n = m.card();
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = a + 1; b < n; ++b) {
      if (m.leq(a, b) && m.leq(b, a)) {
        return {OrderKind::NotAntisymmetric, std::array<ElemId, 2>{a, b}};
      }
    }
  }
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = a + 1; b < n; ++b) {
      if (!m.leq(a, b) && !m.leq(b, a)) {
        return {OrderKind::PartiallyOrdered, std::array<ElemId, 2>{a, b}};
      }
    }
  }
  return {OrderKind::TotallyOrdered, std::nullopt};
}

CongruenceCheck is_congruence(const FiniteMvs& m, const ElemRelation& r) {
  if (r.size() != m.card()) {
    throw DomainMismatch("relation size does not match carrier size");
  }
  CongruenceCheck chk;
  if (auto w = r.reflexivity_witness()) {
    chk.failure = CongruenceCheck::Failure::NotReflexive;
    chk.witness = {*w};
    return chk;
  }
  if (auto w = r.symmetry_witness()) {
    chk.failure = CongruenceCheck::Failure::NotSymmetric;
    chk.witness = {(*w)[0], (*w)[1]};
    return chk;
  }
  if (auto w = r.transitivity_witness()) {
    chk.failure = CongruenceCheck::Failure::NotTransitive;
    chk.witness = {(*w)[0], (*w)[1], (*w)[2]};
    return chk;
  }
  const std::size_t n = m.card();
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId a2 = 0; a2 < n; ++a2) {
      if (!r.at(a, a2)) {
        continue;
      }
      for (ElemId b = 0; b < n; ++b) {
        for (ElemId b2 = 0; b2 < n; ++b2) {
          if (r.at(b, b2) && !r.at(m.add(a, b), m.add(a2, b2))) {
            chk.failure = CongruenceCheck::Failure::Incompatible;
            chk.witness = {a, a2, b, b2};
            return chk;
          }
        }
      }
    }
  }
  return chk;
}

NotACongruence::NotACongruence(CongruenceCheck check)
    : Error(congruence_summary(check)), check_(std::move(check)) {}

Quotient quotient(const FiniteMvs& m, const ElemRelation& r) {
  CongruenceCheck chk = is_congruence(m, r);
  if (!chk.ok()) {
    throw NotACongruence(std::move(chk));
  }
  const auto cls = r.classes();
  const auto idx = r.class_index();
  if (cls[idx[0]].size() != 1) {
    throw NeutralClassNotTrivial("class of " + m.name(0) + " has " +
                                 std::to_string(cls[idx[0]].size()) + " elements");
  }

  RawTable qt;
  qt.names.reserve(cls.size());
  std::vector<ElemId> reps;
  reps.reserve(cls.size());
  for (const auto& c : cls) {
    reps.push_back(c.front());
    qt.names.push_back(m.name(c.front()));
  }
  qt.table.assign(cls.size(), std::vector<ElemId>(cls.size(), 0));
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (std::size_t j = 0; j < cls.size(); ++j) {
      qt.table[i][j] = idx[m.add(reps[i], reps[j])];
    }
  }

  Quotient q{validate(qt), idx};
  // Classes are numbered by smallest member, so the neutral class is first
  // and validate() keeps the labelling.
  assert(q.class_of[0] == 0);
  return q;
}

ElemRelation mutual_order_congruence(const FiniteMvs& m) {
  if (!m.commutative()) {
    throw NotCommutative("mutual-order relation requires a commutative value set");
  }
  const std::size_t n = m.card();
  ElemRelation r(n);
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = 0; b < n; ++b) {
      if (m.leq(a, b) && m.leq(b, a)) {
        r.set(a, b);
      }
    }
  }
  return r;
}

SubMvsCheck is_sub_mvs(const FiniteMvs& m, std::vector<ElemId> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (ElemId x : subset) {
    if (x >= m.card()) {
      throw DomainMismatch("subset element out of range");
    }
  }

  SubMvsCheck chk;
  if (subset.empty() || subset.front() != 0) {
    chk.failure = SubMvsCheck::Failure::MissingNeutral;
    return chk;
  }
  if (subset.size() < 2) {
    chk.failure = SubMvsCheck::Failure::TooSmall;
    return chk;
  }

  std::vector<char> member(m.card(), 0);
  for (ElemId x : subset) {
    member[x] = 1;
  }
  for (ElemId a : subset) {
    for (ElemId b : subset) {
      if (!member[m.add(a, b)]) {
        chk.failure = SubMvsCheck::Failure::NotClosed;
        chk.witness = {a, b};
        return chk;
      }
    }
  }

  // Common-divisor axiom restricted to the subset: divisors and the
  // elements witnessing divisibility must all lie inside it.
  auto divides_in = [&](ElemId x, ElemId y) {
    for (ElemId k : subset) {
      if (m.add(x, k) == y) {
        return true;
      }
    }
    return false;
  };
  for (ElemId m1 : subset) {
    if (m1 == 0) {
      continue;
    }
    for (ElemId m2 : subset) {
      if (m2 == 0) {
        continue;
      }
      bool found = false;
      for (ElemId m3 : subset) {
        if (m3 != 0 && divides_in(m3, m1) && divides_in(m3, m2)) {
          found = true;
          break;
        }
      }
      if (!found) {
        chk.failure = SubMvsCheck::Failure::M4Fails;
        chk.witness = {m1, m2};
        return chk;
      }
    }
  }
  return chk;
}

SubMvs sub_mvs(const FiniteMvs& m, std::vector<ElemId> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  SubMvsCheck chk = is_sub_mvs(m, subset);
  if (!chk.ok()) {
    throw SemanticError("subset is not a sub-value-set");
  }

  std::vector<ElemId> pos(m.card(), 0);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    pos[subset[i]] = i;
  }
  RawTable raw;
  for (ElemId x : subset) {
    raw.names.push_back(m.name(x));
  }
  raw.table.assign(subset.size(), std::vector<ElemId>(subset.size(), 0));
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = 0; j < subset.size(); ++j) {
      raw.table[i][j] = pos[m.add(subset[i], subset[j])];
    }
  }
  return {validate(raw), std::move(subset)};
}

Extension adjoin_infinity(const FiniteMvs& m) {
  const std::size_t n = m.card();

  std::string inf_name = "inf";
  for (int k = 0; m.id_of(inf_name); ++k) {
    inf_name = "inf" + std::to_string(k);
  }

  RawTable raw;
  raw.names = m.names();
  raw.names.push_back(inf_name);
  raw.table.assign(n + 1, std::vector<ElemId>(n + 1, n));
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = 0; b < n; ++b) {
      raw.table[a][b] = m.add(a, b);
    }
  }

  Extension ext;
  ext.mvs = validate(raw, kDefaultMaxCarrier + 1);
  ext.infinity = n;
  ext.inclusion.resize(n);
  for (ElemId i = 0; i < n; ++i) {
    ext.inclusion[i] = i;
  }
  assert(is_sub_mvs(ext.mvs, ext.inclusion).ok());
  return ext;
}

} // namespace mvs
