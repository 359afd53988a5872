// algebra.hpp -- finite metric value sets: axiom checks, induced order,
// congruences and quotients, sub-structures, adjoined absorbing element

#ifndef MVS_ALGEBRA_HPP
#define MVS_ALGEBRA_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvs/error.hpp"
#include "mvs/relation.hpp"

namespace mvs {

/// Default cap on carrier size. The checks below are O(n^3)-O(n^4), which
/// stays comfortable up to this bound.
inline constexpr std::size_t kDefaultMaxCarrier = 64;

/// An unchecked operation table: table[i][j] is the index of i + j.
struct RawTable {
  std::vector<std::string> names;
  std::vector<std::vector<ElemId>> table;

  std::size_t card() const { return names.size(); }

  bool operator==(const RawTable&) const = default;
};

/// Throws SemanticError unless the table is square and total with distinct
/// nonempty names.
void require_well_formed(const RawTable& raw);

/// Outcome of checking the value-set axioms on a raw table.
///
/// A witness is present exactly when the corresponding flag is false. The
/// associativity witness is the first triple (a, b, c) in lexicographic
/// order with (a+b)+c != a+(b+c); the neutrality witness lists, for every
/// candidate e, the smallest m broken by it. Decomposition and divisor
/// checks are relative to the neutral element, so when none exists they are
/// reported as vacuously true and the report still fails overall.
struct AxiomReport {
  bool card_ok = false;
  bool m1_holds = false;
  bool m2_holds = false;
  bool m3_holds = false;
  bool m4_holds = false;

  std::optional<ElemId> neutral;

  std::optional<std::array<ElemId, 3>> m1_witness;
  std::vector<std::array<ElemId, 2>> m2_witness;
  std::optional<std::array<ElemId, 2>> m3_witness; // a + b = e, (a, b) != (e, e)
  std::optional<std::array<ElemId, 2>> m4_witness; // pair with no common left divisor

  bool all_hold() const { return card_ok && m1_holds && m2_holds && m3_holds && m4_holds; }
};

AxiomReport check_axioms(const RawTable& raw);

/// Raised by validate() when a table fails the axioms; keeps the report.
class AxiomViolation : public Error {
public:
  explicit AxiomViolation(AxiomReport report);
  const AxiomReport& report() const { return report_; }

private:
  AxiomReport report_;
};

/// A validated finite metric value set.
///
/// The neutral element is relabelled to index 0, the induced relations
/// ("divides" and "strictly divides") and the commutativity flag are
/// precomputed. Instances are immutable; all operations on them are pure.
class FiniteMvs {
public:
  /// Empty placeholder so that holders are default-constructible; every
  /// real instance comes from validate().
  FiniteMvs() = default;

  std::size_t card() const { return names_.size(); }
  ElemId neutral() const { return 0; }

  const std::string& name(ElemId m) const { return names_[m]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<ElemId> id_of(std::string_view name) const;

  ElemId add(ElemId a, ElemId b) const { return table_[a][b]; }
  const std::vector<std::vector<ElemId>>& table() const { return table_; }

  /// m + k = n for some k.
  bool leq(ElemId m, ElemId n) const { return leq_.at(m, n); }
  /// m + k = n for some k != neutral.
  bool lt(ElemId m, ElemId n) const { return lt_.at(m, n); }

  const ElemRelation& leq_relation() const { return leq_; }
  const ElemRelation& lt_relation() const { return lt_; }

  bool commutative() const { return commutative_; }

  RawTable raw() const { return {names_, table_}; }

  bool operator==(const FiniteMvs& other) const {
    return names_ == other.names_ && table_ == other.table_;
  }

private:
  friend FiniteMvs validate(const RawTable&, std::size_t);

  std::vector<std::string> names_;
  std::vector<std::vector<ElemId>> table_;
  ElemRelation leq_;
  ElemRelation lt_;
  bool commutative_ = false;
};

/// Checks the axioms and constructs the validated value set, relabelling
/// the neutral element to index 0. Throws AxiomViolation with the full
/// report on failure and CarrierTooLarge above the cap.
FiniteMvs validate(const RawTable& raw, std::size_t max_card = kDefaultMaxCarrier);

enum class OrderKind { NotAntisymmetric, PartiallyOrdered, TotallyOrdered };

/// Classification of the induced divides-order. The witness is the
/// smallest mutually comparable pair (not antisymmetric) or the smallest
/// incomparable pair (partial but not total).
struct OrderClassification {
  OrderKind kind;
  std::optional<std::array<ElemId, 2>> witness;
};

OrderClassification order_class(const FiniteMvs& m);

/// Outcome of testing a relation for being a congruence. The witness is
/// the smallest offending tuple: 1 element (not reflexive), 2 (not
/// symmetric), 3 (not transitive) or the 4-tuple (m, m', n, n') with
/// m R m', n R n' but not (m+n) R (m'+n').
struct CongruenceCheck {
  enum class Failure { None, NotReflexive, NotSymmetric, NotTransitive, Incompatible };

  Failure failure = Failure::None;
  std::vector<ElemId> witness;

  bool ok() const { return failure == Failure::None; }
};

CongruenceCheck is_congruence(const FiniteMvs& m, const ElemRelation& r);

class NotACongruence : public Error {
public:
  explicit NotACongruence(CongruenceCheck check);
  const CongruenceCheck& check() const { return check_; }

private:
  CongruenceCheck check_;
};

/// A quotient value set together with the class map of the projection.
struct Quotient {
  FiniteMvs mvs;
  std::vector<ElemId> class_of; // element -> quotient element
};

/// Forms M/R with [m] + [n] = [m + n]. Classes are numbered by smallest
/// member and named after it. Throws NotACongruence or
/// NeutralClassNotTrivial.
Quotient quotient(const FiniteMvs& m, const ElemRelation& r);

/// The relation m R n iff m and n divide each other. Requires a
/// commutative value set; the result is then a congruence whose neutral
/// class is trivial and whose quotient is partially ordered.
ElemRelation mutual_order_congruence(const FiniteMvs& m);

/// Outcome of testing a subset for being a sub-value-set: it must contain
/// the neutral element, have at least two elements, be closed under +, and
/// satisfy the common-divisor axiom within the subset.
struct SubMvsCheck {
  enum class Failure { None, MissingNeutral, TooSmall, NotClosed, M4Fails };

  Failure failure = Failure::None;
  std::vector<ElemId> witness; // NotClosed: (a, b); M4Fails: (m1, m2)

  bool ok() const { return failure == Failure::None; }
};

SubMvsCheck is_sub_mvs(const FiniteMvs& m, std::vector<ElemId> subset);

/// A restricted value set together with the embedding into its parent.
struct SubMvs {
  FiniteMvs mvs;
  std::vector<ElemId> embed; // sub element -> parent element, ascending
};

/// Restricts m to the given subset. Throws SemanticError when
/// is_sub_mvs fails.
SubMvs sub_mvs(const FiniteMvs& m, std::vector<ElemId> subset);

/// A value set extended by a single absorbing element.
struct Extension {
  FiniteMvs mvs;
  std::vector<ElemId> inclusion; // original element -> extended element
  ElemId infinity;
};

/// Adjoins one absorbing element ("inf") to m: inf + x = x + inf = inf.
/// Every nonzero element then divides inf, and the original carrier is a
/// sub-value-set of the result.
Extension adjoin_infinity(const FiniteMvs& m);

} // namespace mvs

#endif // MVS_ALGEBRA_HPP
