// hom.hpp -- structure-preserving maps between finite metric value sets

#ifndef MVS_HOM_HPP
#define MVS_HOM_HPP

#include <optional>
#include <vector>

#include "mvs/algebra.hpp"

namespace mvs {

/// Raised when a map sends a nonzero element to zero or vice versa.
class H1Violation : public Error {
public:
  H1Violation(ElemId witness, const std::string& message) : Error(message), witness_(witness) {}
  ElemId witness() const { return witness_; }

private:
  ElemId witness_;
};

/// Raised when a map fails to commute with +; carries the smallest pair.
class H2Violation : public Error {
public:
  H2Violation(ElemId a, ElemId b, const std::string& message)
      : Error(message), witness_{a, b} {}
  const std::array<ElemId, 2>& witness() const { return witness_; }

private:
  std::array<ElemId, 2> witness_;
};

/// A validated homomorphism between two finite value sets. Maps zero to
/// zero and nothing else to zero, and commutes with +. Holds copies of
/// both carriers; immutable.
class MvsMap {
public:
  /// Empty placeholder; every real instance comes from make_hom().
  MvsMap() = default;

  const FiniteMvs& domain() const { return domain_; }
  const FiniteMvs& codomain() const { return codomain_; }

  ElemId apply(ElemId m) const { return mapping_[m]; }
  const std::vector<ElemId>& mapping() const { return mapping_; }

  bool bijective() const;

  bool operator==(const MvsMap& other) const {
    return domain_ == other.domain_ && codomain_ == other.codomain_ &&
           mapping_ == other.mapping_;
  }

private:
  friend MvsMap make_hom(FiniteMvs, FiniteMvs, std::vector<ElemId>);

  FiniteMvs domain_;
  FiniteMvs codomain_;
  std::vector<ElemId> mapping_;
};

/// Validates the defining conditions eagerly; throws H1Violation or
/// H2Violation with the smallest witness.
MvsMap make_hom(FiniteMvs domain, FiniteMvs codomain, std::vector<ElemId> mapping);

MvsMap identity_hom(const FiniteMvs& m);

/// g after h; requires codomain(h) == domain(g), else DomainMismatch.
MvsMap compose(const MvsMap& g, const MvsMap& h);

/// Sorted image of the mapping; always a sub-value-set of the codomain.
std::vector<ElemId> image(const MvsMap& h);

/// The relation m R n iff h(m) = h(n); always a congruence whose neutral
/// class is trivial.
ElemRelation kernel(const MvsMap& h);

/// A map is fine when every nonzero codomain element has a nonzero
/// domain element whose image divides it. The witness is the smallest
/// unservable codomain element.
struct FineCheck {
  bool fine = false;
  std::optional<ElemId> witness;
};

FineCheck is_fine(const MvsMap& h);

/// Backtracking search for an isomorphism, pruned by matching
/// divides-degree profiles. Returns the lexicographically first mapping
/// (as the vector of images of 1, 2, ...) or nullopt.
std::optional<MvsMap> find_isomorphism(const FiniteMvs& m, const FiniteMvs& n);

/// Inverse of a bijective map; throws NotBijective otherwise.
MvsMap invert(const MvsMap& h);

/// Factorisation of h through its kernel: the quotient of the domain, the
/// image as a value set, and the connecting isomorphism.
struct FirstIsomorphism {
  Quotient source;  // domain / kernel(h)
  SubMvs target;    // image(h) within the codomain
  MvsMap iso;       // source.mvs -> target.mvs, always bijective
};

FirstIsomorphism first_isomorphism(const MvsMap& h);

/// The projection m -> [m] onto the quotient by r. Throws NotACongruence
/// or NeutralClassNotTrivial.
MvsMap canonical_projection(const FiniteMvs& m, const ElemRelation& r);

} // namespace mvs

#endif // MVS_HOM_HPP
