// hom.cpp

#include "mvs/hom.hpp"

#include <algorithm>
#include <cassert>

namespace mvs {

bool MvsMap::bijective() const {
  if (domain_.card() != codomain_.card()) {
    return false;
  }
  std::vector<char> hit(codomain_.card(), 0);
  for (ElemId t : mapping_) {
    if (hit[t]) {
      return false;
    }
    hit[t] = 1;
  }
  return true;
}

MvsMap make_hom(FiniteMvs domain, FiniteMvs codomain, std::vector<ElemId> mapping) {
  const std::size_t n = domain.card();
  if (mapping.size() != n) {
    throw DomainMismatch("mapping size does not match domain size");
  }
  for (ElemId t : mapping) {
    if (t >= codomain.card()) {
      throw DomainMismatch("mapping value out of codomain range");
    }
  }
  for (ElemId m = 0; m < n; ++m) {
    const bool to_zero = mapping[m] == 0;
    if (to_zero != (m == 0)) {
      throw H1Violation(m, "maps " + domain.name(m) + " to " + codomain.name(mapping[m]) +
                               "; zero must map to zero and nothing else may");
    }
  }
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = 0; b < n; ++b) {
      if (mapping[domain.add(a, b)] != codomain.add(mapping[a], mapping[b])) {
        throw H2Violation(a, b,
                          "does not commute with + at (" + domain.name(a) + ", " +
                              domain.name(b) + ")");
      }
    }
  }

  MvsMap h;
  h.domain_ = std::move(domain);
  h.codomain_ = std::move(codomain);
  h.mapping_ = std::move(mapping);
  return h;
}

MvsMap identity_hom(const FiniteMvs& m) {
  std::vector<ElemId> mapping(m.card());
  for (ElemId i = 0; i < m.card(); ++i) {
    mapping[i] = i;
  }
  return make_hom(m, m, std::move(mapping));
}

MvsMap compose(const MvsMap& g, const MvsMap& h) {
  if (!(h.codomain() == g.domain())) {
    throw DomainMismatch("codomain of the inner map differs from domain of the outer map");
  }
  std::vector<ElemId> mapping(h.domain().card());
  for (ElemId m = 0; m < mapping.size(); ++m) {
    mapping[m] = g.apply(h.apply(m));
  }
  return make_hom(h.domain(), g.codomain(), std::move(mapping));
}

std::vector<ElemId> image(const MvsMap& h) {
  std::vector<ElemId> img = h.mapping();
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

ElemRelation kernel(const MvsMap& h) {
  const std::size_t n = h.domain().card();
  ElemRelation r(n);
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = 0; b < n; ++b) {
      if (h.apply(a) == h.apply(b)) {
        r.set(a, b);
      }
    }
  }
  return r;
}

FineCheck is_fine(const MvsMap& h) {
  const FiniteMvs& cod = h.codomain();
  for (ElemId m2 = 1; m2 < cod.card(); ++m2) {
    bool served = false;
    for (ElemId m1 = 1; m1 < h.domain().card(); ++m1) {
      if (cod.leq(h.apply(m1), m2)) {
        served = true;
        break;
      }
    }
    if (!served) {
      return {false, m2};
    }
  }
  return {true, std::nullopt};
}

namespace {

// Degree profile of an element in the divides digraphs; preserved by any
// isomorphism in both directions.
struct DegreeProfile {
  std::size_t leq_out = 0;
  std::size_t leq_in = 0;
  std::size_t lt_out = 0;
  std::size_t lt_in = 0;
  bool lt_self = false;

  auto operator<=>(const DegreeProfile&) const = default;
};

std::vector<DegreeProfile> profiles(const FiniteMvs& m) {
  const std::size_t n = m.card();
  std::vector<DegreeProfile> out(n);
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = 0; b < n; ++b) {
      if (m.leq(a, b)) {
        ++out[a].leq_out;
        ++out[b].leq_in;
      }
      if (m.lt(a, b)) {
        ++out[a].lt_out;
        ++out[b].lt_in;
      }
    }
    out[a].lt_self = m.lt(a, a);
  }
  return out;
}

struct IsoSearch {
  const FiniteMvs& m;
  const FiniteMvs& n;
  const std::vector<DegreeProfile>& pm;
  const std::vector<DegreeProfile>& pn;
  std::vector<ElemId> mapping;
  std::vector<char> used;

  bool consistent(ElemId upto) const {
    for (ElemId a = 0; a <= upto; ++a) {
      for (ElemId b = 0; b <= upto; ++b) {
        const ElemId c = m.add(a, b);
        if (c <= upto && n.add(mapping[a], mapping[b]) != mapping[c]) {
          return false;
        }
        if (m.leq(a, b) != n.leq(mapping[a], mapping[b]) ||
            m.lt(a, b) != n.lt(mapping[a], mapping[b])) {
          return false;
        }
      }
    }
    return true;
  }

  bool dfs(ElemId next) {
    if (next == m.card()) {
      return true;
    }
    for (ElemId t = 1; t < n.card(); ++t) {
      if (used[t] || pm[next] != pn[t]) {
        continue;
      }
      mapping[next] = t;
      used[t] = 1;
      if (consistent(next) && dfs(next + 1)) {
        return true;
      }
      used[t] = 0;
    }
    return false;
  }
};

} // namespace

std::optional<MvsMap> find_isomorphism(const FiniteMvs& m, const FiniteMvs& n) {
  if (m.card() != n.card() || m.commutative() != n.commutative()) {
    return std::nullopt;
  }
  const auto pm = profiles(m);
  const auto pn = profiles(n);
  auto sm = pm;
  auto sn = pn;
  std::sort(sm.begin(), sm.end());
  std::sort(sn.begin(), sn.end());
  if (sm != sn) {
    return std::nullopt;
  }

  IsoSearch search{m, n, pm, pn, std::vector<ElemId>(m.card(), 0),
                   std::vector<char>(n.card(), 0)};
  search.used[0] = 1;
  if (!search.dfs(1)) {
    return std::nullopt;
  }
  return make_hom(m, n, std::move(search.mapping));
}

MvsMap invert(const MvsMap& h) {
  if (!h.bijective()) {
    throw NotBijective("map has no inverse");
  }
  std::vector<ElemId> inv(h.codomain().card(), 0);
  for (ElemId m = 0; m < h.domain().card(); ++m) {
    inv[h.apply(m)] = m;
  }
  return make_hom(h.codomain(), h.domain(), std::move(inv));
}

FirstIsomorphism first_isomorphism(const MvsMap& h) {
  Quotient source = quotient(h.domain(), kernel(h));
  SubMvs target = sub_mvs(h.codomain(), image(h));

  std::vector<ElemId> pos(h.codomain().card(), 0);
  for (std::size_t i = 0; i < target.embed.size(); ++i) {
    pos[target.embed[i]] = i;
  }
  std::vector<ElemId> mapping(source.mvs.card(), 0);
  for (ElemId m = 0; m < h.domain().card(); ++m) {
    mapping[source.class_of[m]] = pos[h.apply(m)];
  }
  MvsMap iso = make_hom(source.mvs, target.mvs, std::move(mapping));
  assert(iso.bijective());
  return FirstIsomorphism{std::move(source), std::move(target), std::move(iso)};
}

MvsMap canonical_projection(const FiniteMvs& m, const ElemRelation& r) {
  Quotient q = quotient(m, r);
  return make_hom(m, q.mvs, q.class_of);
}

} // namespace mvs
