// relation.cpp

#include "mvs/relation.hpp"

namespace mvs {

ElemRelation ElemRelation::identity(std::size_t size) {
  ElemRelation r(size);
  for (ElemId a = 0; a < size; ++a) {
    r.set(a, a);
  }
  return r;
}

ElemRelation ElemRelation::full(std::size_t size) {
  ElemRelation r(size);
  for (ElemId a = 0; a < size; ++a) {
    for (ElemId b = 0; b < size; ++b) {
      r.set(a, b);
    }
  }
  return r;
}

std::optional<ElemId> ElemRelation::reflexivity_witness() const {
  for (ElemId a = 0; a < size_; ++a) {
    if (!at(a, a)) {
      return a;
    }
  }
  return std::nullopt;
}

std::optional<std::array<ElemId, 2>> ElemRelation::symmetry_witness() const {
  for (ElemId a = 0; a < size_; ++a) {
    for (ElemId b = 0; b < size_; ++b) {
      if (at(a, b) && !at(b, a)) {
        return std::array<ElemId, 2>{a, b};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<ElemId, 3>> ElemRelation::transitivity_witness() const {
  for (ElemId a = 0; a < size_; ++a) {
    for (ElemId b = 0; b < size_; ++b) {
      if (!at(a, b)) {
        continue;
      }
      for (ElemId c = 0; c < size_; ++c) {
        if (at(b, c) && !at(a, c)) {
          return std::array<ElemId, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

bool ElemRelation::subrelation_of(const ElemRelation& other) const {
  if (size_ != other.size_) {
    return false;
  }
  for (ElemId a = 0; a < size_; ++a) {
    for (ElemId b = 0; b < size_; ++b) {
      if (at(a, b) && !other.at(a, b)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<ElemId>> ElemRelation::classes() const {
  std::vector<std::vector<ElemId>> out;
  std::vector<bool> seen(size_, false);
  for (ElemId a = 0; a < size_; ++a) {
    if (seen[a]) {
      continue;
    }
    std::vector<ElemId> cls;
    for (ElemId b = 0; b < size_; ++b) {
      if (at(a, b)) {
        cls.push_back(b);
        seen[b] = true;
      }
    }
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<std::size_t> ElemRelation::class_index() const {
  std::vector<std::size_t> idx(size_, 0);
  const auto cls = classes();
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (ElemId m : cls[i]) {
      idx[m] = i;
    }
  }
  return idx;
}

} // namespace mvs
