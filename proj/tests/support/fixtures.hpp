// fixtures.hpp -- fixed tables and presentations shared by the test suites

#ifndef MVS_TESTS_FIXTURES_HPP
#define MVS_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "mvs/algebra.hpp"
#include "mvs/words.hpp"

namespace fixtures {

// {0,1} under max.
inline mvs::RawTable raw_max2() {
  return {{"0", "1"}, {{0, 1}, {1, 1}}};
}

// {0,1,2} under addition saturating at 2.
inline mvs::RawTable raw_sat3() {
  return {{"0", "1", "2"}, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}};
}

// {e,a,b} with a+a=b, a+b=b+a=a, b+b=b; commutative but not antisymmetric.
inline mvs::RawTable raw_ab() {
  return {{"e", "a", "b"}, {{0, 1, 2}, {1, 2, 1}, {2, 1, 2}}};
}

// {0,1} with 1+1=0; the neutral element decomposes.
inline mvs::RawTable raw_z2() {
  return {{"0", "1"}, {{0, 1}, {1, 0}}};
}

// {e,a,b} where nonzero elements absorb on the left; a and b share no divisor.
inline mvs::RawTable raw_leftproj() {
  return {{"e", "a", "b"}, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}};
}

// Non-commutative four-element value set: c is a left identity on {a,b},
// a and b absorb on the left, e is neutral.
inline mvs::RawTable raw_nc4() {
  return {{"e", "c", "a", "b"},
          {{0, 1, 2, 3}, {1, 1, 2, 3}, {2, 2, 2, 2}, {3, 3, 3, 3}}};
}

inline mvs::FiniteMvs m_max2() { return mvs::validate(raw_max2()); }
inline mvs::FiniteMvs m_sat3() { return mvs::validate(raw_sat3()); }
inline mvs::FiniteMvs m_ab() { return mvs::validate(raw_ab()); }
inline mvs::FiniteMvs m_nc4() { return mvs::validate(raw_nc4()); }

// Four letters with ab~c, ad~b, bc~a; the class of d stays a singleton.
inline mvs::Presentation p_abcd() {
  return mvs::Presentation({"a", "b", "c", "d"},
                           {{{"a", "b", "c"}}, {{"a", "d", "b"}}, {{"b", "c", "a"}}});
}

// Two letters with ab~b; normal forms are b^i a^j.
inline mvs::Presentation p_ab() {
  return mvs::Presentation({"a", "b"}, {{{"a", "b", "b"}}});
}

// A unit letter 1 plus ab~c, ba~d; the quotient monoid is not commutative.
inline mvs::Presentation p5() {
  return mvs::Presentation({"1", "a", "b", "c", "d"},
                           {{{"1", "a", "a"}},
                            {{"1", "b", "b"}},
                            {{"1", "c", "c"}},
                            {{"1", "d", "d"}},
                            {{"a", "b", "c"}},
                            {{"b", "a", "d"}}});
}

// Free on two letters; no common divisor exists for a, b.
inline mvs::Presentation p_free2() {
  return mvs::Presentation({"a", "b"}, {});
}

// Two letters with aa~a; bounded search cannot settle the pair (a, b).
inline mvs::Presentation p_unknown() {
  return mvs::Presentation({"a", "b"}, {{{"a", "a", "a"}}});
}

inline std::string fixture_path(const std::string& name) {
  return std::string(MVS_FIXTURES_DIR) + "/" + name;
}

} // namespace fixtures

#endif // MVS_TESTS_FIXTURES_HPP
