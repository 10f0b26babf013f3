// zg/integers.hpp
//
// Arbitrary-precision integer and rational aliases. Coefficients of group
// ring elements grow multiplicatively under powering (a support-3 element
// raised to the 12th power already exceeds 64 bits), so exact bigints are
// the default scalar type throughout.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "zg/errors.hpp"

namespace zg {

using int_t = boost::multiprecision::cpp_int;
using rat_t = boost::multiprecision::cpp_rational;

inline bool is_integral(const rat_t& x) {
  return boost::multiprecision::denominator(x) == 1;
}

// Numerator of an integral rational; caller must check is_integral first.
inline int_t to_int(const rat_t& x) {
  return boost::multiprecision::numerator(x);
}

inline int_t abs_int(const int_t& x) { return x < 0 ? int_t(-x) : x; }

// Exact integer square root, rounded down. Defined for x >= 0.
inline int_t isqrt_int(const int_t& x) {
  if (x < 0) throw precondition_error("isqrt of a negative value");
  return boost::multiprecision::sqrt(x);
}

inline long long isqrt_ll(long long x) {
  return static_cast<long long>(isqrt_int(int_t(x)));
}

// Parse a base-10 integer with optional sign; rejects anything else.
inline int_t parse_int(const std::string& s) {
  if (s.empty()) throw parse_error("empty integer literal");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw parse_error("sign without digits: '" + s + "'");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw parse_error("bad integer literal: '" + s + "'");
  // The cpp_int reader rejects a leading '+', so hand it the digits only.
  return s[0] == '+' ? int_t(s.substr(1)) : int_t(s);
}

}  // namespace zg
