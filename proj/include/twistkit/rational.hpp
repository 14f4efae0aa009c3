#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace tk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

inline Int ipow(Int base, long e) {
  Int r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

/* n/d with either sign of d; the constructor itself wants d > 0. */
inline Rat make_rat(Int n, Int d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rat(n, d);
}

/* r^e for e of either sign; r must be nonzero when e < 0. */
inline Rat rpow(const Rat& r, long e) {
  if (e >= 0) return Rat(ipow(num(r), e), ipow(den(r), e));
  if (r == 0) throw std::domain_error("negative power of zero");
  return make_rat(ipow(den(r), -e), ipow(num(r), -e));
}

} // namespace tk
