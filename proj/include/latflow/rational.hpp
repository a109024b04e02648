#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "errors.hpp"

namespace latflow {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline Rat rat(long n) { return Rat(Int(n)); }
inline Rat rat(long n, long d) { return Rat(Int(n), Int(d)); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }
inline Rat abs_rat(const Rat& a) { return a < Rat(0) ? -a : a; }

inline std::string to_string(const Int& n) { return n.str(); }

inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return r.numerator().str();
  return r.numerator().str() + "/" + r.denominator().str();
}

// fixed-point decimal rendering (reports only; all math stays exact)
inline std::string decimal_string(const Rat& r, int digits = 6) {
  Int num = r.numerator(), den = r.denominator();
  std::string sign = num < 0 ? "-" : "";
  num = abs_int(num);
  Int ip = num / den, rem = num % den;
  std::string frac;
  for (int i = 0; i < digits && rem != 0; ++i) {
    rem *= 10;
    frac += static_cast<char>('0' + static_cast<int>(rem / den));
    rem %= den;
  }
  std::string out = sign + ip.str();
  if (!frac.empty()) out += "." + frac;
  if (rem != 0) out += "...";
  return out;
}

// parse "a" or "a/b"
inline Rat parse_rational(const std::string& s) {
  auto bad = [&] { throw input_error("bad rational literal: '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rat(0);  // unreachable
}

// least integer k >= 0 with k*k >= n (n >= 0)
inline Int ceil_isqrt(const Int& n) {
  if (n <= 0) return 0;
  Int r = boost::multiprecision::sqrt(n);  // floor sqrt
  if (r * r < n) ++r;
  return r;
}

// least integer k >= 0 with k*k >= r
inline Int ceil_isqrt(const Rat& r) {
  if (r <= Rat(0)) return 0;
  // k >= sqrt(p/q)  <=>  k*k*q >= p; search near ceil_isqrt(ceil(p/q))
  Int p = r.numerator(), q = r.denominator();
  Int k = ceil_isqrt(Int(p / q + (p % q != 0 ? 1 : 0)));
  while (k * k * q < p) ++k;
  while (k > 0 && (k - 1) * (k - 1) * q >= p) --k;
  return k;
}

}  // namespace latflow
