#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace modpic {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// g = gcd(a,b) = x*a + y*b
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    x = a < 0 ? -1 : 1;
    y = 0;
    return abs_int(a);
  }
  Int x1, y1;
  Int g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// inverse of a modulo m > 1
inline Int inv_mod(const Int& a, const Int& m) {
  Int x, y;
  Int g = ext_gcd(a % m, m, x, y);
  if (g != 1) throw std::domain_error("inv_mod: arguments not coprime");
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

// exact integer n-th root if one exists
inline bool nth_root_exact(const Int& a, unsigned n, Int& root) {
  if (n == 0) throw std::domain_error("nth_root_exact: n = 0");
  if (a == 0) {
    root = 0;
    return true;
  }
  bool neg = a < 0;
  if (neg && n % 2 == 0) return false;
  Int v = abs_int(a);
  // binary search
  Int lo = 1, hi = v;
  if (hi > 1) {
    Int guess = 1;
    while (boost::multiprecision::pow(guess, n) < v) guess <<= 1;
    hi = guess;
  }
  while (lo <= hi) {
    Int mid = (lo + hi) / 2;
    Int pw = boost::multiprecision::pow(mid, n);
    if (pw == v) {
      root = neg ? Int(-mid) : mid;
      return true;
    }
    if (pw < v)
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return false;
}

}  // namespace modpic
