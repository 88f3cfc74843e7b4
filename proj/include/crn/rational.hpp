// Copyright 2026 The crn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace crn {

/// Arbitrary-precision integer and rational scalars. GMP keeps rationals
/// canonical: positive denominator, coprime numerator/denominator, 0 == 0/1.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// A point or direction in Q^n. The dimension is the length.
using RatVec = std::vector<Rat>;

inline int sign_of(const Rat& x) {
  return x.sign();
}

/// Parses "p", "-p", or "p/q" (q > 0 after normalization). Throws
/// std::invalid_argument on malformed input or zero denominator.
inline Rat parse_rat(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  };
  std::string_view s = text;
  if (s.empty()) fail();
  std::string num, den;
  size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    num.push_back(s[i++]);
    ++digits;
  }
  if (digits == 0) fail();
  Int n(num);
  if (negative) n = -n;
  if (i == s.size()) return Rat(n);
  if (s[i] != '/') fail();
  ++i;
  digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    den.push_back(s[i++]);
    ++digits;
  }
  if (digits == 0 || i != s.size()) fail();
  Int d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rat(n, d);
}

/// Renders canonically: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

/// Renders always as "p/q", including unit denominators.
inline std::string rat_frac_str(const Rat& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

/// x^e for a nonnegative integer exponent.
inline Rat rat_pow(const Rat& x, unsigned long e) {
  if (e == 0) return Rat(1);
  Int n = pow(numerator(x), static_cast<unsigned>(e));
  Int d = pow(denominator(x), static_cast<unsigned>(e));
  return Rat(n, d);
}

// ---- vector helpers ----

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec vec_add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: dimension mismatch");
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec vec_sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: dimension mismatch");
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVec vec_scaled(const RatVec& a, const Rat& c) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

inline RatVec vec_neg(const RatVec& a) {
  return vec_scaled(a, Rat(-1));
}

inline bool is_zero_vec(const RatVec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

/// Lexicographic order on exact coordinates; total order used everywhere a
/// deterministic tie-break or map key is needed.
inline bool lex_less(const RatVec& a, const RatVec& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return a.size() < b.size();
}

struct RatVecLess {
  bool operator()(const RatVec& a, const RatVec& b) const { return lex_less(a, b); }
};

inline std::string vec_str(const RatVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(v[i]);
  }
  s += ")";
  return s;
}

/// Clears denominators and divides by the content, giving the unique integer
/// primitive vector on the same ray. `fix_sign` additionally flips so the
/// first nonzero entry is positive (canonical line representative).
inline RatVec primitive(const RatVec& v, bool fix_sign = false) {
  Int lcm_den = 1;
  for (const Rat& x : v) lcm_den = lcm(lcm_den, denominator(x));
  std::vector<Int> w(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
    g = gcd(g, w[i]);
  }
  RatVec r(v.size(), Rat(0));
  if (g == 0) return r;
  int flip = 1;
  if (fix_sign) {
    for (const Int& x : w) {
      if (x != 0) {
        flip = x < 0 ? -1 : 1;
        break;
      }
    }
  }
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(w[i] * flip / g);
  return r;
}

}  // namespace crn
