// Copyright 2026 The Polyvol Authors.
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

// Floating-point expansion arithmetic after Shewchuk. An expansion is a
// sequence of doubles, nonoverlapping and sorted by increasing magnitude,
// whose exact sum is the represented value. All routines here assume
// round-to-nearest IEEE-754 doubles and must be compiled with FP
// contraction disabled (-ffp-contract=off).

#include <cassert>
#include <cmath>
#include <cstdint>
#include <vector>

namespace polyvol {

enum Sign : int { kNegative = -1, kZero = 0, kPositive = 1 };

inline Sign sign_of(double x) {
  if (x > 0.0) return kPositive;
  if (x < 0.0) return kNegative;
  return kZero;
}

inline Sign opposite(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

namespace detail {

// x + y == a + b exactly, |y| <= ulp(x)/2.
inline void two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  const double bvirt = x - a;
  const double avirt = x - bvirt;
  const double bround = b - bvirt;
  const double around = a - avirt;
  y = around + bround;
}

// Requires |a| >= |b| (or a == 0).
inline void fast_two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  const double bvirt = x - a;
  y = b - bvirt;
}

inline void two_diff(double a, double b, double& x, double& y) {
  x = a - b;
  const double bvirt = a - x;
  const double avirt = x + bvirt;
  const double bround = bvirt - b;
  const double around = a - avirt;
  y = around + bround;
}

inline void split(double a, double& hi, double& lo) {
  const double c = 134217729.0 * a;  // 2^27 + 1
  const double abig = c - a;
  hi = c - abig;
  lo = a - hi;
}

inline void two_prod(double a, double b, double& x, double& y) {
  x = a * b;
  double ahi, alo, bhi, blo;
  split(a, ahi, alo);
  split(b, bhi, blo);
  const double err1 = x - (ahi * bhi);
  const double err2 = err1 - (alo * bhi);
  const double err3 = err2 - (ahi * blo);
  y = (alo * blo) - err3;
}

}  // namespace detail

// Dynamic-length expansion. Components are stored in increasing magnitude;
// zero components are eliminated. The empty expansion represents zero.
class Expansion {
 public:
  Expansion() = default;
  explicit Expansion(double v) {
    if (v != 0.0) terms_.push_back(v);
  }
  static Expansion from_two(double hi, double lo) {
    Expansion e;
    if (lo != 0.0) e.terms_.push_back(lo);
    if (hi != 0.0) e.terms_.push_back(hi);
    return e;
  }
  static Expansion sum_of(double a, double b) {
    double x, y;
    detail::two_sum(a, b, x, y);
    return from_two(x, y);
  }
  static Expansion diff_of(double a, double b) {
    double x, y;
    detail::two_diff(a, b, x, y);
    return from_two(x, y);
  }
  static Expansion prod_of(double a, double b) {
    double x, y;
    detail::two_prod(a, b, x, y);
    return from_two(x, y);
  }

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::vector<double>& terms() const { return terms_; }

  Sign sign() const {
    // The largest-magnitude (last) component carries the sign.
    return terms_.empty() ? kZero : sign_of(terms_.back());
  }

  // Value rounded by naive increasing-magnitude summation; within one ulp
  // of the exact value.
  double estimate() const {
    double s = 0.0;
    for (double t : terms_) s += t;
    return s;
  }

  Expansion operator-() const {
    Expansion r = *this;
    for (double& t : r.terms_) t = -t;
    return r;
  }

  friend Expansion operator+(const Expansion& e, const Expansion& f) {
    if (e.is_zero()) return f;
    if (f.is_zero()) return e;
    Expansion h;
    h.terms_.resize(e.size() + f.size());
    const size_t n = fast_expansion_sum_zeroelim(e.terms_, f.terms_, h.terms_);
    h.terms_.resize(n);
    return h;
  }

  friend Expansion operator-(const Expansion& e, const Expansion& f) { return e + (-f); }

  // Multiplication by a single double.
  Expansion scaled(double b) const {
    if (is_zero() || b == 0.0) return Expansion();
    Expansion h;
    h.terms_.resize(2 * size());
    const size_t n = scale_expansion_zeroelim(terms_, b, h.terms_);
    h.terms_.resize(n);
    return h;
  }

  friend Expansion operator*(const Expansion& e, const Expansion& f) {
    if (e.is_zero() || f.is_zero()) return Expansion();
    // Distribute the shorter operand over the longer one.
    const Expansion& a = e.size() <= f.size() ? e : f;
    const Expansion& b = e.size() <= f.size() ? f : e;
    Expansion acc;
    for (double t : a.terms_) acc = acc + b.scaled(t);
    return acc;
  }

 private:
  // Shewchuk's FAST-EXPANSION-SUM with zero elimination.
  static size_t fast_expansion_sum_zeroelim(const std::vector<double>& e,
                                            const std::vector<double>& f,
                                            std::vector<double>& h) {
    size_t eindex = 0, findex = 0, hindex = 0;
    double enow = e[0], fnow = f[0];
    double Q;
    if ((fnow > enow) == (fnow > -enow)) {
      Q = enow;
      enow = ++eindex < e.size() ? e[eindex] : 0.0;
    } else {
      Q = fnow;
      fnow = ++findex < f.size() ? f[findex] : 0.0;
    }
    double Qnew, hh;
    if (eindex < e.size() && findex < f.size()) {
      if ((fnow > enow) == (fnow > -enow)) {
        detail::fast_two_sum(enow, Q, Qnew, hh);
        enow = ++eindex < e.size() ? e[eindex] : 0.0;
      } else {
        detail::fast_two_sum(fnow, Q, Qnew, hh);
        fnow = ++findex < f.size() ? f[findex] : 0.0;
      }
      Q = Qnew;
      if (hh != 0.0) h[hindex++] = hh;
      while (eindex < e.size() && findex < f.size()) {
        if ((fnow > enow) == (fnow > -enow)) {
          detail::two_sum(Q, enow, Qnew, hh);
          enow = ++eindex < e.size() ? e[eindex] : 0.0;
        } else {
          detail::two_sum(Q, fnow, Qnew, hh);
          fnow = ++findex < f.size() ? f[findex] : 0.0;
        }
        Q = Qnew;
        if (hh != 0.0) h[hindex++] = hh;
      }
    }
    while (eindex < e.size()) {
      detail::two_sum(Q, enow, Qnew, hh);
      enow = ++eindex < e.size() ? e[eindex] : 0.0;
      Q = Qnew;
      if (hh != 0.0) h[hindex++] = hh;
    }
    while (findex < f.size()) {
      detail::two_sum(Q, fnow, Qnew, hh);
      fnow = ++findex < f.size() ? f[findex] : 0.0;
      Q = Qnew;
      if (hh != 0.0) h[hindex++] = hh;
    }
    if (Q != 0.0) h[hindex++] = Q;
    return hindex;
  }

  static size_t scale_expansion_zeroelim(const std::vector<double>& e, double b,
                                         std::vector<double>& h) {
    size_t hindex = 0;
    double Q, hh;
    detail::two_prod(e[0], b, Q, hh);
    if (hh != 0.0) h[hindex++] = hh;
    for (size_t eindex = 1; eindex < e.size(); ++eindex) {
      double product1, product0, sum;
      detail::two_prod(e[eindex], b, product1, product0);
      detail::two_sum(Q, product0, sum, hh);
      if (hh != 0.0) h[hindex++] = hh;
      detail::fast_two_sum(product1, sum, Q, hh);
      if (hh != 0.0) h[hindex++] = hh;
    }
    if (Q != 0.0) h[hindex++] = Q;
    return hindex;
  }

  std::vector<double> terms_;
};

}  // namespace polyvol
