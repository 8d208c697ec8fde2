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

// Interval arithmetic used as the dynamic filter stage of predicate
// evaluation. Bounds are widened outward with nextafter after every
// operation, so soundness does not depend on the FPU rounding mode or on
// instruction reordering.

#include <cmath>
#include <limits>

#include "polyvol/expansion.hpp"

namespace polyvol {

class IntervalScalar {
 public:
  IntervalScalar() : lo_(0.0), hi_(0.0) {}
  IntervalScalar(double exact) : lo_(exact), hi_(exact) {}  // NOLINT: implicit by design
  IntervalScalar(double lo, double hi) : lo_(lo), hi_(hi) {}

  double lo() const { return lo_; }
  double hi() const { return hi_; }

  bool sign_certain() const { return lo_ > 0.0 || hi_ < 0.0 || (lo_ == 0.0 && hi_ == 0.0); }
  Sign sign() const {
    if (lo_ > 0.0) return kPositive;
    if (hi_ < 0.0) return kNegative;
    return kZero;  // certain only if the interval is exactly [0, 0]
  }

  friend IntervalScalar operator+(const IntervalScalar& a, const IntervalScalar& b) {
    return make(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend IntervalScalar operator-(const IntervalScalar& a, const IntervalScalar& b) {
    return make(a.lo_ - b.hi_, a.hi_ - b.lo_);
  }
  friend IntervalScalar operator-(const IntervalScalar& a) {
    return IntervalScalar(-a.hi_, -a.lo_);
  }
  friend IntervalScalar operator*(const IntervalScalar& a, const IntervalScalar& b) {
    const double p1 = a.lo_ * b.lo_;
    const double p2 = a.lo_ * b.hi_;
    const double p3 = a.hi_ * b.lo_;
    const double p4 = a.hi_ * b.hi_;
    return make(std::fmin(std::fmin(p1, p2), std::fmin(p3, p4)),
                std::fmax(std::fmax(p1, p2), std::fmax(p3, p4)));
  }

 private:
  static IntervalScalar make(double lo, double hi) {
    // Outward widening covers the rounding error of the op just performed.
    return IntervalScalar(std::nextafter(lo, -std::numeric_limits<double>::infinity()),
                          std::nextafter(hi, std::numeric_limits<double>::infinity()));
  }

  double lo_;
  double hi_;
};

}  // namespace polyvol
