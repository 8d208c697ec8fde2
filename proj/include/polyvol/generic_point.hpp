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

// Implicit intersection points (LPI, TPI) and indirect predicates over any
// mix of explicit and implicit arguments. An implicit point is represented
// by homogeneous coordinates (lx, ly, lz, d) that are polynomials in the
// defining explicit points; predicates evaluate those polynomials lazily
// with interval arithmetic and fall back to exact expansions, so no
// intermediate coordinates are ever constructed.

#include <array>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <variant>

#include "polyvol/predicates.hpp"

namespace polyvol {

struct ExplicitPoint3 {
  double x = 0.0, y = 0.0, z = 0.0;

  ExplicitPoint3() = default;
  ExplicitPoint3(double px, double py, double pz) : x(px), y(py), z(pz) {}

  const double* ptr() const { return &x; }
  double operator[](int i) const { return (&x)[i]; }

  friend bool operator==(const ExplicitPoint3& a, const ExplicitPoint3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

// Intersection of line(p, q) with plane(r, s, t).
struct LPIPoint {
  ExplicitPoint3 p, q;     // line
  ExplicitPoint3 r, s, t;  // plane
};

// Intersection of three planes, each given by a triplet of points.
struct TPIPoint {
  std::array<ExplicitPoint3, 3> v, w, u;
};

template <typename S>
struct Lambda3 {
  S x, y, z, d;
};

namespace detail {

template <typename S>
S dot3(const S& ax, const S& ay, const S& az, const S& bx, const S& by, const S& bz) {
  return ax * bx + ay * by + az * bz;
}

template <typename S>
Lambda3<S> lpi_lambda(const LPIPoint& l) {
  const S nx = (S(l.s.y) - S(l.r.y)) * (S(l.t.z) - S(l.r.z)) -
               (S(l.s.z) - S(l.r.z)) * (S(l.t.y) - S(l.r.y));
  const S ny = (S(l.s.z) - S(l.r.z)) * (S(l.t.x) - S(l.r.x)) -
               (S(l.s.x) - S(l.r.x)) * (S(l.t.z) - S(l.r.z));
  const S nz = (S(l.s.x) - S(l.r.x)) * (S(l.t.y) - S(l.r.y)) -
               (S(l.s.y) - S(l.r.y)) * (S(l.t.x) - S(l.r.x));
  const S d = dot3<S>(nx, ny, nz, S(l.q.x) - S(l.p.x), S(l.q.y) - S(l.p.y), S(l.q.z) - S(l.p.z));
  const S num =
      dot3<S>(nx, ny, nz, S(l.r.x) - S(l.p.x), S(l.r.y) - S(l.p.y), S(l.r.z) - S(l.p.z));
  Lambda3<S> lam;
  lam.x = S(l.p.x) * d + (S(l.q.x) - S(l.p.x)) * num;
  lam.y = S(l.p.y) * d + (S(l.q.y) - S(l.p.y)) * num;
  lam.z = S(l.p.z) * d + (S(l.q.z) - S(l.p.z)) * num;
  lam.d = d;
  return lam;
}

template <typename S>
void plane_eq(const std::array<ExplicitPoint3, 3>& tri, S& nx, S& ny, S& nz, S& dd) {
  const ExplicitPoint3 &a = tri[0], &b = tri[1], &c = tri[2];
  nx = (S(b.y) - S(a.y)) * (S(c.z) - S(a.z)) - (S(b.z) - S(a.z)) * (S(c.y) - S(a.y));
  ny = (S(b.z) - S(a.z)) * (S(c.x) - S(a.x)) - (S(b.x) - S(a.x)) * (S(c.z) - S(a.z));
  nz = (S(b.x) - S(a.x)) * (S(c.y) - S(a.y)) - (S(b.y) - S(a.y)) * (S(c.x) - S(a.x));
  dd = dot3<S>(nx, ny, nz, S(a.x), S(a.y), S(a.z));
}

template <typename S>
Lambda3<S> tpi_lambda(const TPIPoint& t) {
  S n1x, n1y, n1z, d1, n2x, n2y, n2z, d2, n3x, n3y, n3z, d3;
  plane_eq<S>(t.v, n1x, n1y, n1z, d1);
  plane_eq<S>(t.w, n2x, n2y, n2z, d2);
  plane_eq<S>(t.u, n3x, n3y, n3z, d3);
  Lambda3<S> lam;
  lam.d = det3<S>(n1x, n1y, n1z, n2x, n2y, n2z, n3x, n3y, n3z);
  lam.x = det3<S>(d1, n1y, n1z, d2, n2y, n2z, d3, n3y, n3z);
  lam.y = det3<S>(n1x, d1, n1z, n2x, d2, n2z, n3x, d3, n3z);
  lam.z = det3<S>(n1x, n1y, d1, n2x, n2y, d2, n3x, n3y, d3);
  return lam;
}

}  // namespace detail

class GenericPoint {
 public:
  GenericPoint() : rep_(ExplicitPoint3{}) {}
  GenericPoint(const ExplicitPoint3& e) : rep_(e) {}  // NOLINT: implicit by design
  GenericPoint(const LPIPoint& l) : rep_(l) {}        // NOLINT
  GenericPoint(const TPIPoint& t) : rep_(t) {}        // NOLINT

  bool is_explicit() const { return std::holds_alternative<ExplicitPoint3>(rep_); }
  bool is_lpi() const { return std::holds_alternative<LPIPoint>(rep_); }
  bool is_tpi() const { return std::holds_alternative<TPIPoint>(rep_); }

  const ExplicitPoint3& as_explicit() const { return std::get<ExplicitPoint3>(rep_); }
  const LPIPoint& as_lpi() const { return std::get<LPIPoint>(rep_); }
  const TPIPoint& as_tpi() const { return std::get<TPIPoint>(rep_); }

  template <typename S>
  Lambda3<S> lambda() const {
    if (is_explicit()) {
      const ExplicitPoint3& e = as_explicit();
      return Lambda3<S>{S(e.x), S(e.y), S(e.z), S(1.0)};
    }
    if (is_lpi()) return detail::lpi_lambda<S>(as_lpi());
    return detail::tpi_lambda<S>(as_tpi());
  }

  // Rounded coordinates. Cheap double evaluation; not certified.
  void approx(double out[3]) const {
    if (is_explicit()) {
      const ExplicitPoint3& e = as_explicit();
      out[0] = e.x;
      out[1] = e.y;
      out[2] = e.z;
      return;
    }
    const Lambda3<double> lam = lambda<double>();
    out[0] = lam.x / lam.d;
    out[1] = lam.y / lam.d;
    out[2] = lam.z / lam.d;
  }

 private:
  std::variant<ExplicitPoint3, LPIPoint, TPIPoint> rep_;
};

namespace detail {

template <typename S>
S det4_homog(const Lambda3<S>& a, const Lambda3<S>& b, const Lambda3<S>& c, const Lambda3<S>& d) {
  const auto m3 = [](const Lambda3<S>& p, const Lambda3<S>& q, const Lambda3<S>& r) {
    return det3<S>(p.x, p.y, p.z, q.x, q.y, q.z, r.x, r.y, r.z);
  };
  return -(a.d * m3(b, c, d)) + b.d * m3(a, c, d) - c.d * m3(a, b, d) + d.d * m3(a, b, c);
}

// Projected homogeneous 3x3 determinant. axis: 2 -> xy, 0 -> yz, 1 -> zx.
template <typename S>
S det3_homog_proj(const Lambda3<S>& a, const Lambda3<S>& b, const Lambda3<S>& c, int axis) {
  const auto uv = [axis](const Lambda3<S>& l, S& u, S& v) {
    if (axis == 2) {
      u = l.x;
      v = l.y;
    } else if (axis == 0) {
      u = l.y;
      v = l.z;
    } else {
      u = l.z;
      v = l.x;
    }
  };
  S au, av, bu, bv, cu, cv;
  uv(a, au, av);
  uv(b, bu, bv);
  uv(c, cu, cv);
  return au * (bv * c.d - b.d * cv) - av * (bu * c.d - b.d * cu) + a.d * (bu * cv - bv * cu);
}

inline int sign_int(Sign s) { return static_cast<int>(s); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Indirect predicates

inline Sign orient3d(const GenericPoint& a, const GenericPoint& b, const GenericPoint& c,
                     const GenericPoint& d) {
  if (a.is_explicit() && b.is_explicit() && c.is_explicit() && d.is_explicit()) {
    return orient3d(a.as_explicit().ptr(), b.as_explicit().ptr(), c.as_explicit().ptr(),
                    d.as_explicit().ptr());
  }
  {
    using I = IntervalScalar;
    const Lambda3<I> la = a.lambda<I>(), lb = b.lambda<I>(), lc = c.lambda<I>(),
                     ld = d.lambda<I>();
    if (la.d.sign_certain() && lb.d.sign_certain() && lc.d.sign_certain() &&
        ld.d.sign_certain()) {
      const I det = detail::det4_homog<I>(la, lb, lc, ld);
      if (det.sign_certain()) {
        const int s = detail::sign_int(det.sign()) * detail::sign_int(la.d.sign()) *
                      detail::sign_int(lb.d.sign()) * detail::sign_int(lc.d.sign()) *
                      detail::sign_int(ld.d.sign());
        return static_cast<Sign>(s);
      }
    }
  }
  const Lambda3<Expansion> la = a.lambda<Expansion>(), lb = b.lambda<Expansion>(),
                           lc = c.lambda<Expansion>(), ld = d.lambda<Expansion>();
  assert(la.d.sign() != kZero && lb.d.sign() != kZero && lc.d.sign() != kZero &&
         ld.d.sign() != kZero);
  const Expansion det = detail::det4_homog<Expansion>(la, lb, lc, ld);
  const int s = detail::sign_int(det.sign()) * detail::sign_int(la.d.sign()) *
                detail::sign_int(lb.d.sign()) * detail::sign_int(lc.d.sign()) *
                detail::sign_int(ld.d.sign());
  return static_cast<Sign>(s);
}

// Orientation in the coordinate-plane projection. axis 2 drops z (xy),
// axis 0 drops x (yz), axis 1 drops y (zx, in that order).
inline Sign orient2d_proj(const GenericPoint& a, const GenericPoint& b, const GenericPoint& c,
                          int axis) {
  if (a.is_explicit() && b.is_explicit() && c.is_explicit()) {
    const ExplicitPoint3 &ea = a.as_explicit(), &eb = b.as_explicit(), &ec = c.as_explicit();
    double pa[2], pb[2], pc[2];
    const auto proj = [axis](const ExplicitPoint3& e, double* out) {
      if (axis == 2) {
        out[0] = e.x;
        out[1] = e.y;
      } else if (axis == 0) {
        out[0] = e.y;
        out[1] = e.z;
      } else {
        out[0] = e.z;
        out[1] = e.x;
      }
    };
    proj(ea, pa);
    proj(eb, pb);
    proj(ec, pc);
    return orient2d(pa, pb, pc);
  }
  {
    using I = IntervalScalar;
    const Lambda3<I> la = a.lambda<I>(), lb = b.lambda<I>(), lc = c.lambda<I>();
    if (la.d.sign_certain() && lb.d.sign_certain() && lc.d.sign_certain()) {
      const I det = detail::det3_homog_proj<I>(la, lb, lc, axis);
      if (det.sign_certain()) {
        const int s = detail::sign_int(det.sign()) * detail::sign_int(la.d.sign()) *
                      detail::sign_int(lb.d.sign()) * detail::sign_int(lc.d.sign());
        return static_cast<Sign>(s);
      }
    }
  }
  const Lambda3<Expansion> la = a.lambda<Expansion>(), lb = b.lambda<Expansion>(),
                           lc = c.lambda<Expansion>();
  assert(la.d.sign() != kZero && lb.d.sign() != kZero && lc.d.sign() != kZero);
  const Expansion det = detail::det3_homog_proj<Expansion>(la, lb, lc, axis);
  const int s = detail::sign_int(det.sign()) * detail::sign_int(la.d.sign()) *
                detail::sign_int(lb.d.sign()) * detail::sign_int(lc.d.sign());
  return static_cast<Sign>(s);
}

// Sign of a_axis - b_axis on exact coordinates.
inline Sign compare_coord(const GenericPoint& a, const GenericPoint& b, int axis) {
  if (a.is_explicit() && b.is_explicit()) {
    const double va = a.as_explicit()[axis], vb = b.as_explicit()[axis];
    return sign_of(va - vb);  // exact: comparison, not arithmetic
  }
  const auto pick = [axis](const auto& lam) -> const auto& {
    return axis == 0 ? lam.x : (axis == 1 ? lam.y : lam.z);
  };
  {
    using I = IntervalScalar;
    const Lambda3<I> la = a.lambda<I>(), lb = b.lambda<I>();
    if (la.d.sign_certain() && lb.d.sign_certain()) {
      const I diff = pick(la) * lb.d - pick(lb) * la.d;
      if (diff.sign_certain()) {
        const int s = detail::sign_int(diff.sign()) * detail::sign_int(la.d.sign()) *
                      detail::sign_int(lb.d.sign());
        return static_cast<Sign>(s);
      }
    }
  }
  const Lambda3<Expansion> la = a.lambda<Expansion>(), lb = b.lambda<Expansion>();
  assert(la.d.sign() != kZero && lb.d.sign() != kZero);
  const Expansion diff = pick(la) * lb.d - pick(lb) * la.d;
  const int s = detail::sign_int(diff.sign()) * detail::sign_int(la.d.sign()) *
                detail::sign_int(lb.d.sign());
  return static_cast<Sign>(s);
}

inline bool same_point(const GenericPoint& a, const GenericPoint& b) {
  return compare_coord(a, b, 0) == kZero && compare_coord(a, b, 1) == kZero &&
         compare_coord(a, b, 2) == kZero;
}

// Nearest-representable coordinates of the exact point. The estimate from
// the exact homogeneous coordinates is refined with one exact-residual
// correction, which keeps each coordinate within one ulp.
inline ExplicitPoint3 approximate(const GenericPoint& g) {
  if (g.is_explicit()) return g.as_explicit();
  const Lambda3<Expansion> lam = g.lambda<Expansion>();
  const double d_est = lam.d.estimate();
  assert(d_est != 0.0);
  const auto round_coord = [&](const Expansion& num) {
    const double q0 = num.estimate() / d_est;
    if (!std::isfinite(q0)) throw std::overflow_error("implicit point exceeds double range");
    const Expansion residual = num - lam.d.scaled(q0);
    const double q = q0 + residual.estimate() / d_est;
    if (!std::isfinite(q)) throw std::overflow_error("implicit point exceeds double range");
    return q;
  };
  return ExplicitPoint3(round_coord(lam.x), round_coord(lam.y), round_coord(lam.z));
}

// Index (0/1/2 for x/y/z) of the largest component of the (approximate)
// normal of triangle (a, b, c); used to pick projection planes.
inline int max_normal_axis(const double* a, const double* b, const double* c) {
  const double ux = b[0] - a[0], uy = b[1] - a[1], uz = b[2] - a[2];
  const double vx = c[0] - a[0], vy = c[1] - a[1], vz = c[2] - a[2];
  const double nx = std::fabs(uy * vz - uz * vy);
  const double ny = std::fabs(uz * vx - ux * vz);
  const double nz = std::fabs(ux * vy - uy * vx);
  if (nx >= ny && nx >= nz) return 0;
  if (ny >= nz) return 1;
  return 2;
}

}  // namespace polyvol
