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

// Certified sign evaluation for the base predicates on explicit points:
// orient2d, orient3d, insphere and point coincidence. Each predicate runs
// an almost-static error-bound filter, then interval arithmetic, then
// exact expansion arithmetic, so the returned sign always equals the sign
// of the exact real-valued expression.
//
// Sign conventions (homogeneous determinants with a trailing 1-column):
//   orient2d((0,0),(1,0),(0,1))            == +1
//   orient3d((0,0,0),(1,0,0),(0,1,0),(0,0,1)) == -1
//   insphere(a,b,c,d,e) == orient3d(a,b,c,d) iff e is strictly inside the
//   circumsphere of tetrahedron (a,b,c,d).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

#include "polyvol/expansion.hpp"
#include "polyvol/interval.hpp"

namespace polyvol {

namespace detail {

// Machine epsilon for round-to-nearest doubles (2^-53) and the static
// relative error bounds from Shewchuk's forward analysis.
constexpr double kEps = 1.1102230246251565e-16;
constexpr double kOrient2dBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kOrient3dBound = (7.0 + 56.0 * kEps) * kEps;
constexpr double kInsphereBound = (16.0 + 224.0 * kEps) * kEps;

// det | px py pz ; qx qy qz ; rx ry rz | over any ring-like scalar.
template <typename S>
S det3(const S& px, const S& py, const S& pz, const S& qx, const S& qy, const S& qz, const S& rx,
       const S& ry, const S& rz) {
  return px * (qy * rz - qz * ry) - py * (qx * rz - qz * rx) + pz * (qx * ry - qy * rx);
}

// Exact 3x3 determinant of raw double entries.
inline Expansion det3_exact(const double* p, const double* q, const double* r) {
  const Expansion qr_yz = Expansion::prod_of(q[1], r[2]) - Expansion::prod_of(q[2], r[1]);
  const Expansion qr_xz = Expansion::prod_of(q[0], r[2]) - Expansion::prod_of(q[2], r[0]);
  const Expansion qr_xy = Expansion::prod_of(q[0], r[1]) - Expansion::prod_of(q[1], r[0]);
  return qr_yz.scaled(p[0]) - qr_xz.scaled(p[1]) + qr_xy.scaled(p[2]);
}

// Exact: det | ax ay 1 ; bx by 1 ; cx cy 1 | from original coordinates.
inline Sign orient2d_exact(const double* pa, const double* pb, const double* pc) {
  const Expansion ab = Expansion::prod_of(pa[0], pb[1]) - Expansion::prod_of(pa[1], pb[0]);
  const Expansion bc = Expansion::prod_of(pb[0], pc[1]) - Expansion::prod_of(pb[1], pc[0]);
  const Expansion ca = Expansion::prod_of(pc[0], pa[1]) - Expansion::prod_of(pc[1], pa[0]);
  return (ab + bc + ca).sign();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// orient2d

inline Sign orient2d(const double* pa, const double* pb, const double* pc) {
  const double detleft = (pa[0] - pc[0]) * (pb[1] - pc[1]);
  const double detright = (pa[1] - pc[1]) * (pb[0] - pc[0]);
  const double det = detleft - detright;

  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return sign_of(det);
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return sign_of(det);
    detsum = -detleft - detright;
  } else {
    return sign_of(-detright);
  }
  const double errbound = detail::kOrient2dBound * detsum;
  if (det > errbound || -det > errbound) return sign_of(det);
  return detail::orient2d_exact(pa, pb, pc);
}

// ---------------------------------------------------------------------------
// orient3d

namespace detail {

inline Sign orient3d_exact(const double* pa, const double* pb, const double* pc,
                           const double* pd) {
  const Expansion det = -det3_exact(pb, pc, pd) + det3_exact(pa, pc, pd) -
                        det3_exact(pa, pb, pd) + det3_exact(pa, pb, pc);
  return det.sign();
}

inline Sign orient3d_interval(const double* pa, const double* pb, const double* pc,
                              const double* pd, bool& certain) {
  using I = IntervalScalar;
  const I adx = I(pa[0]) - I(pd[0]), ady = I(pa[1]) - I(pd[1]), adz = I(pa[2]) - I(pd[2]);
  const I bdx = I(pb[0]) - I(pd[0]), bdy = I(pb[1]) - I(pd[1]), bdz = I(pb[2]) - I(pd[2]);
  const I cdx = I(pc[0]) - I(pd[0]), cdy = I(pc[1]) - I(pd[1]), cdz = I(pc[2]) - I(pd[2]);
  const I det = det3<I>(adx, ady, adz, bdx, bdy, bdz, cdx, cdy, cdz);
  certain = det.sign_certain();
  return det.sign();
}

}  // namespace detail

inline Sign orient3d(const double* pa, const double* pb, const double* pc, const double* pd) {
  const double adx = pa[0] - pd[0], ady = pa[1] - pd[1], adz = pa[2] - pd[2];
  const double bdx = pb[0] - pd[0], bdy = pb[1] - pd[1], bdz = pb[2] - pd[2];
  const double cdx = pc[0] - pd[0], cdy = pc[1] - pd[1], cdz = pc[2] - pd[2];

  const double bdxcdy = bdx * cdy, bdycdx = bdy * cdx;
  const double cdxady = cdx * ady, cdyadx = cdy * adx;
  const double adxbdy = adx * bdy, adybdx = ady * bdx;

  const double det =
      adz * (bdxcdy - bdycdx) + bdz * (cdxady - cdyadx) + cdz * (adxbdy - adybdx);
  const double permanent = (std::fabs(bdxcdy) + std::fabs(bdycdx)) * std::fabs(adz) +
                           (std::fabs(cdxady) + std::fabs(cdyadx)) * std::fabs(bdz) +
                           (std::fabs(adxbdy) + std::fabs(adybdx)) * std::fabs(cdz);
  const double errbound = detail::kOrient3dBound * permanent;
  if (det > errbound || -det > errbound) return sign_of(det);

  bool certain = false;
  const Sign s = detail::orient3d_interval(pa, pb, pc, pd, certain);
  if (certain && s != kZero) return s;
  return detail::orient3d_exact(pa, pb, pc, pd);
}

// ---------------------------------------------------------------------------
// insphere

namespace detail {

// Exact sign of det4 [(a-e, |a-e|^2); ...; (d-e, |d-e|^2)], which equals the
// homogeneous lifted 5x5 determinant. Differences are carried as exact
// two-term expansions.
inline Sign insphere_exact(const double* pa, const double* pb, const double* pc, const double* pd,
                           const double* pe) {
  std::array<std::array<Expansion, 3>, 4> v;  // exact p_i - e
  const double* rows[4] = {pa, pb, pc, pd};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) v[i][j] = Expansion::diff_of(rows[i][j], pe[j]);

  std::array<Expansion, 4> lift;
  for (int i = 0; i < 4; ++i)
    lift[i] = v[i][0] * v[i][0] + v[i][1] * v[i][1] + v[i][2] * v[i][2];

  const auto det3e = [&](int p, int q, int r) {
    return v[p][0] * (v[q][1] * v[r][2] - v[q][2] * v[r][1]) -
           v[p][1] * (v[q][0] * v[r][2] - v[q][2] * v[r][0]) +
           v[p][2] * (v[q][0] * v[r][1] - v[q][1] * v[r][0]);
  };
  // Cofactor expansion along the lifted column.
  const Expansion det = -(lift[0] * det3e(1, 2, 3)) + lift[1] * det3e(0, 2, 3) -
                        lift[2] * det3e(0, 1, 3) + lift[3] * det3e(0, 1, 2);
  return det.sign();
}

inline Sign insphere_interval(const double* pa, const double* pb, const double* pc,
                              const double* pd, const double* pe, bool& certain) {
  using I = IntervalScalar;
  I v[4][3];
  const double* rows[4] = {pa, pb, pc, pd};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) v[i][j] = I(rows[i][j]) - I(pe[j]);
  I lift[4];
  for (int i = 0; i < 4; ++i) lift[i] = v[i][0] * v[i][0] + v[i][1] * v[i][1] + v[i][2] * v[i][2];
  const auto det3i = [&](int p, int q, int r) {
    return det3<I>(v[p][0], v[p][1], v[p][2], v[q][0], v[q][1], v[q][2], v[r][0], v[r][1],
                   v[r][2]);
  };
  const I det = -(lift[0] * det3i(1, 2, 3)) + lift[1] * det3i(0, 2, 3) - lift[2] * det3i(0, 1, 3) +
                lift[3] * det3i(0, 1, 2);
  certain = det.sign_certain();
  return det.sign();
}

}  // namespace detail

inline Sign insphere(const double* pa, const double* pb, const double* pc, const double* pd,
                     const double* pe) {
  const double aex = pa[0] - pe[0], aey = pa[1] - pe[1], aez = pa[2] - pe[2];
  const double bex = pb[0] - pe[0], bey = pb[1] - pe[1], bez = pb[2] - pe[2];
  const double cex = pc[0] - pe[0], cey = pc[1] - pe[1], cez = pc[2] - pe[2];
  const double dex = pd[0] - pe[0], dey = pd[1] - pe[1], dez = pd[2] - pe[2];

  const double aexbey = aex * bey, bexaey = bex * aey;
  const double bexcey = bex * cey, cexbey = cex * bey;
  const double cexdey = cex * dey, dexcey = dex * cey;
  const double dexaey = dex * aey, aexdey = aex * dey;
  const double aexcey = aex * cey, cexaey = cex * aey;
  const double bexdey = bex * dey, dexbey = dex * bey;

  const double ab = aexbey - bexaey, bc = bexcey - cexbey, cd = cexdey - dexcey;
  const double da = dexaey - aexdey, ac = aexcey - cexaey, bd = bexdey - dexbey;

  const double abc = aez * bc - bez * ac + cez * ab;
  const double bcd = bez * cd - cez * bd + dez * bc;
  const double cda = cez * da + dez * ac + aez * cd;
  const double dab = dez * ab + aez * bd + bez * da;

  const double alift = aex * aex + aey * aey + aez * aez;
  const double blift = bex * bex + bey * bey + bez * bez;
  const double clift = cex * cex + cey * cey + cez * cez;
  const double dlift = dex * dex + dey * dey + dez * dez;

  const double det = (dlift * abc - clift * dab) + (blift * cda - alift * bcd);

  const double aezplus = std::fabs(aez), bezplus = std::fabs(bez);
  const double cezplus = std::fabs(cez), dezplus = std::fabs(dez);
  const double aexbeyplus = std::fabs(aexbey), bexaeyplus = std::fabs(bexaey);
  const double bexceyplus = std::fabs(bexcey), cexbeyplus = std::fabs(cexbey);
  const double cexdeyplus = std::fabs(cexdey), dexceyplus = std::fabs(dexcey);
  const double dexaeyplus = std::fabs(dexaey), aexdeyplus = std::fabs(aexdey);
  const double aexceyplus = std::fabs(aexcey), cexaeyplus = std::fabs(cexaey);
  const double bexdeyplus = std::fabs(bexdey), dexbeyplus = std::fabs(dexbey);

  const double permanent =
      ((cexdeyplus + dexceyplus) * bezplus + (dexbeyplus + bexdeyplus) * cezplus +
       (bexceyplus + cexbeyplus) * dezplus) *
          alift +
      ((dexaeyplus + aexdeyplus) * cezplus + (aexceyplus + cexaeyplus) * dezplus +
       (cexdeyplus + dexceyplus) * aezplus) *
          blift +
      ((aexbeyplus + bexaeyplus) * dezplus + (bexdeyplus + dexbeyplus) * aezplus +
       (dexaeyplus + aexdeyplus) * bezplus) *
          clift +
      ((bexceyplus + cexbeyplus) * aezplus + (cexaeyplus + aexceyplus) * bezplus +
       (aexbeyplus + bexaeyplus) * cezplus) *
          dlift;
  const double errbound = detail::kInsphereBound * permanent;
  if (det > errbound || -det > errbound) return sign_of(det);

  bool certain = false;
  const Sign s = detail::insphere_interval(pa, pb, pc, pd, pe, certain);
  if (certain && s != kZero) return s;
  return detail::insphere_exact(pa, pb, pc, pd, pe);
}

// insphere with a deterministic symbolic tie-break for cospherical inputs.
// Each point carries a global id; ties are resolved as if the lifted
// coordinate of the point with the largest id were perturbed the most.
// Never returns kZero for five distinct points spanning 3D.
inline Sign insphere_perturbed(const double* pa, uint32_t ia, const double* pb, uint32_t ib,
                               const double* pc, uint32_t ic, const double* pd, uint32_t id,
                               const double* pe, uint32_t ie) {
  const Sign s = insphere(pa, pb, pc, pd, pe);
  if (s != kZero) return s;

  struct Row {
    const double* p;
    uint32_t id;
    int row;  // 0-based position in the determinant
  };
  std::array<Row, 5> rows = {{{pa, ia, 0}, {pb, ib, 1}, {pc, ic, 2}, {pd, id, 3}, {pe, ie, 4}}};
  // Highest id first: its perturbation dominates.
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) { return x.id > y.id; });

  const std::array<const double*, 5> in_order = {pa, pb, pc, pd, pe};
  for (const Row& r : rows) {
    std::array<const double*, 4> rest;
    int k = 0;
    for (int i = 0; i < 5; ++i)
      if (i != r.row) rest[k++] = in_order[i];
    // Cofactor of the lifted entry in row r (0-based row index, column 3).
    const Sign minor = orient3d(rest[0], rest[1], rest[2], rest[3]);
    if (minor != kZero) {
      const int parity = ((r.row + 3) % 2 == 0) ? 1 : -1;
      return static_cast<Sign>(parity * static_cast<int>(minor));
    }
  }
  return kZero;  // unreachable for non-coplanar (a,b,c,d)
}

// ---------------------------------------------------------------------------
// coincidence (value semantics: -0.0 == +0.0)

inline bool coincident_points_2d(const double* pa, const double* pb) {
  return pa[0] == pb[0] && pa[1] == pb[1];
}

inline bool coincident_points_3d(const double* pa, const double* pb) {
  return pa[0] == pb[0] && pa[1] == pb[1] && pa[2] == pb[2];
}

}  // namespace polyvol
