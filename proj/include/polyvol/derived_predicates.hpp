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

// Derived predicates composed from the base ones. The *_proj variants
// evaluate a single coordinate-plane projection and are only meaningful
// when the caller guarantees all arguments are coplanar and the chosen
// projection is non-degenerate; the unsuffixed variants combine all three
// projections. Coplanarity prechecks noted per predicate are owned by the
// caller.

#include <vector>

#include "polyvol/generic_point.hpp"

namespace polyvol {

inline bool misaligned(const GenericPoint& p1, const GenericPoint& p2, const GenericPoint& p3) {
  return orient2d_proj(p1, p2, p3, 2) != kZero || orient2d_proj(p1, p2, p3, 0) != kZero ||
         orient2d_proj(p1, p2, p3, 1) != kZero;
}

namespace detail {

// The two coordinate axes spanning projection plane `axis`.
inline void proj_axes(int axis, int& u, int& v) {
  if (axis == 2) {
    u = 0;
    v = 1;
  } else if (axis == 0) {
    u = 1;
    v = 2;
  } else {
    u = 2;
    v = 0;
  }
}

inline bool strictly_between(const GenericPoint& p, const GenericPoint& v1,
                             const GenericPoint& v2, int coord) {
  const Sign a = compare_coord(v1, p, coord);
  const Sign b = compare_coord(p, v2, coord);
  return (a == kNegative && b == kNegative) || (a == kPositive && b == kPositive);
}

}  // namespace detail

inline bool point_in_inner_segment(const GenericPoint& p, const GenericPoint& v1,
                                   const GenericPoint& v2) {
  if (misaligned(p, v1, v2)) return false;
  return detail::strictly_between(p, v1, v2, 0) || detail::strictly_between(p, v1, v2, 1) ||
         detail::strictly_between(p, v1, v2, 2);
}

inline bool point_in_segment(const GenericPoint& p, const GenericPoint& v1,
                             const GenericPoint& v2) {
  return point_in_inner_segment(p, v1, v2) || same_point(p, v1) || same_point(p, v2);
}

namespace detail {

inline bool inner_segments_cross_one_proj(const GenericPoint& a, const GenericPoint& b,
                                          const GenericPoint& p, const GenericPoint& q,
                                          int axis) {
  const Sign pab = orient2d_proj(p, a, b, axis);
  const Sign qba = orient2d_proj(q, b, a, axis);
  const Sign apq = orient2d_proj(a, p, q, axis);
  const Sign bqp = orient2d_proj(b, q, p, axis);
  if (pab == kZero && qba == kZero && apq == kZero && bqp == kZero) return false;
  return pab == qba && apq == bqp;
}

}  // namespace detail

// Interiors of coplanar, non-collinear segments (a,b) and (p,q) cross.
// Caller checks coplanarity (orient3d(a,b,p,q) == 0) where not implied.
inline bool inner_segments_cross(const GenericPoint& a, const GenericPoint& b,
                                 const GenericPoint& p, const GenericPoint& q) {
  return detail::inner_segments_cross_one_proj(a, b, p, q, 2) ||
         detail::inner_segments_cross_one_proj(a, b, p, q, 0) ||
         detail::inner_segments_cross_one_proj(a, b, p, q, 1);
}

inline bool inner_segments_cross_proj(const GenericPoint& a, const GenericPoint& b,
                                      const GenericPoint& p, const GenericPoint& q, int axis) {
  return detail::inner_segments_cross_one_proj(a, b, p, q, axis);
}

namespace detail {

inline bool point_in_inner_triangle_one_proj(const GenericPoint& p, const GenericPoint& v1,
                                             const GenericPoint& v2, const GenericPoint& v3,
                                             int axis) {
  const Sign base = orient2d_proj(v1, v2, v3, axis);
  return orient2d_proj(p, v2, v3, axis) == base && orient2d_proj(p, v3, v1, axis) == base &&
         orient2d_proj(p, v1, v2, axis) == base;
}

}  // namespace detail

// Caller checks coplanarity via orient3d(p, v1, v2, v3) == 0.
inline bool point_in_inner_triangle(const GenericPoint& p, const GenericPoint& v1,
                                    const GenericPoint& v2, const GenericPoint& v3) {
  return detail::point_in_inner_triangle_one_proj(p, v1, v2, v3, 2) &&
         detail::point_in_inner_triangle_one_proj(p, v1, v2, v3, 0) &&
         detail::point_in_inner_triangle_one_proj(p, v1, v2, v3, 1);
}

inline bool point_in_triangle(const GenericPoint& p, const GenericPoint& v1,
                              const GenericPoint& v2, const GenericPoint& v3) {
  return point_in_segment(p, v1, v2) || point_in_segment(p, v2, v3) ||
         point_in_segment(p, v3, v1) || point_in_inner_triangle(p, v1, v2, v3);
}

// Single-projection variants for work inside a known plane.

inline bool point_coincident_proj(const GenericPoint& p, const GenericPoint& q, int axis) {
  int u, v;
  detail::proj_axes(axis, u, v);
  return compare_coord(p, q, u) == kZero && compare_coord(p, q, v) == kZero;
}

inline bool point_in_inner_segment_proj(const GenericPoint& p, const GenericPoint& v1,
                                        const GenericPoint& v2, int axis) {
  if (orient2d_proj(p, v1, v2, axis) != kZero) return false;
  int u, v;
  detail::proj_axes(axis, u, v);
  const auto between = [&](int coord) {
    const Sign a = compare_coord(v1, p, coord);
    const Sign b = compare_coord(p, v2, coord);
    return (a == kNegative && b == kNegative) || (a == kPositive && b == kPositive);
  };
  return between(u) || between(v);
}

inline bool point_in_segment_proj(const GenericPoint& p, const GenericPoint& v1,
                                  const GenericPoint& v2, int axis) {
  return point_in_inner_segment_proj(p, v1, v2, axis) || point_coincident_proj(p, v1, axis) ||
         point_coincident_proj(p, v2, axis);
}

inline bool point_in_inner_triangle_proj(const GenericPoint& p, const GenericPoint& v1,
                                         const GenericPoint& v2, const GenericPoint& v3,
                                         int axis) {
  return detail::point_in_inner_triangle_one_proj(p, v1, v2, v3, axis);
}

inline bool point_in_triangle_proj(const GenericPoint& p, const GenericPoint& v1,
                                   const GenericPoint& v2, const GenericPoint& v3, int axis) {
  return point_in_segment_proj(p, v1, v2, axis) || point_in_segment_proj(p, v2, v3, axis) ||
         point_in_segment_proj(p, v3, v1, axis) ||
         point_in_inner_triangle_proj(p, v1, v2, v3, axis);
}

// Interior of segment (u1,u2) crosses the interior of non-coplanar triangle
// (v1,v2,v3): endpoints strictly on opposite sides and all three wedge
// orientations agree strictly.
inline bool inner_segment_crosses_inner_triangle(const GenericPoint& u1, const GenericPoint& u2,
                                                 const GenericPoint& v1, const GenericPoint& v2,
                                                 const GenericPoint& v3) {
  const Sign s1 = orient3d(u1, v1, v2, v3);
  const Sign s2 = orient3d(u2, v1, v2, v3);
  if (s1 == kZero || s2 == kZero || s1 == s2) return false;
  const Sign w1 = orient3d(u1, u2, v1, v2);
  const Sign w2 = orient3d(u1, u2, v2, v3);
  if (w1 == kZero || w1 != w2) return false;
  const Sign w3 = orient3d(u1, u2, v3, v1);
  return w2 == w3;
}

// Interior of segment (u1,u2) meets the closed non-coplanar triangle.
inline bool inner_segment_crosses_triangle(const GenericPoint& u1, const GenericPoint& u2,
                                           const GenericPoint& v1, const GenericPoint& v2,
                                           const GenericPoint& v3) {
  return point_in_inner_segment(v1, u1, u2) || point_in_inner_segment(v2, u1, u2) ||
         point_in_inner_segment(v3, u1, u2) || inner_segments_cross(v2, v3, u1, u2) ||
         inner_segments_cross(v3, v1, u1, u2) || inner_segments_cross(v1, v2, u1, u2) ||
         inner_segment_crosses_inner_triangle(u1, u2, v1, v2, v3);
}

// ---------------------------------------------------------------------------
// Positive-area overlap of two coplanar triangles.
//
// The overlap region is convex; it has positive area iff three pairwise
// distinct, misaligned contact points exist. Contact points are vertices of
// one triangle inside the (closed) other plus proper edge-edge crossings;
// crossings are materialized as LPI points so the misalignment test stays
// exact. `off_plane` must be an explicit point not on the common plane.

inline bool coplanar_triangles_positive_overlap(const std::array<ExplicitPoint3, 3>& a,
                                                const std::array<ExplicitPoint3, 3>& b,
                                                const ExplicitPoint3& off_plane) {
  std::vector<GenericPoint> tokens;
  tokens.reserve(15);
  for (int i = 0; i < 3; ++i) {
    if (point_in_triangle(a[i], b[0], b[1], b[2])) tokens.emplace_back(a[i]);
    if (point_in_triangle(b[i], a[0], a[1], a[2])) tokens.emplace_back(b[i]);
  }
  for (int i = 0; i < 3; ++i) {
    const ExplicitPoint3 &a0 = a[i], &a1 = a[(i + 1) % 3];
    for (int j = 0; j < 3; ++j) {
      const ExplicitPoint3 &b0 = b[j], &b1 = b[(j + 1) % 3];
      if (inner_segments_cross(GenericPoint(a0), GenericPoint(a1), GenericPoint(b0),
                               GenericPoint(b1))) {
        tokens.emplace_back(LPIPoint{a0, a1, b0, b1, off_plane});
      }
    }
  }
  if (tokens.size() < 3) return false;
  // Find two distinct tokens, then any third not collinear with them.
  size_t second = 0;
  for (size_t i = 1; i < tokens.size(); ++i) {
    if (!same_point(tokens[0], tokens[i])) {
      second = i;
      break;
    }
  }
  if (second == 0) return false;
  for (size_t i = 1; i < tokens.size(); ++i) {
    if (i == second) continue;
    if (misaligned(tokens[0], tokens[second], tokens[i])) return true;
  }
  return false;
}

}  // namespace polyvol
