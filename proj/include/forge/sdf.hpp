#pragma once

#include <functional>
#include <vector>

#include "forge/vec.hpp"

namespace forge {

using SdfFn = std::function<double(const Vec3&)>;

/// Exact signed distance to a sphere (circle when evaluated with z = 0).
SdfFn sdf_sphere(const Vec3& center, double radius);

/// Exact signed distance to an axis-aligned box [lo, hi].
SdfFn sdf_box(const Vec3& lo, const Vec3& hi);

/// Pointwise minimum. Sign-correct everywhere; exact distance only outside
/// overlaps, so composite shapes should be reinitialized before use.
SdfFn sdf_union(SdfFn a, SdfFn b);
SdfFn sdf_union(std::vector<SdfFn> parts);

/// Exact signed distance to a simple closed polygon in the xy-plane
/// (z is ignored). Vertices are implicitly closed last-to-first.
/// Throws std::invalid_argument for < 3 vertices, repeated consecutive
/// points, or self-intersection.
SdfFn sdf_2d_profile(const std::vector<Vec2>& polygon);

}  // namespace forge
