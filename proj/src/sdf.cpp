#include "forge/sdf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace forge {

SdfFn sdf_sphere(const Vec3& center, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("sdf_sphere: radius must be positive");
  return [center, radius](const Vec3& p) { return norm(p - center) - radius; };
}

SdfFn sdf_box(const Vec3& lo, const Vec3& hi) {
  for (int a = 0; a < 3; ++a)
    if (!(lo[a] < hi[a])) throw std::invalid_argument("sdf_box: requires lo < hi componentwise");
  const Vec3 c = (lo + hi) * 0.5;
  const Vec3 half = (hi - lo) * 0.5;
  return [c, half](const Vec3& p) {
    const Vec3 q{std::fabs(p.x - c.x) - half.x, std::fabs(p.y - c.y) - half.y,
                 std::fabs(p.z - c.z) - half.z};
    const Vec3 outside = cwise_max(q, Vec3{});
    const double inside = std::min(std::max({q.x, q.y, q.z}), 0.0);
    return norm(outside) + inside;
  };
}

SdfFn sdf_union(SdfFn a, SdfFn b) {
  return [a = std::move(a), b = std::move(b)](const Vec3& p) { return std::min(a(p), b(p)); };
}

SdfFn sdf_union(std::vector<SdfFn> parts) {
  if (parts.empty()) throw std::invalid_argument("sdf_union: no parts");
  return [parts = std::move(parts)](const Vec3& p) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& f : parts) d = std::min(d, f(p));
    return d;
  };
}

namespace {

double point_segment_distance2(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const Vec2 ap = p - a;
  const double len2 = norm2(ab);
  const double t = len2 > 0.0 ? std::clamp(dot(ap, ab) / len2, 0.0, 1.0) : 0.0;
  const Vec2 cp = a + ab * t;
  return norm2(p - cp);
}

bool segments_properly_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  const double d1 = cross_z(b - a, c - a);
  const double d2 = cross_z(b - a, d - a);
  const double d3 = cross_z(d - c, a - c);
  const double d4 = cross_z(d - c, b - c);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}  // namespace

SdfFn sdf_2d_profile(const std::vector<Vec2>& polygon) {
  const std::size_t n = polygon.size();
  if (n < 3) throw std::invalid_argument("sdf_2d_profile: polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = polygon[i];
    const Vec2 b = polygon[(i + 1) % n];
    if (norm2(b - a) == 0.0)
      throw std::invalid_argument("sdf_2d_profile: repeated consecutive vertex");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // skip edges sharing a vertex
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segments_properly_intersect(polygon[i], polygon[(i + 1) % n], polygon[j],
                                      polygon[(j + 1) % n]))
        throw std::invalid_argument("sdf_2d_profile: polygon self-intersects");
    }
  }

  return [polygon](const Vec3& p3) {
    const Vec2 p{p3.x, p3.y};
    const std::size_t m = polygon.size();
    double d2 = std::numeric_limits<double>::infinity();
    bool inside = false;
    for (std::size_t i = 0, j = m - 1; i < m; j = i++) {
      const Vec2 a = polygon[j];
      const Vec2 b = polygon[i];
      d2 = std::min(d2, point_segment_distance2(p, a, b));
      // even-odd crossing rule
      if ((b.y > p.y) != (a.y > p.y)) {
        const double x_cross = b.x + (p.y - b.y) / (a.y - b.y) * (a.x - b.x);
        if (p.x < x_cross) inside = !inside;
      }
    }
    const double d = std::sqrt(d2);
    return inside ? -d : d;
  };
}

}  // namespace forge
