#pragma once

#include <array>
#include <cstddef>

#include "forge/vec.hpp"

namespace forge {

/// Regular Cartesian node grid in 2 or 3 dimensions. Axes beyond `dim` are
/// collapsed to a single node so that 2D fields share the 3D storage layout
/// (x fastest, then y, then z). The last active axis (y in 2D, z in 3D) is
/// the build direction.
struct GridSpec {
  int dim = 3;
  std::array<double, 3> origin{0.0, 0.0, 0.0};
  std::array<double, 3> spacing{1.0, 1.0, 1.0};
  std::array<int, 3> counts{1, 1, 1};

  // Node counts per axis; box [lo, hi] spanned inclusively, spacing = extent/(n-1).
  static GridSpec from_box(int dim, const Vec3& lo, const Vec3& hi,
                           const std::array<int, 3>& node_counts);

  void validate() const;  // throws std::invalid_argument on violated invariants

  int up_axis() const { return dim - 1; }

  std::size_t node_count() const {
    return static_cast<std::size_t>(counts[0]) * counts[1] * counts[2];
  }

  std::size_t index(int i, int j, int k) const {
    return static_cast<std::size_t>(i) +
           static_cast<std::size_t>(counts[0]) *
               (static_cast<std::size_t>(j) + static_cast<std::size_t>(counts[1]) * k);
  }

  void unpack(std::size_t idx, int& i, int& j, int& k) const {
    i = static_cast<int>(idx % counts[0]);
    idx /= counts[0];
    j = static_cast<int>(idx % counts[1]);
    k = static_cast<int>(idx / counts[1]);
  }

  double coord(int axis, int node) const { return origin[axis] + spacing[axis] * node; }

  Vec3 position(int i, int j, int k) const {
    return {coord(0, i), coord(1, j), dim == 3 ? coord(2, k) : 0.0};
  }

  double min_spacing() const {
    double h = spacing[0];
    for (int a = 1; a < dim; ++a) h = h < spacing[a] ? h : spacing[a];
    return h;
  }

  double cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim; ++a) v *= spacing[a];
    return v;
  }

  Vec3 box_min() const { return {origin[0], origin[1], dim == 3 ? origin[2] : 0.0}; }
  Vec3 box_max() const {
    return {coord(0, counts[0] - 1), coord(1, counts[1] - 1),
            dim == 3 ? coord(2, counts[2] - 1) : 0.0};
  }

  double domain_diagonal() const;

  bool operator==(const GridSpec& o) const {
    return dim == o.dim && origin == o.origin && spacing == o.spacing && counts == o.counts;
  }
};

}  // namespace forge
