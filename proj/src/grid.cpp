#include "forge/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace forge {

GridSpec GridSpec::from_box(int dim, const Vec3& lo, const Vec3& hi,
                            const std::array<int, 3>& node_counts) {
  GridSpec g;
  g.dim = dim;
  for (int a = 0; a < 3; ++a) {
    if (a < dim) {
      g.origin[a] = lo[a];
      g.counts[a] = node_counts[a];
      if (node_counts[a] < 2 || !(hi[a] > lo[a]))
        throw std::invalid_argument("GridSpec: box/axis " + std::to_string(a) +
                                    " is degenerate");
      g.spacing[a] = (hi[a] - lo[a]) / (node_counts[a] - 1);
    } else {
      g.origin[a] = 0.0;
      g.spacing[a] = 1.0;
      g.counts[a] = 1;
    }
  }
  g.validate();
  return g;
}

void GridSpec::validate() const {
  if (dim != 2 && dim != 3) throw std::invalid_argument("GridSpec: dim must be 2 or 3");
  for (int a = 0; a < dim; ++a) {
    if (!(spacing[a] > 0.0) || !std::isfinite(spacing[a]))
      throw std::invalid_argument("GridSpec: spacing must be strictly positive on axis " +
                                  std::to_string(a));
    if (counts[a] < 3)
      throw std::invalid_argument("GridSpec: need at least 3 nodes on axis " +
                                  std::to_string(a));
    if (!std::isfinite(origin[a]))
      throw std::invalid_argument("GridSpec: non-finite origin on axis " + std::to_string(a));
  }
  for (int a = dim; a < 3; ++a) {
    if (counts[a] != 1)
      throw std::invalid_argument("GridSpec: inactive axis " + std::to_string(a) +
                                  " must have exactly one node");
  }
}

double GridSpec::domain_diagonal() const {
  double s = 0.0;
  for (int a = 0; a < dim; ++a) {
    const double e = spacing[a] * (counts[a] - 1);
    s += e * e;
  }
  return std::sqrt(s);
}

}  // namespace forge
