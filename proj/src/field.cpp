#include "forge/field.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace forge {

ScalarField make_field(const GridSpec& grid, const std::function<double(const Vec3&)>& init) {
  grid.validate();
  ScalarField f;
  f.grid = grid;
  f.values.resize(grid.node_count());
  std::size_t idx = 0;
  for (int k = 0; k < grid.counts[2]; ++k)
    for (int j = 0; j < grid.counts[1]; ++j)
      for (int i = 0; i < grid.counts[0]; ++i, ++idx) {
        const Vec3 p = grid.position(i, j, k);
        const double v = init(p);
        if (!std::isfinite(v)) {
          std::ostringstream msg;
          msg << "make_field: non-finite value " << v << " at node (" << i << "," << j << ","
              << k << ") position (" << p.x << "," << p.y << "," << p.z << ")";
          throw std::domain_error(msg.str());
        }
        f.values[idx] = v;
      }
  return f;
}

bool has_sign_change(const ScalarField& field) {
  bool any_neg = false, any_nonneg = false;
  for (double v : field.values) {
    if (v < 0.0) any_neg = true;
    else any_nonneg = true;
    if (any_neg && any_nonneg) return true;
  }
  return false;
}

}  // namespace forge
