#pragma once

#include <functional>
#include <vector>

#include "forge/grid.hpp"

namespace forge {

/// Level-set function u sampled at grid nodes. Negative inside the object,
/// positive outside, zero on the surface.
struct ScalarField {
  GridSpec grid;
  std::vector<double> values;

  double at(int i, int j, int k) const { return values[grid.index(i, j, k)]; }
  double& at(int i, int j, int k) { return values[grid.index(i, j, k)]; }
};

/// Evaluate `init` at every node. Throws std::domain_error naming the node if
/// the initializer produces a non-finite value.
ScalarField make_field(const GridSpec& grid, const std::function<double(const Vec3&)>& init);

/// True iff some value is negative and some is non-negative (a zero crossing
/// can exist). Fields with exact zeros count as crossed.
bool has_sign_change(const ScalarField& field);

}  // namespace forge
