#pragma once

#include "forge/field.hpp"

namespace forge {

/// Below this gradient magnitude the normal direction is considered
/// degenerate: curvature reports 0 and speed evaluation blocks the node.
inline constexpr double kGradFloor = 1e-6;

/// Second-order central differences in the interior, first-order one-sided
/// at grid faces. Inactive axes contribute 0.
Vec3 gradient_central(const ScalarField& field, int i, int j, int k);

/// Godunov approximation of |grad u| for motion with non-negative normal
/// speed: per axis max(D-,0)^2 + min(D+,0)^2 summed, then sqrt. Missing
/// one-sided differences at grid faces contribute 0.
double upwind_gradient_magnitude(const ScalarField& field, int i, int j, int k);

/// Divergence of the normalized gradient, written out with central
/// differences (index-clamped at faces). Returns 0 where |grad u| falls
/// below kGradFloor. Result is clamped to +-1/min_spacing: finer structure
/// is not resolvable on the grid. Positive on convex regions; a radius-r
/// sphere SDF gives (dim-1)/r.
double mean_curvature(const ScalarField& field, int i, int j, int k);

}  // namespace forge
