#include "forge/operators.hpp"

#include <algorithm>
#include <cmath>

namespace forge {

namespace {

inline int clampi(int v, int hi) { return v < 0 ? 0 : (v > hi ? hi : v); }

}  // namespace

Vec3 gradient_central(const ScalarField& field, int i, int j, int k) {
  const GridSpec& g = field.grid;
  Vec3 grad;
  const int ids[3] = {i, j, k};
  for (int a = 0; a < g.dim; ++a) {
    const int n = g.counts[a];
    const int c = ids[a];
    int lo[3] = {i, j, k};
    int hi[3] = {i, j, k};
    double denom;
    if (c == 0) {
      hi[a] = 1;
      denom = g.spacing[a];
    } else if (c == n - 1) {
      lo[a] = n - 2;
      denom = g.spacing[a];
    } else {
      lo[a] = c - 1;
      hi[a] = c + 1;
      denom = 2.0 * g.spacing[a];
    }
    grad.set(a, (field.at(hi[0], hi[1], hi[2]) - field.at(lo[0], lo[1], lo[2])) / denom);
  }
  return grad;
}

double upwind_gradient_magnitude(const ScalarField& field, int i, int j, int k) {
  const GridSpec& g = field.grid;
  const double uc = field.at(i, j, k);
  double s = 0.0;
  const int ids[3] = {i, j, k};
  for (int a = 0; a < g.dim; ++a) {
    const int n = g.counts[a];
    const int c = ids[a];
    const double h = g.spacing[a];
    double dm = 0.0, dp = 0.0;
    if (c > 0) {
      int lo[3] = {i, j, k};
      lo[a] = c - 1;
      dm = (uc - field.at(lo[0], lo[1], lo[2])) / h;
    }
    if (c < n - 1) {
      int hi[3] = {i, j, k};
      hi[a] = c + 1;
      dp = (field.at(hi[0], hi[1], hi[2]) - uc) / h;
    }
    const double a_m = std::max(dm, 0.0);
    const double a_p = std::min(dp, 0.0);
    s += a_m * a_m + a_p * a_p;
  }
  return std::sqrt(s);
}

double mean_curvature(const ScalarField& field, int i, int j, int k) {
  const GridSpec& g = field.grid;
  const int nx = g.counts[0], ny = g.counts[1], nz = g.counts[2];
  const double hx = g.spacing[0], hy = g.spacing[1];

  const int im = clampi(i - 1, nx - 1), ip = clampi(i + 1, nx - 1);
  const int jm = clampi(j - 1, ny - 1), jp = clampi(j + 1, ny - 1);

  const double uc = field.at(i, j, k);
  const double uxm = field.at(im, j, k), uxp = field.at(ip, j, k);
  const double uym = field.at(i, jm, k), uyp = field.at(i, jp, k);

  const double ux = (uxp - uxm) / ((ip - im) * hx);
  const double uy = (uyp - uym) / ((jp - jm) * hy);
  const double uxx = (uxp - 2.0 * uc + uxm) / (hx * hx);
  const double uyy = (uyp - 2.0 * uc + uym) / (hy * hy);
  const double uxy = (field.at(ip, jp, k) - field.at(ip, jm, k) - field.at(im, jp, k) +
                      field.at(im, jm, k)) /
                     ((ip - im) * (jp - jm) * hx * hy);

  double kappa;
  double grad2;
  if (g.dim == 2) {
    grad2 = ux * ux + uy * uy;
    const double gmag = std::sqrt(grad2);
    if (gmag < kGradFloor) return 0.0;
    kappa = (uxx * uy * uy - 2.0 * ux * uy * uxy + uyy * ux * ux) / (grad2 * gmag);
  } else {
    const double hz = g.spacing[2];
    const int km = clampi(k - 1, nz - 1), kp = clampi(k + 1, nz - 1);
    const double uzm = field.at(i, j, km), uzp = field.at(i, j, kp);
    const double uz = (uzp - uzm) / ((kp - km) * hz);
    const double uzz = (uzp - 2.0 * uc + uzm) / (hz * hz);
    const double uxz = (field.at(ip, j, kp) - field.at(ip, j, km) - field.at(im, j, kp) +
                        field.at(im, j, km)) /
                       ((ip - im) * (kp - km) * hx * hz);
    const double uyz = (field.at(i, jp, kp) - field.at(i, jp, km) - field.at(i, jm, kp) +
                        field.at(i, jm, km)) /
                       ((jp - jm) * (kp - km) * hy * hz);
    grad2 = ux * ux + uy * uy + uz * uz;
    const double gmag = std::sqrt(grad2);
    if (gmag < kGradFloor) return 0.0;
    kappa = (uxx * (uy * uy + uz * uz) + uyy * (ux * ux + uz * uz) + uzz * (ux * ux + uy * uy) -
             2.0 * (ux * uy * uxy + ux * uz * uxz + uy * uz * uyz)) /
            (grad2 * gmag);
  }
  const double cap = 1.0 / g.min_spacing();
  return std::clamp(kappa, -cap, cap);
}

}  // namespace forge
