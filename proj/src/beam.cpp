#include "beamlattice/beam.hpp"

#include <cmath>
#include <random>

namespace beamlattice {

void BeamParams::validate() const {
  if (!(rho_star > 0.0)) throw InvalidArgument("BeamParams: rho_star must be positive");
  if (!(gamma > 0.0)) throw InvalidArgument("BeamParams: gamma must be positive");
  if (!(length > 0.0)) throw InvalidArgument("BeamParams: length must be positive");
}

Eigen::Matrix4d bending_matrix(double L) {
  Eigen::Matrix4d k;
  k << 12, 6 * L, -12, 6 * L,
       6 * L, 4 * L * L, -6 * L, 2 * L * L,
       -12, -6 * L, 12, -6 * L,
       6 * L, 2 * L * L, -6 * L, 4 * L * L;
  return k;
}

ElementStiffness element_stiffness(const BeamParams& p, const Vector2& direction) {
  p.validate();
  if (std::abs(direction.norm() - 1.0) > 1e-12)
    throw InvalidArgument("element_stiffness: direction must be a unit vector");

  const double L = p.length;
  ElementStiffness e;
  e.direction = direction;
  e.length = L;

  e.local.setZero();
  const double ka = p.axial() / L;
  e.local(0, 0) = ka;
  e.local(0, 3) = -ka;
  e.local(3, 0) = -ka;
  e.local(3, 3) = ka;
  const Eigen::Matrix4d kb = p.bending() / (L * L * L) * bending_matrix(L);
  constexpr int bend[4] = {1, 2, 4, 5};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) e.local(bend[r], bend[c]) = kb(r, c);

  const Vector2 t = perp(direction);
  Eigen::Matrix3d rot;
  rot << direction.x(), direction.y(), 0,
         t.x(), t.y(), 0,
         0, 0, 1;
  e.to_local.setZero();
  e.to_local.topLeftCorner<3, 3>() = rot;
  e.to_local.bottomRightCorner<3, 3>() = rot;
  e.global = e.to_local.transpose() * e.local * e.to_local;
  return e;
}

double bending_form(const Vector4& w, double length) { return w.dot(bending_matrix(length) * w); }

double bending_form_two_squares(const Vector4& w, double L) {
  const double d = w(1) - w(3);
  const double s = 2.0 * w(0) / L - 2.0 * w(2) / L + w(1) + w(3);
  return L * L * d * d + 3.0 * L * L * s * s;
}

double energy_identities_check(const BeamParams& p, int trials, std::uint64_t seed) {
  p.validate();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    Vector4 w;
    for (int k = 0; k < 4; ++k) w(k) = normal(rng);
    const double a = bending_form(w, p.length);
    const double b = bending_form_two_squares(w, p.length);
    // Both sides are sums of non-negative terms; scale by the matrix norm so
    // near-kernel samples do not blow the ratio up.
    const double scale = bending_matrix(p.length).norm() * w.squaredNorm();
    if (scale > 0.0) worst = std::max(worst, std::abs(a - b) / scale);
  }
  return worst;
}

}  // namespace beamlattice
