#ifndef BEAMLATTICE_BEAM_HPP
#define BEAMLATTICE_BEAM_HPP

#include "beamlattice/core.hpp"

#include <cstdint>

namespace beamlattice {

/// Euler-Bernoulli beam with stiffnesses scaled by length:
/// axial S = gamma * rho* * l, bending H = gamma * l^3.
struct BeamParams {
  double rho_star = 1.0;
  double gamma = 1.0;
  double length = 1.0;

  double axial() const { return gamma * rho_star * length; }
  double bending() const { return gamma * length * length * length; }
  void validate() const;
};

using Matrix6 = Eigen::Matrix<double, 6, 6>;
using Vector6 = Eigen::Matrix<double, 6, 1>;
using Vector4 = Eigen::Matrix<double, 4, 1>;

/// 6x6 element stiffness. Local dofs are (vx, vy, theta) at the start node
/// then at the end node, with x along the beam and y along its +90 degree
/// rotation; global dofs are (ux, uy, theta) per node.
struct ElementStiffness {
  Matrix6 local;
  Matrix6 global;
  Matrix6 to_local;  ///< maps global dofs to local dofs
  Vector2 direction;
  double length = 0.0;

  double energy(const Vector6& global_dofs) const { return 0.5 * global_dofs.dot(global * global_dofs); }
};

/// The transverse 4x4 bending matrix on (vy_start, theta_start, vy_end, theta_end).
Eigen::Matrix4d bending_matrix(double length);

ElementStiffness element_stiffness(const BeamParams& p, const Vector2& direction);

/// The bending quadratic form w . K_nu w and its two-square rewriting
/// L^2 (t0 - t1)^2 + 3 L^2 (2 v0 / L - 2 v1 / L + t0 + t1)^2.
double bending_form(const Vector4& w, double length);
double bending_form_two_squares(const Vector4& w, double length);

/// Largest relative gap between the two bending forms over `trials`
/// random transverse dof vectors.
double energy_identities_check(const BeamParams& p, int trials = 1000, std::uint64_t seed = 7);

}  // namespace beamlattice

#endif  // BEAMLATTICE_BEAM_HPP
