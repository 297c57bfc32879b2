#ifndef BEAMLATTICE_PDE_HPP
#define BEAMLATTICE_PDE_HPP

#include "beamlattice/grid.hpp"
#include "beamlattice/lattice.hpp"

#include <array>
#include <map>
#include <utility>

namespace beamlattice {

/// Multi-index (p, q) for the derivative d^p/dalpha^p d^q/dbeta^q.
using DerivOrder = std::pair<int, int>;

/// Periodic constant-coefficient operator on (u_x, u_y, theta):
///   sum_{(p,q)} C_pq d_alpha^p d_beta^q.
/// Its symbol at mode (i', j') is sum C_pq (2 pi i i')^p (2 pi i j')^q.
class DifferentialOperator {
 public:
  void add(DerivOrder order, const Eigen::Matrix3d& coeff);
  void add(int p, int q, int row, int col, double value);

  const std::map<DerivOrder, Eigen::Matrix3d>& terms() const { return terms_; }
  int order() const;

  Matrix3c symbol(FreqIndex mode) const;

 private:
  std::map<DerivOrder, Eigen::Matrix3d> terms_;
};

/// The homogenized operator [[A_H, b_H], [-b_H^T, c_H]] of a lattice,
/// written in lattice coordinates (alpha, beta). c_H is 12 per beam.
DifferentialOperator homogenized_operator(const LatticeSpec& spec);

/// A scalar-valued linear differential form acting on (u_x, u_y, theta).
using LinearForm = std::map<DerivOrder, Eigen::RowVector3d>;

/// Micropolar stress sigma(u, theta) as a 2x2 array of linear forms.
struct StressOperator {
  std::array<std::array<LinearForm, 2>, 2> entries;

  /// Symbol of sigma applied to the plane-wave amplitude `state` at `mode`.
  Eigen::Matrix2cd apply(FreqIndex mode, const Vector3c& state) const;
};

/// Rectangular-lattice stress
///   [[rho* dx ux,          12 dx uy - 12 theta],
///    [12 dy ux + 12 theta, rho* dy uy         ]].
StressOperator micropolar_stress(double rho_star);

/// Linear balance -div(sigma) (divergence over the first index) and angular
/// balance -(sigma_xy - sigma_yx), as one operator.
DifferentialOperator micropolar_balance(const StressOperator& sigma);
inline DifferentialOperator micropolar_balance(double rho_star) {
  return micropolar_balance(micropolar_stress(rho_star));
}

}  // namespace beamlattice

#endif  // BEAMLATTICE_PDE_HPP
