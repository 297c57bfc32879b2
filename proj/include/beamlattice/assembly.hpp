#ifndef BEAMLATTICE_ASSEMBLY_HPP
#define BEAMLATTICE_ASSEMBLY_HPP

#include "beamlattice/beam.hpp"
#include "beamlattice/grid.hpp"
#include "beamlattice/lattice.hpp"

namespace beamlattice {

/// Real-space stiffness of an N x N periodic beam lattice, beam length 1/N,
/// gamma = 1. Dof ordering is 3 * (i * N + j) + {0: ux, 1: uy, 2: theta}.
struct AssembledSystem {
  LatticeSpec spec;
  int n = 0;
  Eigen::MatrixXd stiffness;

  double eps() const { return 1.0 / n; }
  /// Nodal loads are eps^2 * gamma * (f, tau).
  double rhs_scale() const { return eps() * eps(); }
  Eigen::Index dof_count() const { return 3 * static_cast<Eigen::Index>(n) * n; }
  BeamParams beam_params() const { return {spec.rho_star, 1.0, eps()}; }
};

AssembledSystem assemble_lattice(const LatticeSpec& spec, int n);
inline AssembledSystem assemble_triangular(int n, double rho_star) {
  return assemble_lattice(LatticeSpec::triangular(rho_star), n);
}

/// Packs (u, theta) into the assembled dof ordering and back.
Eigen::VectorXcd pack_dofs(const FieldGrid& field);
FieldGrid unpack_dofs(const Eigen::VectorXcd& dofs, int n, Domain domain = Domain::spatial);

/// Sum over beams of element energies for a real dof vector.
double energy_by_beams(const AssembledSystem& sys, const Eigen::VectorXd& dofs);

/// Pseudo-inverse equilibrium solver on the complement of the rigid
/// translation kernel.
class DenseEquilibriumSolver {
 public:
  explicit DenseEquilibriumSolver(const AssembledSystem& sys, double kernel_tol = 1e-10);

  int kernel_dimension() const { return kernel_dim_; }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

  /// Equilibrium for body force f (2-vectors) and torque tau (scalars) given
  /// as spatial grids. Throws CompatibilityError when sum f != 0. The
  /// returned displacement has zero mean.
  FieldGrid solve(const GridFunction& f, const GridFunction& tau) const;

  /// Relative residual ||K x - rhs|| / ||rhs|| of the last solve.
  double last_residual() const { return last_residual_; }

 private:
  AssembledSystem sys_;
  Eigen::MatrixXd eigenvectors_;
  Eigen::VectorXd eigenvalues_;
  int kernel_dim_ = 0;
  double cutoff_ = 0.0;
  mutable double last_residual_ = 0.0;
};

/// One-shot convenience wrapper around DenseEquilibriumSolver.
FieldGrid dense_solve(const AssembledSystem& sys, const GridFunction& f, const GridFunction& tau);

}  // namespace beamlattice

#endif  // BEAMLATTICE_ASSEMBLY_HPP
