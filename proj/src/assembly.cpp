#include "beamlattice/assembly.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace beamlattice {
namespace {

constexpr int kRigidTranslations = 2;

std::array<Eigen::Index, 6> beam_dofs(int n, int i, int j, const BeamStencil<double>& b) {
  const Eigen::Index a = 3 * (static_cast<Eigen::Index>(wrap(i, n)) * n + wrap(j, n));
  const Eigen::Index c = 3 * (static_cast<Eigen::Index>(wrap(i + b.di, n)) * n + wrap(j + b.dj, n));
  return {a, a + 1, a + 2, c, c + 1, c + 2};
}

}  // namespace

AssembledSystem assemble_lattice(const LatticeSpec& spec, int n) {
  if (n < 2) throw InvalidArgument("assemble_lattice: grid size must be at least 2");
  spec.validate();
  AssembledSystem sys{spec, n, {}};
  sys.stiffness = Eigen::MatrixXd::Zero(sys.dof_count(), sys.dof_count());
  const BeamParams params = sys.beam_params();
  for (const auto& beam : spec.beams()) {
    const ElementStiffness el = element_stiffness(params, beam.direction);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto dofs = beam_dofs(n, i, j, beam);
        for (int r = 0; r < 6; ++r)
          for (int c = 0; c < 6; ++c) sys.stiffness(dofs[r], dofs[c]) += el.global(r, c);
      }
    }
  }
  return sys;
}

Eigen::VectorXcd pack_dofs(const FieldGrid& field) {
  const int n = field.n();
  Eigen::VectorXcd out(3 * static_cast<Eigen::Index>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Eigen::Index k = 3 * (static_cast<Eigen::Index>(i) * n + j);
      out.segment<2>(k) = field.u.at(i, j);
      out(k + 2) = field.theta.at(i, j)(0);
    }
  }
  return out;
}

FieldGrid unpack_dofs(const Eigen::VectorXcd& dofs, int n, Domain domain) {
  if (dofs.size() != 3 * static_cast<Eigen::Index>(n) * n)
    throw InvalidArgument("unpack_dofs: dof vector size does not match grid");
  FieldGrid out = FieldGrid::zeros(n, domain);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Eigen::Index k = 3 * (static_cast<Eigen::Index>(i) * n + j);
      out.u.at(i, j) = dofs.segment<2>(k);
      out.theta.at(i, j)(0) = dofs(k + 2);
    }
  }
  return out;
}

double energy_by_beams(const AssembledSystem& sys, const Eigen::VectorXd& dofs) {
  const BeamParams params = sys.beam_params();
  double total = 0.0;
  for (const auto& beam : sys.spec.beams()) {
    const ElementStiffness el = element_stiffness(params, beam.direction);
    for (int i = 0; i < sys.n; ++i) {
      for (int j = 0; j < sys.n; ++j) {
        const auto idx = beam_dofs(sys.n, i, j, beam);
        Vector6 v;
        for (int k = 0; k < 6; ++k) v(k) = dofs(idx[k]);
        total += el.energy(v);
      }
    }
  }
  return total;
}

DenseEquilibriumSolver::DenseEquilibriumSolver(const AssembledSystem& sys, double kernel_tol) : sys_(sys) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sys.stiffness);
  if (es.info() != Eigen::Success) throw SingularError("DenseEquilibriumSolver: eigendecomposition failed");
  eigenvalues_ = es.eigenvalues();
  eigenvectors_ = es.eigenvectors();
  cutoff_ = kernel_tol * eigenvalues_.cwiseAbs().maxCoeff();
  kernel_dim_ = 0;
  for (Eigen::Index k = 0; k < eigenvalues_.size(); ++k)
    if (eigenvalues_(k) <= cutoff_) ++kernel_dim_;
  if (kernel_dim_ != kRigidTranslations)
    throw SingularError("DenseEquilibriumSolver: expected a 2-dimensional kernel (rigid translations), found " +
                        std::to_string(kernel_dim_));
}

FieldGrid DenseEquilibriumSolver::solve(const GridFunction& f, const GridFunction& tau) const {
  const int n = sys_.n;
  if (f.n() != n || tau.n() != n || f.dim() != 2 || tau.dim() != 1)
    throw InvalidArgument("dense_solve: load grids must be N x N with force dim 2 and torque dim 1");
  if (f.domain() != Domain::spatial || tau.domain() != Domain::spatial)
    throw InvalidArgument("dense_solve: loads must be spatial");

  const Eigen::Vector2cd net = f.values().rowwise().sum();
  const double scale = f.values().cwiseAbs().sum();
  if (net.norm() > 1e-12 * scale)
    throw CompatibilityError("dense_solve: net force must vanish (zero-mode compatibility), got |sum f| = " +
                             std::to_string(net.norm()));

  Eigen::VectorXcd rhs = sys_.rhs_scale() * pack_dofs({f, tau});
  // Project out the two translation components; they are balanced by the
  // compatibility check up to round-off.
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(rhs.size());
  for (Eigen::Index k = 0; k < eigenvalues_.size(); ++k) {
    if (eigenvalues_(k) <= cutoff_) continue;
    const auto v = eigenvectors_.col(k);
    x += (v.cast<cplx>().dot(rhs) / eigenvalues_(k)) * v.cast<cplx>();
  }
  FieldGrid out = unpack_dofs(x, n);
  const Eigen::Vector2cd mean = out.u.values().rowwise().mean();
  out.u.values().colwise() -= mean;

  const Eigen::VectorXcd r = sys_.stiffness.cast<cplx>() * pack_dofs(out) - rhs;
  const double rn = rhs.norm();
  last_residual_ = rn > 0.0 ? r.norm() / rn : r.norm();
  return out;
}

FieldGrid dense_solve(const AssembledSystem& sys, const GridFunction& f, const GridFunction& tau) {
  return DenseEquilibriumSolver(sys).solve(f, tau);
}

}  // namespace beamlattice
