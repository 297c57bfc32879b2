#include "beamlattice/mode_solver.hpp"

#include "beamlattice/parallel.hpp"

#include <Eigen/LU>

#include <algorithm>

namespace beamlattice {

LoadSpec LoadSpec::zeros(int n) {
  if (n < 1) throw InvalidArgument("LoadSpec: grid size must be >= 1");
  return {GridFunction::zeros(n, 2, Domain::frequency), GridFunction::zeros(n, 1, Domain::frequency)};
}

LoadSpec LoadSpec::from_spatial(const GridFunction& f, const GridFunction& tau) {
  if (f.dim() != 2 || tau.dim() != 1) throw InvalidArgument("LoadSpec: force must have dim 2 and torque dim 1");
  if (f.n() != tau.n()) throw InvalidArgument("LoadSpec: force and torque grids differ in size");
  return {dft(f), dft(tau)};
}

void LoadSpec::validate() const {
  if (f_hat.empty() || f_hat.dim() != 2) throw InvalidArgument("LoadSpec: f_hat must be a non-empty dim-2 grid");
  if (tau_hat.dim() != 1) throw InvalidArgument("LoadSpec: tau_hat must be a dim-1 grid");
  if (tau_hat.n() != f_hat.n()) throw InvalidArgument("LoadSpec: f_hat and tau_hat differ in size");
  if (f_hat.domain() != Domain::frequency || tau_hat.domain() != Domain::frequency)
    throw InvalidArgument("LoadSpec: loads must be frequency grids");
}

FieldGrid SolutionField::spatial_complex() const { return {idft(u_hat), idft(theta_hat)}; }

FieldGrid SolutionField::spatial() const {
  const FieldGrid z = spatial_complex();
  return {real_part_checked(z.u), real_part_checked(z.theta)};
}

Vector3c solve_mode(const ModeSymbol<double>& sym, const Vector3c& rhs, SolvePath path, double zero_tol) {
  if (sym.mode.is_zero()) {
    const double fnorm = rhs.head<2>().norm();
    if (fnorm > zero_tol)
      throw CompatibilityError("solve_mode: zero-mode force must vanish, got |f| = " + std::to_string(fnorm));
    if (!(sym.c > 0.0)) throw SingularError("solve_mode: zero-mode rotation entry is not positive");
    return Vector3c(0.0, 0.0, rhs(2) / sym.c);
  }
  if (path == SolvePath::direct) {
    Eigen::FullPivLU<Matrix3c> lu(sym.matrix());
    if (!lu.isInvertible())
      throw SingularError("solve_mode: singular block at mode (" + std::to_string(sym.mode.ip) + ", " +
                          std::to_string(sym.mode.jp) + ")");
    return lu.solve(rhs);
  }
  const SchurBlock<double> s = schur(sym);
  const Eigen::Vector2cd g = s.reduced_force(rhs.head<2>(), rhs(2));
  Eigen::PartialPivLU<Matrix2> lu(s.b_mat);
  Vector3c x;
  x.head<2>() = lu.solve(g.real()).cast<cplx>() + cplx(0.0, 1.0) * lu.solve(g.imag()).cast<cplx>();
  x(2) = s.rotation(rhs(2), x.head<2>());
  return x;
}

double mode_residual(const ModeSymbol<double>& sym, const Vector3c& x, const Vector3c& rhs) {
  const double r = (sym.matrix() * x - rhs).norm();
  const double scale = rhs.norm();
  return scale > 0.0 ? r / scale : r;
}

SolutionField solve_field(const LatticeSpec& spec, const LoadSpec& loads, SymbolKind kind,
                          const FieldSolveOptions& opts) {
  loads.validate();
  spec.validate();
  const int n = loads.n();
  const double eps = 1.0 / n;
  const FrequencySet freq(n);
  const auto& modes = freq.modes();

  const double load_scale =
      std::max(loads.f_hat.values().cwiseAbs().maxCoeff(), loads.tau_hat.values().cwiseAbs().maxCoeff());
  const double zero_tol = opts.compat_tol * load_scale;

  SolutionField out{GridFunction::zeros(n, 2, Domain::frequency), GridFunction::zeros(n, 1, Domain::frequency), kind,
                    0.0};
  std::vector<double> residuals(modes.size(), 0.0);
  parallel_for(modes.size(), [&](std::size_t k) {
    const FreqIndex m = modes[k];
    const ModeSymbol<double> sym = symbol<double>(spec, m, eps, kind, opts.km_check);
    Vector3c rhs;
    rhs.head<2>() = loads.f_hat.at(m);
    rhs(2) = loads.tau_hat.at(m)(0);
    const Vector3c x = solve_mode(sym, rhs, opts.path, zero_tol);
    out.u_hat.at(m) = x.head<2>();
    out.theta_hat.at(m)(0) = x(2);
    if (!m.is_zero()) residuals[k] = mode_residual(sym, x, rhs);
  });
  for (const double r : residuals) out.max_residual = std::max(out.max_residual, r);
  return out;
}

FieldErrors field_errors(const SolutionField& a, const SolutionField& b, const std::vector<double>& orders) {
  if (a.n() != b.n() || a.n() == 0) throw InvalidArgument("field_errors: solutions live on different grids");
  GridFunction du = a.u_hat;
  du.values() -= b.u_hat.values();
  GridFunction dt = a.theta_hat;
  dt.values() -= b.theta_hat.values();

  const double zscale = std::max({1.0, a.theta_hat.at(FreqIndex{}).norm(), a.u_hat.at(FreqIndex{}).norm()});
  if (du.at(FreqIndex{}).norm() > 1e-12 * zscale || dt.at(FreqIndex{}).norm() > 1e-12 * zscale)
    throw InvalidArgument("field_errors: zero modes of the two solutions differ");

  FieldErrors e;
  e.u_l2 = l2_norm(du);
  e.theta_l2 = l2_norm(dt);
  for (const double s : orders) e.seminorms.push_back({s, hs_seminorm(du, s), hs_seminorm(dt, s)});
  return e;
}

}  // namespace beamlattice
