#include "beamlattice/experiments.hpp"

#include "beamlattice/identities.hpp"
#include "beamlattice/parallel.hpp"
#include "beamlattice/pde.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace beamlattice {
namespace {

template <typename Mat>
Mat adjugate_inverse(const Mat& m);

template <>
Matrix3c adjugate_inverse(const Matrix3c& m) {
  Matrix3c adj;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const int r1 = (c + 1) % 3, r2 = (c + 2) % 3;
      const int c1 = (r + 1) % 3, c2 = (r + 2) % 3;
      adj(r, c) = m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1);
    }
  }
  const cplx det = m(0, 0) * adj(0, 0) + m(0, 1) * adj(1, 0) + m(0, 2) * adj(2, 0);
  if (det == cplx(0.0, 0.0)) throw SingularError("invert: singular 3x3 matrix");
  return adj / det;
}

template <>
Matrix2 adjugate_inverse(const Matrix2& m) {
  const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (det == 0.0) throw SingularError("invert: singular 2x2 matrix");
  Matrix2 adj;
  adj << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return adj / det;
}

template <typename Mat>
Mat lu_inverse(const Mat& m) {
  Eigen::FullPivLU<Mat> lu(m);
  if (!lu.isInvertible()) throw SingularError("invert: singular matrix");
  return lu.inverse();
}

ModeSymbol<double> partner_symbol(const LatticeSpec& spec, FreqIndex mode, double eps, ModelPair pair) {
  if (pair == ModelPair::discrete_km) return symbol_km<double>(spec, mode, eps, KmCheck::nonsingular);
  return symbol_continuum<double>(spec, mode);
}

double spread(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi / *lo;
}

std::string join(const std::vector<double>& v) {
  std::ostringstream os;
  os.precision(6);
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k];
  return os.str();
}

std::vector<FreqIndex> nonzero_modes(int n) {
  std::vector<FreqIndex> out;
  for (const FreqIndex m : FrequencySet(n).modes())
    if (!m.is_zero()) out.push_back(m);
  return out;
}

}  // namespace

std::string_view to_string(ModelPair p) {
  return p == ModelPair::discrete_km ? "km" : "continuum";
}

ModelPair model_pair_from_string(std::string_view s) {
  if (s == "continuum" || s == "discrete-vs-continuum") return ModelPair::discrete_continuum;
  if (s == "km" || s == "discrete-vs-km") return ModelPair::discrete_km;
  throw InvalidArgument("unknown model pair '" + std::string(s) + "' (expected continuum or km)");
}

Matrix3c invert(const Matrix3c& m, InverseRoutine routine) {
  return routine == InverseRoutine::adjugate ? adjugate_inverse(m) : lu_inverse(m);
}

Matrix2 invert(const Matrix2& m, InverseRoutine routine) {
  return routine == InverseRoutine::adjugate ? adjugate_inverse(m) : lu_inverse(m);
}

double diff_index(const LatticeSpec& spec, FreqIndex mode, double eps, ModelPair pair, InverseRoutine routine) {
  if (mode.is_zero()) throw InvalidArgument("diff_index: undefined at the zero mode");
  const Matrix3c d = invert(symbol_discrete<double>(spec, mode, eps).matrix(), routine);
  const Matrix3c x = invert(partner_symbol(spec, mode, eps, pair).matrix(), routine);
  return spectral_norm(d - x);
}

void SweepConfig::validate() const {
  if (n_list.empty()) throw InvalidArgument("n_list: must not be empty");
  if (!std::is_sorted(n_list.begin(), n_list.end())) throw InvalidArgument("n_list: must be sorted ascending");
  if (n_list.front() < 2) throw InvalidArgument("n_list: grid sizes must be >= 2");
  if (rho_list.empty()) throw InvalidArgument("rho_star: list must not be empty");
  for (const double r : rho_list)
    if (!(r > 0.0)) throw InvalidArgument("rho_star: values must be positive");
  if (cutoff < 1) throw InvalidArgument("cutoff: must be >= 1");
  if (pair == ModelPair::discrete_km && family != LatticeFamily::triangular)
    throw InvalidArgument("model: the km comparison needs the triangular lattice");
}

SweepReport max_diff_sweep(const SweepConfig& cfg) {
  cfg.validate();
  SweepReport rep{cfg, {}};
  for (const double rho : cfg.rho_list) {
    const LatticeSpec spec{cfg.family, rho};
    for (const int n : cfg.n_list) {
      const double eps = 1.0 / n;
      const std::vector<FreqIndex> modes = nonzero_modes(n);
      std::vector<double> vals(modes.size());
      parallel_for(modes.size(), [&](std::size_t k) { vals[k] = diff_index(spec, modes[k], eps, cfg.pair); });
      SweepRow row;
      row.n = n;
      row.rho_star = rho;
      for (std::size_t k = 0; k < modes.size(); ++k) {
        if (vals[k] > row.max_full) {
          row.max_full = vals[k];
          row.argmax_full = modes[k];
        }
        if (modes[k].l1() <= cfg.cutoff && vals[k] > row.max_low) {
          row.max_low = vals[k];
          row.argmax_low = modes[k];
        }
      }
      rep.rows.push_back(row);
    }
  }
  return rep;
}

std::array<double, 3> err_indices(const LatticeSpec& spec, FreqIndex mode, double eps, InverseRoutine routine) {
  if (mode.is_zero()) throw InvalidArgument("err_indices: undefined at the zero mode");
  const SchurBlock<double> d = schur(symbol_discrete<double>(spec, mode, eps));
  const SchurBlock<double> c = schur(symbol_continuum<double>(spec, mode));
  const Matrix2 di = invert(d.b_mat, routine);
  const Matrix2 ci = invert(c.b_mat, routine);
  const double e2 = eps * eps;

  const double err0 = spectral_norm(di - ci) / e2;
  // B^{-1} b / c = i B^{-1} beta / c
  const Vector2 vd = di * d.b_im / d.c;
  const Vector2 vc = ci * c.b_im / c.c;
  const double err1 = (vd - vc).norm() / e2 / mode.l1();
  // b . B^{-1} b = -beta^T B^{-1} beta (bilinear)
  const double qd = d.b_im.dot(di * d.b_im);
  const double qc = c.b_im.dot(ci * c.b_im);
  const double err2 =
      std::abs(1.0 / d.c - 1.0 / c.c + qd / (d.c * d.c) - qc / (c.c * c.c)) / e2 / mode.radius_sq();
  return {err0, err1, err2};
}

void ErrMapConfig::validate() const {
  if (n_list.empty()) throw InvalidArgument("n_list: must not be empty");
  for (const int n : n_list)
    if (n < 3) throw InvalidArgument("n_list: grid sizes must be >= 3 for the zero-mode fill");
  if (rho_list.empty()) throw InvalidArgument("rho_star: list must not be empty");
  for (const double r : rho_list)
    if (!(r > 0.0)) throw InvalidArgument("rho_star: values must be positive");
}

ErrMap err_map(const LatticeSpec& spec, int n) {
  if (n < 3) throw InvalidArgument("err_map: grid size must be >= 3");
  const double eps = 1.0 / n;
  const std::vector<FreqIndex> modes = nonzero_modes(n);
  std::vector<std::array<double, 3>> vals(modes.size());
  parallel_for(modes.size(), [&](std::size_t k) { vals[k] = err_indices(spec, modes[k], eps); });

  ErrMap map;
  map.n = n;
  map.rho_star = spec.rho_star;
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  for (int e = 0; e < 3; ++e) {
    map.values[e].assign(cells, 0.0);
    map.min[e] = std::numeric_limits<double>::infinity();
    map.max[e] = 0.0;
  }
  for (std::size_t k = 0; k < modes.size(); ++k) {
    const std::size_t slot = wrap(modes[k].ip, n) * n + wrap(modes[k].jp, n);
    for (int e = 0; e < 3; ++e) {
      map.values[e][slot] = vals[k][e];
      map.min[e] = std::min(map.min[e], vals[k][e]);
      map.max[e] = std::max(map.max[e], vals[k][e]);
    }
  }
  for (int e = 0; e < 3; ++e) {
    const double fill =
        (map.at(e, {0, 1}) + map.at(e, {1, 0}) + map.at(e, {0, -1}) + map.at(e, {-1, 0})) / 4.0;
    map.values[e][0] = fill;
  }
  return map;
}

ErrMapReport err_maps(const ErrMapConfig& cfg) {
  cfg.validate();
  ErrMapReport rep{cfg, {}};
  for (const int n : cfg.n_list)
    for (const double rho : cfg.rho_list) rep.maps.push_back(err_map(LatticeSpec{cfg.family, rho}, n));
  return rep;
}

CoercivityRow coercivity_min(const LatticeSpec& spec, int n, SymbolKind kind) {
  const double eps = 1.0 / n;
  const std::vector<FreqIndex> modes = nonzero_modes(n);
  std::vector<double> vals(modes.size());
  parallel_for(modes.size(), [&](std::size_t k) { vals[k] = lambda_min_ratio<double>(spec, modes[k], eps, kind); });
  CoercivityRow row{n, spec.rho_star, std::numeric_limits<double>::infinity(), {}};
  for (std::size_t k = 0; k < modes.size(); ++k) {
    if (vals[k] < row.min_ratio) {
      row.min_ratio = vals[k];
      row.argmin = modes[k];
    }
  }
  return row;
}

double inverse_difference_max(const LatticeSpec& spec, int n) {
  const double eps = 1.0 / n;
  const std::vector<FreqIndex> modes = nonzero_modes(n);
  std::vector<double> vals(modes.size());
  parallel_for(modes.size(), [&](std::size_t k) {
    const Matrix2 d = invert(schur(symbol_discrete<double>(spec, modes[k], eps)).b_mat);
    const Matrix2 c = invert(schur(symbol_continuum<double>(spec, modes[k])).b_mat);
    vals[k] = spectral_norm(d - c) / (eps * eps);
  });
  return *std::max_element(vals.begin(), vals.end());
}

LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw InvalidArgument("fit_loglog: x and y differ in length");
  if (x.size() < 2) throw InvalidArgument("fit_loglog: need at least two points");
  const Eigen::Index m = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd a(m, 2);
  Eigen::VectorXd b(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    if (!(x[k] > 0.0) || !(y[k] > 0.0)) throw InvalidArgument("fit_loglog: values must be positive");
    a(k, 0) = std::log(x[k]);
    a(k, 1) = 1.0;
    b(k) = std::log(y[k]);
  }
  const Eigen::Vector2d p = a.colPivHouseholderQr().solve(b);
  const Eigen::VectorXd r = a * p - b;
  return {p(0), p(1), std::sqrt(r.squaredNorm() / static_cast<double>(m)), static_cast<int>(m)};
}

std::string_view to_string(LoadFamily f) {
  switch (f) {
    case LoadFamily::force_single_mode:
      return "force-single-mode";
    case LoadFamily::torque_single_mode:
      return "torque-single-mode";
    case LoadFamily::mixed_single_mode:
      return "mixed-single-mode";
    case LoadFamily::force_scaled_mode:
      return "force-scaled-mode";
    case LoadFamily::zero:
      return "zero";
  }
  return "unknown";
}

LoadFamily load_family_from_string(std::string_view s) {
  for (const LoadFamily f : {LoadFamily::force_single_mode, LoadFamily::torque_single_mode,
                             LoadFamily::mixed_single_mode, LoadFamily::force_scaled_mode, LoadFamily::zero})
    if (to_string(f) == s) return f;
  if (s == "a") return LoadFamily::force_single_mode;
  if (s == "b") return LoadFamily::torque_single_mode;
  if (s == "c") return LoadFamily::mixed_single_mode;
  if (s == "d") return LoadFamily::force_scaled_mode;
  throw InvalidArgument("unknown load family '" + std::string(s) + "'");
}

LoadSpec family_load(LoadFamily family, int n) {
  if (n < 4) throw InvalidArgument("family_load: grid size must be >= 4");
  LoadSpec load = LoadSpec::zeros(n);
  if (family == LoadFamily::zero) return load;
  const FreqIndex m = family == LoadFamily::force_scaled_mode ? FreqIndex{n / 4, 0} : FreqIndex{1, 0};
  const FreqIndex neg{-m.ip, -m.jp};
  Eigen::Vector2cd f = Eigen::Vector2cd::Zero();
  cplx tau(0.0, 0.0);
  switch (family) {
    case LoadFamily::force_single_mode:
    case LoadFamily::force_scaled_mode:
      f(0) = 1.0;
      break;
    case LoadFamily::torque_single_mode:
      tau = 1.0;
      break;
    case LoadFamily::mixed_single_mode:
      f << 1.0, 1.0;
      tau = 1.0;
      break;
    case LoadFamily::zero:
      break;
  }
  // Real amplitudes on a conjugate pair give a real spatial load.
  load.f_hat.at(m) = f;
  load.tau_hat.at(m)(0) = tau;
  load.f_hat.at(neg) = f.conjugate();
  load.tau_hat.at(neg)(0) = std::conj(tau);
  return load;
}

ConvergenceReport convergence_study(LoadFamily family, ModelPair pair, const std::vector<int>& n_list,
                                    const LatticeSpec& spec) {
  if (n_list.size() < 4) throw InvalidArgument("convergence_study: need at least 4 grid sizes");
  if (!std::is_sorted(n_list.begin(), n_list.end())) throw InvalidArgument("n_list: must be sorted ascending");
  ConvergenceReport rep;
  rep.family = family;
  rep.pair = pair;
  rep.rho_star = spec.rho_star;
  switch (family) {
    case LoadFamily::force_single_mode:
      rep.measured = "u_l2";
      rep.load = "||f||_0 fixed, tau = 0";
      break;
    case LoadFamily::torque_single_mode:
      rep.measured = "u_l2";
      rep.load = "f = 0, |tau|_1 fixed";
      break;
    case LoadFamily::mixed_single_mode:
      rep.measured = "theta_l2";
      rep.load = "|f|_1 and |tau|_2 fixed";
      break;
    case LoadFamily::force_scaled_mode:
      rep.measured = "u_h1";
      rep.load = "||f||_0 fixed at mode (N/4, 0), tau = 0";
      break;
    case LoadFamily::zero:
      rep.measured = "u_l2";
      rep.load = "f = 0, tau = 0";
      break;
  }

  FieldSolveOptions partner_opts;
  SymbolKind partner = SymbolKind::continuum;
  if (pair == ModelPair::discrete_km) {
    partner = SymbolKind::kumar_mcdowell;
    partner_opts.path = SolvePath::direct;
    partner_opts.km_check = KmCheck::nonsingular;
  }

  std::vector<double> xs, ys;
  for (const int n : n_list) {
    const LoadSpec load = family_load(family, n);
    const SolutionField d = solve_field(spec, load, SymbolKind::discrete);
    const SolutionField c = solve_field(spec, load, partner, partner_opts);
    const FieldErrors e = field_errors(d, c, {1.0});
    double err = e.u_l2;
    if (family == LoadFamily::mixed_single_mode) err = e.theta_l2;
    if (family == LoadFamily::force_scaled_mode) err = e.seminorms.front().u;
    rep.points.push_back({n, 1.0 / n, err});
    if (err > 0.0) {
      xs.push_back(1.0 / n);
      ys.push_back(err);
    }
  }
  if (xs.empty()) {
    rep.exact = true;
    return rep;
  }
  if (xs.size() < 4) throw InvalidArgument("convergence_study: fewer than 4 usable eps points");
  rep.fit = fit_loglog(xs, ys);
  return rep;
}

double rectangular_limit_constant(double rho_star, FreqIndex mode, int n) {
  const LatticeSpec spec = LatticeSpec::rectangular(rho_star);
  const double eps = 1.0 / n;
  const Matrix3c d = symbol_discrete<double>(spec, mode, eps).matrix();
  const Matrix3c p = micropolar_balance(rho_star).symbol(mode);
  return spectral_norm(d - p) / (eps * eps);
}

bool TheoryReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const TheoryCheck& c) { return c.passed; });
}

TheoryReport theory_suite(const TheoryConfig& cfg) {
  if (cfg.n_list.size() < 2) throw InvalidArgument("theory_suite: need at least two grid sizes");
  TheoryReport rep;

  {
    const double gap = verify_strange_identity(0, cfg.identity_trials, cfg.seed);
    rep.checks.push_back({"strange-identity", gap, 1e-12, gap <= 1e-12,
                          std::to_string(cfg.identity_trials) + " random instances"});
  }

  for (const double rho : cfg.rho_list) {
    const LatticeSpec spec = LatticeSpec::triangular(rho);
    const std::string tag = " rho*=" + join({rho});

    std::vector<double> coer, inv, bred, lim;
    for (const int n : cfg.n_list) {
      coer.push_back(coercivity_min(spec, n).min_ratio);
      inv.push_back(inverse_difference_max(spec, n));
      bred.push_back(b_reduction_constant(spec, n));
      lim.push_back(symbol_limit_constant(spec, n));
    }
    const bool positive = *std::min_element(coer.begin(), coer.end()) > 0.0;
    const double cs = positive ? spread(coer) : std::numeric_limits<double>::infinity();
    rep.checks.push_back({"coercivity" + tag, cs, 1.2, positive && cs < 1.2, "min ratios: " + join(coer)});
    rep.checks.push_back({"inverse-difference" + tag, spread(inv), 1.5, spread(inv) <= 1.5, "maxima: " + join(inv)});
    rep.checks.push_back({"b-reduction" + tag, spread(bred), 1.5, spread(bred) <= 1.5, "constants: " + join(bred)});
    rep.checks.push_back({"symbol-limit" + tag, spread(lim), 1.5, spread(lim) <= 1.5, "constants: " + join(lim)});

    double worst = 0.0;
    const int n0 = cfg.n_list.front();
    for (const FreqIndex m : FrequencySet(n0).modes()) {
      const SchurBlock<double> b = schur(symbol_discrete<double>(spec, m, 1.0 / n0));
      const Vector2 ev = symmetric_eigenvalues(b.b_mat);
      worst = std::min(worst, ev(0) / std::max(1.0, std::abs(ev(1))));
    }
    rep.checks.push_back({"schur-psd" + tag, worst, -1e-10, worst >= -1e-10, "N=" + std::to_string(n0)});

    std::vector<double> rect;
    for (const int n : cfg.n_list) rect.push_back(rectangular_limit_constant(rho, {1, 1}, n));
    rep.checks.push_back({"rectangular-limit" + tag, spread(rect), 1.5, spread(rect) <= 1.5,
                          "mode (1, 1): " + join(rect)});
  }

  const std::array<std::array<int, 4>, 6> cases{{{1, 0, 0, 0}, {0, 1, 0, 0}, {2, 0, 0, 0}, {1, 1, 0, 0},
                                                 {2, 2, 0, 0}, {1, 1, 1, 1}}};
  for (const auto& c : cases) {
    const SinCosReport s = sincos_bound_check(c[0], c[1], c[2], c[3], cfg.n_list);
    const double sp = spread(s.constants);
    const bool ok = std::isfinite(s.constant) && s.degenerate_ok && sp <= 1.5;
    rep.checks.push_back({"sin-cos (" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
                              std::to_string(c[2]) + "," + std::to_string(c[3]) + ")",
                          sp, 1.5, ok, "constants: " + join(s.constants)});
  }

  {
    const Eigen::Matrix2cd s = micropolar_stress(1.0).apply({1, 0}, Vector3c(0.0, 0.0, 1.0));
    const double asym = std::abs(s(0, 1) - s(1, 0));
    rep.checks.push_back({"stress-asymmetry", asym, 24.0, std::abs(asym - 24.0) < 1e-12,
                          "|sigma_xy - sigma_yx| for theta = 1"});
  }
  return rep;
}

}  // namespace beamlattice
