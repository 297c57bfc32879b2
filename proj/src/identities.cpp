#include "beamlattice/identities.hpp"

#include <cmath>
#include <random>

namespace beamlattice {

IdentitySides strange_identity_sides(std::span<const Vector2> w, std::span<const double> theta, const Vector2& v) {
  if (w.size() != theta.size() || w.empty())
    throw InvalidArgument("strange_identity_sides: need matching, non-empty vector and angle lists");
  const std::size_t n = w.size();
  double c = 0.0, sin2 = 0.0, sq = 0.0;
  double coupled = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    const double ct = std::cos(theta[t]);
    const double st = std::sin(theta[t]);
    c += 4.0 + 8.0 * ct * ct;
    sin2 += st * st;
    const double wv = w[t].dot(v);
    sq += wv * wv;
    coupled += ct * wv;
  }
  double cross = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t u = 0; u < n; ++u) {
      if (u == t) continue;
      const double d = (std::cos(theta[u]) * w[t] - std::cos(theta[t]) * w[u]).dot(v);
      cross += d * d;
    }
  }
  IdentitySides out;
  out.lhs = sq - 12.0 / c * coupled * coupled;
  out.rhs = 4.0 / c * sin2 * sq + 6.0 / c * cross;
  out.scale = sq;
  return out;
}

double verify_strange_identity(int n_vectors, int trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("verify_strange_identity: trials must be >= 1");
  if (n_vectors < 0) throw InvalidArgument("verify_strange_identity: n_vectors must be >= 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_int_distribution<int> count(1, 5);
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const int n = n_vectors > 0 ? n_vectors : count(rng);
    std::vector<Vector2> w(n);
    std::vector<double> th(n);
    for (int t = 0; t < n; ++t) {
      w[t] = Vector2(normal(rng), normal(rng));
      th[t] = angle(rng);
    }
    const Vector2 v(normal(rng), normal(rng));
    const IdentitySides s = strange_identity_sides(w, th, v);
    if (s.scale > 0.0) worst = std::max(worst, std::abs(s.lhs - s.rhs) / s.scale);
  }
  return worst;
}

double schur_quadratic_form_expansion(const LatticeSpec& spec, FreqIndex mode, double eps, SymbolKind kind,
                                      const Vector2& v) {
  if (kind == SymbolKind::kumar_mcdowell)
    throw InvalidArgument("schur_quadratic_form_expansion: discrete or continuum only");
  const ModeSymbol<double> sym = symbol<double>(spec, mode, eps, kind);
  double tension = 0.0, bending = 0.0, coupling = 0.0;
  for (const auto& beam : spec.beams()) {
    const double phi = beam.phase(mode.ip, mode.jp);
    const double s = kind == SymbolKind::discrete ? std::sin(kPi * phi * eps) / eps : kPi * phi;
    const double co = kind == SymbolKind::discrete ? std::cos(kPi * phi * eps) : 1.0;
    const double along = s * beam.direction.dot(v);
    const double across = s * perp(beam.direction).dot(v);
    tension += along * along;
    bending += across * across;
    coupling += co * across;
  }
  return 4.0 * spec.rho_star * tension + 48.0 * bending - 24.0 * 24.0 / sym.c * coupling * coupling;
}

SinCosReport sincos_bound_check(int m, int n, int m0, int n0, std::span<const int> grid_sizes) {
  if (m < 0 || n < 0 || m0 < 0 || n0 < 0 || m > 4 || n > 4 || m0 > 4 || n0 > 4)
    throw InvalidArgument("sincos_bound_check: exponents must lie in 0..4");
  SinCosReport rep;
  rep.m = m;
  rep.n = n;
  rep.m0 = m0;
  rep.n0 = n0;
  for (const int size : grid_sizes) {
    if (size < 2) throw InvalidArgument("sincos_bound_check: grid sizes must be >= 2");
    const double eps = 1.0 / size;
    const int hi = FrequencySet(size).hi();
    double worst = 0.0;
    for (int ip = 0; ip <= hi; ++ip) {
      for (int jp = 0; jp <= hi; ++jp) {
        if (ip + jp < 1) continue;
        const double x = kPi * ip * eps, y = kPi * jp * eps;
        const double approx = std::pow(std::sin(x), m) * std::pow(std::sin(y), n) / std::pow(eps, m + n) *
                              std::pow(std::cos(x), m0) * std::pow(std::cos(y), n0);
        const double exact = std::pow(kPi * ip, m) * std::pow(kPi * jp, n);
        const double lhs = std::abs(approx - exact);
        double bound;
        if (m == 0 && m0 == 0 && n >= 1)
          bound = eps * eps * std::pow(jp, n + 2);
        else if (m >= 1 && n == 0 && n0 == 0)
          bound = eps * eps * std::pow(ip, m + 2);
        else
          bound = eps * eps * (std::pow(ip, m + 2) * std::pow(jp, n) + std::pow(ip, m) * std::pow(jp, n + 2));
        if (bound == 0.0) {
          ++rep.degenerate_modes;
          if (lhs > 1e-12 * std::max(1.0, std::abs(exact))) rep.degenerate_ok = false;
          continue;
        }
        worst = std::max(worst, lhs / bound);
      }
    }
    rep.grid_sizes.push_back(size);
    rep.constants.push_back(worst);
    rep.constant = std::max(rep.constant, worst);
  }
  return rep;
}

double b_reduction_constant(const LatticeSpec& spec, int n) {
  const double eps = 1.0 / n;
  double worst = 0.0;
  for (const FreqIndex mode : FrequencySet(n).modes()) {
    if (mode.is_zero()) continue;
    const auto d = symbol_discrete<double>(spec, mode, eps);
    const auto c = symbol_continuum<double>(spec, mode);
    const double gap = (d.b_im / d.c - c.b_im / c.c).norm();
    const double scale = eps * eps * (std::pow(std::abs(mode.ip), 3) + std::pow(std::abs(mode.jp), 3));
    worst = std::max(worst, gap / scale);
  }
  return worst;
}

double symbol_limit_constant(const LatticeSpec& spec, int n) {
  const double eps = 1.0 / n;
  double worst = 0.0;
  for (const FreqIndex mode : FrequencySet(n).modes()) {
    if (mode.is_zero()) continue;
    const Matrix3c diff =
        symbol_discrete<double>(spec, mode, eps).matrix() - symbol_continuum<double>(spec, mode).matrix();
    const double r2 = mode.radius_sq();
    worst = std::max(worst, spectral_norm(diff) / (eps * eps * r2 * r2));
  }
  return worst;
}

}  // namespace beamlattice
