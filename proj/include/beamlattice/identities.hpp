#ifndef BEAMLATTICE_IDENTITIES_HPP
#define BEAMLATTICE_IDENTITIES_HPP

#include "beamlattice/symbols.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace beamlattice {

/// Both sides of the decoupling identity
///   sum |w_t.v|^2 - (12/c) |sum cos(theta_t) w_t.v|^2
///     = (4/c)(sum sin^2 theta_t) sum |w_t.v|^2
///       + (6/c) sum_t sum_{t' != t} |(cos theta_t' w_t - cos theta_t w_t').v|^2
/// with c = sum (4 + 8 cos^2 theta_t).
struct IdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
  double scale = 0.0;  ///< sum |w_t.v|^2, used to make the gap relative
};

IdentitySides strange_identity_sides(std::span<const Vector2> w, std::span<const double> theta, const Vector2& v);

/// Max relative gap |lhs - rhs| / scale over random instances. n_vectors = 0
/// draws n uniformly from 1..5 per trial.
double verify_strange_identity(int n_vectors, int trials, std::uint64_t seed = 11);

/// v . B v written as tension + bending - coupling:
///   4 rho* sum |s_k l_k.v|^2 + 48 sum |s_k l_k^perp.v|^2
///     - (24^2 / c) |sum cos_k s_k l_k^perp.v|^2
/// with s_k = sin(pi phi_k eps)/eps, cos_k = cos(pi phi_k eps) for the discrete
/// symbol and s_k = pi phi_k, cos_k = 1 for the continuum symbol.
double schur_quadratic_form_expansion(const LatticeSpec& spec, FreqIndex mode, double eps, SymbolKind kind,
                                      const Vector2& v);

/// Result of sweeping the trigonometric approximation bound
///   |sin^m(pi i' eps) sin^n(pi j' eps) / eps^{m+n} cos^{m0}(pi i' eps) cos^{n0}(pi j' eps)
///     - (pi i')^m (pi j')^n| <= C eps^2 [case bound]
/// over i', j' >= 0, i' + j' >= 1 in F_N.
struct SinCosReport {
  int m = 0, n = 0, m0 = 0, n0 = 0;
  std::vector<int> grid_sizes;
  std::vector<double> constants;  ///< smallest admissible C per grid size
  double constant = 0.0;          ///< max over grid sizes
  /// Modes where the case bound vanishes; the left side must vanish there too.
  int degenerate_modes = 0;
  bool degenerate_ok = true;
};

SinCosReport sincos_bound_check(int m, int n, int m0, int n0, std::span<const int> grid_sizes);

/// max over F_N^o of |b_D/c_D - b_C/c_C| / (eps^2 (|i'|^3 + |j'|^3)).
double b_reduction_constant(const LatticeSpec& spec, int n);

/// max over F_N^o of ||S_D - S_C|| / (eps^2 (i'^2 + j'^2)^2).
double symbol_limit_constant(const LatticeSpec& spec, int n);

}  // namespace beamlattice

#endif  // BEAMLATTICE_IDENTITIES_HPP
