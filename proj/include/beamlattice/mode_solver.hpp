#ifndef BEAMLATTICE_MODE_SOLVER_HPP
#define BEAMLATTICE_MODE_SOLVER_HPP

#include "beamlattice/fourier.hpp"
#include "beamlattice/symbols.hpp"

#include <vector>

namespace beamlattice {

/// Force and torque modes on F_N.
struct LoadSpec {
  GridFunction f_hat;    ///< dim 2, frequency
  GridFunction tau_hat;  ///< dim 1, frequency

  static LoadSpec zeros(int n);
  /// Transforms spatial nodal loads.
  static LoadSpec from_spatial(const GridFunction& f, const GridFunction& tau);

  int n() const { return f_hat.n(); }
  /// Throws InvalidArgument on size, dimension or domain mismatch.
  void validate() const;
};

struct SolutionField {
  GridFunction u_hat;
  GridFunction theta_hat;
  SymbolKind kind = SymbolKind::discrete;
  /// max over F_N^o of ||S x - rhs|| / ||rhs|| (0 where rhs = 0).
  double max_residual = 0.0;

  int n() const { return u_hat.n(); }
  /// Spatial fields, imaginary residue checked and dropped.
  FieldGrid spatial() const;
  /// Spatial fields without the realness check.
  FieldGrid spatial_complex() const;
};

enum class SolvePath {
  schur,   ///< u from B, then theta = tau/c + b.u/c
  direct,  ///< full 3x3 LU solve
};

/// Solves S x = rhs for one mode. At the zero mode the force part of rhs
/// must vanish (|f| <= zero_tol); the result is (0, 0, tau / c).
Vector3c solve_mode(const ModeSymbol<double>& sym, const Vector3c& rhs, SolvePath path = SolvePath::schur,
                    double zero_tol = 0.0);

/// ||S x - rhs|| / ||rhs||, or ||S x|| when rhs = 0.
double mode_residual(const ModeSymbol<double>& sym, const Vector3c& x, const Vector3c& rhs);

struct FieldSolveOptions {
  SolvePath path = SolvePath::schur;
  KmCheck km_check = KmCheck::positive_c;
  /// Zero-mode force tolerance relative to the largest load coefficient.
  double compat_tol = 1e-12;
};

/// Mode-by-mode solve over F_N with eps = 1/N. Throws CompatibilityError
/// when the zero-mode force is nonzero.
SolutionField solve_field(const LatticeSpec& spec, const LoadSpec& loads, SymbolKind kind,
                          const FieldSolveOptions& opts = {});

struct SeminormError {
  double s = 0.0;
  double u = 0.0;
  double theta = 0.0;
};

struct FieldErrors {
  double u_l2 = 0.0;
  double theta_l2 = 0.0;
  std::vector<SeminormError> seminorms;
};

/// Differences measured in frequency space: l2 norms and the H^s
/// semi-norms for each requested order. Zero modes must already agree.
FieldErrors field_errors(const SolutionField& a, const SolutionField& b, const std::vector<double>& orders = {});

}  // namespace beamlattice

#endif  // BEAMLATTICE_MODE_SOLVER_HPP
