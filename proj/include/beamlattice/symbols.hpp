#ifndef BEAMLATTICE_SYMBOLS_HPP
#define BEAMLATTICE_SYMBOLS_HPP

#include "beamlattice/grid.hpp"
#include "beamlattice/lattice.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>
#include <string_view>

namespace beamlattice {

enum class SymbolKind { discrete, continuum, kumar_mcdowell };

std::string_view to_string(SymbolKind k);
SymbolKind symbol_kind_from_string(std::string_view s);

template <typename Real>
Real pi_v() {
  using std::acos;
  return acos(Real(-1));
}

/// Per-mode stiffness block S = [[A, b], [-b^T, c]].
///
/// b is purely imaginary, so only its imaginary part is stored; S is then
/// Hermitian with A real symmetric.
template <typename Real = double>
struct ModeSymbol {
  Mat2<Real> a = Mat2<Real>::Zero();
  Vec2<Real> b_im = Vec2<Real>::Zero();
  Real c = Real(0);
  SymbolKind kind = SymbolKind::discrete;
  FreqIndex mode;
  Real eps = Real(0);  ///< 0 for the continuum symbol

  Vec2<std::complex<Real>> b() const { return b_im.template cast<std::complex<Real>>() * std::complex<Real>(0, 1); }

  Mat3c<Real> matrix() const {
    Mat3c<Real> s;
    const auto bc = b();
    s.template topLeftCorner<2, 2>() = a.template cast<std::complex<Real>>();
    s.template topRightCorner<2, 1>() = bc;
    s.template bottomLeftCorner<1, 2>() = -bc.transpose();
    s(2, 2) = c;
    return s;
  }

  ModeSymbol& operator+=(const ModeSymbol& o) {
    a += o.a;
    b_im += o.b_im;
    c += o.c;
    return *this;
  }
};

/// Recovers N from eps = 1/N, throwing unless eps is (numerically) the
/// reciprocal of an integer >= 1.
template <typename Real>
int grid_size_from_eps(Real eps) {
  using std::abs;
  using std::llround;
  if (!(eps > Real(0))) throw InvalidArgument("eps must be positive");
  const long long n = llround(static_cast<long double>(Real(1) / eps));
  if (n < 1 || abs(static_cast<Real>(n) * eps - Real(1)) > Real(1e-12))
    throw InvalidArgument("eps must equal 1/N for an integer grid size N");
  return static_cast<int>(n);
}

/// The contribution of one beam ("x-mode", "xy-mode", "y-mode" for the
/// triangular lattice) to the symbol of the given kind.
template <typename Real>
ModeSymbol<Real> beam_part(const BeamStencil<Real>& beam, Real rho_star, FreqIndex mode, Real eps,
                           SymbolKind kind) {
  using std::sin;
  const Real pi = pi_v<Real>();
  const Vec2<Real> l = beam.direction;
  const Vec2<Real> lp = perp(l);
  const Mat2<Real> g = Real(4) * (rho_star * l * l.transpose() + Real(12) * lp * lp.transpose());
  const Real phi = static_cast<Real>(beam.phase(mode.ip, mode.jp));

  ModeSymbol<Real> part;
  part.kind = kind;
  part.mode = mode;
  part.eps = kind == SymbolKind::continuum ? Real(0) : eps;
  if (kind == SymbolKind::discrete) {
    const Real s = sin(pi * phi * eps);
    part.a = g * (s * s / (eps * eps));
    part.b_im = Real(12) * lp * (sin(Real(2) * pi * phi * eps) / eps);
    part.c = Real(12) - Real(8) * s * s;
  } else {
    part.a = g * (pi * pi * phi * phi);
    part.b_im = Real(24) * pi * phi * lp;
    part.c = kind == SymbolKind::continuum ? Real(12) : Real(12) - Real(8) * eps * eps * pi * pi * phi * phi;
  }
  return part;
}

template <typename Real>
ModeSymbol<Real> sum_parts(const LatticeSpec& spec, FreqIndex mode, Real eps, SymbolKind kind) {
  spec.validate();
  ModeSymbol<Real> total;
  total.kind = kind;
  total.mode = mode;
  total.eps = kind == SymbolKind::continuum ? Real(0) : eps;
  for (const auto& beam : beam_stencils<Real>(spec.family))
    total += beam_part<Real>(beam, static_cast<Real>(spec.rho_star), mode, eps, kind);
  return total;
}

/// Discrete-lattice symbol S_D at `mode` for eps = 1/N; `mode` must lie in F_N.
template <typename Real = double>
ModeSymbol<Real> symbol_discrete(const LatticeSpec& spec, FreqIndex mode, Real eps) {
  const int n = grid_size_from_eps(eps);
  const int lo = -(n / 2);
  if (mode.ip < lo || mode.ip > lo + n - 1 || mode.jp < lo || mode.jp > lo + n - 1)
    throw InvalidArgument("symbol_discrete: mode (" + std::to_string(mode.ip) + ", " + std::to_string(mode.jp) +
                          ") is outside F_N for N = " + std::to_string(n));
  return sum_parts<Real>(spec, mode, eps, SymbolKind::discrete);
}

/// Homogenized symbol S_C, the eps -> 0 limit of S_D at a fixed mode.
template <typename Real = double>
ModeSymbol<Real> symbol_continuum(const LatticeSpec& spec, FreqIndex mode) {
  return sum_parts<Real>(spec, mode, Real(0), SymbolKind::continuum);
}

enum class KmCheck {
  positive_c,   ///< reject c_KM <= 0
  nonsingular,  ///< accept any c_KM as long as the 3x3 block is invertible
};

/// Kumar-McDowell symbol: the continuum symbol with the O(eps^2) terms kept
/// in the rotation block. Triangular lattice only.
template <typename Real = double>
ModeSymbol<Real> symbol_km(const LatticeSpec& spec, FreqIndex mode, Real eps, KmCheck check = KmCheck::positive_c) {
  if (spec.family != LatticeFamily::triangular)
    throw InvalidArgument("symbol_km: defined for the triangular lattice only");
  if (!(eps > Real(0))) throw InvalidArgument("symbol_km: eps must be positive");
  ModeSymbol<Real> s = sum_parts<Real>(spec, mode, eps, SymbolKind::kumar_mcdowell);
  const std::string where = " at mode (" + std::to_string(mode.ip) + ", " + std::to_string(mode.jp) + ")";
  if (check == KmCheck::positive_c && !(s.c > Real(0)))
    throw InvalidArgument("symbol_km: c_KM = " + std::to_string(static_cast<double>(s.c)) + " is not positive" + where);
  if (check == KmCheck::nonsingular && !mode.is_zero()) {
    Eigen::FullPivLU<Mat3c<Real>> lu(s.matrix());
    if (!lu.isInvertible()) throw SingularError("symbol_km: singular Kumar-McDowell block" + where);
  }
  return s;
}

/// Dispatch on kind; eps is ignored for the continuum symbol.
template <typename Real = double>
ModeSymbol<Real> symbol(const LatticeSpec& spec, FreqIndex mode, Real eps, SymbolKind kind,
                        KmCheck check = KmCheck::positive_c) {
  switch (kind) {
    case SymbolKind::discrete:
      return symbol_discrete<Real>(spec, mode, eps);
    case SymbolKind::continuum:
      return symbol_continuum<Real>(spec, mode);
    case SymbolKind::kumar_mcdowell:
      return symbol_km<Real>(spec, mode, eps, check);
  }
  throw InvalidArgument("symbol: unknown kind");
}

/// Schur complement of a mode symbol with respect to the rotation entry.
///
/// B = A + b (x) b / c. Since b = i beta, b (x) b = -beta beta^T and B is
/// real symmetric.
template <typename Real = double>
struct SchurBlock {
  Mat2<Real> b_mat;
  Vec2<Real> b_im;
  Real c;

  Vec2<std::complex<Real>> b() const { return b_im.template cast<std::complex<Real>>() * std::complex<Real>(0, 1); }

  /// f - b tau / c
  Vec2<std::complex<Real>> reduced_force(const Vec2<std::complex<Real>>& f, std::complex<Real> tau) const {
    return f - b() * (tau / c);
  }

  /// tau / c + b . u / c (bilinear, no conjugation)
  std::complex<Real> rotation(std::complex<Real> tau, const Vec2<std::complex<Real>>& u) const {
    return tau / c + (b().transpose() * u)(0) / c;
  }
};

template <typename Real>
SchurBlock<Real> schur(const ModeSymbol<Real>& sym) {
  if (!(sym.c > Real(0))) throw InvalidArgument("schur: rotation entry c must be positive");
  SchurBlock<Real> out;
  out.b_mat = sym.a - sym.b_im * sym.b_im.transpose() / sym.c;
  out.b_im = sym.b_im;
  out.c = sym.c;
  return out;
}

/// Eigenvalues of a real symmetric 2x2 matrix, ascending, in closed form.
template <typename Real>
Vec2<Real> symmetric_eigenvalues(const Mat2<Real>& m) {
  using std::hypot;
  const Real mean = (m(0, 0) + m(1, 1)) / Real(2);
  const Real rad = hypot((m(0, 0) - m(1, 1)) / Real(2), (m(0, 1) + m(1, 0)) / Real(2));
  const Real hi = mean + rad;
  Real lo = mean - rad;
  // lo * hi = det; the quotient avoids cancellation in the small root.
  if (hi > Real(0)) lo = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / hi;
  return Vec2<Real>(lo, hi);
}

/// Largest singular value of a 2x2 or 3x3 matrix. Hermitian inputs use the
/// eigenvalue route; anything else goes through an SVD.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real spectral_norm(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  if (m.rows() != m.cols() || m.rows() < 2 || m.rows() > 3)
    throw InvalidArgument("spectral_norm: expects a 2x2 or 3x3 matrix");
  if (!m.allFinite()) throw InvalidArgument("spectral_norm: non-finite entries");
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Mat x = m;
  const Real scale = x.cwiseAbs().maxCoeff();
  if (scale == Real(0)) return Real(0);
  if ((x - x.adjoint()).cwiseAbs().maxCoeff() <= Real(1e-14) * scale) {
    Eigen::SelfAdjointEigenSolver<Mat> es(x, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::JacobiSVD<Mat> svd(x);
  return svd.singularValues()(0);
}

/// lambda_min(B) / (i'^2 + j'^2) for the Schur complement of the given kind.
template <typename Real = double>
Real lambda_min_ratio(const LatticeSpec& spec, FreqIndex mode, Real eps, SymbolKind kind) {
  if (mode.is_zero()) throw InvalidArgument("lambda_min_ratio: undefined at the zero mode");
  const SchurBlock<Real> b = schur(symbol<Real>(spec, mode, eps, kind));
  return symmetric_eigenvalues(b.b_mat)(0) / static_cast<Real>(mode.radius_sq());
}

}  // namespace beamlattice

#endif  // BEAMLATTICE_SYMBOLS_HPP
