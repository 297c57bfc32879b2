// Independent reference computations for the test suite. Nothing here calls
// into the library's numerical routines.
#ifndef BEAMLATTICE_TESTS_ORACLES_HPP
#define BEAMLATTICE_TESTS_ORACLES_HPP

#include "beamlattice/grid.hpp"
#include "beamlattice/lattice.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using ld = long double;
using cld = std::complex<ld>;
using Mat3cld = Eigen::Matrix<cld, 3, 3>;

inline const ld kPiL = std::acos(ld(-1));

/// Direct double sum over the frequency range, keyed by (i', j') rather
/// than by storage slot.
inline std::map<std::pair<int, int>, std::vector<cld>> naive_dft(const beamlattice::GridFunction& f) {
  const int n = f.n();
  const int lo = -(n / 2);
  std::map<std::pair<int, int>, std::vector<cld>> out;
  for (int ip = lo; ip < lo + n; ++ip) {
    for (int jp = lo; jp < lo + n; ++jp) {
      std::vector<cld> acc(f.dim(), cld(0));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const ld ang = -2 * kPiL * ld(i * ip + j * jp) / ld(n);
          const cld w(std::cos(ang), std::sin(ang));
          for (int d = 0; d < f.dim(); ++d) acc[d] += w * cld(f.values()(d, i * n + j));
        }
      }
      for (auto& a : acc) a /= ld(n) * ld(n);
      out[{ip, jp}] = acc;
    }
  }
  return out;
}

enum class Kind { discrete, continuum, km };

/// Long-double transcription of the mode symbols with the stencils spelled
/// out by hand.
inline Mat3cld symbol(beamlattice::LatticeFamily family, ld rho, int ip, int jp, ld eps, Kind kind) {
  struct Beam {
    ld lx, ly;
    int phase;
  };
  const ld h = std::sqrt(ld(3)) / 2;
  std::vector<Beam> beams;
  if (family == beamlattice::LatticeFamily::triangular)
    beams = {{0.5L, -h, ip}, {1.0L, 0.0L, ip + jp}, {0.5L, h, jp}};
  else
    beams = {{1.0L, 0.0L, ip}, {0.0L, 1.0L, jp}};

  Mat3cld s = Mat3cld::Zero();
  for (const Beam& b : beams) {
    const ld px = -b.ly, py = b.lx;
    const ld phi = b.phase;
    ld ga[2][2] = {{rho * b.lx * b.lx + 12 * px * px, rho * b.lx * b.ly + 12 * px * py},
                   {rho * b.ly * b.lx + 12 * py * px, rho * b.ly * b.ly + 12 * py * py}};
    ld afac, bfac, c;
    if (kind == Kind::discrete) {
      const ld sn = std::sin(kPiL * phi * eps);
      afac = 4 * sn * sn / (eps * eps);
      bfac = 12 * std::sin(2 * kPiL * phi * eps) / eps;
      c = 12 - 8 * sn * sn;
    } else {
      afac = 4 * kPiL * kPiL * phi * phi;
      bfac = 24 * kPiL * phi;
      c = kind == Kind::continuum ? ld(12) : 12 - 8 * eps * eps * kPiL * kPiL * phi * phi;
    }
    for (int r = 0; r < 2; ++r)
      for (int q = 0; q < 2; ++q) s(r, q) += afac * ga[r][q];
    const cld bx(0, bfac * px), by(0, bfac * py);
    s(0, 2) += bx;
    s(1, 2) += by;
    s(2, 0) -= bx;
    s(2, 1) -= by;
    s(2, 2) += c;
  }
  return s;
}

/// Beam energy from the continuous fields: linear axial displacement and
/// cubic Hermite transverse deflection, integrated by two-point Gauss rule.
/// dofs are global (ux, uy, theta) at the start node then the end node.
inline double beam_energy(double rho, double length, double lx, double ly, const std::array<double, 6>& dofs) {
  const double px = -ly, py = lx;
  const double vx0 = dofs[0] * lx + dofs[1] * ly, vy0 = dofs[0] * px + dofs[1] * py, t0 = dofs[2];
  const double vx1 = dofs[3] * lx + dofs[4] * ly, vy1 = dofs[3] * px + dofs[4] * py, t1 = dofs[5];
  const double L = length;
  const double axial = rho * L, bending = L * L * L;
  const double du = (vx1 - vx0) / L;
  double energy = 0.5 * axial * du * du * L;
  const double g = 1.0 / std::sqrt(3.0);
  for (const double xi : {0.5 - 0.5 * g, 0.5 + 0.5 * g}) {
    const double curv = ((-6 + 12 * xi) * vy0 + (-4 + 6 * xi) * L * t0 + (6 - 12 * xi) * vy1 +
                         (-2 + 6 * xi) * L * t1) /
                        (L * L);
    energy += 0.5 * bending * curv * curv * 0.5 * L;
  }
  return energy;
}

/// Central-difference Hessian; exact up to round-off for quadratics.
inline Eigen::MatrixXd fd_hessian(const std::function<double(const Eigen::VectorXd&)>& e, int dim, double h) {
  Eigen::MatrixXd hess(dim, dim);
  const Eigen::VectorXd x = Eigen::VectorXd::Zero(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Eigen::VectorXd a = x, b = x, c = x, d = x;
      a(i) += h, a(j) += h;
      b(i) += h, b(j) -= h;
      c(i) -= h, c(j) += h;
      d(i) -= h, d(j) -= h;
      hess(i, j) = (e(a) - e(b) - e(c) + e(d)) / (4 * h * h);
    }
  }
  return hess;
}

/// Hand-rolled generators for property tests.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  double normal() { return std::normal_distribution<double>()(rng); }
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); }
  beamlattice::FreqIndex mode(int n) {
    const beamlattice::FrequencySet f(n);
    return {integer(f.lo(), f.hi()), integer(f.lo(), f.hi())};
  }
  beamlattice::FreqIndex nonzero_mode(int n) {
    for (;;) {
      const auto m = mode(n);
      if (!m.is_zero()) return m;
    }
  }
  beamlattice::Vector2 vec2() { return {normal(), normal()}; }
  beamlattice::Vector3c cvec3() {
    beamlattice::Vector3c v;
    for (int k = 0; k < 3; ++k) v(k) = {normal(), normal()};
    return v;
  }
  beamlattice::GridFunction grid(int n, int dim, beamlattice::Domain d, bool real = false) {
    beamlattice::GridFunction g(n, dim, d);
    for (Eigen::Index k = 0; k < g.values().size(); ++k)
      g.values().data()[k] = {normal(), real ? 0.0 : normal()};
    return g;
  }
};

}  // namespace oracle

/// Values computed once by an independent NumPy implementation and frozen.
namespace fixtures {

// S_D at mode (1, 0), eps = 1/4, rho* = 1, triangular.
inline const double kSd10A00 = 328.0;
inline const double kSd10A01 = 152.42047106606117;
inline const double kSd10A11 = 504.0;
inline const double kSd10BIm0 = 41.569219381653056;
inline const double kSd10BIm1 = 72.0;
inline const double kSd10C = 28.0;

inline const double kDiff11 = 0.023872704415578642;    // diff at (1,1), eps = 1/4, rho* = 1
inline const double kDiffKm11 = 0.11608410694320295;   // same, Kumar-McDowell pair
inline const std::array<double, 3> kErr3m2{0.017629972751703093, 0.049651089977095476,
                                           0.17112018074803398};  // (3,-2), eps = 1/17, rho* = 1
inline const double kLambdaRatio21 = 315.79010322560492;  // (2,1), eps = 1/16, rho* = 0.01

}  // namespace fixtures

#endif  // BEAMLATTICE_TESTS_ORACLES_HPP
