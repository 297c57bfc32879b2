#ifndef BEAMLATTICE_LATTICE_HPP
#define BEAMLATTICE_LATTICE_HPP

#include "beamlattice/core.hpp"

#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

namespace beamlattice {

enum class LatticeFamily { triangular, rectangular };

std::string_view to_string(LatticeFamily f);
LatticeFamily lattice_family_from_string(std::string_view s);

/// One beam of the periodic cell: it joins node (i, j) to node
/// (i + di, j + dj) and points along `direction`. Its Fourier phase is
/// di * i' + dj * j'.
template <typename Real>
struct BeamStencil {
  Vec2<Real> direction;
  int di;
  int dj;

  int phase(int ip, int jp) const { return di * ip + dj * jp; }
};

/// Beams of the periodic cell, in the order l1, l2, ... .
///
/// Triangular: l1 = [1/2, -sqrt3/2] to (i+1, j), l2 = [1, 0] to (i+1, j+1),
/// l3 = [1/2, sqrt3/2] to (i, j+1). Rectangular: l1 = [1, 0] to (i+1, j),
/// l2 = [0, 1] to (i, j+1).
template <typename Real = double>
std::vector<BeamStencil<Real>> beam_stencils(LatticeFamily family) {
  using std::sqrt;
  const Real half = Real(1) / Real(2);
  const Real s3 = sqrt(Real(3)) / Real(2);
  if (family == LatticeFamily::triangular) {
    return {{Vec2<Real>(half, -s3), 1, 0}, {Vec2<Real>(Real(1), Real(0)), 1, 1}, {Vec2<Real>(half, s3), 0, 1}};
  }
  return {{Vec2<Real>(Real(1), Real(0)), 1, 0}, {Vec2<Real>(Real(0), Real(1)), 0, 1}};
}

/// Translation vectors t_x, t_y of the family. Node (i, j) sits at
/// eps * (i t_x + j t_y).
template <typename Real = double>
std::array<Vec2<Real>, 2> translations(LatticeFamily family) {
  using std::sqrt;
  const Real half = Real(1) / Real(2);
  const Real s3 = sqrt(Real(3)) / Real(2);
  if (family == LatticeFamily::triangular) return {Vec2<Real>(half, -s3), Vec2<Real>(half, s3)};
  return {Vec2<Real>(Real(1), Real(0)), Vec2<Real>(Real(0), Real(1))};
}

/// A lattice family together with its axial/bending stiffness ratio rho*.
struct LatticeSpec {
  LatticeFamily family = LatticeFamily::triangular;
  double rho_star = 1.0;

  static LatticeSpec triangular(double rho_star) { return {LatticeFamily::triangular, rho_star}; }
  static LatticeSpec rectangular(double rho_star) { return {LatticeFamily::rectangular, rho_star}; }

  std::vector<BeamStencil<double>> beams() const { return beam_stencils<double>(family); }
  std::size_t beam_count() const { return family == LatticeFamily::triangular ? 3 : 2; }

  /// Throws InvalidArgument unless rho* > 0 and the stencil geometry is sane
  /// (unit directions and translations, pairwise non-parallel directions,
  /// each beam offset equal to its direction in lattice coordinates).
  void validate() const;
};

}  // namespace beamlattice

#endif  // BEAMLATTICE_LATTICE_HPP
