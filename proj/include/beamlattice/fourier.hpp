#ifndef BEAMLATTICE_FOURIER_HPP
#define BEAMLATTICE_FOURIER_HPP

#include "beamlattice/grid.hpp"

namespace beamlattice {

enum class TransformPath {
  automatic,  ///< direct summation for N <= kDirectTransformMaxN, FFT above
  direct,     ///< O(N^4) double sum
  fft,        ///< separable FFT followed by weight scaling
};

inline constexpr int kDirectTransformMaxN = 16;

/// Forward transform, weight 1/N^2:
///   fh[i',j'] = 1/N^2 sum_{i,j} f[i,j] exp(-2 pi i (i i' + j j') / N).
GridFunction dft(const GridFunction& f, TransformPath path = TransformPath::automatic);

/// Inverse transform, weight 1, summing over F_N.
GridFunction idft(const GridFunction& fh, TransformPath path = TransformPath::automatic);

/// | sum_F conj(gh) fh - 1/N^2 sum_I conj(g) f | for spatial f, g.
double parseval_gap(const GridFunction& f, const GridFunction& g);

/// ( sum_F (|i'|^{2s} + |j'|^{2s}) |fh|^2 )^{1/2}. For s = 0 every mode has
/// weight 2, so this is sqrt(2) times l2_norm, not the L2 norm.
double hs_seminorm(const GridFunction& fh, double s);

/// ( sum_F |fh|^2 )^{1/2}.
double l2_norm(const GridFunction& fh);

/// Drops the imaginary part of a spatial field. Throws if any imaginary
/// component exceeds tol * max(1, max |f|).
GridFunction real_part_checked(const GridFunction& f, double tol = 1e-10);

/// Spatial field amp * exp(2 pi i (i i' + j j') / N).
GridFunction plane_wave(int n, FreqIndex mode, const Eigen::VectorXcd& amp);

}  // namespace beamlattice

#endif  // BEAMLATTICE_FOURIER_HPP
