#ifndef BEAMLATTICE_GRID_HPP
#define BEAMLATTICE_GRID_HPP

#include "beamlattice/core.hpp"

#include <cstdlib>
#include <utility>
#include <vector>

namespace beamlattice {

/// Frequency index (i', j').
struct FreqIndex {
  int ip = 0;
  int jp = 0;

  bool is_zero() const { return ip == 0 && jp == 0; }
  int l1() const { return std::abs(ip) + std::abs(jp); }
  int radius_sq() const { return ip * ip + jp * jp; }

  friend bool operator==(const FreqIndex&, const FreqIndex&) = default;
};

/// The frequency domain F_N of an N x N grid.
///
/// Odd N uses the symmetric range -(N-1)/2 .. (N-1)/2; even N uses
/// -N/2 .. N/2-1. Coefficients are stored cyclically, so mode (i', j')
/// lives at storage slot ((i' mod N), (j' mod N)) exactly like a plain FFT.
class FrequencySet {
 public:
  explicit FrequencySet(int n);

  int n() const { return n_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + n_ - 1; }
  bool contains(FreqIndex m) const;

  /// Modes in row-major order of (i', j'), i' ascending then j' ascending.
  const std::vector<FreqIndex>& modes() const& { return modes_; }
  std::vector<FreqIndex> modes() && { return std::move(modes_); }

  /// Largest value of |i'|^{2s} + |j'|^{2s} over the set.
  double max_weight(double s) const;

 private:
  int n_;
  int lo_;
  std::vector<FreqIndex> modes_;
};

inline int wrap(int k, int n) {
  const int r = k % n;
  return r < 0 ? r + n : r;
}

enum class Domain { spatial, frequency };

/// N x N periodic grid of complex d-vectors, d in {1, 2, 3}.
///
/// Storage is dim x N^2, column (i*N + j). Spatial access is cyclic in (i, j);
/// frequency access is by FreqIndex.
class GridFunction {
 public:
  using Storage = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;

  GridFunction() = default;
  GridFunction(int n, int dim, Domain domain);

  static GridFunction zeros(int n, int dim, Domain domain) { return {n, dim, domain}; }

  int n() const { return n_; }
  int dim() const { return dim_; }
  Domain domain() const { return domain_; }
  bool empty() const { return n_ == 0; }

  Storage& values() { return values_; }
  const Storage& values() const { return values_; }

  auto at(int i, int j) { return values_.col(slot(i, j)); }
  auto at(int i, int j) const { return values_.col(slot(i, j)); }
  auto at(FreqIndex m) { return values_.col(slot(m.ip, m.jp)); }
  auto at(FreqIndex m) const { return values_.col(slot(m.ip, m.jp)); }

  int slot(int i, int j) const { return wrap(i, n_) * n_ + wrap(j, n_); }

  /// Entry-wise copy with a different domain tag.
  GridFunction retagged(Domain d) const;

 private:
  int n_ = 0;
  int dim_ = 0;
  Domain domain_ = Domain::spatial;
  Storage values_;
};

/// Nodal displacement (2-vector) and rotation (scalar) fields on one grid.
struct FieldGrid {
  GridFunction u;
  GridFunction theta;

  static FieldGrid zeros(int n, Domain d) {
    return {GridFunction::zeros(n, 2, d), GridFunction::zeros(n, 1, d)};
  }
  int n() const { return u.n(); }
};

}  // namespace beamlattice

#endif  // BEAMLATTICE_GRID_HPP
