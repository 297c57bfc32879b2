#include "beamlattice/grid.hpp"

#include <cmath>

namespace beamlattice {

FrequencySet::FrequencySet(int n) : n_(n) {
  if (n < 1) throw InvalidArgument("FrequencySet: grid size must be positive");
  lo_ = (n % 2 == 0) ? -n / 2 : -(n - 1) / 2;
  modes_.reserve(static_cast<std::size_t>(n) * n);
  for (int ip = lo_; ip <= hi(); ++ip)
    for (int jp = lo_; jp <= hi(); ++jp) modes_.push_back({ip, jp});
}

bool FrequencySet::contains(FreqIndex m) const {
  return m.ip >= lo_ && m.ip <= hi() && m.jp >= lo_ && m.jp <= hi();
}

double FrequencySet::max_weight(double s) const {
  const double k = std::max(std::abs(lo_), std::abs(hi()));
  return 2.0 * std::pow(k, 2.0 * s);
}

GridFunction::GridFunction(int n, int dim, Domain domain) : n_(n), dim_(dim), domain_(domain) {
  if (n < 1) throw InvalidArgument("GridFunction: grid size must be positive");
  if (dim < 1 || dim > 3) throw InvalidArgument("GridFunction: vector dimension must be 1, 2 or 3");
  values_ = Storage::Zero(dim, static_cast<Eigen::Index>(n) * n);
}

GridFunction GridFunction::retagged(Domain d) const {
  GridFunction out = *this;
  out.domain_ = d;
  return out;
}

}  // namespace beamlattice
