#include "beamlattice/pde.hpp"

#include <algorithm>

namespace beamlattice {
namespace {

cplx ipow(cplx z, int k) {
  cplx r(1.0, 0.0);
  for (int t = 0; t < k; ++t) r *= z;
  return r;
}

cplx derivative_factor(DerivOrder order, FreqIndex mode) {
  const cplx da(0.0, 2.0 * kPi * mode.ip);
  const cplx db(0.0, 2.0 * kPi * mode.jp);
  return ipow(da, order.first) * ipow(db, order.second);
}

void add_form(LinearForm& form, DerivOrder order, int col, double value) {
  auto [it, inserted] = form.try_emplace(order, Eigen::RowVector3d::Zero());
  it->second(col) += value;
}

}  // namespace

void DifferentialOperator::add(DerivOrder order, const Eigen::Matrix3d& coeff) {
  if (order.first < 0 || order.second < 0) throw InvalidArgument("DifferentialOperator: negative derivative order");
  auto [it, inserted] = terms_.try_emplace(order, Eigen::Matrix3d::Zero());
  it->second += coeff;
}

void DifferentialOperator::add(int p, int q, int row, int col, double value) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  m(row, col) = value;
  add({p, q}, m);
}

int DifferentialOperator::order() const {
  int o = 0;
  for (const auto& [k, c] : terms_)
    if (!c.isZero(0.0)) o = std::max(o, k.first + k.second);
  return o;
}

Matrix3c DifferentialOperator::symbol(FreqIndex mode) const {
  Matrix3c s = Matrix3c::Zero();
  for (const auto& [k, c] : terms_) s += derivative_factor(k, mode) * c.cast<cplx>();
  return s;
}

DifferentialOperator homogenized_operator(const LatticeSpec& spec) {
  spec.validate();
  DifferentialOperator op;
  for (const auto& beam : spec.beams()) {
    const Vector2 l = beam.direction;
    const Vector2 lp = perp(l);
    const Matrix2 g = spec.rho_star * l * l.transpose() + 12.0 * lp * lp.transpose();
    const int a = beam.di, b = beam.dj;
    // d_phi = a d_alpha + b d_beta
    const std::array<std::pair<DerivOrder, double>, 3> second{
        {{{2, 0}, double(a * a)}, {{1, 1}, double(2 * a * b)}, {{0, 2}, double(b * b)}}};
    for (const auto& [ord, w] : second) {
      if (w == 0.0) continue;
      Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
      m.topLeftCorner<2, 2>() = -w * g;
      op.add(ord, m);
    }
    const std::array<std::pair<DerivOrder, double>, 2> first{{{{1, 0}, double(a)}, {{0, 1}, double(b)}}};
    for (const auto& [ord, w] : first) {
      if (w == 0.0) continue;
      Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
      m.topRightCorner<2, 1>() = 12.0 * w * lp;
      m.bottomLeftCorner<1, 2>() = -12.0 * w * lp.transpose();
      op.add(ord, m);
    }
    op.add(0, 0, 2, 2, 12.0);
  }
  return op;
}

Eigen::Matrix2cd StressOperator::apply(FreqIndex mode, const Vector3c& state) const {
  Eigen::Matrix2cd out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      cplx v(0.0, 0.0);
      for (const auto& [k, row] : entries[r][c]) v += derivative_factor(k, mode) * (row.cast<cplx>() * state)(0);
      out(r, c) = v;
    }
  }
  return out;
}

StressOperator micropolar_stress(double rho_star) {
  if (!(rho_star > 0.0)) throw InvalidArgument("micropolar_stress: rho_star must be positive");
  StressOperator s;
  add_form(s.entries[0][0], {1, 0}, 0, rho_star);
  add_form(s.entries[0][1], {1, 0}, 1, 12.0);
  add_form(s.entries[0][1], {0, 0}, 2, -12.0);
  add_form(s.entries[1][0], {0, 1}, 0, 12.0);
  add_form(s.entries[1][0], {0, 0}, 2, 12.0);
  add_form(s.entries[1][1], {0, 1}, 1, rho_star);
  return s;
}

DifferentialOperator micropolar_balance(const StressOperator& sigma) {
  DifferentialOperator op;
  // Row i of the linear balance: -(d_x sigma_xi + d_y sigma_yi).
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (const auto& [k, row] : sigma.entries[j][i]) {
        const DerivOrder shifted = j == 0 ? DerivOrder{k.first + 1, k.second} : DerivOrder{k.first, k.second + 1};
        Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
        m.row(i) = -row;
        op.add(shifted, m);
      }
    }
  }
  for (const auto& [k, row] : sigma.entries[0][1]) {
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    m.row(2) = -row;
    op.add(k, m);
  }
  for (const auto& [k, row] : sigma.entries[1][0]) {
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    m.row(2) = row;
    op.add(k, m);
  }
  return op;
}

}  // namespace beamlattice
