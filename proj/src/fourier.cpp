#include "beamlattice/fourier.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>

namespace beamlattice {
namespace {

void require_nonempty(const GridFunction& f, const char* who) {
  if (f.empty()) throw InvalidArgument(std::string(who) + ": empty grid");
}

// sign = -1 for the forward kernel, +1 for the inverse kernel.
GridFunction direct_transform(const GridFunction& in, int sign, Domain out_domain) {
  const int n = in.n();
  GridFunction out(n, in.dim(), out_domain);
  const FrequencySet freqs(n);
  std::vector<cplx> twiddle(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) twiddle[k] = std::polar(1.0, sign * 2.0 * kPi * k / n);

  // Output index runs over the frequency set for the forward transform and
  // over the spatial grid for the inverse; the kernel is the same up to sign.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(in.dim());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc += twiddle[wrap(a * i + b * j, n)] * in.at(i, j);
      out.at(a, b) = acc;
    }
  }
  return out;
}

GridFunction fft_transform(const GridFunction& in, bool forward, Domain out_domain) {
  const int n = in.n();
  GridFunction out(n, in.dim(), out_domain);
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  std::vector<cplx> line_in(static_cast<std::size_t>(n)), line_out;
  Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic> work(n, n);
  for (int d = 0; d < in.dim(); ++d) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) work(i, j) = in.values()(d, in.slot(i, j));
    for (int pass = 0; pass < 2; ++pass) {
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) line_in[c] = pass == 0 ? work(r, c) : work(c, r);
        if (forward)
          fft.fwd(line_out, line_in);
        else
          fft.inv(line_out, line_in);
        for (int c = 0; c < n; ++c) (pass == 0 ? work(r, c) : work(c, r)) = line_out[c];
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.values()(d, out.slot(i, j)) = work(i, j);
  }
  return out;
}

bool use_direct(TransformPath path, int n) {
  return path == TransformPath::direct ||
         (path == TransformPath::automatic && n <= kDirectTransformMaxN);
}

}  // namespace

GridFunction dft(const GridFunction& f, TransformPath path) {
  require_nonempty(f, "dft");
  if (f.domain() != Domain::spatial) throw InvalidArgument("dft: input must be spatial");
  const int n = f.n();
  GridFunction out = use_direct(path, n) ? direct_transform(f, -1, Domain::frequency)
                                         : fft_transform(f, true, Domain::frequency);
  out.values() /= static_cast<double>(n) * n;
  return out;
}

GridFunction idft(const GridFunction& fh, TransformPath path) {
  require_nonempty(fh, "idft");
  if (fh.domain() != Domain::frequency) throw InvalidArgument("idft: input must be frequency-tagged");
  // Cyclic storage makes the sum over F_N identical to the sum over 0..N-1.
  return use_direct(path, fh.n()) ? direct_transform(fh, +1, Domain::spatial)
                                  : fft_transform(fh, false, Domain::spatial);
}

double parseval_gap(const GridFunction& f, const GridFunction& g) {
  if (f.n() != g.n() || f.dim() != g.dim()) throw InvalidArgument("parseval_gap: size mismatch");
  if (f.domain() != Domain::spatial || g.domain() != Domain::spatial)
    throw InvalidArgument("parseval_gap: inputs must be spatial");
  const GridFunction fh = dft(f);
  const GridFunction gh = dft(g);
  const cplx lhs = (gh.values().conjugate().array() * fh.values().array()).sum();
  const double n2 = static_cast<double>(f.n()) * f.n();
  const cplx rhs = (g.values().conjugate().array() * f.values().array()).sum() / n2;
  return std::abs(lhs - rhs);
}

double hs_seminorm(const GridFunction& fh, double s) {
  if (!(s >= 0.0)) throw InvalidArgument("hs_seminorm: order s must be non-negative");
  if (fh.domain() != Domain::frequency) throw InvalidArgument("hs_seminorm: input must be frequency-tagged");
  double acc = 0.0;
  for (const FreqIndex m : FrequencySet(fh.n()).modes()) {
    const double w = std::pow(std::abs(m.ip), 2.0 * s) + std::pow(std::abs(m.jp), 2.0 * s);
    acc += w * fh.at(m).squaredNorm();
  }
  return std::sqrt(acc);
}

double l2_norm(const GridFunction& fh) {
  if (fh.domain() != Domain::frequency) throw InvalidArgument("l2_norm: input must be frequency-tagged");
  return fh.values().norm();
}

GridFunction real_part_checked(const GridFunction& f, double tol) {
  require_nonempty(f, "real_part_checked");
  const double scale = std::max(1.0, f.values().cwiseAbs().maxCoeff());
  const double residue = f.values().imag().cwiseAbs().maxCoeff();
  if (residue > tol * scale)
    throw Error("real_part_checked: imaginary residue " + std::to_string(residue) +
                " exceeds tolerance; coefficients are not conjugate-symmetric");
  GridFunction out = f;
  out.values() = f.values().real().cast<cplx>();
  return out;
}

GridFunction plane_wave(int n, FreqIndex mode, const Eigen::VectorXcd& amp) {
  GridFunction out(n, static_cast<int>(amp.size()), Domain::spatial);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.at(i, j) = std::polar(1.0, 2.0 * kPi * wrap(i * mode.ip + j * mode.jp, n) / n) * amp;
  return out;
}

}  // namespace beamlattice
