#include "beamlattice/lattice.hpp"

namespace beamlattice {

std::string_view to_string(LatticeFamily f) {
  return f == LatticeFamily::triangular ? "triangular" : "rectangular";
}

LatticeFamily lattice_family_from_string(std::string_view s) {
  if (s == "triangular") return LatticeFamily::triangular;
  if (s == "rectangular") return LatticeFamily::rectangular;
  throw InvalidArgument("unknown lattice family '" + std::string(s) + "'");
}

void LatticeSpec::validate() const {
  if (!(rho_star > 0.0) || !std::isfinite(rho_star))
    throw InvalidArgument("LatticeSpec: rho_star must be positive and finite");
  const auto beams = this->beams();
  const auto [tx, ty] = translations<double>(family);
  constexpr double tol = 1e-14;
  if (std::abs(tx.norm() - 1.0) > tol || std::abs(ty.norm() - 1.0) > tol)
    throw InvalidArgument("LatticeSpec: translation vectors must be unit length");
  for (std::size_t a = 0; a < beams.size(); ++a) {
    const auto& b = beams[a];
    if (std::abs(b.direction.norm() - 1.0) > tol)
      throw InvalidArgument("LatticeSpec: beam directions must be unit length");
    const Vector2 offset = b.di * tx + b.dj * ty;
    if ((offset - b.direction).norm() > tol)
      throw InvalidArgument("LatticeSpec: beam stencil does not match its direction");
    for (std::size_t c = a + 1; c < beams.size(); ++c) {
      const double cross = b.direction.x() * beams[c].direction.y() - b.direction.y() * beams[c].direction.x();
      if (std::abs(cross) < tol) throw InvalidArgument("LatticeSpec: parallel beam directions");
    }
  }
}

}  // namespace beamlattice
