#include "beamlattice/assembly.hpp"
#include "beamlattice/mode_solver.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace beamlattice;

namespace {

// Real spatial loads with zero mean force.
LoadSpec random_load(oracle::Gen& gen, int n, GridFunction* f_out = nullptr, GridFunction* t_out = nullptr) {
  GridFunction f = gen.grid(n, 2, Domain::spatial, true);
  const Eigen::Vector2cd mean = f.values().rowwise().mean();
  f.values().colwise() -= mean;
  GridFunction tau = gen.grid(n, 1, Domain::spatial, true);
  if (f_out) *f_out = f;
  if (t_out) *t_out = tau;
  return LoadSpec::from_spatial(f, tau);
}

}  // namespace

TEST(SolveMode, ZeroModeReturnsRotationOnly) {
  const auto sym = symbol_discrete<double>(LatticeSpec::triangular(1.0), {0, 0}, 0.25);
  const Vector3c x = solve_mode(sym, Vector3c(0.0, 0.0, 7.2));
  EXPECT_EQ(x(0), cplx(0.0));
  EXPECT_EQ(x(1), cplx(0.0));
  EXPECT_NEAR(x(2).real(), 0.2, 1e-15);
  EXPECT_THROW(solve_mode(sym, Vector3c(1e-3, 0.0, 0.0)), CompatibilityError);
  EXPECT_NO_THROW(solve_mode(sym, Vector3c(1e-13, 0.0, 0.0), SolvePath::schur, 1e-12));
}

TEST(SolveMode, SchurAndDirectAgree) {
  oracle::Gen gen(61);
  for (int t = 0; t < 300; ++t) {
    const int n = gen.integer(3, 128);
    const LatticeSpec spec{t % 2 ? LatticeFamily::triangular : LatticeFamily::rectangular,
                           std::pow(10.0, gen.uniform(-2, 2))};
    const auto sym = symbol_discrete<double>(spec, gen.nonzero_mode(n), 1.0 / n);
    const Vector3c rhs = gen.cvec3();
    const Vector3c a = solve_mode(sym, rhs, SolvePath::schur);
    const Vector3c b = solve_mode(sym, rhs, SolvePath::direct);
    EXPECT_LT((a - b).norm(), 1e-10 * b.norm());
    EXPECT_LT(mode_residual(sym, a, rhs), 1e-11);
  }
}

TEST(SolveMode, ResidualOfZeroRhs) {
  const auto sym = symbol_discrete<double>(LatticeSpec::triangular(1.0), {1, 2}, 0.125);
  EXPECT_EQ(mode_residual(sym, Vector3c::Zero(), Vector3c::Zero()), 0.0);
  EXPECT_EQ(solve_mode(sym, Vector3c::Zero()), Vector3c::Zero());
}

TEST(SolveField, MatchesDenseLatticeSolve) {
  oracle::Gen gen(62);
  for (const auto family : {LatticeFamily::triangular, LatticeFamily::rectangular}) {
    for (const int n : {3, 4, 6}) {
      for (const double rho : {0.01, 1.0, 100.0}) {
        const LatticeSpec spec{family, rho};
        GridFunction f, tau;
        const LoadSpec loads = random_load(gen, n, &f, &tau);
        const SolutionField sol = solve_field(spec, loads, SymbolKind::discrete);
        const FieldGrid fourier = sol.spatial();
        const FieldGrid dense = dense_solve(assemble_lattice(spec, n), f, tau);
        const double scale = std::max(1.0, pack_dofs(dense).cwiseAbs().maxCoeff());
        EXPECT_LT((pack_dofs(fourier) - pack_dofs(dense)).cwiseAbs().maxCoeff(), 1e-9 * scale)
            << "N=" << n << " rho*=" << rho;
        EXPECT_LT(sol.max_residual, 1e-11);
      }
    }
  }
}

TEST(SolveField, RealLoadsGiveRealFields) {
  oracle::Gen gen(63);
  const LatticeSpec spec = LatticeSpec::triangular(1.0);
  for (const int n : {15, 16}) {
    const SolutionField sol = solve_field(spec, random_load(gen, n), SymbolKind::discrete);
    EXPECT_NO_THROW(sol.spatial());
    EXPECT_LT(sol.spatial_complex().u.values().imag().cwiseAbs().maxCoeff(), 1e-12);
  }
  // The continuum symbol is not N-periodic, so realness needs a grid whose
  // frequency range is closed under negation.
  EXPECT_NO_THROW(solve_field(spec, random_load(gen, 15), SymbolKind::continuum).spatial());
  LoadSpec edge = LoadSpec::zeros(16);
  edge.f_hat.at(FreqIndex{-8, 3})(0) = 1.0;
  edge.f_hat.at(FreqIndex{-8, -3})(0) = 1.0;
  EXPECT_NO_THROW(solve_field(spec, edge, SymbolKind::discrete).spatial());
  EXPECT_THROW(solve_field(spec, edge, SymbolKind::continuum).spatial(), Error);
}

TEST(SolveField, ConstantTorque) {
  for (const auto family : {LatticeFamily::triangular, LatticeFamily::rectangular}) {
    const int n = 8;
    GridFunction tau(n, 1, Domain::spatial);
    tau.values().setConstant(3.0);
    const LatticeSpec spec{family, 1.0};
    const SolutionField sol =
        solve_field(spec, LoadSpec::from_spatial(GridFunction(n, 2, Domain::spatial), tau), SymbolKind::discrete);
    const FieldGrid x = sol.spatial();
    const double c = 12.0 * spec.beam_count();
    EXPECT_LT((x.theta.values().array() - 3.0 / c).abs().maxCoeff(), 1e-13);
    EXPECT_LT(x.u.values().cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(SolveField, SchurAndDirectPathsAgree) {
  oracle::Gen gen(64);
  const LoadSpec loads = random_load(gen, 12);
  const LatticeSpec spec = LatticeSpec::triangular(0.01);
  const SolutionField a = solve_field(spec, loads, SymbolKind::discrete);
  const SolutionField b = solve_field(spec, loads, SymbolKind::discrete, {SolvePath::direct});
  const FieldErrors e = field_errors(a, b);
  EXPECT_LT(e.u_l2 + e.theta_l2, 1e-10);
}

TEST(SolveField, IncompatibleLoadRejected) {
  LoadSpec loads = LoadSpec::zeros(8);
  loads.f_hat.at(FreqIndex{0, 0})(0) = 1.0;
  EXPECT_THROW(solve_field(LatticeSpec::triangular(1.0), loads, SymbolKind::discrete), CompatibilityError);
}

TEST(SolveField, EvenGridEdgeMode) {
  const int n = 8;
  LoadSpec loads = LoadSpec::zeros(n);
  loads.f_hat.at(FreqIndex{-4, 0})(0) = 1.0;
  loads.tau_hat.at(FreqIndex{0, -4})(0) = 2.0;
  const LatticeSpec spec = LatticeSpec::triangular(1.0);
  const SolutionField sol = solve_field(spec, loads, SymbolKind::discrete);
  const Vector3c rhs(1.0, 0.0, 0.0);
  const Vector3c ref = symbol_discrete<double>(spec, {-4, 0}, 1.0 / n).matrix().fullPivLu().solve(rhs);
  EXPECT_LT((sol.u_hat.at(FreqIndex{-4, 0}) - ref.head<2>()).norm(), 1e-13);
  EXPECT_LT(std::abs(sol.theta_hat.at(FreqIndex{-4, 0})(0) - ref(2)), 1e-13);
  EXPECT_NO_THROW(sol.spatial());
}

TEST(SolveField, RejectsBadLoads) {
  LoadSpec loads = LoadSpec::zeros(4);
  loads.tau_hat = GridFunction(5, 1, Domain::frequency);
  EXPECT_THROW(solve_field(LatticeSpec::triangular(1.0), loads, SymbolKind::discrete), InvalidArgument);
  LoadSpec spatial = LoadSpec::zeros(4);
  spatial.f_hat = spatial.f_hat.retagged(Domain::spatial);
  EXPECT_THROW(spatial.validate(), InvalidArgument);
}

TEST(FieldErrors, SelfDifferenceIsZeroAndSeminormsOrdered) {
  oracle::Gen gen(65);
  const LoadSpec loads = random_load(gen, 16);
  const LatticeSpec spec = LatticeSpec::triangular(1.0);
  const SolutionField d = solve_field(spec, loads, SymbolKind::discrete);
  const SolutionField c = solve_field(spec, loads, SymbolKind::continuum);
  const FieldErrors zero = field_errors(d, d, {1.0});
  EXPECT_EQ(zero.u_l2, 0.0);
  EXPECT_EQ(zero.seminorms.at(0).u, 0.0);
  const FieldErrors e = field_errors(d, c, {0.0, 1.0});
  ASSERT_EQ(e.seminorms.size(), 2u);
  EXPECT_GT(e.u_l2, 0.0);
  EXPECT_NEAR(e.seminorms[0].u, std::sqrt(2.0) * e.u_l2, 1e-12 * e.u_l2);
  EXPECT_GE(e.seminorms[1].u, e.seminorms[0].u / std::sqrt(2.0));
}

TEST(FieldErrors, RejectsMismatchedGrids) {
  const LatticeSpec spec = LatticeSpec::triangular(1.0);
  const SolutionField a = solve_field(spec, LoadSpec::zeros(4), SymbolKind::discrete);
  const SolutionField b = solve_field(spec, LoadSpec::zeros(5), SymbolKind::discrete);
  EXPECT_THROW(field_errors(a, b), InvalidArgument);
  LoadSpec t = LoadSpec::zeros(4);
  t.tau_hat.at(FreqIndex{0, 0})(0) = 1.0;
  const SolutionField c = solve_field(LatticeSpec::triangular(2.0), t, SymbolKind::discrete);
  const SolutionField d = solve_field(LatticeSpec::rectangular(2.0), t, SymbolKind::discrete);
  EXPECT_THROW(field_errors(c, d), InvalidArgument);
}
