#include "beamlattice/experiments.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace beamlattice;

TEST(Invert, LuAndAdjugateAgree) {
  oracle::Gen gen(71);
  for (int t = 0; t < 100; ++t) {
    const int n = gen.integer(3, 128);
    const auto s = symbol_discrete<double>(LatticeSpec::triangular(std::pow(10.0, gen.uniform(-2, 2))),
                                           gen.nonzero_mode(n), 1.0 / n)
                       .matrix();
    const Matrix3c a = invert(s, InverseRoutine::lu);
    const Matrix3c b = invert(s, InverseRoutine::adjugate);
    EXPECT_LT((a - b).norm(), 1e-10 * a.norm());
    EXPECT_LT((s * a - Matrix3c::Identity()).norm(), 1e-10);
  }
  Matrix2 m;
  m << 2, 1, 1, 3;
  EXPECT_LT((invert(m, InverseRoutine::adjugate) * m - Matrix2::Identity()).norm(), 1e-15);
  EXPECT_THROW(invert(Matrix3c::Zero().eval()), SingularError);
}

TEST(DiffIndex, FrozenFixtures) {
  const LatticeSpec spec = LatticeSpec::triangular(1.0);
  EXPECT_NEAR(diff_index(spec, {1, 1}, 0.25, ModelPair::discrete_continuum), fixtures::kDiff11, 1e-13);
  EXPECT_NEAR(diff_index(spec, {1, 1}, 0.25, ModelPair::discrete_km), fixtures::kDiffKm11, 1e-13);
  EXPECT_NEAR(diff_index(spec, {1, 1}, 0.25, ModelPair::discrete_continuum, InverseRoutine::adjugate),
              fixtures::kDiff11, 1e-12);
  EXPECT_THROW(diff_index(spec, {0, 0}, 0.25, ModelPair::discrete_continuum), InvalidArgument);
}

TEST(DiffSweep, LowSubsetEqualsFullWhenCutoffCoversGrid) {
  SweepConfig cfg;
  cfg.n_list = {4, 8};
  cfg.rho_list = {1.0};
  cfg.cutoff = 8;
  const SweepReport r = max_diff_sweep(cfg);
  ASSERT_EQ(r.rows.size(), 2u);
  for (const SweepRow& row : r.rows) {
    EXPECT_EQ(row.max_low, row.max_full);
    EXPECT_EQ(row.argmax_low, row.argmax_full);
  }
}

TEST(DiffSweep, FullRangeFlatLowRangeFalls) {
  SweepConfig cfg;
  cfg.n_list = {16, 32, 64};
  cfg.rho_list = {1.0};
  const SweepReport r = max_diff_sweep(cfg);
  EXPECT_GT(r.rows[2].max_full, 0.5 * r.rows[0].max_full);
  EXPECT_LT(r.rows[2].max_low, r.rows[1].max_low);
  EXPECT_LT(r.rows[1].max_low, r.rows[0].max_low);
}

TEST(DiffSweep, ConfigValidation) {
  SweepConfig cfg;
  cfg.n_list = {};
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg = {};
  cfg.rho_list = {-1.0};
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg = {};
  cfg.cutoff = 0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg = {};
  cfg.family = LatticeFamily::rectangular;
  cfg.pair = ModelPair::discrete_km;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
}

TEST(ErrIndices, FrozenFixtureAndRoutineAgreement) {
  const LatticeSpec spec = LatticeSpec::triangular(1.0);
  const auto e = err_indices(spec, {3, -2}, 1.0 / 17);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(e[k], fixtures::kErr3m2[k], 1e-9 * fixtures::kErr3m2[k]);
  const auto a = err_indices(spec, {3, -2}, 1.0 / 17, InverseRoutine::adjugate);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(a[k], e[k], 1e-8 * e[k]);
}

TEST(ErrMap, ZeroModeFilledWithNeighbourAverage) {
  const ErrMap m = err_map(LatticeSpec::triangular(1.0), 9);
  for (int k = 0; k < 3; ++k) {
    const double avg = (m.at(k, {1, 0}) + m.at(k, {-1, 0}) + m.at(k, {0, 1}) + m.at(k, {0, -1})) / 4;
    EXPECT_DOUBLE_EQ(m.at(k, {0, 0}), avg);
    EXPECT_GT(m.min[k], 0.0);
    EXPECT_GE(m.max[k], m.min[k]);
  }
}

TEST(ErrMap, SymmetricUnderNegation) {
  const int n = 17;
  const ErrMap m = err_map(LatticeSpec::triangular(0.01), n);
  for (const FreqIndex f : FrequencySet(n).modes())
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(m.at(k, f), m.at(k, {-f.ip, -f.jp}), 1e-9 * m.max[k]);
}

TEST(ErrMap, ConfigValidation) {
  ErrMapConfig cfg;
  cfg.n_list = {2};
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg = {};
  cfg.rho_list = {};
  EXPECT_THROW(cfg.validate(), InvalidArgument);
}

TEST(Coercivity, MinimumStableInN) {
  for (const double rho : {0.01, 1.0, 100.0}) {
    const LatticeSpec spec = LatticeSpec::triangular(rho);
    const double a = coercivity_min(spec, 16).min_ratio;
    const double b = coercivity_min(spec, 64).min_ratio;
    EXPECT_GT(a, 0.0);
    EXPECT_LT(std::max(a, b) / std::min(a, b), 1.2);
  }
}

TEST(InverseDifference, BoundedInN) {
  const LatticeSpec spec = LatticeSpec::triangular(1.0);
  const double a = inverse_difference_max(spec, 16);
  const double b = inverse_difference_max(spec, 64);
  EXPECT_GT(a, 0.0);
  EXPECT_LT(std::max(a, b) / std::min(a, b), 1.5);
}

TEST(LogLogFit, RecoversPowerLaw) {
  const std::vector<double> x{0.5, 0.25, 0.125, 0.0625};
  std::vector<double> y;
  for (const double v : x) y.push_back(3.0 * v * v);
  const LogLogFit f = fit_loglog(x, y);
  EXPECT_NEAR(f.slope, 2.0, 1e-12);
  EXPECT_NEAR(std::exp(f.intercept), 3.0, 1e-11);
  EXPECT_LT(f.residual, 1e-12);
  EXPECT_EQ(f.points, 4);
  EXPECT_THROW(fit_loglog({1.0}, {1.0}), InvalidArgument);
  EXPECT_THROW(fit_loglog({1.0, 2.0}, {1.0, 0.0}), InvalidArgument);
}

TEST(Convergence, ZeroLoadIsExact) {
  const ConvergenceReport r =
      convergence_study(LoadFamily::zero, ModelPair::discrete_continuum, {8, 16, 32, 64}, LatticeSpec::triangular(1.0));
  EXPECT_TRUE(r.exact);
  for (const auto& p : r.points) EXPECT_EQ(p.error, 0.0);
}

TEST(Convergence, ForceModeSlopeTwo) {
  const ConvergenceReport r = convergence_study(LoadFamily::force_single_mode, ModelPair::discrete_continuum,
                                                {16, 32, 64, 128}, LatticeSpec::triangular(1.0));
  EXPECT_FALSE(r.exact);
  EXPECT_NEAR(r.fit.slope, 2.0, 0.1);
  EXPECT_LT(r.fit.residual, 0.05);
}

TEST(Convergence, RejectsTooFewOrUnsortedSizes) {
  const LatticeSpec spec = LatticeSpec::triangular(1.0);
  EXPECT_THROW(convergence_study(LoadFamily::force_single_mode, ModelPair::discrete_continuum, {8, 16, 32}, spec),
               InvalidArgument);
  EXPECT_THROW(
      convergence_study(LoadFamily::force_single_mode, ModelPair::discrete_continuum, {16, 8, 32, 64}, spec),
      InvalidArgument);
  EXPECT_THROW(family_load(LoadFamily::force_scaled_mode, 2), InvalidArgument);
}

TEST(Names, RoundTrip) {
  for (const auto f : {LoadFamily::force_single_mode, LoadFamily::torque_single_mode, LoadFamily::mixed_single_mode,
                       LoadFamily::force_scaled_mode, LoadFamily::zero})
    EXPECT_EQ(load_family_from_string(to_string(f)), f);
  EXPECT_EQ(load_family_from_string("c"), LoadFamily::mixed_single_mode);
  for (const auto p : {ModelPair::discrete_continuum, ModelPair::discrete_km})
    EXPECT_EQ(model_pair_from_string(to_string(p)), p);
  EXPECT_THROW(model_pair_from_string("nope"), InvalidArgument);
}

TEST(Determinism, ResultsIndependentOfThreadCount) {
  ErrMapConfig cfg;
  cfg.n_list = {17, 33};
  cfg.rho_list = {1.0};
  ::setenv("BEAMLATTICE_THREADS", "1", 1);
  const ErrMapReport one = err_maps(cfg);
  ::setenv("BEAMLATTICE_THREADS", "7", 1);
  const ErrMapReport seven = err_maps(cfg);
  ::unsetenv("BEAMLATTICE_THREADS");
  ASSERT_EQ(one.maps.size(), seven.maps.size());
  for (std::size_t i = 0; i < one.maps.size(); ++i)
    for (int k = 0; k < 3; ++k) EXPECT_EQ(one.maps[i].values[k], seven.maps[i].values[k]);
}

TEST(TheorySuite, PassesOnSmallGrids) {
  TheoryConfig cfg;
  cfg.n_list = {16, 32};
  cfg.identity_trials = 200;
  const TheoryReport r = theory_suite(cfg);
  EXPECT_FALSE(r.checks.empty());
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.measured << " " << c.detail;
  EXPECT_TRUE(r.all_passed());
}
