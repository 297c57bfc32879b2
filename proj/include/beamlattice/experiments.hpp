#ifndef BEAMLATTICE_EXPERIMENTS_HPP
#define BEAMLATTICE_EXPERIMENTS_HPP

#include "beamlattice/mode_solver.hpp"
#include "beamlattice/symbols.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace beamlattice {

/// Which homogenized model the discrete symbol is compared with.
enum class ModelPair { discrete_continuum, discrete_km };

std::string_view to_string(ModelPair p);
ModelPair model_pair_from_string(std::string_view s);

enum class InverseRoutine { lu, adjugate };

/// Inverse of a 3x3 block by partial-pivot LU or by the adjugate formula.
Matrix3c invert(const Matrix3c& m, InverseRoutine routine = InverseRoutine::lu);
Matrix2 invert(const Matrix2& m, InverseRoutine routine = InverseRoutine::lu);

/// ||S_D^{-1} - S_X^{-1}|| (spectral norm) with X the continuum or KM model.
double diff_index(const LatticeSpec& spec, FreqIndex mode, double eps, ModelPair pair,
                  InverseRoutine routine = InverseRoutine::lu);

struct SweepConfig {
  LatticeFamily family = LatticeFamily::triangular;
  std::vector<int> n_list{4, 8, 16, 32, 64, 128};
  std::vector<double> rho_list{0.01, 1.0, 100.0};
  int cutoff = 10;  ///< low-frequency subset |i'| + |j'| <= cutoff
  ModelPair pair = ModelPair::discrete_continuum;

  void validate() const;
};

struct SweepRow {
  int n = 0;
  double rho_star = 0.0;
  double max_full = 0.0;
  FreqIndex argmax_full;
  double max_low = 0.0;
  FreqIndex argmax_low;
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepRow> rows;  ///< rho-major, then n ascending
};

SweepReport max_diff_sweep(const SweepConfig& cfg);

/// Err_0, Err_1, Err_2 at a nonzero mode.
std::array<double, 3> err_indices(const LatticeSpec& spec, FreqIndex mode, double eps,
                                  InverseRoutine routine = InverseRoutine::lu);

struct ErrMap {
  int n = 0;
  double rho_star = 0.0;
  /// values[k][slot] with slot = (i' mod N) * N + (j' mod N).
  std::array<std::vector<double>, 3> values;
  /// Extremes over F_N^o, i.e. excluding the filled zero mode.
  std::array<double, 3> min{};
  std::array<double, 3> max{};

  double at(int index, FreqIndex m) const { return values[index][wrap(m.ip, n) * n + wrap(m.jp, n)]; }
};

struct ErrMapConfig {
  LatticeFamily family = LatticeFamily::triangular;
  std::vector<int> n_list{17, 33, 65, 129};
  std::vector<double> rho_list{0.01, 1.0, 100.0};

  void validate() const;
};

struct ErrMapReport {
  ErrMapConfig config;
  std::vector<ErrMap> maps;  ///< n-major, then rho in config order
  std::string zero_fill = "four-neighbour-average";
};

ErrMap err_map(const LatticeSpec& spec, int n);
ErrMapReport err_maps(const ErrMapConfig& cfg);

struct CoercivityRow {
  int n = 0;
  double rho_star = 0.0;
  double min_ratio = 0.0;
  FreqIndex argmin;
};

/// min over F_N^o of lambda_min(B) / (i'^2 + j'^2).
CoercivityRow coercivity_min(const LatticeSpec& spec, int n, SymbolKind kind = SymbolKind::discrete);

/// max over F_N^o of eps^-2 ||B_D^{-1} - B_C^{-1}||.
double inverse_difference_max(const LatticeSpec& spec, int n);

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  ///< RMS of log-residuals
  int points = 0;
};

/// Least-squares fit of log y = slope * log x + intercept.
LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

enum class LoadFamily {
  force_single_mode,   ///< f = e_x at modes +-(1,0), tau = 0; measures ||u||_0
  torque_single_mode,  ///< f = 0, tau = 1 at modes +-(1,0); measures ||u||_0
  mixed_single_mode,   ///< f = (1,1), tau = 1 at modes +-(1,0); measures ||theta||_0
  force_scaled_mode,   ///< f = e_x at modes +-(N/4,0), tau = 0; measures |u|_1
  zero,                ///< no load
};

std::string_view to_string(LoadFamily f);
LoadFamily load_family_from_string(std::string_view s);

/// Real load of the given family on an N x N grid.
LoadSpec family_load(LoadFamily family, int n);

struct ConvergencePoint {
  int n = 0;
  double eps = 0.0;
  double error = 0.0;
};

struct ConvergenceReport {
  LoadFamily family = LoadFamily::force_single_mode;
  ModelPair pair = ModelPair::discrete_continuum;
  double rho_star = 1.0;
  std::string measured;  ///< which error norm
  std::string load;      ///< which load norms are held fixed
  std::vector<ConvergencePoint> points;
  bool exact = false;  ///< every error is zero; no slope
  LogLogFit fit;
};

ConvergenceReport convergence_study(LoadFamily family, ModelPair pair, const std::vector<int>& n_list,
                                    const LatticeSpec& spec);

/// ||S_D(eps) - P|| / eps^2 at a fixed mode, with P the symbol of the
/// rectangular micropolar balance.
double rectangular_limit_constant(double rho_star, FreqIndex mode, int n);

struct TheoryCheck {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool passed = false;
  std::string detail;
};

struct TheoryReport {
  std::vector<TheoryCheck> checks;
  bool all_passed() const;
};

struct TheoryConfig {
  std::vector<int> n_list{16, 32, 64, 128};
  std::vector<double> rho_list{0.01, 1.0, 100.0};
  int identity_trials = 1000;
  std::uint64_t seed = 11;
};

TheoryReport theory_suite(const TheoryConfig& cfg = {});

}  // namespace beamlattice

#endif  // BEAMLATTICE_EXPERIMENTS_HPP
