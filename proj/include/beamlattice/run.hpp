#ifndef BEAMLATTICE_RUN_HPP
#define BEAMLATTICE_RUN_HPP

#include "beamlattice/experiments.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace beamlattice {

inline constexpr const char* kVersion = "1.0.0";

enum class ExitCode : int {
  ok = 0,
  check_failed = 1,
  invalid_config = 2,
  incompatible_load = 3,
  io_error = 4,
};

/// A configuration value failed validation; field() names the offending key.
class ConfigError : public InvalidArgument {
 public:
  ConfigError(std::string field, const std::string& what)
      : InvalidArgument("invalid " + field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Mode-space load term: amplitude at (ip, jp) plus its conjugate partner.
struct ForceTerm {
  int ip = 0, jp = 0;
  double ax = 0.0, ay = 0.0;
};
struct TorqueTerm {
  int ip = 0, jp = 0;
  double a = 0.0;
};

struct RunConfig {
  std::string command;  ///< solve, diff-sweep, err-maps, convergence, verify
  std::string preset;
  LatticeFamily lattice = LatticeFamily::triangular;
  std::vector<int> n_list;
  std::vector<double> rho_list;
  std::string model;  ///< discrete, continuum, km
  int cutoff = 10;
  std::string out = "out";
  std::vector<std::string> formats{"csv", "json"};
  std::uint64_t seed = 11;
  std::vector<int> indices{0, 1, 2};
  std::vector<LoadFamily> families;
  std::vector<ForceTerm> forces;
  std::vector<TorqueTerm> torques;
  bool random_load = false;
  std::string path = "schur";

  /// Throws ConfigError naming the first bad field.
  void validate() const;
  bool wants(std::string_view format) const;
};

/// Command defaults mirror the reference experiment settings.
RunConfig command_defaults(const std::string& command);
/// Named presets: paper-fig2, paper-fig3, paper-fig4, paper-fig5,
/// paper-fig6, paper-convergence, paper-verify.
RunConfig preset_config(const std::string& name);
std::vector<std::string> preset_names();

/// Overlays keys of a JSON object onto cfg. Unknown keys are errors.
void apply_json(RunConfig& cfg, const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& cfg);

/// Builds the load of a solve run on an N x N grid.
LoadSpec build_load(const RunConfig& cfg, int n);

/// Executes a validated config, writing artifacts and manifest.json to
/// cfg.out. Messages go to `log`.
ExitCode run(const RunConfig& cfg, std::ostream& log);

/// Full command-line entry point.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace beamlattice

#endif  // BEAMLATTICE_RUN_HPP
