#ifndef BEAMLATTICE_REPORTS_HPP
#define BEAMLATTICE_REPORTS_HPP

#include "beamlattice/experiments.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace beamlattice {

/// Bumped whenever a CSV column or JSON key changes meaning.
inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kCsvHeader = "eps,rho_star,ip,jp,value,index_kind";

/// Shortest round-trippable decimal form ("%.17g").
std::string format_double(double v);

/// Two rows per (rho*, N): index_kind diff_full / diff_low at the argmax mode.
void write_sweep_csv(const SweepReport& rep, std::ostream& os);
/// One row per (N, rho*, mode) and selected index; the zero mode carries
/// the filled value.
void write_err_csv(const ErrMapReport& rep, const std::vector<int>& indices, std::ostream& os);
/// One row per (family, N); ip, jp give the loaded mode.
void write_convergence_csv(const std::vector<ConvergenceReport>& reps, std::ostream& os);
/// Spatial nodal values: i,j,ux,uy,theta.
void write_field_csv(const FieldGrid& field, std::ostream& os);

nlohmann::json to_json(const SweepReport& rep);
nlohmann::json to_json(const ErrMapReport& rep, const std::vector<int>& indices);
nlohmann::json to_json(const ConvergenceReport& rep);
nlohmann::json to_json(const TheoryReport& rep);

std::string_view err_index_name(int index);

/// Grid of heatmap panels, one row per N and one column per rho*, each
/// titled with its (min, max) over the nonzero modes.
std::string err_heatmap_svg(const ErrMapReport& rep, int index);
/// Log-log lines of the full-range and low-frequency maxima against N.
std::string sweep_lines_svg(const SweepReport& rep);
/// Log-log error against eps with the fitted slope in the legend.
std::string convergence_svg(const std::vector<ConvergenceReport>& reps);

}  // namespace beamlattice

#endif  // BEAMLATTICE_REPORTS_HPP
