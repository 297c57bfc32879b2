#include "beamlattice/reports.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace beamlattice {
namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void csv_row(std::ostream& os, double eps, double rho, FreqIndex m, double value, std::string_view kind) {
  os << format_double(eps) << ',' << format_double(rho) << ',' << m.ip << ',' << m.jp << ',' << format_double(value)
     << ',' << kind << '\n';
}

// Piecewise-linear approximation of the viridis colormap.
std::string colormap(double t) {
  static constexpr std::array<std::array<double, 3>, 5> anchors{{{68, 1, 84},
                                                                 {59, 82, 139},
                                                                 {33, 145, 140},
                                                                 {94, 201, 98},
                                                                 {253, 231, 37}}};
  if (!std::isfinite(t)) t = 0.0;
  t = std::clamp(t, 0.0, 1.0) * (anchors.size() - 1);
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(t), anchors.size() - 2);
  const double w = t - static_cast<double>(k);
  char buf[8];
  const auto ch = [&](int c) { return static_cast<int>(std::lround(anchors[k][c] * (1 - w) + anchors[k + 1][c] * w)); };
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", ch(0), ch(1), ch(2));
  return buf;
}

constexpr std::array<const char*, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

struct LogAxes {
  double x0, x1, y0, y1;  // data range in log10
  double left = 70, top = 30, width = 520, height = 330;

  double px(double x) const { return left + (std::log10(x) - x0) / (x1 - x0) * width; }
  double py(double y) const { return top + height - (std::log10(y) - y0) / (y1 - y0) * height; }
};

LogAxes make_axes(const std::vector<double>& xs, const std::vector<double>& ys) {
  double xlo = std::numeric_limits<double>::infinity(), xhi = 0, ylo = xlo, yhi = 0;
  for (const double x : xs) xlo = std::min(xlo, x), xhi = std::max(xhi, x);
  for (const double y : ys)
    if (y > 0) ylo = std::min(ylo, y), yhi = std::max(yhi, y);
  if (!(yhi > 0)) ylo = 1e-16, yhi = 1.0;
  LogAxes a{std::floor(std::log10(xlo)), std::ceil(std::log10(xhi)), std::floor(std::log10(ylo)),
            std::ceil(std::log10(yhi))};
  if (a.x1 <= a.x0) a.x1 = a.x0 + 1;
  if (a.y1 <= a.y0) a.y1 = a.y0 + 1;
  return a;
}

void draw_axes(std::ostringstream& os, const LogAxes& a, std::string_view xlabel, std::string_view ylabel) {
  os << "<rect x='" << a.left << "' y='" << a.top << "' width='" << a.width << "' height='" << a.height
     << "' fill='none' stroke='#000'/>\n";
  for (double d = a.x0; d <= a.x1 + 1e-9; d += 1) {
    const double x = a.left + (d - a.x0) / (a.x1 - a.x0) * a.width;
    os << "<text x='" << x << "' y='" << a.top + a.height + 16 << "' font-size='11' text-anchor='middle'>1e"
       << static_cast<int>(d) << "</text>\n";
  }
  for (double d = a.y0; d <= a.y1 + 1e-9; d += 1) {
    const double y = a.top + a.height - (d - a.y0) / (a.y1 - a.y0) * a.height;
    os << "<text x='" << a.left - 6 << "' y='" << y + 4 << "' font-size='11' text-anchor='end'>1e"
       << static_cast<int>(d) << "</text>\n";
  }
  os << "<text x='" << a.left + a.width / 2 << "' y='" << a.top + a.height + 34
     << "' font-size='12' text-anchor='middle'>" << xlabel << "</text>\n";
  os << "<text x='16' y='" << a.top + a.height / 2 << "' font-size='12' transform='rotate(-90 16 "
     << a.top + a.height / 2 << ")' text-anchor='middle'>" << ylabel << "</text>\n";
}

void polyline(std::ostringstream& os, const LogAxes& a, const std::vector<double>& xs, const std::vector<double>& ys,
              const char* color, bool dashed) {
  os << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5'" << (dashed ? " stroke-dasharray='5,3'" : "")
     << " points='";
  for (std::size_t k = 0; k < xs.size(); ++k)
    if (ys[k] > 0) os << fmt("%.2f", a.px(xs[k])) << ',' << fmt("%.2f", a.py(ys[k])) << ' ';
  os << "'/>\n";
}

}  // namespace

std::string format_double(double v) { return fmt("%.17g", v); }

std::string_view err_index_name(int index) {
  switch (index) {
    case 0:
      return "err0";
    case 1:
      return "err1";
    case 2:
      return "err2";
  }
  throw InvalidArgument("err index must be 0, 1 or 2");
}

void write_sweep_csv(const SweepReport& rep, std::ostream& os) {
  os << kCsvHeader << '\n';
  for (const SweepRow& r : rep.rows) {
    csv_row(os, 1.0 / r.n, r.rho_star, r.argmax_full, r.max_full, "diff_full");
    csv_row(os, 1.0 / r.n, r.rho_star, r.argmax_low, r.max_low, "diff_low");
  }
}

void write_err_csv(const ErrMapReport& rep, const std::vector<int>& indices, std::ostream& os) {
  os << kCsvHeader << '\n';
  for (const ErrMap& m : rep.maps)
    for (const int e : indices)
      for (const FreqIndex f : FrequencySet(m.n).modes())
        csv_row(os, 1.0 / m.n, m.rho_star, f, m.at(e, f), err_index_name(e));
}

void write_convergence_csv(const std::vector<ConvergenceReport>& reps, std::ostream& os) {
  os << kCsvHeader << '\n';
  for (const ConvergenceReport& r : reps) {
    const std::string kind = std::string(to_string(r.family)) + ":" + r.measured;
    for (const ConvergencePoint& p : r.points) {
      const FreqIndex m = r.family == LoadFamily::force_scaled_mode ? FreqIndex{p.n / 4, 0} : FreqIndex{1, 0};
      csv_row(os, p.eps, r.rho_star, m, p.error, kind);
    }
  }
}

void write_field_csv(const FieldGrid& field, std::ostream& os) {
  os << "i,j,ux,uy,theta\n";
  const int n = field.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      os << i << ',' << j << ',' << format_double(field.u.at(i, j)(0).real()) << ','
         << format_double(field.u.at(i, j)(1).real()) << ',' << format_double(field.theta.at(i, j)(0).real())
         << '\n';
}

nlohmann::json to_json(const SweepReport& rep) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "diff-sweep";
  j["lattice"] = to_string(rep.config.family);
  j["model_pair"] = to_string(rep.config.pair);
  j["cutoff"] = rep.config.cutoff;
  j["grid_parity"] = std::all_of(rep.config.n_list.begin(), rep.config.n_list.end(), [](int n) { return n % 2 == 0; })
                         ? "even"
                     : std::all_of(rep.config.n_list.begin(), rep.config.n_list.end(), [](int n) { return n % 2; })
                         ? "odd"
                         : "mixed";
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRow& r : rep.rows) {
    rows.push_back({{"n", r.n},
                    {"eps", 1.0 / r.n},
                    {"rho_star", r.rho_star},
                    {"max_full", r.max_full},
                    {"argmax_full", {r.argmax_full.ip, r.argmax_full.jp}},
                    {"max_low", r.max_low},
                    {"argmax_low", {r.argmax_low.ip, r.argmax_low.jp}}});
  }
  j["rows"] = rows;
  return j;
}

nlohmann::json to_json(const ErrMapReport& rep, const std::vector<int>& indices) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "err-maps";
  j["lattice"] = to_string(rep.config.family);
  j["zero_fill"] = rep.zero_fill;
  nlohmann::json rows = nlohmann::json::array();
  for (const ErrMap& m : rep.maps) {
    for (const int e : indices) {
      rows.push_back({{"n", m.n},
                      {"eps", 1.0 / m.n},
                      {"rho_star", m.rho_star},
                      {"index", err_index_name(e)},
                      {"min", m.min[e]},
                      {"max", m.max[e]}});
    }
  }
  j["summaries"] = rows;
  return j;
}

nlohmann::json to_json(const ConvergenceReport& rep) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["family"] = to_string(rep.family);
  j["model_pair"] = to_string(rep.pair);
  j["rho_star"] = rep.rho_star;
  j["measured"] = rep.measured;
  j["load"] = rep.load;
  j["exact"] = rep.exact;
  nlohmann::json pts = nlohmann::json::array();
  for (const ConvergencePoint& p : rep.points) pts.push_back({{"n", p.n}, {"eps", p.eps}, {"error", p.error}});
  j["points"] = pts;
  if (!rep.exact) j["fit"] = {{"slope", rep.fit.slope}, {"intercept", rep.fit.intercept},
                              {"residual", rep.fit.residual}, {"points", rep.fit.points}};
  return j;
}

nlohmann::json to_json(const TheoryReport& rep) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "verify";
  j["all_passed"] = rep.all_passed();
  nlohmann::json checks = nlohmann::json::array();
  for (const TheoryCheck& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"measured", c.measured},
                      {"threshold", c.threshold},
                      {"passed", c.passed},
                      {"detail", c.detail}});
  j["checks"] = checks;
  return j;
}

std::string err_heatmap_svg(const ErrMapReport& rep, int index) {
  err_index_name(index);
  const auto& ns = rep.config.n_list;
  const auto& rhos = rep.config.rho_list;
  const double panel = 200, gap = 50, left = 80, top = 40;
  const double width = left + rhos.size() * (panel + gap);
  const double height = top + ns.size() * (panel + gap);
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << height
     << "' font-family='sans-serif'>\n";
  os << "<rect width='100%' height='100%' fill='#fff'/>\n";
  os << "<text x='" << width / 2 << "' y='20' font-size='14' text-anchor='middle'>" << err_index_name(index)
     << "</text>\n";
  for (std::size_t c = 0; c < rhos.size(); ++c)
    os << "<text x='" << left + c * (panel + gap) + panel / 2 << "' y='" << height - 8
       << "' font-size='12' text-anchor='middle'>rho* = " << fmt("%g", rhos[c]) << "</text>\n";

  for (const ErrMap& m : rep.maps) {
    const std::size_t r = std::find(ns.begin(), ns.end(), m.n) - ns.begin();
    const std::size_t c = std::find(rhos.begin(), rhos.end(), m.rho_star) - rhos.begin();
    const double x0 = left + c * (panel + gap);
    const double y0 = top + r * (panel + gap) + 20;
    if (c == 0)
      os << "<text x='" << x0 - 10 << "' y='" << y0 + panel / 2 << "' font-size='12' text-anchor='end'>eps = 1/"
         << m.n << "</text>\n";
    os << "<text x='" << x0 + panel / 2 << "' y='" << y0 - 6 << "' font-size='11' text-anchor='middle'>("
       << fmt("%.4g", m.min[index]) << ", " << fmt("%.4g", m.max[index]) << ")</text>\n";
    const FrequencySet fs(m.n);
    const double cell = panel / m.n;
    const double span = m.max[index] - m.min[index];
    for (const FreqIndex f : fs.modes()) {
      const double t = span > 0 ? (m.at(index, f) - m.min[index]) / span : 0.0;
      const double x = x0 + (f.ip - fs.lo()) * cell;
      const double y = y0 + (fs.hi() - f.jp) * cell;
      os << "<rect x='" << fmt("%.3f", x) << "' y='" << fmt("%.3f", y) << "' width='" << fmt("%.3f", cell + 0.02)
         << "' height='" << fmt("%.3f", cell + 0.02) << "' fill='" << colormap(t) << "'/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string sweep_lines_svg(const SweepReport& rep) {
  std::vector<double> xs, ys;
  for (const SweepRow& r : rep.rows) {
    xs.push_back(r.n);
    ys.push_back(r.max_full);
    ys.push_back(r.max_low);
  }
  const LogAxes a = make_axes(xs, ys);
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='760' height='420' font-family='sans-serif'>\n";
  os << "<rect width='100%' height='100%' fill='#fff'/>\n";
  draw_axes(os, a, "N", "max diff");
  const auto& rhos = rep.config.rho_list;
  for (std::size_t c = 0; c < rhos.size(); ++c) {
    std::vector<double> n, full, low;
    for (const SweepRow& r : rep.rows)
      if (r.rho_star == rhos[c]) n.push_back(r.n), full.push_back(r.max_full), low.push_back(r.max_low);
    const char* color = kPalette[c % kPalette.size()];
    polyline(os, a, n, full, color, false);
    polyline(os, a, n, low, color, true);
    os << "<text x='600' y='" << 50 + 36 * c << "' font-size='11' fill='" << color << "'>rho* = " << fmt("%g", rhos[c])
       << " full</text>\n";
    os << "<text x='600' y='" << 64 + 36 * c << "' font-size='11' fill='" << color
       << "'>rho* = " << fmt("%g", rhos[c]) << " |i'|+|j'| &lt;= " << rep.config.cutoff << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string convergence_svg(const std::vector<ConvergenceReport>& reps) {
  std::vector<double> xs, ys;
  for (const auto& r : reps)
    for (const auto& p : r.points) xs.push_back(p.eps), ys.push_back(p.error);
  const LogAxes a = make_axes(xs.empty() ? std::vector<double>{0.1, 1.0} : xs, ys);
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='820' height='420' font-family='sans-serif'>\n";
  os << "<rect width='100%' height='100%' fill='#fff'/>\n";
  draw_axes(os, a, "eps", "error");
  for (std::size_t k = 0; k < reps.size(); ++k) {
    std::vector<double> x, y;
    for (const auto& p : reps[k].points) x.push_back(p.eps), y.push_back(p.error);
    const char* color = kPalette[k % kPalette.size()];
    polyline(os, a, x, y, color, false);
    os << "<text x='600' y='" << 50 + 16 * k << "' font-size='11' fill='" << color << "'>" << to_string(reps[k].family)
       << (reps[k].exact ? " exact" : " slope " + fmt("%.3f", reps[k].fit.slope)) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace beamlattice
