#include "beamlattice/run.hpp"

#include "beamlattice/reports.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace beamlattice {
namespace fs = std::filesystem;

namespace {

const std::vector<std::string> kCommands{"solve", "diff-sweep", "err-maps", "convergence", "verify"};

class IoError : public Error {
 public:
  using Error::Error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_number(const std::string& field, const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(field, "'" + s + "' is not a number");
  }
}

int parse_int(const std::string& field, const std::string& s) {
  const double v = parse_number(field, s);
  if (v != static_cast<int>(v)) throw ConfigError(field, "'" + s + "' is not an integer");
  return static_cast<int>(v);
}

ForceTerm parse_force(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 4) throw ConfigError("--force", "expected IP,JP,AX,AY, got '" + s + "'");
  return {parse_int("--force", parts[0]), parse_int("--force", parts[1]), parse_number("--force", parts[2]),
          parse_number("--force", parts[3])};
}

TorqueTerm parse_torque(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 3) throw ConfigError("--torque", "expected IP,JP,A, got '" + s + "'");
  return {parse_int("--torque", parts[0]), parse_int("--torque", parts[1]), parse_number("--torque", parts[2])};
}

int index_from_name(const std::string& field, const std::string& s) {
  if (s == "err0" || s == "0") return 0;
  if (s == "err1" || s == "1") return 1;
  if (s == "err2" || s == "2") return 2;
  throw ConfigError(field, "unknown index '" + s + "' (expected err0, err1 or err2)");
}

template <typename T>
std::vector<T> json_list(const nlohmann::json& v) {
  if (v.is_array()) return v.get<std::vector<T>>();
  return {v.get<T>()};
}

SymbolKind solve_kind(const RunConfig& cfg) { return symbol_kind_from_string(cfg.model); }

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw IoError("cannot open '" + p.string() + "' for writing");
  f << content;
  if (!f) throw IoError("failed writing '" + p.string() + "'");
}

struct Artifacts {
  std::vector<std::pair<std::string, std::string>> files;  // name, content
  void add(std::string name, std::string content) { files.emplace_back(std::move(name), std::move(content)); }
};

template <typename Fn>
std::string render(Fn&& fn) {
  std::ostringstream os;
  fn(os);
  return os.str();
}

}  // namespace

void RunConfig::validate() const {
  if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end())
    throw ConfigError("command", "'" + command + "' is not one of solve, diff-sweep, err-maps, convergence, verify");
  if (n_list.empty()) throw ConfigError("--n", "at least one grid size is required");
  for (const int n : n_list)
    if (n < 2) throw ConfigError("--n", "grid sizes must be >= 2, got " + std::to_string(n));
  if (!std::is_sorted(n_list.begin(), n_list.end())) throw ConfigError("--n", "grid sizes must be ascending");
  if (rho_list.empty()) throw ConfigError("--rho-star", "at least one value is required");
  for (const double r : rho_list)
    if (!(r > 0.0) || !std::isfinite(r)) throw ConfigError("--rho-star", "values must be positive and finite");
  if (cutoff < 1) throw ConfigError("--cutoff", "must be >= 1");
  if (out.empty()) throw ConfigError("--out", "output directory must not be empty");
  for (const auto& f : formats)
    if (f != "csv" && f != "json" && f != "svg") throw ConfigError("--format", "unknown format '" + f + "'");
  for (const int e : indices)
    if (e < 0 || e > 2) throw ConfigError("--index", "indices must be err0, err1 or err2");
  if (path != "schur" && path != "direct") throw ConfigError("--path", "expected schur or direct");

  if (command == "solve") {
    try {
      symbol_kind_from_string(model);
    } catch (const InvalidArgument&) {
      throw ConfigError("--model", "'" + model + "' is not one of discrete, continuum, km");
    }
    if (model == "km" && lattice != LatticeFamily::triangular)
      throw ConfigError("--model", "km is defined for the triangular lattice only");
    const FrequencySet freq(n_list.front());
    for (const auto& f : forces)
      if (!freq.contains({f.ip, f.jp})) throw ConfigError("--force", "mode outside F_N");
    for (const auto& t : torques)
      if (!freq.contains({t.ip, t.jp})) throw ConfigError("--torque", "mode outside F_N");
  }
  if (command == "diff-sweep") {
    if (model != "continuum" && model != "km") throw ConfigError("--model", "diff-sweep compares against continuum or km");
    if (model == "km" && lattice != LatticeFamily::triangular)
      throw ConfigError("--model", "km is defined for the triangular lattice only");
  }
  if (command == "err-maps") {
    for (const int n : n_list)
      if (n < 3) throw ConfigError("--n", "err-maps needs grid sizes >= 3");
  }
  if (command == "convergence") {
    if (model != "continuum" && model != "km") throw ConfigError("--model", "convergence compares against continuum or km");
    if (n_list.size() < 4) throw ConfigError("--n", "convergence needs at least 4 grid sizes");
    if (n_list.front() < 4) throw ConfigError("--n", "convergence needs grid sizes >= 4");
    if (families.empty()) throw ConfigError("--family", "at least one load family is required");
  }
  if (command == "verify" && n_list.size() < 2) throw ConfigError("--n", "verify needs at least 2 grid sizes");
}

bool RunConfig::wants(std::string_view format) const {
  return std::find(formats.begin(), formats.end(), format) != formats.end();
}

RunConfig command_defaults(const std::string& command) {
  RunConfig c;
  c.command = command;
  c.rho_list = {0.01, 1.0, 100.0};
  if (command == "solve") {
    c.n_list = {8};
    c.rho_list = {1.0};
    c.model = "discrete";
  } else if (command == "diff-sweep") {
    c.n_list = {4, 8, 16, 32, 64, 128};
    c.model = "continuum";
  } else if (command == "err-maps") {
    c.n_list = {17, 33, 65, 129};
  } else if (command == "convergence") {
    c.n_list = {8, 16, 32, 64, 128};
    c.rho_list = {1.0};
    c.model = "continuum";
    c.families = {LoadFamily::force_single_mode, LoadFamily::torque_single_mode, LoadFamily::mixed_single_mode,
                  LoadFamily::force_scaled_mode};
  } else if (command == "verify") {
    c.n_list = {16, 32, 64, 128};
  }
  return c;
}

std::vector<std::string> preset_names() {
  return {"paper-fig2", "paper-fig3", "paper-fig4", "paper-fig5", "paper-fig6", "paper-convergence", "paper-verify"};
}

RunConfig preset_config(const std::string& name) {
  RunConfig c;
  if (name == "paper-fig2" || name == "paper-fig3") {
    c = command_defaults("diff-sweep");
    c.model = name == "paper-fig2" ? "continuum" : "km";
    c.formats = {"csv", "json", "svg"};
  } else if (name == "paper-fig4" || name == "paper-fig5" || name == "paper-fig6") {
    c = command_defaults("err-maps");
    c.indices = {name.back() - '4'};
    c.formats = {"csv", "json", "svg"};
  } else if (name == "paper-convergence") {
    c = command_defaults("convergence");
    c.formats = {"csv", "json", "svg"};
  } else if (name == "paper-verify") {
    c = command_defaults("verify");
  } else {
    throw ConfigError("--preset", "unknown preset '" + name + "'");
  }
  c.preset = name;
  return c;
}

void apply_json(RunConfig& cfg, const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("--config", "top level must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    try {
      if (key == "command") cfg.command = v.get<std::string>();
      else if (key == "preset") cfg.preset = v.get<std::string>();
      else if (key == "lattice") cfg.lattice = lattice_family_from_string(v.get<std::string>());
      else if (key == "n") cfg.n_list = json_list<int>(v);
      else if (key == "rho_star") cfg.rho_list = json_list<double>(v);
      else if (key == "model") cfg.model = v.get<std::string>();
      else if (key == "cutoff") cfg.cutoff = v.get<int>();
      else if (key == "out") cfg.out = v.get<std::string>();
      else if (key == "format") cfg.formats = json_list<std::string>(v);
      else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
      else if (key == "random_load") cfg.random_load = v.get<bool>();
      else if (key == "path") cfg.path = v.get<std::string>();
      else if (key == "index") {
        cfg.indices.clear();
        for (const auto& s : json_list<std::string>(v)) cfg.indices.push_back(index_from_name("index", s));
      } else if (key == "family") {
        cfg.families.clear();
        for (const auto& s : json_list<std::string>(v)) cfg.families.push_back(load_family_from_string(s));
      } else if (key == "forces") {
        cfg.forces.clear();
        for (const auto& t : v) {
          const auto a = t.get<std::vector<double>>();
          if (a.size() != 4) throw ConfigError("forces", "entries must be [ip, jp, ax, ay]");
          cfg.forces.push_back({static_cast<int>(a[0]), static_cast<int>(a[1]), a[2], a[3]});
        }
      } else if (key == "torques") {
        cfg.torques.clear();
        for (const auto& t : v) {
          const auto a = t.get<std::vector<double>>();
          if (a.size() != 3) throw ConfigError("torques", "entries must be [ip, jp, a]");
          cfg.torques.push_back({static_cast<int>(a[0]), static_cast<int>(a[1]), a[2]});
        }
      } else {
        throw ConfigError(key, "unknown configuration key");
      }
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(key, e.what());
    } catch (const ConfigError&) {
      throw;
    } catch (const InvalidArgument& e) {
      throw ConfigError(key, e.what());
    }
  }
}

nlohmann::json to_json(const RunConfig& cfg) {
  nlohmann::json j;
  j["command"] = cfg.command;
  j["preset"] = cfg.preset;
  j["lattice"] = to_string(cfg.lattice);
  j["n"] = cfg.n_list;
  j["rho_star"] = cfg.rho_list;
  j["model"] = cfg.model;
  j["cutoff"] = cfg.cutoff;
  j["out"] = cfg.out;
  j["format"] = cfg.formats;
  j["seed"] = cfg.seed;
  j["path"] = cfg.path;
  j["random_load"] = cfg.random_load;
  nlohmann::json idx = nlohmann::json::array();
  for (const int e : cfg.indices) idx.push_back(err_index_name(e));
  j["index"] = idx;
  nlohmann::json fam = nlohmann::json::array();
  for (const auto f : cfg.families) fam.push_back(to_string(f));
  j["family"] = fam;
  nlohmann::json forces = nlohmann::json::array();
  for (const auto& f : cfg.forces) forces.push_back({f.ip, f.jp, f.ax, f.ay});
  j["forces"] = forces;
  nlohmann::json torques = nlohmann::json::array();
  for (const auto& t : cfg.torques) torques.push_back({t.ip, t.jp, t.a});
  j["torques"] = torques;
  return j;
}

LoadSpec build_load(const RunConfig& cfg, int n) {
  LoadSpec load = LoadSpec::zeros(n);
  const auto add = [n](GridFunction& g, FreqIndex m, const Eigen::VectorXcd& amp) {
    g.at(m) += amp;
    const FreqIndex neg{-m.ip, -m.jp};
    if (g.slot(neg.ip, neg.jp) != g.slot(m.ip, m.jp)) g.at(neg) += amp.conjugate();
    (void)n;
  };
  for (const auto& f : cfg.forces) add(load.f_hat, {f.ip, f.jp}, Eigen::Vector2cd(f.ax, f.ay));
  for (const auto& t : cfg.torques) {
    Eigen::VectorXcd a(1);
    a(0) = t.a;
    add(load.tau_hat, {t.ip, t.jp}, a);
  }
  if (cfg.random_load) {
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> normal;
    GridFunction f = GridFunction::zeros(n, 2, Domain::spatial);
    GridFunction tau = GridFunction::zeros(n, 1, Domain::spatial);
    for (Eigen::Index k = 0; k < f.values().cols(); ++k) {
      f.values()(0, k) = normal(rng);
      f.values()(1, k) = normal(rng);
      tau.values()(0, k) = normal(rng);
    }
    const Eigen::Vector2cd mean = f.values().rowwise().mean();
    f.values().colwise() -= mean;
    const LoadSpec r = LoadSpec::from_spatial(f, tau);
    load.f_hat.values() += r.f_hat.values();
    load.tau_hat.values() += r.tau_hat.values();
    load.f_hat.at(FreqIndex{}).setZero();
  }
  return load;
}

ExitCode run(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  Artifacts art;
  ExitCode code = ExitCode::ok;

  if (cfg.command == "solve") {
    const int n = cfg.n_list.front();
    const LatticeSpec spec{cfg.lattice, cfg.rho_list.front()};
    FieldSolveOptions opts;
    opts.path = cfg.path == "direct" ? SolvePath::direct : SolvePath::schur;
    const SolutionField sol = solve_field(spec, build_load(cfg, n), solve_kind(cfg), opts);
    const FieldGrid field = sol.spatial();
    if (cfg.wants("csv")) art.add("solution.csv", render([&](std::ostream& os) { write_field_csv(field, os); }));
    nlohmann::json j{{"schema_version", kReportSchemaVersion},
                     {"kind", "solve"},
                     {"n", n},
                     {"eps", 1.0 / n},
                     {"rho_star", spec.rho_star},
                     {"model", cfg.model},
                     {"max_residual", sol.max_residual},
                     {"u_l2", l2_norm(sol.u_hat)},
                     {"theta_l2", l2_norm(sol.theta_hat)}};
    if (cfg.wants("json")) art.add("solution.json", j.dump(2) + "\n");
    log << "solve: N=" << n << " model=" << cfg.model << " ||u||=" << format_double(l2_norm(sol.u_hat))
        << " ||theta||=" << format_double(l2_norm(sol.theta_hat)) << " max residual "
        << format_double(sol.max_residual) << '\n';
  } else if (cfg.command == "diff-sweep") {
    SweepConfig sc;
    sc.family = cfg.lattice;
    sc.n_list = cfg.n_list;
    sc.rho_list = cfg.rho_list;
    sc.cutoff = cfg.cutoff;
    sc.pair = model_pair_from_string(cfg.model);
    const SweepReport rep = max_diff_sweep(sc);
    if (cfg.wants("csv")) art.add("diff_sweep.csv", render([&](std::ostream& os) { write_sweep_csv(rep, os); }));
    if (cfg.wants("json")) art.add("diff_sweep.json", to_json(rep).dump(2) + "\n");
    if (cfg.wants("svg")) art.add("diff_sweep.svg", sweep_lines_svg(rep));
    for (const auto& r : rep.rows)
      log << "rho*=" << r.rho_star << " N=" << r.n << " full=" << format_double(r.max_full)
          << " low=" << format_double(r.max_low) << '\n';
  } else if (cfg.command == "err-maps") {
    ErrMapConfig ec;
    ec.family = cfg.lattice;
    ec.n_list = cfg.n_list;
    ec.rho_list = cfg.rho_list;
    const ErrMapReport rep = err_maps(ec);
    if (cfg.wants("csv")) art.add("err_maps.csv", render([&](std::ostream& os) { write_err_csv(rep, cfg.indices, os); }));
    if (cfg.wants("json")) art.add("err_maps.json", to_json(rep, cfg.indices).dump(2) + "\n");
    if (cfg.wants("svg"))
      for (const int e : cfg.indices) art.add(std::string(err_index_name(e)) + ".svg", err_heatmap_svg(rep, e));
    for (const auto& m : rep.maps)
      for (const int e : cfg.indices)
        log << err_index_name(e) << " N=" << m.n << " rho*=" << m.rho_star << " (" << format_double(m.min[e]) << ", "
            << format_double(m.max[e]) << ")\n";
  } else if (cfg.command == "convergence") {
    std::vector<ConvergenceReport> reps;
    for (const double rho : cfg.rho_list)
      for (const auto fam : cfg.families)
        reps.push_back(convergence_study(fam, model_pair_from_string(cfg.model), cfg.n_list,
                                         LatticeSpec{cfg.lattice, rho}));
    if (cfg.wants("csv"))
      art.add("convergence.csv", render([&](std::ostream& os) { write_convergence_csv(reps, os); }));
    if (cfg.wants("json")) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : reps) j.push_back(to_json(r));
      art.add("convergence.json", j.dump(2) + "\n");
    }
    if (cfg.wants("svg")) art.add("convergence.svg", convergence_svg(reps));
    for (const auto& r : reps) {
      log << to_string(r.family) << " rho*=" << r.rho_star << " " << r.measured << ": ";
      if (r.exact) log << "exact (all errors zero)\n";
      else log << "slope " << format_double(r.fit.slope) << " residual " << format_double(r.fit.residual) << '\n';
    }
  } else if (cfg.command == "verify") {
    TheoryConfig tc;
    tc.n_list = cfg.n_list;
    tc.rho_list = cfg.rho_list;
    tc.seed = cfg.seed;
    const TheoryReport rep = theory_suite(tc);
    if (cfg.wants("json")) art.add("verify.json", to_json(rep).dump(2) + "\n");
    if (cfg.wants("csv")) {
      art.add("verify.csv", render([&](std::ostream& os) {
                os << "name,measured,threshold,passed\n";
                for (const auto& c : rep.checks)
                  os << '"' << c.name << "\"," << format_double(c.measured) << ',' << format_double(c.threshold) << ','
                     << (c.passed ? "true" : "false") << '\n';
              }));
    }
    for (const auto& c : rep.checks)
      log << (c.passed ? "PASS " : "FAIL ") << c.name << " measured=" << format_double(c.measured) << " ("
          << c.detail << ")\n";
    if (!rep.all_passed()) code = ExitCode::check_failed;
  }

  const fs::path dir(cfg.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + cfg.out + "': " + ec.message());
  nlohmann::json manifest{{"tool", "beamlattice"},
                          {"version", kVersion},
                          {"schema_version", kReportSchemaVersion},
                          {"csv_header", kCsvHeader},
                          {"config", to_json(cfg)}};
  nlohmann::json files = nlohmann::json::array();
  for (const auto& [name, content] : art.files) {
    write_file(dir / name, content);
    files.push_back(name);
  }
  manifest["artifacts"] = files;
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
  return code;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fourier-space homogenization analysis of periodic beam lattices", "beamlattice"};
  app.require_subcommand(0, 1);

  std::string preset, config_file, lattice, model, out_dir, load_file, path;
  std::vector<std::string> n_arg, rho_arg, formats, indices, families, forces, torques;
  int cutoff = 0;
  std::uint64_t seed = 0;
  bool random_load = false;

  std::map<std::string, CLI::Option*> opt;
  opt["preset"] = app.add_option("--preset", preset, "Named preset (" + [] {
    std::string s;
    for (const auto& p : preset_names()) s += (s.empty() ? "" : ", ") + p;
    return s;
  }() + ")");
  opt["config"] = app.add_option("--config", config_file, "JSON config file");
  opt["lattice"] = app.add_option("--lattice", lattice, "triangular or rectangular");
  opt["n"] = app.add_option("--n", n_arg, "Grid size(s) N, comma separated")->delimiter(',');
  opt["rho"] = app.add_option("--rho-star", rho_arg, "rho* value(s), comma separated")->delimiter(',');
  opt["model"] = app.add_option("--model", model, "discrete, continuum or km");
  opt["out"] = app.add_option("--out", out_dir, "Output directory");
  opt["format"] = app.add_option("--format", formats, "csv, json, svg (comma separated)")->delimiter(',');
  opt["cutoff"] = app.add_option("--cutoff", cutoff, "Low-frequency cutoff M");
  opt["seed"] = app.add_option("--seed", seed, "Random seed");
  opt["index"] = app.add_option("--index", indices, "err0, err1, err2 (comma separated)")->delimiter(',');
  opt["family"] = app.add_option("--family", families, "Convergence load families")->delimiter(',');
  opt["force"] = app.add_option("--force", forces, "Force mode IP,JP,AX,AY (repeatable)");
  opt["torque"] = app.add_option("--torque", torques, "Torque mode IP,JP,A (repeatable)");
  opt["load-file"] = app.add_option("--load-file", load_file, "JSON file with forces/torques lists");
  opt["path"] = app.add_option("--path", path, "Per-mode solve path: schur or direct");
  opt["random"] = app.add_flag("--random-load", random_load, "Add a seeded random compatible load");

  std::map<std::string, CLI::App*> subs;
  subs["solve"] = app.add_subcommand("solve", "Solve one lattice problem in Fourier space");
  subs["diff-sweep"] = app.add_subcommand("diff-sweep", "Max inverse-symbol difference sweeps");
  subs["err-maps"] = app.add_subcommand("err-maps", "Err0/Err1/Err2 maps over the frequency grid");
  subs["convergence"] = app.add_subcommand("convergence", "Convergence-order study");
  subs["verify"] = app.add_subcommand("verify", "Run the theory check suite");
  for (auto& [name, sub] : subs) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::invalid_config);
  }

  try {
    std::string command;
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) command = name;

    nlohmann::json file_cfg;
    if (!config_file.empty()) {
      std::ifstream f(config_file);
      if (!f) throw ConfigError("--config", "cannot read '" + config_file + "'");
      try {
        file_cfg = nlohmann::json::parse(f);
      } catch (const nlohmann::json::exception& e) {
        throw ConfigError("--config", e.what());
      }
    }
    if (preset.empty() && file_cfg.contains("preset")) preset = file_cfg["preset"].get<std::string>();

    RunConfig cfg;
    if (!preset.empty()) {
      cfg = preset_config(preset);
      if (!command.empty() && command != cfg.command)
        throw ConfigError("--preset", "preset '" + preset + "' runs " + cfg.command + ", not " + command);
    } else {
      if (command.empty() && file_cfg.contains("command")) command = file_cfg["command"].get<std::string>();
      if (command.empty()) throw ConfigError("command", "choose one of solve, diff-sweep, err-maps, convergence, verify");
      cfg = command_defaults(command);
    }
    if (!file_cfg.is_null()) apply_json(cfg, file_cfg);

    if (opt["lattice"]->count()) {
      try {
        cfg.lattice = lattice_family_from_string(lattice);
      } catch (const InvalidArgument&) {
        throw ConfigError("--lattice", "'" + lattice + "' is not triangular or rectangular");
      }
    }
    if (opt["n"]->count()) {
      cfg.n_list.clear();
      for (const auto& s : n_arg) cfg.n_list.push_back(parse_int("--n", s));
    }
    if (opt["rho"]->count()) {
      cfg.rho_list.clear();
      for (const auto& s : rho_arg) cfg.rho_list.push_back(parse_number("--rho-star", s));
    }
    if (opt["model"]->count()) cfg.model = model;
    if (opt["out"]->count()) cfg.out = out_dir;
    if (opt["format"]->count()) cfg.formats = formats;
    if (opt["cutoff"]->count()) cfg.cutoff = cutoff;
    if (opt["seed"]->count()) cfg.seed = seed;
    if (opt["path"]->count()) cfg.path = path;
    if (random_load) cfg.random_load = true;
    if (opt["index"]->count()) {
      cfg.indices.clear();
      for (const auto& s : indices) cfg.indices.push_back(index_from_name("--index", s));
    }
    if (opt["family"]->count()) {
      cfg.families.clear();
      for (const auto& s : families) {
        try {
          cfg.families.push_back(load_family_from_string(s));
        } catch (const InvalidArgument&) {
          throw ConfigError("--family", "unknown load family '" + s + "'");
        }
      }
    }
    if (opt["load-file"]->count()) {
      std::ifstream f(load_file);
      if (!f) throw ConfigError("--load-file", "cannot read '" + load_file + "'");
      nlohmann::json lj;
      try {
        lj = nlohmann::json::parse(f);
      } catch (const nlohmann::json::exception& e) {
        throw ConfigError("--load-file", e.what());
      }
      for (const auto& [k, v] : lj.items())
        if (k != "forces" && k != "torques") throw ConfigError("--load-file", "unknown key '" + k + "'");
      apply_json(cfg, lj);
    }
    for (const auto& s : forces) cfg.forces.push_back(parse_force(s));
    for (const auto& s : torques) cfg.torques.push_back(parse_torque(s));

    return static_cast<int>(run(cfg, out));
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::invalid_config);
  } catch (const CompatibilityError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::incompatible_load);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::io_error);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::io_error);
  }
}

}  // namespace beamlattice
