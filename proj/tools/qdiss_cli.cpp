// qdiss: point evaluation, sweeps, oracle checks and discovery from the command line.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qdiss/channels.hpp"
#include "qdiss/errors.hpp"
#include "qdiss/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;
constexpr int kExitOracle = 5;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

const std::vector<std::string> kStateNames = {"ghz", "w", "sepmix", "bisep"};
const std::vector<std::string> kChannelNames = {"gad", "dephasing", "depolarizing"};

struct ModelFlags {
  std::string state = "ghz";
  std::string channel = "gad";
  double q = 1.0;
  double gamma_rate = qdiss::kDefaultDecayRate;
  int grid_n = qdiss::MinimizerSettings{}.grid_n;
  int refine_iters = qdiss::MinimizerSettings{}.refine_iters;
  double tol = qdiss::MinimizerSettings{}.tol;

  qdiss::ChannelSpec channel_spec() const {
    qdiss::ChannelSpec spec{qdiss::parse_channel_family(channel), q, gamma_rate};
    spec.validate();
    return spec;
  }

  qdiss::MinimizerSettings minimizer() const {
    qdiss::MinimizerSettings m;
    m.grid_n = grid_n;
    m.refine_iters = refine_iters;
    m.tol = tol;
    m.validate();
    return m;
  }
};

void add_model_options(CLI::App* app, ModelFlags& f, bool with_minimizer) {
  app->add_option("--state", f.state, "initial state family")->check(CLI::IsMember(kStateNames));
  app->add_option("--channel", f.channel, "noise channel")->check(CLI::IsMember(kChannelNames))->capture_default_str();
  app->add_option("--q", f.q, "GAD asymptotic bias q in [0,1]")->capture_default_str();
  app->add_option("--gamma-rate", f.gamma_rate, "decay rate Gamma in 1/s")->capture_default_str();
  if (with_minimizer) {
    app->add_option("--grid-n", f.grid_n, "angle grid points per axis")->capture_default_str();
    app->add_option("--refine-iters", f.refine_iters, "simplex refinement iterations")->capture_default_str();
    app->add_option("--tol", f.tol, "minimizer value tolerance")->capture_default_str();
  }
}

void enable_config(CLI::App* app, std::string& path) {
  app->add_option("--config", path, "flat key=value file; command-line flags take precedence");
}

std::string fmt(double x) { return qdiss::format_double(x); }

std::string fmt(const std::optional<double>& x) { return x ? fmt(*x) : std::string("-"); }

// ---- eval -----------------------------------------------------------------

struct EvalFlags {
  ModelFlags model;
  double p = 1.0;
  std::optional<double> gamma;
  std::optional<double> t;
  bool json = false;
};

int run_eval(const EvalFlags& f) {
  if (f.gamma.has_value() == f.t.has_value()) throw UsageError("eval needs exactly one of --gamma or --t");
  const qdiss::ChannelSpec spec = f.model.channel_spec();
  const qdiss::MinimizerSettings minimizer = f.model.minimizer();
  if (f.p < 0.0 || f.p > 1.0) throw UsageError("--p must lie in [0,1]");
  double gamma = 0.0;
  if (f.t) {
    if (*f.t < 0.0) throw UsageError("--t must be non-negative");
    gamma = qdiss::gamma_of_t(spec.decay_rate, *f.t);
  } else {
    gamma = *f.gamma;
    if (gamma < 0.0 || gamma > 1.0) throw UsageError("--gamma must lie in [0,1]");
  }

  const auto r = qdiss::evaluate_point(qdiss::parse_state_kind(f.model.state), spec, f.p, f.t, gamma, minimizer, {});
  if (f.json) {
    std::cout << qdiss::record_json(r) << '\n';
    return kExitOk;
  }
  std::cout << "state " << r.state << ", channel " << qdiss::describe(spec) << ", p " << fmt(r.p);
  if (r.t) std::cout << ", t " << fmt(*r.t);
  std::cout << ", gamma " << fmt(r.gamma) << '\n';
  std::cout << "delta1  " << fmt(r.delta1) << "  (theta " << fmt(r.theta1) << ", phi " << fmt(r.phi1) << ")\n";
  std::cout << "delta2  " << fmt(r.delta2) << "  (theta " << fmt(r.theta2) << ", phi " << fmt(r.phi2) << ")\n";
  std::cout << "delta_m " << fmt(r.delta_m) << '\n';
  return kExitOk;
}

// ---- sweep ----------------------------------------------------------------

struct SweepFlags {
  ModelFlags model;
  std::vector<double> p;
  double p_min = 0.0;
  double p_max = 1.0;
  int p_steps = 11;
  std::vector<double> gamma;
  std::vector<double> t;
  double t_max = 10.0;
  int t_steps = 51;
  std::string out;
  std::string format = "csv";
  int workers = 0;
};

struct Extrema {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  bool seen = false;

  void add(const std::optional<double>& v) {
    if (!v) return;
    seen = true;
    lo = std::min(lo, *v);
    hi = std::max(hi, *v);
  }

  std::string str() const { return seen ? "[" + fmt(lo) + ", " + fmt(hi) + "]" : std::string("n/a"); }
};

int run_sweep_cmd(const SweepFlags& f, bool p_range_given) {
  if (f.out.empty()) throw UsageError("sweep needs --out PATH");
  if (!f.gamma.empty() && !f.t.empty()) throw UsageError("--gamma and --t are mutually exclusive");
  if (!f.p.empty() && p_range_given) throw UsageError("--p cannot be combined with --p-min/--p-max/--p-steps");

  qdiss::SweepConfig cfg;
  cfg.state = qdiss::parse_state_kind(f.model.state);
  cfg.channel = f.model.channel_spec();
  cfg.minimizer = f.model.minimizer();
  cfg.format = qdiss::parse_format(f.format);
  if (f.p_steps < 1 || f.t_steps < 1) throw UsageError("--p-steps and --t-steps must be positive");
  cfg.p_grid = f.p.empty() ? qdiss::linspace(f.p_min, f.p_max, f.p_steps) : f.p;
  if (!f.gamma.empty()) {
    cfg.time_axis = qdiss::TimeAxis::gammas(f.gamma);
  } else if (!f.t.empty()) {
    cfg.time_axis = qdiss::TimeAxis::seconds(f.t);
  } else {
    cfg.time_axis = qdiss::TimeAxis::seconds(qdiss::linspace(0.0, f.t_max, f.t_steps));
  }
  cfg.worker_count = f.workers > 0 ? f.workers : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));

  const auto records = qdiss::run_sweep(cfg);
  qdiss::emit_to_file(f.out, records, cfg.format);

  Extrema d1, d2, dm;
  for (const auto& r : records) {
    d1.add(r.delta1);
    d2.add(r.delta2);
    dm.add(r.delta_m);
  }
  std::cout << records.size() << " records written to " << f.out << "; delta1 " << d1.str() << ", delta2 "
            << d2.str() << ", delta_m " << dm.str() << '\n';
  return kExitOk;
}

// ---- oracle-check ---------------------------------------------------------

struct OracleFlags {
  ModelFlags model;
  bool all = false;
};

int run_oracle(const OracleFlags& f, bool state_given) {
  std::vector<qdiss::TabulatedCombination> combos;
  if (f.all) {
    combos = qdiss::tabulated_combinations();
  } else {
    if (!state_given) throw UsageError("oracle-check needs --all or --state/--channel");
    const auto kind = qdiss::parse_state_kind(f.model.state);
    const auto spec = f.model.channel_spec();
    if (!qdiss::is_tabulated(kind, spec)) {
      throw qdiss::UnsupportedCombination("untabulated combination: " + f.model.state + " under " +
                                          qdiss::describe(spec));
    }
    combos.push_back({kind, spec});
  }

  bool ok = true;
  for (const auto& c : combos) {
    const auto rep = qdiss::oracle_check(c.kind, c.channel);
    const bool pass = rep.max_deviation <= qdiss::kOracleTolerance;
    ok = ok && pass;
    char dev[32];
    std::snprintf(dev, sizeof dev, "%.3e", rep.max_deviation);
    std::cout << (pass ? "PASS  " : "FAIL  ") << qdiss::state_name(c.kind) << "  " << qdiss::describe(c.channel)
              << "  max_dev=" << dev << "  points=" << rep.points << '\n';
  }
  return ok ? kExitOk : kExitOracle;
}

// ---- list -----------------------------------------------------------------

int run_list() {
  const qdiss::MinimizerSettings m;
  std::cout << "states: ghz,w,sepmix,bisep\n";
  std::cout << "channels: gad,dephasing,depolarizing\n";
  std::cout << "defaults: Gamma=" << fmt(qdiss::kDefaultDecayRate) << " 1/s, grid " << m.grid_n << "x" << m.grid_n
            << ", refine-iters " << m.refine_iters << ", tol " << fmt(m.tol) << ", t in [0, 10] with 51 steps, "
            << "p in [0, 1] with 11 steps, gad q=1\n";
  std::cout << "tabulated closed forms:";
  for (const auto& c : qdiss::tabulated_combinations()) {
    std::cout << ' ' << qdiss::state_name(c.kind) << '/' << qdiss::describe(c.channel);
  }
  std::cout << '\n';
  return kExitOk;
}

struct Cli {
  CLI::App app{"Three-qubit dissension and discord under single-qubit noise"};
  EvalFlags ef;
  SweepFlags sf;
  OracleFlags of;
  std::string config_path;
  CLI::App* eval = nullptr;
  CLI::App* sweep = nullptr;
  CLI::App* oracle = nullptr;
  CLI::App* list = nullptr;
  CLI::Option* p_min = nullptr;
  CLI::Option* p_max = nullptr;
  CLI::Option* p_steps = nullptr;

  Cli() {
    app.require_subcommand(1);

    eval = app.add_subcommand("eval", "evaluate delta1, delta2 and delta_m at one point");
    add_model_options(eval, ef.model, true);
    eval->add_option("--p", ef.p, "classical randomness p")->capture_default_str();
    eval->add_option("--gamma", ef.gamma, "channel strength gamma in [0,1]");
    eval->add_option("--t", ef.t, "time in seconds (gamma = 1 - exp(-Gamma t))");
    eval->add_flag("--json", ef.json, "print the record as JSON");
    enable_config(eval, config_path);

    sweep = app.add_subcommand("sweep", "evaluate a (p, time) grid and write records");
    add_model_options(sweep, sf.model, true);
    sweep->add_option("--p", sf.p, "explicit p values")->delimiter(',');
    p_min = sweep->add_option("--p-min", sf.p_min)->capture_default_str();
    p_max = sweep->add_option("--p-max", sf.p_max)->capture_default_str();
    p_steps = sweep->add_option("--p-steps", sf.p_steps)->capture_default_str();
    sweep->add_option("--gamma", sf.gamma, "explicit gamma values (gamma axis)")->delimiter(',');
    sweep->add_option("--t", sf.t, "explicit times in seconds")->delimiter(',');
    sweep->add_option("--t-max", sf.t_max)->capture_default_str();
    sweep->add_option("--t-steps", sf.t_steps)->capture_default_str();
    sweep->add_option("--out", sf.out, "output file");
    sweep->add_option("--format", sf.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sweep->add_option("--workers", sf.workers, "worker threads (default: hardware concurrency)")
        ->envname("QDISS_WORKERS");
    enable_config(sweep, config_path);

    oracle = app.add_subcommand("oracle-check", "compare numerical evolution with closed forms");
    add_model_options(oracle, of.model, false);
    oracle->add_flag("--all", of.all, "check every tabulated combination");
    enable_config(oracle, config_path);

    list = app.add_subcommand("list", "show state families, channels and defaults");
  }

  CLI::App* selected() const {
    for (auto* sub : {eval, sweep, oracle, list}) {
      if (sub->parsed()) return sub;
    }
    return nullptr;
  }
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Reads `key = value` lines (blank lines and # comments ignored). A value may
// be quoted or a bracketed, comma-separated list. Returns argument tokens for
// every key the command line did not already set, so explicit flags win.
std::vector<std::string> config_tokens(const std::string& path, CLI::App* sub) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::vector<std::string> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "config") throw UsageError(path + ":" + std::to_string(lineno) + ": nested config files are not allowed");
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "' for " + sub->get_name());
    }
    if (opt->count() > 0) continue;

    if (value.size() >= 2 && value.front() == '[' && value.back() == ']') value = value.substr(1, value.size() - 2);
    std::vector<std::string> items;
    std::stringstream ss(value);
    for (std::string item; std::getline(ss, item, ',');) {
      item = trim(item);
      if (item.size() >= 2 && (item.front() == '"' || item.front() == '\'') && item.back() == item.front()) {
        item = item.substr(1, item.size() - 2);
      }
      if (!item.empty()) items.push_back(item);
    }
    if (opt->get_items_expected_max() == 0) {
      // Boolean flag.
      if (items.size() != 1) throw UsageError(path + ":" + std::to_string(lineno) + ": flag '" + key + "' takes one value");
      const std::string& v = items.front();
      if (v == "true" || v == "1" || v == "yes") {
        tokens.push_back("--" + key);
      } else if (v != "false" && v != "0" && v != "no") {
        throw UsageError(path + ":" + std::to_string(lineno) + ": flag '" + key + "' expects true or false");
      }
      continue;
    }
    if (items.empty()) throw UsageError(path + ":" + std::to_string(lineno) + ": empty value for '" + key + "'");
    for (const auto& item : items) {
      tokens.push_back("--" + key);
      tokens.push_back(item);
    }
  }
  return tokens;
}

int dispatch(Cli& cli) {
  if (cli.eval->parsed()) {
    if (cli.eval->count("--state") == 0) throw UsageError("eval needs --state");
    return run_eval(cli.ef);
  }
  if (cli.sweep->parsed()) {
    if (cli.sweep->count("--state") == 0) throw UsageError("sweep needs --state");
    const bool range = cli.p_min->count() + cli.p_max->count() + cli.p_steps->count() > 0;
    return run_sweep_cmd(cli.sf, range);
  }
  if (cli.oracle->parsed()) return run_oracle(cli.of, cli.oracle->count("--state") > 0);
  if (cli.list->parsed()) return run_list();
  return kExitUsage;
}

int run(int argc, char** argv) {
  auto cli = std::make_unique<Cli>();
  try {
    cli->app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return cli->app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return cli->app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "qdiss: " << e.what() << '\n';
    return kExitUsage;
  }

  if (!cli->config_path.empty()) {
    // Second pass: config values first, then the original arguments, so the
    // command line overrides the file and the file overrides built-in defaults.
    CLI::App* sub = cli->selected();
    std::vector<std::string> args{sub->get_name()};
    for (auto& tok : config_tokens(cli->config_path, sub)) args.push_back(std::move(tok));
    bool past_sub = false;
    for (int i = 1; i < argc; ++i) {
      if (past_sub) args.emplace_back(argv[i]);
      if (!past_sub && sub->get_name() == argv[i]) past_sub = true;
    }
    std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
    cli = std::make_unique<Cli>();
    try {
      cli->app.parse(args);
    } catch (const CLI::ParseError& e) {
      std::cerr << "qdiss: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return dispatch(*cli);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "qdiss: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qdiss::UnsupportedCombination& e) {
    std::cerr << "qdiss: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qdiss::ConfigError& e) {
    std::cerr << "qdiss: invalid configuration: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qdiss::ArgumentError& e) {
    std::cerr << "qdiss: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qdiss::IoError& e) {
    std::cerr << "qdiss: " << e.what() << '\n';
    return kExitIo;
  } catch (const qdiss::StateError& e) {
    std::cerr << "qdiss: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const qdiss::NumericalError& e) {
    std::cerr << "qdiss: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}
