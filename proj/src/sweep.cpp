#include "qdiss/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "qdiss/correlations.hpp"
#include "qdiss/errors.hpp"

namespace qdiss {

TimeAxis TimeAxis::seconds(std::vector<double> t) { return TimeAxis{Kind::Seconds, std::move(t)}; }

TimeAxis TimeAxis::gammas(std::vector<double> gamma) { return TimeAxis{Kind::Gamma, std::move(gamma)}; }

std::string_view format_name(OutputFormat f) { return f == OutputFormat::Csv ? "csv" : "json"; }

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ArgumentError("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw ArgumentError("linspace: need at least one point");
  std::vector<double> v(static_cast<std::size_t>(n));
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  v.back() = hi;
  return v;
}

namespace {

void check_grid(const std::vector<double>& g, const char* name, double lo, double hi) {
  if (g.empty()) throw ConfigError(std::string(name) + " grid is empty");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!std::isfinite(g[i]) || g[i] < lo || g[i] > hi) {
      throw ConfigError(std::string(name) + " value " + format_double(g[i]) + " outside [" + format_double(lo) + ", " +
                        (std::isinf(hi) ? std::string("inf") : format_double(hi)) + "]");
    }
    if (i > 0 && !(g[i] > g[i - 1])) throw ConfigError(std::string(name) + " grid must be strictly ascending");
  }
}

}  // namespace

void SweepConfig::validate() const {
  try {
    channel.validate();
    minimizer.validate();
  } catch (const ArgumentError& e) {
    throw ConfigError(e.what());
  }
  check_grid(p_grid, "p", 0.0, 1.0);
  if (time_axis.kind == TimeAxis::Kind::Seconds) {
    check_grid(time_axis.values, "t", 0.0, std::numeric_limits<double>::infinity());
  } else {
    check_grid(time_axis.values, "gamma", 0.0, 1.0);
  }
  if (!outputs.any()) throw ConfigError("no outputs requested");
  if (worker_count < 1) throw ConfigError("worker count must be positive");
}

bool same_result(const SweepRecord& a, const SweepRecord& b) {
  SweepRecord x = a;
  x.wall_micros = b.wall_micros;
  return x == b;
}

SweepRecord evaluate_point(StateKind state, const ChannelSpec& channel, double p, std::optional<double> t,
                           double gamma, const MinimizerSettings& minimizer, const OutputSet& outputs) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord r;
  r.state = std::string(state_name(state));
  r.channel = std::string(channel_name(channel.family));
  if (channel.family == ChannelFamily::GAD) r.q = channel.q;
  r.p = p;
  r.t = t;
  r.gamma = gamma;

  const DensityMatrix rho = apply_product_channel(build_state({state, p}), kraus_for(channel, gamma));
  if (outputs.delta1) {
    const AngleMinimum d1 = delta1(rho, minimizer);
    r.delta1 = d1.value;
    r.theta1 = d1.argmin.theta();
    r.phi1 = d1.argmin.phi();
  }
  if (outputs.delta2 || outputs.delta_m) {
    const AngleMinimum d2 = delta2(rho, minimizer);
    if (outputs.delta2) r.delta2 = d2.value;
    r.theta2 = d2.argmin.theta();
    r.phi2 = d2.argmin.phi();
    if (outputs.delta_m) {
      r.delta_m = discord_pair(partial_trace(rho, {2}), 1, minimizer).value +
                  discord_pair(partial_trace(rho, {1}), 1, minimizer).value - d2.value;
    }
  }
  r.wall_micros =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  config.validate();
  const std::size_t nt = config.time_axis.values.size();
  const std::size_t total = config.p_grid.size() * nt;
  std::vector<SweepRecord> records(total);

  auto task = [&](std::size_t index) {
    const double p = config.p_grid[index / nt];
    const double axis = config.time_axis.values[index % nt];
    std::optional<double> t;
    double gamma = axis;
    if (config.time_axis.kind == TimeAxis::Kind::Seconds) {
      t = axis;
      gamma = gamma_of_t(config.channel.decay_rate, axis);
    }
    records[index] = evaluate_point(config.state, config.channel, p, t, gamma, config.minimizer, config.outputs);
  };

  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(config.worker_count), total);
  if (workers <= 1) {
    for (std::size_t i = 0; i < total; ++i) task(i);
    return records;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (!failed.load()) {
        const std::size_t i = next.fetch_add(1);
        if (i >= total) return;
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          failed.store(true);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return records;
}

OracleReport oracle_check(StateKind state, const ChannelSpec& channel, const std::vector<double>& p_grid,
                          const std::vector<double>& gamma_grid) {
  if (!is_tabulated(state, channel)) {
    throw UnsupportedCombination("untabulated combination: " + std::string(state_name(state)) + " under " +
                                 describe(channel));
  }
  OracleReport report;
  for (double p : p_grid) {
    const DensityMatrix initial = build_state({state, p});
    for (double gamma : gamma_grid) {
      const DensityMatrix numeric = apply_product_channel(initial, kraus_for(channel, gamma));
      const double dev = max_abs_diff(numeric, analytic_state({state, p}, channel, gamma));
      ++report.points;
      if (dev > report.max_deviation || report.points == 1) {
        report.max_deviation = dev;
        report.worst_p = p;
        report.worst_gamma = gamma;
      }
    }
  }
  return report;
}

}  // namespace qdiss
