#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdiss/channels.hpp"
#include "qdiss/minimize.hpp"
#include "qdiss/states.hpp"

namespace qdiss {

/// Channel-strength axis of a sweep: either times in seconds (gamma computed
/// from the channel's decay rate) or gamma values directly.
struct TimeAxis {
  enum class Kind { Seconds, Gamma };

  Kind kind = Kind::Seconds;
  std::vector<double> values;

  static TimeAxis seconds(std::vector<double> t);
  static TimeAxis gammas(std::vector<double> gamma);
};

struct OutputSet {
  bool delta1 = true;
  bool delta2 = true;
  bool delta_m = true;

  bool any() const { return delta1 || delta2 || delta_m; }
};

enum class OutputFormat { Csv, Json };

std::string_view format_name(OutputFormat f);
/// "csv" or "json"; ArgumentError otherwise.
OutputFormat parse_format(std::string_view name);

/// n evenly spaced points from lo to hi inclusive (n == 1 gives {lo}).
std::vector<double> linspace(double lo, double hi, int n);

struct SweepConfig {
  StateKind state = StateKind::MixedGHZ;
  ChannelSpec channel;
  std::vector<double> p_grid = linspace(0.0, 1.0, 11);
  TimeAxis time_axis = TimeAxis::seconds(linspace(0.0, 10.0, 51));
  MinimizerSettings minimizer;
  OutputSet outputs;
  OutputFormat format = OutputFormat::Csv;
  int worker_count = 1;

  /// Throws ConfigError describing the first violated constraint.
  void validate() const;
};

struct SweepRecord {
  std::string state;
  std::string channel;
  std::optional<double> q;  // present for GAD only
  double p = 0.0;
  std::optional<double> t;  // absent on a gamma axis
  double gamma = 0.0;
  std::optional<double> delta1;
  std::optional<double> delta2;
  std::optional<double> delta_m;
  std::optional<double> theta1;
  std::optional<double> phi1;
  std::optional<double> theta2;
  std::optional<double> phi2;
  std::int64_t wall_micros = 0;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

/// Same as operator== but ignores wall_micros.
bool same_result(const SweepRecord& a, const SweepRecord& b);

/// Evaluates one grid point.
SweepRecord evaluate_point(StateKind state, const ChannelSpec& channel, double p, std::optional<double> t,
                           double gamma, const MinimizerSettings& minimizer, const OutputSet& outputs);

/// One record per (p, time) pair, ordered by p then time regardless of how
/// the points were scheduled across workers.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

struct OracleReport {
  double max_deviation = 0.0;
  double worst_p = 0.0;
  double worst_gamma = 0.0;
  int points = 0;
};

inline constexpr double kOracleTolerance = 1e-12;

/// Maximum entrywise |numerical - closed form| over the grid. Throws
/// UnsupportedCombination for pairs without a table.
OracleReport oracle_check(StateKind state, const ChannelSpec& channel, const std::vector<double>& p_grid = linspace(0.0, 1.0, 5),
                          const std::vector<double>& gamma_grid = linspace(0.0, 1.0, 11));

/// Shortest decimal string that parses back to x.
std::string format_double(double x);

inline constexpr std::string_view kCsvHeader =
    "state,channel,q,p,t,gamma,delta1,delta2,delta_m,theta1,phi1,theta2,phi2,wall_micros";

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);
void write_json(std::ostream& out, const std::vector<SweepRecord>& records);
void emit(std::ostream& out, const std::vector<SweepRecord>& records, OutputFormat format);
/// Writes to a file; IoError names the path on failure.
void emit_to_file(const std::string& path, const std::vector<SweepRecord>& records, OutputFormat format);

/// One record as a single-line JSON object.
std::string record_json(const SweepRecord& r);

/// Inverses of write_csv / write_json; ArgumentError on malformed input.
std::vector<SweepRecord> parse_csv(std::string_view text);
std::vector<SweepRecord> parse_json(std::string_view text);

}  // namespace qdiss
