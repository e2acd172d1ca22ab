#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "qdiss/errors.hpp"
#include "qdiss/sweep.hpp"

namespace qdiss {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

std::string opt_csv(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::string opt_json(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return "null";
  return format_double(*v);
}

double parse_double(std::string_view s, std::string_view field) {
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ArgumentError("malformed number '" + std::string(s) + "' in field " + std::string(field));
  }
  return x;
}

std::optional<double> parse_opt(std::string_view s, std::string_view field) {
  if (s.empty()) return std::nullopt;
  return parse_double(s, field);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

// JSON string escaping for the two text fields; names are plain ASCII in practice.
std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.state << ',' << r.channel << ',' << opt_csv(r.q) << ',' << format_double(r.p) << ',' << opt_csv(r.t)
        << ',' << format_double(r.gamma) << ',' << opt_csv(r.delta1) << ',' << opt_csv(r.delta2) << ','
        << opt_csv(r.delta_m) << ',' << opt_csv(r.theta1) << ',' << opt_csv(r.phi1) << ',' << opt_csv(r.theta2)
        << ',' << opt_csv(r.phi2) << ',' << r.wall_micros << '\n';
  }
}

std::string record_json(const SweepRecord& r) {
  std::ostringstream o;
  o << "{\"state\":" << quote(r.state) << ",\"channel\":" << quote(r.channel) << ",\"q\":" << opt_json(r.q)
    << ",\"p\":" << opt_json(r.p) << ",\"t\":" << opt_json(r.t) << ",\"gamma\":" << opt_json(r.gamma)
    << ",\"delta1\":" << opt_json(r.delta1) << ",\"delta2\":" << opt_json(r.delta2)
    << ",\"delta_m\":" << opt_json(r.delta_m) << ",\"theta1\":" << opt_json(r.theta1)
    << ",\"phi1\":" << opt_json(r.phi1) << ",\"theta2\":" << opt_json(r.theta2) << ",\"phi2\":" << opt_json(r.phi2)
    << ",\"wall_micros\":" << r.wall_micros << '}';
  return o.str();
}

void write_json(std::ostream& out, const std::vector<SweepRecord>& records) {
  if (records.empty()) {
    out << "[]\n";
    return;
  }
  out << "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    out << "  " << record_json(records[i]) << (i + 1 < records.size() ? ",\n" : "\n");
  }
  out << "]\n";
}

void emit(std::ostream& out, const std::vector<SweepRecord>& records, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    write_csv(out, records);
  } else {
    write_json(out, records);
  }
}

void emit_to_file(const std::string& path, const std::vector<SweepRecord>& records, OutputFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  emit(out, records, format);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::vector<SweepRecord> parse_csv(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kCsvHeader) throw ArgumentError("CSV header mismatch");

  std::vector<SweepRecord> records;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i], ',');
    if (f.size() != 14) throw ArgumentError("CSV row " + std::to_string(i) + " has " + std::to_string(f.size()) + " fields");
    SweepRecord r;
    r.state = std::string(f[0]);
    r.channel = std::string(f[1]);
    r.q = parse_opt(f[2], "q");
    r.p = parse_double(f[3], "p");
    r.t = parse_opt(f[4], "t");
    r.gamma = parse_double(f[5], "gamma");
    r.delta1 = parse_opt(f[6], "delta1");
    r.delta2 = parse_opt(f[7], "delta2");
    r.delta_m = parse_opt(f[8], "delta_m");
    r.theta1 = parse_opt(f[9], "theta1");
    r.phi1 = parse_opt(f[10], "phi1");
    r.theta2 = parse_opt(f[11], "theta2");
    r.phi2 = parse_opt(f[12], "phi2");
    const auto res = std::from_chars(f[13].data(), f[13].data() + f[13].size(), r.wall_micros);
    if (res.ec != std::errc() || res.ptr != f[13].data() + f[13].size()) throw ArgumentError("malformed wall_micros");
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<SweepRecord> parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ArgumentError("expected a JSON array of records");

  auto opt = [](const nlohmann::json& o, const char* key) -> std::optional<double> {
    const auto& v = o.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<double>();
  };
  std::vector<SweepRecord> records;
  try {
    for (const auto& o : doc) {
      SweepRecord r;
      r.state = o.at("state").get<std::string>();
      r.channel = o.at("channel").get<std::string>();
      r.q = opt(o, "q");
      r.p = o.at("p").get<double>();
      r.t = opt(o, "t");
      r.gamma = o.at("gamma").get<double>();
      r.delta1 = opt(o, "delta1");
      r.delta2 = opt(o, "delta2");
      r.delta_m = opt(o, "delta_m");
      r.theta1 = opt(o, "theta1");
      r.phi1 = opt(o, "phi1");
      r.theta2 = opt(o, "theta2");
      r.phi2 = opt(o, "phi2");
      r.wall_micros = o.at("wall_micros").get<std::int64_t>();
      records.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed record: ") + e.what());
  }
  return records;
}

}  // namespace qdiss
