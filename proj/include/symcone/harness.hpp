#pragma once

// Check runner: executes registered checks over per-sample deterministic
// streams, reduces residuals, and emits one JSON object per check plus a
// trailing summary object. Reports are identical for any jobs value except
// for wall_time_ms.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "symcone/checks.hpp"
#include "symcone/descriptor.hpp"
#include "symcone/errors.hpp"
#include "symcone/json_io.hpp"

namespace symcone {
namespace harness {

struct RunConfig {
  std::string algebra = "sym:3";
  std::uint64_t seed = 0;
  int samples = 100;
  int jobs = 1;
  std::vector<std::string> suites;             // empty: every suite
  std::map<std::string, double> tol_overrides; // check id -> tolerance
  std::string out_path;                        // empty: no file output
};

inline std::vector<std::string> known_suites() {
  std::vector<std::string> out;
  for (const CheckDef& def : check_registry())
    if (std::find(out.begin(), out.end(), def.suite) == out.end())
      out.emplace_back(def.suite);
  return out;
}

inline void validate(const RunConfig& cfg) {
  if (cfg.samples < 1) throw ConfigError("samples must be at least 1");
  if (cfg.jobs < 1) throw ConfigError("jobs must be at least 1");
  try {
    parse_descriptor(cfg.algebra);
  } catch (const ParseError& e) {
    throw ConfigError(std::string("bad algebra descriptor: ") + e.what());
  }
  const std::vector<std::string> known = known_suites();
  for (const std::string& s : cfg.suites) {
    if (s.empty()) throw ConfigError("empty suite name");
    if (std::find(known.begin(), known.end(), s) == known.end())
      throw ConfigError("unknown suite: " + s);
  }
  for (const auto& [id, tol] : cfg.tol_overrides) {
    if (find_check(id) == nullptr)
      throw ConfigError("tolerance override for unknown check: " + id);
    if (!std::isfinite(tol) || tol < 0.0)
      throw ConfigError("tolerance override must be finite and nonnegative: " + id);
  }
}

struct CheckReport {
  std::string check_id;
  std::string algebra;
  std::uint64_t seed = 0;
  std::uint64_t samples_run = 0;
  std::uint64_t samples_rejected = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double wall_time_ms = 0.0;
};

inline json report_to_json(const CheckReport& r) {
  json j;
  j["check_id"] = r.check_id;
  j["algebra"] = r.algebra;
  j["seed"] = r.seed;
  j["samples_run"] = r.samples_run;
  j["samples_rejected"] = r.samples_rejected;
  j["max_residual"] = r.max_residual;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

// Run one check for `samples` indices. Sample index i is evaluated from its
// own stream, so splitting the index range across threads cannot change any
// residual; the reductions (max, sum) are order-independent.
inline CheckReport run_check(const CheckDef& def, const CheckContext& ctx,
                             const std::string& algebra_label, int samples,
                             double tolerance, int jobs) {
  const auto started = std::chrono::steady_clock::now();

  struct Partial {
    double max_residual = 0.0;
    std::uint64_t rejected = 0;
  };
  const int workers = std::max(1, std::min(jobs, samples));
  std::vector<Partial> parts(static_cast<std::size_t>(workers));

  const auto run_range = [&](int w, std::uint64_t lo, std::uint64_t hi) {
    Partial& p = parts[static_cast<std::size_t>(w)];
    for (std::uint64_t i = lo; i < hi; ++i) {
      double residual = kFailResidual;
      int rejected = 0;
      try {
        const SampleOutcome out = def.run(ctx, def.id, i);
        residual = out.residual;
        rejected = out.rejected;
      } catch (const std::exception&) {
        residual = kFailResidual;  // an invariant threw: report, never crash
      }
      p.max_residual = std::max(p.max_residual, residual);
      p.rejected += static_cast<std::uint64_t>(rejected);
    }
  };

  const std::uint64_t total = static_cast<std::uint64_t>(samples);
  const std::uint64_t chunk = (total + static_cast<std::uint64_t>(workers) - 1) /
                              static_cast<std::uint64_t>(workers);
  if (workers == 1) {
    run_range(0, 0, total);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = static_cast<std::uint64_t>(w) * chunk;
      const std::uint64_t hi = std::min(total, lo + chunk);
      threads.emplace_back(run_range, w, lo, hi);
    }
    for (std::thread& t : threads) t.join();
  }

  CheckReport rep;
  rep.check_id = def.id;
  rep.algebra = algebra_label;
  rep.seed = ctx.seed;
  rep.samples_run = total;
  for (const Partial& p : parts) {
    rep.max_residual = std::max(rep.max_residual, p.max_residual);
    rep.samples_rejected += p.rejected;
  }
  rep.tolerance = tolerance;
  rep.pass = rep.max_residual <= tolerance;
  rep.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();
  return rep;
}

inline std::vector<CheckReport> run_suite(const RunConfig& cfg) {
  validate(cfg);
  const AlgebraDescriptor alg = parse_descriptor(cfg.algebra);
  const std::string canonical = to_string(alg);
  const CheckContext ctx{alg, cfg.seed};

  std::vector<CheckReport> reports;
  for (const CheckDef& def : check_registry()) {
    if (!cfg.suites.empty() &&
        std::find(cfg.suites.begin(), cfg.suites.end(), def.suite) == cfg.suites.end())
      continue;
    double tol = def.tolerance;
    if (const auto it = cfg.tol_overrides.find(def.id); it != cfg.tol_overrides.end())
      tol = it->second;
    const std::string label = def.algebra_dependent ? canonical : std::string("axb");
    reports.push_back(run_check(def, ctx, label, cfg.samples, tol, cfg.jobs));
  }
  return reports;
}

inline json summary_json(const RunConfig& cfg, const std::vector<CheckReport>& reports) {
  std::uint64_t passed = 0;
  for (const CheckReport& r : reports) passed += r.pass ? 1 : 0;
  json j;
  j["checks"] = reports.size();
  j["passed"] = passed;
  j["failed"] = reports.size() - passed;
  j["all_pass"] = passed == reports.size();
  j["algebra"] = to_string(parse_descriptor(cfg.algebra));
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  return j;
}

// One JSON object per check followed by the summary object, newline-separated.
inline std::string report_lines(const RunConfig& cfg, const std::vector<CheckReport>& reports) {
  std::string out;
  for (const CheckReport& r : reports) {
    out += report_to_json(r).dump();
    out += '\n';
  }
  out += summary_json(cfg, reports).dump();
  out += '\n';
  return out;
}

inline void write_report_file(const RunConfig& cfg, const std::vector<CheckReport>& reports) {
  if (cfg.out_path.empty()) return;
  std::ofstream f(cfg.out_path);
  if (!f) throw IoError("cannot open report file: " + cfg.out_path);
  f << report_lines(cfg, reports);
  if (!f) throw IoError("failed writing report file: " + cfg.out_path);
}

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::uint64_t parse_u64(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const std::uint64_t out = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ConfigError("bad unsigned integer for " + key + ": " + v);
  }
}

inline int parse_int(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const int out = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ConfigError("bad integer for " + key + ": " + v);
  }
}

inline double parse_double(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double out = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ConfigError("bad number for " + key + ": " + v);
  }
}

}  // namespace detail

// key=value configuration file. '#' starts a comment; blank lines are
// ignored. Keys: algebra, seed, samples, jobs, out, suites (comma separated),
// tol.<check-id>. Command line flags are applied after and win.
inline void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (const std::size_t hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const std::string entry = detail::trim(line);
    if (entry.empty()) continue;
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + " is not key=value");
    const std::string key = detail::trim(entry.substr(0, eq));
    const std::string value = detail::trim(entry.substr(eq + 1));
    if (key == "algebra") {
      cfg.algebra = value;
    } else if (key == "seed") {
      cfg.seed = detail::parse_u64(value, key);
    } else if (key == "samples") {
      cfg.samples = detail::parse_int(value, key);
    } else if (key == "jobs") {
      cfg.jobs = detail::parse_int(value, key);
    } else if (key == "out") {
      cfg.out_path = value;
    } else if (key == "suites") {
      cfg.suites.clear();
      std::size_t start = 0;
      while (start <= value.size()) {
        const std::size_t comma = value.find(',', start);
        const std::string item = detail::trim(
            value.substr(start, comma == std::string::npos ? std::string::npos
                                                           : comma - start));
        if (!item.empty()) cfg.suites.push_back(item);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    } else if (key.rfind("tol.", 0) == 0) {
      const std::string id = key.substr(4);
      cfg.tol_overrides[id] = detail::parse_double(value, key);
    } else {
      throw ConfigError("unknown config key: " + key);
    }
  }
}

}  // namespace harness
}  // namespace symcone
