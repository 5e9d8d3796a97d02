#include "freeact/report.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace freeact {

namespace {
bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace

void Config::validate() const {
  if (!(epsilon > 0 && epsilon < Rational(1, 9)))
    throw PreconditionError("epsilon must lie in (0, 1/9), got " + epsilon.get_str());
  if (k_min < 3 || k_max < k_min || k_max > 6)
    throw PreconditionError("k range must satisfy 3 <= k_min <= k_max <= 6");
  if (primes.empty()) throw PreconditionError("prime list must not be empty");
  for (long p : primes) {
    if (!is_prime(p) || p % 2 == 0)
      throw PreconditionError("prime list must contain odd primes, got " + std::to_string(p));
  }
  if (samples.disjointness < 1 || samples.invariance < 1 || samples.gluing_numeric < 1)
    throw PreconditionError("sample counts must be positive");
}

bool Report::certified() const {
  for (const auto& c : checks)
    if (c.status == "failed") return false;
  return true;
}

size_t Report::failed_count() const {
  size_t n = 0;
  for (const auto& c : checks) n += c.status == "failed";
  return n;
}

void Report::sort_by_id() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
}

std::string report_to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["tool"] = "freeact";
  j["suite"] = report.suite;
  j["status"] = report.certified() ? "certified" : "failed";
  nlohmann::ordered_json cfg;
  cfg["epsilon"] = report.config.epsilon.get_str();
  cfg["k_min"] = report.config.k_min;
  cfg["k_max"] = report.config.k_max;
  cfg["primes"] = report.config.primes;
  cfg["seed"] = report.config.seed;
  nlohmann::ordered_json samples;
  samples["disjointness"] = report.config.samples.disjointness;
  samples["invariance"] = report.config.samples.invariance;
  samples["gluing_numeric"] = report.config.samples.gluing_numeric;
  cfg["samples"] = samples;
  j["config"] = cfg;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["claim"] = c.claim;
    jc["status"] = c.status;
    jc["witness"] = c.witness;
    if (report.config.timings) jc["time_ns"] = c.time_ns;
    checks.push_back(jc);
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

std::string report_to_markdown(const Report& report) {
  std::ostringstream out;
  out << "# Certification report: " << report.suite << "\n\n";
  out << "- status: **" << (report.certified() ? "certified" : "FAILED") << "**\n";
  out << "- epsilon: `" << report.config.epsilon.get_str() << "`, k = " << report.config.k_min
      << ".." << report.config.k_max << ", seed " << report.config.seed << "\n";
  out << "- primes:";
  for (long p : report.config.primes) out << ' ' << p;
  out << "\n\n";
  out << "| check | status | claim |\n|---|---|---|\n";
  for (const auto& c : report.checks)
    out << "| `" << c.id << "` | " << c.status << " | " << c.claim << " |\n";
  out << "\n";
  for (const auto& c : report.checks) {
    if (c.witness.empty()) continue;
    out << "- `" << c.id << "`: " << c.witness << "\n";
  }
  return out.str();
}

Report report_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.config.epsilon = parse_rational(j.at("config").at("epsilon").get<std::string>());
  r.config.k_min = j.at("config").at("k_min").get<int>();
  r.config.k_max = j.at("config").at("k_max").get<int>();
  r.config.primes = j.at("config").at("primes").get<std::vector<long>>();
  r.config.seed = j.at("config").at("seed").get<uint64_t>();
  r.config.samples.disjointness = j.at("config").at("samples").at("disjointness").get<int>();
  r.config.samples.invariance = j.at("config").at("samples").at("invariance").get<int>();
  r.config.samples.gluing_numeric = j.at("config").at("samples").at("gluing_numeric").get<int>();
  for (const auto& jc : j.at("checks")) {
    CheckRecord c;
    c.id = jc.at("id").get<std::string>();
    c.claim = jc.at("claim").get<std::string>();
    c.status = jc.at("status").get<std::string>();
    c.witness = jc.at("witness").get<std::string>();
    if (jc.contains("time_ns")) {
      c.time_ns = jc.at("time_ns").get<uint64_t>();
      r.config.timings = true;
    }
    r.checks.push_back(std::move(c));
  }
  return r;
}

void emit_report(const Report& report, const std::string& format, const std::string& path) {
  std::string text;
  if (format == "json") {
    text = report_to_json(report);
  } else if (format == "markdown") {
    text = report_to_markdown(report);
  } else {
    throw PreconditionError("unknown report format: " + format);
  }
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot open output path: " + path);
  out << text;
}

}  // namespace freeact
