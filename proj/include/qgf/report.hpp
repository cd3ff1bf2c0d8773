#ifndef QGF_REPORT_HPP
#define QGF_REPORT_HPP

#include <algorithm>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qgf {

inline constexpr const char* kToolVersion = "1.0.0";

struct CheckResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::optional<double> residual;
  double threshold = 0.0;
  std::optional<std::complex<double>> value;
};

inline CheckResult residual_check(std::string id, std::string description,
                                  double residual, double threshold) {
  CheckResult c;
  c.id = std::move(id);
  c.description = std::move(description);
  c.residual = residual;
  c.threshold = threshold;
  c.pass = residual < threshold;
  return c;
}

inline CheckResult flag_check(std::string id, std::string description, bool pass) {
  CheckResult c;
  c.id = std::move(id);
  c.description = std::move(description);
  c.pass = pass;
  return c;
}

struct Report {
  std::string command;
  std::string input_digest;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
  }
};

// FNV-1a, used to fingerprint the input bytes in reports.
inline std::string fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// 17 significant digits: enough to round-trip any double exactly.
inline std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline nlohmann::ordered_json json_real(double x) {
  return nlohmann::ordered_json::parse(format_real(x));
}

inline nlohmann::ordered_json json_complex(std::complex<double> z) {
  return nlohmann::ordered_json::array({json_real(z.real()), json_real(z.imag())});
}

inline nlohmann::ordered_json report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["tool_version"] = kToolVersion;
  j["command"] = r.command;
  j["input_digest"] = r.input_digest;
  j["tolerance"] = json_real(r.tolerance);
  j["seed"] = r.seed;
  std::vector<const CheckResult*> order;
  for (const auto& c : r.checks) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(),
                   [](auto* a, auto* b) { return a->id < b->id; });
  auto arr = nlohmann::ordered_json::array();
  for (const auto* c : order) {
    nlohmann::ordered_json jc;
    jc["id"] = c->id;
    jc["description"] = c->description;
    jc["pass"] = c->pass;
    if (c->residual) {
      jc["residual"] = json_real(*c->residual);
      jc["threshold"] = json_real(c->threshold);
    }
    if (c->value) jc["value"] = json_complex(*c->value);
    arr.push_back(std::move(jc));
  }
  j["checks"] = std::move(arr);
  int passed = 0;
  for (const auto& c : r.checks) passed += c.pass ? 1 : 0;
  j["summary"] = {{"total", r.checks.size()},
                  {"passed", passed},
                  {"failed", r.checks.size() - passed}};
  return j;
}

inline std::string report_to_text(const Report& r) {
  std::string out;
  out += "command: " + r.command + "\n";
  out += "input_digest: " + r.input_digest + "\n";
  out += "tolerance: " + format_real(r.tolerance) + "\n";
  out += "seed: " + std::to_string(r.seed) + "\n";
  std::vector<const CheckResult*> order;
  for (const auto& c : r.checks) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(),
                   [](auto* a, auto* b) { return a->id < b->id; });
  for (const auto* c : order) {
    out += c->pass ? "PASS " : "FAIL ";
    out += c->id + "  " + c->description;
    if (c->residual)
      out += "  residual=" + format_real(*c->residual) +
             " threshold=" + format_real(c->threshold);
    if (c->value)
      out += "  value=[" + format_real(c->value->real()) + "," +
             format_real(c->value->imag()) + "]";
    out += "\n";
  }
  int passed = 0;
  for (const auto& c : r.checks) passed += c.pass ? 1 : 0;
  out += "summary: " + std::to_string(passed) + "/" + std::to_string(r.checks.size()) +
         " passed\n";
  return out;
}

}  // namespace qgf

#endif
