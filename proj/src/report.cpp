#include "starq/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace starq {

void Recorder::add(std::string id, std::string ref, std::string backend, double residual,
                   bool pass) {
  records_.push_back({std::move(id), std::move(ref), std::move(backend), residual, pass});
}

void Recorder::check_exact(std::string id, std::string ref, bool pass, double residual) {
  add(std::move(id), std::move(ref), "exact", pass ? 0.0 : residual, pass);
}

void Recorder::check_float(std::string id, std::string ref, double residual, double tolerance) {
  add(std::move(id), std::move(ref), "float", residual, residual <= tolerance);
}

bool Recorder::all_pass() const {
  return std::all_of(records_.begin(), records_.end(),
                     [](const CheckRecord& r) { return r.pass; });
}

double Recorder::max_residual() const {
  double mx = 0.0;
  for (const auto& r : records_) mx = std::max(mx, r.residual);
  return mx;
}

std::size_t Recorder::failed_count() const {
  std::size_t n = 0;
  for (const auto& r : records_)
    if (!r.pass) ++n;
  return n;
}

std::string Recorder::to_json(const std::string& suite_list, const std::string& backend,
                              double hbar, double tolerance, unsigned long seed) const {
  nlohmann::ordered_json doc;
  doc["schema"] = "starq-report-v1";
  doc["suite"] = suite_list;
  doc["backend"] = backend;
  doc["hbar"] = hbar;
  doc["tolerance"] = tolerance;
  doc["seed"] = seed;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& r : records_) {
    nlohmann::ordered_json row;
    row["id"] = r.id;
    row["ref"] = r.ref;
    row["backend"] = r.backend;
    row["residual"] = r.residual;
    row["pass"] = r.pass;
    checks.push_back(std::move(row));
  }
  doc["checks"] = std::move(checks);
  nlohmann::ordered_json summary;
  summary["total"] = records_.size();
  summary["failed"] = failed_count();
  summary["max_residual"] = max_residual();
  summary["pass"] = all_pass();
  doc["summary"] = std::move(summary);
  return doc.dump(2);
}

}  // namespace starq
