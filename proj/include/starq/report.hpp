#pragma once

#include <string>
#include <vector>

namespace starq {

// One verification record; exact checks carry the promoted residual norm
// (0.0 when they hold identically).
struct CheckRecord {
  std::string id;
  std::string ref;      // short label of the identity being checked
  std::string backend;  // "exact" or "float"
  double residual = 0.0;
  bool pass = false;
};

class Recorder {
 public:
  void add(std::string id, std::string ref, std::string backend, double residual, bool pass);
  void check_exact(std::string id, std::string ref, bool pass, double residual = 0.0);
  void check_float(std::string id, std::string ref, double residual, double tolerance);

  const std::vector<CheckRecord>& records() const { return records_; }
  bool all_pass() const;
  double max_residual() const;
  std::size_t failed_count() const;

  // Deterministic JSON document (insertion-ordered keys).
  std::string to_json(const std::string& suite_list, const std::string& backend, double hbar,
                      double tolerance, unsigned long seed) const;

 private:
  std::vector<CheckRecord> records_;
};

}  // namespace starq
