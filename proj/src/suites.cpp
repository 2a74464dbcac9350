#include "starq/suites.hpp"

#include <map>
#include <stdexcept>

namespace starq {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"cliffordization", "wick", "oscillator",
                                                 "landau", "susy", "dirac", "fw"};
  return names;
}

void run_suites(const std::vector<std::string>& names, const RunConfig& cfg, Recorder& rec) {
  using Fn = void (*)(const RunConfig&, Recorder&);
  static const std::map<std::string, Fn> registry = {
      {"cliffordization", &suite_cliffordization},
      {"wick", &suite_wick},
      {"oscillator", &suite_oscillator},
      {"landau", &suite_landau},
      {"susy", &suite_susy},
      {"dirac", &suite_dirac},
      {"fw", &suite_fw},
  };
  std::vector<std::string> expanded;
  for (const auto& name : names) {
    if (name == "all") {
      expanded = suite_names();
      break;
    }
    expanded.push_back(name);
  }
  for (const auto& name : expanded) {
    auto it = registry.find(name);
    if (it == registry.end()) throw std::invalid_argument("unknown suite name: " + name);
    it->second(cfg, rec);
  }
}

}  // namespace starq
