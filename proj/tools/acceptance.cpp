// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Usage: acceptance [seed]

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include "sspread/cli.hpp"
#include "sspread/harness.hpp"

using namespace sspread;

namespace {

int failures = 0;

void line(bool pass, const std::string& id, const std::string& detail) {
  std::printf("%s %-40s %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

void campaign(const std::string& id, std::size_t trials, std::uint64_t seed, const std::string& label,
              double& total_ms) {
  const FuzzSummary s = fuzz(id, trials, DimRange{2, 8}, seed);
  total_ms += s.runtime_ms;
  line(s.failures == 0, label + " " + id,
       std::to_string(s.failures) + "/" + std::to_string(s.trials) + " failures, worst margin " +
           fmt("%.3g", s.worst_margin) + fmt(", %.0f ms", s.runtime_ms));
}

std::string suite_json(std::uint64_t seed) {
  const std::string s = std::to_string(seed);
  const char* argv[] = {"sspread", "suite", "--seed", s.c_str(), "--json"};
  std::ostringstream out, err;
  run_cli(5, argv, out, err);
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;

  const std::pair<const char*, const char*> fixtures[] = {{"1a", "kittaneh-fail"},
                                                          {"1b", "agm-fail-2x2"},
                                                          {"1c", "agm-fail-3x3"},
                                                          {"1d", "diag-scale"}};
  for (const auto& [label, id] : fixtures) {
    const ReproReport r = repro(id);
    std::size_t ok = 0;
    std::string bad;
    for (const auto& item : r.items) {
      if (item.pass) {
        ++ok;
      } else {
        bad += " " + item.name;
      }
    }
    line(r.pass, std::string(label) + " fixture " + id,
         std::to_string(ok) + "/" + std::to_string(r.items.size()) + " items" + (bad.empty() ? "" : ", failing:" + bad));
  }

  double theorem_ms = 0.0;
  for (const char* id : {"tao_positive", "key", "trace_pairing", "commutator_scale", "commutator_sv",
                         "mixed_commutator", "general_commutator", "unitary_conj", "agm_projection", "agm_pair",
                         "agm_compact", "agm_general", "zhan"}) {
    campaign(id, 500, seed, "2", theorem_ms);
  }
  for (const auto& id : equivalence_items()) campaign(id, 500, seed, "2", theorem_ms);
  line(theorem_ms < 60000.0, "2 total runtime", fmt("%.1f s (limit 60 s)", theorem_ms / 1000.0));

  const PropertyReport props = property_suite(seed);
  for (const auto& p : props.results) {
    line(p.pass, "3 " + p.name,
         std::to_string(p.failures) + "/" + std::to_string(p.trials) + " failures, worst margin " +
             fmt("%.3g", p.worst_margin));
  }

  double control_ms = 0.0;
  campaign("control_bhatia_kittaneh", 500, seed, "4", control_ms);
  campaign("control_kittaneh", 500, seed, "4", control_ms);
  campaign("strict_gap", 200, seed, "4", control_ms);

  const std::string first = suite_json(1), second = suite_json(1);
  line(!first.empty() && first == second, "5 suite --seed 1 determinism",
       std::to_string(first.size()) + " bytes, " + (first == second ? "identical" : "different"));

  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
