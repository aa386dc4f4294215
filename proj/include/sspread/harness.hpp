#pragma once

// Fuzz campaigns, example fixtures and the property suite.

#include <cstdint>
#include <string>
#include <vector>

#include "sspread/ineq.hpp"
#include "sspread/random.hpp"

namespace sspread {

struct DimRange {
  Index lo = 2;
  Index hi = 8;
};

/// Dimension of one trial, drawn from its own stream so that it does not
/// shift the instance draws.
Index trial_dim(std::uint64_t trial_seed, DimRange range);

struct FuzzSummary {
  std::string ineq_id;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst_margin = 0.0;
  std::uint64_t worst_seed = 0;
  double runtime_ms = 0.0;  // not part of the serialized report
};

/// Registered campaign ids: the theorem verifiers, the equivalence items and
/// the controls.
const std::vector<std::string>& fuzz_ids();
bool is_fuzz_id(const std::string& id);

/// A single seeded instance of campaign `id`.
Verdict fuzz_trial(const std::string& id, std::uint64_t trial_seed, Index dim);
FuzzSummary fuzz(const std::string& id, std::size_t trials, DimRange dims, std::uint64_t seed);

struct ReproItem {
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ReproReport {
  std::string example_id;
  std::vector<ReproItem> items;
  std::vector<Verdict> verdicts;
  bool pass = false;
};

const std::vector<std::string>& example_ids();
ReproReport repro(const std::string& example_id);

/// Fixture inputs, shared with the command-line files.
struct KittanehExample {
  HermMatrix a, b;
  CMatrix x;
};
struct Agm2x2Example {
  CMatrix s, c;
  HermMatrix e;
};
struct Agm3x3Example {
  CMatrix a, b;
  HermMatrix e;
};
KittanehExample kittaneh_example();
Agm2x2Example agm_2x2_example();
Agm3x3Example agm_3x3_example();
DiagSpec diag_scale_example();

struct PropertyResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst_margin = 0.0;
  bool pass = false;
};

struct PropertyReport {
  std::uint64_t seed = 0;
  std::vector<PropertyResult> results;
  bool pass = false;
};

/// Structural invariants of the library, each on seeded random inputs.
/// `trials` == 0 uses the default counts (500, and 1000 for eigh).
PropertyReport property_suite(std::uint64_t seed, std::size_t trials = 0);

}  // namespace sspread
