#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cstar/element.hpp"

namespace cstar {

struct SuiteConfig {
  int n_min = 2;
  int n_max = 4;
  long budget = 1'000'000;
  double tol = 1e-12;
  std::uint64_t seed = 1;
  int pool_target = 50;             // unitary samples per alphabet size
  int roundtrip_samples = 1000;     // random 2x2 projections
  int obstruction_samples = 100;    // random 3x3 Dye images
  int iso_pairs = 100;              // random matrix pairs per n
  int factorization_instances = 20; // assembled factorizations
  int additivity_pairs = 50;        // orthogonal projection pairs
  std::vector<std::string> only;    // empty = run everything

  void validate() const;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  long cases = 0;
  std::vector<std::string> failures; // capped at a handful per check
  double wall_ms = 0.0;
};

// Stable check names, in execution order.
std::vector<std::string> suite_check_names();

std::vector<CheckResult> run_suite_checks(const SuiteConfig &cfg);

// Deterministic JSON report: same config and seed give byte-identical
// output. Wall-clock timings are intentionally not part of the report.
nlohmann::json suite_report(const SuiteConfig &cfg,
                            const std::vector<CheckResult> &results);

// Deterministic sample pool of unitaries in O_n: scalar units, matrix-unit
// permutation unitaries, diagonal involutions, and seeded products of
// length two. Every entry is verified unitary.
std::vector<CuntzElement> unitary_sample_pool(int n, std::uint64_t seed,
                                              int target);

// The involutions of the pool construction (all of the form 1 - 2p plus the
// scalar -1 and 1).
std::vector<CuntzElement> involution_sample_pool(int n);

} // namespace cstar
