// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: acceptance [path-to-cli]  (the CLI path enables the subprocess
// determinism check; without it the comparison runs in-process).

#include <array>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "cstar/suite.hpp"

namespace {

struct Criterion {
  std::string label;
  bool pass = false;
  std::string detail;
};

std::string run_capture(const std::string &command) {
  std::array<char, 4096> buffer{};
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE *)> pipe(popen(command.c_str(), "r"),
                                              pclose);
  if (!pipe)
    return out;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe.get())) > 0)
    out.append(buffer.data(), got);
  return out;
}

} // namespace

int main(int argc, char **argv) {
  const std::string cli_path = argc > 1 ? argv[1] : "";

  cstar::SuiteConfig cfg;
  cfg.n_min = 2;
  cfg.n_max = 4;
  cfg.budget = 1'000'000;
  cfg.tol = 1e-12;
  cfg.seed = 1;
  cfg.pool_target = 50;
  cfg.roundtrip_samples = 1000;
  cfg.obstruction_samples = 100;
  cfg.iso_pairs = 100;
  cfg.factorization_instances = 20;
  cfg.additivity_pairs = 50;

  const auto results = cstar::run_suite_checks(cfg);
  auto result_for = [&](const std::string &name) -> const cstar::CheckResult & {
    for (const auto &r : results)
      if (r.name == name)
        return r;
    throw std::logic_error("missing check " + name);
  };

  const std::vector<std::pair<std::string, std::string>> mapping = {
      {"dye projections are exactly idempotent and self-adjoint across the "
       "sampled unitaries",
       "dye-projection-axioms"},
      {"2x2 projections round-trip through the closed-form parameters within "
       "1e-12, with the branch product identity",
       "projection-roundtrip-2x2"},
      {"the full-support rank-one projection is rejected and constructed "
       "images are recovered with correct witnesses",
       "rank-one-obstruction-3x3"},
      {"the word isomorphism is an exact star-isomorphism with exact inverse",
       "matrix-word-isomorphism"},
      {"projections equivalent to the unit split into exact orthogonal "
       "equivalent pieces",
       "projection-decomposition"},
      {"both diagonal block identities hold exactly over the sample pool",
       "diagonal-block-identities"},
      {"assembled factorizations multiply back to u with eight unit-type "
       "involution brackets",
       "involution-factorization"},
      {"conjugating witnesses, class additivity and orthogonal sum classes "
       "check exactly",
       "class-one-witnesses"},
  };

  std::vector<Criterion> criteria;
  for (const auto &[label, check] : mapping) {
    const auto &r = result_for(check);
    Criterion c;
    c.label = label;
    c.pass = r.pass;
    if (!r.pass && !r.failures.empty())
      c.detail = r.failures.front();
    criteria.push_back(std::move(c));
  }

  // Determinism: two runs with a fixed seed must serialize byte-identically.
  {
    Criterion c;
    c.label = "two suite runs with a fixed seed produce byte-identical JSON "
              "reports";
    if (!cli_path.empty()) {
      const std::string command =
          "'" + cli_path + "' suite --seed 7 --pool 12 --roundtrip-samples 50 "
          "--iso-pairs 10 --instances 4 2>/dev/null";
      const std::string first = run_capture(command);
      const std::string second = run_capture(command);
      c.pass = !first.empty() && first == second;
      if (!c.pass)
        c.detail = "CLI outputs differ or are empty";
    } else {
      cstar::SuiteConfig small = cfg;
      small.seed = 7;
      small.pool_target = 12;
      small.roundtrip_samples = 50;
      small.iso_pairs = 10;
      small.factorization_instances = 4;
      const std::string first =
          cstar::suite_report(small, cstar::run_suite_checks(small)).dump(2);
      const std::string second =
          cstar::suite_report(small, cstar::run_suite_checks(small)).dump(2);
      c.pass = first == second;
    }
    criteria.push_back(std::move(c));
  }

  bool all_pass = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const Criterion &c = criteria[k];
    all_pass = all_pass && c.pass;
    std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << (k + 1)
              << ": " << c.label;
    if (!c.detail.empty())
      std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
  }
  return all_pass ? 0 : 1;
}
