#ifndef WEYLKIT_SUITES_HPP_
#define WEYLKIT_SUITES_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace weylkit {

struct SuiteConfig {
  std::string suite;
  std::string ring_spec = "zmod:97";
  int trials = 200;
  std::uint64_t seed = 0;
  std::string realization;  // weyl suite only
  std::string mutation;     // test hook: deliberately corrupt one operation
  bool parallel = false;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // replayable failure input, empty on pass
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckResult> checks;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }
  std::string to_json() const;  // stable key order, no timestamps
};

// Known suite names: composition, albert-identities, freudenthal, clifford,
// weyl:<realization>, square-formula, lemmas-root-combinatorics,
// so3-normalizer, bc1-counterexample.
SuiteReport run_suite(const SuiteConfig& config);

std::vector<std::string> known_suites();

}  // namespace weylkit

#endif
