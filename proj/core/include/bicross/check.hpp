#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bicross {

/// Outcome of one verification. Failures are content, not exceptions: a
/// check lists what it looked at, every counterexample it found (up to a
/// cap, with the true count in `counts`), and any named result values.
struct CheckResult {
  std::string name;
  std::string statement;  // the identity or property being verified
  bool passed = true;
  std::vector<std::string> counterexamples;
  std::map<std::string, std::int64_t> counts;
  std::map<std::string, std::string> values;
  double timing_ms = 0.0;

  static constexpr std::size_t kMaxCounterexamples = 8;

  void fail(const std::string& witness) {
    passed = false;
    ++counts["violations"];
    if (counterexamples.size() < kMaxCounterexamples)
      counterexamples.push_back(witness);
  }
};

}  // namespace bicross
