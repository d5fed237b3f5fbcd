#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicross/check.hpp"
#include "bicross/specfile.hpp"

namespace bicross {

/// A full verification run: one record per executed check, in a
/// deterministic order (verbs in canonical order, objects in declaration
/// order). The machine serialization is the versioned compatibility surface;
/// it is bit-stable across runs with the same spec and seed apart from the
/// timing_ms fields.
struct Report {
  std::uint64_t seed = 42;
  std::vector<CheckResult> checks;

  std::int64_t passed() const;
  std::int64_t failed() const;
  bool all_passed() const { return failed() == 0; }

  std::string to_machine() const;
  std::string to_human() const;

  /// Removes the timing fields from a machine report (for determinism
  /// comparisons).
  static std::string strip_timing(const std::string& machine_report);
};

struct PipelineOptions {
  std::optional<std::uint64_t> seed;       // overrides continuous seeds, seeds hopf sampling
  std::optional<std::int64_t> samples;     // overrides continuous sample counts
  std::optional<double> tolerance;         // overrides continuous tolerances
  std::size_t hopf_random_samples = 1000;
  long hopf_max_exp = 2;
};

/// The verbs understood by run_pipeline, in canonical execution order.
std::vector<std::string> pipeline_verbs();

/// Executes the requested verifications in dependency order over every
/// matching object in the spec. Throws DomainError for an unknown command or
/// when a command's dependency was not requested (e.g. haar before build).
Report run_pipeline(const spec::SpecFile& spec, const std::vector<std::string>& commands,
                    const PipelineOptions& opts = {});

}  // namespace bicross
