// Command-line front end: parses a spec file, runs the requested
// verification pipeline and emits human and machine reports.
//
// Exit status: 0 when every check passed, 1 when any check failed,
// 2 on usage, parse or I/O errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bicross/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"bicross: bicrossed-product quantum group verification"};

  std::vector<std::string> commands;
  std::string spec_path;
  std::string report_path;
  std::string format = "human";
  std::uint64_t seed = 0;
  std::int64_t samples = 0;
  double tolerance = 0.0;

  std::ostringstream verbs;
  for (const auto& v : bicross::pipeline_verbs()) verbs << " " << v;
  app.add_option("commands", commands, "verifications to run:" + verbs.str())
      ->required()
      ->expected(-1);
  app.add_option("--spec", spec_path, "spec file path")->required();
  auto* seed_opt = app.add_option("--seed", seed, "seed for randomized suites");
  auto* samples_opt =
      app.add_option("--samples", samples, "sample-count override for continuous runs");
  auto* tol_opt =
      app.add_option("--tolerance", tolerance, "tolerance override for continuous runs");
  app.add_option("--report", report_path, "write the machine report to this path");
  app.add_option("--format", format, "stdout format: human|machine")
      ->check(CLI::IsMember({"human", "machine"}));

  CLI11_PARSE(app, argc, argv);

  std::ifstream in(spec_path);
  if (!in) {
    std::cerr << "error: cannot open spec file: " << spec_path << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  try {
    bicross::spec::SpecFile spec = bicross::spec::parse_spec(buf.str());
    bicross::PipelineOptions opts;
    if (seed_opt->count()) opts.seed = seed;
    if (samples_opt->count()) opts.samples = samples;
    if (tol_opt->count()) opts.tolerance = tolerance;

    bicross::Report report = bicross::run_pipeline(spec, commands, opts);

    if (format == "machine") {
      std::cout << report.to_machine();
    } else {
      std::cout << report.to_human();
    }
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      if (!out) {
        std::cerr << "error: cannot write report: " << report_path << "\n";
        return 2;
      }
      out << report.to_machine();
    }
    return report.all_passed() ? 0 : 1;
  } catch (const bicross::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
