// slab: explore finite commutative rings relative to a multiplicative set.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "slab/commands.hpp"

namespace {

int exit_for(slab::ErrorCode code) {
  switch (code) {
    case slab::ErrorCode::theorem_violation:
    case slab::ErrorCode::internal_invariant:
    case slab::ErrorCode::ring_axiom:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite commutative rings relative to a multiplicative set S"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(slab::tool_version()));

  std::string json_path;
  std::string reading = "corrected";
  bool no_timestamp = false;
  slab::CommandOptions options;
  app.add_option("--json", json_path, "Write the JSON report to a path, or - for stdout");
  app.add_option("--max-order", options.max_order, "Largest ring order accepted")
      ->check(CLI::Range(1, 256));
  app.add_option("--chain-reading", reading, "How S-chains compare primes")
      ->check(CLI::IsMember({"literal", "corrected"}));
  app.add_flag("--no-timestamp", no_timestamp, "Omit elapsed time and generation date");
  app.add_flag("--strict-mult-set", options.strict_mult_set, "Reject a multiplicative set containing 0");

  std::string ring;
  std::string mult_set;
  std::string ideal;

  auto* explore = app.add_subcommand("explore", "Classify a ring, its ideals and elements");
  explore->add_option("--ring", ring, "Ring spec, e.g. Z12 or Z2xZ4/(1)")->required();
  explore->add_option("--mult-set", mult_set, "Generators of S as element indices");

  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify-paper", "Run the fixed battery of worked examples");
  verify->add_flag("--inject-fault", inject_fault, "Corrupt one Z12 table entry first");

  slab::SurveyOptions survey_options;
  auto* survey = app.add_subcommand("survey", "Sweep rings and multiplicative sets for invariants");
  survey->add_option("--up-to", survey_options.up_to, "Largest n for Z_n");
  survey->add_option("--composite-up-to", survey_options.composite_up_to,
                     "Largest order for products, quotients and idealizations");
  survey->add_option("--properties", survey_options.properties, "Invariant ids to check")
      ->delimiter(',');
  survey->add_option("--jobs", survey_options.jobs, "Worker threads (0 = all cores)");
  survey->add_option("--examples", survey_options.max_examples, "Counterexamples kept per invariant");

  auto* localize = app.add_subcommand("localize", "Build S^-1 R and compare it to the oracle");
  localize->add_option("--ring", ring, "Ring spec")->required();
  localize->add_option("--mult-set", mult_set, "Generators of S");

  auto* krull = app.add_subcommand("krull", "Power chains, witnesses and S-primary decomposition");
  krull->add_option("--ring", ring, "Ring spec")->required();
  krull->add_option("--mult-set", mult_set, "Generators of S");
  krull->add_option("--ideal", ideal, "Generators of I");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    options.reading = slab::parse_chain_reading(reading);
    std::optional<slab::Report> report;
    if (*explore) {
      report = slab::cmd_explore(ring, mult_set, options);
    } else if (*verify) {
      report = slab::cmd_verify_paper(options, inject_fault);
    } else if (*survey) {
      report = slab::cmd_survey(survey_options, options);
    } else if (*localize) {
      report = slab::cmd_localize(ring, mult_set, options);
    } else {
      report = slab::cmd_krull(ring, mult_set, ideal, options);
    }

    const std::string json = report->to_json(!no_timestamp).dump(2) + "\n";
    if (json_path == "-") {
      std::cout << json;
    } else {
      std::cout << report->to_text();
      if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) {
          std::cerr << "error: cannot write " << json_path << '\n';
          return 2;
        }
        out << json;
      }
    }
    return report->exit_code();
  } catch (const slab::Error& e) {
    std::cerr << "error [" << slab::to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_for(e.code());
  }
}
