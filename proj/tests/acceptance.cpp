// Acceptance suite: one PASS/FAIL line per criterion. Expects the path of the
// slab executable as its only argument.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "slab/commands.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& command) {
  Run r;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << what << std::endl;
  if (!ok) ++failures;
}

std::size_t counterexamples(const slab::SurveyResult& result, std::string_view id) {
  const slab::InvariantTally* t = result.find(id);
  return t == nullptr ? std::size_t{1} : t->counterexamples;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: slab_acceptance <path-to-slab>\n";
    return 2;
  }
  const std::string cli = std::string("'") + argv[1] + "'";

  {
    const auto t0 = Clock::now();
    const Run r = run(cli + " verify-paper");
    const double elapsed = seconds_since(t0);
    const slab::Report rep = slab::cmd_verify_paper({});
    report(1, r.status == 0 && rep.all_pass() && elapsed < 1.0,
           "verify-paper exit " + std::to_string(r.status) + ", " + std::to_string(rep.passed()) +
               "/" + std::to_string(rep.records().size()) + " records, " +
               std::to_string(elapsed) + " s");
  }

  const auto t0 = Clock::now();
  const slab::SurveyResult sweep = slab::run_survey(slab::SurveyOptions{});
  const double sweep_seconds = seconds_since(t0);
  {
    std::size_t total = 0;
    for (const slab::InvariantTally& t : sweep.tallies) total += t.counterexamples;
    report(2, sweep.clean() && total == 0 && sweep_seconds < 600.0,
           std::to_string(sweep.rings.size()) + " rings, " + std::to_string(sweep.pairs) +
               " pairs, " + std::to_string(sweep.tallies.size()) + " invariants, " +
               std::to_string(total) + " counterexamples, " + std::to_string(sweep_seconds) + " s");
  }
  {
    const slab::InvariantTally* t = sweep.find("localization-oracle");
    const bool ok = t != nullptr && t->counterexamples == 0 && t->checked >= sweep.pairs;
    report(3, ok,
           "localization oracle: " + std::to_string(t ? t->checked : 0) + " checks, " +
               std::to_string(counterexamples(sweep, "localization-oracle")) + " mismatches");
  }
  {
    const slab::InvariantTally* t = sweep.find("s-domain=>s-field");
    report(4, t != nullptr && t->checked > 0 && t->counterexamples == 0,
           "finite S-domain is an S-field: " + std::to_string(t ? t->checked : 0) + " domains, " +
               std::to_string(counterexamples(sweep, "s-domain=>s-field")) + " counterexamples");
  }
  {
    const slab::FiniteRing bad = slab::corrupted_z12();
    const bool axioms_fail = slab::find_axiom_violation(bad.tables()).has_value();
    const slab::SurveyResult faulted = slab::run_survey({bad}, slab::SurveyOptions{});
    const Run r = run(cli + " verify-paper --inject-fault");
    report(5, axioms_fail && !faulted.clean() && r.status == 1,
           std::string("axiom validation ") + (axioms_fail ? "rejects" : "accepts") +
               " corrupted Z12, sweep " + (faulted.clean() ? "clean" : "flags it") +
               ", verify-paper --inject-fault exit " + std::to_string(r.status));
  }
  {
    const Run a = run(cli + " verify-paper --no-timestamp --json -");
    const Run b = run(cli + " verify-paper --no-timestamp --json -");
    report(6, a.status == 0 && !a.out.empty() && a.out == b.out,
           "two verify-paper JSON runs " + std::string(a.out == b.out ? "identical" : "differ") +
               " (" + std::to_string(a.out.size()) + " bytes)");
  }
  return failures == 0 ? 0 : 1;
}
