#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "slab/krull.hpp"
#include "slab/ring.hpp"

namespace slab {

struct SurveyOptions {
  /// Largest n for the Z_n family.
  std::size_t up_to = 24;
  /// Largest order for products, quotients and idealizations.
  std::size_t composite_up_to = 16;
  /// Invariant ids to evaluate; empty means all.
  std::vector<std::string> properties;
  /// Worker threads; 0 means hardware concurrency.
  std::size_t jobs = 0;
  std::size_t max_order = kDefaultMaxOrder;
  ChainReading reading = ChainReading::corrected;
  /// Counterexamples kept per invariant.
  std::size_t max_examples = 5;
};

struct InvariantInfo {
  std::string_view id;
  std::string_view group;
  std::string_view statement;
};

/// Every invariant the survey can evaluate, in report order.
[[nodiscard]] const std::vector<InvariantInfo>& survey_invariants();

/// Maps user-supplied names (ids, with "⟺"/"⇒" accepted for "<=>"/"=>") to
/// ids. Throws ErrorCode::syntax on an unknown name.
[[nodiscard]] std::vector<std::string> resolve_properties(const std::vector<std::string>& names);

struct Counterexample {
  std::string ring;
  std::string mult_set;
  std::string detail;
};

struct InvariantTally {
  std::string id;
  std::string group;
  std::string statement;
  std::size_t checked = 0;
  std::size_t counterexamples = 0;
  std::vector<Counterexample> examples;
};

struct SurveyResult {
  std::vector<std::string> rings;
  std::size_t pairs = 0;
  std::vector<InvariantTally> tallies;

  [[nodiscard]] bool clean() const;
  [[nodiscard]] const InvariantTally* find(std::string_view id) const;
};

/// Z_n for 2 <= n <= up_to; Z_a x Z_b, (Z2)^3, (Z2)^4, their quotients and
/// those of Z_n by nonzero proper ideals; R(+)R for small R and Z_n(+)Z_m
/// with m | n. Composite constructions stay within composite_up_to.
/// Duplicates up to isomorphism are kept; duplicate recipes are not.
[[nodiscard]] std::vector<FiniteRing> survey_rings(const SurveyOptions& options);

/// Every ring crossed with every multiplicative set that avoids 0.
[[nodiscard]] SurveyResult run_survey(const std::vector<FiniteRing>& rings,
                                      const SurveyOptions& options);
[[nodiscard]] SurveyResult run_survey(const SurveyOptions& options);

}  // namespace slab
