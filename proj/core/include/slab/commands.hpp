#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "slab/krull.hpp"
#include "slab/report.hpp"
#include "slab/survey.hpp"

namespace slab {

struct CommandOptions {
  std::size_t max_order = kDefaultMaxOrder;
  ChainReading reading = ChainReading::corrected;
  /// Reject a multiplicative set whose closure contains 0.
  bool strict_mult_set = false;
};

/// Closure of the listed generators (empty text gives {1}). Throws
/// ErrorCode::zero_in_mult_set in strict mode when 0 ends up in S.
[[nodiscard]] MultSet parse_mult_set(const FiniteRing& ring, std::string_view text, bool strict);

/// Ideal generated by the listed element indices (empty text gives (0)).
[[nodiscard]] Ideal parse_ideal(const FiniteRing& ring, std::string_view text);

/// Z12 with mul(4, 3) changed from 0 to 4, left unvalidated.
[[nodiscard]] FiniteRing corrupted_z12();

[[nodiscard]] Report cmd_explore(std::string_view ring_spec, std::string_view mult_set,
                                 const CommandOptions& options);

/// Fixed battery of worked examples compared to goldens. With `inject_fault`
/// every Z12 instance uses corrupted_z12() and the battery must fail.
[[nodiscard]] Report cmd_verify_paper(const CommandOptions& options, bool inject_fault = false);

[[nodiscard]] Report cmd_survey(const SurveyOptions& survey, const CommandOptions& options);

[[nodiscard]] Report cmd_localize(std::string_view ring_spec, std::string_view mult_set,
                                  const CommandOptions& options);

[[nodiscard]] Report cmd_krull(std::string_view ring_spec, std::string_view mult_set,
                               std::string_view ideal, const CommandOptions& options);

}  // namespace slab
