#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slab/ideal.hpp"
#include "slab/ring.hpp"

namespace slab {

enum class WitnessKind {
  uniform_s,       // one s serves every instance
  per_instance_s,  // each instance has its own s; `s` holds one that serves all
  pair_counterexample,
  triple_counterexample,
  ideal_counterexample,
  element_counterexample,
  none,
};

[[nodiscard]] std::string_view to_string(WitnessKind kind);

namespace flag {
inline constexpr std::string_view degenerate_zero_in_s = "degenerate: 0 in S";
inline constexpr std::string_view trivial_finite = "trivial: finite ring";
inline constexpr std::string_view meets_s = "clause: I meets S";
inline constexpr std::string_view annihilated = "clause: sI = 0 for some s";
inline constexpr std::string_view modeled_definition = "modeled definition";
}  // namespace flag

/// Evidence returned by every decision procedure. A true verdict carries the
/// certifying data; a false verdict carries a concrete counterexample. Both
/// re-check independently with the recheck_* functions below.
struct Witness {
  bool verdict = false;
  WitnessKind kind = WitnessKind::none;
  std::optional<Element> s;
  std::optional<std::size_t> exponent;
  std::vector<Element> elements;
  std::optional<Ideal> ideal;
  std::vector<std::string> flags;

  [[nodiscard]] bool has_flag(std::string_view f) const;
};

/// Throws ErrorCode::zero_in_mult_set when 0 is in S and
/// ErrorCode::disjointness when I meets S.
void require_disjoint(const Ideal& ideal, const MultSet& s);

/// Unordered pairs (a, b), a <= b, ordered by b then a. Every two-element
/// counterexample search uses this order.
template <typename Visit>
bool for_each_pair_colex(std::size_t order, Visit&& visit) {
  for (std::size_t b = 0; b < order; ++b) {
    for (std::size_t a = 0; a <= b; ++a) {
      if (visit(Element{a}, Element{b})) return true;
    }
  }
  return false;
}

// --- ring-level ---------------------------------------------------------------

/// One s in S with sa = 0 or sb = 0 for every zero product ab = 0.
[[nodiscard]] Witness is_s_integral_domain(const FiniteRing& ring, const MultSet& s);
/// For every S-non-zero a and ab = ac there is s in S with sb = sc.
[[nodiscard]] Witness has_s_cancellation(const FiniteRing& ring, const MultSet& s);
[[nodiscard]] Witness is_s_field(const FiniteRing& ring, const MultSet& s);
[[nodiscard]] Witness is_s_reduced(const FiniteRing& ring, const MultSet& s);

// --- ideal-level --------------------------------------------------------------

[[nodiscard]] Witness is_s_prime(const FiniteRing& ring, const Ideal& p, const MultSet& s);
[[nodiscard]] Witness is_s_maximal(const FiniteRing& ring, const Ideal& m, const MultSet& s);
[[nodiscard]] Witness is_s_proper(const FiniteRing& ring, const Ideal& i, const MultSet& s);
/// Always true on a finite ring: s = 1 and J = I.
[[nodiscard]] Witness s_finite_witness(const FiniteRing& ring, const Ideal& i, const MultSet& s);

// --- element-level ------------------------------------------------------------

[[nodiscard]] Witness is_s_idempotent(const FiniteRing& ring, Element a, const MultSet& s);
[[nodiscard]] Witness is_s_nilpotent(const FiniteRing& ring, Element a, const MultSet& s);
[[nodiscard]] Witness is_s_zero(const FiniteRing& ring, Element a, const MultSet& s);
[[nodiscard]] Witness is_s_non_zero(const FiniteRing& ring, Element a, const MultSet& s);

// --- classical baselines ------------------------------------------------------

[[nodiscard]] bool is_integral_domain(const FiniteRing& ring);
[[nodiscard]] bool is_field(const FiniteRing& ring);
[[nodiscard]] bool is_prime(const FiniteRing& ring, const Ideal& p);
[[nodiscard]] bool is_maximal(const FiniteRing& ring, const Ideal& m);

/// Intersection of all S-maximal ideals disjoint from S (R when there are
/// none). This is a modeled definition.
[[nodiscard]] Ideal s_jacobson_radical(const FiniteRing& ring, const MultSet& s);

// --- independent witness re-checks --------------------------------------------
// Each validates the witness against the defining condition directly, without
// calling the decision procedure that produced it.

[[nodiscard]] bool recheck_s_integral_domain(const FiniteRing& ring, const MultSet& s,
                                             const Witness& w);
[[nodiscard]] bool recheck_s_cancellation(const FiniteRing& ring, const MultSet& s,
                                          const Witness& w);
[[nodiscard]] bool recheck_s_prime(const FiniteRing& ring, const Ideal& p, const MultSet& s,
                                   const Witness& w);
[[nodiscard]] bool recheck_s_maximal(const FiniteRing& ring, const Ideal& m, const MultSet& s,
                                     const Witness& w);
[[nodiscard]] bool recheck_s_field(const FiniteRing& ring, const MultSet& s, const Witness& w);
[[nodiscard]] bool recheck_s_proper(const FiniteRing& ring, const Ideal& i, const MultSet& s,
                                    const Witness& w);
[[nodiscard]] bool recheck_s_reduced(const FiniteRing& ring, const MultSet& s, const Witness& w);
[[nodiscard]] bool recheck_s_idempotent(const FiniteRing& ring, Element a, const MultSet& s,
                                        const Witness& w);
[[nodiscard]] bool recheck_s_nilpotent(const FiniteRing& ring, Element a, const MultSet& s,
                                       const Witness& w);
[[nodiscard]] bool recheck_s_zero(const FiniteRing& ring, Element a, const MultSet& s,
                                  const Witness& w);
[[nodiscard]] bool recheck_s_non_zero(const FiniteRing& ring, Element a, const MultSet& s,
                                      const Witness& w);

/// Whether (a, b, c) violates S-cancellation: a is S-non-zero, ab = ac, and
/// sb != sc for every s in S.
[[nodiscard]] bool is_cancellation_counterexample(const FiniteRing& ring, const MultSet& s,
                                                  Element a, Element b, Element c);

}  // namespace slab
