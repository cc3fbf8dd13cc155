#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slab/classify.hpp"
#include "slab/ideal.hpp"
#include "slab/localization.hpp"
#include "slab/ring.hpp"

namespace slab {

/// I, I^2, ... up to the first repeat.
struct PowerChain {
  Ideal base;
  /// powers[j] = I^(j+1), ending with I^(k+1) = I^k.
  std::vector<Ideal> powers;
  /// The least k with I^k = I^(k+1).
  std::size_t stabilization_index = 0;
  /// The stable power, equal to the intersection of all powers.
  Ideal intersection;
};

/// Throws ErrorCode::improper_ideal when I = R.
[[nodiscard]] PowerChain power_intersection(const FiniteRing& ring, const Ideal& ideal);

/// Smallest m, then smallest s, with s * rad(I)^m inside I. The exponent is in
/// Witness::exponent. Throws ErrorCode::theorem_violation if none exists.
[[nodiscard]] Witness pmsb_witness(const FiniteRing& ring, const Ideal& ideal, const MultSet& s);

struct AnnihilatorResult {
  PowerChain chain;
  /// (t + a) B = 0 with t in S and a in I; a is searched before t.
  Element t;
  Element a;
  /// Smallest t in S with t B = 0, when one exists.
  std::optional<Element> t_alone;
};

/// Throws ErrorCode::theorem_violation when no (t, a) exists.
[[nodiscard]] AnnihilatorResult krull_annihilator(const FiniteRing& ring, const Ideal& ideal,
                                                  const MultSet& s);

/// Smallest s with: ab in Q implies sa in Q or s b^n in Q for some n <= |R|.
/// A false verdict carries the first ordered pair (a, b) that no s serves.
[[nodiscard]] Witness is_s_primary(const FiniteRing& ring, const Ideal& q, const MultSet& s);

/// A smallest set of S-primary ideals, each containing I and disjoint from S,
/// whose intersection is I. Components follow ideal order.
[[nodiscard]] std::vector<Ideal> s_primary_decomposition(const FiniteRing& ring,
                                                         const Ideal& ideal, const MultSet& s);

/// Same search over a precomputed list of the S-primary ideals of the ring,
/// in ideal order.
[[nodiscard]] std::vector<Ideal> s_primary_decomposition(const Ideal& ideal,
                                                         const std::vector<Ideal>& s_primary);

enum class ChainReading { literal, corrected };

[[nodiscard]] std::string_view to_string(ChainReading reading);
/// Throws ErrorCode::syntax for anything other than "literal" or "corrected".
[[nodiscard]] ChainReading parse_chain_reading(std::string_view text);

/// Whether P > Q is a strict step. Corrected: s P is not inside Q for every
/// s in S. Literal: s Q is not inside P for every s in S.
[[nodiscard]] bool is_s_strict_step(const Ideal& p, const Ideal& q, const MultSet& s,
                                    ChainReading reading);

struct SChain {
  std::vector<Ideal> primes;
  std::size_t length = 0;
};

struct SDimension {
  std::size_t dimension = 0;
  SChain longest;
  std::vector<Ideal> s_primes;
};

/// Throws ErrorCode::zero_in_mult_set when 0 is in S.
[[nodiscard]] SDimension s_dimension(const FiniteRing& ring, const MultSet& s,
                                     ChainReading reading = ChainReading::corrected);

struct ProductDecomposition {
  bool skipped = false;
  std::string reason;
  std::optional<LocalizationResult> localization;
  std::optional<Ideal> extended;
  /// Primary components of the extended ideal after merging equal radicals.
  std::vector<Ideal> components;
  std::vector<Ideal> radicals;
  bool radicals_comaximal = false;
  bool product_is_intersection = false;
  bool intersection_is_extension = false;

  [[nodiscard]] bool passed() const {
    return skipped || (radicals_comaximal && product_is_intersection && intersection_is_extension);
  }
};

[[nodiscard]] ProductDecomposition check_product_decomposition(const FiniteRing& ring,
                                                               const MultSet& s,
                                                               const Ideal& ideal,
                                                               ChainReading reading =
                                                                   ChainReading::corrected);

struct JacobsonEntry {
  std::string label;
  Ideal ideal;
  Ideal stable_power;
  bool found = false;
  std::optional<Element> s;
  std::optional<Element> a;
};

/// For every ideal inside J(R) disjoint from S, and for the S-Jacobson
/// radical, searches (s, a) in S x I with (s + a) B(I) = 0.
/// Throws ErrorCode::zero_in_mult_set when 0 is in S.
[[nodiscard]] std::vector<JacobsonEntry> jacobson_corollary_check(const FiniteRing& ring,
                                                                  const MultSet& s);

}  // namespace slab
