#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "slab/element.hpp"
#include "slab/ring.hpp"

namespace slab {

/// A multiplicatively closed subset, stored as the closure of its generators
/// together with 1. Zero is allowed here; checks that need disjointness reject
/// it themselves.
class MultSet {
 public:
  [[nodiscard]] const FiniteRing& ring() const { return ring_; }
  [[nodiscard]] const ElementSet& members() const { return members_; }
  [[nodiscard]] std::span<const Element> generators() const { return generators_; }
  /// Members in index order; witness searches scan in this order.
  [[nodiscard]] std::vector<Element> elements() const { return members_.to_vector(); }
  [[nodiscard]] bool contains(Element a) const { return members_.contains(a); }
  [[nodiscard]] bool contains_zero() const { return members_.contains(ring_.zero()); }
  [[nodiscard]] std::size_t size() const { return members_.size(); }

  friend bool operator==(const MultSet& a, const MultSet& b) {
    return a.ring_.same_as(b.ring_) && a.members_ == b.members_;
  }

 private:
  friend MultSet mult_closure(const FiniteRing&, std::span<const Element>);
  MultSet(FiniteRing ring, ElementSet members, std::vector<Element> generators)
      : ring_(std::move(ring)), members_(members), generators_(std::move(generators)) {}

  FiniteRing ring_;
  ElementSet members_;
  std::vector<Element> generators_;
};

/// An ideal, stored as a membership mask plus a generating list.
class Ideal {
 public:
  /// Throws ErrorCode::internal_invariant when `members` is not an ideal.
  static Ideal from_members(const FiniteRing& ring, const ElementSet& members);

  [[nodiscard]] const FiniteRing& ring() const { return ring_; }
  [[nodiscard]] const ElementSet& members() const { return members_; }
  [[nodiscard]] std::span<const Element> generators() const { return generators_; }
  [[nodiscard]] bool contains(Element a) const { return members_.contains(a); }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool is_zero() const { return members_.size() == 1; }
  [[nodiscard]] bool is_whole() const { return members_.size() == ring_.order(); }
  [[nodiscard]] bool subset_of(const Ideal& other) const {
    return members_.subset_of(other.members_);
  }
  [[nodiscard]] bool meets(const MultSet& s) const { return members_.intersects(s.members()); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_.same_as(b.ring_) && a.members_ == b.members_;
  }

 private:
  friend Ideal generated_ideal(const FiniteRing&, std::span<const Element>);
  Ideal(FiniteRing ring, ElementSet members, std::vector<Element> generators)
      : ring_(std::move(ring)), members_(members), generators_(std::move(generators)) {}

  FiniteRing ring_;
  ElementSet members_;
  std::vector<Element> generators_;
};

/// Deterministic ideal order: by size, then by membership mask.
[[nodiscard]] bool ideal_less(const Ideal& a, const Ideal& b);

/// Whether `members` is closed under addition, negation and ring multiples.
[[nodiscard]] bool is_ideal_set(const FiniteRing& ring, const ElementSet& members);

// --- multiplicative sets ----------------------------------------------------

[[nodiscard]] MultSet mult_closure(const FiniteRing& ring, std::span<const Element> generators);
[[nodiscard]] MultSet mult_closure(const FiniteRing& ring, std::initializer_list<Element> generators);
/// Neither zero nor a zero divisor belongs to S.
[[nodiscard]] bool is_proper_mult_set(const MultSet& s);
/// Every multiplicatively closed subset of `ring` that avoids zero, ordered
/// by (size, mask).
[[nodiscard]] std::vector<MultSet> enumerate_mult_sets(const FiniteRing& ring);
/// Image of S under a ring map into `target` (closed by construction).
[[nodiscard]] MultSet image_mult_set(const MultSet& s, const FiniteRing& target,
                                     std::span<const Element> map);

// --- ideals -----------------------------------------------------------------

[[nodiscard]] Ideal generated_ideal(const FiniteRing& ring, std::span<const Element> generators);
[[nodiscard]] Ideal generated_ideal(const FiniteRing& ring, std::initializer_list<Element> generators);
[[nodiscard]] Ideal zero_ideal(const FiniteRing& ring);
[[nodiscard]] Ideal unit_ideal(const FiniteRing& ring);
/// All ideals, by fixpoint closure of joins with principal ideals, sorted
/// with ideal_less.
[[nodiscard]] std::vector<Ideal> enumerate_ideals(const FiniteRing& ring);

[[nodiscard]] Ideal ideal_sum(const Ideal& a, const Ideal& b);
[[nodiscard]] Ideal ideal_product(const Ideal& a, const Ideal& b);
[[nodiscard]] Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// I^k for k >= 1.
[[nodiscard]] Ideal ideal_power(const Ideal& ideal, std::size_t k);
/// s * I as a set (not necessarily an ideal generator list).
[[nodiscard]] ElementSet scaled(const Ideal& ideal, Element s);
/// (I : s) = {a : s a in I}.
[[nodiscard]] Ideal colon(const Ideal& ideal, Element s);

[[nodiscard]] Ideal radical(const Ideal& ideal);
/// {a : s a^n in I for some s in S, n >= 1}.
[[nodiscard]] Ideal s_radical(const Ideal& ideal, const MultSet& s);
[[nodiscard]] std::vector<Ideal> maximal_ideals(const FiniteRing& ring);
[[nodiscard]] Ideal jacobson_radical(const FiniteRing& ring);

// --- maps -------------------------------------------------------------------

/// Coset ring R/I together with the projection R -> R/I. Cosets are indexed
/// by their smallest representative, with 0 + I and 1 + I first.
struct QuotientResult {
  FiniteRing ring;
  std::vector<Element> projection;
};

/// Throws ErrorCode::improper_quotient when I = R.
[[nodiscard]] QuotientResult quotient_ring(const FiniteRing& ring, const Ideal& ideal);

/// Image of an ideal under a surjective ring map.
[[nodiscard]] Ideal image_ideal(const Ideal& ideal, const FiniteRing& target,
                                std::span<const Element> map);
/// Preimage of an ideal of `target` under a ring map from `source`.
[[nodiscard]] Ideal preimage_ideal(const FiniteRing& source, const Ideal& ideal,
                                   std::span<const Element> map);

[[nodiscard]] MultSet apply_iso(const RingIso& f, const MultSet& s);
[[nodiscard]] Ideal apply_iso(const RingIso& f, const Ideal& ideal);

}  // namespace slab
