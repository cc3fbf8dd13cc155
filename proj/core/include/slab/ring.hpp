#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slab/element.hpp"
#include "slab/error.hpp"

namespace slab {

/// Raw operation tables of a finite ring, row-major `order x order`.
struct RingTables {
  std::size_t order = 0;
  std::vector<Element> add;
  std::vector<Element> mul;
};

/// First ring axiom found to fail, with the offending elements.
struct AxiomViolation {
  std::string axiom;
  std::vector<Element> elements;
};

/// Exhaustive check of the commutative-ring-with-identity axioms with zero at
/// index 0 and one at index 1 (index 0 as well for the zero ring).
[[nodiscard]] std::optional<AxiomViolation> find_axiom_violation(const RingTables& tables,
                                                                 bool allow_zero_ring = false);

/// A finite commutative ring with identity, stored as explicit operation
/// tables. Copies share the same immutable tables.
class FiniteRing {
 public:
  /// Validates every axiom; throws ErrorCode::ring_axiom on failure.
  static FiniteRing from_tables(RingTables tables, std::vector<std::string> names,
                                std::string recipe);
  /// Skips axiom validation. Only for fault-injection tests.
  static FiniteRing from_tables_unchecked(RingTables tables, std::vector<std::string> names,
                                          std::string recipe);
  /// The order-1 ring. Only produced as the degenerate output of a
  /// localization at a set containing zero.
  static FiniteRing zero_ring(std::string recipe);

  [[nodiscard]] std::size_t order() const { return data_->tables.order; }
  [[nodiscard]] Element zero() const { return Element{0}; }
  [[nodiscard]] Element one() const { return Element{order() == 1 ? 0U : 1U}; }
  [[nodiscard]] bool is_zero_ring() const { return order() == 1; }

  [[nodiscard]] Element add(Element a, Element b) const {
    return data_->tables.add[a.index() * order() + b.index()];
  }
  [[nodiscard]] Element mul(Element a, Element b) const {
    return data_->tables.mul[a.index() * order() + b.index()];
  }
  [[nodiscard]] Element neg(Element a) const { return data_->negation[a.index()]; }
  [[nodiscard]] Element sub(Element a, Element b) const { return add(a, neg(b)); }
  /// a^k with a^0 = 1.
  [[nodiscard]] Element pow(Element a, std::size_t k) const;
  /// k-fold sum a + ... + a.
  [[nodiscard]] Element times(std::size_t k, Element a) const;

  [[nodiscard]] bool contains(Element a) const { return a.index() < order(); }
  [[nodiscard]] auto elements() const {
    return std::views::iota(std::size_t{0}, order()) |
           std::views::transform([](std::size_t i) { return Element{i}; });
  }
  [[nodiscard]] ElementSet all() const { return ElementSet::all(order()); }

  [[nodiscard]] const std::string& name(Element a) const { return data_->names[a.index()]; }
  [[nodiscard]] const std::string& recipe() const { return data_->recipe; }
  [[nodiscard]] const RingTables& tables() const { return data_->tables; }

  /// Same underlying tables (identity, or element-for-element equal tables).
  [[nodiscard]] bool same_as(const FiniteRing& other) const;

 private:
  struct Data {
    RingTables tables;
    std::vector<Element> negation;
    std::vector<std::string> names;
    std::string recipe;
  };

  explicit FiniteRing(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static FiniteRing build(RingTables tables, std::vector<std::string> names, std::string recipe);

  std::shared_ptr<const Data> data_;
};

/// Throws ErrorCode::invalid_element unless `a` belongs to `ring`.
void require_element(const FiniteRing& ring, Element a);
/// Throws ErrorCode::ring_mismatch unless the two rings are the same.
void require_same_ring(const FiniteRing& a, const FiniteRing& b);

// Constructions. Each throws ErrorCode::size_cap when the result would exceed
// `max_order`.

[[nodiscard]] FiniteRing make_zn(std::size_t n, std::size_t max_order = kDefaultMaxOrder);

/// Pairs are indexed (0,0), (1,1), then the remaining pairs in lexicographic
/// order of (left index, right index).
[[nodiscard]] FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b,
                                        std::size_t max_order = kDefaultMaxOrder);

/// Module for R(+)M: either R itself or Z_m with R = Z_n and m | n.
struct ModuleSpec {
  enum class Kind { regular, cyclic };
  Kind kind = Kind::regular;
  std::size_t modulus = 0;

  static ModuleSpec regular() { return {}; }
  static ModuleSpec cyclic(std::size_t m) { return {Kind::cyclic, m}; }
};

/// R(+)M with (r, m)(r', m') = (rr', r m' + r' m). Pairs are indexed (0,0),
/// (1,0), then the rest lexicographically.
[[nodiscard]] FiniteRing idealization(const FiniteRing& ring, const ModuleSpec& module,
                                      std::size_t max_order = kDefaultMaxOrder);

/// Smallest k >= 1 with k*a = 0.
[[nodiscard]] std::size_t additive_order(const FiniteRing& ring, Element a);
/// The additive order of one.
[[nodiscard]] std::size_t characteristic(const FiniteRing& ring);

[[nodiscard]] ElementSet units(const FiniteRing& ring);
/// Nonzero a with ab = 0 for some nonzero b.
[[nodiscard]] ElementSet zero_divisors(const FiniteRing& ring);
[[nodiscard]] ElementSet nilpotents(const FiniteRing& ring);
[[nodiscard]] bool is_boolean(const FiniteRing& ring);
[[nodiscard]] std::optional<Element> inverse(const FiniteRing& ring, Element a);

/// A verified ring isomorphism.
class RingIso {
 public:
  /// Throws ErrorCode::not_an_isomorphism when `map` is not a bijective
  /// unital ring homomorphism.
  static RingIso verified(FiniteRing source, FiniteRing target, std::vector<Element> map);
  static RingIso identity(const FiniteRing& ring);

  [[nodiscard]] Element operator()(Element a) const { return map_[a.index()]; }
  [[nodiscard]] const FiniteRing& source() const { return source_; }
  [[nodiscard]] const FiniteRing& target() const { return target_; }
  [[nodiscard]] std::span<const Element> map() const { return map_; }
  [[nodiscard]] RingIso inverse() const;

 private:
  RingIso(FiniteRing source, FiniteRing target, std::vector<Element> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  FiniteRing source_;
  FiniteRing target_;
  std::vector<Element> map_;
};

/// Whether `map` (indexed by source element) preserves +, * and 1.
[[nodiscard]] bool is_ring_homomorphism(const FiniteRing& source, const FiniteRing& target,
                                        std::span<const Element> map);

/// Recipe helpers: a product recipe used as the right factor of a product, or
/// as the base of a quotient/idealization, needs parentheses.
[[nodiscard]] bool recipe_is_product(std::string_view recipe);
[[nodiscard]] std::string as_product_operand(const std::string& recipe);
[[nodiscard]] std::string as_postfix_operand(const std::string& recipe);

/// Backtracking search seeded on images of an additive generating set.
[[nodiscard]] std::optional<RingIso> find_isomorphism(const FiniteRing& a, const FiniteRing& b);

/// Copy of `ring` with its non-{0,1} elements permuted by a deterministic
/// shuffle, together with the isomorphism ring -> copy.
[[nodiscard]] RingIso relabeled_copy(const FiniteRing& ring, unsigned seed);

}  // namespace slab
