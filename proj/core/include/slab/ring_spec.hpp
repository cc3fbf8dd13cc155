#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "slab/element.hpp"
#include "slab/ring.hpp"

namespace slab {

/// Parse tree of the ring-spec language:
///
///   ring    := product
///   product := postfix ("x" postfix)*
///   postfix := atom ("/" "(" INT {"," INT} ")" | "(+)" ("self" | "Z" INT))*
///   atom    := "Z" INT | "(" ring ")"
///
/// Quotient generators are element indices of the ring being quotiented.
struct RingSpecAst {
  enum class Kind { zn, product, quotient, idealization };

  Kind kind = Kind::zn;
  /// Z_n modulus, or the module modulus for "(+)Zm" (0 for "(+)self").
  std::size_t modulus = 0;
  std::vector<std::size_t> generators;
  std::shared_ptr<const RingSpecAst> left;
  std::shared_ptr<const RingSpecAst> right;
};

/// Throws SyntaxError with the offending position.
[[nodiscard]] RingSpecAst parse_ring_spec(std::string_view text);

/// Canonical text: no whitespace, parentheses only where needed.
[[nodiscard]] std::string render(const RingSpecAst& ast);

/// Builds the ring. Throws ErrorCode::size_cap past `max_order`.
[[nodiscard]] FiniteRing evaluate(const RingSpecAst& ast, std::size_t max_order = kDefaultMaxOrder);

[[nodiscard]] FiniteRing parse_ring(std::string_view text, std::size_t max_order = kDefaultMaxOrder);

/// "1,2,4", "{1,2,4}" or "(1,2,4)"; whitespace is ignored. Throws SyntaxError.
[[nodiscard]] std::vector<std::size_t> parse_index_list(std::string_view text);

/// Indices into `ring`; throws ErrorCode::invalid_element when out of range.
[[nodiscard]] std::vector<Element> to_elements(const FiniteRing& ring,
                                               const std::vector<std::size_t>& indices);

}  // namespace slab
