#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "slab/ideal.hpp"
#include "slab/ring.hpp"

namespace slab {

/// S^-1 R built from fractions, with the canonical map R -> S^-1 R.
struct LocalizationResult {
  FiniteRing source;
  MultSet mult_set;
  FiniteRing local_ring;
  /// phi[a] = a/1.
  std::vector<Element> phi;
  MultSet phi_s;
  /// {a : phi(a) = 0}.
  Ideal kernel;
  /// class_table[a * |S| + j] = a / S.elements()[j].
  std::vector<Element> class_table;
  bool degenerate = false;

  /// The class of a/s. Throws ErrorCode::invalid_element when s is not in S.
  [[nodiscard]] Element fraction(Element a, Element s) const;
};

/// Fractions (a, s) collapsed by (a,s) ~ (b,t) iff u(at - bs) = 0 for some u
/// in S. Classes are indexed by their smallest (numerator, denominator) pair.
/// A set containing 0 gives the zero ring, flagged degenerate.
[[nodiscard]] LocalizationResult localize(const FiniteRing& ring, const MultSet& s);

/// The ideal of the local ring generated by phi(I).
[[nodiscard]] Ideal extend_ideal(const LocalizationResult& loc, const Ideal& ideal);

/// {a : sa = 0 for some s in S}, straight from the definition.
[[nodiscard]] ElementSet s_torsion(const FiniteRing& ring, const MultSet& s);

struct TheoremClause {
  std::string name;
  std::string statement;
  bool applicable = true;
  bool lhs = false;
  bool rhs = false;
  bool holds = true;
  std::string detail;
};

struct LocalizationTheorems {
  LocalizationResult localization;
  std::vector<TheoremClause> clauses;

  [[nodiscard]] bool all_hold() const;
};

/// Clauses:
///   (a) S-integral domain iff S^-1 R is an integral domain
///   (b) S-field implies S^-1 R is a phi(S)-field
///   (c) for proper S, the converse of (b)
///   (d) S-integral domain implies S-field
/// A set containing 0 marks every clause not applicable.
[[nodiscard]] LocalizationTheorems check_localization_theorems(const FiniteRing& ring,
                                                               const MultSet& s);

}  // namespace slab
