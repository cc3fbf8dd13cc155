#include "slab/classify.hpp"

#include <algorithm>

namespace slab {

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::uniform_s: return "uniform-s";
    case WitnessKind::per_instance_s: return "per-instance-s";
    case WitnessKind::pair_counterexample: return "pair-counterexample";
    case WitnessKind::triple_counterexample: return "triple-counterexample";
    case WitnessKind::ideal_counterexample: return "ideal-counterexample";
    case WitnessKind::element_counterexample: return "element-counterexample";
    case WitnessKind::none: return "none";
  }
  return "none";
}

bool Witness::has_flag(std::string_view f) const {
  return std::ranges::find(flags, f) != flags.end();
}

void require_disjoint(const Ideal& ideal, const MultSet& s) {
  require_same_ring(ideal.ring(), s.ring());
  if (s.contains_zero()) {
    throw Error(ErrorCode::zero_in_mult_set, "the multiplicative set contains 0");
  }
  if (ideal.meets(s)) {
    throw Error(ErrorCode::disjointness, "the ideal meets the multiplicative set");
  }
}

namespace {

Witness uniform(Element s) { return Witness{true, WitnessKind::uniform_s, s, {}, {}, {}, {}}; }

Witness degenerate_true() {
  Witness w = uniform(Element{0});
  w.flags.emplace_back(flag::degenerate_zero_in_s);
  return w;
}

Witness pair_counterexample(Element a, Element b) {
  return Witness{false, WitnessKind::pair_counterexample, {}, {}, {a, b}, {}, {}};
}

bool kills(const FiniteRing& r, Element s, Element a) { return r.mul(s, a) == r.zero(); }

// Uniform-s search shared by the prime-like conditions: the smallest s for
// which `holds(s, a, b)` covers every pair with `premise(a, b)`, or the first
// pair (colex) that no s covers. On a finite ring a pair-wise s always upgrades
// to a uniform one (multiply them), so one of the two outcomes is reached.
template <typename Premise, typename Holds>
Witness uniform_pair_search(const FiniteRing& r, const MultSet& set, Premise premise, Holds holds) {
  const auto candidates = set.elements();
  for (Element s : candidates) {
    const bool fails = for_each_pair_colex(r.order(), [&](Element a, Element b) {
      return premise(a, b) && !holds(s, a, b);
    });
    if (!fails) return uniform(s);
  }
  std::optional<Witness> counter;
  for_each_pair_colex(r.order(), [&](Element a, Element b) {
    if (!premise(a, b)) return false;
    if (std::ranges::any_of(candidates, [&](Element s) { return holds(s, a, b); })) return false;
    counter = pair_counterexample(a, b);
    return true;
  });
  if (!counter) {
    throw Error(ErrorCode::internal_invariant, "no uniform s and no counterexample pair");
  }
  return *counter;
}

std::vector<Ideal> ideals_containing(const Ideal& m) {
  std::vector<Ideal> out;
  for (Ideal& j : enumerate_ideals(m.ring())) {
    if (m.subset_of(j)) out.push_back(std::move(j));
  }
  return out;
}

}  // namespace

Witness is_s_integral_domain(const FiniteRing& r, const MultSet& s) {
  require_same_ring(r, s.ring());
  if (s.contains_zero()) return degenerate_true();
  return uniform_pair_search(
      r, s, [&](Element a, Element b) { return r.mul(a, b) == r.zero(); },
      [&](Element t, Element a, Element b) { return kills(r, t, a) || kills(r, t, b); });
}

Witness has_s_cancellation(const FiniteRing& r, const MultSet& s) {
  require_same_ring(r, s.ring());
  const auto candidates = s.elements();
  Witness w{true, WitnessKind::per_instance_s, {}, {}, {}, {}, {}};
  if (s.contains_zero()) {
    // No element is S-non-zero, so the condition is vacuous.
    w.s = r.zero();
    w.flags.emplace_back(flag::degenerate_zero_in_s);
    return w;
  }
  // served[d]: some s in S kills d = b - c.
  std::vector<bool> served(r.order());
  for (Element d : r.elements()) {
    served[d.index()] = std::ranges::any_of(candidates, [&](Element t) { return kills(r, t, d); });
  }
  std::vector<Element> differences;
  for (Element a : r.elements()) {
    if (std::ranges::any_of(candidates, [&](Element t) { return kills(r, t, a); })) continue;
    for (Element b : r.elements()) {
      for (Element c : r.elements()) {
        if (r.mul(a, b) != r.mul(a, c)) continue;
        const Element d = r.sub(b, c);
        if (!served[d.index()]) {
          return Witness{false, WitnessKind::triple_counterexample, {}, {}, {a, b, c}, {}, {}};
        }
        differences.push_back(d);
      }
    }
  }
  // Report the smallest s that serves every triple at once.
  for (Element t : candidates) {
    if (std::ranges::all_of(differences, [&](Element d) { return kills(r, t, d); })) {
      w.s = t;
      return w;
    }
  }
  throw Error(ErrorCode::internal_invariant, "cancellation holds but no common s exists");
}

Witness is_s_prime(const FiniteRing& r, const Ideal& p, const MultSet& s) {
  require_same_ring(r, p.ring());
  require_disjoint(p, s);
  return uniform_pair_search(
      r, s, [&](Element a, Element b) { return p.contains(r.mul(a, b)); },
      [&](Element t, Element a, Element b) {
        return p.contains(r.mul(t, a)) || p.contains(r.mul(t, b));
      });
}

Witness is_s_maximal(const FiniteRing& r, const Ideal& m, const MultSet& s) {
  require_same_ring(r, m.ring());
  require_disjoint(m, s);
  const auto above = ideals_containing(m);
  auto covers = [&](Element t, const Ideal& j) {
    return j.meets(s) || scaled(j, t).subset_of(m.members());
  };
  const auto candidates = s.elements();
  for (Element t : candidates) {
    if (std::ranges::all_of(above, [&](const Ideal& j) { return covers(t, j); })) return uniform(t);
  }
  for (const Ideal& j : above) {
    if (std::ranges::none_of(candidates, [&](Element t) { return covers(t, j); })) {
      Witness w{false, WitnessKind::ideal_counterexample, {}, {}, {}, j, {}};
      return w;
    }
  }
  throw Error(ErrorCode::internal_invariant, "no uniform s and no offending ideal");
}

Witness is_s_field(const FiniteRing& r, const MultSet& s) {
  require_same_ring(r, s.ring());
  if (s.contains_zero()) {
    throw Error(ErrorCode::zero_in_mult_set, "S-field requires 0 not in S");
  }
  return is_s_maximal(r, zero_ideal(r), s);
}

Witness is_s_proper(const FiniteRing& r, const Ideal& i, const MultSet& s) {
  require_same_ring(r, i.ring());
  require_same_ring(r, s.ring());
  for (Element t : s.elements()) {
    if (i.contains(t)) {
      Witness w{false, WitnessKind::element_counterexample, t, {}, {t}, {}, {}};
      w.flags.emplace_back(flag::meets_s);
      return w;
    }
  }
  for (Element t : s.elements()) {
    if (scaled(i, t) == ElementSet{r.zero()}) {
      Witness w{false, WitnessKind::uniform_s, t, {}, {}, {}, {}};
      w.flags.emplace_back(flag::annihilated);
      return w;
    }
  }
  return Witness{true, WitnessKind::none, {}, {}, {}, {}, {}};
}

Witness s_finite_witness(const FiniteRing& r, const Ideal& i, const MultSet& s) {
  require_same_ring(r, i.ring());
  require_same_ring(r, s.ring());
  Witness w = uniform(r.one());
  w.ideal = i;
  w.flags.emplace_back(flag::trivial_finite);
  return w;
}

Witness is_s_reduced(const FiniteRing& r, const MultSet& s) {
  require_same_ring(r, s.ring());
  const auto nil = nilpotents(r).to_vector();
  const auto candidates = s.elements();
  for (Element x : nil) {
    if (std::ranges::none_of(candidates, [&](Element t) { return kills(r, t, x); })) {
      return Witness{false, WitnessKind::element_counterexample, {}, {}, {x}, {}, {}};
    }
  }
  for (Element t : candidates) {
    if (std::ranges::all_of(nil, [&](Element x) { return kills(r, t, x); })) {
      Witness w{true, WitnessKind::per_instance_s, t, {}, {}, {}, {}};
      if (s.contains_zero()) w.flags.emplace_back(flag::degenerate_zero_in_s);
      return w;
    }
  }
  throw Error(ErrorCode::internal_invariant, "S-reduced but no common annihilator");
}

Witness is_s_idempotent(const FiniteRing& r, Element a, const MultSet& s) {
  require_same_ring(r, s.ring());
  require_element(r, a);
  for (Element t : s.elements()) {
    if (r.mul(a, a) == r.mul(t, a)) return uniform(t);
  }
  return Witness{};
}

Witness is_s_nilpotent(const FiniteRing& r, Element a, const MultSet& s) {
  require_same_ring(r, s.ring());
  require_element(r, a);
  for (Element t : s.elements()) {
    Element power = a;
    for (std::size_t n = 1; n <= r.order(); ++n) {
      if (kills(r, t, power)) {
        Witness w = uniform(t);
        w.exponent = n;
        return w;
      }
      power = r.mul(power, a);
    }
  }
  return Witness{};
}

Witness is_s_zero(const FiniteRing& r, Element a, const MultSet& s) {
  require_same_ring(r, s.ring());
  require_element(r, a);
  for (Element t : s.elements()) {
    if (kills(r, t, a)) return uniform(t);
  }
  return Witness{};
}

Witness is_s_non_zero(const FiniteRing& r, Element a, const MultSet& s) {
  require_same_ring(r, s.ring());
  require_element(r, a);
  for (Element t : s.elements()) {
    if (kills(r, t, a)) {
      return Witness{false, WitnessKind::element_counterexample, t, {}, {t}, {}, {}};
    }
  }
  return Witness{true, WitnessKind::none, {}, {}, {}, {}, {}};
}

bool is_integral_domain(const FiniteRing& r) {
  if (r.is_zero_ring()) return false;
  return zero_divisors(r).empty();
}

bool is_field(const FiniteRing& r) {
  if (r.is_zero_ring()) return false;
  return units(r).size() == r.order() - 1;
}

bool is_prime(const FiniteRing& r, const Ideal& p) {
  require_same_ring(r, p.ring());
  if (p.is_whole()) return false;
  return !for_each_pair_colex(r.order(), [&](Element a, Element b) {
    return p.contains(r.mul(a, b)) && !p.contains(a) && !p.contains(b);
  });
}

bool is_maximal(const FiniteRing& r, const Ideal& m) {
  require_same_ring(r, m.ring());
  if (m.is_whole()) return false;
  for (const Ideal& j : enumerate_ideals(r)) {
    if (m.subset_of(j) && j != m && !j.is_whole()) return false;
  }
  return true;
}

Ideal s_jacobson_radical(const FiniteRing& r, const MultSet& s) {
  require_same_ring(r, s.ring());
  ElementSet members = r.all();
  if (s.contains_zero()) return Ideal::from_members(r, members);
  for (const Ideal& m : enumerate_ideals(r)) {
    if (m.meets(s)) continue;
    if (is_s_maximal(r, m, s).verdict) members &= m.members();
  }
  return Ideal::from_members(r, members);
}

// --- re-checks ------------------------------------------------------------------

namespace {

bool witness_s_valid(const MultSet& s, const Witness& w) { return w.s && s.contains(*w.s); }

bool in_ring(const FiniteRing& r, const std::vector<Element>& elems, std::size_t count) {
  return elems.size() == count &&
         std::ranges::all_of(elems, [&](Element e) { return r.contains(e); });
}

}  // namespace

bool is_cancellation_counterexample(const FiniteRing& r, const MultSet& s, Element a, Element b,
                                    Element c) {
  if (!r.contains(a) || !r.contains(b) || !r.contains(c)) return false;
  for (Element t : s.members()) {
    if (r.mul(t, a) == r.zero()) return false;
    if (r.mul(t, b) == r.mul(t, c)) return false;
  }
  return r.mul(a, b) == r.mul(a, c);
}

bool recheck_s_integral_domain(const FiniteRing& r, const MultSet& s, const Witness& w) {
  if (w.verdict) {
    if (!witness_s_valid(s, w)) return false;
    const Element t = *w.s;
    for (Element a : r.elements()) {
      for (Element b : r.elements()) {
        if (r.mul(a, b) == r.zero() && r.mul(t, a) != r.zero() && r.mul(t, b) != r.zero()) {
          return false;
        }
      }
    }
    return true;
  }
  if (!in_ring(r, w.elements, 2)) return false;
  const Element a = w.elements[0], b = w.elements[1];
  if (r.mul(a, b) != r.zero()) return false;
  for (Element t : s.members()) {
    if (r.mul(t, a) == r.zero() || r.mul(t, b) == r.zero()) return false;
  }
  return true;
}

bool recheck_s_cancellation(const FiniteRing& r, const MultSet& s, const Witness& w) {
  if (!w.verdict) {
    return in_ring(r, w.elements, 3) &&
           is_cancellation_counterexample(r, s, w.elements[0], w.elements[1], w.elements[2]);
  }
  if (!witness_s_valid(s, w)) return false;
  const Element u = *w.s;
  for (Element a : r.elements()) {
    bool non_zero = true;
    for (Element t : s.members()) non_zero = non_zero && r.mul(t, a) != r.zero();
    if (!non_zero) continue;
    for (Element b : r.elements()) {
      for (Element c : r.elements()) {
        if (r.mul(a, b) == r.mul(a, c) && r.mul(u, b) != r.mul(u, c)) return false;
      }
    }
  }
  return true;
}

bool recheck_s_prime(const FiniteRing& r, const Ideal& p, const MultSet& s, const Witness& w) {
  if (p.meets(s)) return false;
  if (w.verdict) {
    if (!witness_s_valid(s, w)) return false;
    const Element t = *w.s;
    for (Element a : r.elements()) {
      for (Element b : r.elements()) {
        if (p.contains(r.mul(a, b)) && !p.contains(r.mul(t, a)) && !p.contains(r.mul(t, b))) {
          return false;
        }
      }
    }
    return true;
  }
  if (!in_ring(r, w.elements, 2)) return false;
  const Element a = w.elements[0], b = w.elements[1];
  if (!p.contains(r.mul(a, b))) return false;
  for (Element t : s.members()) {
    if (p.contains(r.mul(t, a)) || p.contains(r.mul(t, b))) return false;
  }
  return true;
}

bool recheck_s_maximal(const FiniteRing& r, const Ideal& m, const MultSet& s, const Witness& w) {
  if (m.meets(s)) return false;
  if (w.verdict) {
    if (!witness_s_valid(s, w)) return false;
    // Scan every superset of M that is an ideal, straight from the definition.
    const Element t = *w.s;
    for (const Ideal& j : enumerate_ideals(r)) {
      if (!m.subset_of(j) || j.meets(s)) continue;
      for (Element x : j.members()) {
        if (!m.contains(r.mul(t, x))) return false;
      }
    }
    return true;
  }
  if (!w.ideal || !is_ideal_set(r, w.ideal->members())) return false;
  const Ideal& j = *w.ideal;
  if (!m.subset_of(j) || j.meets(s)) return false;
  for (Element t : s.members()) {
    bool inside = true;
    for (Element x : j.members()) inside = inside && m.contains(r.mul(t, x));
    if (inside) return false;
  }
  return true;
}

bool recheck_s_field(const FiniteRing& r, const MultSet& s, const Witness& w) {
  return recheck_s_maximal(r, zero_ideal(r), s, w);
}

bool recheck_s_proper(const FiniteRing& r, const Ideal& i, const MultSet& s, const Witness& w) {
  if (w.verdict) {
    if (i.meets(s)) return false;
    for (Element t : s.members()) {
      bool annihilated = true;
      for (Element x : i.members()) annihilated = annihilated && r.mul(t, x) == r.zero();
      if (annihilated) return false;
    }
    return true;
  }
  if (!witness_s_valid(s, w)) return false;
  if (w.has_flag(flag::meets_s)) return i.contains(*w.s);
  if (w.has_flag(flag::annihilated)) {
    for (Element x : i.members()) {
      if (r.mul(*w.s, x) != r.zero()) return false;
    }
    return true;
  }
  return false;
}

bool recheck_s_reduced(const FiniteRing& r, const MultSet& s, const Witness& w) {
  if (!w.verdict) {
    if (!in_ring(r, w.elements, 1)) return false;
    const Element x = w.elements[0];
    if (r.pow(x, r.order()) != r.zero()) return false;
    for (Element t : s.members()) {
      if (r.mul(t, x) == r.zero()) return false;
    }
    return true;
  }
  if (!witness_s_valid(s, w)) return false;
  for (Element x : r.elements()) {
    if (r.pow(x, r.order()) == r.zero() && r.mul(*w.s, x) != r.zero()) return false;
  }
  return true;
}

bool recheck_s_idempotent(const FiniteRing& r, Element a, const MultSet& s, const Witness& w) {
  if (w.verdict) return witness_s_valid(s, w) && r.mul(a, a) == r.mul(*w.s, a);
  for (Element t : s.members()) {
    if (r.mul(a, a) == r.mul(t, a)) return false;
  }
  return true;
}

bool recheck_s_nilpotent(const FiniteRing& r, Element a, const MultSet& s, const Witness& w) {
  if (w.verdict) {
    return witness_s_valid(s, w) && w.exponent && *w.exponent >= 1 &&
           r.mul(*w.s, r.pow(a, *w.exponent)) == r.zero();
  }
  for (Element t : s.members()) {
    for (std::size_t n = 1; n <= r.order(); ++n) {
      if (r.mul(t, r.pow(a, n)) == r.zero()) return false;
    }
  }
  return true;
}

bool recheck_s_zero(const FiniteRing& r, Element a, const MultSet& s, const Witness& w) {
  if (w.verdict) return witness_s_valid(s, w) && r.mul(*w.s, a) == r.zero();
  for (Element t : s.members()) {
    if (r.mul(t, a) == r.zero()) return false;
  }
  return true;
}

bool recheck_s_non_zero(const FiniteRing& r, Element a, const MultSet& s, const Witness& w) {
  if (!w.verdict) return witness_s_valid(s, w) && r.mul(*w.s, a) == r.zero();
  for (Element t : s.members()) {
    if (r.mul(t, a) == r.zero()) return false;
  }
  return true;
}

}  // namespace slab
