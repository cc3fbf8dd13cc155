#include "slab/ideal.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace slab {

namespace {

// Closure of a set under addition. Assumes the set is already closed under
// ring multiples, so the result is an ideal.
ElementSet additive_closure(const FiniteRing& ring, ElementSet set) {
  set.insert(ring.zero());
  std::vector<Element> frontier = set.to_vector();
  while (!frontier.empty()) {
    std::vector<Element> next;
    const auto current = set.to_vector();
    for (Element x : frontier) {
      for (Element y : current) {
        const Element z = ring.add(x, y);
        if (!set.contains(z)) {
          set.insert(z);
          next.push_back(z);
        }
      }
    }
    frontier = std::move(next);
  }
  return set;
}

ElementSet generated_members(const FiniteRing& ring, std::span<const Element> generators) {
  ElementSet multiples;
  for (Element g : generators) {
    require_element(ring, g);
    for (Element r : ring.elements()) multiples.insert(ring.mul(r, g));
  }
  return additive_closure(ring, multiples);
}

// Greedy generating list: scan in index order, keep elements not yet covered.
std::vector<Element> canonical_generators(const FiniteRing& ring, const ElementSet& members) {
  std::vector<Element> gens;
  ElementSet covered{ring.zero()};
  for (Element a : members) {
    if (covered.contains(a)) continue;
    gens.push_back(a);
    covered = generated_members(ring, gens);
  }
  return gens;
}

}  // namespace

bool is_ideal_set(const FiniteRing& ring, const ElementSet& members) {
  if (!members.contains(ring.zero())) return false;
  for (Element a : members) {
    if (!ring.contains(a)) return false;
    if (!members.contains(ring.neg(a))) return false;
    for (Element b : members) {
      if (!members.contains(ring.add(a, b))) return false;
    }
    for (Element r : ring.elements()) {
      if (!members.contains(ring.mul(r, a))) return false;
    }
  }
  return true;
}

Ideal Ideal::from_members(const FiniteRing& ring, const ElementSet& members) {
  if (!is_ideal_set(ring, members)) {
    throw Error(ErrorCode::internal_invariant,
                "computed set is not an ideal of " + ring.recipe());
  }
  return Ideal(ring, members, canonical_generators(ring, members));
}

bool ideal_less(const Ideal& a, const Ideal& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

MultSet mult_closure(const FiniteRing& ring, std::span<const Element> generators) {
  ElementSet members{ring.one()};
  std::vector<Element> gens;
  for (Element g : generators) {
    require_element(ring, g);
    members.insert(g);
    if (std::ranges::find(gens, g) == gens.end()) gens.push_back(g);
  }
  // Multiplying by generators until nothing new appears reaches every product.
  std::vector<Element> frontier = members.to_vector();
  const std::vector<Element> factors = members.to_vector();
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier) {
      for (Element g : factors) {
        const Element y = ring.mul(x, g);
        if (!members.contains(y)) {
          members.insert(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return MultSet(ring, members, std::move(gens));
}

MultSet mult_closure(const FiniteRing& ring, std::initializer_list<Element> generators) {
  return mult_closure(ring, std::span<const Element>(generators.begin(), generators.size()));
}

bool is_proper_mult_set(const MultSet& s) {
  return !s.contains_zero() && !s.members().intersects(zero_divisors(s.ring()));
}

std::vector<MultSet> enumerate_mult_sets(const FiniteRing& ring) {
  std::set<ElementSet> seen;
  std::vector<MultSet> found;
  std::vector<MultSet> stack{mult_closure(ring, std::span<const Element>{})};
  seen.insert(stack.front().members());
  while (!stack.empty()) {
    MultSet current = stack.back();
    stack.pop_back();
    found.push_back(current);
    for (Element x : ring.elements()) {
      if (x == ring.zero() || current.contains(x)) continue;
      std::vector<Element> gens(current.generators().begin(), current.generators().end());
      gens.push_back(x);
      MultSet next = mult_closure(ring, gens);
      if (next.contains_zero() || !seen.insert(next.members()).second) continue;
      stack.push_back(std::move(next));
    }
  }
  std::ranges::sort(found, [](const MultSet& a, const MultSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return found;
}

MultSet image_mult_set(const MultSet& s, const FiniteRing& target, std::span<const Element> map) {
  std::vector<Element> gens;
  for (Element g : s.generators()) gens.push_back(map[g.index()]);
  MultSet image = mult_closure(target, gens);
  ElementSet expected;
  for (Element a : s.members()) expected.insert(map[a.index()]);
  if (image.members() != expected) {
    throw Error(ErrorCode::internal_invariant, "image of a multiplicative set is not closed");
  }
  return image;
}

Ideal generated_ideal(const FiniteRing& ring, std::span<const Element> generators) {
  std::vector<Element> gens;
  for (Element g : generators) {
    if (std::ranges::find(gens, g) == gens.end()) gens.push_back(g);
  }
  ElementSet members = generated_members(ring, gens);
  return Ideal(ring, members, std::move(gens));
}

Ideal generated_ideal(const FiniteRing& ring, std::initializer_list<Element> generators) {
  return generated_ideal(ring, std::span<const Element>(generators.begin(), generators.size()));
}

Ideal zero_ideal(const FiniteRing& ring) { return Ideal::from_members(ring, {ring.zero()}); }

Ideal unit_ideal(const FiniteRing& ring) { return Ideal::from_members(ring, ring.all()); }

std::vector<Ideal> enumerate_ideals(const FiniteRing& ring) {
  std::vector<ElementSet> principal;
  for (Element a : ring.elements()) {
    const Element gen[] = {a};
    principal.push_back(generated_members(ring, gen));
  }
  std::set<ElementSet> seen{ElementSet{ring.zero()}};
  std::vector<ElementSet> frontier{ElementSet{ring.zero()}};
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const ElementSet& current : frontier) {
      for (Element a : ring.elements()) {
        if (current.contains(a)) continue;
        ElementSet joined = additive_closure(ring, current | principal[a.index()]);
        if (seen.insert(joined).second) next.push_back(joined);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Ideal> out;
  out.reserve(seen.size());
  for (const ElementSet& members : seen) out.push_back(Ideal::from_members(ring, members));
  std::ranges::sort(out, ideal_less);
  return out;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  return Ideal::from_members(a.ring(), additive_closure(a.ring(), a.members() | b.members()));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const FiniteRing& r = a.ring();
  std::vector<Element> products;
  for (Element x : a.generators()) {
    for (Element y : b.generators()) products.push_back(r.mul(x, y));
  }
  return Ideal::from_members(r, generated_members(r, products));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  return Ideal::from_members(a.ring(), a.members() & b.members());
}

Ideal ideal_power(const Ideal& ideal, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::invalid_order, "ideal powers start at exponent 1");
  Ideal result = ideal;
  for (std::size_t i = 1; i < k; ++i) result = ideal_product(result, ideal);
  return result;
}

ElementSet scaled(const Ideal& ideal, Element s) {
  ElementSet out;
  for (Element a : ideal.members()) out.insert(ideal.ring().mul(s, a));
  return out;
}

Ideal colon(const Ideal& ideal, Element s) {
  const FiniteRing& r = ideal.ring();
  require_element(r, s);
  ElementSet members;
  for (Element a : r.elements()) {
    if (ideal.contains(r.mul(s, a))) members.insert(a);
  }
  return Ideal::from_members(r, members);
}

Ideal radical(const Ideal& ideal) {
  const FiniteRing& r = ideal.ring();
  ElementSet members;
  for (Element a : r.elements()) {
    Element power = a;
    for (std::size_t n = 1; n <= r.order(); ++n) {
      if (ideal.contains(power)) {
        members.insert(a);
        break;
      }
      power = r.mul(power, a);
    }
  }
  return Ideal::from_members(r, members);
}

Ideal s_radical(const Ideal& ideal, const MultSet& s) {
  const FiniteRing& r = ideal.ring();
  require_same_ring(r, s.ring());
  const auto multipliers = s.elements();
  ElementSet members;
  for (Element a : r.elements()) {
    Element power = a;
    bool hit = false;
    // The powers of a repeat within `order` steps.
    for (std::size_t n = 1; n <= r.order() && !hit; ++n) {
      for (Element m : multipliers) {
        if (ideal.contains(r.mul(m, power))) {
          hit = true;
          break;
        }
      }
      power = r.mul(power, a);
    }
    if (hit) members.insert(a);
  }
  if (!is_ideal_set(r, members)) {
    throw Error(ErrorCode::internal_invariant, "S-radical computation produced a non-ideal");
  }
  return Ideal::from_members(r, members);
}

std::vector<Ideal> maximal_ideals(const FiniteRing& ring) {
  const auto ideals = enumerate_ideals(ring);
  std::vector<Ideal> out;
  for (const Ideal& m : ideals) {
    if (m.is_whole()) continue;
    const bool maximal = std::ranges::none_of(ideals, [&](const Ideal& j) {
      return !j.is_whole() && j != m && m.subset_of(j);
    });
    if (maximal) out.push_back(m);
  }
  return out;
}

Ideal jacobson_radical(const FiniteRing& ring) {
  ElementSet members = ring.all();
  for (const Ideal& m : maximal_ideals(ring)) members &= m.members();
  return Ideal::from_members(ring, members);
}

QuotientResult quotient_ring(const FiniteRing& ring, const Ideal& ideal) {
  require_same_ring(ring, ideal.ring());
  if (ideal.is_whole()) {
    throw Error(ErrorCode::improper_quotient, "cannot form R/I with I = R");
  }
  const std::size_t n = ring.order();
  // Smallest representative of each coset.
  std::vector<std::size_t> rep(n, n);
  for (Element a : ring.elements()) {
    for (Element i : ideal.members()) {
      const std::size_t b = ring.add(a, i).index();
      rep[b] = std::min(rep[b], a.index());
    }
  }
  std::vector<std::size_t> reps;
  for (std::size_t a = 0; a < n; ++a) {
    if (rep[a] == a) reps.push_back(a);
  }
  // 0 + I is already first; move 1 + I to the second slot.
  const std::size_t one_rep = rep[ring.one().index()];
  std::erase(reps, one_rep);
  reps.insert(reps.begin() + 1, one_rep);
  std::vector<std::size_t> coset_index(n);
  for (std::size_t k = 0; k < reps.size(); ++k) coset_index[reps[k]] = k;

  const std::size_t q = reps.size();
  RingTables t;
  t.order = q;
  t.add.resize(q * q);
  t.mul.resize(q * q);
  std::vector<std::string> names(q);
  for (std::size_t x = 0; x < q; ++x) {
    names[x] = "[" + ring.name(Element{reps[x]}) + "]";
    for (std::size_t y = 0; y < q; ++y) {
      const Element a{reps[x]}, b{reps[y]};
      t.add[x * q + y] = Element{coset_index[rep[ring.add(a, b).index()]]};
      t.mul[x * q + y] = Element{coset_index[rep[ring.mul(a, b).index()]]};
    }
  }
  std::string gens;
  for (Element g : ideal.generators()) {
    gens += (gens.empty() ? "" : ",") + std::to_string(g.index());
  }
  if (gens.empty()) gens = "0";
  FiniteRing quotient = FiniteRing::from_tables(std::move(t), std::move(names),
                                                as_postfix_operand(ring.recipe()) + "/(" + gens + ")");
  std::vector<Element> projection(n);
  for (std::size_t a = 0; a < n; ++a) projection[a] = Element{coset_index[rep[a]]};
  return {std::move(quotient), std::move(projection)};
}

Ideal image_ideal(const Ideal& ideal, const FiniteRing& target, std::span<const Element> map) {
  std::vector<Element> images;
  for (Element a : ideal.members()) images.push_back(map[a.index()]);
  return Ideal::from_members(target, generated_members(target, images));
}

Ideal preimage_ideal(const FiniteRing& source, const Ideal& ideal, std::span<const Element> map) {
  ElementSet members;
  for (Element a : source.elements()) {
    if (ideal.contains(map[a.index()])) members.insert(a);
  }
  return Ideal::from_members(source, members);
}

MultSet apply_iso(const RingIso& f, const MultSet& s) {
  require_same_ring(f.source(), s.ring());
  return image_mult_set(s, f.target(), f.map());
}

Ideal apply_iso(const RingIso& f, const Ideal& ideal) {
  require_same_ring(f.source(), ideal.ring());
  ElementSet members;
  for (Element a : ideal.members()) members.insert(f(a));
  return Ideal::from_members(f.target(), members);
}

}  // namespace slab
