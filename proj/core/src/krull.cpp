#include "slab/krull.hpp"

#include <algorithm>

namespace slab {

namespace {

bool annihilates(const FiniteRing& r, Element x, const Ideal& b) {
  return std::ranges::all_of(b.members(), [&](Element y) { return r.mul(x, y) == r.zero(); });
}

// Lexicographic k-subsets of {0, ..., n-1}; stops when `visit` returns true.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

PowerChain power_intersection(const FiniteRing& r, const Ideal& ideal) {
  require_same_ring(r, ideal.ring());
  if (ideal.is_whole()) {
    throw Error(ErrorCode::improper_ideal, "power intersection needs a proper ideal");
  }
  std::vector<Ideal> powers{ideal};
  while (true) {
    Ideal next = ideal_product(powers.back(), ideal);
    const bool stable = next == powers.back();
    powers.push_back(std::move(next));
    if (stable) break;
    if (powers.size() > r.order() + 1) {
      throw Error(ErrorCode::internal_invariant, "ideal powers failed to stabilize");
    }
  }
  const std::size_t k = powers.size() - 1;
  Ideal stable = powers.back();
  return PowerChain{ideal, std::move(powers), k, std::move(stable)};
}

Witness pmsb_witness(const FiniteRing& r, const Ideal& ideal, const MultSet& s) {
  require_same_ring(r, ideal.ring());
  require_disjoint(ideal, s);
  const Ideal rad = radical(ideal);
  const auto candidates = s.elements();
  Ideal power = rad;
  for (std::size_t m = 1; m <= r.order(); ++m) {
    for (Element t : candidates) {
      if (scaled(power, t).subset_of(ideal.members())) {
        Witness w{true, WitnessKind::uniform_s, t, m, {}, rad, {}};
        return w;
      }
    }
    power = ideal_product(power, rad);
  }
  throw Error(ErrorCode::theorem_violation, "no s and m with s rad(I)^m inside I");
}

AnnihilatorResult krull_annihilator(const FiniteRing& r, const Ideal& ideal, const MultSet& s) {
  require_same_ring(r, ideal.ring());
  require_disjoint(ideal, s);
  PowerChain chain = power_intersection(r, ideal);
  const auto candidates = s.elements();
  std::optional<std::pair<Element, Element>> found;
  for (Element a : ideal.members()) {
    for (Element t : candidates) {
      if (annihilates(r, r.add(t, a), chain.intersection)) {
        found.emplace(t, a);
        break;
      }
    }
    if (found) break;
  }
  if (!found) {
    throw Error(ErrorCode::theorem_violation, "no t in S and a in I with (t + a) B = 0");
  }
  std::optional<Element> alone;
  for (Element t : candidates) {
    if (annihilates(r, t, chain.intersection)) {
      alone = t;
      break;
    }
  }
  return AnnihilatorResult{std::move(chain), found->first, found->second, alone};
}

Witness is_s_primary(const FiniteRing& r, const Ideal& q, const MultSet& s) {
  require_same_ring(r, q.ring());
  require_disjoint(q, s);
  const auto candidates = s.elements();
  const std::size_t n = r.order();
  // power_hit[j * n + b]: s_j b^m lies in Q for some 1 <= m <= |R|.
  std::vector<bool> power_hit(candidates.size() * n);
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    for (Element b : r.elements()) {
      Element p = b;
      for (std::size_t m = 1; m <= n; ++m) {
        if (q.contains(r.mul(candidates[j], p))) {
          power_hit[j * n + b.index()] = true;
          break;
        }
        p = r.mul(p, b);
      }
    }
  }
  const auto serves = [&](std::size_t j, Element a, Element b) {
    return !q.contains(r.mul(a, b)) || q.contains(r.mul(candidates[j], a)) ||
           power_hit[j * n + b.index()];
  };
  const auto ordered = [&](auto&& visit) {
    return for_each_pair_colex(n, [&](Element a, Element b) {
      return visit(a, b) || (a != b && visit(b, a));
    });
  };
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    if (!ordered([&](Element a, Element b) { return !serves(j, a, b); })) {
      return Witness{true, WitnessKind::uniform_s, candidates[j], {}, {}, {}, {}};
    }
  }
  Witness w{false, WitnessKind::pair_counterexample, {}, {}, {}, {}, {}};
  ordered([&](Element a, Element b) {
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      if (serves(j, a, b)) return false;
    }
    w.elements = {a, b};
    return true;
  });
  if (w.elements.empty()) {
    throw Error(ErrorCode::internal_invariant, "no uniform s and no counterexample pair");
  }
  return w;
}

std::vector<Ideal> s_primary_decomposition(const FiniteRing& r, const Ideal& ideal,
                                           const MultSet& s) {
  require_same_ring(r, ideal.ring());
  require_disjoint(ideal, s);
  std::vector<Ideal> primary;
  for (Ideal& j : enumerate_ideals(r)) {
    if (!j.meets(s) && is_s_primary(r, j, s).verdict) primary.push_back(std::move(j));
  }
  return s_primary_decomposition(ideal, primary);
}

std::vector<Ideal> s_primary_decomposition(const Ideal& ideal, const std::vector<Ideal>& s_primary) {
  std::vector<const Ideal*> candidates;
  for (const Ideal& j : s_primary) {
    if (ideal.subset_of(j)) candidates.push_back(&j);
  }
  std::vector<Ideal> chosen;
  for (std::size_t k = 1; k <= candidates.size() && chosen.empty(); ++k) {
    for_each_subset(candidates.size(), k, [&](const std::vector<std::size_t>& idx) {
      ElementSet meet = ideal.ring().all();
      for (std::size_t i : idx) meet &= candidates[i]->members();
      if (meet != ideal.members()) return false;
      for (std::size_t i : idx) chosen.push_back(*candidates[i]);
      return true;
    });
  }
  if (chosen.empty()) {
    throw Error(ErrorCode::theorem_violation, "no S-primary decomposition found");
  }
  return chosen;
}

std::string_view to_string(ChainReading reading) {
  return reading == ChainReading::literal ? "literal" : "corrected";
}

ChainReading parse_chain_reading(std::string_view text) {
  if (text == "literal") return ChainReading::literal;
  if (text == "corrected") return ChainReading::corrected;
  throw Error(ErrorCode::syntax, "chain reading must be literal or corrected");
}

bool is_s_strict_step(const Ideal& p, const Ideal& q, const MultSet& s, ChainReading reading) {
  if (!q.subset_of(p) || p == q) return false;
  const Ideal& scaled_side = reading == ChainReading::corrected ? p : q;
  const Ideal& target = reading == ChainReading::corrected ? q : p;
  for (Element t : s.members()) {
    if (scaled(scaled_side, t).subset_of(target.members())) return false;
  }
  return true;
}

SDimension s_dimension(const FiniteRing& r, const MultSet& s, ChainReading reading) {
  require_same_ring(r, s.ring());
  if (s.contains_zero()) {
    throw Error(ErrorCode::zero_in_mult_set, "S-dimension requires 0 not in S");
  }
  std::vector<Ideal> primes;
  for (Ideal& p : enumerate_ideals(r)) {
    if (!p.meets(s) && is_s_prime(r, p, s).verdict) primes.push_back(std::move(p));
  }
  // Ideal order is by size, so every strict step goes from a later to an
  // earlier index; fill longest chains from the bottom up.
  const std::size_t n = primes.size();
  std::vector<std::size_t> depth(n, 0);
  std::vector<std::optional<std::size_t>> next(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (is_s_strict_step(primes[i], primes[j], s, reading) && depth[j] + 1 > depth[i]) {
        depth[i] = depth[j] + 1;
        next[i] = j;
      }
    }
  }
  SDimension out;
  out.s_primes = primes;
  std::optional<std::size_t> top;
  for (std::size_t i = 0; i < n; ++i) {
    if (!top || depth[i] > depth[*top]) top = i;
  }
  if (top) {
    out.dimension = depth[*top];
    for (std::optional<std::size_t> at = top; at; at = next[*at]) {
      out.longest.primes.push_back(primes[*at]);
    }
    out.longest.length = out.dimension;
  }
  return out;
}

ProductDecomposition check_product_decomposition(const FiniteRing& r, const MultSet& s,
                                                 const Ideal& ideal, ChainReading reading) {
  require_same_ring(r, s.ring());
  require_same_ring(r, ideal.ring());
  ProductDecomposition out;
  const auto skip = [&](std::string reason) {
    out.skipped = true;
    out.reason = std::move(reason);
    return out;
  };
  if (s.contains_zero()) return skip(std::string(flag::degenerate_zero_in_s));
  if (ideal.meets(s)) return skip("the ideal meets S");
  if (!is_s_integral_domain(r, s).verdict) return skip("not an S-integral domain");
  if (s_dimension(r, s, reading).dimension > 1) return skip("S-dimension exceeds 1");

  out.localization = localize(r, s);
  const FiniteRing& local = out.localization->local_ring;
  out.extended = extend_ideal(*out.localization, ideal);
  const Ideal& target = *out.extended;
  if (target.is_whole()) return skip("the extended ideal is the whole ring");

  const MultSet trivial = mult_closure(local, {local.one()});
  for (const Ideal& q : s_primary_decomposition(local, target, trivial)) {
    const Ideal rad = radical(q);
    auto it = std::ranges::find(out.radicals, rad);
    if (it == out.radicals.end()) {
      out.radicals.push_back(rad);
      out.components.push_back(q);
    } else {
      auto& slot = out.components[static_cast<std::size_t>(it - out.radicals.begin())];
      slot = ideal_intersect(slot, q);
    }
  }

  out.radicals_comaximal = true;
  for (std::size_t i = 0; i < out.radicals.size(); ++i) {
    for (std::size_t j = i + 1; j < out.radicals.size(); ++j) {
      if (!ideal_sum(out.radicals[i], out.radicals[j]).is_whole()) out.radicals_comaximal = false;
    }
  }
  Ideal product = out.components.front();
  Ideal meet = out.components.front();
  for (std::size_t i = 1; i < out.components.size(); ++i) {
    product = ideal_product(product, out.components[i]);
    meet = ideal_intersect(meet, out.components[i]);
  }
  out.product_is_intersection = product == meet;
  out.intersection_is_extension = meet == target;
  return out;
}

std::vector<JacobsonEntry> jacobson_corollary_check(const FiniteRing& r, const MultSet& s) {
  require_same_ring(r, s.ring());
  if (s.contains_zero()) {
    throw Error(ErrorCode::zero_in_mult_set, "the corollary check requires 0 not in S");
  }
  const Ideal jac = jacobson_radical(r);
  std::vector<std::pair<std::string, Ideal>> targets;
  for (Ideal& i : enumerate_ideals(r)) {
    if (i.subset_of(jac) && !i.meets(s)) targets.emplace_back("inside J(R)", std::move(i));
  }
  Ideal js = s_jacobson_radical(r, s);
  if (!js.meets(s) && !js.is_whole()) targets.emplace_back("S-Jacobson radical", std::move(js));

  std::vector<JacobsonEntry> out;
  for (auto& [label, ideal] : targets) {
    const PowerChain chain = power_intersection(r, ideal);
    JacobsonEntry e{label, ideal, chain.intersection, false, {}, {}};
    for (Element a : ideal.members()) {
      for (Element t : s.members()) {
        if (annihilates(r, r.add(t, a), chain.intersection)) {
          e.found = true;
          e.s = t;
          e.a = a;
          break;
        }
      }
      if (e.found) break;
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace slab
