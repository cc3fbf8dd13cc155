#include "slab/localization.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "slab/classify.hpp"

namespace slab {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Keep the smaller index as root so roots are each class's minimum.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string generator_list(const MultSet& s) {
  std::string out;
  for (Element g : s.generators()) {
    if (!out.empty()) out += ",";
    out += std::to_string(g.index());
  }
  return out.empty() ? "1" : out;
}

TheoremClause clause(std::string name, std::string statement) {
  TheoremClause c;
  c.name = std::move(name);
  c.statement = std::move(statement);
  return c;
}

std::string fraction_name(const FiniteRing& r, Element a, Element s) {
  return "(" + r.name(a) + ")/(" + r.name(s) + ")";
}

}  // namespace

Element LocalizationResult::fraction(Element a, Element s) const {
  require_element(source, a);
  const auto den = mult_set.elements();
  const auto it = std::ranges::find(den, s);
  if (it == den.end()) {
    throw Error(ErrorCode::invalid_element, "denominator is not in the multiplicative set");
  }
  return class_table[a.index() * den.size() + static_cast<std::size_t>(it - den.begin())];
}

ElementSet s_torsion(const FiniteRing& r, const MultSet& s) {
  ElementSet out;
  for (Element a : r.elements()) {
    for (Element t : s.members()) {
      if (r.mul(t, a) == r.zero()) {
        out.insert(a);
        break;
      }
    }
  }
  return out;
}

LocalizationResult localize(const FiniteRing& r, const MultSet& s) {
  require_same_ring(r, s.ring());
  const auto den = s.elements();
  const std::size_t n = r.order();
  const std::size_t k = den.size();
  const std::size_t pairs = n * k;
  const auto pair_num = [&](std::size_t p) { return Element{p / k}; };
  const auto pair_den = [&](std::size_t p) { return den[p % k]; };

  std::vector<bool> vanishes(n);
  for (Element d : r.elements()) {
    vanishes[d.index()] = std::ranges::any_of(den, [&](Element u) { return r.mul(u, d) == r.zero(); });
  }
  // Pair index p = a * k + j is increasing in (a, s_j), so union-find roots are
  // each class's smallest (numerator, denominator) pair.
  DisjointSets sets(pairs);
  for (std::size_t p = 0; p < pairs; ++p) {
    for (std::size_t q = p + 1; q < pairs; ++q) {
      const Element cross = r.sub(r.mul(pair_num(p), pair_den(q)), r.mul(pair_num(q), pair_den(p)));
      if (vanishes[cross.index()]) sets.unite(p, q);
    }
  }

  std::vector<std::size_t> roots;
  for (std::size_t p = 0; p < pairs; ++p) {
    if (sets.find(p) == p) roots.push_back(p);
  }
  std::vector<std::size_t> class_of_root(pairs);
  for (std::size_t c = 0; c < roots.size(); ++c) class_of_root[roots[c]] = c;
  std::vector<Element> class_table(pairs);
  for (std::size_t p = 0; p < pairs; ++p) class_table[p] = Element{class_of_root[sets.find(p)]};

  const std::size_t m = roots.size();
  const std::size_t one_slot = static_cast<std::size_t>(std::ranges::find(den, r.one()) - den.begin());
  const auto class_of = [&](Element a, std::size_t j) { return class_table[a.index() * k + j]; };
  const auto den_slot = [&](Element t) {
    return static_cast<std::size_t>(std::ranges::find(den, t) - den.begin());
  };

  const std::string recipe = as_postfix_operand(r.recipe()) + "[S^-1, S=<" + generator_list(s) + ">]";
  const bool degenerate = s.contains_zero();
  FiniteRing local = [&] {
    if (m == 1) return FiniteRing::zero_ring(recipe);
    RingTables t{m, std::vector<Element>(m * m), std::vector<Element>(m * m)};
    std::vector<std::string> names(m);
    for (std::size_t x = 0; x < m; ++x) {
      const Element a = pair_num(roots[x]);
      const Element sa = pair_den(roots[x]);
      names[x] = fraction_name(r, a, sa);
      for (std::size_t y = 0; y < m; ++y) {
        const Element b = pair_num(roots[y]);
        const Element sb = pair_den(roots[y]);
        const std::size_t slot = den_slot(r.mul(sa, sb));
        t.add[x * m + y] = class_of(r.add(r.mul(a, sb), r.mul(b, sa)), slot);
        t.mul[x * m + y] = class_of(r.mul(a, b), slot);
      }
    }
    return FiniteRing::from_tables(std::move(t), std::move(names), recipe);
  }();

  std::vector<Element> phi(n);
  ElementSet kernel_members;
  for (Element a : r.elements()) {
    phi[a.index()] = class_of(a, one_slot);
    if (phi[a.index()] == local.zero()) kernel_members.insert(a);
  }
  MultSet phi_s = image_mult_set(s, local, phi);
  Ideal kernel = Ideal::from_members(r, kernel_members);
  return LocalizationResult{r,      s,      std::move(local),       std::move(phi), std::move(phi_s),
                            kernel, std::move(class_table), degenerate};
}

Ideal extend_ideal(const LocalizationResult& loc, const Ideal& ideal) {
  require_same_ring(loc.source, ideal.ring());
  std::vector<Element> images;
  for (Element a : ideal.members()) {
    const Element x = loc.phi[a.index()];
    if (std::ranges::find(images, x) == images.end()) images.push_back(x);
  }
  return Ideal::from_members(loc.local_ring, generated_ideal(loc.local_ring, images).members());
}

bool LocalizationTheorems::all_hold() const {
  return std::ranges::all_of(clauses, [](const TheoremClause& c) { return c.holds; });
}

LocalizationTheorems check_localization_theorems(const FiniteRing& r, const MultSet& s) {
  LocalizationTheorems out{localize(r, s), {}};
  const auto& loc = out.localization;
  TheoremClause a = clause("a", "S-integral domain iff the localization is an integral domain");
  TheoremClause b = clause("b", "S-field implies the localization is a phi(S)-field");
  TheoremClause c = clause("c", "for proper S, a phi(S)-field localization implies S-field");
  TheoremClause d = clause("d", "S-integral domain implies S-field");
  if (s.contains_zero()) {
    for (TheoremClause* clause : {&a, &b, &c, &d}) {
      clause->applicable = false;
      clause->detail = std::string(flag::degenerate_zero_in_s);
    }
    out.clauses = {a, b, c, d};
    return out;
  }

  const bool s_domain = is_s_integral_domain(r, s).verdict;
  const bool s_field = is_s_field(r, s).verdict;
  const bool local_domain = is_integral_domain(loc.local_ring);
  const bool local_field = is_s_field(loc.local_ring, loc.phi_s).verdict;
  const auto describe = [&](std::string_view lhs, bool l, std::string_view rhs, bool rr) {
    return std::string(lhs) + "=" + (l ? "true" : "false") + ", " + std::string(rhs) + "=" +
           (rr ? "true" : "false") + " on " + r.recipe() + " with S=<" + generator_list(s) + ">";
  };

  a.lhs = s_domain;
  a.rhs = local_domain;
  a.holds = s_domain == local_domain;

  b.lhs = s_field;
  b.rhs = local_field;
  b.holds = !s_field || local_field;

  c.applicable = is_proper_mult_set(s);
  c.lhs = local_field;
  c.rhs = s_field;
  c.holds = !c.applicable || !local_field || s_field;
  if (!c.applicable) c.detail = "S contains a zero divisor";

  d.lhs = s_domain;
  d.rhs = s_field;
  d.holds = !s_domain || s_field;

  if (!a.holds) a.detail = describe("s_domain", s_domain, "local_domain", local_domain);
  if (!b.holds) b.detail = describe("s_field", s_field, "local_field", local_field);
  if (!c.holds) c.detail = describe("local_field", local_field, "s_field", s_field);
  if (!d.holds) d.detail = describe("s_domain", s_domain, "s_field", s_field);
  out.clauses = {a, b, c, d};
  return out;
}

}  // namespace slab
