#include "slab/ring.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <tuple>

namespace slab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_order: return "invalid-order";
    case ErrorCode::size_cap: return "size-cap";
    case ErrorCode::ring_axiom: return "ring-axiom";
    case ErrorCode::improper_quotient: return "improper-quotient";
    case ErrorCode::module_action: return "module-action";
    case ErrorCode::not_an_isomorphism: return "not-an-isomorphism";
    case ErrorCode::ring_mismatch: return "ring-mismatch";
    case ErrorCode::disjointness: return "disjointness";
    case ErrorCode::zero_in_mult_set: return "zero-in-mult-set";
    case ErrorCode::improper_ideal: return "improper-ideal";
    case ErrorCode::invalid_element: return "invalid-element";
    case ErrorCode::theorem_violation: return "theorem-violation";
    case ErrorCode::internal_invariant: return "internal-invariant";
    case ErrorCode::syntax: return "syntax";
  }
  return "unknown";
}

namespace {

void require_cap(std::size_t order, std::size_t max_order) {
  if (max_order > kHardMaxOrder) {
    throw Error(ErrorCode::size_cap, "order cap " + std::to_string(max_order) +
                                         " exceeds the hard limit " +
                                         std::to_string(kHardMaxOrder));
  }
  if (order > max_order) {
    throw Error(ErrorCode::size_cap, "ring order " + std::to_string(order) +
                                         " exceeds the cap " + std::to_string(max_order));
  }
}

// Builds tables from an element list whose first two entries are zero and one.
template <typename T, typename Add, typename Mul>
RingTables tabulate(const std::vector<T>& elems, Add&& add, Mul&& mul) {
  std::map<T, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  RingTables t;
  t.order = elems.size();
  t.add.resize(t.order * t.order);
  t.mul.resize(t.order * t.order);
  for (std::size_t i = 0; i < t.order; ++i) {
    for (std::size_t j = 0; j < t.order; ++j) {
      t.add[i * t.order + j] = Element{index.at(add(elems[i], elems[j]))};
      t.mul[i * t.order + j] = Element{index.at(mul(elems[i], elems[j]))};
    }
  }
  return t;
}

// (0,0), (1,0)-or-(1,1), then the rest in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> pair_order(std::size_t left, std::size_t right,
                                                            std::pair<std::size_t, std::size_t> one) {
  std::vector<std::pair<std::size_t, std::size_t>> out{{0, 0}, one};
  for (std::size_t a = 0; a < left; ++a) {
    for (std::size_t b = 0; b < right; ++b) {
      std::pair p{a, b};
      if (p != out[0] && p != out[1]) out.push_back(p);
    }
  }
  return out;
}

}  // namespace

bool recipe_is_product(std::string_view recipe) {
  int depth = 0;
  for (char c : recipe) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == 'x' && depth == 0) return true;
  }
  return false;
}

std::string as_product_operand(const std::string& recipe) {
  return recipe_is_product(recipe) ? "(" + recipe + ")" : recipe;
}

std::string as_postfix_operand(const std::string& recipe) {
  return recipe_is_product(recipe) ? "(" + recipe + ")" : recipe;
}

std::optional<AxiomViolation> find_axiom_violation(const RingTables& t, bool allow_zero_ring) {
  const std::size_t n = t.order;
  if (n == 0 || (n == 1 && !allow_zero_ring)) {
    return AxiomViolation{"order >= 2 (one distinct from zero)", {}};
  }
  if (t.add.size() != n * n || t.mul.size() != n * n) {
    return AxiomViolation{"table dimensions", {}};
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (t.add[i].index() >= n || t.mul[i].index() >= n) {
      return AxiomViolation{"closure", {Element{i / n}, Element{i % n}}};
    }
  }
  auto add = [&](std::size_t a, std::size_t b) { return t.add[a * n + b].index(); };
  auto mul = [&](std::size_t a, std::size_t b) { return t.mul[a * n + b].index(); };
  const std::size_t one = n == 1 ? 0 : 1;
  for (std::size_t a = 0; a < n; ++a) {
    if (add(a, 0) != a) return AxiomViolation{"additive identity", {Element{a}}};
    if (mul(a, one) != a) return AxiomViolation{"multiplicative identity", {Element{a}}};
    bool has_negative = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) {
        return AxiomViolation{"additive commutativity", {Element{a}, Element{b}}};
      }
      if (mul(a, b) != mul(b, a)) {
        return AxiomViolation{"multiplicative commutativity", {Element{a}, Element{b}}};
      }
      has_negative = has_negative || add(a, b) == 0;
    }
    if (!has_negative) return AxiomViolation{"additive inverse", {Element{a}}};
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const std::vector<Element> abc{Element{a}, Element{b}, Element{c}};
        if (add(add(a, b), c) != add(a, add(b, c))) {
          return AxiomViolation{"additive associativity", abc};
        }
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          return AxiomViolation{"multiplicative associativity", abc};
        }
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
          return AxiomViolation{"distributivity", abc};
        }
      }
    }
  }
  return std::nullopt;
}

FiniteRing FiniteRing::build(RingTables tables, std::vector<std::string> names, std::string recipe) {
  const std::size_t n = tables.order;
  if (names.size() != n) {
    names.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (names[i].empty()) names[i] = "#" + std::to_string(i);
    }
  }
  auto data = std::make_shared<Data>();
  data->negation.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (tables.add[a * n + b].index() == 0) {
        data->negation[a] = Element{b};
        break;
      }
    }
  }
  data->tables = std::move(tables);
  data->names = std::move(names);
  data->recipe = std::move(recipe);
  return FiniteRing(std::move(data));
}

FiniteRing FiniteRing::from_tables(RingTables tables, std::vector<std::string> names,
                                   std::string recipe) {
  if (tables.order > kHardMaxOrder) {
    throw Error(ErrorCode::size_cap, "ring order exceeds the hard limit");
  }
  if (auto violation = find_axiom_violation(tables)) {
    std::string msg = "ring axiom violated: " + violation->axiom;
    if (!violation->elements.empty()) {
      msg += " at (";
      for (std::size_t i = 0; i < violation->elements.size(); ++i) {
        msg += (i ? ", " : "") + std::to_string(violation->elements[i].index());
      }
      msg += ")";
    }
    throw Error(ErrorCode::ring_axiom, msg);
  }
  return build(std::move(tables), std::move(names), std::move(recipe));
}

FiniteRing FiniteRing::from_tables_unchecked(RingTables tables, std::vector<std::string> names,
                                             std::string recipe) {
  return build(std::move(tables), std::move(names), std::move(recipe));
}

FiniteRing FiniteRing::zero_ring(std::string recipe) {
  RingTables t{1, {Element{0}}, {Element{0}}};
  return build(std::move(t), {"0"}, std::move(recipe));
}

Element FiniteRing::pow(Element a, std::size_t k) const {
  Element result = one();
  Element base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

Element FiniteRing::times(std::size_t k, Element a) const {
  Element result = zero();
  for (std::size_t i = 0; i < k; ++i) result = add(result, a);
  return result;
}

bool FiniteRing::same_as(const FiniteRing& other) const {
  if (data_ == other.data_) return true;
  return order() == other.order() && data_->tables.add == other.data_->tables.add &&
         data_->tables.mul == other.data_->tables.mul;
}

void require_element(const FiniteRing& ring, Element a) {
  if (!ring.contains(a)) {
    throw Error(ErrorCode::invalid_element, "element index " + std::to_string(a.index()) +
                                                " is outside a ring of order " +
                                                std::to_string(ring.order()));
  }
}

void require_same_ring(const FiniteRing& a, const FiniteRing& b) {
  if (!a.same_as(b)) {
    throw Error(ErrorCode::ring_mismatch,
                "arguments belong to different rings (" + a.recipe() + ", " + b.recipe() + ")");
  }
}

FiniteRing make_zn(std::size_t n, std::size_t max_order) {
  if (n < 2) throw Error(ErrorCode::invalid_order, "Z_n requires n >= 2, got " + std::to_string(n));
  require_cap(n, max_order);
  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = std::to_string(a) + " mod " + std::to_string(n);
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = Element{(a + b) % n};
      t.mul[a * n + b] = Element{(a * b) % n};
    }
  }
  return FiniteRing::from_tables(std::move(t), std::move(names), "Z" + std::to_string(n));
}

FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b, std::size_t max_order) {
  require_cap(a.order() * b.order(), max_order);
  const auto elems = pair_order(a.order(), b.order(), {1, 1});
  using P = std::pair<std::size_t, std::size_t>;
  auto add = [&](P x, P y) {
    return P{a.add(Element{x.first}, Element{y.first}).index(),
             b.add(Element{x.second}, Element{y.second}).index()};
  };
  auto mul = [&](P x, P y) {
    return P{a.mul(Element{x.first}, Element{y.first}).index(),
             b.mul(Element{x.second}, Element{y.second}).index()};
  };
  std::vector<std::string> names;
  names.reserve(elems.size());
  for (auto [x, y] : elems) {
    names.push_back("(" + a.name(Element{x}) + ", " + b.name(Element{y}) + ")");
  }
  return FiniteRing::from_tables(tabulate(elems, add, mul), std::move(names),
                                 a.recipe() + "x" + as_product_operand(b.recipe()));
}

FiniteRing idealization(const FiniteRing& ring, const ModuleSpec& module, std::size_t max_order) {
  using P = std::pair<std::size_t, std::size_t>;
  if (module.kind == ModuleSpec::Kind::regular) {
    require_cap(ring.order() * ring.order(), max_order);
    const auto elems = pair_order(ring.order(), ring.order(), {1, 0});
    auto add = [&](P x, P y) {
      return P{ring.add(Element{x.first}, Element{y.first}).index(),
               ring.add(Element{x.second}, Element{y.second}).index()};
    };
    auto mul = [&](P x, P y) {
      const Element r{x.first}, m{x.second}, r2{y.first}, m2{y.second};
      return P{ring.mul(r, r2).index(), ring.add(ring.mul(r, m2), ring.mul(r2, m)).index()};
    };
    std::vector<std::string> names;
    for (auto [r, m] : elems) {
      names.push_back("(" + ring.name(Element{r}) + "; " + ring.name(Element{m}) + ")");
    }
    return FiniteRing::from_tables(tabulate(elems, add, mul), std::move(names),
                                   as_postfix_operand(ring.recipe()) + "(+)self");
  }

  // Z_m is an R-module only through R = Z_n -> Z_m, which needs R additively
  // cyclic on one and m | n.
  const std::size_t n = ring.order();
  const std::size_t m = module.modulus;
  if (characteristic(ring) != n) {
    throw Error(ErrorCode::module_action,
                "Z_m modules are only supported over Z_n; " + ring.recipe() + " is not cyclic");
  }
  if (m < 2 || n % m != 0) {
    throw Error(ErrorCode::module_action,
                "Z" + std::to_string(m) + " is not a module over Z" + std::to_string(n) +
                    " (need m >= 2 dividing n)");
  }
  require_cap(n * m, max_order);
  // scalar[i] = k with element i = k * 1
  std::vector<std::size_t> scalar(n);
  {
    Element x = ring.zero();
    for (std::size_t k = 0; k < n; ++k) {
      scalar[x.index()] = k;
      x = ring.add(x, ring.one());
    }
  }
  const auto elems = pair_order(n, m, {1, 0});
  auto add = [&](P x, P y) {
    return P{ring.add(Element{x.first}, Element{y.first}).index(), (x.second + y.second) % m};
  };
  auto mul = [&](P x, P y) {
    return P{ring.mul(Element{x.first}, Element{y.first}).index(),
             (scalar[x.first] * y.second + scalar[y.first] * x.second) % m};
  };
  std::vector<std::string> names;
  for (auto [r, k] : elems) {
    names.push_back("(" + ring.name(Element{r}) + "; " + std::to_string(k) + " mod " +
                    std::to_string(m) + ")");
  }
  return FiniteRing::from_tables(tabulate(elems, add, mul), std::move(names),
                                 as_postfix_operand(ring.recipe()) + "(+)Z" + std::to_string(m));
}

std::size_t additive_order(const FiniteRing& ring, Element a) {
  Element x = a;
  std::size_t k = 1;
  while (x != ring.zero()) {
    x = ring.add(x, a);
    ++k;
  }
  return k;
}

std::size_t characteristic(const FiniteRing& ring) { return additive_order(ring, ring.one()); }

std::optional<Element> inverse(const FiniteRing& ring, Element a) {
  for (Element b : ring.elements()) {
    if (ring.mul(a, b) == ring.one()) return b;
  }
  return std::nullopt;
}

ElementSet units(const FiniteRing& ring) {
  ElementSet out;
  for (Element a : ring.elements()) {
    if (inverse(ring, a)) out.insert(a);
  }
  return out;
}

ElementSet zero_divisors(const FiniteRing& ring) {
  ElementSet out;
  for (Element a : ring.elements()) {
    if (a == ring.zero()) continue;
    for (Element b : ring.elements()) {
      if (b != ring.zero() && ring.mul(a, b) == ring.zero()) {
        out.insert(a);
        break;
      }
    }
  }
  return out;
}

ElementSet nilpotents(const FiniteRing& ring) {
  ElementSet out;
  for (Element a : ring.elements()) {
    if (ring.pow(a, ring.order()) == ring.zero()) out.insert(a);
  }
  return out;
}

bool is_boolean(const FiniteRing& ring) {
  return std::ranges::all_of(ring.elements(), [&](Element x) { return ring.mul(x, x) == x; });
}

bool is_ring_homomorphism(const FiniteRing& source, const FiniteRing& target,
                          std::span<const Element> map) {
  if (map.size() != source.order()) return false;
  for (Element x : map) {
    if (!target.contains(x)) return false;
  }
  if (map[source.one().index()] != target.one()) return false;
  for (Element a : source.elements()) {
    for (Element b : source.elements()) {
      if (map[source.add(a, b).index()] != target.add(map[a.index()], map[b.index()])) return false;
      if (map[source.mul(a, b).index()] != target.mul(map[a.index()], map[b.index()])) return false;
    }
  }
  return true;
}

RingIso RingIso::verified(FiniteRing source, FiniteRing target, std::vector<Element> map) {
  if (source.order() != target.order() || !is_ring_homomorphism(source, target, map)) {
    throw Error(ErrorCode::not_an_isomorphism, "map is not a ring isomorphism " + source.recipe() +
                                                   " -> " + target.recipe());
  }
  ElementSet image;
  for (Element x : map) image.insert(x);
  if (image.size() != target.order()) {
    throw Error(ErrorCode::not_an_isomorphism, "map is not bijective");
  }
  return RingIso(std::move(source), std::move(target), std::move(map));
}

RingIso RingIso::identity(const FiniteRing& ring) {
  std::vector<Element> map = ring.all().to_vector();
  return RingIso(ring, ring, std::move(map));
}

RingIso RingIso::inverse() const {
  std::vector<Element> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i].index()] = Element{i};
  return RingIso(target_, source_, std::move(inv));
}

namespace {

// Per-element invariants preserved by every isomorphism.
using Signature = std::tuple<std::size_t, bool, bool, bool, std::size_t>;

std::vector<Signature> signatures(const FiniteRing& r) {
  const ElementSet u = units(r);
  const ElementSet nil = nilpotents(r);
  std::vector<Signature> out;
  for (Element a : r.elements()) {
    std::size_t annihilator = 0;
    for (Element b : r.elements()) annihilator += r.mul(a, b) == r.zero() ? 1 : 0;
    out.emplace_back(additive_order(r, a), u.contains(a), nil.contains(a), r.mul(a, a) == a,
                     annihilator);
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteRing& a, const FiniteRing& b) : a_(a), b_(b) {
    sig_a_ = signatures(a);
    sig_b_ = signatures(b);
    // Additive generators, largest additive order first.
    ElementSet span{a.zero()};
    std::vector<Element> by_order = a.all().to_vector();
    std::ranges::stable_sort(by_order, [&](Element x, Element y) {
      return std::get<0>(sig_a_[x.index()]) > std::get<0>(sig_a_[y.index()]);
    });
    for (Element g : by_order) {
      if (span.contains(g)) continue;
      gens_.push_back(g);
      ElementSet next = span;
      for (Element x : span) {
        Element y = x;
        for (std::size_t k = 1; k < std::get<0>(sig_a_[g.index()]); ++k) {
          y = a.add(y, g);
          next.insert(y);
        }
      }
      span = next;
    }
  }

  std::optional<std::vector<Element>> run() {
    if (a_.order() != b_.order()) return std::nullopt;
    auto sa = sig_a_, sb = sig_b_;
    std::ranges::sort(sa);
    std::ranges::sort(sb);
    if (sa != sb) return std::nullopt;
    map_.assign(a_.order(), kUnset);
    used_ = ElementSet{};
    map_[0] = 0;
    used_.insert(b_.zero());
    domain_ = {a_.zero()};
    if (extend(0)) return result_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool extend(std::size_t gi) {
    if (gi == gens_.size()) {
      std::vector<Element> map;
      map.reserve(map_.size());
      for (auto x : map_) map.push_back(Element{x});
      if (!is_ring_homomorphism(a_, b_, map)) return false;
      result_ = std::move(map);
      return true;
    }
    const Element g = gens_[gi];
    for (Element h : b_.elements()) {
      if (sig_b_[h.index()] != sig_a_[g.index()]) continue;
      auto saved_map = map_;
      auto saved_used = used_;
      auto saved_domain = domain_;
      if (assign_coset(g, h) && extend(gi + 1)) return true;
      map_ = std::move(saved_map);
      used_ = saved_used;
      domain_ = saved_domain;
    }
    return false;
  }

  // Extends the additive map from the current subgroup to subgroup + <g>.
  bool assign_coset(Element g, Element h) {
    const std::size_t ord = std::get<0>(sig_a_[g.index()]);
    const auto base = domain_.to_vector();
    for (Element x : base) {
      Element y = x;
      Element fy{map_[x.index()]};
      for (std::size_t k = 1; k < ord; ++k) {
        y = a_.add(y, g);
        fy = b_.add(fy, h);
        if (map_[y.index()] != kUnset) {
          if (map_[y.index()] != fy.index()) return false;
          continue;
        }
        if (used_.contains(fy)) return false;
        map_[y.index()] = fy.index();
        used_.insert(fy);
        domain_.insert(y);
      }
    }
    return true;
  }

  const FiniteRing& a_;
  const FiniteRing& b_;
  std::vector<Signature> sig_a_, sig_b_;
  std::vector<Element> gens_;
  std::vector<std::size_t> map_;
  ElementSet used_;
  ElementSet domain_;
  std::vector<Element> result_;
};

}  // namespace

std::optional<RingIso> find_isomorphism(const FiniteRing& a, const FiniteRing& b) {
  IsoSearch search(a, b);
  if (auto map = search.run()) return RingIso::verified(a, b, std::move(*map));
  return std::nullopt;
}

RingIso relabeled_copy(const FiniteRing& ring, unsigned seed) {
  const std::size_t n = ring.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // Fisher-Yates on indices >= 2 with raw engine output, so the shuffle is the
  // same on every standard library.
  std::mt19937 rng(seed);
  for (std::size_t i = n; i > 3; --i) {
    const std::size_t j = 2 + static_cast<std::size_t>(rng()) % (i - 2);
    std::swap(perm[i - 1], perm[j]);
  }
  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  std::vector<std::string> names(n);
  for (Element a : ring.elements()) {
    names[perm[a.index()]] = ring.name(a);
    for (Element b : ring.elements()) {
      const std::size_t cell = perm[a.index()] * n + perm[b.index()];
      t.add[cell] = Element{perm[ring.add(a, b).index()]};
      t.mul[cell] = Element{perm[ring.mul(a, b).index()]};
    }
  }
  FiniteRing copy = FiniteRing::from_tables(std::move(t), std::move(names),
                                            ring.recipe() + " relabeled#" + std::to_string(seed));
  std::vector<Element> map;
  for (auto p : perm) map.push_back(Element{p});
  return RingIso::verified(ring, std::move(copy), std::move(map));
}

}  // namespace slab
