#include "slab/survey.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <optional>
#include <set>
#include <thread>

#include "slab/classify.hpp"
#include "slab/localization.hpp"

namespace slab {

namespace {

enum Inv : std::size_t {
  kDomainZeroPrime,
  kDomainCancellation,
  kPrimeQuotientDomain,
  kMaximalQuotientField,
  kFieldNoProper,
  kFieldDomain,
  kMonotone,
  kBooleanPrimeMaximal,
  kDomainReduced,
  kDomainIdempotents,
  kPrimeQuotientField,
  kIsoTransport,
  kWitnessRecheck,
  kLocalOracle,
  kLocalUnits,
  kLocalInjective,
  kLocalDomain,
  kLocalFieldTransfer,
  kDomainField,
  kPowerDescent,
  kPmsb,
  kAnnihilator,
  kDecomposition,
  kPrimaryRadical,
  kJacobson,
  kProductDecomposition,
  kEvaluationError,
  kInvariantCount,
};

const std::vector<InvariantInfo> kInvariants = {
    {"s-domain<=>zero-s-prime", "s-classify", "S-integral domain iff (0) is S-prime"},
    {"s-domain<=>cancellation", "s-classify", "S-integral domain iff S-cancellation"},
    {"s-prime<=>quotient-s-domain", "s-classify", "P S-prime iff R/P is an image-of-S integral domain"},
    {"s-maximal<=>quotient-s-field", "s-classify", "M S-maximal iff R/M is an image-of-S field"},
    {"s-field<=>no-s-proper", "s-classify", "S-field iff no ideal is S-proper"},
    {"s-field=>s-domain", "s-classify", "every S-field is an S-integral domain"},
    {"monotone-s-domain", "s-classify", "S1 inside S2: S1-integral domain implies S2-integral domain"},
    {"boolean:s-prime=>s-maximal", "s-classify", "in a boolean ring S-prime implies S-maximal"},
    {"s-domain=>s-reduced", "s-classify",
     "S-integral domain implies S-reduced and no S-non-zero S-nilpotent element"},
    {"s-domain=>idempotents-in-s", "s-classify",
     "S-integral domain with S free of zero divisors: nonzero S-idempotents lie in S"},
    {"s-prime=>quotient-s-field", "s-classify", "P S-prime implies R/P is an image-of-S field"},
    {"iso-transport", "s-classify", "every verdict is invariant under a ring isomorphism"},
    {"witness-recheck", "s-classify", "every witness re-validates against its definition"},
    {"localization-oracle", "localization", "fraction ring isomorphic to R/{a : sa = 0, s in S}"},
    {"localization-units", "localization", "phi(s) is a unit for every s in S"},
    {"proper-s=>injective", "localization", "proper S: phi injective and phi(S) proper"},
    {"s-domain<=>local-domain", "localization", "S-integral domain iff the localization is a domain"},
    {"s-field-transfer", "localization",
     "S-field iff the localization is a phi(S)-field (converse for proper S)"},
    {"s-domain=>s-field", "localization", "a finite S-integral domain is an S-field"},
    {"power-chain-descent", "krull", "ideal powers descend and stabilize within |R| steps"},
    {"pmsb-existence", "krull", "some s and m give s rad(I)^m inside I"},
    {"annihilator-existence", "krull", "some t in S and a in I give (t + a) B = 0"},
    {"decomposition-exactness", "krull",
     "S-primary components intersect to I and none is redundant"},
    {"primary-radical-s-prime", "krull", "the radical of an S-primary ideal is S-prime"},
    {"jacobson-corollary", "krull", "(s + a) B(I) = 0 is solvable for I inside J(R) or J_S(R)"},
    {"product-decomposition", "krull",
     "in an S-integral domain of S-dimension at most 1, S^-1 I is the product of its merged primary parts"},
    {"evaluation-error", "survey", "no evaluation raises an error"},
};

std::string normalize(std::string name) {
  const auto replace = [&](std::string_view from, std::string_view to) {
    for (std::size_t at = name.find(from); at != std::string::npos; at = name.find(from)) {
      name.replace(at, from.size(), to);
    }
  };
  replace("\xE2\x9F\xBA", "<=>");  // U+27FA
  replace("\xE2\x87\x94", "<=>");  // U+21D4
  replace("\xE2\x87\x92", "=>");   // U+21D2
  replace(" ", "");
  return name;
}

struct Aliases {
  std::string_view alias;
  std::string_view id;
};

constexpr Aliases kAliases[] = {
    {"boolean-s-prime=>s-maximal", "boolean:s-prime=>s-maximal"},
    {"finite-s-equivalence", "s-domain<=>local-domain"},
    {"corollary", "s-domain=>s-field"},
};

std::string generators_text(const MultSet& s) {
  std::string gens;
  for (Element g : s.generators()) {
    if (!gens.empty()) gens += ",";
    gens += std::to_string(g.index());
  }
  return "{" + (gens.empty() ? std::string("1") : gens) + "}";
}

std::string ideal_text(const Ideal& ideal) {
  std::string gens;
  for (Element g : ideal.generators()) {
    if (!gens.empty()) gens += ",";
    gens += std::to_string(g.index());
  }
  return "(" + (gens.empty() ? std::string("0") : gens) + ")";
}

template <typename Task>
void parallel_for(std::size_t count, std::size_t jobs, Task&& task) {
  if (jobs == 0) jobs = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(1, count));
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) task(i);
  };
  if (jobs == 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(jobs);
  for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
}

struct RingContext {
  FiniteRing ring;
  std::vector<MultSet> sets;
  std::vector<Ideal> ideals;
  std::vector<std::optional<QuotientResult>> quotients;
  std::vector<bool> s_domain;
  std::optional<RingIso> relabel;
  ElementSet zero_divisors;
  bool boolean = false;
  std::string error;
};

RingContext build_context(const FiniteRing& ring) {
  RingContext ctx{ring, {}, {}, {}, {}, {}, {}, false, {}};
  try {
    ctx.sets = enumerate_mult_sets(ring);
    ctx.ideals = enumerate_ideals(ring);
    for (const Ideal& i : ctx.ideals) {
      if (i.is_whole()) {
        ctx.quotients.emplace_back();
      } else {
        ctx.quotients.emplace_back(quotient_ring(ring, i));
      }
    }
    for (const MultSet& s : ctx.sets) ctx.s_domain.push_back(is_s_integral_domain(ring, s).verdict);
    ctx.relabel = relabeled_copy(ring, 0x5eed);
    ctx.zero_divisors = zero_divisors(ring);
    ctx.boolean = is_boolean(ring);
  } catch (const std::exception& e) {
    ctx.error = e.what();
  }
  return ctx;
}

struct PairTally {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> details;
};

class PairEvaluator {
 public:
  PairEvaluator(const RingContext& ctx, std::size_t set_index, const std::vector<bool>& enabled,
                std::size_t max_examples, ChainReading reading)
      : ctx_(ctx),
        r_(ctx.ring),
        s_(ctx.sets[set_index]),
        set_index_(set_index),
        enabled_(enabled),
        max_examples_(max_examples),
        reading_(reading),
        tallies_(kInvariantCount) {}

  std::vector<PairTally> run() {
    try {
      classify_checks();
      localization_checks();
      krull_checks();
    } catch (const std::exception& e) {
      record(kEvaluationError, false, [&] { return std::string(e.what()); });
    }
    if (tallies_[kEvaluationError].checked == 0) tallies_[kEvaluationError].checked = 1;
    return std::move(tallies_);
  }

 private:
  bool on(Inv id) const { return enabled_[id]; }

  template <typename Detail>
  void record(Inv id, bool ok, Detail&& detail) {
    PairTally& t = tallies_[id];
    ++t.checked;
    if (!ok) {
      ++t.failures;
      if (t.details.size() < max_examples_) t.details.push_back(detail());
    }
  }

  void recheck(bool ok, std::string_view what) {
    if (on(kWitnessRecheck)) record(kWitnessRecheck, ok, [&] { return std::string(what); });
  }

  bool classify_needed() const {
    for (std::size_t id = kDomainZeroPrime; id <= kWitnessRecheck; ++id) {
      if (enabled_[id]) return true;
    }
    return on(kLocalDomain) || on(kLocalFieldTransfer) || on(kDomainField);
  }

  void classify_checks() {
    if (!classify_needed()) return;
    const Witness dom = is_s_integral_domain(r_, s_);
    const Witness canc = has_s_cancellation(r_, s_);
    const Witness field = is_s_field(r_, s_);
    const Witness red = is_s_reduced(r_, s_);
    const Witness zero_prime = is_s_prime(r_, zero_ideal(r_), s_);
    domain_ = dom.verdict;
    field_ = field.verdict;
    recheck(recheck_s_integral_domain(r_, s_, dom), "s-domain witness");
    recheck(recheck_s_cancellation(r_, s_, canc), "cancellation witness");
    recheck(recheck_s_field(r_, s_, field), "s-field witness");
    recheck(recheck_s_reduced(r_, s_, red), "s-reduced witness");
    recheck(recheck_s_prime(r_, zero_ideal(r_), s_, zero_prime), "s-prime (0) witness");

    if (on(kDomainZeroPrime)) {
      record(kDomainZeroPrime, dom.verdict == zero_prime.verdict, [&] {
        return "s-domain=" + std::to_string(dom.verdict) + " (0) s-prime=" +
               std::to_string(zero_prime.verdict);
      });
    }
    if (on(kDomainCancellation)) {
      record(kDomainCancellation, dom.verdict == canc.verdict, [&] {
        return "s-domain=" + std::to_string(dom.verdict) +
               " cancellation=" + std::to_string(canc.verdict);
      });
    }

    bool any_proper = false;
    std::vector<bool> prime(ctx_.ideals.size()), maximal(ctx_.ideals.size()),
        proper(ctx_.ideals.size());
    for (std::size_t i = 0; i < ctx_.ideals.size(); ++i) {
      const Ideal& p = ctx_.ideals[i];
      if (p.meets(s_)) continue;
      const Witness wp = is_s_prime(r_, p, s_);
      const Witness wm = is_s_maximal(r_, p, s_);
      const Witness wq = is_s_proper(r_, p, s_);
      prime[i] = wp.verdict;
      maximal[i] = wm.verdict;
      proper[i] = wq.verdict;
      any_proper = any_proper || wq.verdict;
      recheck(recheck_s_prime(r_, p, s_, wp), "s-prime witness for " + ideal_text(p));
      recheck(recheck_s_maximal(r_, p, s_, wm), "s-maximal witness for " + ideal_text(p));
      recheck(recheck_s_proper(r_, p, s_, wq), "s-proper witness for " + ideal_text(p));

      const QuotientResult& q = *ctx_.quotients[i];
      const MultSet bar = image_mult_set(s_, q.ring, q.projection);
      if (on(kPrimeQuotientDomain) || on(kPrimeQuotientField) || on(kMaximalQuotientField)) {
        const bool q_domain = is_s_integral_domain(q.ring, bar).verdict;
        const bool q_field = is_s_field(q.ring, bar).verdict;
        if (on(kPrimeQuotientDomain)) {
          record(kPrimeQuotientDomain, wp.verdict == q_domain, [&] {
            return "P=" + ideal_text(p) + " s-prime=" + std::to_string(wp.verdict) +
                   " quotient s-domain=" + std::to_string(q_domain);
          });
        }
        if (on(kMaximalQuotientField)) {
          record(kMaximalQuotientField, wm.verdict == q_field, [&] {
            return "M=" + ideal_text(p) + " s-maximal=" + std::to_string(wm.verdict) +
                   " quotient s-field=" + std::to_string(q_field);
          });
        }
        if (on(kPrimeQuotientField) && wp.verdict) {
          record(kPrimeQuotientField, q_field,
                 [&] { return "P=" + ideal_text(p) + " quotient is not an s-field"; });
        }
      }
      if (on(kBooleanPrimeMaximal) && ctx_.boolean && wp.verdict) {
        record(kBooleanPrimeMaximal, wm.verdict,
               [&] { return "P=" + ideal_text(p) + " s-prime but not s-maximal"; });
      }
    }
    if (on(kFieldNoProper)) {
      record(kFieldNoProper, field.verdict == !any_proper, [&] {
        return "s-field=" + std::to_string(field.verdict) +
               " some s-proper ideal=" + std::to_string(any_proper);
      });
    }
    if (on(kFieldDomain) && field.verdict) {
      record(kFieldDomain, dom.verdict, [] { return std::string("s-field but not s-domain"); });
    }
    if (on(kMonotone) && dom.verdict) {
      for (std::size_t j = 0; j < ctx_.sets.size(); ++j) {
        if (j == set_index_ || !s_.members().subset_of(ctx_.sets[j].members())) continue;
        record(kMonotone, ctx_.s_domain[j],
               [&] { return "larger set " + generators_text(ctx_.sets[j]) + " fails"; });
      }
    }

    std::vector<Witness> idem, nil, zero, nonzero;
    for (Element a : r_.elements()) {
      idem.push_back(is_s_idempotent(r_, a, s_));
      nil.push_back(is_s_nilpotent(r_, a, s_));
      zero.push_back(is_s_zero(r_, a, s_));
      nonzero.push_back(is_s_non_zero(r_, a, s_));
      const std::string at = " at " + std::to_string(a.index());
      recheck(recheck_s_idempotent(r_, a, s_, idem.back()), "s-idempotent witness" + at);
      recheck(recheck_s_nilpotent(r_, a, s_, nil.back()), "s-nilpotent witness" + at);
      recheck(recheck_s_zero(r_, a, s_, zero.back()), "s-zero witness" + at);
      recheck(recheck_s_non_zero(r_, a, s_, nonzero.back()), "s-non-zero witness" + at);
    }
    if (on(kDomainReduced) && dom.verdict) {
      record(kDomainReduced, red.verdict, [] { return std::string("s-domain but not s-reduced"); });
      for (Element a : r_.elements()) {
        const bool both = nonzero[a.index()].verdict && nil[a.index()].verdict;
        record(kDomainReduced, !both, [&] {
          return "element " + std::to_string(a.index()) + " is s-non-zero and s-nilpotent";
        });
      }
    }
    if (on(kDomainIdempotents) && dom.verdict && !s_.members().intersects(ctx_.zero_divisors)) {
      for (Element a : r_.elements()) {
        if (a == r_.zero() || !idem[a.index()].verdict) continue;
        record(kDomainIdempotents, s_.contains(a), [&] {
          return "s-idempotent " + std::to_string(a.index()) + " outside S";
        });
      }
    }

    if (on(kIsoTransport) && ctx_.relabel) {
      const RingIso& f = *ctx_.relabel;
      const FiniteRing& t = f.target();
      const MultSet fs = apply_iso(f, s_);
      const auto same = [&](std::string_view what, bool x, bool y) {
        record(kIsoTransport, x == y, [&] { return std::string(what) + " changes under relabeling"; });
      };
      same("s-domain", dom.verdict, is_s_integral_domain(t, fs).verdict);
      same("cancellation", canc.verdict, has_s_cancellation(t, fs).verdict);
      same("s-field", field.verdict, is_s_field(t, fs).verdict);
      same("s-reduced", red.verdict, is_s_reduced(t, fs).verdict);
      for (std::size_t i = 0; i < ctx_.ideals.size(); ++i) {
        const Ideal& p = ctx_.ideals[i];
        if (p.meets(s_)) continue;
        const Ideal fp = apply_iso(f, p);
        same("s-prime " + ideal_text(p), prime[i], is_s_prime(t, fp, fs).verdict);
        same("s-maximal " + ideal_text(p), maximal[i], is_s_maximal(t, fp, fs).verdict);
        same("s-proper " + ideal_text(p), proper[i], is_s_proper(t, fp, fs).verdict);
      }
      for (Element a : r_.elements()) {
        const Element fa = f(a);
        const std::size_t i = a.index();
        same("s-idempotent", idem[i].verdict, is_s_idempotent(t, fa, fs).verdict);
        same("s-nilpotent", nil[i].verdict, is_s_nilpotent(t, fa, fs).verdict);
        same("s-zero", zero[i].verdict, is_s_zero(t, fa, fs).verdict);
        same("s-non-zero", nonzero[i].verdict, is_s_non_zero(t, fa, fs).verdict);
      }
    }
    classified_ = true;
  }

  void localization_checks() {
    const bool any = on(kLocalOracle) || on(kLocalUnits) || on(kLocalInjective) ||
                     on(kLocalDomain) || on(kLocalFieldTransfer) || on(kDomainField);
    if (!any) return;
    const LocalizationResult loc = localize(r_, s_);
    const FiniteRing& local = loc.local_ring;
    if (on(kLocalOracle)) {
      const ElementSet torsion = s_torsion(r_, s_);
      record(kLocalOracle, torsion == loc.kernel.members(),
             [] { return std::string("kernel differs from the S-torsion ideal"); });
      const QuotientResult oracle = quotient_ring(r_, Ideal::from_members(r_, torsion));
      record(kLocalOracle, find_isomorphism(local, oracle.ring).has_value(), [&] {
        return "fraction ring of order " + std::to_string(local.order()) +
               " not isomorphic to R/kernel of order " + std::to_string(oracle.ring.order());
      });
    }
    if (on(kLocalUnits)) {
      for (Element t : s_.members()) {
        record(kLocalUnits, inverse(local, loc.phi[t.index()]).has_value(),
               [&] { return "phi(" + std::to_string(t.index()) + ") is not a unit"; });
      }
    }
    const bool proper_s = is_proper_mult_set(s_);
    if (on(kLocalInjective) && proper_s) {
      std::vector<Element> images = loc.phi;
      std::ranges::sort(images);
      const bool injective = std::ranges::adjacent_find(images) == images.end();
      record(kLocalInjective, injective && is_proper_mult_set(loc.phi_s),
             [] { return std::string("phi not injective or phi(S) not proper"); });
    }
    if (!classified_) return;
    if (on(kLocalDomain)) {
      const bool local_domain = is_integral_domain(local);
      record(kLocalDomain, domain_ == local_domain, [&] {
        return "s-domain=" + std::to_string(domain_) +
               " local domain=" + std::to_string(local_domain);
      });
    }
    if (on(kLocalFieldTransfer)) {
      const bool local_field = is_s_field(local, loc.phi_s).verdict;
      record(kLocalFieldTransfer, !field_ || local_field,
             [] { return std::string("s-field but localization is not a phi(S)-field"); });
      if (proper_s) {
        record(kLocalFieldTransfer, !local_field || field_,
               [] { return std::string("phi(S)-field localization but not an s-field"); });
      }
    }
    if (on(kDomainField) && domain_) {
      record(kDomainField, field_, [] { return std::string("s-domain but not s-field"); });
    }
  }

  void krull_checks() {
    const bool any = on(kPowerDescent) || on(kPmsb) || on(kAnnihilator) || on(kDecomposition) ||
                     on(kPrimaryRadical) || on(kJacobson) || on(kProductDecomposition);
    if (!any) return;
    std::vector<Ideal> primary;
    for (const Ideal& ideal : ctx_.ideals) {
      if (ideal.meets(s_)) continue;
      const std::string label = ideal_text(ideal);
      if (on(kPowerDescent)) {
        const PowerChain chain = power_intersection(r_, ideal);
        bool ok = chain.stabilization_index <= r_.order() &&
                  chain.intersection == chain.powers[chain.stabilization_index];
        for (std::size_t j = 1; j < chain.powers.size(); ++j) {
          ok = ok && chain.powers[j].subset_of(chain.powers[j - 1]);
          if (j < chain.stabilization_index) ok = ok && chain.powers[j] != chain.powers[j - 1];
        }
        record(kPowerDescent, ok, [&] { return "I=" + label; });
      }
      if (on(kPmsb)) {
        bool ok = true;
        try {
          const Witness w = pmsb_witness(r_, ideal, s_);
          ok = s_.contains(*w.s) &&
               scaled(ideal_power(radical(ideal), *w.exponent), *w.s).subset_of(ideal.members());
        } catch (const Error& e) {
          if (e.code() != ErrorCode::theorem_violation) throw;
          ok = false;
        }
        record(kPmsb, ok, [&] { return "I=" + label; });
      }
      if (on(kAnnihilator)) {
        bool ok = true;
        try {
          const AnnihilatorResult res = krull_annihilator(r_, ideal, s_);
          const Element u = r_.add(res.t, res.a);
          ok = s_.contains(res.t) && ideal.contains(res.a) &&
               scaled(res.chain.intersection, u) == ElementSet{r_.zero()};
        } catch (const Error& e) {
          if (e.code() != ErrorCode::theorem_violation) throw;
          ok = false;
        }
        record(kAnnihilator, ok, [&] { return "I=" + label; });
      }
      if ((on(kDecomposition) || on(kPrimaryRadical)) && is_s_primary(r_, ideal, s_).verdict) {
        primary.push_back(ideal);
        if (on(kPrimaryRadical)) {
          record(kPrimaryRadical, is_s_prime(r_, radical(ideal), s_).verdict,
                 [&] { return "Q=" + label; });
        }
      }
    }
    if (on(kDecomposition)) {
      for (const Ideal& ideal : ctx_.ideals) {
        if (ideal.meets(s_)) continue;
        bool ok = true;
        try {
          const std::vector<Ideal> parts = s_primary_decomposition(ideal, primary);
          ElementSet meet = r_.all();
          for (const Ideal& q : parts) {
            meet &= q.members();
            ok = ok && ideal.subset_of(q) && !q.meets(s_) && is_s_primary(r_, q, s_).verdict;
          }
          ok = ok && meet == ideal.members();
          for (std::size_t skip = 0; parts.size() > 1 && skip < parts.size(); ++skip) {
            ElementSet rest = r_.all();
            for (std::size_t j = 0; j < parts.size(); ++j) {
              if (j != skip) rest &= parts[j].members();
            }
            ok = ok && rest != ideal.members();
          }
        } catch (const Error& e) {
          if (e.code() != ErrorCode::theorem_violation) throw;
          ok = false;
        }
        record(kDecomposition, ok, [&] { return "I=" + ideal_text(ideal); });
      }
    }
    if (on(kJacobson)) {
      for (const JacobsonEntry& e : jacobson_corollary_check(r_, s_)) {
        record(kJacobson, e.found, [&] { return e.label + " " + ideal_text(e.ideal); });
      }
    }
    if (on(kProductDecomposition)) {
      for (const Ideal& ideal : ctx_.ideals) {
        if (ideal.meets(s_)) continue;
        const ProductDecomposition pd = check_product_decomposition(r_, s_, ideal, reading_);
        if (pd.skipped) continue;
        record(kProductDecomposition, pd.passed(), [&] { return "I=" + ideal_text(ideal); });
      }
    }
  }

  const RingContext& ctx_;
  const FiniteRing& r_;
  const MultSet& s_;
  std::size_t set_index_;
  const std::vector<bool>& enabled_;
  std::size_t max_examples_;
  ChainReading reading_;
  std::vector<PairTally> tallies_;
  bool classified_ = false;
  bool domain_ = false;
  bool field_ = false;
};

}  // namespace

const std::vector<InvariantInfo>& survey_invariants() { return kInvariants; }

std::vector<std::string> resolve_properties(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const std::string& raw : names) {
    const std::string name = normalize(raw);
    if (name.empty()) continue;
    std::optional<std::string> id;
    for (const InvariantInfo& info : kInvariants) {
      if (info.id == name) id = std::string(info.id);
    }
    for (const Aliases& a : kAliases) {
      if (!id && a.alias == name) id = std::string(a.id);
    }
    if (!id) throw Error(ErrorCode::syntax, "unknown survey property: " + raw);
    if (std::ranges::find(out, *id) == out.end()) out.push_back(*id);
  }
  return out;
}

bool SurveyResult::clean() const {
  return std::ranges::all_of(tallies, [](const InvariantTally& t) { return t.counterexamples == 0; });
}

const InvariantTally* SurveyResult::find(std::string_view id) const {
  for (const InvariantTally& t : tallies) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

std::vector<FiniteRing> survey_rings(const SurveyOptions& o) {
  std::vector<FiniteRing> out;
  std::set<std::string> seen;
  const auto push = [&](FiniteRing r) {
    if (seen.insert(r.recipe()).second) out.push_back(std::move(r));
  };
  const std::size_t comp = std::min(o.composite_up_to, o.up_to);
  const auto zn = [&](std::size_t n) { return make_zn(n, o.max_order); };
  for (std::size_t n = 2; n <= o.up_to; ++n) push(zn(n));

  std::vector<FiniteRing> bases;
  for (std::size_t n = 2; n <= comp; ++n) bases.push_back(zn(n));
  std::vector<FiniteRing> products;
  for (std::size_t a = 2; a * a <= comp; ++a) {
    for (std::size_t b = a; a * b <= comp; ++b) {
      products.push_back(direct_product(zn(a), zn(b), o.max_order));
    }
  }
  if (comp >= 8) {
    FiniteRing cube = direct_product(direct_product(zn(2), zn(2), o.max_order), zn(2), o.max_order);
    products.push_back(cube);
    if (comp >= 16) products.push_back(direct_product(cube, zn(2), o.max_order));
  }
  for (const FiniteRing& p : products) {
    push(p);
    bases.push_back(p);
  }
  for (const FiniteRing& base : bases) {
    for (const Ideal& i : enumerate_ideals(base)) {
      if (!i.is_zero() && !i.is_whole()) push(quotient_ring(base, i).ring);
    }
  }
  std::vector<FiniteRing> small{zn(2), zn(3), zn(4), direct_product(zn(2), zn(2), o.max_order)};
  for (const FiniteRing& r : small) {
    if (r.order() * r.order() <= comp) push(idealization(r, ModuleSpec::regular(), o.max_order));
  }
  for (std::size_t n = 2; n * 2 <= comp; ++n) {
    for (std::size_t m = 2; m <= n && n * m <= comp; ++m) {
      if (n % m == 0) push(idealization(zn(n), ModuleSpec::cyclic(m), o.max_order));
    }
  }
  return out;
}

SurveyResult run_survey(const SurveyOptions& options) {
  return run_survey(survey_rings(options), options);
}

SurveyResult run_survey(const std::vector<FiniteRing>& rings, const SurveyOptions& options) {
  std::vector<bool> enabled(kInvariantCount, options.properties.empty());
  for (const std::string& id : resolve_properties(options.properties)) {
    for (std::size_t i = 0; i < kInvariants.size(); ++i) {
      if (kInvariants[i].id == id) enabled[i] = true;
    }
  }
  enabled[kEvaluationError] = true;

  std::vector<std::optional<RingContext>> built(rings.size());
  parallel_for(rings.size(), options.jobs, [&](std::size_t i) { built[i] = build_context(rings[i]); });
  std::vector<RingContext> contexts;
  contexts.reserve(built.size());
  for (auto& c : built) contexts.push_back(std::move(*c));

  struct Task {
    std::size_t ring;
    std::size_t set;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < contexts.size(); ++i) {
    for (std::size_t j = 0; j < contexts[i].sets.size(); ++j) tasks.push_back({i, j});
  }
  std::vector<std::vector<PairTally>> results(tasks.size());
  parallel_for(tasks.size(), options.jobs, [&](std::size_t k) {
    PairEvaluator eval(contexts[tasks[k].ring], tasks[k].set, enabled, options.max_examples,
                       options.reading);
    results[k] = eval.run();
  });

  SurveyResult out;
  out.pairs = tasks.size();
  for (const FiniteRing& r : rings) out.rings.push_back(r.recipe());
  for (std::size_t i = 0; i < kInvariants.size(); ++i) {
    if (!enabled[i]) continue;
    out.tallies.push_back(InvariantTally{std::string(kInvariants[i].id),
                                         std::string(kInvariants[i].group),
                                         std::string(kInvariants[i].statement), 0, 0, {}});
  }
  const auto tally_for = [&](std::size_t id) -> InvariantTally& {
    return *std::ranges::find(out.tallies, kInvariants[id].id, &InvariantTally::id);
  };
  for (std::size_t i = 0; i < contexts.size(); ++i) {
    if (contexts[i].error.empty()) continue;
    InvariantTally& t = tally_for(kEvaluationError);
    ++t.checked;
    ++t.counterexamples;
    if (t.examples.size() < options.max_examples) {
      t.examples.push_back({contexts[i].ring.recipe(), "", contexts[i].error});
    }
  }
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    const RingContext& ctx = contexts[tasks[k].ring];
    for (std::size_t id = 0; id < kInvariantCount; ++id) {
      if (!enabled[id]) continue;
      const PairTally& pt = results[k][id];
      InvariantTally& t = tally_for(id);
      t.checked += pt.checked;
      t.counterexamples += pt.failures;
      for (const std::string& d : pt.details) {
        if (t.examples.size() >= options.max_examples) break;
        t.examples.push_back({ctx.ring.recipe(), generators_text(ctx.sets[tasks[k].set]), d});
      }
    }
  }
  return out;
}

}  // namespace slab
