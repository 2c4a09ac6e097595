#include "hyperltl/checker.hpp"

namespace hyperltl {

namespace {

class Recorder {
 public:
  Recorder(Verdict& v, const CheckOptions& options) : v_(v), options_(options) {}

  template <class A>
  const A& operator()(const std::string& stage, const A& a) {
    v_.stats.push_back({stage, a.num_states(), a.num_transitions()});
    if (options_.on_automaton) options_.on_automaton(stage, dump(a));
    return a;
  }

 private:
  Verdict& v_;
  const CheckOptions& options_;
};

GuardedBuchi formula_buchi(const Formula& nnf, std::size_t n, const SystemModel& m, const CheckOptions& options) {
  GbaConstruction c = build_gba_construction(nnf, n, m.bonding(), options.candidate_budget);
  if (options.on_construction) options.on_construction(c);
  return degeneralize(trim(std::move(c.automaton)));
}

std::optional<LassoWord> witness_of(const BuchiAutomaton& a, const CheckOptions& options) {
  auto w = is_empty_witness(a);
  if (options.on_emptiness) options.on_emptiness(a, w);
  return w;
}

std::string describe(const std::vector<Diagnostic>& diags) {
  std::string out;
  for (const auto& d : diags) out += (out.empty() ? "" : "; ") + d.message;
  return out;
}

}  // namespace

Verdict check_fast_path(const SystemModel& m, const Formula& psi, std::size_t n, bool universal,
                        const CheckOptions& options) {
  Verdict v;
  v.fast_path = true;
  v.dualized = !universal;
  Recorder record(v, options);
  const Formula claim = universal ? psi : lnot(psi);
  const BuchiAutomaton system = record("system", to_buchi(m));
  const BuchiAutomaton composed = record("self_composition", self_compose(system, n));
  const GuardedBuchi negation = record("negation_buchi", formula_buchi(to_nnf(lnot(claim), n), n, m, options));
  const BuchiAutomaton product = record("product", intersect(composed, negation));
  auto witness = witness_of(product, options);
  v.holds = !witness.has_value();
  if (!universal) {
    v.holds = !v.holds;
  } else {
    v.countermodel = std::move(witness);
  }
  return v;
}

Verdict check_general(const SystemModel& m, const Formula& psi, std::size_t k, std::size_t j,
                      const CheckOptions& options) {
  const std::size_t n = k + j;
  if (n == 0) throw std::invalid_argument("check_general needs at least one quantifier");
  Verdict v;
  Recorder record(v, options);
  const BuchiAutomaton system = record("system", to_buchi(m));
  const BuchiAutomaton composed = record("self_composition", self_compose(system, n));
  const GuardedBuchi formula = record("formula_buchi", formula_buchi(to_nnf(psi, n), n, m, options));
  const BuchiAutomaton product = record("product", intersect(composed, formula));
  if (k == 0) {
    // E^j psi: the prefix of length zero is a single trivial word.
    v.holds = witness_of(product, options).has_value();
    return v;
  }
  const BuchiAutomaton projected = record("projection", project(product, k));
  const BuchiAutomaton universal = record("self_composition_k", self_compose(system, k));
  ComplementOptions copts;
  copts.state_budget = options.complement_budget;
  copts.method = options.complement_method;
  const BuchiAutomaton complemented = record("complement", complement(projected, universal.labels, copts));
  const BuchiAutomaton final_product = record("final_product", intersect(universal, complemented));
  auto witness = witness_of(final_product, options);
  v.holds = !witness.has_value();
  v.countermodel = std::move(witness);
  return v;
}

Verdict check(const SystemModel& m, const QuantifiedFormula& qf, const CheckOptions& options) {
  if (auto diags = check_well_formed(qf); !diags.empty()) throw std::invalid_argument(describe(diags));
  const FragmentClass fc = classify_fragment(qf);
  if (fc.fragment == Fragment::Outside) {
    throw FragmentError("formula is outside HyperLTL2: at most one quantifier alternation is allowed and focus "
                        "subformulas must be propositional");
  }
  const auto& q = qf.prefix.quantifiers();
  const std::size_t n = q.size();
  std::size_t k = 0;
  while (k < n && q[k] == q.front()) ++k;
  const std::size_t j = n - k;
  const bool leading_universal = q.front() == Quantifier::Universal;

  Verdict v;
  if (j == 0) {
    v = check_fast_path(m, qf.body, n, leading_universal, options);
  } else if (leading_universal) {
    v = check_general(m, qf.body, k, j, options);
  } else {
    // E^k A^j psi is the negation of A^k E^j !psi.
    v = check_general(m, lnot(qf.body), k, j, options);
    v.holds = !v.holds;
    v.dualized = true;
    v.countermodel.reset();
  }
  v.fragment = fc;
  return v;
}

}  // namespace hyperltl
