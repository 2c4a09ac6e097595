#pragma once

// Tableau translation of a quantifier-free NNF body over n paths into a
// generalized Buchi automaton whose language is the set of zipped path
// tuples satisfying the body.  States are maximal consistent sets of the
// closure plus a fresh initial state.  Letters are constrained only through
// membership tests, so transitions carry guards instead of letters.

#include <string>
#include <vector>

#include "hyperltl/buchi.hpp"
#include "hyperltl/formula.hpp"
#include "hyperltl/system.hpp"

namespace hyperltl {

/// Constraint on a letter: per-path required and forbidden atoms (from focus
/// literals), and required and forbidden compounds of the bonded letter (from
/// bare propositions).
struct TransitionGuard {
  std::vector<PropSet> required;
  std::vector<PropSet> forbidden;
  PropSet bond_required;
  PropSet bond_forbidden;
  BondingPtr bonding;

  bool matches(const Letter& letter) const;
  /// False when some letter constraint can never hold.
  bool satisfiable() const;
};

std::string format_label(const Vocabulary& vocab, const TransitionGuard& g);

using GuardedGba = BasicGeneralizedBuchi<TransitionGuard>;
using GuardedBuchi = BasicBuchi<TransitionGuard>;

/// The construction together with the data behind each state, for tests and
/// structural scans.  State 0 is the initial state; state i > 0 is the
/// maximal consistent set sets[i - 1].
struct GbaConstruction {
  Closure closure;
  std::vector<ConsistentSet> sets;
  /// Closure index of the until formula behind each accepting set.
  std::vector<std::size_t> until_members;
  GuardedGba automaton;
};

GbaConstruction build_gba_construction(const Formula& psi, std::size_t n, const BondingPtr& bonding,
                                       std::size_t candidate_budget = kDefaultCandidateBudget);

/// Requires psi in NNF for n paths; throws std::invalid_argument otherwise,
/// or when psi names a proposition the bonding vocabulary does not know.
GuardedGba build_gba(const Formula& psi, std::size_t n, const BondingPtr& bonding,
                     std::size_t candidate_budget = kDefaultCandidateBudget);

/// build_gba(to_nnf(!psi, n), n, bonding).  Accepts any desugarable body.
GuardedGba build_negation_gba(const Formula& psi, std::size_t n, const BondingPtr& bonding,
                              std::size_t candidate_budget = kDefaultCandidateBudget);

}  // namespace hyperltl
