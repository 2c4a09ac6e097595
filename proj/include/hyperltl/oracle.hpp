#pragma once

// Brute-force evaluator of the path semantics over lasso-shaped
// computations.  It shares no code with the automaton pipeline: it walks
// formulas directly, including the sugar connectives, and does its own lasso
// arithmetic.

#include <vector>

#include "hyperltl/buchi.hpp"
#include "hyperltl/formula.hpp"
#include "hyperltl/system.hpp"

namespace hyperltl {

/// Ultimately periodic computations of m read along state paths (stem then
/// cycle) from an initial state with at most max_len states, deduplicated as
/// infinite words and sorted.
std::vector<LassoWord> enumerate_lassos(const SystemModel& m, std::size_t max_len);

/// Systems on which enumerate_lassos(m, m.num_states()) is exactly the
/// computation set: every reachable cycle is a simple cycle that no edge
/// leaves.
bool in_oracle_envelope(const SystemModel& m);

/// Validity of `psi` on the path tuple `gamma` (1-tuple lassos) after
/// quantifying `remaining` over `domain`.  Bare propositions use `bonding`.
/// Throws std::invalid_argument for names the vocabulary lacks or focus
/// arity mismatches.
bool oracle_eval(const std::vector<LassoWord>& gamma, const Formula& psi, const std::vector<LassoWord>& domain,
                 const BondingTable& bonding, const QuantifierPrefix& remaining);

/// Quantifier-free case.
bool oracle_eval(const std::vector<LassoWord>& gamma, const Formula& psi, const BondingTable& bonding);

/// Quantified formula over the system's lassos of at most max_len states
/// (defaults to the number of system states).
bool oracle_holds(const SystemModel& m, const QuantifiedFormula& qf, std::size_t max_len = 0);

}  // namespace hyperltl
