#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperltl/buchi.hpp"
#include "hyperltl/formula.hpp"
#include "hyperltl/system.hpp"
#include "hyperltl/translate.hpp"

namespace hyperltl {

struct StageStats {
  std::string stage;
  std::size_t states = 0;
  std::size_t transitions = 0;
};

struct Verdict {
  bool holds = false;
  /// Zipped paths refuting the (possibly dualized) universal claim.  Absent
  /// when the property holds and for dualized formulas.
  std::optional<LassoWord> countermodel;
  std::vector<StageStats> stats;
  bool dualized = false;
  bool fast_path = false;
  FragmentClass fragment;
};

struct CheckOptions {
  std::size_t complement_budget = kDefaultComplementBudget;
  std::size_t candidate_budget = kDefaultCandidateBudget;
  ComplementMethod complement_method = ComplementMethod::Automatic;
  /// Called with each intermediate automaton's stage name and debug dump.
  std::function<void(const std::string&, const std::string&)> on_automaton;
  /// Audit hooks: every tableau construction before trimming, and every
  /// emptiness check with its witness.
  std::function<void(const GbaConstruction&)> on_construction;
  std::function<void(const BuchiAutomaton&, const std::optional<LassoWord>&)> on_emptiness;
};

/// Decides m |= qf for formulas with at most one quantifier alternation and
/// propositional foci.  Throws FragmentError outside that fragment,
/// std::invalid_argument for ill-formed formulas and StateBudgetError when a
/// construction exceeds its budget.
Verdict check(const SystemModel& m, const QuantifiedFormula& qf, const CheckOptions& options = {});

/// Alternation-free case: A^n psi when `universal`, else E^n psi via A^n !psi.
Verdict check_fast_path(const SystemModel& m, const Formula& psi, std::size_t n, bool universal,
                        const CheckOptions& options = {});

/// A^k E^j psi through projection and complementation.  j may be 0 and k may
/// be 0.
Verdict check_general(const SystemModel& m, const Formula& psi, std::size_t k, std::size_t j,
                      const CheckOptions& options = {});

}  // namespace hyperltl
