#pragma once

// Security policies as formula templates.  Proposition names are parameters
// so that they can match whatever a system file declares.

#include <map>
#include <string>
#include <vector>

#include "hyperltl/formula.hpp"

namespace hyperltl {

/// A G (req -> (hasRight <-> permit))
QuantifiedFormula access_control(const std::string& req = "req", const std::string& has_right = "hasRight",
                                 const std::string& permit = "permit");

/// A G (req -> F resp)
QuantifiedFormula guaranteed_service(const std::string& req = "req", const std::string& resp = "resp");

/// AE G (<true, !high> & low_equiv)
QuantifiedFormula noninference(const std::string& high = "high", const std::string& low_equiv = "low_equiv");

/// AA low_equiv -> G low_equiv
QuantifiedFormula observational_determinism(const std::string& low_equiv = "low_equiv");

/// AAE G (high_in_equiv_13 & low_equiv_23), both ternary bonding compounds.
QuantifiedFormula gni(const std::string& high_in_equiv_13 = "high_in_equiv_13",
                      const std::string& low_equiv_23 = "low_equiv_23");

/// AE (G low_equiv) & (<phi, !phi> | <!phi, phi>).  Throws FragmentError
/// for a temporal phi.
QuantifiedFormula opacity(const Formula& phi, const std::string& low_equiv = "low_equiv");

struct PolicyInfo {
  std::string name;
  /// Parameter names with their defaults, in order.
  std::vector<std::pair<std::string, std::string>> parameters;
};

const std::vector<PolicyInfo>& policy_catalog();

/// Instantiates a policy by name.  Keys of `bindings` must be parameter
/// names; unbound parameters keep their defaults.  For opacity, the `phi`
/// parameter is parsed as a quantifier-free formula.
QuantifiedFormula instantiate_policy(const std::string& name, const std::map<std::string, std::string>& bindings = {});

}  // namespace hyperltl
