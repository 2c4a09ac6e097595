#include "hyperltl/policies.hpp"

namespace hyperltl {

namespace {

Formula name(const std::string& n) {
  if (is_reserved_name(n)) throw std::invalid_argument("name '" + n + "' is reserved");
  if (n.empty()) throw std::invalid_argument("empty proposition name");
  return prop(n);
}

QuantifiedFormula quantified(const std::string& prefix, Formula body) { return {QuantifierPrefix::parse(prefix), std::move(body)}; }

}  // namespace

QuantifiedFormula access_control(const std::string& req, const std::string& has_right, const std::string& permit) {
  return quantified("A", always(implies(name(req), iff(name(has_right), name(permit)))));
}

QuantifiedFormula guaranteed_service(const std::string& req, const std::string& resp) {
  return quantified("A", always(implies(name(req), eventually(name(resp)))));
}

QuantifiedFormula noninference(const std::string& high, const std::string& low_equiv) {
  return quantified("AE", always(land(focus({top(), lnot(name(high))}), name(low_equiv))));
}

QuantifiedFormula observational_determinism(const std::string& low_equiv) {
  return quantified("AA", implies(name(low_equiv), always(name(low_equiv))));
}

QuantifiedFormula gni(const std::string& high_in_equiv_13, const std::string& low_equiv_23) {
  return quantified("AAE", always(land(name(high_in_equiv_13), name(low_equiv_23))));
}

QuantifiedFormula opacity(const Formula& phi, const std::string& low_equiv) {
  if (!is_propositional(phi)) {
    throw FragmentError("opacity predicate " + to_string(phi) +
                        " is temporal; the schema allows it but the checkable fragment needs propositional focus slots");
  }
  Formula masked = lor(focus({phi, lnot(phi)}), focus({lnot(phi), phi}));
  return quantified("AE", land(always(name(low_equiv)), masked));
}

const std::vector<PolicyInfo>& policy_catalog() {
  static const std::vector<PolicyInfo> catalog{
      {"access_control", {{"req", "req"}, {"hasRight", "hasRight"}, {"permit", "permit"}}},
      {"guaranteed_service", {{"req", "req"}, {"resp", "resp"}}},
      {"noninference", {{"high", "high"}, {"low_equiv", "low_equiv"}}},
      {"observational_determinism", {{"low_equiv", "low_equiv"}}},
      {"gni", {{"high_in_equiv_13", "high_in_equiv_13"}, {"low_equiv_23", "low_equiv_23"}}},
      {"opacity", {{"phi", "p"}, {"low_equiv", "low_equiv"}}},
  };
  return catalog;
}

QuantifiedFormula instantiate_policy(const std::string& policy, const std::map<std::string, std::string>& bindings) {
  const auto& catalog = policy_catalog();
  auto it = std::find_if(catalog.begin(), catalog.end(), [&](const PolicyInfo& p) { return p.name == policy; });
  if (it == catalog.end()) throw std::invalid_argument("unknown policy '" + policy + "'");
  std::vector<std::string> args;
  for (const auto& [param, fallback] : it->parameters) {
    auto b = bindings.find(param);
    args.push_back(b == bindings.end() ? fallback : b->second);
  }
  for (const auto& [key, value] : bindings) {
    auto known = std::find_if(it->parameters.begin(), it->parameters.end(), [&](const auto& p) { return p.first == key; });
    if (known == it->parameters.end()) throw std::invalid_argument("policy '" + policy + "' has no parameter '" + key + "'");
  }
  if (policy == "access_control") return access_control(args[0], args[1], args[2]);
  if (policy == "guaranteed_service") return guaranteed_service(args[0], args[1]);
  if (policy == "noninference") return noninference(args[0], args[1]);
  if (policy == "observational_determinism") return observational_determinism(args[0]);
  if (policy == "gni") return gni(args[0], args[1]);
  QuantifiedFormula phi = parse(args[0]);
  if (!phi.prefix.empty()) throw std::invalid_argument("opacity predicate must not carry quantifiers");
  return opacity(phi.body, args[1]);
}

}  // namespace hyperltl
