#pragma once

// HyperLTL abstract syntax.
//
// A formula is a quantifier prefix over paths (A / E) followed by a
// quantifier-free body.  Bodies are immutable trees of shared nodes; two
// bodies are equal iff they are structurally equal.  Every node caches its
// structural hash, so equality, ordering and hashing are cheap enough to use
// formulas directly as keys.
//
// Sugar nodes (true, false, ->, <->, F, G) exist only until desugar(); the
// checker pipeline works on the core connectives plus And/Release, which
// negation normal form needs.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hyperltl {

enum class Op : std::uint8_t {
  Prop,
  True,
  False,
  Not,
  Or,
  And,
  Implies,
  Iff,
  Focus,
  Next,
  Until,
  Release,
  Finally,
  Globally,
};

class Node;
using Formula = std::shared_ptr<const Node>;

class Node {
 public:
  Node(Op op, std::string name, std::vector<Formula> children);

  Op op() const { return op_; }
  const std::string& name() const { return name_; }
  const std::vector<Formula>& children() const { return children_; }
  const Formula& child(std::size_t i) const { return children_.at(i); }
  std::size_t hash() const { return hash_; }
  /// Height of the tree; a proposition has depth 1.
  int depth() const { return depth_; }

 private:
  Op op_;
  std::string name_;
  std::vector<Formula> children_;
  std::size_t hash_;
  int depth_;
};

/// Reserved proposition used to spell truth as (p | !p).  User systems and
/// formulas may not use names starting with "__".
inline constexpr std::string_view kTrueAtom = "__tt";

bool is_reserved_name(std::string_view name);

// Structural comparison.
bool equal(const Formula& a, const Formula& b);
int compare(const Formula& a, const Formula& b);

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f->hash(); }
};
struct FormulaEq {
  bool operator()(const Formula& a, const Formula& b) const { return equal(a, b); }
};
struct FormulaLess {
  bool operator()(const Formula& a, const Formula& b) const { return compare(a, b) < 0; }
};
using FormulaSet = std::set<Formula, FormulaLess>;

// Builders.
Formula prop(std::string name);
Formula top();
Formula bottom();
Formula lnot(Formula f);
Formula lor(Formula a, Formula b);
Formula land(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula focus(std::vector<Formula> slots);
Formula next(Formula f);
Formula until(Formula a, Formula b);
Formula release(Formula a, Formula b);
Formula eventually(Formula f);
Formula always(Formula f);

/// Negation with double negation collapsed: negate(!f) == f.
Formula negate(const Formula& f);

/// Desugared truth: (__tt | !__tt).  Falsity is !(__tt | !__tt) before
/// normalization and (!__tt & __tt) after it.
Formula desugared_true();
Formula desugared_false();
bool is_true_constant(const Formula& f);
bool is_false_constant(const Formula& f);

enum class Quantifier : std::uint8_t { Universal, Existential };

class QuantifierPrefix {
 public:
  QuantifierPrefix() = default;
  explicit QuantifierPrefix(std::vector<Quantifier> quants) : quants_(std::move(quants)) {}
  static QuantifierPrefix parse(std::string_view word);

  const std::vector<Quantifier>& quantifiers() const { return quants_; }
  std::size_t size() const { return quants_.size(); }
  bool empty() const { return quants_.empty(); }
  Quantifier operator[](std::size_t i) const { return quants_.at(i); }
  /// Number of adjacent pairs of unlike quantifiers.
  std::size_t alternations() const;
  /// Every quantifier flipped.
  QuantifierPrefix dual() const;
  std::string str() const;

  friend bool operator==(const QuantifierPrefix&, const QuantifierPrefix&) = default;

 private:
  std::vector<Quantifier> quants_;
};

struct QuantifiedFormula {
  QuantifierPrefix prefix;
  Formula body;
};

/// Concrete syntax accepted by parse(); precedence from loosest:
/// -> <->, |, &, U R, unary (! X F G).
std::string to_string(const Formula& f);
std::string to_string(const QuantifiedFormula& qf);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

QuantifiedFormula parse(std::string_view text);

/// Rewrites F, G, ->, <->, true and false into the core connectives.
Formula desugar(const Formula& f);

struct Diagnostic {
  std::string message;
};
/// Empty result means the formula is well formed.
std::vector<Diagnostic> check_well_formed(const QuantifiedFormula& qf);

enum class Fragment : std::uint8_t { HyperLTL1, HyperLTL2, Outside };

struct FragmentClass {
  Fragment fragment = Fragment::Outside;
  bool sigma = false;  // leading existential; otherwise Pi
  std::size_t level = 0;
  std::size_t alternations = 0;
  /// Set when the body puts a temporal operator under a focus.
  bool temporal_focus = false;

  /// "Pi_2", "Sigma_1", ...
  std::string hierarchy() const;
};

FragmentClass classify_fragment(const QuantifiedFormula& qf);
std::string to_string(Fragment f);

/// True iff no X/U/R/F/G occurs in f.
bool is_propositional(const Formula& f);

class FragmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Negation normal form for bodies over n paths.  Negations sit only on
/// propositions, and every focus has exactly one non-true slot holding a
/// literal.  Throws FragmentError when a focus slot is temporal or has the
/// wrong arity.
Formula to_nnf(const Formula& f, std::size_t n);

/// Structural scan for the three NNF clauses.
bool is_nnf(const Formula& f, std::size_t n);

/// For a single-literal focus, the slot index and its literal.
struct FocusLiteral {
  std::size_t slot;
  Formula literal;
};
std::optional<FocusLiteral> focus_literal(const Formula& f);

/// The same focus with its literal negated.
Formula focus_complement(const Formula& f);

/// Closure of an NNF formula, in a deterministic order (subformulas first).
std::vector<Formula> closure(const Formula& psi);

/// Closure plus index lookup; shared by maximal_consistent_sets and the
/// automaton construction.
class Closure {
 public:
  explicit Closure(const Formula& psi);

  const Formula& root() const { return root_; }
  const std::vector<Formula>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const Formula& operator[](std::size_t i) const { return members_[i]; }
  std::optional<std::size_t> index_of(const Formula& f) const;
  std::size_t at(const Formula& f) const;
  /// Index of the complementary member: the negation, or the complementary
  /// focus.
  std::size_t complement(std::size_t i) const { return complement_[i]; }

 private:
  Formula root_;
  std::vector<Formula> members_;
  std::unordered_map<Formula, std::size_t, FormulaHash, FormulaEq> index_;
  std::vector<std::size_t> complement_;
};

/// Membership vector over the closure, one entry per closure member.
using ConsistentSet = std::vector<bool>;

class StateBudgetError : public std::runtime_error {
 public:
  StateBudgetError(const std::string& what, std::size_t bound)
      : std::runtime_error(what), bound_(bound) {}
  std::size_t bound() const { return bound_; }

 private:
  std::size_t bound_;
};

inline constexpr std::size_t kDefaultCandidateBudget = std::size_t{1} << 20;

/// All maximal consistent subsets of cl(psi).  Throws StateBudgetError when
/// more than `candidate_budget` partial assignments are explored.
std::vector<ConsistentSet> maximal_consistent_sets(const Closure& cl,
                                                   std::size_t candidate_budget = kDefaultCandidateBudget);
std::vector<FormulaSet> maximal_consistent_sets(const Formula& psi);

/// Checks the six defining conditions of a maximal consistent set.
bool is_maximal_consistent(const Closure& cl, const ConsistentSet& k);

}  // namespace hyperltl
