#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hyperltl/alphabet.hpp"
#include "hyperltl/buchi.hpp"

namespace hyperltl {

/// Compounds holding across tuples of paths.  Arity 1 is always the
/// identity; larger arities map listed atom-set tuples to compound sets and
/// everything else to the empty set.
class BondingTable {
 public:
  explicit BondingTable(VocabularyPtr vocab) : vocab_(std::move(vocab)) {}

  const VocabularyPtr& vocabulary() const { return vocab_; }

  /// Throws std::invalid_argument on arity < 2, non-atom tuple members,
  /// unknown compounds or a repeated tuple.
  void add(const std::vector<PropSet>& tuple, PropSet compounds);

  PropSet bond(const std::vector<PropSet>& tuple) const;
  std::size_t size() const { return entries_.size(); }
  const std::unordered_map<Letter, PropSet, LetterHash>& entries() const { return entries_; }

 private:
  VocabularyPtr vocab_;
  std::unordered_map<Letter, PropSet, LetterHash> entries_;
};

using BondingPtr = std::shared_ptr<const BondingTable>;

inline PropSet bond(const BondingTable& table, const std::vector<PropSet>& tuple) { return table.bond(tuple); }

class SystemFormatError : public std::invalid_argument {
 public:
  SystemFormatError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A finite transition system with atom labels on states.
class SystemModel {
 public:
  SystemModel(VocabularyPtr vocab, BondingPtr bonding);
  explicit SystemModel(VocabularyPtr vocab);

  StateId add_state(const std::string& name, PropSet label);
  void add_initial(StateId s);
  void add_transition(StateId from, StateId to);
  void set_bonding(BondingPtr bonding);

  /// Throws std::invalid_argument when there is no initial state or some
  /// state has no successor.
  void validate() const;

  const VocabularyPtr& vocabulary() const { return vocab_; }
  const BondingPtr& bonding() const { return bonding_; }
  std::size_t num_states() const { return names_.size(); }
  const std::string& name(StateId s) const { return names_.at(s); }
  std::optional<StateId> find(std::string_view name) const;
  PropSet label(StateId s) const { return labels_.at(s); }
  const std::vector<StateId>& initial() const { return initial_; }
  const std::vector<StateId>& successors(StateId s) const { return succ_.at(s); }

 private:
  VocabularyPtr vocab_;
  BondingPtr bonding_;
  std::vector<std::string> names_;
  std::vector<PropSet> labels_;
  std::vector<StateId> initial_;
  std::vector<std::vector<StateId>> succ_;
  std::unordered_map<std::string, StateId> index_;
};

/// Parses the line-oriented system format:
///   atoms p q            compounds low_equiv
///   state s1 {p}         init s1
///   trans s1 s2          bond 2 ({p},{p}) {low_equiv}
SystemModel load_system(std::string_view text);
SystemModel load_system_file(const std::string& path);

/// Automaton over 1-tuples whose language is the set of computations: a
/// fresh initial state, letters carry the destination's label, every state
/// accepts, unreachable states are dropped.
BuchiAutomaton to_buchi(const SystemModel& m);

}  // namespace hyperltl
