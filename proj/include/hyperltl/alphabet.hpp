#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hyperltl {

/// A set of propositions, as a bitmask over a Vocabulary.
class PropSet {
 public:
  constexpr PropSet() = default;
  constexpr explicit PropSet(std::uint64_t bits) : bits_(bits) {}
  static constexpr PropSet single(std::size_t index) { return PropSet(std::uint64_t{1} << index); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t index) const { return (bits_ >> index) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool intersects(PropSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool includes(PropSet o) const { return (bits_ & o.bits_) == o.bits_; }
  int size() const { return std::popcount(bits_); }

  constexpr PropSet& operator|=(PropSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend constexpr PropSet operator|(PropSet a, PropSet b) { return PropSet(a.bits_ | b.bits_); }
  friend constexpr PropSet operator&(PropSet a, PropSet b) { return PropSet(a.bits_ & b.bits_); }
  friend constexpr bool operator==(PropSet, PropSet) = default;
  friend constexpr auto operator<=>(PropSet, PropSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Names of the propositions a model talks about.  Atoms come first, then
/// compound names that are not atoms, then the reserved truth atom.  Atom
/// sets and compound sets share this indexing, so B1 = identity is free.
class Vocabulary {
 public:
  static constexpr std::size_t kMaxNames = 64;

  Vocabulary(std::vector<std::string> atoms, std::vector<std::string> compounds);

  std::size_t num_atoms() const { return num_atoms_; }
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;
  bool is_atom(std::size_t i) const { return i < num_atoms_; }
  std::size_t true_index() const { return names_.size() - 1; }
  PropSet atom_universe() const;

  PropSet set(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(PropSet s) const;
  /// "{a, b}" with names in sorted order.
  std::string format(PropSet s) const;

 private:
  std::vector<std::string> names_;
  std::size_t num_atoms_;
  std::unordered_map<std::string, std::size_t> index_;
};

using VocabularyPtr = std::shared_ptr<const Vocabulary>;

}  // namespace hyperltl
