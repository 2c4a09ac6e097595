#pragma once

// Template definitions for buchi.hpp.

#include <sstream>
#include <stdexcept>

namespace hyperltl {

namespace detail {

using Adjacency = std::vector<std::vector<StateId>>;

inline constexpr std::uint32_t kNoComponent = ~std::uint32_t{0};

/// Strongly connected components (Tarjan) of the nodes reachable from
/// `roots`, or of all nodes when `roots` is empty.  Component ids come out in
/// reverse topological order; unvisited nodes get kNoComponent.
std::vector<std::uint32_t> scc_ids(const Adjacency& adj, std::uint32_t& count, const std::vector<StateId>& roots = {});

std::vector<bool> cyclic_nodes(const Adjacency& adj, const std::vector<std::uint32_t>& comp, std::uint32_t count);

/// Whether some accepting node on a cycle is reachable from `initial`.
bool has_reachable_accepting_cycle(const Adjacency& adj, const std::vector<StateId>& initial,
                                   const std::vector<bool>& accepting);

}  // namespace detail

inline std::string format_label(const Vocabulary& vocab, const Letter& l) { return format_letter(vocab, l); }

template <class Label>
bool accepts(const BasicBuchi<Label>& a, const LassoWord& w) {
  if (w.cycle.empty()) throw std::invalid_argument("lasso word with an empty cycle");
  if (w.arity() != a.alphabet.arity) {
    throw std::invalid_argument("word of arity " + std::to_string(w.arity()) + " for an automaton of arity " +
                                std::to_string(a.alphabet.arity));
  }
  const std::size_t len = w.prefix.size() + w.cycle.size();
  // Only the product nodes (q, t) reachable from the initial states are
  // built; node (q, t) reads the letter at position t from state q.
  std::vector<StateId> id(a.num_states() * len, detail::kNoComponent);
  std::vector<std::size_t> node_of;
  std::vector<StateId> init;
  auto get = [&](std::size_t key) {
    if (id[key] == detail::kNoComponent) {
      id[key] = static_cast<StateId>(node_of.size());
      node_of.push_back(key);
    }
    return id[key];
  };
  for (StateId q : a.initial) init.push_back(get(q * len));
  std::vector<std::vector<std::int8_t>> ok(len);
  detail::Adjacency adj;
  std::vector<bool> acc;
  for (std::size_t i = 0; i < node_of.size(); ++i) {
    const std::size_t q = node_of[i] / len, t = node_of[i] % len;
    const std::size_t next = t + 1 < len ? t + 1 : w.prefix.size();
    auto& cache = ok[t];
    if (cache.empty()) cache.assign(a.labels.size(), -1);
    std::vector<StateId> succ;
    for (const auto& e : a.out[q]) {
      auto& m = cache[e.label];
      if (m < 0) m = a.labels[e.label].matches(w.at(t)) ? 1 : 0;
      if (m) succ.push_back(get(e.dst * len + next));
    }
    adj.push_back(std::move(succ));
    acc.push_back(a.accepting[q]);
  }
  return detail::has_reachable_accepting_cycle(adj, init, acc);
}

template <class Label>
std::string dump(const BasicBuchi<Label>& a) {
  std::ostringstream os;
  os << "arity " << a.alphabet.arity << "\n";
  for (StateId s = 0; s < a.num_states(); ++s) {
    os << "state " << s;
    if (!a.names[s].empty()) os << " # " << a.names[s];
    os << "\n";
  }
  os << "init";
  for (StateId s : a.initial) os << " " << s;
  os << "\naccept";
  for (StateId s = 0; s < a.num_states(); ++s) {
    if (a.accepting[s]) os << " " << s;
  }
  os << "\n";
  for (StateId s = 0; s < a.num_states(); ++s) {
    for (const auto& e : a.out[s]) {
      os << "trans " << s << " " << format_label(*a.alphabet.vocabulary, a.labels[e.label]) << " " << e.dst << "\n";
    }
  }
  return os.str();
}

}  // namespace hyperltl
