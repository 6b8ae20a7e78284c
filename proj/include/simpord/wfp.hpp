// SPDX-License-Identifier: Apache-2.0
#pragma once

// Bounded well-founded part of a relation given by a predecessor function.
//
// Only a finite fragment (the universe) is ever examined, so the result is
// three-valued: a node is Accessible when everything below it has been seen
// and is accessible, NonAccessible when it lies on or above a cycle inside
// the fragment, and Unknown when a predecessor escapes the fragment or the
// visit budget ran out first.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace simpord {

enum class Accessibility { Accessible, NonAccessible, Unknown };

enum class UnknownReason { None, BudgetExhausted, PredecessorOutsideUniverse };

inline const char* to_string(Accessibility a) {
  switch (a) {
    case Accessibility::Accessible: return "accessible";
    case Accessibility::NonAccessible: return "non-accessible";
    default: return "unknown";
  }
}

inline const char* to_string(UnknownReason r) {
  switch (r) {
    case UnknownReason::BudgetExhausted: return "budget exhausted";
    case UnknownReason::PredecessorOutsideUniverse: return "predecessor outside universe";
    default: return "none";
  }
}

template <typename Node>
struct WfpStatus {
  Accessibility kind = Accessibility::Unknown;
  std::size_t rank = 0;                 // Accessible only
  std::vector<Node> cycle;              // NonAccessible: c0 <- c1 <- ... <- c0, each entry a predecessor of the one before
  std::optional<Node> via;              // NonAccessible above a cycle: the non-accessible predecessor
  UnknownReason reason = UnknownReason::None;
};

template <typename Node, typename Hash = std::hash<Node>>
class WfpResult {
 public:
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<WfpStatus<Node>>& statuses() const { return status_; }

  const WfpStatus<Node>& at(const Node& n) const { return status_.at(index_.at(n)); }
  bool contains(const Node& n) const { return index_.count(n) != 0; }

  /// Nodes expanded (predecessor function evaluated).
  std::size_t visited() const { return visited_; }

  std::size_t count(Accessibility kind) const {
    return static_cast<std::size_t>(std::count_if(status_.begin(), status_.end(),
                                                  [&](const WfpStatus<Node>& s) { return s.kind == kind; }));
  }

 private:
  template <typename N, typename H>
  friend WfpResult<N, H> wfp_compute(const std::function<std::vector<N>(const N&)>&, const std::vector<N>&,
                                     std::size_t);

  std::vector<Node> nodes_;
  std::vector<WfpStatus<Node>> status_;
  std::unordered_map<Node, std::size_t, Hash> index_;
  std::size_t visited_ = 0;
};

/// Classifies every universe node. At most `budget` nodes are expanded, in
/// universe order; the rest are Unknown(BudgetExhausted). Ranks are heights:
/// 0 with no predecessors, otherwise 1 + the largest predecessor rank.
template <typename Node, typename Hash = std::hash<Node>>
WfpResult<Node, Hash> wfp_compute(const std::function<std::vector<Node>(const Node&)>& predecessors,
                                  const std::vector<Node>& universe, std::size_t budget) {
  WfpResult<Node, Hash> result;
  for (const auto& n : universe) {
    if (result.index_.emplace(n, result.nodes_.size()).second) result.nodes_.push_back(n);
  }
  const std::size_t n = result.nodes_.size();
  result.status_.resize(n);

  // Expand.
  std::vector<std::vector<std::size_t>> preds(n);
  std::vector<char> expanded(n, 0), escapes(n, 0);
  const std::size_t limit = std::min(budget, n);
  for (std::size_t i = 0; i < limit; ++i) {
    expanded[i] = 1;
    for (const auto& p : predecessors(result.nodes_[i])) {
      auto it = result.index_.find(p);
      if (it == result.index_.end()) {
        escapes[i] = 1;
      } else {
        preds[i].push_back(it->second);
      }
    }
  }
  result.visited_ = limit;

  // Strongly connected components over the expanded part (iterative Tarjan).
  // Components come out predecessors-first, so each can be settled from
  // already-settled predecessors.
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order(n, unset), low(n, 0), comp(n, unset);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (!expanded[root] || order[root] != unset) continue;
    std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
    order[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next < preds[v].size()) {
        std::size_t w = preds[v][next++];
        if (!expanded[w]) continue;
        if (order[w] == unset) {
          order[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], order[w]);
        }
        continue;
      }
      if (low[v] == order[v]) {
        std::vector<std::size_t> members;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = components.size();
          members.push_back(w);
        } while (w != v);
        components.push_back(std::move(members));
      }
      const std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
    }
  }

  auto& status = result.status_;
  for (std::size_t i = 0; i < n; ++i) {
    if (!expanded[i]) {
      status[i].kind = Accessibility::Unknown;
      status[i].reason = UnknownReason::BudgetExhausted;
    }
  }

  // Shortest cycle through `start` inside its component, as node indices.
  auto cycle_through = [&](std::size_t start) {
    const std::size_t c = comp[start];
    std::unordered_map<std::size_t, std::size_t> parent;
    std::vector<std::size_t> frontier{start};
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t v : frontier) {
        for (std::size_t w : preds[v]) {
          if (!expanded[w] || comp[w] != c) continue;
          if (w == start) {
            std::vector<std::size_t> path{v};
            while (path.back() != start) path.push_back(parent.at(path.back()));
            std::reverse(path.begin(), path.end());
            return path;
          }
          if (parent.emplace(w, v).second) next.push_back(w);
        }
      }
      frontier = std::move(next);
    }
    return std::vector<std::size_t>{};
  };

  for (const auto& members : components) {
    const bool cyclic = members.size() > 1 || std::find(preds[members[0]].begin(), preds[members[0]].end(),
                                                        members[0]) != preds[members[0]].end();
    if (cyclic) {
      for (std::size_t v : members) {
        status[v].kind = Accessibility::NonAccessible;
        for (std::size_t w : cycle_through(v)) status[v].cycle.push_back(result.nodes_[w]);
      }
      continue;
    }
    const std::size_t v = members[0];
    auto& s = status[v];
    std::optional<std::size_t> bad, unknown;
    std::size_t rank = 0;
    bool any_pred = false;
    for (std::size_t w : preds[v]) {
      const auto& sw = status[w];
      if (sw.kind == Accessibility::NonAccessible) {
        if (!bad) bad = w;
      } else if (sw.kind == Accessibility::Unknown) {
        if (!unknown) unknown = w;
      } else {
        rank = std::max(rank, sw.rank + 1);
        any_pred = true;
      }
    }
    if (bad) {
      s.kind = Accessibility::NonAccessible;
      s.via = result.nodes_[*bad];
      s.cycle = status[*bad].cycle;
    } else if (escapes[v]) {
      s.kind = Accessibility::Unknown;
      s.reason = UnknownReason::PredecessorOutsideUniverse;
    } else if (unknown) {
      s.kind = Accessibility::Unknown;
      s.reason = status[*unknown].reason;
    } else {
      s.kind = Accessibility::Accessible;
      s.rank = any_pred ? rank : 0;
    }
  }
  return result;
}

/// Exact well-founded part of a finite relation given as (pred, node) edges:
/// repeatedly admit nodes whose predecessors are all admitted.
template <typename Node, typename Hash = std::hash<Node>>
std::unordered_set<Node, Hash> accessible_brute(const std::vector<std::pair<Node, Node>>& edges,
                                                const std::vector<Node>& extra_nodes = {}) {
  std::vector<Node> nodes;
  std::unordered_set<Node, Hash> seen;
  auto note = [&](const Node& x) {
    if (seen.insert(x).second) nodes.push_back(x);
  };
  for (const auto& [p, x] : edges) {
    note(p);
    note(x);
  }
  for (const auto& x : extra_nodes) note(x);

  std::unordered_set<Node, Hash> admitted;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& x : nodes) {
      if (admitted.count(x)) continue;
      bool ready = true;
      for (const auto& [p, y] : edges)
        if (y == x && !admitted.count(p)) {
          ready = false;
          break;
        }
      if (ready) {
        admitted.insert(x);
        changed = true;
      }
    }
  }
  return admitted;
}

}  // namespace simpord
