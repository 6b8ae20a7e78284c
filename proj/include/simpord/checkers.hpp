// SPDX-License-Identifier: Apache-2.0
#pragma once

// Checkers for three conditions under which a term order is well-founded,
// evaluated on a finite universe of terms:
//
//   1. the order contains the proper-subterm relation;
//   2. f(b) < f(a) implies f(b) <= a_i for some i, or b <_f a;
//   3. a tuple whose components are all well-founded is well-founded for <_f.
//
// A Pass means no counterexample exists inside the universe. It is never a
// proof of the condition over all terms.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "simpord/error.hpp"
#include "simpord/order.hpp"
#include "simpord/term.hpp"
#include "simpord/wfp.hpp"

namespace simpord {

enum class ConditionStatus { Pass, Fail, Inconclusive };

inline const char* to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::Pass: return "pass";
    case ConditionStatus::Fail: return "fail";
    default: return "inconclusive";
  }
}

/// What a Fail witness lists, so it can be fed back through its predicate.
enum class WitnessKind {
  None,
  Subterm,         // [s, t]: s is a proper subterm of t and not s < t
  Decomposition,   // [f(b), f(a)]: f(b) < f(a), no a_i >= f(b), not b <_f a
  ArgCycle,        // [f(c0), f(c1), ...]: c_{i+1} <_f c_i for all i, cyclically
  Irreflexivity,   // [t]: t < t
  Transitivity,    // [x, y, z]: x < y, y < z, not x < z
};

inline const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::Subterm: return "subterm";
    case WitnessKind::Decomposition: return "decomposition";
    case WitnessKind::ArgCycle: return "arg-cycle";
    case WitnessKind::Irreflexivity: return "irreflexivity";
    case WitnessKind::Transitivity: return "transitivity";
    default: return "none";
  }
}

/// Condition ids: 1, 2, 3 for the conditions above; 0 for the proper-order
/// (irreflexive and transitive) check.
struct ConditionReport {
  int condition = 0;
  ConditionStatus status = ConditionStatus::Pass;
  WitnessKind witness_kind = WitnessKind::None;
  std::vector<Term> witness;
  std::string note;
  std::size_t pairs_checked = 0;
  std::size_t universe_size = 0;
  std::size_t budget_used = 0;
  std::optional<std::uint64_t> seed;
  std::size_t unknown_budget = 0;  // condition 3: tuples left Unknown by the budget
  std::size_t unknown_escape = 0;  // condition 3: tuples with predecessors outside the universe
};

using TermTuple = std::vector<Term>;
using ArgOrders = std::map<std::string, OrderOracle<TermTuple>>;

inline constexpr std::uint64_t default_seed = 0x5eedULL;

namespace detail {
inline const OrderOracle<TermTuple>& arg_order_for(const ArgOrders& orders, const FunctionSymbol& f) {
  auto it = orders.find(f.name);
  if (it == orders.end())
    throw Error(ErrorKind::MissingArgOrder, "no argument order supplied for '" + f.name + "'");
  return it->second;
}

inline void require_arg_orders(const ArgOrders& orders, const std::vector<Term>& universe) {
  for (const auto& t : universe)
    if (t.arity() > 0) arg_order_for(orders, t.head());
}

inline const char* bounded_note() { return "no counterexample in universe (bounded check, not a proof)"; }
}  // namespace detail

/// Condition 1. Fail carries the first (t, s) in universe/preorder order.
inline ConditionReport check_subterm_condition(const OrderOracle<Term>& order, const std::vector<Term>& universe) {
  ConditionReport r;
  r.condition = 1;
  r.universe_size = universe.size();
  for (const auto& t : universe) {
    for (const auto& s : proper_subterms(t)) {
      ++r.pairs_checked;
      if (!order.less(s, t)) {
        r.status = ConditionStatus::Fail;
        r.witness_kind = WitnessKind::Subterm;
        r.witness = {s, t};
        r.note = "proper subterm is not below its superterm";
        return r;
      }
    }
  }
  r.note = detail::bounded_note();
  return r;
}

/// Condition 2 over all same-head pairs of the universe.
inline ConditionReport check_decomposition_condition(const OrderOracle<Term>& order, const ArgOrders& arg_orders,
                                                     const std::vector<Term>& universe) {
  detail::require_arg_orders(arg_orders, universe);
  ConditionReport r;
  r.condition = 2;
  r.universe_size = universe.size();
  for (const auto& fb : universe) {
    if (fb.arity() == 0) continue;
    const auto& argord = detail::arg_order_for(arg_orders, fb.head());
    for (const auto& fa : universe) {
      if (!(fa.head() == fb.head())) continue;
      ++r.pairs_checked;
      if (!order.less(fb, fa)) continue;
      bool below_component = false;
      for (const auto& ai : fa.args())
        if (order.less_equal(fb, ai)) {
          below_component = true;
          break;
        }
      if (below_component || argord.less(fb.args(), fa.args())) continue;
      r.status = ConditionStatus::Fail;
      r.witness_kind = WitnessKind::Decomposition;
      r.witness = {fb, fa};
      r.note = "f(b) < f(a) but f(b) is above every a_i and b is not below a in the argument order";
      return r;
    }
  }
  r.note = detail::bounded_note();
  return r;
}

/// Condition 3. The well-founded part of the term order is computed on the
/// universe first; then for every symbol, tuples over the universe whose
/// components are all accessible must be accessible for <_f restricted to
/// universe tuples. A <_f cycle is a hard Fail; budget exhaustion or escapes
/// leave the verdict Inconclusive. `budget` bounds expanded nodes in total.
inline ConditionReport check_lifting_condition(const OrderOracle<Term>& order, const ArgOrders& arg_orders,
                                               const std::vector<Term>& universe, std::size_t budget) {
  detail::require_arg_orders(arg_orders, universe);
  ConditionReport r;
  r.condition = 3;
  r.universe_size = universe.size();
  const std::size_t n = universe.size();

  // W(<) on the universe.
  std::vector<std::vector<std::size_t>> below(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++r.pairs_checked;
      if (order.less(universe[j], universe[i])) below[i].push_back(j);
    }
  std::function<std::vector<std::size_t>(const std::size_t&)> term_preds = [&](const std::size_t& i) {
    return below[i];
  };
  std::vector<std::size_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  auto terms_wf = wfp_compute<std::size_t>(term_preds, ids, budget);
  r.budget_used += terms_wf.visited();
  std::vector<char> hyp(n, 0);
  for (std::size_t i = 0; i < n; ++i) hyp[i] = terms_wf.at(i).kind == Accessibility::Accessible;

  // Symbols in order of first appearance.
  std::vector<FunctionSymbol> symbols;
  for (const auto& t : universe) {
    if (t.arity() == 0) continue;
    bool seen = false;
    for (const auto& f : symbols) seen = seen || f == t.head();
    if (!seen) symbols.push_back(t.head());
  }

  std::optional<std::vector<Term>> first_cycle;
  std::optional<Term> first_bad;
  for (const auto& f : symbols) {
    const auto& argord = detail::arg_order_for(arg_orders, f);
    const std::size_t m = f.arity;
    std::size_t count = 1;
    for (std::size_t i = 0; i < m; ++i) count *= n;
    auto tuple = [&](std::size_t id) {
      TermTuple out(m, universe.front());
      for (std::size_t p = m; p-- > 0;) {
        out[p] = universe[id % n];
        id /= n;
      }
      return out;
    };
    auto satisfies_hypothesis = [&](std::size_t id) {
      for (std::size_t p = 0; p < m; ++p, id /= n)
        if (!hyp[id % n]) return false;
      return true;
    };
    std::vector<TermTuple> tuples;
    tuples.reserve(count);
    for (std::size_t id = 0; id < count; ++id) tuples.push_back(tuple(id));

    std::function<std::vector<std::size_t>(const std::size_t&)> preds = [&](const std::size_t& id) {
      std::vector<std::size_t> out;
      for (std::size_t other = 0; other < count; ++other) {
        ++r.pairs_checked;
        if (argord.less(tuples[other], tuples[id])) out.push_back(other);
      }
      return out;
    };
    std::vector<std::size_t> tuple_ids(count);
    for (std::size_t id = 0; id < count; ++id) tuple_ids[id] = id;
    const std::size_t remaining = budget > r.budget_used ? budget - r.budget_used : 0;
    auto wf = wfp_compute<std::size_t>(preds, tuple_ids, remaining);
    r.budget_used += wf.visited();

    for (std::size_t id = 0; id < count; ++id) {
      if (!satisfies_hypothesis(id)) continue;
      const auto& s = wf.at(id);
      if (s.kind == Accessibility::NonAccessible) {
        if (!first_cycle) {
          std::vector<Term> cycle;
          for (std::size_t c : s.cycle) cycle.emplace_back(f, tuples[c]);
          first_cycle = std::move(cycle);
          first_bad = Term(f, tuples[id]);
        }
      } else if (s.kind == Accessibility::Unknown) {
        if (s.reason == UnknownReason::BudgetExhausted)
          ++r.unknown_budget;
        else
          ++r.unknown_escape;
      }
    }
  }

  if (first_cycle) {
    r.status = ConditionStatus::Fail;
    r.witness_kind = WitnessKind::ArgCycle;
    r.witness = *first_cycle;
    r.note = "argument tuple of " + format_term(*first_bad) +
             " has well-founded components but lies on or above a cycle of the argument order";
  } else if (r.unknown_budget + r.unknown_escape > 0) {
    r.status = ConditionStatus::Inconclusive;
    r.note = std::to_string(r.unknown_budget) + " tuple(s) unclassified (budget exhausted), " +
             std::to_string(r.unknown_escape) + " with predecessors outside the universe";
  } else {
    r.note = "every tuple of well-founded universe terms is well-founded for its argument order, restricted to "
             "universe tuples (bounded check, not a proof)";
  }
  return r;
}

/// Irreflexivity on every element; transitivity on every triple, or on
/// `budget` uniformly sampled triples (fixed seed) when |universe|^3 exceeds it.
inline ConditionReport check_order_properties(const OrderOracle<Term>& order, const std::vector<Term>& universe,
                                              std::size_t budget = 100000, std::uint64_t seed = default_seed) {
  ConditionReport r;
  r.condition = 0;
  r.universe_size = universe.size();
  const std::size_t n = universe.size();
  std::vector<char> lt(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      lt[i * n + j] = order.less(universe[i], universe[j]);
      ++r.pairs_checked;
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (lt[i * n + i]) {
      r.status = ConditionStatus::Fail;
      r.witness_kind = WitnessKind::Irreflexivity;
      r.witness = {universe[i]};
      r.note = "t < t";
      return r;
    }
  }
  auto violates = [&](std::size_t i, std::size_t j, std::size_t k) {
    return lt[i * n + j] && lt[j * n + k] && !lt[i * n + k];
  };
  auto fail = [&](std::size_t i, std::size_t j, std::size_t k) {
    r.status = ConditionStatus::Fail;
    r.witness_kind = WitnessKind::Transitivity;
    r.witness = {universe[i], universe[j], universe[k]};
    r.note = "x < y and y < z but not x < z";
  };
  const double cube = static_cast<double>(n) * n * n;
  if (cube <= static_cast<double>(budget)) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          ++r.budget_used;
          if (violates(i, j, k)) {
            fail(i, j, k);
            return r;
          }
        }
    r.note = "irreflexive and transitive on every triple; " + std::string(detail::bounded_note());
    return r;
  }
  r.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t s = 0; s < budget; ++s) {
    const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
    ++r.budget_used;
    if (violates(i, j, k)) {
      fail(i, j, k);
      return r;
    }
  }
  r.note = "irreflexive; transitive on " + std::to_string(budget) + " sampled triples; " +
           std::string(detail::bounded_note());
  return r;
}

/// Feeds a Fail witness back through the predicate it violates. True when
/// the violation reproduces.
inline bool witness_reproduces(const ConditionReport& r, const OrderOracle<Term>& order,
                               const ArgOrders* arg_orders = nullptr) {
  const auto& w = r.witness;
  switch (r.witness_kind) {
    case WitnessKind::Subterm: {
      if (w.size() != 2) return false;
      bool is_sub = false;
      for (const auto& s : proper_subterms(w[1])) is_sub = is_sub || s == w[0];
      return is_sub && !order.less(w[0], w[1]);
    }
    case WitnessKind::Decomposition: {
      if (w.size() != 2 || !arg_orders || !(w[0].head() == w[1].head()) || w[0].arity() == 0) return false;
      if (!order.less(w[0], w[1])) return false;
      for (const auto& ai : w[1].args())
        if (order.less_equal(w[0], ai)) return false;
      return !detail::arg_order_for(*arg_orders, w[0].head()).less(w[0].args(), w[1].args());
    }
    case WitnessKind::ArgCycle: {
      if (w.empty() || !arg_orders || w[0].arity() == 0) return false;
      const auto& argord = detail::arg_order_for(*arg_orders, w[0].head());
      for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& cur = w[i];
        const auto& pred = w[(i + 1) % w.size()];
        if (!(cur.head() == w[0].head()) || !argord.less(pred.args(), cur.args())) return false;
      }
      return true;
    }
    case WitnessKind::Irreflexivity:
      return w.size() == 1 && order.less(w[0], w[0]);
    case WitnessKind::Transitivity:
      return w.size() == 3 && order.less(w[0], w[1]) && order.less(w[1], w[2]) && !order.less(w[0], w[2]);
    default:
      return false;
  }
}

/// Neighbour generator: every universe term below `t` in `order`.
inline std::function<std::vector<Term>(const Term&)> below_in(std::vector<Term> universe, OrderOracle<Term> order) {
  return [universe = std::move(universe), order = std::move(order)](const Term& t) {
    std::vector<Term> out;
    for (const auto& u : universe)
      if (order.less(u, t)) out.push_back(u);
    return out;
  };
}

/// start > c1 > c2 > ...; length() counts steps, so a lone start has length 0.
struct DescendingChain {
  std::vector<Term> terms;
  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
};

/// Depth-first search for a strictly descending chain from `start`, stopping
/// as soon as one of `max_len` steps exists. Otherwise returns a longest
/// chain found. Exact for strict orders; on cyclic relations terms already
/// on the current path are skipped.
inline DescendingChain search_descending_chain(const OrderOracle<Term>& order, const Term& start,
                                               const std::function<std::vector<Term>(const Term&)>& neighbor_gen,
                                               std::size_t max_len) {
  // longest[t]: a longest chain from t, recorded only when it was not cut by the depth limit.
  std::unordered_map<Term, std::vector<Term>> longest;
  std::unordered_set<Term> on_path;

  std::function<std::vector<Term>(const Term&, std::size_t)> go = [&](const Term& t, std::size_t steps_left) {
    if (auto it = longest.find(t); it != longest.end()) {
      if (it->second.size() - 1 <= steps_left) return it->second;
      return std::vector<Term>(it->second.begin(), it->second.begin() + static_cast<std::ptrdiff_t>(steps_left + 1));
    }
    std::vector<Term> best{t};
    if (steps_left == 0) return best;
    on_path.insert(t);
    bool cut = false;
    for (const auto& next : neighbor_gen(t)) {
      if (on_path.count(next) || !order.less(next, t)) continue;
      auto tail = go(next, steps_left - 1);
      if (tail.size() + 1 > best.size()) {
        best.assign(1, t);
        best.insert(best.end(), tail.begin(), tail.end());
      }
      if (best.size() - 1 == steps_left) {
        cut = true;
        break;
      }
    }
    on_path.erase(t);
    if (!cut) longest[t] = best;
    return best;
  };
  return DescendingChain{go(start, max_len)};
}

}  // namespace simpord
