// SPDX-License-Identifier: Apache-2.0
#pragma once

// Order oracles and their lexicographic and multiset extensions.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "simpord/error.hpp"

namespace simpord {

/// A strict-less-than decision procedure. Nothing is assumed about it
/// (irreflexivity, transitivity); the checkers test those properties.
template <typename T>
struct OrderOracle {
  std::function<bool(const T&, const T&)> lt;
  std::function<bool(const T&, const T&)> eq = [](const T& a, const T& b) { return a == b; };

  bool less(const T& a, const T& b) const { return lt(a, b); }
  bool less_equal(const T& a, const T& b) const { return lt(a, b) || eq(a, b); }
};

/// Strictly below at the first position (left to right) where the tuples differ.
template <typename T>
bool lex_lt(const OrderOracle<T>& base, std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::LengthMismatch,
                "tuples of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (base.eq(a[i], b[i])) continue;
    return base.lt(a[i], b[i]);
  }
  return false;
}

template <typename T>
bool lex_lt(const OrderOracle<T>& base, const std::vector<T>& a, const std::vector<T>& b) {
  return lex_lt(base, std::span<const T>(a), std::span<const T>(b));
}

/// Closed form for pairs: some t_i < s_j with the other t below-or-equal the
/// other s, i.e. exists i, j in {0,1}: t_i < s_j and t_{1-i} <= s_{1-j}.
template <typename T>
bool pair_multiset_lt(const OrderOracle<T>& base, std::span<const T> t, std::span<const T> s) {
  if (t.size() != 2 || s.size() != 2)
    throw Error(ErrorKind::LengthMismatch, "pair multiset comparison needs two pairs");
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (base.less(t[i], s[j]) && base.less_equal(t[1 - i], s[1 - j])) return true;
  return false;
}

template <typename T>
bool pair_multiset_lt(const OrderOracle<T>& base, const std::vector<T>& t, const std::vector<T>& s) {
  return pair_multiset_lt(base, std::span<const T>(t), std::span<const T>(s));
}

/// Dershowitz-Manna: cancel equal elements pairwise; then `b` must keep
/// something and every leftover of `a` must lie below some leftover of `b`.
template <typename T>
bool dm_multiset_lt(const OrderOracle<T>& base, std::vector<T> a, std::vector<T> b) {
  for (std::size_t i = 0; i < a.size();) {
    bool cancelled = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (base.eq(a[i], b[j])) {
        a.erase(a.begin() + static_cast<std::ptrdiff_t>(i));
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(j));
        cancelled = true;
        break;
      }
    }
    if (!cancelled) ++i;
  }
  if (b.empty()) return false;
  for (const auto& x : a) {
    bool dominated = false;
    for (const auto& y : b)
      if (base.less(x, y)) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  return true;
}

/// Lexicographic extension as an oracle over equal-length tuples.
template <typename T>
OrderOracle<std::vector<T>> lex_extension(OrderOracle<T> base) {
  OrderOracle<std::vector<T>> out;
  out.lt = [base](const std::vector<T>& a, const std::vector<T>& b) { return lex_lt(base, a, b); };
  out.eq = [base](const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!base.eq(a[i], b[i])) return false;
    return true;
  };
  return out;
}

/// Pair multiset extension as an oracle over 2-tuples.
template <typename T>
OrderOracle<std::vector<T>> pair_multiset_extension(OrderOracle<T> base) {
  OrderOracle<std::vector<T>> out;
  out.lt = [base](const std::vector<T>& a, const std::vector<T>& b) { return pair_multiset_lt(base, a, b); };
  out.eq = [base](const std::vector<T>& a, const std::vector<T>& b) {
    return a.size() == 2 && b.size() == 2 &&
           ((base.eq(a[0], b[0]) && base.eq(a[1], b[1])) || (base.eq(a[0], b[1]) && base.eq(a[1], b[0])));
  };
  return out;
}

/// Swaps the arguments of `lt`.
template <typename T>
OrderOracle<T> converse(OrderOracle<T> base) {
  OrderOracle<T> out = base;
  out.lt = [lt = std::move(base.lt)](const T& a, const T& b) { return lt(b, a); };
  return out;
}

}  // namespace simpord
