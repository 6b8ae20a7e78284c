// SPDX-License-Identifier: Apache-2.0
#pragma once

// Ground terms over F_k = {f_0, ..., f_k, g, 1} as ordinal notations.
//
//   o(1)                 = 1
//   o(g(t, s))           = o(t) # o(s)
//   o(f_i(t_i, ..., t_0)) = t(o(t_i), ..., o(t_0))
//
// The first argument of f_i sits at the highest exponent. t < s on terms
// iff o(t) < o(s).

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "simpord/error.hpp"
#include "simpord/order.hpp"
#include "simpord/ordinal.hpp"
#include "simpord/term.hpp"

namespace simpord {

struct EmbeddingContext {
  std::size_t k = 0;
  Signature signature;

  const FunctionSymbol& f(std::size_t i) const { return signature.at(i); }
  const FunctionSymbol& g() const { return signature.at(k + 1); }
  const FunctionSymbol& unit() const { return signature.at(k + 2); }
};

/// Symbols f_0..f_k (ar(f_i) = i+1), then g (binary), then the constant 1.
inline EmbeddingContext build_context(std::size_t k) {
  std::vector<std::pair<std::string, std::size_t>> symbols;
  for (std::size_t i = 0; i <= k; ++i) symbols.emplace_back("f_" + std::to_string(i), i + 1);
  symbols.emplace_back("g", 2);
  symbols.emplace_back("1", 0);
  return EmbeddingContext{k, make_signature(symbols)};
}

namespace detail {
inline Ordinal denote_unchecked(const EmbeddingContext& ctx, const Term& t) {
  const auto idx = *ctx.signature.index_of(t.head().name);
  if (idx == ctx.k + 2) return one();
  if (idx == ctx.k + 1) return natural_sum(denote_unchecked(ctx, t.args()[0]), denote_unchecked(ctx, t.args()[1]));
  std::vector<Ordinal> coeffs;
  coeffs.reserve(t.arity());
  for (const auto& a : t.args()) coeffs.push_back(denote_unchecked(ctx, a));
  return theta(std::move(coeffs));
}

inline void require_signature(const EmbeddingContext& ctx, const Term& t) {
  if (!uses_signature(t, ctx.signature))
    throw Error(ErrorKind::WrongSignature, format_term(t) + " is not a term over F_" + std::to_string(ctx.k));
}
}  // namespace detail

inline Ordinal denote(const EmbeddingContext& ctx, const Term& t) {
  detail::require_signature(ctx, t);
  return detail::denote_unchecked(ctx, t);
}

inline bool theta_order_lt(const EmbeddingContext& ctx, const Term& t, const Term& s) {
  return compare(denote(ctx, t), denote(ctx, s)) == Comparison::Less;
}

/// The induced order on terms. Equality is equality of denotations, so the
/// derived <= is "o(t) <= o(s)". Denotations are cached per oracle.
inline OrderOracle<Term> theta_order(const EmbeddingContext& ctx) {
  struct Cache {
    std::mutex mutex;
    std::unordered_map<Term, Ordinal> values;
  };
  auto cache = std::make_shared<Cache>();
  auto value = [ctx, cache](const Term& t) {
    {
      std::lock_guard lock(cache->mutex);
      auto it = cache->values.find(t);
      if (it != cache->values.end()) return it->second;
    }
    Ordinal o = denote(ctx, t);
    std::lock_guard lock(cache->mutex);
    cache->values.emplace(t, o);
    return o;
  };
  OrderOracle<Term> out;
  out.lt = [value](const Term& a, const Term& b) { return compare(value(a), value(b)) == Comparison::Less; };
  out.eq = [value](const Term& a, const Term& b) { return compare(value(a), value(b)) == Comparison::Equal; };
  return out;
}

/// Argument order for a symbol of F_k: lexicographic over the term order for
/// f_i, the pair multiset extension for g. The constant has none.
inline OrderOracle<std::vector<Term>> arg_order(const EmbeddingContext& ctx, const OrderOracle<Term>& base,
                                                const std::string& symbol) {
  auto idx = ctx.signature.index_of(symbol);
  if (!idx) throw Error(ErrorKind::WrongSignature, "'" + symbol + "' is not in F_" + std::to_string(ctx.k));
  if (*idx == ctx.k + 2) throw Error(ErrorKind::NoArgOrder, "the constant 1 has no argument order");
  if (*idx == ctx.k + 1) return pair_multiset_extension(base);
  return lex_extension(base);
}

inline OrderOracle<std::vector<Term>> arg_order(const EmbeddingContext& ctx, const std::string& symbol) {
  return arg_order(ctx, theta_order(ctx), symbol);
}

/// arg_order for every non-constant symbol, sharing one term-order cache.
inline std::map<std::string, OrderOracle<std::vector<Term>>> arg_orders(const EmbeddingContext& ctx) {
  auto base = theta_order(ctx);
  std::map<std::string, OrderOracle<std::vector<Term>>> out;
  for (const auto& f : ctx.signature.symbols())
    if (f.arity > 0) out.emplace(f.name, arg_order(ctx, base, f.name));
  return out;
}

/// A term whose denotation is plus_map(a): 0 becomes the constant 1, a sum
/// c_1 + c_2 + ... + c_m becomes g(c_1, c_2 + ... + c_m) folded rightwards,
/// and a theta-term with a vector of length i+1 becomes f_i of its coefficients.
inline Term term_of(const EmbeddingContext& ctx, const Ordinal& a) {
  if (!a.canonical()) throw Error(ErrorKind::NonCanonicalInput, "term_of requires a canonical notation");
  if (max_vector_length(a) > ctx.k + 1)
    throw Error(ErrorKind::VectorTooLong, format_ordinal(a) + " has a theta-vector longer than " +
                                              std::to_string(ctx.k + 1));
  if (a.is_zero()) return Term::constant(ctx.unit());

  auto of_theta = [&ctx](const Theta& th) {
    std::vector<Term> args;
    args.reserve(th.length());
    for (const auto& c : th.coeffs()) args.push_back(term_of(ctx, c));
    return Term(ctx.f(th.length() - 1), std::move(args));
  };
  const auto& comps = a.components();
  Term acc = of_theta(comps.back());
  for (std::size_t i = comps.size() - 1; i-- > 0;) acc = Term(ctx.g(), {of_theta(comps[i]), acc});
  return acc;
}

}  // namespace simpord
