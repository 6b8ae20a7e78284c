// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "simpord/error.hpp"
#include "simpord/order.hpp"
#include "simpord/term.hpp"

namespace simpord {

/// Strict total order on a signature's symbols, lowest first.
class Precedence {
 public:
  Precedence(const Signature& sig, const std::vector<std::string>& lowest_first) : sig_(sig) {
    if (lowest_first.size() != sig.size())
      throw Error(ErrorKind::InvalidPrecedence, "precedence must list each of the " + std::to_string(sig.size()) +
                                                    " symbols exactly once");
    rank_.assign(sig.size(), sig.size());
    for (std::size_t r = 0; r < lowest_first.size(); ++r) {
      auto i = sig.index_of(lowest_first[r]);
      if (!i) throw Error(ErrorKind::InvalidPrecedence, "'" + lowest_first[r] + "' is not in the signature");
      if (rank_[*i] != sig.size()) throw Error(ErrorKind::InvalidPrecedence, "'" + lowest_first[r] + "' listed twice");
      rank_[*i] = r;
    }
  }

  const Signature& signature() const { return sig_; }

  /// Rank of a symbol, 0 = lowest. Throws WrongSignature for foreign symbols.
  std::size_t rank(const FunctionSymbol& f) const {
    auto i = sig_.index_of(f.name);
    if (!i || sig_.at(*i).arity != f.arity)
      throw Error(ErrorKind::WrongSignature, "'" + f.name + "' is not in the precedence's signature");
    return rank_[*i];
  }

  std::vector<std::string> lowest_first() const {
    std::vector<std::string> out(sig_.size());
    for (std::size_t i = 0; i < sig_.size(); ++i) out[rank_[i]] = sig_.at(i).name;
    return out;
  }

 private:
  Signature sig_;
  std::vector<std::size_t> rank_;
};

namespace detail {
inline bool lpo_lt_unchecked(const Precedence& prec, const Term& s, const Term& t) {
  // s <= t_j for some argument of t.
  for (const auto& tj : t.args())
    if (s == tj || lpo_lt_unchecked(prec, s, tj)) return true;

  auto all_args_below = [&] {
    for (const auto& si : s.args())
      if (!lpo_lt_unchecked(prec, si, t)) return false;
    return true;
  };

  const std::size_t rs = prec.rank(s.head()), rt = prec.rank(t.head());
  if (rs < rt) return all_args_below();
  if (rs == rt) {
    for (std::size_t i = 0; i < s.arity(); ++i) {
      if (s.args()[i] == t.args()[i]) continue;
      return lpo_lt_unchecked(prec, s.args()[i], t.args()[i]) && all_args_below();
    }
  }
  return false;
}

inline void require_precedence(const Precedence& prec, const Term& t) {
  if (!uses_signature(t, prec.signature()))
    throw Error(ErrorKind::WrongSignature, format_term(t) + " uses symbols outside the precedence");
}
}  // namespace detail

/// Ground lexicographic path order: s < t iff s <= some argument of t, or
/// head(s) < head(t) and every argument of s is < t, or the heads agree, the
/// arguments of s are lexicographically below those of t and every argument
/// of s is < t.
inline bool lpo_lt(const Precedence& prec, const Term& s, const Term& t) {
  detail::require_precedence(prec, s);
  detail::require_precedence(prec, t);
  return detail::lpo_lt_unchecked(prec, s, t);
}

inline OrderOracle<Term> lpo_order(Precedence prec) {
  OrderOracle<Term> out;
  out.lt = [prec = std::move(prec)](const Term& s, const Term& t) { return lpo_lt(prec, s, t); };
  return out;
}

}  // namespace simpord
