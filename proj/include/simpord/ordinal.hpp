// SPDX-License-Identifier: Apache-2.0
#pragma once

// Ordinal notations below theta(Omega^(k+1)).
//
// A notation is either zero or a natural sum of theta-terms kept sorted
// nonincreasingly. A theta-term carries a coefficient vector
// (c_i, ..., c_0), highest exponent first, and stands for
// theta(Omega^i c_i + ... + Omega^0 c_0). The notation 1 is theta(0).
//
// Text form: ord := summand ('+' summand)*, summand := '0' | '1' | 't(' ord (',' ord)* ')'.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <iterator>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "simpord/detail/cursor.hpp"
#include "simpord/error.hpp"

namespace simpord {

enum class Comparison { Less, Equal, Greater };

inline Comparison reverse(Comparison c) {
  switch (c) {
    case Comparison::Less: return Comparison::Greater;
    case Comparison::Greater: return Comparison::Less;
    default: return Comparison::Equal;
  }
}

inline const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "LESS";
    case Comparison::Equal: return "EQUAL";
    default: return "GREATER";
  }
}

class Theta;

namespace detail {
struct Comparer;
}

/// Immutable notation handle. Copies share structure.
class Ordinal {
 public:
  /// Zero.
  Ordinal() = default;

  /// Wraps components as given. No sorting; canonical() reports the result.
  static Ordinal raw_sum(std::vector<Theta> components);

  bool is_zero() const { return rep_ == nullptr; }
  bool is_theta() const { return rep_ && rep_->components.size() == 1; }
  bool is_one() const;
  const std::vector<Theta>& components() const;
  const Theta& as_theta() const { return components().front(); }

  bool canonical() const { return rep_ == nullptr || rep_->canonical; }

  /// Constructor nodes: 0 counts 1, a theta-term counts 1 plus its nonzero
  /// coefficients (zero coefficients are positional), a sum counts its parts.
  std::size_t nodes() const { return rep_ ? rep_->nodes : 1; }

  bool same_node(const Ordinal& other) const { return rep_ == other.rep_; }

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend struct detail::Comparer;

 private:
  struct Rep {
    std::vector<Theta> components;
    bool canonical;
    std::size_t nodes;
  };
  std::shared_ptr<const Rep> rep_;
};

class Theta {
 public:
  /// Keeps the vector exactly as given. No leading-zero stripping.
  static Theta raw(std::vector<Ordinal> coeffs);

  const std::vector<Ordinal>& coeffs() const { return rep_->coeffs; }
  std::size_t length() const { return rep_->coeffs.size(); }
  bool canonical() const { return rep_->canonical; }
  std::size_t nodes() const { return rep_->nodes; }

  bool same_node(const Theta& other) const { return rep_ == other.rep_; }

  friend bool operator==(const Theta& a, const Theta& b) {
    return a.rep_ == b.rep_ || (a.rep_->nodes == b.rep_->nodes && a.rep_->coeffs == b.rep_->coeffs);
  }
  friend struct detail::Comparer;

 private:
  Theta() = default;

  struct Rep {
    std::vector<Ordinal> coeffs;
    bool canonical;
    std::size_t nodes;
  };
  std::shared_ptr<const Rep> rep_;
};

inline const std::vector<Theta>& Ordinal::components() const {
  static const std::vector<Theta> none;
  return rep_ ? rep_->components : none;
}

inline bool operator==(const Ordinal& a, const Ordinal& b) {
  if (a.rep_ == b.rep_) return true;
  if (!a.rep_ || !b.rep_) return false;
  return a.rep_->nodes == b.rep_->nodes && a.rep_->components == b.rep_->components;
}

namespace detail {

// Comparison on the shared representation. Zero is a null Ordinal rep.
struct Comparer {
  using ORep = Ordinal::Rep;
  using TRep = Theta::Rep;

  static const ORep* rep(const Ordinal& o) { return o.rep_.get(); }
  static const TRep* rep(const Theta& t) { return t.rep_.get(); }

  // A theta-term against an arbitrary notation: the term is a one-component sum.
  static Comparison theta_vs(const TRep* a, const ORep* b) {
    if (!b) return Comparison::Greater;
    Comparison head = thetas(a, rep(b->components.front()));
    if (head != Comparison::Equal) return head;
    return b->components.size() == 1 ? Comparison::Equal : Comparison::Less;
  }

  // True when some coefficient of `a` from position `from` on is >= theta(b).
  static bool reaches(const TRep* a, std::size_t from, const TRep* b) {
    for (std::size_t j = from; j < a->coeffs.size(); ++j) {
      const ORep* aj = rep(a->coeffs[j]);
      if (aj && theta_vs(b, aj) != Comparison::Greater) return true;
    }
    return false;
  }

  static Comparison thetas(const TRep* a, const TRep* b) {
    if (a == b) return Comparison::Equal;

    // theta(a) < theta(b) iff a <= b_j for some coefficient b_j of b, or
    // every a_j is below theta(b) and a <_lx b. Each coefficient is below its
    // own term, so the lexicographic verdict fixes which coefficient scan can
    // overturn it, and only coefficients after the first difference can.
    const std::size_t la = a->coeffs.size(), lb = b->coeffs.size();
    const std::size_t len = std::max(la, lb);
    Comparison lex = Comparison::Equal;
    std::size_t p = 0;
    for (; p < len; ++p) {
      const ORep* x = p + la >= len ? rep(a->coeffs[p + la - len]) : nullptr;
      const ORep* y = p + lb >= len ? rep(b->coeffs[p + lb - len]) : nullptr;
      lex = sums(x, y);
      if (lex != Comparison::Equal) break;
    }
    if (lex == Comparison::Equal) return Comparison::Equal;
    // Translate the padded position of the first difference into each vector.
    const std::size_t next = p + 1;
    if (lex == Comparison::Less) {
      const std::size_t from = next + la > len ? next + la - len : 0;
      return reaches(a, from, b) ? Comparison::Greater : Comparison::Less;
    }
    const std::size_t from = next + lb > len ? next + lb - len : 0;
    return reaches(b, from, a) ? Comparison::Less : Comparison::Greater;
  }

  static Comparison sums(const ORep* a, const ORep* b) {
    if (a == b) return Comparison::Equal;
    if (!a) return Comparison::Less;
    if (!b) return Comparison::Greater;
    const auto& ca = a->components;
    const auto& cb = b->components;
    const std::size_t n = std::min(ca.size(), cb.size());
    for (std::size_t i = 0; i < n; ++i) {
      Comparison c = thetas(rep(ca[i]), rep(cb[i]));
      if (c != Comparison::Equal) return c;
    }
    if (ca.size() == cb.size()) return Comparison::Equal;
    return ca.size() < cb.size() ? Comparison::Less : Comparison::Greater;
  }
};

inline Comparison compare_unchecked(const Ordinal& a, const Ordinal& b) {
  return Comparer::sums(Comparer::rep(a), Comparer::rep(b));
}

inline Comparison compare_unchecked(const Theta& a, const Theta& b) {
  return Comparer::thetas(Comparer::rep(a), Comparer::rep(b));
}

}  // namespace detail

inline Theta Theta::raw(std::vector<Ordinal> coeffs) {
  std::size_t nodes = 1;
  bool ok = !coeffs.empty();
  for (const auto& c : coeffs) {
    if (!c.is_zero()) nodes += c.nodes();
    ok = ok && c.canonical();
  }
  if (ok && coeffs.size() > 1 && coeffs.front().is_zero()) ok = false;
  Theta t;
  t.rep_ = std::make_shared<const Rep>(Rep{std::move(coeffs), ok, nodes});
  return t;
}

inline Ordinal Ordinal::raw_sum(std::vector<Theta> components) {
  Ordinal o;
  if (components.empty()) return o;
  std::size_t nodes = 0;
  bool ok = true;
  for (const auto& c : components) {
    nodes += c.nodes();
    ok = ok && c.canonical();
  }
  for (std::size_t i = 0; ok && i + 1 < components.size(); ++i)
    ok = detail::compare_unchecked(components[i], components[i + 1]) != Comparison::Less;
  o.rep_ = std::make_shared<const Rep>(Rep{std::move(components), ok, nodes});
  return o;
}

inline bool Ordinal::is_one() const {
  return is_theta() && as_theta().length() == 1 && as_theta().coeffs().front().is_zero();
}

inline Ordinal zero() { return Ordinal{}; }

inline Ordinal one() { return Ordinal::raw_sum({Theta::raw({Ordinal{}})}); }

/// Three-way comparison of canonical notations.
inline Comparison compare(const Ordinal& a, const Ordinal& b) {
  if (!a.canonical() || !b.canonical())
    throw Error(ErrorKind::NonCanonicalInput, "compare requires canonical notations");
  return detail::compare_unchecked(a, b);
}

inline bool less(const Ordinal& a, const Ordinal& b) { return compare(a, b) == Comparison::Less; }

inline bool less_equal(const Ordinal& a, const Ordinal& b) { return compare(a, b) != Comparison::Greater; }

/// Canonical theta-term; leading zero coefficients are stripped.
inline Ordinal theta(std::vector<Ordinal> coeffs) {
  if (coeffs.empty()) throw Error(ErrorKind::NonCanonicalInput, "theta needs at least one coefficient");
  for (const auto& c : coeffs)
    if (!c.canonical()) throw Error(ErrorKind::NonCanonicalInput, "theta coefficient is not canonical");
  auto first = std::find_if(coeffs.begin(), coeffs.end(), [](const Ordinal& c) { return !c.is_zero(); });
  if (first == coeffs.end()) first = coeffs.end() - 1;
  coeffs.erase(coeffs.begin(), first);
  return Ordinal::raw_sum({Theta::raw(std::move(coeffs))});
}

/// Commutative sum: the merged multiset of components, sorted nonincreasingly.
inline Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  if (!a.canonical() || !b.canonical())
    throw Error(ErrorKind::NonCanonicalInput, "natural_sum requires canonical notations");
  std::vector<Theta> merged;
  merged.reserve(a.components().size() + b.components().size());
  std::merge(a.components().begin(), a.components().end(), b.components().begin(), b.components().end(),
             std::back_inserter(merged), [](const Theta& x, const Theta& y) {
               return detail::compare_unchecked(x, y) == Comparison::Greater;
             });
  return Ordinal::raw_sum(std::move(merged));
}

namespace detail {
// Maps shared input nodes once so the images share structure as well.
class PlusMapper {
 public:
  Ordinal sum(const Ordinal& a) {
    if (a.is_zero()) return unit_;
    const auto* key = Comparer::rep(a);
    if (auto it = sums_.find(key); it != sums_.end()) return it->second;
    std::vector<Theta> comps;
    comps.reserve(a.components().size());
    for (const auto& c : a.components()) comps.push_back(theta(c));
    std::stable_sort(comps.begin(), comps.end(), [](const Theta& x, const Theta& y) {
      return compare_unchecked(x, y) == Comparison::Greater;
    });
    Ordinal out = Ordinal::raw_sum(std::move(comps));
    sums_.emplace(key, out);
    return out;
  }

  Theta theta(const Theta& t) {
    const auto* key = Comparer::rep(t);
    if (auto it = thetas_.find(key); it != thetas_.end()) return it->second;
    std::vector<Ordinal> coeffs;
    coeffs.reserve(t.length());
    for (const auto& c : t.coeffs()) coeffs.push_back(sum(c));
    Theta out = Theta::raw(std::move(coeffs));
    thetas_.emplace(key, out);
    return out;
  }

 private:
  Ordinal unit_ = one();
  std::unordered_map<const Comparer::ORep*, Ordinal> sums_;
  std::unordered_map<const Comparer::TRep*, Theta> thetas_;
};
}  // namespace detail

/// Replaces every 0 by 1, keeping each theta-vector at its stored length.
inline Ordinal plus_map(const Ordinal& a) {
  if (!a.canonical()) throw Error(ErrorKind::NonCanonicalInput, "plus_map requires a canonical notation");
  return detail::PlusMapper().sum(a);
}

/// plus_map over a batch. Sub-notations shared between inputs stay shared
/// between outputs, which keeps later comparisons of the images cheap.
inline std::vector<Ordinal> plus_map_all(const std::vector<Ordinal>& in) {
  detail::PlusMapper mapper;
  std::vector<Ordinal> out;
  out.reserve(in.size());
  for (const auto& a : in) {
    if (!a.canonical()) throw Error(ErrorKind::NonCanonicalInput, "plus_map requires a canonical notation");
    out.push_back(mapper.sum(a));
  }
  return out;
}

/// Longest theta-vector anywhere inside `a` (0 for zero).
inline std::size_t max_vector_length(const Ordinal& a) {
  std::size_t m = 0;
  for (const auto& c : a.components()) {
    m = std::max(m, c.length());
    for (const auto& x : c.coeffs()) m = std::max(m, max_vector_length(x));
  }
  return m;
}

inline bool contains_zero(const Ordinal& a) {
  if (a.is_zero()) return true;
  for (const auto& c : a.components())
    for (const auto& x : c.coeffs())
      if (contains_zero(x)) return true;
  return false;
}

inline void format_ordinal(const Ordinal& a, std::string& out) {
  if (a.is_zero()) {
    out += '0';
    return;
  }
  bool first = true;
  for (const auto& c : a.components()) {
    if (!first) out += '+';
    first = false;
    if (c.length() == 1 && c.coeffs().front().is_zero()) {
      out += '1';
      continue;
    }
    out += "t(";
    for (std::size_t i = 0; i < c.length(); ++i) {
      if (i) out += ',';
      format_ordinal(c.coeffs()[i], out);
    }
    out += ')';
  }
}

inline std::string format_ordinal(const Ordinal& a) {
  std::string out;
  format_ordinal(a, out);
  return out;
}

namespace detail {
inline Ordinal parse_ordinal_at(Cursor& in) {
  Ordinal acc;
  do {
    in.skip_ws();
    const std::size_t at = in.position();
    if (!std::isalnum(static_cast<unsigned char>(in.peek()))) in.fail("expected '0', '1' or 't('");
    std::string tok = in.identifier();
    Ordinal summand;
    if (tok == "0") {
      summand = Ordinal{};
    } else if (tok == "1") {
      summand = one();
    } else if (tok == "t") {
      in.expect('(');
      std::vector<Ordinal> coeffs;
      do {
        coeffs.push_back(parse_ordinal_at(in));
      } while (in.accept(','));
      in.expect(')');
      summand = theta(std::move(coeffs));
    } else {
      throw ParseError(at, "unexpected token '" + tok + "'");
    }
    acc = natural_sum(acc, summand);
  } while (in.accept('+'));
  return acc;
}
}  // namespace detail

/// Parses and canonicalizes ordinal text. `+` is the natural sum.
inline Ordinal parse_ordinal(std::string_view text) {
  detail::Cursor in(text);
  Ordinal o = detail::parse_ordinal_at(in);
  in.expect_end();
  return o;
}

/// Every canonical notation with at most `max_nodes` nodes whose theta-vectors
/// all have length at most `max_vector_len`. Ordered by node count, then
/// theta-terms (by vector length, coefficients left to right) before sums.
inline std::vector<Ordinal> enumerate_notations(std::size_t max_nodes, std::size_t max_vector_len) {
  std::vector<Ordinal> out;
  if (max_nodes == 0 || max_vector_len == 0) return out;

  // nonzero[n]: nonzero notations with exactly n nodes; thetas[n]: the theta-terms among them.
  std::vector<std::vector<Ordinal>> nonzero(max_nodes + 1);
  std::vector<std::vector<Theta>> thetas(max_nodes + 1);

  for (std::size_t n = 1; n <= max_nodes; ++n) {
    // Theta-terms: 1 node for the head, n - 1 spread over nonzero coefficients.
    for (std::size_t len = 1; len <= max_vector_len; ++len) {
      std::vector<Ordinal> coeffs;
      std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t pos, std::size_t remaining) {
        if (pos == len) {
          if (remaining == 0) thetas[n].push_back(Theta::raw(coeffs));
          return;
        }
        // Leading coefficient must be nonzero unless the vector is [0].
        const bool may_be_zero = pos > 0 || len == 1;
        if (may_be_zero) {
          coeffs.emplace_back();
          fill(pos + 1, remaining);
          coeffs.pop_back();
        }
        for (std::size_t s = 1; s <= remaining; ++s) {
          for (const auto& c : nonzero[s]) {
            coeffs.push_back(c);
            fill(pos + 1, remaining - s);
            coeffs.pop_back();
          }
        }
      };
      fill(0, n - 1);
    }
    for (const auto& t : thetas[n]) nonzero[n].push_back(Ordinal::raw_sum({t}));

    // Sums of two or more theta-terms, drawn as nondecreasing index sequences
    // over the theta-terms of smaller size, then sorted into canonical order.
    std::vector<const Theta*> pool;
    for (std::size_t s = 1; s < n; ++s)
      for (const auto& t : thetas[s]) pool.push_back(&t);
    std::vector<Theta> picked;
    std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t from, std::size_t remaining) {
      if (remaining == 0) {
        if (picked.size() >= 2) {
          std::vector<Theta> comps = picked;
          std::stable_sort(comps.begin(), comps.end(), [](const Theta& x, const Theta& y) {
            return detail::compare_unchecked(x, y) == Comparison::Greater;
          });
          nonzero[n].push_back(Ordinal::raw_sum(std::move(comps)));
        }
        return;
      }
      for (std::size_t i = from; i < pool.size(); ++i) {
        if (pool[i]->nodes() > remaining) continue;
        picked.push_back(*pool[i]);
        pick(i, remaining - pool[i]->nodes());
        picked.pop_back();
      }
    };
    pick(0, n);
  }

  out.emplace_back();
  for (std::size_t n = 1; n <= max_nodes; ++n)
    for (auto& o : nonzero[n]) out.push_back(std::move(o));
  return out;
}

}  // namespace simpord
