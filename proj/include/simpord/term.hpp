// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simpord/detail/cursor.hpp"
#include "simpord/error.hpp"

namespace simpord {

struct FunctionSymbol {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const FunctionSymbol&, const FunctionSymbol&) = default;
};

/// Letter or digit first, then alphanumerics and underscores.
inline bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalnum(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), detail::Cursor::ident_char);
}

/// An ordered, finite set of function symbols. The order fixes symbol indices,
/// which in turn fix enumeration order.
class Signature {
 public:
  Signature() = default;

  const std::vector<FunctionSymbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  const FunctionSymbol& at(std::size_t i) const { return symbols_.at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i].name == name) return i;
    return std::nullopt;
  }

  bool contains(const FunctionSymbol& f) const {
    auto i = index_of(f.name);
    return i && symbols_[*i].arity == f.arity;
  }

  /// False means the ground-term set is empty; make_signature still accepts it.
  bool has_constant() const {
    return std::any_of(symbols_.begin(), symbols_.end(),
                       [](const FunctionSymbol& f) { return f.arity == 0; });
  }

  std::size_t max_arity() const {
    std::size_t m = 0;
    for (const auto& f : symbols_) m = std::max(m, f.arity);
    return m;
  }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  explicit Signature(std::vector<FunctionSymbol> symbols) : symbols_(std::move(symbols)) {}
  friend Signature make_signature(const std::vector<std::pair<std::string, std::size_t>>&);

  std::vector<FunctionSymbol> symbols_;
};

inline Signature make_signature(const std::vector<std::pair<std::string, std::size_t>>& symbols) {
  if (symbols.empty()) throw Error(ErrorKind::EmptySignature, "signature needs at least one symbol");
  std::vector<FunctionSymbol> out;
  out.reserve(symbols.size());
  for (const auto& [name, arity] : symbols) {
    if (!is_identifier(name))
      throw Error(ErrorKind::InvalidIdentifier, "'" + name + "' is not a valid symbol name");
    for (const auto& f : out)
      if (f.name == name) throw Error(ErrorKind::DuplicateSymbol, "symbol '" + name + "' declared twice");
    out.push_back({name, arity});
  }
  return Signature(std::move(out));
}

/// Immutable ground term. Copies share structure; equality is structural.
class Term {
 public:
  Term(FunctionSymbol head, std::vector<Term> args) {
    if (args.size() != head.arity)
      throw Error(ErrorKind::ArityMismatch, "'" + head.name + "' expects " + std::to_string(head.arity) +
                                                " argument(s), got " + std::to_string(args.size()));
    std::size_t size = 1;
    std::size_t h = std::hash<std::string>{}(head.name);
    for (const auto& a : args) {
      size += a.size();
      h = h * 1000003u ^ a.hash();
    }
    node_ = std::make_shared<const Node>(Node{std::move(head), std::move(args), size, h});
  }

  static Term constant(FunctionSymbol head) { return Term(std::move(head), {}); }

  const FunctionSymbol& head() const { return node_->head; }
  const std::vector<Term>& args() const { return node_->args; }
  std::size_t arity() const { return node_->args.size(); }
  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size) return false;
    return a.node_->head == b.node_->head && a.node_->args == b.node_->args;
  }

 private:
  struct Node {
    FunctionSymbol head;
    std::vector<Term> args;
    std::size_t size;
    std::size_t hash;
  };
  std::shared_ptr<const Node> node_;
};

/// Builds `name(args...)` after checking the symbol against `sig`.
inline Term make_term(const Signature& sig, std::string_view name, std::vector<Term> args = {}) {
  auto i = sig.index_of(name);
  if (!i) throw Error(ErrorKind::UnknownSymbol, "'" + std::string(name) + "' is not in the signature");
  return Term(sig.at(*i), std::move(args));
}

inline std::size_t term_size(const Term& t) { return t.size(); }

inline bool uses_signature(const Term& t, const Signature& sig) {
  if (!sig.contains(t.head())) return false;
  return std::all_of(t.args().begin(), t.args().end(),
                     [&](const Term& a) { return uses_signature(a, sig); });
}

namespace detail {
inline void collect_subterms(const Term& t, std::vector<Term>& out) {
  for (const auto& a : t.args()) {
    out.push_back(a);
    collect_subterms(a, out);
  }
}
}  // namespace detail

/// Every proper subterm occurrence, preorder. Length is term_size(t) - 1.
inline std::vector<Term> proper_subterms(const Term& t) {
  std::vector<Term> out;
  out.reserve(t.size() - 1);
  detail::collect_subterms(t, out);
  return out;
}

inline void format_term(const Term& t, std::string& out) {
  out += t.head().name;
  if (t.arity() == 0) return;
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) out += ',';
    format_term(t.args()[i], out);
  }
  out += ')';
}

inline std::string format_term(const Term& t) {
  std::string out;
  format_term(t, out);
  return out;
}

namespace detail {
inline Term parse_term_at(Cursor& in, const Signature& sig) {
  in.skip_ws();
  const std::size_t at = in.position();
  std::string name = in.identifier();
  auto idx = sig.index_of(name);
  if (!idx)
    throw Error(ErrorKind::UnknownSymbol,
                "'" + name + "' at position " + std::to_string(at) + " is not in the signature");
  const FunctionSymbol& f = sig.at(*idx);
  std::vector<Term> args;
  if (in.accept('(')) {
    do {
      args.push_back(parse_term_at(in, sig));
    } while (in.accept(','));
    in.expect(')');
  }
  if (args.size() != f.arity)
    throw Error(ErrorKind::ArityMismatch, "'" + name + "' at position " + std::to_string(at) + " expects " +
                                              std::to_string(f.arity) + " argument(s), got " +
                                              std::to_string(args.size()));
  return Term(f, std::move(args));
}
}  // namespace detail

/// term := ident | ident '(' term (',' term)* ')'
inline Term parse_term(std::string_view text, const Signature& sig) {
  detail::Cursor in(text);
  Term t = detail::parse_term_at(in, sig);
  in.expect_end();
  return t;
}

/// All ground terms with at most `max_size` nodes, each exactly once.
///
/// Order: by size; within a size by head symbol index; then by argument
/// tuples, compared left to right in this same order. Empty when the
/// signature has no constant.
inline std::vector<Term> enumerate_terms(const Signature& sig, std::size_t max_size) {
  // by_size[n] holds every term of exactly n nodes, already in output order.
  std::vector<std::vector<Term>> by_size(max_size + 1);
  for (std::size_t n = 1; n <= max_size; ++n) {
    auto& level = by_size[n];
    for (const auto& f : sig.symbols()) {
      if (f.arity == 0) {
        if (n == 1) level.push_back(Term::constant(f));
        continue;
      }
      if (n - 1 < f.arity) continue;
      std::vector<Term> args;
      args.reserve(f.arity);
      // Distributes `remaining` nodes over argument positions pos..arity-1.
      std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t pos, std::size_t remaining) {
        const std::size_t left_after = f.arity - pos - 1;
        if (left_after == 0) {
          for (const auto& t : by_size[remaining]) {
            args.push_back(t);
            level.emplace_back(f, args);
            args.pop_back();
          }
          return;
        }
        for (std::size_t s = 1; s + left_after <= remaining; ++s) {
          for (const auto& t : by_size[s]) {
            args.push_back(t);
            fill(pos + 1, remaining - s);
            args.pop_back();
          }
        }
      };
      fill(0, n - 1);
    }
  }
  std::vector<Term> out;
  for (auto& level : by_size)
    for (auto& t : level) out.push_back(std::move(t));
  return out;
}

}  // namespace simpord

template <>
struct std::hash<simpord::Term> {
  std::size_t operator()(const simpord::Term& t) const noexcept { return t.hash(); }
};
