// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "simpord/lpo.hpp"

using namespace simpord;

namespace {

const Signature& ag() {
  static const Signature s = make_signature({{"a", 0}, {"g", 2}});
  return s;
}

// Ground LPO written out clause by clause for the reference check.
bool ref_gt(const Precedence& p, const Term& s, const Term& t) {
  for (const auto& si : s.args())
    if (si == t || ref_gt(p, si, t)) return true;
  const auto rs = p.rank(s.head()), rt = p.rank(t.head());
  auto dominates_args = [&] {
    for (const auto& tj : t.args())
      if (!ref_gt(p, s, tj)) return false;
    return true;
  };
  if (rs > rt) return dominates_args();
  if (rs == rt) {
    std::size_t i = 0;
    while (i < s.arity() && s.args()[i] == t.args()[i]) ++i;
    return i < s.arity() && ref_gt(p, s.args()[i], t.args()[i]) && dominates_args();
  }
  return false;
}

}  // namespace

TEST(Precedence, Validation) {
  EXPECT_NO_THROW(Precedence(ag(), {"a", "g"}));
  EXPECT_THROW(Precedence(ag(), {"a"}), Error);
  EXPECT_THROW(Precedence(ag(), {"a", "a"}), Error);
  EXPECT_THROW(Precedence(ag(), {"a", "h"}), Error);
  EXPECT_EQ(Precedence(ag(), {"g", "a"}).lowest_first(), (std::vector<std::string>{"g", "a"}));
}

TEST(Lpo, Examples) {
  const Precedence p(ag(), {"a", "g"});
  auto P = [](const char* s) { return parse_term(s, ag()); };
  EXPECT_TRUE(lpo_lt(p, P("a"), P("g(a,a)")));
  EXPECT_TRUE(lpo_lt(p, P("g(a,a)"), P("g(g(a,a),a)")));
  EXPECT_FALSE(lpo_lt(p, P("g(a,a)"), P("g(a,a)")));
  const auto other = make_signature({{"b", 0}});
  EXPECT_THROW(lpo_lt(p, parse_term("b", other), P("a")), Error);
}

TEST(Lpo, MatchesReferenceAndIsTotal) {
  const auto sig = make_signature({{"a", 0}, {"h", 1}, {"g", 2}});
  const auto terms = enumerate_terms(sig, 5);
  for (const auto& order : std::vector<std::vector<std::string>>{{"a", "h", "g"}, {"g", "a", "h"}, {"h", "g", "a"}}) {
    const Precedence p(sig, order);
    for (const auto& s : terms)
      for (const auto& t : terms) {
        const bool lt = lpo_lt(p, s, t);
        ASSERT_EQ(lt, ref_gt(p, t, s));
        // Total on ground terms for a total precedence.
        if (!(s == t)) {
          EXPECT_NE(lt, lpo_lt(p, t, s));
        }
      }
  }
}
