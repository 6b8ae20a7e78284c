// SPDX-License-Identifier: Apache-2.0
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "simpord/ordinal.hpp"

using namespace simpord;

namespace {

Ordinal P(const char* s) { return parse_ordinal(s); }

int as_int(Comparison c) { return c == Comparison::Less ? -1 : (c == Comparison::Equal ? 0 : 1); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(Ordinal, Basics) {
  EXPECT_TRUE(zero().is_zero());
  EXPECT_TRUE(one().is_one());
  EXPECT_EQ(theta({zero()}), one());
  EXPECT_EQ(compare(zero(), one()), Comparison::Less);
  EXPECT_EQ(compare(one(), natural_sum(one(), one())), Comparison::Less);
}

TEST(Ordinal, ThetaCanonicalizes) {
  EXPECT_EQ(format_ordinal(theta({zero()})), "1");
  EXPECT_EQ(format_ordinal(theta({one(), zero()})), "t(1,0)");
  EXPECT_EQ(theta({zero(), one()}), theta({one()}));
  EXPECT_EQ(format_ordinal(theta({zero(), one()})), "t(1)");
  EXPECT_EQ(kind_of([] { theta({}); }), ErrorKind::NonCanonicalInput);
}

TEST(Ordinal, WorkedComparisons) {
  EXPECT_EQ(compare(P("t(1,0)"), P("t(t(1,0))")), Comparison::Less);
  EXPECT_EQ(compare(P("t(t(1,0))"), P("t(1,1)")), Comparison::Less);
  EXPECT_EQ(compare(natural_sum(one(), one()), P("t(1,0)")), Comparison::Less);
  EXPECT_EQ(compare(P("0"), P("1")), Comparison::Less);
  EXPECT_EQ(compare(P("t(0,1)"), P("t(1)")), Comparison::Equal);
  EXPECT_EQ(compare(P("t(1)"), P("1+1")), Comparison::Greater);
}

TEST(Ordinal, NaturalSum) {
  EXPECT_EQ(natural_sum(zero(), P("t(1,0)")), P("t(1,0)"));
  EXPECT_EQ(format_ordinal(natural_sum(one(), one())), "1+1");
  EXPECT_EQ(natural_sum(one(), one()).components().size(), 2u);
  EXPECT_EQ(format_ordinal(natural_sum(one(), P("t(1,0)"))), "t(1,0)+1");
  EXPECT_EQ(format_ordinal(natural_sum(P("1+t(1)"), P("t(1,0)"))), "t(1,0)+t(1)+1");
}

TEST(Ordinal, PlusMap) {
  EXPECT_EQ(plus_map(zero()), one());
  // 1 is t(0), so its zero is replaced as well.
  EXPECT_EQ(format_ordinal(plus_map(one())), "t(1)");
  EXPECT_EQ(format_ordinal(plus_map(P("t(1,0)"))), "t(t(1),1)");
  EXPECT_EQ(format_ordinal(plus_map(P("1+1"))), "t(1)+t(1)");
  EXPECT_EQ(format_ordinal(plus_map(P("t(1,0)+1"))), "t(t(1),1)+t(1)");
}

TEST(Ordinal, ParseAndFormat) {
  EXPECT_EQ(P("t(1,0)"), theta({one(), zero()}));
  EXPECT_EQ(P("1+1"), natural_sum(one(), one()));
  EXPECT_EQ(format_ordinal(P("t(0,1)")), "t(1)");
  EXPECT_EQ(format_ordinal(P("1 + t(1)")), "t(1)+1");
  EXPECT_EQ(kind_of([] { P("t(1"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { P("t()"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { P("2"); }), ErrorKind::ParseError);
  EXPECT_EQ(P("0+1"), one());
  EXPECT_EQ(kind_of([] { P("t(1)x"); }), ErrorKind::ParseError);
  try {
    P("t(1,,0)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Ordinal, NonCanonicalRejected) {
  const Ordinal bad = Ordinal::raw_sum({Theta::raw({zero(), one()})});
  EXPECT_FALSE(bad.canonical());
  EXPECT_EQ(kind_of([&] { compare(bad, one()); }), ErrorKind::NonCanonicalInput);
  EXPECT_EQ(kind_of([&] { plus_map(bad); }), ErrorKind::NonCanonicalInput);
  const Ordinal unsorted = Ordinal::raw_sum({Theta::raw({zero()}), Theta::raw({one()})});
  EXPECT_FALSE(unsorted.canonical());
}

TEST(Enumerate, Examples) {
  std::set<std::string> small;
  for (const auto& o : enumerate_notations(1, 1)) small.insert(format_ordinal(o));
  EXPECT_EQ(small, (std::set<std::string>{"0", "1"}));

  std::set<std::string> two;
  for (const auto& o : enumerate_notations(2, 2)) two.insert(format_ordinal(o));
  EXPECT_EQ(two, (std::set<std::string>{"0", "1", "t(1)", "t(1,0)", "1+1"}));
}

TEST(Enumerate, MonotoneCanonicalDistinct) {
  std::size_t prev_n = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t prev_len = 0;
    for (std::size_t len = 1; len <= 3; ++len) {
      const auto all = enumerate_notations(n, len);
      EXPECT_GE(all.size(), prev_len);
      prev_len = all.size();
      std::set<std::string> text;
      for (const auto& o : all) {
        EXPECT_TRUE(o.canonical());
        EXPECT_LE(o.nodes(), n);
        EXPECT_LE(max_vector_length(o), len);
        text.insert(format_ordinal(o));
        EXPECT_EQ(P(format_ordinal(o).c_str()), o);
      }
      EXPECT_EQ(text.size(), all.size());
    }
    EXPECT_GE(prev_len, prev_n);
    prev_n = prev_len;
  }
}

// Every notation of at most 5 nodes is generated: build them independently
// from parts and check membership.
TEST(Enumerate, Complete) {
  const auto all = enumerate_notations(5, 3);
  std::set<std::string> got;
  for (const auto& o : all) got.insert(format_ordinal(o));
  std::set<std::string> built{"0"};
  for (int round = 0; round < 5; ++round) {
    std::vector<Ordinal> pool;
    for (const auto& s : built) pool.push_back(P(s.c_str()));
    for (const auto& a : pool)
      for (const auto& b : pool) {
        for (const auto& c : std::vector<Ordinal>{theta({a}), theta({a, b}), natural_sum(a, b)})
          if (c.nodes() <= 5 && max_vector_length(c) <= 3) built.insert(format_ordinal(c));
        for (const auto& c : pool) {
          const Ordinal t3 = theta({a, b, c});
          if (t3.nodes() <= 5 && max_vector_length(t3) <= 3) built.insert(format_ordinal(t3));
        }
      }
  }
  EXPECT_EQ(built, got);
}

TEST(Compare, AgreesWithLiteralRule) {
  const auto all = enumerate_notations(5, 3);
  for (const auto& a : all)
    for (const auto& b : all) ASSERT_EQ(as_int(compare(a, b)), test::literal_cmp(a, b)) << format_ordinal(a) << " vs " << format_ordinal(b);
}

TEST(Compare, TotalOrderProperties) {
  const auto all = enumerate_notations(5, 3);
  for (const auto& a : all)
    for (const auto& b : all) {
      const Comparison c = compare(a, b);
      EXPECT_EQ(c == Comparison::Equal, a == b);
      EXPECT_EQ(compare(b, a), reverse(c));
    }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int i = 0; i < 20000; ++i) {
    const auto& a = all[pick(rng)];
    const auto& b = all[pick(rng)];
    const auto& c = all[pick(rng)];
    if (less(a, b) && less(b, c)) {
      EXPECT_TRUE(less(a, c));
    }
  }
}

TEST(Compare, SumIsStrictlyMonotone) {
  const auto all = enumerate_notations(4, 2);
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) {
        if (!less(a, b)) continue;
        EXPECT_TRUE(less(natural_sum(a, c), natural_sum(b, c)));
        EXPECT_TRUE(less(natural_sum(c, a), natural_sum(c, b)));
      }
  for (const auto& a : all)
    for (const auto& b : all) EXPECT_EQ(natural_sum(a, b), natural_sum(b, a));
}

TEST(Compare, ComponentsBelowTheta) {
  for (const auto& a : enumerate_notations(6, 3)) {
    if (!a.is_theta()) continue;
    for (const auto& c : a.as_theta().coeffs()) EXPECT_TRUE(less(c, a)) << format_ordinal(a);
  }
}

namespace {

// True when every Zero inside `a` is the lone coefficient of a 1.
bool zeros_only_inside_ones(const Ordinal& a) {
  if (a.is_zero()) return false;
  for (const auto& c : a.components()) {
    if (c.length() == 1 && c.coeffs().front().is_zero()) continue;
    for (const auto& x : c.coeffs())
      if (!zeros_only_inside_ones(x)) return false;
  }
  return true;
}

}  // namespace

TEST(PlusMap, OrderEmbedding) {
  const auto all = enumerate_notations(5, 3);
  for (const auto& a : all) {
    const Ordinal p = plus_map(a);
    EXPECT_TRUE(p.canonical());
    EXPECT_TRUE(zeros_only_inside_ones(p)) << format_ordinal(a);
    EXPECT_TRUE(less(a, p)) << format_ordinal(a);
    if (!a.is_zero()) {
      EXPECT_EQ(max_vector_length(p), max_vector_length(a));
    }
    for (const auto& b : all) EXPECT_EQ(compare(a, b), compare(p, plus_map(b)));
  }
}

TEST(PlusMap, BatchMatchesSingle) {
  const auto all = enumerate_notations(6, 3);
  const auto batch = plus_map_all(all);
  ASSERT_EQ(batch.size(), all.size());
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(batch[i], plus_map(all[i]));
}

// 1 is t(0), so plus_map moves it to t(1) and a second application changes
// the result again.
TEST(PlusMap, NotIdempotent) {
  const Ordinal p = plus_map(P("t(1,0)"));
  EXPECT_NE(plus_map(p), p);
  EXPECT_EQ(format_ordinal(plus_map(p)), "t(t(t(1)),t(1))");
}
