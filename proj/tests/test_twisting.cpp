#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rootforge/abstract_roots.hpp"
#include "rootforge/errors.hpp"
#include "rootforge/twisting.hpp"

using namespace rootforge;

namespace {

constexpr int kInf = kInfinity;

// r, s, t, u with m(u,s) = m(u,r) = m(r,t) = inf and the remaining edges 3.
CoxeterGroup first_graph() {
  return CoxeterGroup(CoxeterMatrix({"r", "s", "t", "u"}, {{1, 3, kInf, kInf}, {3, 1, 3, kInf}, {kInf, 3, 1, 3}, {kInf, kInf, 3, 1}}));
}

// a, b, c, d with m(d,a) = m(d,b) = m(a,c) = m(b,c) = 3, m(c,d) = inf, m(a,b) = 2.
CoxeterGroup second_graph() {
  return CoxeterGroup(CoxeterMatrix({"a", "b", "c", "d"}, {{1, 2, 3, 3}, {2, 1, 3, 3}, {3, 3, 1, kInf}, {3, 3, kInf, 1}}));
}

TwistSpec first_spec(const CoxeterGroup& g) { return TwistSpec::from_names(g.matrix(), {"r"}, {"s", "t"}, {}, {"u"}); }
TwistSpec second_spec(const CoxeterGroup& g) { return TwistSpec::from_names(g.matrix(), {"d"}, {"a"}, {"b"}, {"c"}); }

// Products of twisted generators have the orders the new matrix claims.
void check_orders(const CoxeterGroup& g, const TwistResult& t) {
  for (std::size_t i = 0; i < t.generators.size(); ++i)
    for (std::size_t j = i + 1; j < t.generators.size(); ++j) {
      auto order = g.order(g.multiply(t.generators[i], t.generators[j]), 64);
      const int claimed = t.matrix.m(i, j);
      if (claimed == kInfinity) {
        CHECK_FALSE(order.has_value());
      } else {
        REQUIRE(order.has_value());
        CHECK(static_cast<int>(*order) == claimed);
      }
    }
}

void check_generates(const CoxeterGroup& g, const TwistResult& t) {
  CHECK(t.generators.size() == g.rank());
  auto c = subgroup_closure(g, t.generators, 9);
  for (std::size_t s = 0; s < g.rank(); ++s) CHECK(c.contains(g.generator(static_cast<int>(s))));
}

std::vector<AbstractRoot> family(const TwistResult& t, const std::vector<int>& signs) {
  std::vector<AbstractRoot> out;
  for (std::size_t i = 0; i < t.generators.size(); ++i) out.push_back({t.generators[i], signs[i]});
  return out;
}

}  // namespace

TEST_CASE("longest elements") {
  auto g = first_graph();
  CHECK(longest_element(g, {1, 2}) == g.parse("sts"));
  CHECK(longest_element(g, {1}) == g.parse("s"));
  auto b3 = CoxeterGroup(CoxeterMatrix::of_type("B3"));
  CHECK(longest_element(b3, {1, 2}) == b3.parse("stst"));
  auto w0 = longest_element(b3, {0, 1, 2});
  CHECK(w0.length() == 9);
  CHECK(b3.multiply(w0, w0).is_identity());
  CHECK(cocycle(b3, w0).size() == 9);
  CHECK_THROWS_AS(longest_element(g, {0, 2}), InputError);
}

TEST_CASE("twist validation") {
  auto g1 = first_graph();
  auto r1 = validate_twist(g1, first_spec(g1));
  CHECK(r1.valid);
  REQUIRE(r1.w_k.has_value());
  CHECK(*r1.w_k == g1.parse("sts"));

  auto g2 = second_graph();
  auto r2 = validate_twist(g2, second_spec(g2));
  CHECK(r2.valid);
  REQUIRE(r2.w_k.has_value());
  CHECK(*r2.w_k == g2.parse("a"));

  auto bad_k = validate_twist(g1, TwistSpec::from_names(g1.matrix(), {"s"}, {"r", "t"}, {}, {"u"}));
  CHECK_FALSE(bad_k.valid);
  CHECK_FALSE(bad_k.w_k.has_value());
  auto bad_m = validate_twist(g1, TwistSpec::from_names(g1.matrix(), {"r"}, {"t"}, {}, {"s", "u"}));
  CHECK_FALSE(bad_m.valid);
  auto bad_l = validate_twist(g2, TwistSpec::from_names(g2.matrix(), {"d"}, {"a"}, {"c"}, {"b"}));
  CHECK_FALSE(bad_l.valid);
  auto missing = validate_twist(g1, TwistSpec::from_names(g1.matrix(), {"r"}, {"s", "t"}, {}, {}));
  CHECK_FALSE(missing.valid);
  CHECK_THROWS_AS(TwistSpec::from_names(g1.matrix(), {"x"}, {}, {}, {}), InputError);
}

TEST_CASE("applying twists") {
  auto g1 = first_graph();
  auto t1 = apply_twist(g1, first_spec(g1));
  CHECK(t1.generators[0] == g1.parse("stsrsts"));
  CHECK(t1.names == std::vector<std::string>{"r'", "s", "t", "u"});
  CHECK(t1.matrix.is_infinite(0, 1));
  CHECK(t1.matrix.m(0, 2) == 3);
  CHECK(t1.matrix.is_infinite(0, 3));
  check_orders(g1, t1);
  check_generates(g1, t1);

  auto g2 = second_graph();
  auto t2 = apply_twist(g2, second_spec(g2));
  CHECK(t2.generators[3] == g2.parse("ada"));
  check_orders(g2, t2);
  check_generates(g2, t2);

  auto id = apply_twist(g1, TwistSpec::from_names(g1.matrix(), {}, {"s", "t"}, {}, {"r", "u"}));
  CHECK(id.matrix.entries() == g1.matrix().entries());
  for (std::size_t i = 0; i < 4; ++i) CHECK(id.generators[i] == g1.generator(static_cast<int>(i)));

  auto bt = CoxeterGroup(CoxeterMatrix::of_type("B~2"));
  CHECK_THROWS_AS(apply_twist(bt, TwistSpec::from_names(bt.matrix(), {"r"}, {"s"}, {}, {"t"})), InputError);
}

TEST_CASE("sign feasibility") {
  auto g1 = first_graph();
  auto s1 = twist_sign_solve(g1, first_spec(g1));
  REQUIRE(s1.feasible);
  CHECK(s1.signs == std::vector<int>{-1, 1, 1, 1});
  auto t1 = apply_twist(g1, first_spec(g1));
  CHECK(verify_simple_family(g1, family(t1, s1.signs)));
  std::vector<int> flipped;
  for (int s : s1.signs) flipped.push_back(-s);
  CHECK(verify_simple_family(g1, family(t1, flipped)));
  CHECK_FALSE(verify_simple_family(g1, family(t1, {1, 1, 1, 1})));

  auto g2 = second_graph();
  auto s2 = twist_sign_solve(g2, second_spec(g2));
  CHECK_FALSE(s2.feasible);
  CHECK_FALSE(s2.conflict.empty());
  auto t2 = apply_twist(g2, second_spec(g2));
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<int> signs;
    for (int i = 0; i < 4; ++i) signs.push_back(mask >> i & 1 ? -1 : 1);
    CHECK_FALSE(verify_simple_family(g2, family(t2, signs)));
  }

  // Every m even: no constraints.
  auto even = CoxeterGroup(CoxeterMatrix({"a", "b", "c"}, {{1, 4, 2}, {4, 1, kInf}, {2, kInf, 1}}));
  auto s3 = twist_sign_solve(even, TwistSpec::from_names(even.matrix(), {"c"}, {"a"}, {}, {"b"}));
  REQUIRE(s3.feasible);
  CHECK(s3.signs == std::vector<int>{1, 1, 1});
}

TEST_CASE("solver agrees with brute force over sign patterns") {
  auto g1 = first_graph();
  auto t1 = apply_twist(g1, first_spec(g1));
  int feasible = 0;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<int> signs;
    for (int i = 0; i < 4; ++i) signs.push_back(mask >> i & 1 ? -1 : 1);
    if (verify_simple_family(g1, family(t1, signs))) ++feasible;
  }
  CHECK(feasible == 2);
}
