#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <set>

#include "rootforge/abstract_roots.hpp"
#include "rootforge/cone.hpp"
#include "rootforge/real_roots.hpp"

using namespace rootforge;

namespace {

BasedRootDatum b2_crystallographic() { return BasedRootDatum::from_ngcm({{"a", "b"}, {{2, -1}, {-2, 2}}}); }

BasedRootDatum standard_of(const char* type) { return BasedRootDatum::standard(CoxeterMatrix::of_type(type)); }

bool same_vec(const Vec& a, const Vec& b, double tol = 1e-9) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

std::set<std::vector<long>> rounded(const std::vector<Vec>& vs) {
  std::set<std::vector<long>> out;
  for (const auto& v : vs) {
    std::vector<long> k;
    for (double x : v) k.push_back(std::lround(x * 1e6));
    out.insert(k);
  }
  return out;
}

// Two copies of the affine A1 datum on R^3 with form diag(2, 2, 0); delta = e3.
BasedRootDatum affine_pair(int e1, int e2) {
  BasedRootDatum b;
  b.labels = {"a1", "b1", "a2", "b2"};
  b.pairing = {{2, 0, 0}, {0, 2, 0}, {0, 0, 0}};
  auto sc = [](int e, Vec v) {
    for (double& x : v) x *= e;
    return v;
  };
  b.roots = {sc(e1, {1, 0, 0}), sc(e1, {-1, 0, 1}), sc(e2, {0, 1, 0}), sc(e2, {0, -1, 1})};
  b.coroots = b.roots;
  return b;
}

bool mentions(const ValidationReport& r, const std::string& text) {
  for (const auto& f : r.failures)
    if (f.find(text) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("cone feasibility and positive independence") {
  CHECK(nonnegative_combination_exists({{1, 0}, {0, 1}}, {2, 3}));
  CHECK_FALSE(nonnegative_combination_exists({{1, 0}, {0, 1}}, {-1, 3}));
  CHECK(nonnegative_combination_exists_exact({{1, 1}, {1, -1}}, {3, 1}));
  CHECK_FALSE(nonnegative_combination_exists_exact({{1, 1}, {1, -1}}, {-3, 1}));
  CHECK(positively_independent({{1, 0}, {0, 1}, {1, 1}}));
  CHECK_FALSE(positively_independent({{1, 0}, {-1, 0}}));
  CHECK_FALSE(positively_independent({{1, 0}, {0, 0}}));
  CHECK(positively_independent({{1, 0, 0}, {-1, 0, 1}, {0, 1, 0}, {0, -1, 1}}));
  CHECK_FALSE(positively_independent({{1, 0, 0}, {-1, 0, 1}, {0, -1, 0}, {0, 1, -1}}));
  ConeTester cone({{1, 0}, {1, 1}});
  CHECK(cone.independent());
  CHECK(cone.contains({3, 1}));
  CHECK_FALSE(cone.contains({1, 2}));
  auto c = cone.coefficients({3, 1});
  REQUIRE(c.has_value());
  CHECK(same_vec(*c, {2, 1}));
}

TEST_CASE("product set and pair condition") {
  CHECK(in_product_set(0));
  CHECK(in_product_set(1));
  CHECK(in_product_set(2));
  CHECK(in_product_set(3));
  CHECK(in_product_set(4.5));
  CHECK(in_product_set(4 * std::pow(std::cos(std::numbers::pi / 7), 2)));
  CHECK_FALSE(in_product_set(2.5));
  CHECK_FALSE(in_product_set(3.5));
  CHECK_FALSE(in_product_set(-0.5));
  CHECK(pair_condition(-1, -2));
  CHECK_FALSE(pair_condition(0, -1));
  CHECK_FALSE(pair_condition(1, 1));
}

TEST_CASE("datum validation") {
  CHECK(validate_datum(b2_crystallographic()).valid);
  auto bad = validate_ngcm({{2, -1}, {-2.5, 2}});
  CHECK_FALSE(bad.valid);
  CHECK(bad.failures.front().find("product not in P") != std::string::npos);
  CHECK_FALSE(validate_ngcm({{2, 0}, {-1, 2}}).valid);
  CHECK_FALSE(validate_ngcm({{2, 1}, {1, 2}}).valid);
  CHECK_FALSE(validate_ngcm({{3, -1}, {-1, 2}}).valid);

  // Two affine A1 components: mixed signs fail, constant signs pass.
  for (auto [e1, e2] : {std::pair{1, -1}, std::pair{-1, 1}}) {
    auto r = validate_datum(affine_pair(e1, e2));
    CHECK_FALSE(r.valid);
    CHECK(mentions(r, "not positively independent"));
  }
  CHECK(validate_datum(affine_pair(1, 1)).valid);
  CHECK(validate_datum(affine_pair(-1, -1)).valid);
  auto comps = irreducible_components(coxeter_matrix_of(affine_pair(1, 1)));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1});
  CHECK(comps[1] == std::vector<int>{2, 3});

  BasedRootDatum wrong = b2_crystallographic();
  wrong.coroots[0] = {2, 0};
  CHECK(mentions(validate_datum(wrong), "!= 2 for a"));
  wrong = b2_crystallographic();
  wrong.roots[0] = {1, 0, 0};
  CHECK(mentions(validate_datum(wrong), "dimension mismatch"));
}

TEST_CASE("coxeter matrix of an NGCM") {
  auto m = [](double c) { return coxeter_matrix_of(Ngcm{{}, {{2, -1}, {-c, 2}}}).m(0, 1); };
  CHECK(coxeter_matrix_of(Ngcm{{}, {{2, 0}, {0, 2}}}).m(0, 1) == 2);
  CHECK(m(1) == 3);
  CHECK(m(2) == 4);
  CHECK(m(3) == 6);
  CHECK(m(4.5) == kInfinity);
  CHECK(m(4) == kInfinity);
  CHECK(m(2.6180339887) == 5);
  CHECK_THROWS_WITH_AS(m(2.5), doctest::Contains("gap of P"), InputError);
  auto named = coxeter_matrix_of(Ngcm{{"a", "b"}, {{2, -1}, {-1, 2}}});
  CHECK(named.generators() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("reflections in the datum") {
  auto b = b2_crystallographic();
  RootPair alpha{{1, 0}, {1, 0}, 0, true};
  CHECK(same_vec(reflect(b, {1, 0}, alpha), {-1, 0}));
  CHECK(same_vec(reflect(b, {0, 1}, alpha), {2, 1}));
  for (const Vec& v : {Vec{0.3, -1.7}, Vec{5, 2}}) CHECK(same_vec(reflect(b, reflect(b, v, alpha), alpha), v));
}

TEST_CASE("root generation examples") {
  auto a2 = generate_roots(standard_of("A2"), 2);
  CHECK(a2.positive_count() == 3);
  CHECK(a2.roots.size() == 6);
  CHECK(a2.find({1, 1}).has_value());

  auto b2 = generate_roots(b2_crystallographic(), 4);
  std::vector<Vec> pos;
  for (const auto& p : b2.roots)
    if (p.positive) pos.push_back(p.root);
  CHECK(rounded(pos) == rounded({{1, 0}, {0, 1}, {1, 1}, {2, 1}}));
  CHECK(b2.closed);

  auto affine = generate_roots(BasedRootDatum::from_ngcm({{}, {{2, -2}, {-2, 2}}}), 2);
  std::vector<Vec> apos;
  for (const auto& p : affine.roots)
    if (p.positive) apos.push_back(p.root);
  CHECK(rounded(apos) == rounded({{1, 0}, {0, 1}, {2, 1}, {1, 2}, {3, 2}, {2, 3}}));
  CHECK_FALSE(affine.closed);
  CHECK_THROWS_AS(generate_roots(BasedRootDatum::from_ngcm({{}, {{2, -2}, {-2, 2}}}), 100, 50), ResourceCapError);
  CHECK_THROWS_AS(generate_roots(affine_pair(1, -1), 2), InputError);
}

TEST_CASE("positive root counts at full closure") {
  const std::map<std::string, std::size_t> expected{{"A2", 3}, {"B2", 4}, {"G2", 6}, {"A3", 6}, {"B3", 9}, {"H3", 15}};
  for (const auto& [type, count] : expected) {
    auto g = std::make_shared<const CoxeterGroup>(CoxeterMatrix::of_type(type));
    auto slice = generate_roots(standard_of(type.c_str()), 32);
    CHECK(slice.closed);
    CHECK(slice.positive_count() == count);
    CHECK(slice.roots.size() == 2 * count);
    // The reflection map on positive roots is a bijection onto T.
    std::set<Element> images;
    for (const auto& p : slice.roots)
      if (p.positive) images.insert(g->reflection_of_root(p.root));
    CHECK(images.size() == count);
    CHECK(Window::full(g)->size() == count);
  }
}

TEST_CASE("every root is positive or negative with nonnegative cone coefficients") {
  for (const char* type : {"A2", "B2", "G2", "I2(5)", "A3", "B3", "H3", "A~1", "A~2"}) {
    auto b = standard_of(type);
    auto slice = generate_roots(b, 8);
    ConeTester cone(b.roots);
    for (const auto& p : slice.roots) {
      Vec neg = p.root;
      for (double& x : neg) x = -x;
      CHECK(cone.contains(p.positive ? p.root : neg));
      CHECK_FALSE(cone.contains(p.positive ? neg : p.root));
      auto c = cone.coefficients(p.positive ? p.root : neg);
      REQUIRE(c.has_value());
      for (double x : *c) CHECK(x >= -1e-9);
    }
  }
}

TEST_CASE("coroots transport with the roots") {
  auto run = [](const BasedRootDatum& b) {
    auto g = CoxeterGroup(coxeter_matrix_of(b));
    std::vector<RootPair> simple;
    for (std::size_t i = 0; i < b.rank(); ++i) simple.push_back({b.roots[i], b.coroots[i], 0, true});
    for (const auto& w : enumerate_elements(g, 5))
      for (std::size_t a = 0; a < b.rank(); ++a) {
        Vec root = b.roots[a], coroot = b.coroots[a];
        for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) {
          root = reflect(b, root, simple[*it]);
          coroot = reflect_coroot(b, coroot, simple[*it]);
        }
        for (std::size_t t = 0; t < b.rank(); ++t)
          for (double c : {1.0, -1.0, 2.0, -2.0, 0.5, -0.5, 3.0, -3.0, 1.0 / 3, -1.0 / 3}) {
            Vec target = b.roots[t];
            for (double& x : target) x *= c;
            if (!same_vec(root, target)) continue;
            Vec co = b.coroots[t];
            for (double& x : co) x /= c;
            CHECK(same_vec(coroot, co));
          }
      }
  };
  run(b2_crystallographic());
  run(BasedRootDatum::from_ngcm({{}, {{2, -1}, {-3, 2}}}));
}

TEST_CASE("betweenness in the real realization") {
  Vec a{1, 0}, b{0, 1};
  CHECK(is_between_real(a, a, b));
  CHECK(is_between_real({1, 1}, a, b));
  CHECK_FALSE(is_between_real({-1, 0}, a, b));
  CHECK(is_between_real({0, 0, 1}, {1, 0, 1}, {-1, 0, 1}));
  CHECK_FALSE(is_between_real({0, 1, 0}, {1, 0, 0}, {0, 0, 1}));
}

TEST_CASE("reflection subgroup bases") {
  auto b = b2_crystallographic();
  RootPair alpha{{1, 0}, {1, 0}, 0, true}, beta{{0, 1}, {0, 1}, 0, true};
  auto same = reflection_subgroup_basis(b, {alpha, beta});
  CHECK(rounded({same[0].root, same[1].root}) == rounded({{1, 0}, {0, 1}}));

  auto slice = generate_roots(b, 4);
  auto ab = slice.roots[*slice.find({1, 1})];
  auto res = reflection_subgroup_basis(b, {beta, ab});
  REQUIRE(res.size() == 2);
  CHECK(rounded({res[0].root, res[1].root}) == rounded({{1, 0}, {0, 1}}));
  auto one = reflection_subgroup_basis(b, {ab});
  REQUIRE(one.size() == 1);
  CHECK(same_vec(one[0].root, {1, 1}));

  // Every pair and triple of positive roots in a few finite types yields a family
  // satisfying the pairwise conditions.
  for (const char* type : {"B3", "H3", "G2"}) {
    auto d = standard_of(type);
    auto s = generate_roots(d, 32);
    std::vector<RootPair> pos;
    for (const auto& p : s.roots)
      if (p.positive) pos.push_back(p);
    for (std::size_t i = 0; i < pos.size(); ++i)
      for (std::size_t j = i + 1; j < pos.size(); ++j) {
        auto out = reflection_subgroup_basis(d, {pos[i], pos[j]});
        CHECK(out.size() == 2);
        for (std::size_t x = 0; x < out.size(); ++x)
          for (std::size_t y = x + 1; y < out.size(); ++y)
            CHECK(pair_condition(d.pair(out[x].root, out[y].coroot), d.pair(out[y].root, out[x].coroot)));
      }
  }
  RootPair negative{{-1, 0}, {-1, 0}, 0, false};
  CHECK_THROWS_AS(reflection_subgroup_basis(b, {negative}), InputError);
}

TEST_CASE("rescaling") {
  auto b = b2_crystallographic();
  auto same = rescale(b, {1, 1});
  CHECK(same.roots == b.roots);
  CHECK(same.coroots == b.coroots);
  auto r = rescale(b, {1, 2});
  auto a = b.ngcm(), ra = r.ngcm();
  CHECK(std::abs(a[0][1] * a[1][0] - ra[0][1] * ra[1][0]) < 1e-12);
  CHECK(coxeter_matrix_of(r) == coxeter_matrix_of(b));
  CHECK(validate_datum(r).valid);
  auto back = rescale(r, {1, 0.5});
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(same_vec(back.roots[i], b.roots[i]));
    CHECK(same_vec(back.coroots[i], b.coroots[i]));
  }
  CHECK_THROWS_AS(rescale(b, {1, 0}), InputError);
  CHECK_THROWS_AS(rescale(b, {1}), InputError);
}

TEST_CASE("reduced and symmetrizable data") {
  auto p1 = datum_properties(RealMatrix{{2, -1}, {-1, 2}});
  CHECK(p1.reduced);
  CHECK(p1.symmetrizable);
  auto p2 = datum_properties(RealMatrix{{2, -2}, {-0.5, 2}});
  CHECK_FALSE(p2.reduced);
  CHECK(p2.symmetrizable);
  REQUIRE(p2.rescaling.has_value());
  const auto& c = *p2.rescaling;
  CHECK(std::abs(c[0] / c[1] * -2 - c[1] / c[0] * -0.5) < 1e-9);
  // Each edge has product 1 but the ratios around the triangle do not multiply to 1.
  auto p3 = datum_properties(RealMatrix{{2, -2, -1}, {-0.5, 2, -1}, {-1, -1, 2}});
  CHECK_FALSE(p3.symmetrizable);
  CHECK_FALSE(p3.rescaling.has_value());
  CHECK(datum_properties(b2_crystallographic()).reduced);
}

TEST_CASE("root bases of finite standard data") {
  for (const char* type : {"A2", "B2"}) {
    auto d = standard_of(type);
    auto g = CoxeterGroup(CoxeterMatrix::of_type(type));
    auto slice = generate_roots(d, 32);
    auto bases = find_root_bases(slice);
    CHECK(bases.size() == enumerate_elements(g, 64).size());
    std::vector<std::size_t> simple;
    for (std::size_t i = 0; i < d.rank(); ++i) simple.push_back(*slice.find(d.roots[i]));
    CHECK(is_root_basis(slice, simple));
  }
  CHECK_THROWS_AS(find_root_bases(generate_roots(standard_of("A~1"), 3)), InputError);
}
