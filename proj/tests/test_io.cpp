#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rootforge/errors.hpp"
#include "rootforge/io.hpp"

using namespace rootforge;
using io::json;

TEST_CASE("Coxeter matrix documents") {
  auto m = io::read_coxeter_matrix(io::parse(R"({"generators":["r","s"],"matrix":[[1,4],[4,1]]})"));
  CHECK(m == CoxeterMatrix::of_type("B2"));
  CHECK(io::read_coxeter_matrix(io::parse(R"({"type":"H3"})")) == CoxeterMatrix::of_type("H3"));
  auto inf = io::read_coxeter_matrix(io::parse(R"({"generators":["a","b"],"matrix":[[1,0],[0,1]]})"));
  CHECK(inf.is_infinite(0, 1));
  for (const char* type : {"A3", "B~2", "I2(inf)", "E6"}) {
    auto t = CoxeterMatrix::of_type(type);
    CHECK(io::read_coxeter_matrix(io::parse(io::dump(io::to_json(t)))) == t);
  }
  CHECK_THROWS_AS(io::parse("{\"generators\": ["), InputError);
  CHECK_THROWS_AS(io::read_coxeter_matrix(io::parse(R"({"generators":["r","s"]})")), InputError);
  CHECK_THROWS_AS(io::read_coxeter_matrix(io::parse(R"({"generators":["r","s"],"matrix":[[1,2.5],[2.5,1]]})")),
                  InputError);
  CHECK_THROWS_AS(io::read_coxeter_matrix(io::parse(R"({"generators":["r","s"],"matrix":[[1,3],[4,1]]})")),
                  InputError);
  CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("NGCM and datum documents") {
  auto a = io::read_ngcm(io::parse(R"({"labels":["a","b"],"ngcm":[[2,-1],[-2,2]]})"));
  CHECK(a.a[1][0] == -2);
  CHECK(io::read_ngcm(io::to_json(a)).a == a.a);

  auto from_ngcm = io::read_datum(io::to_json(a));
  CHECK(from_ngcm.rank() == 2);
  CHECK(from_ngcm.ngcm() == a.a);

  auto d = io::read_datum(io::parse(
      R"({"labels":["a","b"],"roots":[[1,0,0],[0,1,0]],"coroots":[[2,-1,0],[-1,2,0]]})"));
  CHECK(d.dim_v() == 3);
  CHECK(d.ngcm()[0][1] == -1);
  auto back = io::read_datum(io::parse(io::dump(io::to_json(d))));
  CHECK(back.roots == d.roots);
  CHECK(back.coroots == d.coroots);
  CHECK(back.pairing == d.pairing);
  CHECK(back.labels == d.labels);

  auto paired = io::read_datum(io::parse(
      R"({"labels":["a","b"],"pairing":[[2,0],[0,1]],"roots":[[1,0],[0,1]],"coroots":[[1,0],[0,2]]})"));
  CHECK(paired.ngcm()[0][0] == 2);
  CHECK(paired.ngcm()[1][1] == 2);

  CHECK_THROWS_AS(io::read_datum(io::parse(R"({"roots":[[1,0]],"coroots":[[2,0],[0,1]]})")), InputError);
  CHECK_THROWS_AS(io::read_datum(io::parse(R"({"roots":[[1,0]],"coroots":[[2,0,0]]})")), InputError);
  CHECK_THROWS_AS(io::read_datum(io::parse(R"({"roots":[[1,0]],"coroots":[[2,0]],"ngcm":[[3]]})")), InputError);
  CHECK_THROWS_AS(io::read_datum(io::parse(R"({"ngcm":[[2,"x"],[-1,2]]})")), InputError);
}

TEST_CASE("abstract roots and twist sets") {
  CoxeterGroup b2(CoxeterMatrix::of_type("B2"));
  auto roots = io::read_roots(b2, io::parse(R"([{"refl":"s","sign":1},{"refl":"srs","sign":1},{"refl":"rsr","sign":-1}])"));
  REQUIRE(roots.size() == 3);
  CHECK(roots[2] == AbstractRoot{b2.parse("rsr"), -1});
  CHECK(io::read_roots(b2, io::to_json(b2, roots)) == roots);
  auto wrapped = io::parse(R"({"window":8,"roots":[{"refl":"r","sign":1}]})");
  CHECK(io::read_roots(b2, wrapped).size() == 1);
  CHECK(io::read_window_length(wrapped, 3) == 8);
  CHECK(io::read_window_length(io::parse("[]"), 3) == 3);
  CHECK_THROWS_AS(io::read_roots(b2, io::parse(R"([{"refl":"rs","sign":1}])")), InputError);
  CHECK_THROWS_AS(io::read_roots(b2, io::parse(R"([{"refl":"r","sign":2}])")), InputError);
  CHECK_THROWS_AS(io::read_roots(b2, io::parse(R"([{"refl":"x","sign":1}])")), InputError);

  auto A = io::read_twist_set(b2, io::parse(R"({"A":["rsr","s"]})"));
  CHECK(A.size() == 2);
  CHECK(io::read_twist_set(b2, io::twist_set_to_json(b2, A)) == A);
  CHECK(io::read_twist_set(b2, io::parse("[]")).empty());
  CHECK_THROWS_AS(io::read_twist_set(b2, io::parse(R"(["rs"])")), InputError);
}

TEST_CASE("twist documents") {
  auto m = CoxeterMatrix({"r", "s", "t", "u"}, {{1, 3, 0, 0}, {3, 1, 3, 0}, {0, 3, 1, 3}, {0, 0, 3, 1}});
  CoxeterGroup g(m);
  auto spec = io::read_twist_spec(m, io::parse(R"({"J":["r"],"K":["s","t"],"M":["u"]})"));
  CHECK(spec.L.empty());
  auto again = io::read_twist_spec(m, io::to_json(m, spec));
  CHECK(again.J == spec.J);
  CHECK(again.K == spec.K);
  CHECK(again.M == spec.M);
  auto result = io::to_json(g, apply_twist(g, spec));
  CHECK(result["words"][0] == "stsrsts");
  CHECK(result["normal_forms"][0] == "strsrts");
  CHECK(result["w_K"] == "sts");
  // The result is itself a group document.
  auto twisted = io::read_coxeter_matrix(result);
  CHECK(twisted.name(0) == "r'");
  CHECK(twisted.is_infinite(0, 1));
  CHECK_THROWS_AS(io::read_twist_spec(m, io::parse(R"({"J":["x"]})")), InputError);
  CHECK_THROWS_AS(io::read_twist_spec(m, io::parse("[]")), InputError);
}

TEST_CASE("order relation documents") {
  CoxeterGroup a2(CoxeterMatrix::of_type("A2"));
  CoxeterCocycle p(a2);
  auto rel = bruhat_order(p, p.mask_of(ReflectionSet{a2.parse("rsr")}));
  auto j = io::parse(io::dump(io::to_json(p, rel)));
  CHECK(j["kind"] == "BRUHAT");
  CHECK(j["A"] == json::array({"rsr"}));
  CHECK(j["elements"].size() == 6);
  auto back = io::read_order_relation(j);
  CHECK(back.below == rel.below);
  CHECK(back.hasse == rel.hasse);
  CHECK(back.partial_order == rel.partial_order);
  auto weak = io::read_order_relation(io::to_json(p, weak_order(p)));
  CHECK(weak.kind == OrderKind::Weak);
  CHECK_THROWS_AS(io::read_order_relation(io::parse(R"({"kind":"OTHER"})")), InputError);
}

TEST_CASE("root slice documents") {
  auto slice = generate_roots(BasedRootDatum::standard(CoxeterMatrix::of_type("B2")), 8);
  auto back = io::read_root_slice(io::parse(io::dump(io::to_json(slice))));
  CHECK(back.closed == slice.closed);
  CHECK(back.positive_count() == 4);
  REQUIRE(back.roots.size() == slice.roots.size());
  for (std::size_t i = 0; i < back.roots.size(); ++i) {
    CHECK(back.roots[i].root == slice.roots[i].root);
    CHECK(back.roots[i].depth == slice.roots[i].depth);
  }
  const std::string tsv = io::to_tsv(slice);
  CHECK(tsv.rfind("depth\troot\tcoroot\tpositive\n", 0) == 0);
  CHECK(std::count(tsv.begin(), tsv.end(), '\n') == static_cast<long>(slice.roots.size() + 1));
  CHECK(io::dump(io::to_json(slice)) == io::dump(io::to_json(generate_roots(slice.datum, 8))));
}
