#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/random_snc.hpp"
#include "wcoh/builders.hpp"
#include "wcoh/weight.hpp"

using namespace wcoh;
using wcoh::testing::Rng;

TEST_CASE("projective space cohomology") {
  CHECK(projective_space_cohomology(0).size() == 1);
  const auto p2 = projective_space_cohomology(2);
  CHECK(p2.size() == 3);
  for (int b : {0, 2, 4}) CHECK(canonical_form(p2.at(b)) == FgAbGroup::free(1));
}

TEST_CASE("builder shapes") {
  CHECK(point_snc().n_components == 0);
  CHECK(point_snc().strata.size() == 1);
  CHECK(affine_space_snc(3).n_components == 1);
  CHECK(affine_space_snc(3).dim == 3);
  CHECK(torus_snc(3).n_components == 6);
  CHECK(torus_snc(0) == point_snc());
  CHECK(punctured_curve_snc(2, 3).strata.size() == 4);
  CHECK_THROWS_AS(affine_space_snc(0), InvalidInput);
  CHECK_THROWS_AS(punctured_curve_snc(1, 0), InvalidInput);
}

TEST_CASE("build by name") {
  CHECK(build("affine:2") == affine_space_snc(2));
  CHECK(build("curve:1,2") == punctured_curve_snc(1, 2));
  CHECK(build("torus:1*torus:1") == torus_snc(2));
  for (const auto& bad : {"", "affine", "affine:x", "torus:-1", "curve:1", "sphere:2", "affine:1*", "affine:0"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(build(bad), ParseError);
  }
}

TEST_CASE("known Betti numbers") {
  CHECK(known_compact_betti("torus:2") == std::map<int, long>{{2, 1}, {3, 2}, {4, 1}});
  CHECK(known_compact_betti("curve:1,2") == std::map<int, long>{{1, 3}, {2, 1}});
  CHECK(known_compact_betti("affine:3") == std::map<int, long>{{6, 1}});
  CHECK(known_compact_betti("point") == std::map<int, long>{{0, 1}});
  CHECK(known_compact_betti("affine:1*torus:1") == std::map<int, long>{{3, 1}, {4, 1}});
}

TEST_CASE("torus tables are Kunneth powers of torus:1") {
  const auto t1 = weight_cohomology_table(torus_snc(1));
  BigradedTable power = weight_cohomology_table(point_snc());
  for (int n = 1; n <= 3; ++n) {
    power = kunneth_table(power, t1);
    const auto tn = weight_cohomology_table(torus_snc(n));
    CHECK(tn.entries_equal(power));
    // Binomial ranks: (a, 2(n-a)) carries Z^{C(n,a)}.
    long binom = 1;
    for (int a = 0; a <= n; ++a) {
      CHECK(tn.at(a, 2 * (n - a)) == FgAbGroup::free(static_cast<std::size_t>(binom)));
      binom = binom * (n - a) / (a + 1);
    }
    CHECK(tn.entries().size() == static_cast<std::size_t>(n + 1));
  }
}

TEST_CASE("builders pass their checks") {
  for (const auto& name : example_names()) {
    CAPTURE(name);
    const auto s = build(name);
    CHECK(validate(s).ok());
    CHECK(check_prop1(s).passed);
    CHECK(euler_check(s).passed);
    CHECK(degeneration_check(s, *known_compact_betti(name)).passed);
  }
}

TEST_CASE("JSON round trip") {
  for (const auto& name : example_names()) {
    CAPTURE(name);
    const auto s = build(name);
    const auto text = to_json(s);
    CHECK(from_json_text(text) == s);
    CHECK(to_json(from_json_text(text)) == text);
  }
  SUBCASE("torsion survives") {
    SncDatum s = affine_space_snc(1);
    s.strata[{}].cohomology[1] = FpAbPresentation::cyclic_sum({2});
    s.strata[{}].cohomology[2] = FpAbPresentation(2, IntMatrix{{0}, {6}});
    s.strata[{}].cohomology[0] = FpAbPresentation::free(1);
    const auto back = from_json_text(to_json(s));
    CHECK(back == s);
    CHECK(canonical_form(back.cohomology({}, 1)) == FgAbGroup::cyclic(2));
  }
  SUBCASE("big integers survive") {
    SncDatum s = point_snc();
    s.strata[{}].cohomology[0] = FpAbPresentation(1, IntMatrix{{0}});
    s.strata[{}].cohomology[0].relations(0, 0) = Integer("340282366920938463463374607431768211456");
    CHECK(from_json_text(to_json(s)) == s);
  }
  SUBCASE("random data") {
    Rng rng(123);
    for (int trial = 0; trial < 50; ++trial) {
      const auto s = wcoh::testing::random_valid_snc(rng);
      REQUIRE(from_json_text(to_json(s)) == s);
    }
  }
}

TEST_CASE("JSON parse errors") {
  const std::string head = R"({"dim": 1, "components": 1, "strata": [)";
  const std::string ambient = R"({"subset": [], "cohomology": {"0": {"generators": 1}}})";
  auto parse = [&](const std::string& extra) { return from_json_text(head + ambient + extra + "]}"); };
  CHECK(parse("").strata.size() == 1);
  CHECK_THROWS_AS(from_json_text("{"), ParseError);
  CHECK_THROWS_AS(from_json_text("[]"), ParseError);
  CHECK_THROWS_AS(parse(R"(, {"subset": ["a"]})"), ParseError);
  CHECK_THROWS_AS(parse(R"(, {"subset": [2]})"), ParseError);
  CHECK_THROWS_AS(parse(R"(, {"subset": [1, 1]})"), ParseError);
  CHECK_THROWS_AS(parse(R"(, {"subset": []})"), ParseError);
  CHECK_THROWS_AS(parse(R"(, {"subset": [1], "cohomology": {"x": {"generators": 1}}})"), ParseError);
  CHECK_THROWS_AS(parse(R"(, {"subset": [1], "cohomology": {"0": {"generators": -1}}})"), ParseError);
  CHECK_THROWS_AS(from_json("/nonexistent/file.json"), ParseError);
  // Well-formed but invalid data parses; validation reports it.
  const auto s = parse(R"(, {"subset": [1], "cohomology": {"0": {"generators": 1}}, "restrictions": {"1": {"0": [[2]]}}})");
  CHECK_FALSE(validate(s).ok());
}

TEST_CASE("raw simplicial complex input") {
  const auto k = complex_from_json_text(R"({"vertices": 4, "facets": [[0, 1], [1, 2, 3]]})");
  CHECK(k.vertex_count() == 4);
  CHECK(k.dimension() == 2);
  CHECK(complex_from_json_text(R"({"vertices": 3, "facets": []})").vertex_count() == 3);
  CHECK_THROWS_AS(complex_from_json_text(R"({"vertices": 2, "facets": [[0, 5]]})"), ParseError);
  CHECK_THROWS_AS(complex_from_json_text(R"({"facets": 3})"), ParseError);
}
