#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracle.hpp"
#include "support/random_snc.hpp"
#include "wcoh/fgab.hpp"

using namespace wcoh;
using wcoh::testing::Rng;

namespace {

bool is_smith_form(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && sgn(d(i, j)) != 0) return false;
  const std::size_t k = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn(d(i, i)) < 0) return false;
    if (i + 1 < k && sgn(d(i, i)) == 0 && sgn(d(i + 1, i + 1)) != 0) return false;
    if (i + 1 < k && sgn(d(i, i)) != 0 && !mpz_divisible_p(d(i + 1, i + 1).get_mpz_t(), d(i, i).get_mpz_t()))
      return false;
  }
  return true;
}

FgAbGroup Z(std::size_t r = 1) { return FgAbGroup::free(r); }
FgAbGroup Zmod(long n) { return FgAbGroup::cyclic(n); }

}  // namespace

TEST_CASE("smith normal form examples") {
  SUBCASE("identity") {
    const auto snf = smith_normal_form(IntMatrix::identity(3));
    CHECK(snf.d == IntMatrix::identity(3));
    CHECK(snf.u * IntMatrix::identity(3) * snf.v == snf.d);
  }
  SUBCASE("zero") {
    const auto snf = smith_normal_form(IntMatrix::zero(2, 2));
    CHECK(snf.d.is_zero());
    CHECK(snf.rank() == 0);
  }
  SUBCASE("[[2,4],[6,8]]") {
    const IntMatrix a{{2, 4}, {6, 8}};
    // gcd of the entries is 2 and |det| = 8, forcing diag(2, 4).
    CHECK(oracle::determinantal_elementary_divisors(a) == std::vector<Integer>{2, 4});
    const auto snf = smith_normal_form(a);
    CHECK(snf.d == IntMatrix{{2, 0}, {0, 4}});
    CHECK(snf.u * a * snf.v == snf.d);
  }
  SUBCASE("rectangular and empty shapes") {
    const IntMatrix a{{0, 0, 3}, {0, 6, 0}};
    const auto snf = smith_normal_form(a);
    CHECK(snf.diagonal() == std::vector<Integer>{3, 6});
    CHECK(smith_normal_form(IntMatrix(0, 3)).v == IntMatrix::identity(3));
    CHECK(smith_normal_form(IntMatrix(2, 0)).u == IntMatrix::identity(2));
  }
  SUBCASE("deterministic") {
    const IntMatrix a{{4, -6, 9}, {12, 0, -3}, {5, 5, 5}};
    const auto x = smith_normal_form(a);
    const auto y = smith_normal_form(a);
    CHECK(x.u == y.u);
    CHECK(x.v == y.v);
    CHECK(x.d == y.d);
  }
}

TEST_CASE("smith normal form invariants on random matrices") {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = static_cast<std::size_t>(wcoh::testing::uniform(rng, 1, 6));
    const auto cols = static_cast<std::size_t>(wcoh::testing::uniform(rng, 1, 6));
    const IntMatrix a = trial % 2 ? wcoh::testing::random_matrix(rng, rows, cols)
                                  : wcoh::testing::random_sparse_matrix(rng, rows, cols);
    const auto snf = smith_normal_form(a);
    REQUIRE(snf.u * a * snf.v == snf.d);
    REQUIRE(abs(snf.u.determinant()) == 1);
    REQUIRE(abs(snf.v.determinant()) == 1);
    REQUIRE(is_smith_form(snf.d));
    std::vector<Integer> nonzero = snf.diagonal();
    nonzero.resize(snf.rank());
    if (rows <= 4 && cols <= 4) REQUIRE(nonzero == oracle::determinantal_elementary_divisors(a));
    REQUIRE(nonzero == oracle::elementary_divisors(a));
  }
}

TEST_CASE("large entries do not overflow") {
  IntMatrix a{{1, 0}, {0, 1}};
  a(0, 0) = Integer("123456789012345678901234567890");
  a(1, 1) = Integer("987654321098765432109876543210");
  const auto snf = smith_normal_form(a);
  CHECK(snf.u * a * snf.v == snf.d);
  CHECK(snf.d(0, 0) == gcd(a(0, 0), a(1, 1)));
  CHECK(snf.d(0, 0) * snf.d(1, 1) == a(0, 0) * a(1, 1));
}

TEST_CASE("FgAbGroup normalization") {
  CHECK(FgAbGroup::from_cyclic_orders({6, 4}) == FgAbGroup::from_invariant_factors(0, {2, 12}));
  CHECK(FgAbGroup::from_cyclic_orders({0, 1, -3}) == FgAbGroup::from_invariant_factors(1, {3}));
  CHECK(FgAbGroup::from_cyclic_orders({}).is_zero());
  CHECK_THROWS_AS(FgAbGroup::from_invariant_factors(0, {4, 6}), InvalidInput);
  CHECK_THROWS_AS(FgAbGroup::from_invariant_factors(0, {1}), InvalidInput);
  CHECK(FgAbGroup::from_cyclic_orders({0, 0, 2, 4}).to_string() == "Z^2 + Z/2 + Z/4");
  CHECK(FgAbGroup::from_cyclic_orders({2, 2}).to_string() == "(Z/2)^2");
  CHECK(FgAbGroup{}.to_string() == "0");
}

TEST_CASE("canonical_form examples") {
  CHECK(canonical_form({1, IntMatrix{{2}}}) == Zmod(2));
  CHECK(canonical_form(FpAbPresentation::free(2)) == Z(2));
  // relations as columns (2,0) and (0,4)
  CHECK(canonical_form({2, IntMatrix{{2, 0}, {0, 4}}}) == FgAbGroup::from_invariant_factors(0, {2, 4}));
  CHECK(canonical_form({3, IntMatrix{{1}, {1}, {0}}}) == Z(2));
}

TEST_CASE("canonical_form is invariant under unimodular changes of the relations") {
  Rng rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = static_cast<std::size_t>(wcoh::testing::uniform(rng, 1, 5));
    const auto r = static_cast<std::size_t>(wcoh::testing::uniform(rng, 0, 5));
    const IntMatrix rel = wcoh::testing::random_sparse_matrix(rng, n, r);
    const auto [p, p_inv] = wcoh::testing::random_unimodular(rng, n);
    const auto [q, q_inv] = wcoh::testing::random_unimodular(rng, r);
    const FgAbGroup g = canonical_form({n, rel});
    REQUIRE(canonical_form({n, p * rel * q}) == g);
    const auto [free, torsion] = oracle::quotient_group(n, rel);
    REQUIRE(g == FgAbGroup::from_invariant_factors(free, torsion));
  }
}

TEST_CASE("kernel, image and cokernel examples") {
  const auto Zp = FpAbPresentation::free(1);
  SUBCASE("multiplication by 2 on Z") {
    const FpAbHom f(Zp, Zp, IntMatrix{{2}});
    CHECK(canonical_form(kernel(f)).is_zero());
    CHECK(canonical_form(image(f)) == Z());
    CHECK(canonical_form(cokernel(f)) == Zmod(2));
  }
  SUBCASE("diagonal Z -> Z^2") {
    const FpAbHom f(Zp, FpAbPresentation::free(2), IntMatrix{{1}, {1}});
    CHECK(canonical_form(cokernel(f)) == Z());
    CHECK(canonical_form(kernel(f)).is_zero());
  }
  SUBCASE("zero map Z -> Z") {
    const FpAbHom f(Zp, Zp, IntMatrix{{0}});
    CHECK(canonical_form(kernel(f)) == Z());
    CHECK(canonical_form(image(f)).is_zero());
    CHECK(canonical_form(cokernel(f)) == Z());
  }
  SUBCASE("torsion source and target") {
    // Z/4 -> Z/2, 1 -> 1: kernel Z/2, image Z/2, cokernel 0.
    const FpAbHom f({1, IntMatrix{{4}}}, {1, IntMatrix{{2}}}, IntMatrix{{1}});
    CHECK(canonical_form(kernel(f)) == Zmod(2));
    CHECK(canonical_form(image(f)) == Zmod(2));
    CHECK(canonical_form(cokernel(f)).is_zero());
  }
  SUBCASE("ill-defined homomorphism is rejected") {
    const FpAbHom f({1, IntMatrix{{2}}}, Zp, IntMatrix{{1}});
    CHECK_FALSE(f.is_well_defined());
    CHECK_THROWS_AS(kernel(f), InvalidInput);
    CHECK_THROWS_AS(image(f), InvalidInput);
    CHECK_THROWS_AS(cokernel(f), InvalidInput);
  }
}

TEST_CASE("rank-nullity over Q for random well-defined homomorphisms") {
  Rng rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    const auto s = static_cast<std::size_t>(wcoh::testing::uniform(rng, 0, 4));
    const auto t = static_cast<std::size_t>(wcoh::testing::uniform(rng, 0, 4));
    const IntMatrix m = wcoh::testing::random_sparse_matrix(rng, t, s);
    const IntMatrix src_rel = wcoh::testing::random_sparse_matrix(rng, s, static_cast<std::size_t>(wcoh::testing::uniform(rng, 0, 2)));
    // Target relations contain the image of the source relations.
    const IntMatrix tgt_rel = (m * src_rel).hconcat(wcoh::testing::random_sparse_matrix(rng, t, 1));
    const FpAbHom f({s, src_rel}, {t, tgt_rel}, m);
    REQUIRE(f.is_well_defined());
    const auto src = canonical_form(f.source);
    const auto ker = canonical_form(kernel(f));
    const auto img = canonical_form(image(f));
    REQUIRE(src.free_rank() == ker.free_rank() + img.free_rank());
    // image is a subgroup of the target: rank target = rank image + rank cokernel
    REQUIRE(canonical_form(f.target).free_rank() == img.free_rank() + canonical_form(cokernel(f)).free_rank());
  }
}

TEST_CASE("subquotient cohomology examples") {
  const auto Z1 = FpAbPresentation::free(1);
  const auto Z2 = FpAbPresentation::free(2);
  SUBCASE("zero maps on Z^2") {
    CHECK(subquotient_cohomology(FpAbHom::zero(FpAbPresentation(0), Z2), FpAbHom::zero(Z2, FpAbPresentation(0))) == Z(2));
  }
  SUBCASE("exact Z -> Z^2 -> Z") {
    const FpAbHom in(Z1, Z2, IntMatrix{{1}, {1}});
    const FpAbHom out(Z2, Z1, IntMatrix{{1, -1}});
    CHECK(subquotient_cohomology(in, out).is_zero());
  }
  SUBCASE("Z -2-> Z -> 0") {
    const FpAbHom in(Z1, Z1, IntMatrix{{2}});
    CHECK(subquotient_cohomology(in, FpAbHom::zero(Z1, FpAbPresentation(0))) == Zmod(2));
  }
  SUBCASE("nonzero composite is rejected") {
    const FpAbHom in(Z1, Z1, IntMatrix{{1}});
    CHECK_THROWS_AS(subquotient_cohomology(in, in), InvalidInput);
  }
}

TEST_CASE("tensor and Tor examples") {
  CHECK(tensor(Z(2), Zmod(5)) == FgAbGroup::from_cyclic_orders({5, 5}));
  CHECK(tensor(Zmod(2), Zmod(3)).is_zero());
  // Tor(Z/m, Z/n) = Z/gcd(m, n)
  CHECK(tor(Zmod(4), Zmod(6)) == Zmod(2));
  CHECK(tor(Z(3), Zmod(6)).is_zero());
  CHECK(tensor(Z(2), Z(3)) == Z(6));
}

TEST_CASE("tensor and Tor are symmetric and additive") {
  Rng rng(3);
  auto random_group = [&]() {
    std::vector<Integer> orders;
    const long n = wcoh::testing::uniform(rng, 0, 3);
    for (long i = 0; i < n; ++i) orders.push_back(wcoh::testing::uniform(rng, 0, 12));
    return FgAbGroup::from_cyclic_orders(orders);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_group();
    const auto h = random_group();
    const auto k = random_group();
    REQUIRE(tensor(g, h) == tensor(h, g));
    REQUIRE(tor(g, h) == tor(h, g));
    REQUIRE(tensor(g.direct_sum(h), k) == tensor(g, k).direct_sum(tensor(h, k)));
    REQUIRE(tor(g.direct_sum(h), k) == tor(g, k).direct_sum(tor(h, k)));
    // Presentation-level tensor agrees with the formula.
    auto present = [](const FgAbGroup& x) {
      std::vector<Integer> orders(x.free_rank(), Integer(0));
      orders.insert(orders.end(), x.torsion().begin(), x.torsion().end());
      return FpAbPresentation::cyclic_sum(orders);
    };
    REQUIRE(canonical_form(present(g).tensor(present(h))) == tensor(g, h));
  }
}

TEST_CASE("integer linear algebra helpers") {
  const IntMatrix a{{2, 0}, {0, 3}};
  CHECK(solve_integer(a, {4, 9}) == std::optional<std::vector<Integer>>({2, 3}));
  CHECK_FALSE(solve_integer(a, {1, 0}).has_value());
  const IntMatrix k = integer_kernel(IntMatrix{{1, 1, 1}});
  CHECK(k.cols() == 2);
  CHECK((IntMatrix{{1, 1, 1}} * k).is_zero());
  const IntMatrix basis = lattice_basis(IntMatrix{{2, 4, 6}});
  CHECK(basis.cols() == 1);
  CHECK(abs(basis(0, 0)) == 2);
  CHECK(columns_in_span(IntMatrix{{6}}, IntMatrix{{2, 3}}));
  CHECK_FALSE(columns_in_span(IntMatrix{{1}}, IntMatrix{{2, 4}}));
}
