// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "support/oracle.hpp"
#include "support/random_snc.hpp"
#include "wcoh/builders.hpp"
#include "wcoh/weight.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace wcoh;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && passed) {
      passed = false;
      detail = what;
    }
  }
};

std::vector<std::string> prop1_corpus() {
  std::vector<std::string> names;
  for (int d = 1; d <= 4; ++d) names.push_back("affine:" + std::to_string(d));
  for (int n = 1; n <= 3; ++n) names.push_back("torus:" + std::to_string(n));
  for (int g = 0; g <= 2; ++g)
    for (int n = 1; n <= 3; ++n) names.push_back("curve:" + std::to_string(g) + "," + std::to_string(n));
  for (const char* x : {"affine:1", "torus:1"})
    for (const char* y : {"affine:1", "torus:1"}) names.push_back(std::string(x) + "*" + y);
  return names;
}

BigradedTable single(int a, int b) {
  BigradedTable t;
  t.set(a, b, FgAbGroup::free(1));
  return t;
}

Outcome criterion_1() {
  Outcome o;
  const auto t = weight_cohomology_table(affine_space_snc(1));
  o.require(t.entries_equal(single(0, 2)), "table is " + t.to_string());
  return o;
}

Outcome criterion_2() {
  Outcome o;
  for (const auto& name : prop1_corpus()) {
    const auto r = check_prop1(build(name));
    o.require(r.passed, name + " fails prop1");
  }
  return o;
}

Outcome criterion_3() {
  Outcome o;
  auto run = [&](const SncDatum& s, const std::string& label) {
    for (int b = 0; b <= s.max_cohomological_degree(); ++b) {
      const auto report = verify_complex(weight_cochain_complex(s, b).complex);
      o.require(report.ok, label + " row b=" + std::to_string(b));
    }
  };
  auto corpus = prop1_corpus();
  for (const auto& name : example_names()) corpus.push_back(name);
  for (const auto& name : corpus) run(build(name), name);
  testing::Rng rng(20240601);
  for (int i = 0; i < 200; ++i) {
    const auto s = testing::random_valid_snc(rng);
    o.require(validate(s).ok(), "random datum " + std::to_string(i) + " invalid");
    if (o.passed) run(s, "random datum " + std::to_string(i));
  }
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const auto p2 = weight_cohomology_table(affine_space_snc(2));
  const auto p1p1 = weight_cohomology_table(product_snc(affine_space_snc(1), affine_space_snc(1)));
  o.require(p2.entries_equal(p1p1), p2.to_string() + " vs " + p1p1.to_string());
  o.require(p2.entries_equal(single(0, 4)), "A^2 table is " + p2.to_string());
  return o;
}

Outcome criterion_5() {
  Outcome o;
  for (const char* name : {"point", "affine:1", "torus:1", "torus:2", "curve:1,1"})
    o.require(a1_stability_check(build(name)).passed, std::string(name) + " not stable");
  return o;
}

// Reduced coboundary delta^p : C^p -> C^{p+1}, p >= -1, built from faces.
IntMatrix coboundary(const SimplicialComplex& k, int p) {
  const auto rows = k.faces_of_dimension(p + 1);
  const auto cols = k.faces_of_dimension(p);
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < rows[r].size(); ++j) {
      Face f = rows[r];
      f.erase(f.begin() + static_cast<long>(j));
      const auto c = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), f) - cols.begin());
      m(r, c) = j % 2 ? -1 : 1;
    }
  return m;
}

Outcome criterion_6() {
  Outcome o;
  const auto k = SimplicialComplex::from_facets({{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                                 {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
  const auto h = reduced_cohomology(k);
  for (int p = 0; p <= 2; ++p) {
    const std::size_t cp = k.faces_of_dimension(p).size();
    const IntMatrix in = coboundary(k, p - 1);
    const IntMatrix out = coboundary(k, p);
    const std::size_t free = cp - oracle::rational_rank(in) - oracle::rational_rank(out);
    std::vector<Integer> torsion;
    for (const auto& d : oracle::elementary_divisors(in))
      if (d > 1) torsion.push_back(d);
    const auto expected = FgAbGroup::from_invariant_factors(free, torsion);
    o.require(h.at(p) == expected, "degree " + std::to_string(p) + ": got " + h.at(p).to_string() +
                                       ", oracle " + expected.to_string());
  }
  o.require(h.at(0).is_zero() && h.at(1).is_zero() && h.at(2) == FgAbGroup::cyclic(2), "not (0, 0, Z/2)");
  return o;
}

Outcome criterion_7() {
  Outcome o;
  const auto s0 = contractibility_report(torus_snc(1));
  o.require(s0.reduced.at(0) == FgAbGroup::free(1), "torus:1 reduced H^0 is " + s0.reduced.at(0).to_string());
  o.require(s0.status == ContractibilityStatus::SphereLike && s0.sphere_dimension == 0, "torus:1 is " + s0.summary());
  const auto s1 = contractibility_report(torus_snc(2));
  o.require(s1.reduced.at(1) == FgAbGroup::free(1), "torus:2 reduced H^1 is " + s1.reduced.at(1).to_string());
  o.require(s1.status == ContractibilityStatus::SphereLike && s1.sphere_dimension == 1, "torus:2 is " + s1.summary());
  o.require(s1.simplified && s1.simplified->generators == 1 && s1.simplified->relators.empty(),
            "pi1 of torus:2 nerve does not simplify to Z");
  return o;
}

Outcome criterion_8() {
  Outcome o;
  for (int d = 1; d <= 4; ++d) {
    const auto r = contractibility_report(affine_space_snc(d));
    o.require(r.status == ContractibilityStatus::ContractibleCertified, "affine:" + std::to_string(d) + " is " + r.summary());
  }
  return o;
}

Outcome criterion_9() {
  Outcome o;
  o.require(degeneration_check(torus_snc(1), {{1, 1}, {2, 1}}).passed, "torus:1");
  const auto t1 = weight_cohomology_table(torus_snc(1));
  const auto square = kunneth_table(t1, t1).rationalized().total_ranks();
  o.require(square == std::map<int, long>{{2, 1}, {3, 2}, {4, 1}}, "tensor square of torus:1 has unexpected ranks");
  o.require(degeneration_check(torus_snc(2), square).passed, "torus:2");
  for (int g = 0; g <= 2; ++g)
    for (int n = 1; n <= 3; ++n)
      o.require(degeneration_check(punctured_curve_snc(g, n), {{1, n - 1 + 2 * g}, {2, 1}}).passed,
                "curve:" + std::to_string(g) + "," + std::to_string(n));
  return o;
}

Outcome criterion_10() {
  Outcome o;
  auto expect = [&](const SncDatum& s, long chi, const std::string& label) {
    o.require(euler_check(s).passed, label + " euler_check");
    o.require(weight_cohomology_table(s).euler_characteristic() == chi, label + " chi != " + std::to_string(chi));
  };
  for (int d = 1; d <= 4; ++d) expect(affine_space_snc(d), 1, "affine:" + std::to_string(d));
  for (int n = 1; n <= 3; ++n) expect(torus_snc(n), 0, "torus:" + std::to_string(n));
  for (int g = 0; g <= 2; ++g)
    for (int n = 1; n <= 3; ++n)
      expect(punctured_curve_snc(g, n), 2 - 2 * g - n, "curve:" + std::to_string(g) + "," + std::to_string(n));
  for (const auto& name : example_names()) o.require(euler_check(build(name)).passed, name + " euler_check");
  return o;
}

Outcome criterion_11() {
  Outcome o;
  testing::Rng rng(1234567);
  for (int trial = 0; trial < 1000 && o.passed; ++trial) {
    const auto rows = static_cast<std::size_t>(testing::uniform(rng, 1, 8));
    const auto cols = static_cast<std::size_t>(testing::uniform(rng, 1, 8));
    const IntMatrix a = trial % 3 == 0 ? testing::random_sparse_matrix(rng, rows, cols)
                                       : testing::random_matrix(rng, rows, cols, -20, 20);
    const auto snf = smith_normal_form(a);
    const std::string tag = "matrix " + std::to_string(trial);
    o.require(snf.u * a * snf.v == snf.d, tag + ": u a v != d");
    o.require(abs(snf.u.determinant()) == 1 && abs(snf.v.determinant()) == 1, tag + ": not unimodular");
    const auto diag = snf.diagonal();
    for (std::size_t i = 0; i < snf.d.rows(); ++i)
      for (std::size_t j = 0; j < snf.d.cols(); ++j)
        if (i != j) o.require(sgn(snf.d(i, j)) == 0, tag + ": off-diagonal entry");
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      o.require(sgn(diag[i]) >= 0, tag + ": negative diagonal");
      if (sgn(diag[i]) == 0)
        o.require(sgn(diag[i + 1]) == 0, tag + ": zero before nonzero");
      else
        o.require(mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t()) != 0, tag + ": divisibility chain");
    }
    const auto [free, torsion] = oracle::quotient_group(rows, a);
    o.require(canonical_form({rows, a}) == FgAbGroup::from_invariant_factors(free, torsion),
              tag + ": canonical_form disagrees with oracle");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"A^1 table is Z at (0,2)", criterion_1},
      {"row b=0 equals shifted reduced cohomology of the dual complex", criterion_2},
      {"d o d = 0 on corpus and 200 random data", criterion_3},
      {"A^2 from P^2 and from P^1 x P^1 agree", criterion_4},
      {"A^1-stability", criterion_5},
      {"RP^2 torsion against oracle", criterion_6},
      {"sphere checks for torus:1 and torus:2", criterion_7},
      {"affine:1..4 contractible-certified", criterion_8},
      {"degeneration against known Betti data", criterion_9},
      {"Euler characteristics", criterion_10},
      {"SNF property suite, 1000 matrices", criterion_11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double limit = i + 1 == 11 ? 30.0 : 1.0;
    if (o.passed && secs > limit) {
      o.passed = false;
      std::ostringstream msg;
      msg << "took " << secs << " s (limit " << limit << " s)";
      o.detail = msg.str();
    }
    std::ostringstream line;
    line << (o.passed ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
    line.precision(3);
    line << " [" << std::fixed << secs << " s]";
    if (!o.passed) line << " -- " << o.detail;
    std::cout << line.str() << "\n";
    if (!o.passed) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
