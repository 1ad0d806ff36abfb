#include "wcoh/weight.hpp"

#include "wcoh/builders.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wcoh {

namespace {

WeightCochainComplex build_weight_complex(const SncDatum& s, int b) {
  std::vector<FpAbPresentation> groups;
  std::vector<FpAbHom> diffs;
  for (int a = 0; a <= s.dim; ++a) groups.push_back(strata_level(s, a).group(b));
  for (int a = 0; a < s.dim; ++a) diffs.push_back(level_differential_unchecked(s, a + 1, b));
  return {b, CochainComplex(0, std::move(groups), std::move(diffs))};
}

BigradedTable table_of_valid(const SncDatum& s) {
  BigradedTable table(s.dim, s.n_components);
  const int top = s.max_cohomological_degree();
  for (int b = 0; b <= top; ++b) {
    for (const auto& [a, g] : cohomology(build_weight_complex(s, b).complex)) table.set(a, b, g);
  }
  return table;
}

std::string group_or_zero(const std::map<int, FgAbGroup>& m, int k) {
  auto it = m.find(k);
  return it == m.end() ? "0" : it->second.to_string();
}

}  // namespace

WeightCochainComplex weight_cochain_complex(const SncDatum& s, int b) {
  require_valid(s);
  return build_weight_complex(s, b);
}

// ---------------------------------------------------------------- BigradedTable

void BigradedTable::set(int a, int b, FgAbGroup g) {
  if (g.is_zero())
    entries_.erase({a, b});
  else
    entries_[{a, b}] = std::move(g);
}

FgAbGroup BigradedTable::at(int a, int b) const {
  auto it = entries_.find({a, b});
  return it == entries_.end() ? FgAbGroup{} : it->second;
}

BigradedTable BigradedTable::shifted(int da, int db) const {
  BigradedTable out(dim_, n_components_);
  for (const auto& [ab, g] : entries_) out.set(ab.first + da, ab.second + db, g);
  return out;
}

BigradedTable BigradedTable::rationalized() const {
  BigradedTable out(dim_, n_components_);
  for (const auto& [ab, g] : entries_) out.set(ab.first, ab.second, FgAbGroup::free(g.free_rank()));
  return out;
}

std::map<int, long> BigradedTable::total_ranks() const {
  std::map<int, long> out;
  for (const auto& [ab, g] : entries_)
    if (g.free_rank() > 0) out[ab.first + ab.second] += static_cast<long>(g.free_rank());
  return out;
}

long BigradedTable::euler_characteristic() const {
  long chi = 0;
  for (const auto& [k, r] : total_ranks()) chi += (k % 2 == 0) ? r : -r;
  return chi;
}

std::string BigradedTable::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [ab, g] : entries_) {
    os << (first ? "" : ", ") << '(' << ab.first << ',' << ab.second << "): " << g.to_string();
    first = false;
  }
  os << '}';
  return os.str();
}

BigradedTable weight_cohomology_table(const SncDatum& s) {
  require_valid(s);
  return table_of_valid(s);
}

BigradedTable kunneth_table(const BigradedTable& t, const BigradedTable& u) {
  BigradedTable out(t.dim() + u.dim(), t.n_components() + u.n_components());
  std::map<std::pair<int, int>, FgAbGroup> acc;
  auto add = [&](int a, int b, const FgAbGroup& g) {
    if (g.is_zero()) return;
    auto [it, inserted] = acc.try_emplace({a, b}, g);
    if (!inserted) it->second = it->second.direct_sum(g);
  };
  for (const auto& [x, g] : t.entries())
    for (const auto& [y, h] : u.entries()) {
      const int b = x.second + y.second;
      add(x.first + y.first, b, tensor(g, h));
      add(x.first + y.first - 1, b, tor(g, h));
    }
  for (auto& [ab, g] : acc) out.set(ab.first, ab.second, g);
  return out;
}

// ---------------------------------------------------------------- checks

CheckReport check_prop1(const SncDatum& s) {
  CheckReport report{"prop1"};
  require_valid(s);
  const SimplicialComplex k = nerve(s);
  const auto reduced = reduced_cohomology(k);
  const BigradedTable table = table_of_valid(s);
  const int top = std::max(s.dim, k.dimension() + 1);
  for (int i = 0; i <= top; ++i) {
    auto it = reduced.find(i - 1);
    const FgAbGroup lhs = it == reduced.end() ? FgAbGroup{} : it->second;
    const FgAbGroup rhs = table.at(i, 0);
    std::string line = "i=" + std::to_string(i) + ": reduced H^" + std::to_string(i - 1) + " = " + lhs.to_string() +
                       ", H_Wc^{" + std::to_string(i) + ",0} = " + rhs.to_string();
    if (lhs == rhs)
      report.note("ok " + line);
    else
      report.fail(line);
  }
  return report;
}

CheckReport d2_check(const SncDatum& s) {
  CheckReport report{"d2"};
  const int top = std::max(s.max_cohomological_degree(), 0);
  for (int b = 0; b <= top; ++b)
    for (int k = 1; k < s.dim; ++k) {
      const FpAbHom first = level_differential_unchecked(s, k, b);
      const FpAbHom second = level_differential_unchecked(s, k + 1, b);
      const FpAbHom composite = second.compose(first);
      if (!composite.is_zero_map())
        report.fail("(k,b)=(" + std::to_string(k) + "," + std::to_string(b) + "): d^" + std::to_string(k + 1) +
                    " o d^" + std::to_string(k) + " = " + composite.matrix.to_string());
    }
  if (report.passed) report.note("ok: all pullback differentials square to zero");
  return report;
}

namespace {

void require_free_strata(const SncDatum& s, const char* side) {
  for (const auto& [subset, data] : s.strata)
    for (const auto& [b, group] : data.cohomology)
      if (!canonical_form(group).is_free())
        throw InvalidInput(std::string("free Kunneth only: ") + side + " stratum " + subset_to_string(subset) +
                           " has torsion in H^" + std::to_string(b));
}

// H^b(Y_I x Y_J) = sum_{p+q=b} H^p(Y_I) (x) H^q(Y_J), summands by ascending p.
struct KunnethSummand {
  int p;
  int q;
  std::size_t offset;
};

std::vector<KunnethSummand> kunneth_layout(const GradedGroupData& x, const GradedGroupData& y, int b) {
  std::vector<KunnethSummand> out;
  std::size_t offset = 0;
  for (const auto& [p, gx] : x) {
    auto it = y.find(b - p);
    if (it == y.end()) continue;
    out.push_back({p, b - p, offset});
    offset += gx.generators * it->second.generators;
  }
  return out;
}

}  // namespace

SncDatum product_snc(const SncDatum& sx, const SncDatum& sy) {
  require_valid(sx);
  require_valid(sy);
  require_free_strata(sx, "left");
  require_free_strata(sy, "right");

  const int shift_by = sx.n_components;
  SncDatum out;
  out.dim = sx.dim + sy.dim;
  out.n_components = sx.n_components + sy.n_components;

  auto combine = [&](const Subset& i, const Subset& j) {
    Subset k = i;
    for (int x : j) k.push_back(x + shift_by);
    return k;
  };

  for (const auto& [si, dx] : sx.strata)
    for (const auto& [sj, dy] : sy.strata) {
      StratumData data;
      std::set<int> degrees;
      for (const auto& [p, gx] : dx.cohomology)
        for (const auto& [q, gy] : dy.cohomology) degrees.insert(p + q);

      for (int b : degrees) {
        FpAbPresentation g(0);
        for (const auto& term : kunneth_layout(dx.cohomology, dy.cohomology, b))
          g = g.direct_sum(dx.cohomology.at(term.p).tensor(dy.cohomology.at(term.q)));
        data.cohomology[b] = std::move(g);
      }

      const Subset k = combine(si, sj);
      for (int element : k) {
        const bool left = element <= shift_by;
        const Subset src_i = left ? subset_without(si, element) : si;
        const Subset src_j = left ? sj : subset_without(sj, element - shift_by);
        const GradedGroupData& src_x = sx.strata.at(src_i).cohomology;
        const GradedGroupData& src_y = sy.strata.at(src_j).cohomology;

        for (int b : degrees) {
          const auto tgt_layout = kunneth_layout(dx.cohomology, dy.cohomology, b);
          const auto src_layout = kunneth_layout(src_x, src_y, b);
          std::size_t src_gens = 0;
          for (const auto& t : src_layout) src_gens += src_x.at(t.p).generators * src_y.at(t.q).generators;
          const std::size_t tgt_gens = data.cohomology.at(b).generators;
          if (src_gens == 0 || tgt_gens == 0) continue;

          IntMatrix m(tgt_gens, src_gens);
          for (const auto& t : tgt_layout)
            for (const auto& sterm : src_layout) {
              if (sterm.p != t.p) continue;
              const IntMatrix block =
                  left ? IntMatrix::kronecker(sx.restriction(si, element, t.p).matrix,
                                              IntMatrix::identity(dy.cohomology.at(t.q).generators))
                       : IntMatrix::kronecker(IntMatrix::identity(dx.cohomology.at(t.p).generators),
                                              sy.restriction(sj, element - shift_by, t.q).matrix);
              m.set_block(t.offset, sterm.offset, block);
            }
          data.restrictions[element][b] = std::move(m);
        }
      }
      out.strata.emplace(k, std::move(data));
    }
  return out;
}

CheckReport a1_stability_check(const SncDatum& s) {
  CheckReport report{"stability"};
  const BigradedTable base = weight_cohomology_table(s);
  const BigradedTable product = weight_cohomology_table(product_snc(s, affine_space_snc(1)));
  const BigradedTable expected = base.shifted(0, 2);
  report.note("table(X)        = " + base.to_string());
  report.note("table(X x A^1)  = " + product.to_string());
  if (product.entries_equal(expected))
    report.note("ok: table(X x A^1) is table(X) moved by (0,+2)");
  else
    report.fail("expected " + expected.to_string());
  return report;
}

CheckReport product_consistency_check(const SncDatum& sx, const SncDatum& sy) {
  CheckReport report{"product-consistency"};
  const SncDatum prod = product_snc(sx, sy);
  const ValidationReport valid = validate(prod);
  if (!valid.ok()) {
    report.fail("product datum is invalid:\n" + valid.to_string());
    return report;
  }
  const BigradedTable tx = weight_cohomology_table(sx);
  const BigradedTable ty = weight_cohomology_table(sy);
  const BigradedTable direct = table_of_valid(prod);
  const BigradedTable formula = kunneth_table(tx, ty);
  if (direct.entries_equal(formula))
    report.note("ok: table(X x Y) = Kunneth(table X, table Y) = " + direct.to_string());
  else
    report.fail("table(X x Y) = " + direct.to_string() + " but Kunneth gives " + formula.to_string());

  // Row b of the product is the sum over p + q = b of R^p(X) (x) R^q(Y).
  const int top = prod.max_cohomological_degree();
  for (int b = 0; b <= top; ++b) {
    std::map<int, FgAbGroup> rows;
    for (int p = 0; p <= b; ++p) {
      const CochainComplex t = tensor_complex(build_weight_complex(sx, p).complex, build_weight_complex(sy, b - p).complex);
      for (const auto& [a, g] : cohomology(t)) rows[a] = rows.count(a) ? rows[a].direct_sum(g) : g;
    }
    for (const auto& [a, g] : rows)
      if (!(g == direct.at(a, b)))
        report.fail("row b=" + std::to_string(b) + " a=" + std::to_string(a) + ": tensor of weight complexes gives " +
                    g.to_string() + ", product datum gives " + direct.at(a, b).to_string());
  }
  return report;
}

BigradedTable e2_page(const SncDatum& s, bool rational) {
  const BigradedTable t = weight_cohomology_table(s);
  return rational ? t.rationalized() : t;
}

CheckReport degeneration_check(const SncDatum& s, const std::map<int, long>& expected_hc) {
  CheckReport report{"degeneration"};
  const std::map<int, long> actual = weight_cohomology_table(s).total_ranks();
  std::set<int> degrees;
  for (const auto& [k, v] : actual) degrees.insert(k);
  for (const auto& [k, v] : expected_hc) degrees.insert(k);
  for (int k : degrees) {
    const long got = actual.count(k) ? actual.at(k) : 0;
    const long want = expected_hc.count(k) ? expected_hc.at(k) : 0;
    const std::string line = "k=" + std::to_string(k) + ": sum_{a+b=k} rank = " + std::to_string(got) +
                             ", expected dim H_c^k = " + std::to_string(want);
    if (got == want)
      report.note("ok " + line);
    else
      report.fail(line);
  }
  return report;
}

CheckReport euler_check(const SncDatum& s) {
  CheckReport report{"euler"};
  const long lhs = weight_cohomology_table(s).euler_characteristic();
  long rhs = 0;
  for (const auto& [subset, data] : s.strata) {
    long chi = 0;
    for (const auto& [b, g] : data.cohomology) {
      const long r = static_cast<long>(canonical_form(g).free_rank());
      chi += (b % 2 == 0) ? r : -r;
    }
    rhs += (subset.size() % 2 == 0) ? chi : -chi;
  }
  const std::string line = "table alternating sum = " + std::to_string(lhs) +
                           ", sum_k (-1)^k chi(Y^(k)) = " + std::to_string(rhs);
  if (lhs == rhs)
    report.note("ok " + line);
  else
    report.fail(line);
  return report;
}

// ---------------------------------------------------------------- contractibility

std::string to_string(ContractibilityStatus status) {
  switch (status) {
    case ContractibilityStatus::ContractibleCertified: return "contractible-certified";
    case ContractibilityStatus::HomologyPoint: return "homology-point";
    case ContractibilityStatus::SphereLike: return "sphere-like";
    case ContractibilityStatus::Other: return "other";
  }
  return "other";
}

std::string ContractibilityReport::summary() const {
  std::ostringstream os;
  os << to_string(status);
  if (status == ContractibilityStatus::SphereLike) os << " S^" << sphere_dimension;
  return os.str();
}

ContractibilityReport contractibility_report(const SimplicialComplex& k, std::size_t budget) {
  ContractibilityReport report;
  report.reduced = reduced_cohomology(k);
  std::vector<int> nonzero;
  for (const auto& [deg, g] : report.reduced)
    if (!g.is_zero()) nonzero.push_back(deg);

  // Reduced H^0 = 0 and H^{-1} = 0 means nonempty and connected.
  const bool connected = group_or_zero(report.reduced, -1) == "0" && group_or_zero(report.reduced, 0) == "0";
  if (connected) {
    report.presentation = edge_path_presentation(k);
    report.simplified = simplify_presentation(*report.presentation, budget);
  }

  if (nonzero.empty()) {
    report.status = report.simplified->is_trivial_presentation() ? ContractibilityStatus::ContractibleCertified
                                                                 : ContractibilityStatus::HomologyPoint;
  } else if (nonzero.size() == 1 && report.reduced.at(nonzero[0]) == FgAbGroup::free(1)) {
    report.status = ContractibilityStatus::SphereLike;
    report.sphere_dimension = nonzero[0];
  } else {
    report.status = ContractibilityStatus::Other;
  }
  return report;
}

ContractibilityReport contractibility_report(const SncDatum& s, std::size_t budget) {
  return contractibility_report(nerve(s), budget);
}

}  // namespace wcoh
