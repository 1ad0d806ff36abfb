#include "wcoh/chain.hpp"

#include <algorithm>

namespace wcoh {

CochainComplex::CochainComplex(int min_degree, std::vector<FpAbPresentation> groups,
                               std::vector<FpAbHom> differentials)
    : min_degree_(min_degree), groups_(std::move(groups)), differentials_(std::move(differentials)) {
  const std::size_t expected = groups_.empty() ? 0 : groups_.size() - 1;
  if (differentials_.size() != expected)
    throw InvalidInput("cochain complex: expected " + std::to_string(expected) + " differentials, got " +
                       std::to_string(differentials_.size()));
  for (std::size_t i = 0; i < differentials_.size(); ++i) {
    if (!(differentials_[i].source == groups_[i]) || !(differentials_[i].target == groups_[i + 1]))
      throw InvalidInput("cochain complex: differential in degree " + std::to_string(min_degree_ + static_cast<int>(i)) +
                         " does not match adjacent groups");
  }
}

CochainComplex CochainComplex::concentrated(int degree, FpAbPresentation group) {
  return {degree, {std::move(group)}, {}};
}

FpAbPresentation CochainComplex::group(int degree) const {
  if (degree < min_degree_ || degree > max_degree()) return FpAbPresentation(0);
  return groups_[static_cast<std::size_t>(degree - min_degree_)];
}

FpAbHom CochainComplex::differential(int degree) const {
  if (degree >= min_degree_ && degree < max_degree())
    return differentials_[static_cast<std::size_t>(degree - min_degree_)];
  return FpAbHom::zero(group(degree), group(degree + 1));
}

ComplexReport verify_complex(const CochainComplex& c) {
  ComplexReport report;
  for (int a = c.min_degree(); a + 1 < c.max_degree(); ++a) {
    const FpAbHom composite = c.differential(a + 1).compose(c.differential(a));
    if (!composite.is_zero_map()) {
      report.ok = false;
      report.failing_degrees.push_back(a);
      report.messages.push_back("d^" + std::to_string(a + 1) + " o d^" + std::to_string(a) +
                                " is nonzero: " + composite.matrix.to_string());
    }
  }
  for (int a = c.min_degree(); a < c.max_degree(); ++a) {
    if (!c.differential(a).is_well_defined()) {
      report.ok = false;
      report.messages.push_back("d^" + std::to_string(a) + " is not well defined on the quotient");
    }
  }
  return report;
}

std::map<int, FgAbGroup> cohomology(const CochainComplex& c) {
  const ComplexReport report = verify_complex(c);
  if (!report.ok) {
    const std::string where =
        report.failing_degrees.empty() ? std::string("?") : std::to_string(report.failing_degrees.front());
    throw InvalidInput("cohomology: not a complex (first failure at degree " + where + "): " +
                       report.messages.front());
  }
  std::map<int, FgAbGroup> out;
  for (int a = c.min_degree(); a <= c.max_degree(); ++a)
    out[a] = subquotient_cohomology(c.differential(a - 1), c.differential(a));
  return out;
}

CochainComplex shift(const CochainComplex& c, int s) {
  if (c.empty()) return c;
  std::vector<FpAbHom> diffs;
  const Integer sign = (s % 2 == 0) ? 1 : -1;
  for (const auto& d : c.differentials()) diffs.emplace_back(d.source, d.target, d.matrix.scaled(sign));
  return {c.min_degree() - s, c.groups(), std::move(diffs)};
}

namespace {

void require_free(const CochainComplex& c, const char* side) {
  for (int a = c.min_degree(); a <= c.max_degree(); ++a)
    if (!canonical_form(c.group(a)).is_free())
      throw InvalidInput(std::string("free-terms-only tensor: ") + side + " factor has torsion in degree " +
                         std::to_string(a));
}

// Placement of the summands c^p (x) d^q inside the total degree n = p + q,
// ordered by ascending p.
struct TotalDegree {
  std::vector<int> ps;
  std::vector<std::size_t> offsets;
  FpAbPresentation group;
};

TotalDegree total_degree(const CochainComplex& c, const CochainComplex& d, int n) {
  TotalDegree out;
  out.group = FpAbPresentation(0);
  for (int p = c.min_degree(); p <= c.max_degree(); ++p) {
    const int q = n - p;
    if (q < d.min_degree() || q > d.max_degree()) continue;
    out.ps.push_back(p);
    out.offsets.push_back(out.group.generators);
    out.group = out.group.direct_sum(c.group(p).tensor(d.group(q)));
  }
  return out;
}

}  // namespace

CochainComplex tensor_complex(const CochainComplex& c, const CochainComplex& d) {
  if (c.empty() || d.empty()) return {};
  require_free(c, "left");
  require_free(d, "right");

  const int lo = c.min_degree() + d.min_degree();
  const int hi = c.max_degree() + d.max_degree();
  std::vector<TotalDegree> degrees;
  for (int n = lo; n <= hi; ++n) degrees.push_back(total_degree(c, d, n));

  std::vector<FpAbPresentation> groups;
  for (const auto& t : degrees) groups.push_back(t.group);

  std::vector<FpAbHom> diffs;
  for (int n = lo; n < hi; ++n) {
    const TotalDegree& src = degrees[static_cast<std::size_t>(n - lo)];
    const TotalDegree& dst = degrees[static_cast<std::size_t>(n + 1 - lo)];
    IntMatrix m(dst.group.generators, src.group.generators);
    for (std::size_t si = 0; si < src.ps.size(); ++si) {
      const int p = src.ps[si];
      const int q = n - p;
      for (std::size_t ti = 0; ti < dst.ps.size(); ++ti) {
        const int tp = dst.ps[ti];
        if (tp == p + 1) {
          // dx (x) y
          const IntMatrix block =
              IntMatrix::kronecker(c.differential(p).matrix, IntMatrix::identity(d.group(q).generators));
          m.set_block(dst.offsets[ti], src.offsets[si], block);
        } else if (tp == p) {
          // (-1)^p x (x) dy
          IntMatrix block =
              IntMatrix::kronecker(IntMatrix::identity(c.group(p).generators), d.differential(q).matrix);
          if (p % 2 != 0) block = block.scaled(-1);
          m.set_block(dst.offsets[ti], src.offsets[si], block);
        }
      }
    }
    diffs.emplace_back(src.group, dst.group, std::move(m));
  }
  return {lo, std::move(groups), std::move(diffs)};
}

FpAbHom ComplexMap::component(int degree) const {
  if (auto it = components.find(degree); it != components.end()) return it->second;
  return FpAbHom::zero(source.group(degree), target.group(degree));
}

bool ComplexMap::commutes() const {
  const int lo = std::min(source.min_degree(), target.min_degree()) - 1;
  const int hi = std::max(source.max_degree(), target.max_degree()) + 1;
  for (const auto& [deg, f] : components) {
    if (!(f.source == source.group(deg)) || !(f.target == target.group(deg))) return false;
    if (!f.is_well_defined()) return false;
  }
  for (int n = lo; n <= hi; ++n) {
    const IntMatrix lhs = (component(n + 1).compose(source.differential(n))).matrix;
    const IntMatrix rhs = (target.differential(n).compose(component(n))).matrix;
    const FpAbHom diff(source.group(n), target.group(n + 1), lhs - rhs);
    if (!diff.is_zero_map()) return false;
  }
  return true;
}

CochainComplex cone(const ComplexMap& f) {
  if (!f.commutes()) throw InvalidInput("cone: map does not commute with the differentials");
  const int lo = std::min(f.source.min_degree() - 1, f.target.min_degree());
  const int hi = std::max(f.source.max_degree() - 1, f.target.max_degree());
  std::vector<FpAbPresentation> groups;
  for (int n = lo; n <= hi; ++n) groups.push_back(f.source.group(n + 1).direct_sum(f.target.group(n)));

  std::vector<FpAbHom> diffs;
  for (int n = lo; n < hi; ++n) {
    const FpAbPresentation& src = groups[static_cast<std::size_t>(n - lo)];
    const FpAbPresentation& dst = groups[static_cast<std::size_t>(n + 1 - lo)];
    const std::size_t src_split = f.source.group(n + 1).generators;
    const std::size_t dst_split = f.source.group(n + 2).generators;
    IntMatrix m(dst.generators, src.generators);
    m.set_block(0, 0, f.source.differential(n + 1).matrix.scaled(-1));
    m.set_block(dst_split, 0, f.component(n + 1).matrix);
    m.set_block(dst_split, src_split, f.target.differential(n).matrix);
    diffs.emplace_back(src, dst, std::move(m));
  }
  return {lo, std::move(groups), std::move(diffs)};
}

}  // namespace wcoh
