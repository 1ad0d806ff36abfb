#include "wcoh/sncdata.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wcoh {

std::string subset_to_string(const Subset& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

Subset subset_without(const Subset& s, int element) {
  Subset out;
  out.reserve(s.size());
  for (int x : s)
    if (x != element) out.push_back(x);
  return out;
}

FpAbPresentation SncDatum::cohomology(const Subset& s, int b) const {
  auto it = strata.find(s);
  if (it == strata.end()) return FpAbPresentation(0);
  auto jt = it->second.cohomology.find(b);
  if (jt == it->second.cohomology.end()) return FpAbPresentation(0);
  return jt->second;
}

FpAbHom SncDatum::restriction(const Subset& s, int i, int b) const {
  FpAbPresentation src = cohomology(subset_without(s, i), b);
  FpAbPresentation tgt = cohomology(s, b);
  auto it = strata.find(s);
  if (it != strata.end()) {
    auto rt = it->second.restrictions.find(i);
    if (rt != it->second.restrictions.end()) {
      auto mt = rt->second.find(b);
      if (mt != rt->second.end()) return {std::move(src), std::move(tgt), mt->second};
    }
  }
  return FpAbHom::zero(src, tgt);
}

int SncDatum::max_cohomological_degree() const {
  int out = -1;
  for (const auto& [subset, data] : strata)
    if (!data.cohomology.empty()) out = std::max(out, data.cohomology.rbegin()->first);
  return out;
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::MissingAmbient: return "missing-ambient";
    case Violation::Kind::BadSubset: return "bad-subset";
    case Violation::Kind::DownwardClosure: return "downward-closure";
    case Violation::Kind::Connectedness: return "connectedness";
    case Violation::Kind::DimensionBound: return "dimension-bound";
    case Violation::Kind::BadRestriction: return "bad-restriction";
    case Violation::Kind::IllDefinedRestriction: return "ill-defined-restriction";
    case Violation::Kind::UnitRestriction: return "unit-restriction";
    case Violation::Kind::CommutingSquare: return "commuting-square";
  }
  return "unknown";
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid\n";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << wcoh::to_string(v.kind) << " at I=" << subset_to_string(v.subset);
    if (v.degree) os << " b=" << *v.degree;
    os << ": " << v.message << '\n';
  }
  return os.str();
}

namespace {

bool well_formed(const Subset& s, int n) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n) return false;
    if (i > 0 && s[i] <= s[i - 1]) return false;
  }
  return true;
}

std::set<int> degrees_touched(const SncDatum& s, const Subset& subset) {
  std::set<int> out;
  for (const auto& [b, _] : s.strata.at(subset).cohomology) out.insert(b);
  for (int i : subset) {
    auto it = s.strata.find(subset_without(subset, i));
    if (it != s.strata.end())
      for (const auto& [b, _] : it->second.cohomology) out.insert(b);
  }
  return out;
}

}  // namespace

ValidationReport validate(const SncDatum& s) {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, const Subset& subset, std::optional<int> degree, std::string msg) {
    report.violations.push_back({kind, subset, degree, std::move(msg)});
  };

  if (s.dim < 0) add(Violation::Kind::DimensionBound, {}, std::nullopt, "negative dimension");
  if (!s.nonempty({})) add(Violation::Kind::MissingAmbient, {}, std::nullopt, "the compactification Xbar is absent");

  std::vector<Subset> usable;
  for (const auto& [subset, data] : s.strata) {
    if (!well_formed(subset, s.n_components)) {
      add(Violation::Kind::BadSubset, subset, std::nullopt,
          "indices must be sorted, distinct and within 1.." + std::to_string(s.n_components));
      continue;
    }
    usable.push_back(subset);
  }

  for (const Subset& subset : usable) {
    const StratumData& data = s.strata.at(subset);
    const int k = static_cast<int>(subset.size());

    for (int i : subset)
      if (!s.nonempty(subset_without(subset, i)))
        add(Violation::Kind::DownwardClosure, subset, std::nullopt,
            "face " + subset_to_string(subset_without(subset, i)) + " is empty");

    if (k > s.dim)
      add(Violation::Kind::DimensionBound, subset, std::nullopt,
          "nonempty intersection of " + std::to_string(k) + " components in dimension " + std::to_string(s.dim));

    if (canonical_form(s.cohomology(subset, 0)) != FgAbGroup::free(1))
      add(Violation::Kind::Connectedness, subset, 0, "H^0 must be Z (strata are connected)");

    for (const auto& [b, group] : data.cohomology) {
      if ((b < 0 || b > 2 * (s.dim - k)) && !canonical_form(group).is_zero())
        add(Violation::Kind::DimensionBound, subset, b,
            "cohomology above degree " + std::to_string(2 * (s.dim - k)));
    }

    for (const auto& [i, per_degree] : data.restrictions) {
      if (std::find(subset.begin(), subset.end(), i) == subset.end()) {
        add(Violation::Kind::BadRestriction, subset, std::nullopt,
            "restriction along " + std::to_string(i) + " which is not in the subset");
        continue;
      }
      for (const auto& [b, m] : per_degree) {
        const FpAbPresentation src = s.cohomology(subset_without(subset, i), b);
        const FpAbPresentation tgt = s.cohomology(subset, b);
        if (m.rows() != tgt.generators || m.cols() != src.generators) {
          add(Violation::Kind::BadRestriction, subset, b,
              "restriction along " + std::to_string(i) + " has shape " + std::to_string(m.rows()) + "x" +
                  std::to_string(m.cols()) + ", expected " + std::to_string(tgt.generators) + "x" +
                  std::to_string(src.generators));
          continue;
        }
        if (!FpAbHom(src, tgt, m).is_well_defined())
          add(Violation::Kind::IllDefinedRestriction, subset, b,
              "restriction along " + std::to_string(i) + " does not respect the relations");
      }
    }
  }
  if (!report.ok()) return report;

  // Algebraic checks need consistent shapes, so they run only on clean data.
  for (const Subset& subset : usable) {
    if (subset.empty()) continue;
    for (int i : subset) {
      const FpAbHom r = s.restriction(subset, i, 0);
      // Z -> Z is an isomorphism iff it is onto.
      if (canonical_form(cokernel(r)).is_zero()) continue;
      add(Violation::Kind::UnitRestriction, subset, 0,
          "pullback along " + std::to_string(i) + " is not an isomorphism on H^0");
    }
    if (subset.size() < 2) continue;
    for (int b : degrees_touched(s, subset)) {
      for (std::size_t x = 0; x < subset.size(); ++x)
        for (std::size_t y = x + 1; y < subset.size(); ++y) {
          const int i = subset[x];
          const int j = subset[y];
          const FpAbHom via_i = s.restriction(subset, i, b).compose(s.restriction(subset_without(subset, i), j, b));
          const FpAbHom via_j = s.restriction(subset, j, b).compose(s.restriction(subset_without(subset, j), i, b));
          const FpAbHom diff(via_i.source, via_i.target, via_i.matrix - via_j.matrix);
          if (!diff.is_zero_map())
            add(Violation::Kind::CommutingSquare, subset, b,
                "restricting via " + std::to_string(i) + " and via " + std::to_string(j) + " disagree");
        }
    }
  }
  return report;
}

void require_valid(const SncDatum& s) {
  const ValidationReport report = validate(s);
  if (!report.ok()) throw InvalidInput("invalid SNC datum:\n" + report.to_string());
}

FpAbPresentation StrataLevel::group(int b) const {
  FpAbPresentation out(0);
  for (const auto& [subset, coh] : blocks) {
    auto it = coh.find(b);
    if (it != coh.end()) out = out.direct_sum(it->second);
  }
  return out;
}

StrataLevel strata_level(const SncDatum& s, int k) {
  StrataLevel level;
  level.k = k;
  if (k < 0 || k > s.dim) return level;
  // std::map orders subsets lexicographically already.
  for (const auto& [subset, data] : s.strata)
    if (static_cast<int>(subset.size()) == k) level.blocks.emplace_back(subset, data.cohomology);
  return level;
}

FpAbHom level_differential_unchecked(const SncDatum& s, int k, int b) {
  const StrataLevel lower = strata_level(s, k - 1);
  const StrataLevel upper = strata_level(s, k);
  const FpAbPresentation src = lower.group(b);
  const FpAbPresentation tgt = upper.group(b);
  IntMatrix m(tgt.generators, src.generators);

  std::map<Subset, std::size_t> src_offset;
  std::size_t offset = 0;
  for (const auto& [subset, coh] : lower.blocks) {
    src_offset[subset] = offset;
    offset += s.cohomology(subset, b).generators;
  }

  std::size_t row = 0;
  for (const auto& [subset, coh] : upper.blocks) {
    for (std::size_t j = 0; j < subset.size(); ++j) {
      const Subset face = subset_without(subset, subset[j]);
      auto it = src_offset.find(face);
      if (it == src_offset.end()) continue;
      IntMatrix block = s.restriction(subset, subset[j], b).matrix;
      if (j % 2 == 1) block = block.scaled(-1);
      m.set_block(row, it->second, block);
    }
    row += s.cohomology(subset, b).generators;
  }
  return {src, tgt, std::move(m)};
}

FpAbHom level_differential(const SncDatum& s, int k, int b) {
  require_valid(s);
  return level_differential_unchecked(s, k, b);
}

}  // namespace wcoh
