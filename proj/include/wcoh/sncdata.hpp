#pragma once

// Combinatorial model of a very simple normal crossing compactification
// (Xbar, dX = Y_1 u ... u Y_n): the nonempty strata Y_I, their integral
// cohomology, and the pullbacks H^b(Y_{I - i}) -> H^b(Y_I).

#include "wcoh/fgab.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wcoh {

/// Sorted, duplicate-free set of 1-based component indices. The empty
/// subset stands for Xbar itself.
using Subset = std::vector<int>;

std::string subset_to_string(const Subset& s);
Subset subset_without(const Subset& s, int element);

/// Degree b -> H^b as a presentation. Missing degrees are zero.
using GradedGroupData = std::map<int, FpAbPresentation>;

struct StratumData {
  GradedGroupData cohomology;
  /// restrictions[i][b] : H^b(Y_{I - i}) -> H^b(Y_I) on generators. Missing
  /// entries are zero maps.
  std::map<int, std::map<int, IntMatrix>> restrictions;

  friend bool operator==(const StratumData&, const StratumData&) = default;
};

struct SncDatum {
  int dim = 0;
  int n_components = 0;
  /// Absent subsets are empty strata.
  std::map<Subset, StratumData> strata;

  bool nonempty(const Subset& s) const { return strata.count(s) != 0; }
  /// H^b(Y_I); the zero group when absent.
  FpAbPresentation cohomology(const Subset& s, int b) const;
  /// Pullback H^b(Y_{I - i}) -> H^b(Y_I) as a homomorphism.
  FpAbHom restriction(const Subset& s, int i, int b) const;
  /// Largest b with a stored (possibly zero) cohomology presentation; -1 if none.
  int max_cohomological_degree() const;

  friend bool operator==(const SncDatum&, const SncDatum&) = default;
};

struct Violation {
  enum class Kind {
    MissingAmbient,
    BadSubset,
    DownwardClosure,
    Connectedness,
    DimensionBound,
    BadRestriction,
    IllDefinedRestriction,
    UnitRestriction,
    CommutingSquare,
  };
  Kind kind;
  Subset subset;
  std::optional<int> degree;
  std::string message;
};

std::string to_string(Violation::Kind kind);

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Checks every structural invariant; never throws.
ValidationReport validate(const SncDatum& s);

/// Throws InvalidInput with the report text unless validate() passes.
void require_valid(const SncDatum& s);

/// Y^{(k)}: the nonempty strata with |I| = k in lexicographic order.
struct StrataLevel {
  int k = 0;
  std::vector<std::pair<Subset, GradedGroupData>> blocks;

  /// Direct sum of the blocks in degree b, blocks in order.
  FpAbPresentation group(int b) const;
};

StrataLevel strata_level(const SncDatum& s, int k);

/// The pullback differential H^b(Y^{(k-1)}) -> H^b(Y^{(k)}): block
/// (I, I - i_j) is (-1)^{j-1} times the restriction, j the 1-based rank of
/// i_j inside I. Requires a valid datum.
FpAbHom level_differential(const SncDatum& s, int k, int b);

/// Same block matrix without validating the datum first (shapes must still
/// be consistent). Used by diagnostics that must run on broken data.
FpAbHom level_differential_unchecked(const SncDatum& s, int k, int b);

}  // namespace wcoh
