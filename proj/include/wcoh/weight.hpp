#pragma once

// Weight cochain complexes H^b(Xbar) -> H^b(Y^(1)) -> ... -> H^b(Y^(d)),
// the bigraded compactly supported weight cohomology table they compute,
// and the consistency checks run against it.

#include "wcoh/chain.hpp"
#include "wcoh/dual.hpp"
#include "wcoh/sncdata.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wcoh {

struct WeightCochainComplex {
  int b = 0;
  /// Degree a holds H^b(Y^(a)), a = 0..dim.
  CochainComplex complex;
};

WeightCochainComplex weight_cochain_complex(const SncDatum& s, int b);

/// (a, b) -> H_{W,c}^{a,b}(X; Z). Only nonzero entries are stored.
class BigradedTable {
 public:
  BigradedTable() = default;
  BigradedTable(int dim, int n_components) : dim_(dim), n_components_(n_components) {}

  int dim() const { return dim_; }
  int n_components() const { return n_components_; }

  /// Zero entries are dropped.
  void set(int a, int b, FgAbGroup g);
  FgAbGroup at(int a, int b) const;
  const std::map<std::pair<int, int>, FgAbGroup>& entries() const { return entries_; }

  /// (a, b) -> (a + da, b + db)
  BigradedTable shifted(int da, int db) const;
  /// Free parts only.
  BigradedTable rationalized() const;
  /// k -> sum over a + b = k of the free ranks.
  std::map<int, long> total_ranks() const;
  long euler_characteristic() const;

  bool entries_equal(const BigradedTable& other) const { return entries_ == other.entries_; }
  std::string to_string() const;

 private:
  int dim_ = 0;
  int n_components_ = 0;
  std::map<std::pair<int, int>, FgAbGroup> entries_;
};

BigradedTable weight_cohomology_table(const SncDatum& s);

/// Integral Kunneth formula for a product whose weight complexes are
/// degreewise free in every row b:
///   (a, b) -> sum_{p+q=b} [ sum_{i+j=a} T(i,p) (x) U(j,q)  +  sum_{i+j=a+1} Tor(T(i,p), U(j,q)) ].
BigradedTable kunneth_table(const BigradedTable& t, const BigradedTable& u);

struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::vector<std::string> details;

  void fail(std::string msg) {
    passed = false;
    details.push_back("FAIL " + std::move(msg));
  }
  void note(std::string msg) { details.push_back(std::move(msg)); }
};

/// Reduced H^{i-1} of the nerve against H_{W,c}^{i,0}, for every i.
CheckReport check_prop1(const SncDatum& s);

/// d o d = 0 for every pullback differential (k, b). Runs on structurally
/// sound data even when validation fails, naming the offending (k, b).
CheckReport d2_check(const SncDatum& s);

/// Compactification of X x Y from compactifications of X and Y: components
/// of sx keep their indices, those of sy are shifted by sx.n_components.
/// Throws InvalidInput ("free Kunneth only") when a stratum has torsion.
SncDatum product_snc(const SncDatum& sx, const SncDatum& sy);

/// table(s x A^1) equals table(s) shifted by (0, +2).
CheckReport a1_stability_check(const SncDatum& s);

/// Table of product_snc(sx, sy) against kunneth_table of the factor tables,
/// and each row against the cohomology of the tensor product of weight
/// complexes.
CheckReport product_consistency_check(const SncDatum& sx, const SncDatum& sy);

BigradedTable e2_page(const SncDatum& s, bool rational);

/// Sum over a + b = k of rank H^{a,b} equals the expected compactly supported
/// Betti number b_c^k, for every k.
CheckReport degeneration_check(const SncDatum& s, const std::map<int, long>& expected_hc);

/// Alternating rank sum of the table against sum_k (-1)^k chi(Y^(k)).
CheckReport euler_check(const SncDatum& s);

enum class ContractibilityStatus { ContractibleCertified, HomologyPoint, SphereLike, Other };

std::string to_string(ContractibilityStatus status);

struct ContractibilityReport {
  ContractibilityStatus status = ContractibilityStatus::Other;
  int sphere_dimension = 0;  // meaningful for SphereLike; -1 is the empty sphere
  std::map<int, FgAbGroup> reduced;
  std::optional<GroupPresentation> presentation;
  std::optional<GroupPresentation> simplified;

  std::string summary() const;
};

ContractibilityReport contractibility_report(const SimplicialComplex& k, std::size_t budget = kDefaultSimplifyBudget);
ContractibilityReport contractibility_report(const SncDatum& s, std::size_t budget = kDefaultSimplifyBudget);

}  // namespace wcoh
