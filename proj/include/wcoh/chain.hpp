#pragma once

// Bounded cochain complexes of finitely presented abelian groups.

#include "wcoh/fgab.hpp"

#include <map>
#include <string>
#include <vector>

namespace wcoh {

/// C^{min} -> C^{min+1} -> ... -> C^{max}. Outside [min_degree, max_degree()]
/// every group is zero and every differential is the zero map.
class CochainComplex {
 public:
  CochainComplex() = default;
  /// differentials[i] : groups[i] -> groups[i+1]; exactly groups.size()-1 of them.
  CochainComplex(int min_degree, std::vector<FpAbPresentation> groups, std::vector<FpAbHom> differentials);

  /// A single group placed in `degree`.
  static CochainComplex concentrated(int degree, FpAbPresentation group);

  int min_degree() const { return min_degree_; }
  int max_degree() const { return min_degree_ + static_cast<int>(groups_.size()) - 1; }
  bool empty() const { return groups_.empty(); }

  FpAbPresentation group(int degree) const;
  /// d^degree : C^degree -> C^{degree+1}
  FpAbHom differential(int degree) const;

  const std::vector<FpAbPresentation>& groups() const { return groups_; }
  const std::vector<FpAbHom>& differentials() const { return differentials_; }

 private:
  int min_degree_ = 0;
  std::vector<FpAbPresentation> groups_;
  std::vector<FpAbHom> differentials_;
};

struct ComplexReport {
  bool ok = true;
  std::vector<int> failing_degrees;  // a such that d^{a+1} o d^a != 0
  std::vector<std::string> messages;
};

ComplexReport verify_complex(const CochainComplex& c);

/// Degree -> H^degree, for every degree in [min_degree, max_degree].
/// Throws InvalidInput naming the first failing degree if d o d != 0.
std::map<int, FgAbGroup> cohomology(const CochainComplex& c);

/// C[s]^n = C^{n+s}, differentials multiplied by (-1)^s.
CochainComplex shift(const CochainComplex& c, int s);

/// Total tensor complex with the Koszul sign d(x (x) y) = dx (x) y + (-1)^p x (x) dy.
/// Every group of both factors must be free; otherwise InvalidInput naming the degree.
CochainComplex tensor_complex(const CochainComplex& c, const CochainComplex& d);

/// A cochain map; components.at(n) : source^n -> target^n. Degrees without an
/// entry are the zero map.
struct ComplexMap {
  CochainComplex source;
  CochainComplex target;
  std::map<int, FpAbHom> components;

  FpAbHom component(int degree) const;
  /// f^{n+1} d_source - d_target f^n is the zero map for every n.
  bool commutes() const;
};

/// cone(f)^n = source^{n+1} + target^n, d(x, y) = (-dx, f x + dy).
CochainComplex cone(const ComplexMap& f);

}  // namespace wcoh
