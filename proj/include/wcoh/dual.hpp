#pragma once

// The dual boundary complex (nerve of the boundary components), its reduced
// integral cohomology and edge-path presentations of its fundamental group.

#include "wcoh/chain.hpp"
#include "wcoh/sncdata.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace wcoh {

using Face = std::vector<int>;

/// Abstract simplicial complex on integer vertex labels. Faces are sorted,
/// nonempty and downward closed; the empty face is implicit.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Downward closure of the given faces. Throws InvalidInput on repeated
  /// vertices inside a face.
  static SimplicialComplex from_facets(const std::vector<Face>& facets);

  const std::set<Face>& faces() const { return faces_; }
  std::vector<int> vertices() const;
  std::size_t vertex_count() const;
  /// -1 for the empty complex.
  int dimension() const;
  /// Faces with exactly p + 1 vertices, lexicographic.
  std::vector<Face> faces_of_dimension(int p) const;
  bool contains(const Face& f) const { return faces_.count(f) != 0; }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::set<Face> faces_;
};

/// Vertices are the components i with Y_i nonempty; I is a face iff Y_I is
/// nonempty. Requires a valid datum.
SimplicialComplex nerve(const SncDatum& s);

/// Augmented cochain complex Z -> C^0 -> C^1 -> ..., the augmentation in
/// degree -1, delta(phi)(sigma) = sum_j (-1)^j phi(sigma - v_j).
CochainComplex reduced_cochain_complex(const SimplicialComplex& k);

/// Degree p (from -1 to dim) -> reduced H^p(K; Z).
std::map<int, FgAbGroup> reduced_cohomology(const SimplicialComplex& k);

/// Integral simplicial homology H_p for p = 0..dim computed from boundary
/// matrices; independent of the cochain route.
std::map<int, FgAbGroup> simplicial_homology(const SimplicialComplex& k);

long euler_characteristic(const SimplicialComplex& k);

/// Connected components as vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const SimplicialComplex& k);

/// Letters are +-(g+1) for generator g (0-based), negative meaning inverse.
using Word = std::vector<int>;

struct GroupPresentation {
  std::size_t generators = 0;
  std::vector<Word> relators;

  bool is_trivial_presentation() const { return generators == 0 && relators.empty(); }
  /// Abelianized relation matrix, one column per relator.
  FpAbPresentation abelianization() const;
  std::string to_string() const;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Spanning-tree presentation: generators are the non-tree edges (u < v,
/// oriented u -> v, lexicographic), relators the boundaries of 2-faces.
/// Throws InvalidInput listing the components when k is not connected.
GroupPresentation edge_path_presentation(const SimplicialComplex& k);

inline constexpr std::size_t kDefaultSimplifyBudget = 10000;

/// Tietze simplification: free and cyclic reduction, removal of trivial and
/// duplicate relators, elimination of generators occurring exactly once in
/// some relator. Each move costs one unit of budget. The result presents an
/// isomorphic group.
GroupPresentation simplify_presentation(const GroupPresentation& p, std::size_t budget = kDefaultSimplifyBudget);

}  // namespace wcoh
