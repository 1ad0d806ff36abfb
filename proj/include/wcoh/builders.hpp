#pragma once

// Ground-truth compactifications with known answers, and the JSON file format.

#include "wcoh/dual.hpp"
#include "wcoh/sncdata.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wcoh {

/// Malformed input text or file (distinct from a well-formed but invalid datum).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Xbar = pt, no boundary.
SncDatum point_snc();

/// Z in degrees 0, 2, ..., 2m.
GradedGroupData projective_space_cohomology(int m);

/// A^d inside P^d with boundary a hyperplane.
SncDatum affine_space_snc(int d);

/// (C*)^n inside (P^1)^n; n >= 2 is the n-fold product of torus_snc(1).
SncDatum torus_snc(int n);

/// Genus-g curve with n >= 1 punctures.
SncDatum punctured_curve_snc(int g, int n);

/// Builder names: "point", "affine:D", "torus:N", "curve:G,N", and products
/// "A*B*..." of those. Throws ParseError on unknown names.
SncDatum build(const std::string& name);

/// Compactly supported Betti numbers k -> dim H_c^k(X(C); Q) for a builder
/// name, or nullopt when not known in closed form.
std::optional<std::map<int, long>> known_compact_betti(const std::string& name);

/// Names emitted by the `examples` command.
std::vector<std::string> example_names();

/// JSON text <-> datum. Relations are stored as columns, restriction maps as rows.
std::string to_json(const SncDatum& s);
SncDatum from_json_text(const std::string& text);
SncDatum from_json(const std::string& path);

/// {"vertices": v, "facets": [[...], ...]} with 0-based vertex labels.
SimplicialComplex complex_from_json_text(const std::string& text);
SimplicialComplex complex_from_json(const std::string& path);

}  // namespace wcoh
