#pragma once

// Exact integer matrices and finitely generated abelian groups.
//
// Conventions used throughout the library:
//   * every integer is an arbitrary-precision mpz_class;
//   * a presentation  Z^n / <relations>  stores its relations as the
//     COLUMNS of an n x r matrix;
//   * a homomorphism between presentations is a matrix acting on
//     generators (target.generators x source.generators).

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wcoh {

using Integer = mpz_class;

/// Thrown when an operation receives input violating its contract
/// (ill-defined homomorphism, non-commuting squares, shape mismatch, ...).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Row-major nested initializer, mostly for tests.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<std::vector<Integer>>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  IntMatrix transpose() const;
  std::vector<Integer> column(std::size_t c) const;
  IntMatrix columns(std::size_t begin, std::size_t end) const;

  /// [this | other]; row counts must agree.
  IntMatrix hconcat(const IntMatrix& other) const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix scaled(const Integer& s) const;

  /// Block-diagonal sum.
  static IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

  /// Copies `block` into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& block);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  /// Determinant of a square matrix (Bareiss fraction-free elimination).
  Integer determinant() const;

  std::string to_string() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// u * a * v == d with u, v unimodular and d diagonal in Smith form.
struct SnfDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
  std::vector<Integer> diagonal() const;
};

/// Smith normal form with minimal-absolute-value pivoting. Deterministic.
SnfDecomposition smith_normal_form(const IntMatrix& a);

/// A finitely generated abelian group  Z^free_rank + Z/t_1 + ... + Z/t_k
/// with t_1 | t_2 | ... | t_k and every t_i >= 2. Equality is isomorphism.
class FgAbGroup {
 public:
  FgAbGroup() = default;

  static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank, {}); }
  static FgAbGroup cyclic(const Integer& order);
  /// Normalizes an arbitrary list of cyclic orders into invariant factors.
  /// An order of 0 contributes a copy of Z, an order of 1 nothing.
  static FgAbGroup from_cyclic_orders(const std::vector<Integer>& orders);
  /// Validates an already canonical (free_rank, invariant factors) pair.
  static FgAbGroup from_invariant_factors(std::size_t free_rank, std::vector<Integer> torsion);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_free() const { return torsion_.empty(); }
  /// Z^r + Z/2 + Z/4, or "0".
  std::string to_string() const;

  FgAbGroup direct_sum(const FgAbGroup& other) const;

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

 private:
  FgAbGroup(std::size_t rank, std::vector<Integer> torsion)
      : free_rank_(rank), torsion_(std::move(torsion)) {}

  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Z^generators / (column span of relations).
struct FpAbPresentation {
  std::size_t generators = 0;
  IntMatrix relations;  // generators x r

  FpAbPresentation() = default;
  explicit FpAbPresentation(std::size_t n) : generators(n), relations(n, 0) {}
  FpAbPresentation(std::size_t n, IntMatrix rel);

  static FpAbPresentation free(std::size_t n) { return FpAbPresentation(n); }
  /// Z/o_1 + Z/o_2 + ... (0 gives Z).
  static FpAbPresentation cyclic_sum(const std::vector<Integer>& orders);

  std::size_t relation_count() const { return relations.cols(); }
  /// Block-diagonal sum of presentations.
  FpAbPresentation direct_sum(const FpAbPresentation& other) const;
  /// (Z^n/R) (x) (Z^m/S) = Z^{nm} / <R (x) I, I (x) S>.
  FpAbPresentation tensor(const FpAbPresentation& other) const;

  friend bool operator==(const FpAbPresentation&, const FpAbPresentation&) = default;
};

FgAbGroup canonical_form(const FpAbPresentation& p);

/// Homomorphism source -> target given on generators.
struct FpAbHom {
  FpAbPresentation source;
  FpAbPresentation target;
  IntMatrix matrix;  // target.generators x source.generators

  /// Shape check only; well-definedness is checked by is_well_defined().
  FpAbHom(FpAbPresentation src, FpAbPresentation tgt, IntMatrix m);

  static FpAbHom zero(const FpAbPresentation& src, const FpAbPresentation& tgt);
  static FpAbHom identity(const FpAbPresentation& p);

  /// matrix * (source relations) lies in the span of the target relations.
  bool is_well_defined() const;
  /// Every image of a generator is trivial in the target group.
  bool is_zero_map() const;
  /// this o inner; requires inner.target == this->source (generator counts).
  FpAbHom compose(const FpAbHom& inner) const;
};

/// Columns of `m` all lie in the Z-span of the columns of `span`.
bool columns_in_span(const IntMatrix& m, const IntMatrix& span);

/// Solves a * x = b over Z, or nullopt if no integer solution exists.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& b);

/// Basis (as columns) of the integer kernel {x : a x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// A Z-basis (full column rank) of the lattice spanned by the columns of `gens`.
IntMatrix lattice_basis(const IntMatrix& gens);

/// Generators of {x : f.matrix * x lies in span(target relations)}, the
/// preimage of the target relation lattice in Z^{source.generators}.
IntMatrix preimage_lattice(const FpAbHom& f);

FpAbPresentation kernel(const FpAbHom& f);
FpAbPresentation image(const FpAbHom& f);
FpAbPresentation cokernel(const FpAbHom& f);

/// ker(d_out) / im(d_in). Throws InvalidInput if d_out o d_in != 0 or the
/// middle groups do not match.
FgAbGroup subquotient_cohomology(const FpAbHom& d_in, const FpAbHom& d_out);

FgAbGroup tensor(const FgAbGroup& g, const FgAbGroup& h);
FgAbGroup tor(const FgAbGroup& g, const FgAbGroup& h);

}  // namespace wcoh
