#include "wcoh/fgab.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace wcoh {

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidInput("IntMatrix: ragged initializer");
    for (long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("IntMatrix: row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Integer>>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InvalidInput("IntMatrix: column has wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::columns(std::size_t begin, std::size_t end) const {
  IntMatrix out(rows_, end - begin);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = begin; c < end; ++c) out(r, c - begin) = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (rows_ != other.rows_) throw InvalidInput("hconcat: row count mismatch");
  IntMatrix out(rows_, cols_ + other.cols_);
  out.set_block(0, 0, *this);
  out.set_block(0, cols_, other);
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw InvalidInput("matrix product: inner dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidInput("matrix difference: shape mismatch");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidInput("matrix sum: shape mismatch");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

IntMatrix IntMatrix::scaled(const Integer& s) const {
  IntMatrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

IntMatrix IntMatrix::direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
  out.set_block(0, 0, a);
  out.set_block(a.rows_, a.cols_, b);
  return out;
}

IntMatrix IntMatrix::kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const Integer& x = a(i, j);
      if (sgn(x) == 0) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l) out(i * b.rows_ + k, j * b.cols_ + l) = x * b(k, l);
    }
  return out;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& block) {
  if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_) throw InvalidInput("set_block: out of range");
  for (std::size_t r = 0; r < block.rows_; ++r)
    for (std::size_t c = 0; c < block.cols_; ++c) (*this)(r0 + r, c0 + c) = block(r, c);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (sgn(k) == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Integer& s = (*this)(src, c);
    if (sgn(s) != 0) (*this)(dst, c) += k * s;
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (sgn(k) == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Integer& s = (*this)(r, src);
    if (sgn(s) != 0) (*this)(r, dst) += k * s;
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) /= prev;  // exact
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- SNF

std::size_t SnfDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t k = std::min(d.rows(), d.cols());
  while (r < k && sgn(d(r, r)) != 0) ++r;
  return r;
}

std::vector<Integer> SnfDecomposition::diagonal() const {
  const std::size_t k = std::min(d.rows(), d.cols());
  std::vector<Integer> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = d(i, i);
  return out;
}

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the trailing block starting at (t, t), first in
// row-major order on ties.
std::optional<Pivot> min_pivot(const IntMatrix& d, std::size_t t) {
  std::optional<Pivot> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (sgn(d(i, j)) == 0) continue;
      Integer a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = Pivot{i, j};
        best_abs = a;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

// Same, restricted to row t and column t.
Pivot min_pivot_cross(const IntMatrix& d, std::size_t t) {
  Pivot best{t, t};
  Integer best_abs = abs(d(t, t));
  auto consider = [&](std::size_t i, std::size_t j) {
    if (sgn(d(i, j)) == 0) return;
    Integer a = abs(d(i, j));
    if (sgn(best_abs) == 0 || a < best_abs) {
      best = Pivot{i, j};
      best_abs = a;
    }
  };
  for (std::size_t i = t + 1; i < d.rows(); ++i) consider(i, t);
  for (std::size_t j = t + 1; j < d.cols(); ++j) consider(t, j);
  return best;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  auto bring_to_diagonal = [&](std::size_t t, Pivot p) {
    d.swap_rows(t, p.row);
    u.swap_rows(t, p.row);
    d.swap_cols(t, p.col);
    v.swap_cols(t, p.col);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    auto start = min_pivot(d, t);
    if (!start) break;
    bring_to_diagonal(t, *start);

    for (;;) {
      bool remainder = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (sgn(d(i, t)) != 0) remainder = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (sgn(d(t, j)) != 0) remainder = true;
      }
      if (remainder) {
        bring_to_diagonal(t, min_pivot_cross(d, t));
        continue;
      }

      // Row and column t are clear; enforce d(t,t) | every trailing entry.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(d(i, j)) != 0 && !mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
      if (!offending) break;
      d.add_row_multiple(t, *offending, 1);
      u.add_row_multiple(t, *offending, 1);
    }

    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

// ---------------------------------------------------------------- FgAbGroup

FgAbGroup FgAbGroup::cyclic(const Integer& order) { return from_cyclic_orders({order}); }

FgAbGroup FgAbGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
  std::size_t rank = 0;
  std::vector<Integer> finite;
  for (const auto& o : orders) {
    if (sgn(o) == 0)
      ++rank;
    else if (abs(o) != 1)
      finite.push_back(abs(o));
  }
  if (finite.empty()) return FgAbGroup(rank, {});

  IntMatrix diag(finite.size(), finite.size());
  for (std::size_t i = 0; i < finite.size(); ++i) diag(i, i) = finite[i];
  std::vector<Integer> torsion;
  for (const auto& x : smith_normal_form(diag).diagonal())
    if (x > 1) torsion.push_back(x);
  return FgAbGroup(rank, std::move(torsion));
}

FgAbGroup FgAbGroup::from_invariant_factors(std::size_t free_rank, std::vector<Integer> torsion) {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2) throw InvalidInput("invariant factor must be >= 2");
    if (i + 1 < torsion.size() && !mpz_divisible_p(torsion[i + 1].get_mpz_t(), torsion[i].get_mpz_t()))
      throw InvalidInput("invariant factors must form a divisibility chain");
  }
  return FgAbGroup(free_rank, std::move(torsion));
}

std::string FgAbGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << 'Z';
    if (free_rank_ > 1) os << '^' << free_rank_;
    first = false;
  }
  // Group repeated invariant factors: Z/2 + Z/2 -> (Z/2)^2
  for (std::size_t i = 0; i < torsion_.size();) {
    std::size_t j = i;
    while (j < torsion_.size() && torsion_[j] == torsion_[i]) ++j;
    os << (first ? "" : " + ");
    first = false;
    if (j - i == 1)
      os << "Z/" << torsion_[i].get_str();
    else
      os << "(Z/" << torsion_[i].get_str() << ")^" << (j - i);
    i = j;
  }
  return os.str();
}

FgAbGroup FgAbGroup::direct_sum(const FgAbGroup& other) const {
  std::vector<Integer> orders(free_rank_ + other.free_rank_, Integer(0));
  orders.insert(orders.end(), torsion_.begin(), torsion_.end());
  orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
  return from_cyclic_orders(orders);
}

// ---------------------------------------------------------------- presentations

FpAbPresentation::FpAbPresentation(std::size_t n, IntMatrix rel) : generators(n), relations(std::move(rel)) {
  if (relations.rows() != n) {
    if (relations.rows() == 0 && relations.cols() == 0)
      relations = IntMatrix(n, 0);
    else
      throw InvalidInput("presentation: relation matrix must have one row per generator");
  }
}

FpAbPresentation FpAbPresentation::cyclic_sum(const std::vector<Integer>& orders) {
  const std::size_t n = orders.size();
  std::vector<std::vector<Integer>> cols;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(orders[i]) == 0) continue;
    std::vector<Integer> col(n);
    col[i] = orders[i];
    cols.push_back(std::move(col));
  }
  return {n, IntMatrix::from_columns(cols, n)};
}

FpAbPresentation FpAbPresentation::direct_sum(const FpAbPresentation& other) const {
  return {generators + other.generators, IntMatrix::direct_sum(relations, other.relations)};
}

FpAbPresentation FpAbPresentation::tensor(const FpAbPresentation& other) const {
  const IntMatrix left = IntMatrix::kronecker(relations, IntMatrix::identity(other.generators));
  const IntMatrix right = IntMatrix::kronecker(IntMatrix::identity(generators), other.relations);
  return {generators * other.generators, left.hconcat(right)};
}

FgAbGroup canonical_form(const FpAbPresentation& p) {
  if (p.relations.cols() == 0) return FgAbGroup::free(p.generators);
  const auto snf = smith_normal_form(p.relations);
  const std::size_t rank = snf.rank();
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < rank; ++i)
    if (snf.d(i, i) > 1) torsion.push_back(snf.d(i, i));
  return FgAbGroup::from_invariant_factors(p.generators - rank, std::move(torsion));
}

// ---------------------------------------------------------------- linear algebra over Z

namespace {

// Reusable solver for a * x = b against a fixed matrix a.
class IntegerSolver {
 public:
  explicit IntegerSolver(const IntMatrix& a) : snf_(smith_normal_form(a)), rank_(snf_.rank()) {}

  std::optional<std::vector<Integer>> solve(const std::vector<Integer>& b) const {
    const std::size_t m = snf_.u.rows();
    const std::size_t n = snf_.v.rows();
    if (b.size() != m) throw InvalidInput("solve: right-hand side has wrong length");
    std::vector<Integer> c(m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k)
        if (sgn(snf_.u(i, k)) != 0 && sgn(b[k]) != 0) c[i] += snf_.u(i, k) * b[k];
    std::vector<Integer> y(n);
    for (std::size_t i = 0; i < m; ++i) {
      if (i < rank_) {
        if (!mpz_divisible_p(c[i].get_mpz_t(), snf_.d(i, i).get_mpz_t())) return std::nullopt;
        y[i] = c[i] / snf_.d(i, i);
      } else if (sgn(c[i]) != 0) {
        return std::nullopt;
      }
    }
    std::vector<Integer> x(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < rank_; ++k)
        if (sgn(y[k]) != 0) x[i] += snf_.v(i, k) * y[k];
    return x;
  }

 private:
  SnfDecomposition snf_;
  std::size_t rank_;
};

// Expresses every column of `m` in the basis `basis` (full column rank).
IntMatrix coordinates_in_basis(const IntMatrix& basis, const IntMatrix& m) {
  IntMatrix out(basis.cols(), m.cols());
  if (m.cols() == 0) return out;
  IntegerSolver solver(basis);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto x = solver.solve(m.column(c));
    if (!x) throw InvalidInput("internal: vector outside the expected lattice");
    for (std::size_t r = 0; r < basis.cols(); ++r) out(r, c) = (*x)[r];
  }
  return out;
}

}  // namespace

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& b) {
  return IntegerSolver(a).solve(b);
}

bool columns_in_span(const IntMatrix& m, const IntMatrix& span) {
  if (m.rows() != span.rows()) throw InvalidInput("columns_in_span: row count mismatch");
  if (m.cols() == 0) return true;
  if (span.cols() == 0) return m.is_zero();
  IntegerSolver solver(span);
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!solver.solve(m.column(c))) return false;
  return true;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  return snf.v.columns(snf.rank(), a.cols());
}

IntMatrix lattice_basis(const IntMatrix& gens) {
  if (gens.cols() == 0) return IntMatrix(gens.rows(), 0);
  const auto snf = smith_normal_form(gens);
  return (gens * snf.v).columns(0, snf.rank());
}

// ---------------------------------------------------------------- homomorphisms

FpAbHom::FpAbHom(FpAbPresentation src, FpAbPresentation tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
  if (matrix.rows() != target.generators || matrix.cols() != source.generators) {
    if (matrix.rows() == 0 && matrix.cols() == 0)
      matrix = IntMatrix(target.generators, source.generators);
    else
      throw InvalidInput("homomorphism matrix shape " + std::to_string(matrix.rows()) + "x" +
                         std::to_string(matrix.cols()) + " does not match " +
                         std::to_string(target.generators) + "x" + std::to_string(source.generators));
  }
}

FpAbHom FpAbHom::zero(const FpAbPresentation& src, const FpAbPresentation& tgt) {
  return {src, tgt, IntMatrix(tgt.generators, src.generators)};
}

FpAbHom FpAbHom::identity(const FpAbPresentation& p) { return {p, p, IntMatrix::identity(p.generators)}; }

bool FpAbHom::is_well_defined() const { return columns_in_span(matrix * source.relations, target.relations); }

bool FpAbHom::is_zero_map() const { return columns_in_span(matrix, target.relations); }

FpAbHom FpAbHom::compose(const FpAbHom& inner) const {
  if (inner.target.generators != source.generators) throw InvalidInput("compose: middle groups differ");
  return {inner.source, target, matrix * inner.matrix};
}

IntMatrix preimage_lattice(const FpAbHom& f) {
  const std::size_t s = f.source.generators;
  if (f.target.relations.cols() == 0) return integer_kernel(f.matrix);
  const IntMatrix ker = integer_kernel(f.matrix.hconcat(f.target.relations));
  IntMatrix out(s, ker.cols());
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t c = 0; c < ker.cols(); ++c) out(r, c) = ker(r, c);
  return out;
}

namespace {
void require_well_defined(const FpAbHom& f, const char* what) {
  if (!f.is_well_defined())
    throw InvalidInput(std::string(what) + ": homomorphism is not well defined on the quotient");
}
}  // namespace

FpAbPresentation kernel(const FpAbHom& f) {
  require_well_defined(f, "kernel");
  const IntMatrix basis = lattice_basis(preimage_lattice(f));
  return {basis.cols(), coordinates_in_basis(basis, f.source.relations)};
}

FpAbPresentation image(const FpAbHom& f) {
  require_well_defined(f, "image");
  return {f.source.generators, preimage_lattice(f)};
}

FpAbPresentation cokernel(const FpAbHom& f) {
  require_well_defined(f, "cokernel");
  return {f.target.generators, f.target.relations.hconcat(f.matrix)};
}

FgAbGroup subquotient_cohomology(const FpAbHom& d_in, const FpAbHom& d_out) {
  if (!(d_in.target == d_out.source)) throw InvalidInput("subquotient: middle presentations differ");
  require_well_defined(d_in, "subquotient (incoming map)");
  require_well_defined(d_out, "subquotient (outgoing map)");
  if (!d_out.compose(d_in).is_zero_map()) throw InvalidInput("subquotient: composite of differentials is nonzero");

  const IntMatrix basis = lattice_basis(preimage_lattice(d_out));
  const IntMatrix relations = d_in.target.relations.hconcat(d_in.matrix);
  return canonical_form({basis.cols(), coordinates_in_basis(basis, relations)});
}

// ---------------------------------------------------------------- tensor / Tor

namespace {
std::vector<Integer> cyclic_orders(const FgAbGroup& g) {
  std::vector<Integer> out(g.free_rank(), Integer(0));
  out.insert(out.end(), g.torsion().begin(), g.torsion().end());
  return out;
}
}  // namespace

FgAbGroup tensor(const FgAbGroup& g, const FgAbGroup& h) {
  // Z/x (x) Z/y = Z/gcd(x, y), with x = 0 standing for Z.
  std::vector<Integer> orders;
  for (const auto& x : cyclic_orders(g))
    for (const auto& y : cyclic_orders(h)) orders.push_back(gcd(x, y));
  return FgAbGroup::from_cyclic_orders(orders);
}

FgAbGroup tor(const FgAbGroup& g, const FgAbGroup& h) {
  std::vector<Integer> orders;
  for (const auto& x : g.torsion())
    for (const auto& y : h.torsion()) orders.push_back(gcd(x, y));
  return FgAbGroup::from_cyclic_orders(orders);
}

}  // namespace wcoh
