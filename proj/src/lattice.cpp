#include "logtoric/lattice.hpp"

#include "logtoric/error.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace logtoric {

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<const Vector> rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw DomainError("matrix row " + std::to_string(r) + " has length " +
                        std::to_string(rows[r].size()) + ", expected " +
                        std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw DomainError("matrix column " + std::to_string(c) + " has length " +
                        std::to_string(cols[c].size()) + ", expected " +
                        std::to_string(rows));
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::vector<Vector> Matrix::column_vectors() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Integer> v) const {
  if (v.size() != cols_)
    throw DomainError("cannot apply " + std::to_string(rows_) + "x" +
                      std::to_string(cols_) + " matrix to vector of length " +
                      std::to_string(v.size()));
  Vector out(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) swap((*this)(a, c), (*this)(b, c));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) swap((*this)(r, a), (*this)(r, b));
}

void Matrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void Matrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void Matrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void Matrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw DomainError("matrix product dimension mismatch: " + std::to_string(a.rows_) +
                      "x" + std::to_string(a.cols_) + " * " + std::to_string(b.rows_) +
                      "x" + std::to_string(b.cols_));
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

namespace {

// Bareiss elimination in place; returns the rank and the sign flips
// from row swaps. For square full-rank input the last pivot is the
// determinant up to that sign.
std::size_t bareiss_eliminate(Matrix& a, int& sign) {
  sign = 1;
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != rank) {
      a.swap_rows(pivot, rank);
      sign = -sign;
    }
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      for (std::size_t c = col + 1; c < a.cols(); ++c) {
        Integer v = a(rank, col) * a(r, c) - a(r, col) * a(rank, c);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(r, c) = std::move(v);
      }
      a(r, col) = 0;
    }
    prev = a(rank, col);
    ++rank;
  }
  return rank;
}

} // namespace

Integer determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Matrix a = m;
  int sign = 1;
  if (bareiss_eliminate(a, sign) < m.rows()) return 0;
  return sign * a(m.rows() - 1, m.cols() - 1);
}

std::size_t bareiss_rank(const Matrix& m) {
  Matrix a = m;
  int sign = 1;
  return bareiss_eliminate(a, sign);
}

// ------------------------------------------------------------ LatticeMap

LatticeMap::LatticeMap(std::size_t source_rank, std::size_t target_rank, Matrix entries)
    : source_rank_(source_rank), target_rank_(target_rank), entries_(std::move(entries)) {
  if (entries_.rows() != target_rank_ || entries_.cols() != source_rank_)
    throw DomainError("lattice map Z^" + std::to_string(source_rank_) + " -> Z^" +
                      std::to_string(target_rank_) + " given a " +
                      std::to_string(entries_.rows()) + "x" +
                      std::to_string(entries_.cols()) + " matrix");
}

LatticeMap::LatticeMap(Matrix entries)
    : source_rank_(entries.cols()), target_rank_(entries.rows()),
      entries_(std::move(entries)) {}

LatticeMap LatticeMap::identity(std::size_t n) { return LatticeMap(Matrix::identity(n)); }

LatticeMap LatticeMap::zero(std::size_t source_rank, std::size_t target_rank) {
  return LatticeMap(source_rank, target_rank, Matrix(target_rank, source_rank));
}

Vector LatticeMap::operator()(std::span<const Integer> v) const { return entries_.apply(v); }

LatticeMap LatticeMap::dual() const { return LatticeMap(entries_.transpose()); }

LatticeMap operator*(const LatticeMap& outer, const LatticeMap& inner) {
  if (outer.source_rank_ != inner.target_rank_)
    throw DomainError("cannot compose Z^" + std::to_string(inner.source_rank_) + " -> Z^" +
                      std::to_string(inner.target_rank_) + " with Z^" +
                      std::to_string(outer.source_rank_) + " -> Z^" +
                      std::to_string(outer.target_rank_));
  return LatticeMap(inner.source_rank_, outer.target_rank_, outer.entries_ * inner.entries_);
}

// ------------------------------------------------------------------- SNF

std::size_t SmithDecomposition::rank() const {
  return static_cast<std::size_t>(std::count_if(
      diagonal.begin(), diagonal.end(), [](const Integer& d) { return sgn(d) != 0; }));
}

namespace {

// Tracks A together with the unimodular factors so that
// left * original * right == A at every step.
struct SmithState {
  Matrix a, left, left_inv, right, right_inv;

  explicit SmithState(const Matrix& m)
      : a(m), left(Matrix::identity(m.rows())), left_inv(Matrix::identity(m.rows())),
        right(Matrix::identity(m.cols())), right_inv(Matrix::identity(m.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    left.swap_rows(i, j);
    left_inv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    right.swap_cols(i, j);
    right_inv.swap_rows(i, j);
  }
  // row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row_multiple(dst, src, f);
    left.add_row_multiple(dst, src, f);
    left_inv.add_col_multiple(src, dst, -f);
  }
  // col[dst] += f * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    a.add_col_multiple(dst, src, f);
    right.add_col_multiple(dst, src, f);
    right_inv.add_row_multiple(src, dst, -f);
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    left.negate_row(i);
    left_inv.negate_col(i);
  }

  // Smallest nonzero |entry| in the trailing block, first in (row, col)
  // order on ties.
  bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    Integer best;
    for (std::size_t r = t; r < a.rows(); ++r)
      for (std::size_t c = t; c < a.cols(); ++c) {
        const Integer& x = a(r, c);
        if (sgn(x) == 0) continue;
        if (!found || abs(x) < best) {
          best = abs(x);
          pr = r;
          pc = c;
          found = true;
        }
      }
    return found;
  }
};

} // namespace

SmithDecomposition smith_normal_form(const Matrix& m) {
  SmithState s(m);
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!s.find_pivot(t, pr, pc)) break;
    s.swap_rows(t, pr);
    s.swap_cols(t, pc);
    for (;;) {
      Integer q;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (sgn(s.a(r, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s.a(r, t).get_mpz_t(), s.a(t, t).get_mpz_t());
        s.add_row(r, t, -q);
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (sgn(s.a(t, c)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s.a(t, c).get_mpz_t(), s.a(t, t).get_mpz_t());
        s.add_col(c, t, -q);
      }
      bool clean = true;
      for (std::size_t r = t + 1; r < m.rows() && clean; ++r)
        if (sgn(s.a(r, t)) != 0) clean = false;
      for (std::size_t c = t + 1; c < m.cols() && clean; ++c)
        if (sgn(s.a(t, c)) != 0) clean = false;
      if (!clean) {
        // A nonzero remainder is smaller than the pivot; restart with it.
        s.find_pivot(t, pr, pc);
        s.swap_rows(t, pr);
        s.swap_cols(t, pc);
        continue;
      }
      // Enforce the divisor chain: pull a non-divisible entry into row t.
      bool divisible = true;
      for (std::size_t r = t + 1; r < m.rows() && divisible; ++r)
        for (std::size_t c = t + 1; c < m.cols(); ++c)
          if (!mpz_divisible_p(s.a(r, c).get_mpz_t(), s.a(t, t).get_mpz_t())) {
            s.add_row(t, r, Integer(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (sgn(s.a(t, t)) < 0) s.negate_row(t);
  }

  SmithDecomposition d;
  d.diagonal.reserve(limit);
  for (std::size_t i = 0; i < limit; ++i) d.diagonal.push_back(s.a(i, i));
  d.left = std::move(s.left);
  d.left_inverse = std::move(s.left_inv);
  d.right = std::move(s.right);
  d.right_inverse = std::move(s.right_inv);
  return d;
}

SmithDecomposition smith_normal_form(const LatticeMap& m) { return smith_normal_form(m.matrix()); }

CokernelInvariants cokernel_invariants(const LatticeMap& m) {
  SmithDecomposition d = smith_normal_form(m);
  CokernelInvariants inv;
  inv.free_rank = m.target_rank() - d.rank();
  for (const Integer& x : d.diagonal)
    if (x > 1) inv.torsion_divisors.push_back(x);
  return inv;
}

// --------------------------------------------------------------- Hermite

std::vector<Vector> hermite_basis(std::size_t n, std::span<const Vector> generators) {
  std::vector<Vector> rows;
  rows.reserve(generators.size());
  for (const Vector& g : generators) {
    if (g.size() != n)
      throw DomainError("generator " + to_string(g) + " does not lie in Z^" + std::to_string(n));
    if (!is_zero(g)) rows.push_back(g);
  }
  auto sub_row = [](Vector& dst, const Vector& src, const Integer& q) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= q * src[i];
  };
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (sgn(rows[i][col]) != 0 && (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      Integer q;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][col]) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
        sub_row(rows[i], rows[r], q);
        if (sgn(rows[i][col]) != 0) done = false;
      }
      if (done) break;
    }
    if (r >= rows.size() || sgn(rows[r][col]) == 0) continue;
    if (sgn(rows[r][col]) < 0)
      for (Integer& x : rows[r]) x = -x;
    Integer q;
    for (std::size_t i = 0; i < r; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
      sub_row(rows[i], rows[r], q);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

// ------------------------------------------------------------ Sublattice

namespace {

std::size_t pivot_of(const Vector& row) {
  for (std::size_t i = 0; i < row.size(); ++i)
    if (sgn(row[i]) != 0) return i;
  return row.size();
}

} // namespace

Sublattice Sublattice::spanned_by(std::size_t ambient_rank, std::span<const Vector> generators) {
  Sublattice s;
  s.ambient_rank_ = ambient_rank;
  s.basis_ = hermite_basis(ambient_rank, generators);
  if (!s.basis_.empty()) {
    SmithDecomposition d = smith_normal_form(s.basis_matrix());
    s.saturated_ = std::all_of(d.diagonal.begin(), d.diagonal.end(),
                               [](const Integer& x) { return x == 1; });
  }
  return s;
}

Sublattice Sublattice::zero(std::size_t ambient_rank) {
  Sublattice s;
  s.ambient_rank_ = ambient_rank;
  return s;
}

Sublattice Sublattice::full(std::size_t ambient_rank) {
  Sublattice s;
  s.ambient_rank_ = ambient_rank;
  for (std::size_t i = 0; i < ambient_rank; ++i) s.basis_.push_back(unit_vector(ambient_rank, i));
  return s;
}

Matrix Sublattice::basis_matrix() const { return Matrix::from_columns(ambient_rank_, basis_); }

LatticeMap Sublattice::inclusion() const {
  return LatticeMap(rank(), ambient_rank_, basis_matrix());
}

std::optional<Vector> Sublattice::coordinates(std::span<const Integer> v) const {
  if (v.size() != ambient_rank_)
    throw DomainError("vector " + to_string(v) + " is not in Z^" + std::to_string(ambient_rank_));
  Vector rest(v.begin(), v.end());
  Vector coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = pivot_of(basis_[i]);
    if (!mpz_divisible_p(rest[p].get_mpz_t(), basis_[i][p].get_mpz_t())) return std::nullopt;
    mpz_divexact(coords[i].get_mpz_t(), rest[p].get_mpz_t(), basis_[i][p].get_mpz_t());
    for (std::size_t c = 0; c < ambient_rank_; ++c) rest[c] -= coords[i] * basis_[i][c];
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

std::optional<std::vector<Rational>> Sublattice::rational_coordinates(std::span<const Integer> v) const {
  if (v.size() != ambient_rank_)
    throw DomainError("vector " + to_string(v) + " is not in Z^" + std::to_string(ambient_rank_));
  std::vector<Rational> rest(v.begin(), v.end());
  std::vector<Rational> coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = pivot_of(basis_[i]);
    coords[i] = rest[p] / Rational(basis_[i][p]);
    for (std::size_t c = 0; c < ambient_rank_; ++c) rest[c] -= coords[i] * basis_[i][c];
  }
  for (const Rational& q : rest)
    if (sgn(q) != 0) return std::nullopt;
  return coords;
}

bool Sublattice::contains(std::span<const Integer> v) const { return coordinates(v).has_value(); }

bool Sublattice::is_subset_of(const Sublattice& other) const {
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](const Vector& b) { return other.contains(b); });
}

Vector Sublattice::reduce(std::span<const Integer> v) const {
  if (v.size() != ambient_rank_)
    throw DomainError("vector " + to_string(v) + " is not in Z^" + std::to_string(ambient_rank_));
  Vector r(v.begin(), v.end());
  Integer q;
  for (const Vector& b : basis_) {
    const std::size_t p = pivot_of(b);
    mpz_fdiv_q(q.get_mpz_t(), r[p].get_mpz_t(), b[p].get_mpz_t());
    if (sgn(q) == 0) continue;
    for (std::size_t c = 0; c < ambient_rank_; ++c) r[c] -= q * b[c];
  }
  return r;
}

Saturation saturate_sublattice(const Sublattice& s) {
  if (s.rank() == 0) return {s, Integer(1)};
  SmithDecomposition d = smith_normal_form(s.basis_matrix());
  Integer index = 1;
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    if (sgn(d.diagonal[i]) == 0)
      throw InvariantViolation("sublattice basis is not linearly independent");
    index *= d.diagonal[i];
    cols.push_back(d.left_inverse.column(i));
  }
  return {Sublattice::spanned_by(s.ambient_rank(), cols), index};
}

Sublattice complement(const Sublattice& s) {
  if (!s.saturated())
    throw DomainError("complement requires a saturated sublattice; quotient has torsion");
  const std::size_t n = s.ambient_rank();
  if (s.rank() == 0) return Sublattice::full(n);
  SmithDecomposition d = smith_normal_form(s.basis_matrix());
  std::vector<Vector> cols;
  for (std::size_t i = s.rank(); i < n; ++i) cols.push_back(d.left_inverse.column(i));
  return Sublattice::spanned_by(n, cols);
}

Sublattice kernel(const LatticeMap& m) {
  SmithDecomposition d = smith_normal_form(m);
  std::vector<Vector> cols;
  for (std::size_t j = d.rank(); j < m.source_rank(); ++j) cols.push_back(d.right.column(j));
  return Sublattice::spanned_by(m.source_rank(), cols);
}

Sublattice image(const LatticeMap& m) {
  return Sublattice::spanned_by(m.target_rank(), m.matrix().column_vectors());
}

LatticeMap restrict_to(const LatticeMap& m, const Sublattice& s) {
  if (s.ambient_rank() != m.source_rank())
    throw DomainError("sublattice of Z^" + std::to_string(s.ambient_rank()) +
                      " is not in the source Z^" + std::to_string(m.source_rank()));
  return m * s.inclusion();
}

AdaptedBasis adapted_basis(const Sublattice& s) {
  Sublattice c = complement(s);
  std::vector<Vector> cols = s.basis();
  cols.insert(cols.end(), c.basis().begin(), c.basis().end());
  AdaptedBasis a;
  a.basis = Matrix::from_columns(s.ambient_rank(), cols);
  a.split = s.rank();
  SmithDecomposition d = smith_normal_form(a.basis);
  for (const Integer& x : d.diagonal)
    if (x != 1) throw InvariantViolation("sublattice and complement do not span Z^n");
  // U A V = I  =>  A^-1 = V U
  a.inverse = d.right * d.left;
  return a;
}

} // namespace logtoric
