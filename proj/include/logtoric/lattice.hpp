#pragma once

// Exact integer linear algebra over ambient lattices Z^n.

#include "logtoric/integer.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace logtoric {

/// Dense row-major matrix of arbitrary-precision integers.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, std::span<const Vector> rows);
  static Matrix from_columns(std::size_t rows, std::span<const Vector> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_vectors() const;
  std::vector<Vector> column_vectors() const;

  Matrix transpose() const;
  Vector apply(std::span<const Integer> v) const;

  // Elementary operations, used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant by fraction-free (Bareiss) elimination. Square input only.
Integer determinant(const Matrix& m);

/// Rank by fraction-free Gaussian elimination. Kept separate from the SNF
/// route so the two can check each other.
std::size_t bareiss_rank(const Matrix& m);

/// Homomorphism Z^source_rank -> Z^target_rank, stored as a
/// target_rank x source_rank matrix acting on column vectors.
class LatticeMap {
public:
  LatticeMap() = default;
  LatticeMap(std::size_t source_rank, std::size_t target_rank, Matrix entries);
  explicit LatticeMap(Matrix entries);

  static LatticeMap identity(std::size_t n);
  static LatticeMap zero(std::size_t source_rank, std::size_t target_rank);

  std::size_t source_rank() const { return source_rank_; }
  std::size_t target_rank() const { return target_rank_; }
  const Matrix& matrix() const { return entries_; }

  Vector operator()(std::span<const Integer> v) const;

  /// The dual map Hom(Z^target, Z) -> Hom(Z^source, Z), i.e. the transpose.
  LatticeMap dual() const;

  /// Composition: (outer * inner)(v) = outer(inner(v)).
  friend LatticeMap operator*(const LatticeMap& outer, const LatticeMap& inner);
  friend bool operator==(const LatticeMap&, const LatticeMap&) = default;

private:
  std::size_t source_rank_ = 0;
  std::size_t target_rank_ = 0;
  Matrix entries_;
};

/// left * original * right == diag(diagonal) padded with zeros.
struct SmithDecomposition {
  Matrix left;
  Matrix left_inverse;
  /// min(rows, cols) entries; nonzero ones first, each dividing the next.
  std::vector<Integer> diagonal;
  Matrix right;
  Matrix right_inverse;

  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const Matrix& m);
SmithDecomposition smith_normal_form(const LatticeMap& m);

struct CokernelInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion_divisors;

  friend bool operator==(const CokernelInvariants&, const CokernelInvariants&) = default;
};

CokernelInvariants cokernel_invariants(const LatticeMap& m);

/// Canonical Hermite basis of the lattice spanned by `generators` in Z^n:
/// echelon form, positive pivots, entries above each pivot reduced into
/// [0, pivot). Two generating sets span the same lattice iff their Hermite
/// bases coincide.
std::vector<Vector> hermite_basis(std::size_t n, std::span<const Vector> generators);

/// A sublattice of Z^n, stored by its Hermite basis.
class Sublattice {
public:
  Sublattice() = default;

  static Sublattice spanned_by(std::size_t ambient_rank, std::span<const Vector> generators);
  static Sublattice zero(std::size_t ambient_rank);
  static Sublattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  /// ambient_rank x rank matrix whose columns are the basis vectors.
  Matrix basis_matrix() const;
  /// Inclusion of Z^rank into Z^ambient_rank given by the basis.
  LatticeMap inclusion() const;

  /// True iff Z^n / L is torsion-free.
  bool saturated() const { return saturated_; }

  bool contains(std::span<const Integer> v) const;
  bool is_subset_of(const Sublattice& other) const;
  /// Integral coordinates in the Hermite basis, if v lies in the lattice.
  std::optional<Vector> coordinates(std::span<const Integer> v) const;
  /// Rational coordinates, if v lies in the rational span.
  std::optional<std::vector<Rational>> rational_coordinates(std::span<const Integer> v) const;
  /// Canonical representative of v + L.
  Vector reduce(std::span<const Integer> v) const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.ambient_rank_ == b.ambient_rank_ && a.basis_ == b.basis_;
  }

private:
  std::size_t ambient_rank_ = 0;
  std::vector<Vector> basis_;
  bool saturated_ = true;
};

struct Saturation {
  Sublattice saturation;
  Integer index;
};

Saturation saturate_sublattice(const Sublattice& s);

/// The complement N2 with s + N2 = Z^n taken from the SNF of the basis
/// matrix: if U B V = [I; 0], the trailing columns of U^-1 span N2.
/// Throws DomainError if s is not saturated.
Sublattice complement(const Sublattice& s);

/// Kernel of m, always saturated.
Sublattice kernel(const LatticeMap& m);

/// Image of m (not saturated in general).
Sublattice image(const LatticeMap& m);

/// Restriction of m to the sublattice s, as a map Z^rank(s) -> target.
LatticeMap restrict_to(const LatticeMap& m, const Sublattice& s);

/// Unimodular change of basis [s.basis | complement(s).basis], with the
/// inverse. Rows of `inverse` give coordinates adapted to the splitting.
struct AdaptedBasis {
  Matrix basis;
  Matrix inverse;
  std::size_t split = 0; // number of leading columns spanning s
};

AdaptedBasis adapted_basis(const Sublattice& s);

} // namespace logtoric
