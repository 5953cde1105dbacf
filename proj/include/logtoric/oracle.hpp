#pragma once

// Brute-force reference implementations for tests. Nothing here calls the
// algorithms it is meant to check: arithmetic runs on boost cpp_int, and
// only plain data (vectors, inequalities) crosses over from the library.
// Every routine is exponential in the box volume or the input size.

#include "logtoric/cone.hpp"
#include "logtoric/integer.hpp"
#include "logtoric/lattice.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace logtoric::oracle {

struct Box {
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;

  std::size_t rank() const { return lower.size(); }
  /// Throws DomainError unless lower <= upper componentwise.
  static Box make(std::vector<std::int64_t> lower, std::vector<std::int64_t> upper);
  static Box cube(std::size_t rank, std::int64_t lo, std::int64_t hi);
  bool empty() const;
};

/// Lattice points of b on which every normal of c.facet_normals() is >= 0,
/// in lexicographic order.
std::vector<Vector> enumerate_cone_points(const RationalCone& c, const Box& b);

/// Lattice points of b in the cone cut out by `normals`, lexicographic.
std::vector<Vector> enumerate_points(const std::vector<Vector>& normals, const Box& b);

/// Nonzero cone points of b that are not h + (x - h) with h a nonzero
/// smaller cone point of b and x - h a nonzero cone point. Lexicographic.
/// Correct once b contains the true Hilbert basis. c must be pointed.
std::vector<Vector> brute_hilbert_basis(const RationalCone& c, const Box& b);

/// A box that provably contains the Hilbert basis of cone(generators):
/// each coordinate bounded by the sum of the `dim` largest absolute
/// generator entries in that coordinate.
Box hilbert_box(std::size_t rank, const std::vector<Vector>& generators);

/// Whether v - g lies in `monoid_points` for some g in `generators`.
bool brute_ideal_membership(const std::vector<Vector>& generators, const Vector& v,
                            const std::vector<Vector>& monoid_points);

/// Whether v is a nonnegative rational combination of `generators`, by
/// search over linearly independent subsets.
bool in_cone_generated(const std::vector<Vector>& generators, const Vector& v);

/// Whether v is an integral combination of `basis` (linearly independent).
bool in_lattice(const std::vector<Vector>& basis, const Vector& v);

/// Irreducible elements of cone(generators) ∩ lattice(group_basis) inside
/// b. Lexicographic. The cone must be pointed.
std::vector<Vector> brute_saturation(const std::vector<Vector>& generators,
                                     const std::vector<Vector>& group_basis, const Box& b);

/// Rank of the matrix with the given rows, by Bareiss elimination.
std::size_t rank(const std::vector<Vector>& rows);

/// Whether the linear map `m` is injective on the span of `vectors`:
/// rank{m v} == rank{v}.
bool injective_on_span(const Matrix& m, const std::vector<Vector>& vectors);

using Tuple = std::vector<std::uint64_t>;

/// Tuples of s not strictly dominating another tuple of s. Lexicographic.
std::vector<Tuple> brute_minimal_elements(std::vector<Tuple> s);

} // namespace logtoric::oracle
