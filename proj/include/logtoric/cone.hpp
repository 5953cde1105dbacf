#pragma once

// Rational polyhedral cones in R^n = Z^n (x) R, kept in double description:
// generators (extreme rays modulo lineality, plus a lineality lattice) and
// inequalities (facet normals modulo equations, plus an equation lattice).

#include "logtoric/integer.hpp"
#include "logtoric/lattice.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace logtoric {

enum class Convexity {
  /// Reject cones that contain a line.
  Strong,
  /// Allow a nontrivial lineality space.
  General,
};

/// Extreme rays and lineality basis of {x : <h, x> >= 0 for all h}, by
/// incremental double description in the order the constraints are given.
struct DoubleDescription {
  std::vector<Vector> rays;
  std::vector<Vector> lineality;
};

DoubleDescription double_description(std::size_t n, std::span<const Vector> constraints);

class RationalCone {
public:
  RationalCone() = default;

  std::size_t ambient_rank() const { return ambient_rank_; }

  /// Primitive extreme rays, taken orthogonal to the lineality space and
  /// sorted graded-lexicographically. For a strongly convex cone these
  /// are the ray generators.
  const std::vector<Vector>& rays() const { return rays_; }
  /// Saturated lattice of the lineality space, Hermite basis.
  const Sublattice& lineality() const { return lineality_; }
  /// Primitive facet normals, taken orthogonal to the equations.
  const std::vector<Vector>& facets() const { return facets_; }
  /// Saturated lattice of linear forms vanishing on the cone.
  const Sublattice& equations() const { return equations_; }

  /// Rays followed by +-(lineality basis): a generating set of the cone.
  std::vector<Vector> generators() const;
  /// Facets followed by +-(equation basis): the cone is exactly where all
  /// of these are nonnegative.
  std::vector<Vector> facet_normals() const;

  std::size_t dimension() const { return ambient_rank_ - equations_.rank(); }
  bool is_strongly_convex() const { return lineality_.rank() == 0; }
  bool is_full_dimensional() const { return equations_.rank() == 0; }
  bool is_zero() const { return rays_.empty() && lineality_.rank() == 0; }

  /// Positive integer grading on the cone modulo lineality: the sum of the
  /// facets. Vanishes exactly on the lineality space.
  Vector grading() const;

  friend bool operator==(const RationalCone&, const RationalCone&) = default;

private:
  friend RationalCone cone_from_generators(std::size_t, std::span<const Vector>, Convexity);
  friend RationalCone dual_cone(const RationalCone&);

  std::size_t ambient_rank_ = 0;
  std::vector<Vector> rays_;
  Sublattice lineality_;
  std::vector<Vector> facets_;
  Sublattice equations_;
};

/// The cone generated by `vectors` in R^n.
/// Throws DomainError on wrong lengths, and on a cone containing a line
/// when `convexity` is Strong.
RationalCone cone_from_generators(std::size_t ambient_rank, std::span<const Vector> vectors,
                                  Convexity convexity = Convexity::Strong);

/// The cone cut out by `normals` (>= 0 on each).
RationalCone cone_from_inequalities(std::size_t ambient_rank, std::span<const Vector> normals);

RationalCone dual_cone(const RationalCone& c);

bool contains(const RationalCone& c, std::span<const Integer> v);

/// A face tau = c ∩ {<m, .> = 0} of a strongly convex cone c.
struct Face {
  RationalCone cone;
  /// In the dual cone; zero exactly on the face's rays.
  Vector defining_normal;
  /// Indices into parent.rays(), ascending.
  std::vector<std::size_t> ray_indices;

  std::size_t dimension() const { return cone.dimension(); }
};

/// All faces of a strongly convex cone, including {0} and c itself,
/// ordered by dimension and then by ray indices.
std::vector<Face> faces(const RationalCone& c);

/// Whether f (by its rays and normal) is a face of c.
bool is_face_of(const Face& f, const RationalCone& c);

/// Faces of c whose rays are exactly `rays` (as a set).
Face face_spanned_by(const RationalCone& c, std::span<const Vector> rays);

} // namespace logtoric
