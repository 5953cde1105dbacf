#pragma once

// Normal affine toric varieties U = Spec K[sigma^v ∩ M] given by (N, sigma).

#include "logtoric/cone.hpp"
#include "logtoric/lattice.hpp"
#include "logtoric/monoid.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace logtoric {

class ToricChart {
public:
  ToricChart() = default;
  /// Throws DomainError if the cone is not strongly convex.
  explicit ToricChart(RationalCone cone);
  ToricChart(std::size_t lattice_rank, std::span<const Vector> cone_generators);

  std::size_t lattice_rank() const { return cone_.ambient_rank(); }
  /// sigma in N.
  const RationalCone& cone() const { return cone_; }
  /// sigma^v ∩ M, saturated.
  const AffineMonoid& dual_monoid() const { return dual_monoid_; }

  friend bool operator==(const ToricChart& a, const ToricChart& b) { return a.cone_ == b.cone_; }

private:
  RationalCone cone_;
  AffineMonoid dual_monoid_;
};

/// Generators chi^m of the ideal of the toric boundary. Exponents are
/// taken modulo the units of the dual monoid.
struct MonomialIdeal {
  AffineMonoid monoid;
  std::vector<Vector> generator_exponents;

  /// v lies in the ideal: v - g is in the monoid for some generator g.
  bool contains(std::span<const Integer> v) const;
};

MonomialIdeal boundary_ideal_generators(const ToricChart& c);

struct OrbitData {
  Face face;
  std::size_t orbit_dimension = 0;
  /// sigma^v ∩ M ∩ tau^perp, the coordinate ring monoid of the orbit closure.
  AffineMonoid closure_monoid;
};

/// Throws DomainError if f is not a face of c.cone().
OrbitData orbit_data(const ToricChart& c, const Face& f);

/// The chart (N, tau) of the open affine subset for the face tau.
/// Throws DomainError if f is not a face of c.cone().
ToricChart face_localization(const ToricChart& c, const Face& f);

struct SplitResult {
  /// Smallest saturated sublattice containing the cone.
  Sublattice n1;
  /// Complement of n1: N = n1 (+) n2.
  Sublattice n2;
  /// tau^v ∩ M1, in coordinates dual to the basis of n1.
  AffineMonoid factor_monoid;
  std::size_t torus_rank = 0;

  /// Carries (factor_monoid (+) Z^torus_rank) back to M = Hom(N, Z): the
  /// result should equal the dual monoid of the original chart.
  AffineMonoid reassemble() const;
};

SplitResult split_torus_factor(const ToricChart& c);

/// P^gp for the dual monoid; Spec of its group algebra is the open
/// subset where the log structure of the chart is trivial.
Sublattice triviality_locus_group(const ToricChart& c);

} // namespace logtoric
