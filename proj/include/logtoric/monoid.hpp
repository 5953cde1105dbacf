#pragma once

// Affine monoids: finitely generated submonoids of Z^n.

#include "logtoric/cone.hpp"
#include "logtoric/integer.hpp"
#include "logtoric/lattice.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace logtoric {

/// A finitely generated submonoid P of Z^n, kept with a canonical minimal
/// generating set: a Hermite basis u of the unit group P* (listed as u
/// and -u), followed by the irreducible non-units reduced modulo P*.
/// Generators are sorted graded-lexicographically.
class AffineMonoid {
public:
  AffineMonoid() = default;

  static AffineMonoid generated_by(std::size_t ambient_rank, std::span<const Vector> generators);
  /// cone ∩ group; the cone must lie in the real span of the group.
  static AffineMonoid saturated_in(const RationalCone& cone, const Sublattice& group);
  static AffineMonoid trivial(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::vector<Vector>& generators() const { return generators_; }
  /// Irreducible non-units, reduced modulo the unit group.
  const std::vector<Vector>& sharp_generators() const { return sharp_; }
  const RationalCone& cone() const { return cone_; }
  bool saturated() const { return saturated_; }
  const Sublattice& unit_sublattice() const { return units_; }
  /// P^gp.
  const Sublattice& group() const { return group_; }

  bool is_sharp() const { return units_.rank() == 0; }
  bool contains(std::span<const Integer> v) const;

  friend bool operator==(const AffineMonoid& a, const AffineMonoid& b) {
    return a.ambient_rank_ == b.ambient_rank_ && a.generators_ == b.generators_;
  }

private:
  void finish_generators();

  std::size_t ambient_rank_ = 0;
  std::vector<Vector> generators_;
  std::vector<Vector> sharp_;
  RationalCone cone_;
  bool saturated_ = true;
  Sublattice units_;
  Sublattice group_;
};

/// Finite subset of N^width.
class NatTupleSet {
public:
  using Tuple = std::vector<std::uint64_t>;

  NatTupleSet() = default;
  NatTupleSet(std::size_t width, std::vector<Tuple> tuples);

  std::size_t width() const { return width_; }
  /// Sorted lexicographically, without duplicates.
  const std::vector<Tuple>& tuples() const { return tuples_; }
  bool empty() const { return tuples_.empty(); }
  std::size_t size() const { return tuples_.size(); }

  friend bool operator==(const NatTupleSet&, const NatTupleSet&) = default;

private:
  std::size_t width_ = 0;
  std::vector<Tuple> tuples_;
};

/// Componentwise a <= b.
bool dominated_by(const NatTupleSet::Tuple& a, const NatTupleSet::Tuple& b);

/// The minimal elements under componentwise order. Every input tuple
/// dominates one of them.
NatTupleSet minimal_elements(const NatTupleSet& s);

/// Irreducible elements of a pointed cone ∩ Z^n.
/// Throws DomainError if the cone contains a line.
AffineMonoid hilbert_basis(const RationalCone& c);

/// Units basis and irreducible non-units of cone ∩ group.
struct SaturatedGenerators {
  std::vector<Vector> units;
  std::vector<Vector> sharp;
};

SaturatedGenerators saturated_generators(const RationalCone& cone, const Sublattice& group);

/// cone(m) ∩ m^gp.
AffineMonoid saturate(const AffineMonoid& m);

struct Sharpening {
  /// Image of m in Z^n / sat(P*) ~ Z^(n - rank P*).
  AffineMonoid sharp;
  Sublattice units;
  /// Z^n -> Z^(n - rank P*), the quotient map used for `sharp`.
  LatticeMap projection;
};

Sharpening sharpen(const AffineMonoid& m);

Sublattice group_completion(const AffineMonoid& m);

} // namespace logtoric
