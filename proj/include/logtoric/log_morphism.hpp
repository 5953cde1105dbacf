#pragma once

// Charts theta: P -> Q of morphisms of toric log schemes, and the
// chart-level classification predicates. The ground field has
// characteristic zero throughout, so the p-torsion conditions of the
// general log-smoothness criterion never apply and are not checked.

#include "logtoric/lattice.hpp"
#include "logtoric/monoid.hpp"
#include "logtoric/toric_chart.hpp"

#include <cstddef>
#include <vector>

namespace logtoric {

/// A monoid homomorphism theta: P -> Q given by a lattice map between the
/// ambient lattices of P and Q.
class MonoidChart {
public:
  MonoidChart() = default;
  /// Throws DomainError if the ranks disagree or a generator of P is not
  /// sent into Q.
  MonoidChart(AffineMonoid source, AffineMonoid target, LatticeMap map);

  static MonoidChart identity(const AffineMonoid& m);

  const AffineMonoid& source() const { return source_; }
  const AffineMonoid& target() const { return target_; }
  const LatticeMap& map() const { return map_; }

  /// theta^gp: P^gp -> Z^target, in the Hermite coordinates of P^gp.
  LatticeMap group_map() const;

  friend bool operator==(const MonoidChart&, const MonoidChart&) = default;

private:
  AffineMonoid source_;
  AffineMonoid target_;
  LatticeMap map_;
};

/// The chart of the toric morphism given on the N side by
/// `lattice_map`: N_src -> N_dst. Charts live on the M side, so the result
/// is the dual map dst.dual_monoid() -> src.dual_monoid().
/// Throws DomainError naming a ray of src whose image leaves dst's cone.
MonoidChart from_toric_morphism(const ToricChart& src, const ToricChart& dst,
                                const LatticeMap& lattice_map);

bool is_dominant(const MonoidChart& c);

struct LogSmoothness {
  bool verdict = false;
  /// Basis of ker(theta^gp) in the ambient lattice of P; empty when smooth.
  std::vector<Vector> kernel;
  /// Torsion of coker(theta^gp), informational only.
  std::vector<Integer> torsion_divisors;
};

LogSmoothness is_log_smooth(const MonoidChart& c);

struct LogEtaleness {
  bool verdict = false;
  std::size_t cokernel_free_rank = 0;
  std::vector<Integer> torsion_divisors;
};

LogEtaleness log_etale_report(const MonoidChart& c);
bool is_log_etale(const MonoidChart& c);

/// The induced map of sharpenings P/P* -> Q/Q* is an isomorphism.
bool is_strict(const MonoidChart& c);

/// rank Q^gp - rank theta(P^gp). Throws DomainError for non-dominant charts.
std::size_t fibre_dimension(const MonoidChart& c);

/// coker(theta^gp: P^gp -> Q^gp).
CokernelInvariants group_cokernel(const MonoidChart& c);

} // namespace logtoric
