#pragma once

// Saturated base change of a dominant chart theta: P -> Q along an
// arbitrary chart phi: P -> P'. The group pushout is presented through
// the Smith form of its relation matrix; the main component is the
// saturation of the integral pushout inside the torsion-free quotient.

#include "logtoric/lattice.hpp"
#include "logtoric/log_morphism.hpp"
#include "logtoric/monoid.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace logtoric {

struct PushoutPresentation {
  /// Rank of the torsion-free quotient F of (Q^gp (+) P'^gp) / P^gp.
  std::size_t group_pushout_rank = 0;
  std::vector<Integer> torsion_divisors;
  Integer torsion_order{1};
  /// Images of the generators of Q (resp. P') in F = Z^group_pushout_rank,
  /// in the order of Q.generators() (resp. P'.generators()).
  std::vector<Vector> q_images;
  std::vector<Vector> p2_images;
  /// Q^gp -> F and P'^gp -> F, in Hermite coordinates of Q^gp and P'^gp.
  LatticeMap q_projection;
  LatticeMap p2_projection;
};

/// Throws DomainError if the two charts do not share their source.
PushoutPresentation monoid_pushout(const MonoidChart& theta, const MonoidChart& phi);

struct SatBaseChangeResult {
  AffineMonoid main_monoid;
  /// P' -> main_monoid. Its source is P' itself when P'^gp is saturated in
  /// its ambient lattice, and P' rewritten in coordinates of P'^gp
  /// otherwise.
  MonoidChart structural_map;
  Integer torsion_order{1};
  std::size_t fibre_dim = 0;
};

/// Throws DomainError on a source mismatch or a non-dominant theta.
SatBaseChangeResult saturated_base_change(const MonoidChart& theta, const MonoidChart& phi);

struct BaseChangeReport {
  bool saturated = false;
  bool log_smooth = false;
  bool dominant = false;
  bool fibre_dim_identity = false;
  std::vector<std::string> diagnostics;

  bool ok() const { return saturated && log_smooth && dominant && fibre_dim_identity; }
};

BaseChangeReport verify_base_change(const SatBaseChangeResult& r, const MonoidChart& theta);

} // namespace logtoric
