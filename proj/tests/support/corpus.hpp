#pragma once

// Seeded random inputs shared by the unit and acceptance tests.

#include "logtoric/cone.hpp"
#include "logtoric/log_morphism.hpp"
#include "logtoric/monoid.hpp"
#include "logtoric/toric_chart.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace corpus {

using logtoric::Vector;
using Rng = std::mt19937;

inline constexpr std::uint32_t kSeed = 20240613;

long uniform(Rng& rng, long lo, long hi);
Vector random_vector(Rng& rng, std::size_t n, long bound);

/// Up to 200 tuples in N^s, s <= 6, entries <= 20.
logtoric::NatTupleSet random_tuple_set(Rng& rng);

/// Strongly convex, rank 1..max_rank, 2..4 generators with entries in
/// [-bound, bound]. Not necessarily full-dimensional.
logtoric::RationalCone random_pointed_cone(Rng& rng, std::size_t max_rank, long bound);

/// A chart of rank 2 or 3.
logtoric::ToricChart random_chart(Rng& rng);

/// A monoid generated by 1..3 vectors of rank 1..3; units allowed.
logtoric::AffineMonoid random_monoid(Rng& rng, std::size_t max_rank);

/// theta: P -> Q with Q generated by theta(P) plus extra vectors.
/// Dominance is not controlled.
logtoric::MonoidChart random_monoid_chart(Rng& rng);

/// A chart out of `source` whose matrix has full column rank on the
/// group of `source` when `dominant` is set.
logtoric::MonoidChart random_chart_from(Rng& rng, const logtoric::AffineMonoid& source,
                                        bool dominant, std::size_t max_rank);

struct BaseChangePair {
  logtoric::MonoidChart theta;
  logtoric::MonoidChart phi;
};

/// theta dominant, phi arbitrary, all ranks <= 3.
BaseChangePair random_base_change_pair(Rng& rng);

} // namespace corpus
