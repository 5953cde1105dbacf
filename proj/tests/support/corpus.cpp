#include "corpus.hpp"

#include "logtoric/oracle.hpp"

namespace corpus {

using namespace logtoric;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Vector random_vector(Rng& rng, std::size_t n, long bound) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(uniform(rng, -bound, bound));
  return v;
}

NatTupleSet random_tuple_set(Rng& rng) {
  const auto width = static_cast<std::size_t>(uniform(rng, 1, 6));
  const auto count = static_cast<std::size_t>(uniform(rng, 1, 200));
  std::vector<NatTupleSet::Tuple> tuples;
  for (std::size_t i = 0; i < count; ++i) {
    NatTupleSet::Tuple t;
    for (std::size_t j = 0; j < width; ++j) t.push_back(static_cast<std::uint64_t>(uniform(rng, 0, 20)));
    tuples.push_back(std::move(t));
  }
  return NatTupleSet(width, std::move(tuples));
}

RationalCone random_pointed_cone(Rng& rng, std::size_t max_rank, long bound) {
  while (true) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_rank)));
    const auto k = static_cast<std::size_t>(uniform(rng, 2, 4));
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < k; ++i) {
      Vector v = random_vector(rng, n, bound);
      if (!is_zero(v)) gens.push_back(std::move(v));
    }
    if (gens.empty()) continue;
    RationalCone c = cone_from_generators(n, gens, Convexity::General);
    if (c.is_strongly_convex()) return c;
  }
}

ToricChart random_chart(Rng& rng) {
  while (true) {
    RationalCone c = random_pointed_cone(rng, 3, 3);
    if (c.ambient_rank() >= 2) return ToricChart(c);
  }
}

AffineMonoid random_monoid(Rng& rng, std::size_t max_rank) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_rank)));
  const auto k = static_cast<std::size_t>(uniform(rng, 1, 3));
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_vector(rng, n, 3));
  return AffineMonoid::generated_by(n, gens);
}

MonoidChart random_chart_from(Rng& rng, const AffineMonoid& source, bool dominant,
                              std::size_t max_rank) {
  const std::size_t a = source.ambient_rank();
  const std::size_t p = source.group().rank();
  while (true) {
    const auto b = static_cast<std::size_t>(
        uniform(rng, dominant ? static_cast<long>(std::max<std::size_t>(p, 1)) : 1,
                static_cast<long>(max_rank)));
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < b; ++i) rows.push_back(random_vector(rng, a, 2));
    LatticeMap map(a, b, Matrix::from_rows(a, rows));
    if (dominant && !oracle::injective_on_span(map.matrix(), source.generators())) continue;

    std::vector<Vector> gens;
    for (const Vector& g : source.generators()) gens.push_back(map(g));
    const auto extras = static_cast<std::size_t>(uniform(rng, 0, 2));
    for (std::size_t i = 0; i < extras; ++i) gens.push_back(random_vector(rng, b, 2));
    AffineMonoid target = AffineMonoid::generated_by(b, gens);
    if (uniform(rng, 0, 1) == 1) target = saturate(target);
    return MonoidChart(source, target, map);
  }
}

MonoidChart random_monoid_chart(Rng& rng) {
  AffineMonoid p = random_monoid(rng, 3);
  return random_chart_from(rng, p, uniform(rng, 0, 2) == 0, 3);
}

BaseChangePair random_base_change_pair(Rng& rng) {
  AffineMonoid p = random_monoid(rng, 3);
  if (uniform(rng, 0, 1) == 1) p = saturate(p);
  MonoidChart theta = random_chart_from(rng, p, true, 3);
  MonoidChart phi = random_chart_from(rng, p, false, 3);
  return {std::move(theta), std::move(phi)};
}

} // namespace corpus
