#include "corpus.hpp"

#include "logtoric/error.hpp"
#include "logtoric/monoid.hpp"
#include "logtoric/oracle.hpp"

#include <doctest.h>

using namespace logtoric;

namespace {

std::vector<Vector> vs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> out;
  for (auto r : rows) out.push_back(make_vector(r));
  return out;
}

std::vector<Vector> lex_sorted(std::vector<Vector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

TEST_CASE("minimal elements") {
  NatTupleSet s(2, {{2, 0}, {1, 1}, {0, 3}, {2, 2}, {3, 0}});
  CHECK(minimal_elements(s).tuples() == std::vector<NatTupleSet::Tuple>{{0, 3}, {1, 1}, {2, 0}});
  NatTupleSet z(3, {{0, 0, 0}, {1, 2, 3}, {0, 0, 1}});
  CHECK(minimal_elements(z).tuples() == std::vector<NatTupleSet::Tuple>{{0, 0, 0}});
  NatTupleSet one(2, {{5, 7}});
  CHECK(minimal_elements(one).tuples() == one.tuples());
  CHECK(minimal_elements(NatTupleSet(2, {})).empty());
}

TEST_CASE("minimal elements properties") {
  corpus::Rng rng(corpus::kSeed + 20);
  for (int trial = 0; trial < 100; ++trial) {
    NatTupleSet s = corpus::random_tuple_set(rng);
    NatTupleSet m = minimal_elements(s);
    for (const auto& a : m.tuples())
      for (const auto& b : m.tuples()) CHECK((a == b || !dominated_by(a, b)));
    for (const auto& t : s.tuples())
      CHECK(std::any_of(m.tuples().begin(), m.tuples().end(),
                        [&](const auto& a) { return dominated_by(a, t); }));
    CHECK(m.tuples() == oracle::brute_minimal_elements(s.tuples()));
  }
}

TEST_CASE("hilbert bases") {
  RationalCone orthant = cone_from_generators(2, vs({{1, 0}, {0, 1}}));
  CHECK(hilbert_basis(dual_cone(orthant)).generators() == vs({{0, 1}, {1, 0}}));

  RationalCone d = cone_from_generators(2, vs({{0, 1}, {2, -1}}));
  AffineMonoid h = hilbert_basis(d);
  CHECK(h.generators() == vs({{0, 1}, {1, 0}, {2, -1}}));
  CHECK(h.saturated());
  CHECK(lex_sorted(h.generators()) == oracle::brute_hilbert_basis(d, oracle::Box::cube(2, -4, 4)));

  CHECK(hilbert_basis(cone_from_generators(2, vs({{3, 6}}))).generators() == vs({{1, 2}}));
  CHECK_THROWS_AS(hilbert_basis(dual_cone(cone_from_generators(2, vs({{1, 0}})))), DomainError);
}

TEST_CASE("saturation of monoids") {
  AffineMonoid cusp = AffineMonoid::generated_by(1, vs({{2}, {3}}));
  CHECK_FALSE(cusp.saturated());
  CHECK(saturate(cusp).generators() == vs({{1}}));

  AffineMonoid orthant = AffineMonoid::generated_by(2, vs({{1, 0}, {0, 1}}));
  CHECK(orthant.saturated());
  CHECK(saturate(orthant) == orthant);

  AffineMonoid wedge = AffineMonoid::generated_by(2, vs({{1, 0}, {1, 2}}));
  // (1,1) is not in the group, so nothing is added.
  CHECK(wedge.saturated());
  CHECK(saturate(wedge).generators() == vs({{1, 0}, {1, 2}}));
  CHECK(saturate(AffineMonoid::generated_by(2, vs({{1, 0}, {1, 2}, {1, 1}}))).generators() ==
        vs({{1, 0}, {1, 1}, {1, 2}}));

  CHECK(lex_sorted(saturate(wedge).generators()) ==
        oracle::brute_saturation(wedge.generators(), wedge.group().basis(),
                                 oracle::Box::cube(2, -3, 3)));

  // The group here is 2Z, so 2 is a generator of the saturation, not 1.
  AffineMonoid even = AffineMonoid::generated_by(1, vs({{4}, {6}}));
  CHECK(saturate(even).generators() == vs({{2}}));
}

TEST_CASE("sharpening and group completion") {
  AffineMonoid half = AffineMonoid::generated_by(2, vs({{1, 0}, {0, 1}, {0, -1}}));
  Sharpening s = sharpen(half);
  CHECK(s.units.basis() == vs({{0, 1}}));
  CHECK(s.sharp.generators() == vs({{1}}));
  CHECK(s.sharp.is_sharp());

  AffineMonoid pointed = AffineMonoid::generated_by(2, vs({{1, 0}, {1, 2}}));
  CHECK(sharpen(pointed).units.rank() == 0);
  CHECK(sharpen(pointed).sharp == pointed);

  AffineMonoid full = AffineMonoid::generated_by(2, vs({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  CHECK(sharpen(full).units == Sublattice::full(2));
  CHECK(sharpen(full).sharp.generators().empty());

  CHECK(group_completion(AffineMonoid::generated_by(2, vs({{1, 0}, {0, 1}}))) == Sublattice::full(2));
  Sublattice g = group_completion(AffineMonoid::generated_by(2, vs({{2, 0}})));
  CHECK(g.basis() == vs({{2, 0}}));
  CHECK(saturate_sublattice(g).index == 2);
  CHECK(group_completion(AffineMonoid::trivial(3)).rank() == 0);
}

TEST_CASE("membership in non-saturated monoids") {
  AffineMonoid cusp = AffineMonoid::generated_by(1, vs({{2}, {3}}));
  CHECK_FALSE(cusp.contains(make_vector({1})));
  for (long n = 2; n < 15; ++n) CHECK(cusp.contains(make_vector({n})));
  CHECK(cusp.contains(make_vector({0})));
  CHECK_FALSE(cusp.contains(make_vector({-2})));
}

TEST_CASE("monoid properties on a random corpus") {
  corpus::Rng rng(corpus::kSeed + 21);
  for (int trial = 0; trial < 60; ++trial) {
    AffineMonoid m = corpus::random_monoid(rng, 3);
    AffineMonoid s = saturate(m);
    for (const Vector& g : m.generators()) CHECK(s.contains(g));
    CHECK(saturate(s) == s);
    CHECK(s.cone() == m.cone());
    CHECK(s.group() == m.group());

    // minimality: no non-unit generator is a sum of two nonzero elements
    for (const Vector& g : m.sharp_generators())
      for (const Vector& h : m.generators())
        if (h != g && !m.unit_sublattice().contains(h)) CHECK_FALSE(m.contains(subtract(g, h)));

    // rank of the group equals the cone dimension
    CHECK(s.group().rank() == s.cone().dimension());

    // saturated sharp monoids: compare with the oracle
    if (s.is_sharp() && s.ambient_rank() <= 2) {
      std::vector<Vector> gens = s.generators();
      oracle::Box box = oracle::hilbert_box(s.ambient_rank(), m.generators());
      CHECK(lex_sorted(gens) == oracle::brute_saturation(m.generators(), m.group().basis(), box));
    }
  }
}
