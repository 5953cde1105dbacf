#include "corpus.hpp"

#include "logtoric/error.hpp"
#include "logtoric/oracle.hpp"
#include "logtoric/toric_chart.hpp"

#include <doctest.h>

using namespace logtoric;

namespace {

std::vector<Vector> vs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> out;
  for (auto r : rows) out.push_back(make_vector(r));
  return out;
}

ToricChart orthant() { return ToricChart(2, vs({{1, 0}, {0, 1}})); }
ToricChart quadric() { return ToricChart(2, vs({{1, 0}, {1, 2}})); }

// Every box point of the dual monoid that is positive on all rays lies in
// the ideal, by oracle membership, and the generators form an antichain.
void check_ideal(const ToricChart& c, const MonomialIdeal& ideal, const oracle::Box& box) {
  std::vector<Vector> monoid_points = oracle::enumerate_cone_points(dual_cone(c.cone()), box);
  for (const Vector& m : monoid_points) {
    bool positive = std::all_of(c.cone().rays().begin(), c.cone().rays().end(),
                                [&](const Vector& r) { return dot(m, r) >= 1; });
    if (!positive) continue;
    // The oracle only sees monoid points inside the box; generators
    // lying outside would show up as misses here.
    CHECK(ideal.contains(m));
    CHECK(oracle::in_cone_generated(c.dual_monoid().cone().generators(), m));
  }
  for (const Vector& g : ideal.generator_exponents) {
    for (const Vector& r : c.cone().rays()) CHECK(dot(g, r) >= 1);
    for (const Vector& h : ideal.generator_exponents)
      if (g != h) CHECK_FALSE(c.dual_monoid().contains(subtract(g, h)));
  }
}

} // namespace

TEST_CASE("chart invariants") {
  ToricChart q = quadric();
  CHECK(q.dual_monoid().cone() == dual_cone(q.cone()));
  CHECK(q.dual_monoid().saturated());
  CHECK(q.dual_monoid().generators() == vs({{0, 1}, {1, 0}, {2, -1}}));
  CHECK_THROWS_AS(ToricChart(2, vs({{1, 0}, {-1, 0}})), DomainError);
}

TEST_CASE("boundary ideal golden cases") {
  MonomialIdeal a2 = boundary_ideal_generators(orthant());
  CHECK(a2.generator_exponents == vs({{1, 1}}));
  MonomialIdeal q = boundary_ideal_generators(quadric());
  CHECK(q.generator_exponents == vs({{1, 0}}));
  MonomialIdeal a1 = boundary_ideal_generators(ToricChart(1, vs({{1}})));
  CHECK(a1.generator_exponents == vs({{1}}));
  CHECK(boundary_ideal_generators(ToricChart(2, {})).generator_exponents.empty());

  oracle::Box box = oracle::Box::cube(2, 0, 6);
  std::vector<Vector> pts = oracle::enumerate_cone_points(dual_cone(quadric().cone()), box);
  for (const Vector& m : pts) {
    bool positive = dot(m, make_vector({1, 0})) >= 1 && dot(m, make_vector({1, 2})) >= 1;
    CHECK(oracle::brute_ideal_membership(q.generator_exponents, m, pts) == positive);
  }
  check_ideal(orthant(), a2, oracle::Box::cube(2, -6, 6));
  check_ideal(quadric(), q, oracle::Box::cube(2, -6, 6));
}

TEST_CASE("boundary ideal on non-full-dimensional charts") {
  ToricChart ray(2, vs({{1, 0}}));
  MonomialIdeal ideal = boundary_ideal_generators(ray);
  // modulo the unit line (0, 1) the only generator is (1, 0)
  CHECK(ideal.generator_exponents == vs({{1, 0}}));
  CHECK(ideal.contains(make_vector({1, -7})));
  CHECK_FALSE(ideal.contains(make_vector({0, 3})));
}

TEST_CASE("orbits") {
  ToricChart a2 = orthant();
  OrbitData o = orbit_data(a2, face_spanned_by(a2.cone(), vs({{1, 0}})));
  CHECK(o.orbit_dimension == 1);
  CHECK(o.closure_monoid.generators() == vs({{0, 1}}));

  OrbitData dense = orbit_data(a2, face_spanned_by(a2.cone(), {}));
  CHECK(dense.orbit_dimension == 2);
  CHECK(dense.closure_monoid == a2.dual_monoid());

  ToricChart q = quadric();
  OrbitData point = orbit_data(q, face_spanned_by(q.cone(), q.cone().rays()));
  CHECK(point.orbit_dimension == 0);
  CHECK(point.closure_monoid.generators().empty());

  Face bogus = faces(q.cone()).back();
  bogus.cone = cone_from_generators(2, vs({{1, 1}}));
  CHECK_THROWS_AS(orbit_data(q, bogus), DomainError);
}

TEST_CASE("face localization") {
  ToricChart a2 = orthant();
  ToricChart loc = face_localization(a2, face_spanned_by(a2.cone(), vs({{1, 0}})));
  CHECK(loc.dual_monoid().unit_sublattice().basis() == vs({{0, 1}}));
  CHECK(loc.dual_monoid().sharp_generators() == vs({{1, 0}}));

  ToricChart q = quadric();
  CHECK(face_localization(q, faces(q.cone()).back()) == q);

  ToricChart qloc = face_localization(q, face_spanned_by(q.cone(), vs({{1, 0}})));
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      CHECK(qloc.dual_monoid().contains(make_vector({a, b})) == (a >= 0));
}

TEST_CASE("splitting off the torus factor") {
  SplitResult e1 = split_torus_factor(ToricChart(2, vs({{1, 0}})));
  CHECK(e1.n1.basis() == vs({{1, 0}}));
  CHECK(e1.n2.basis() == vs({{0, 1}}));
  CHECK(e1.torus_rank == 1);
  CHECK(e1.factor_monoid.generators() == vs({{1}}));

  ToricChart q = quadric();
  SplitResult full = split_torus_factor(q);
  CHECK(full.torus_rank == 0);
  CHECK(full.reassemble() == q.dual_monoid());

  ToricChart t(3, vs({{1, 0, 0}, {1, 2, 0}}));
  SplitResult s = split_torus_factor(t);
  CHECK(s.n1.basis() == vs({{1, 0, 0}, {0, 1, 0}}));
  CHECK(s.torus_rank == 1);
  CHECK(s.factor_monoid == q.dual_monoid());
  CHECK(s.reassemble() == t.dual_monoid());
}

TEST_CASE("triviality locus") {
  CHECK(triviality_locus_group(orthant()) == Sublattice::full(2));
  CHECK(triviality_locus_group(quadric()) == Sublattice::full(2));
  CHECK(triviality_locus_group(ToricChart(0, {})).rank() == 0);
}

TEST_CASE("chart properties on a random corpus") {
  corpus::Rng rng(corpus::kSeed + 30);
  for (int trial = 0; trial < 25; ++trial) {
    ToricChart c = corpus::random_chart(rng);
    const std::size_t d = c.lattice_rank();
    std::vector<Face> fs = faces(c.cone());

    // orbit-cone bookkeeping: faces of dim k <-> orbits of dim d - k
    std::vector<std::size_t> by_face(d + 1), by_orbit(d + 1);
    for (const Face& f : fs) {
      OrbitData o = orbit_data(c, f);
      CHECK(o.orbit_dimension == d - f.dimension());
      ++by_face[f.dimension()];
      ++by_orbit[d - o.orbit_dimension];
      for (const Vector& g : o.closure_monoid.generators())
        for (const Vector& r : f.cone.rays()) CHECK(dot(g, r) == 0);

      // localization contains the original monoid, and the inverse of the
      // defining normal generates the rest
      ToricChart loc = face_localization(c, f);
      for (const Vector& g : c.dual_monoid().generators()) CHECK(loc.dual_monoid().contains(g));
      std::vector<Vector> gens = c.dual_monoid().generators();
      gens.push_back(negate(f.defining_normal));
      CHECK(AffineMonoid::generated_by(d, gens) == loc.dual_monoid());
    }
    CHECK(by_face == by_orbit);

    check_ideal(c, boundary_ideal_generators(c), oracle::Box::cube(d, -5, 5));
    CHECK(split_torus_factor(c).reassemble() == c.dual_monoid());
  }
}
