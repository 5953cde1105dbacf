#include "corpus.hpp"

#include "logtoric/cone.hpp"
#include "logtoric/error.hpp"
#include "logtoric/oracle.hpp"

#include <doctest.h>

using namespace logtoric;

namespace {

std::vector<Vector> vs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> out;
  for (auto r : rows) out.push_back(make_vector(r));
  return out;
}

} // namespace

TEST_CASE("cones from generators") {
  RationalCone orthant = cone_from_generators(2, vs({{1, 0}, {0, 1}}));
  CHECK(orthant.rays() == vs({{0, 1}, {1, 0}}));
  CHECK(orthant.facets() == vs({{0, 1}, {1, 0}}));

  RationalCone wedge = cone_from_generators(2, vs({{1, 0}, {1, 2}}));
  CHECK(wedge.facets() == vs({{0, 1}, {2, -1}}));

  RationalCone ray = cone_from_generators(2, vs({{2, 0}}));
  CHECK(ray.rays() == vs({{1, 0}}));

  // redundant generators are dropped
  RationalCone r = cone_from_generators(2, vs({{1, 0}, {1, 1}, {0, 1}, {3, 5}}));
  CHECK(r.rays() == vs({{0, 1}, {1, 0}}));

  CHECK_THROWS_AS(cone_from_generators(2, vs({{1, 0}, {-1, 0}})), DomainError);
  CHECK_THROWS_AS(cone_from_generators(2, vs({{1, 0, 0}})), DomainError);
  CHECK_NOTHROW(cone_from_generators(2, vs({{1, 0}, {-1, 0}}), Convexity::General));
}

TEST_CASE("dual cones") {
  RationalCone orthant = cone_from_generators(2, vs({{1, 0}, {0, 1}}));
  CHECK(dual_cone(orthant) == orthant);

  RationalCone wedge = cone_from_generators(2, vs({{1, 0}, {1, 2}}));
  CHECK(dual_cone(wedge) == cone_from_generators(2, vs({{0, 1}, {2, -1}})));

  // The dual of a ray is a half-plane with a lineality line.
  RationalCone half = dual_cone(cone_from_generators(2, vs({{1, 0}})));
  CHECK_FALSE(half.is_strongly_convex());
  CHECK(half.lineality().basis() == vs({{0, 1}}));
  CHECK(half.rays() == vs({{1, 0}}));
  CHECK(half == cone_from_generators(2, vs({{1, 0}, {0, 1}, {0, -1}}), Convexity::General));
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) CHECK(contains(half, make_vector({a, b})) == (a >= 0));

  // membership oracle on [-4,4]^2 for the dual of the wedge
  RationalCone d = dual_cone(wedge);
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      CHECK(contains(d, make_vector({a, b})) == (a >= 0 && a + 2 * b >= 0));
}

TEST_CASE("containment") {
  RationalCone orthant = cone_from_generators(2, vs({{1, 0}, {0, 1}}));
  CHECK(contains(orthant, make_vector({1, 1})));
  RationalCone wedge = cone_from_generators(2, vs({{1, 0}, {1, 2}}));
  CHECK_FALSE(contains(wedge, make_vector({0, -1})));
  CHECK(contains(wedge, make_vector({0, 0})));
}

TEST_CASE("faces") {
  CHECK(faces(cone_from_generators(2, vs({{1, 0}, {0, 1}}))).size() == 4);
  RationalCone wedge = cone_from_generators(2, vs({{1, 0}, {1, 2}}));
  std::vector<Face> fs = faces(wedge);
  CHECK(fs.size() == 4);
  CHECK(faces(cone_from_generators(2, {})).size() == 1);

  for (const Face& f : fs) {
    CHECK(is_face_of(f, wedge));
    CHECK(contains(dual_cone(wedge), f.defining_normal));
    for (std::size_t i = 0; i < wedge.rays().size(); ++i) {
      bool in = std::find(f.ray_indices.begin(), f.ray_indices.end(), i) != f.ray_indices.end();
      CHECK((dot(f.defining_normal, wedge.rays()[i]) == 0) == in);
    }
  }
  CHECK_THROWS_AS(faces(cone_from_generators(2, vs({{1, 0}, {-1, 0}}), Convexity::General)),
                  DomainError);
}

TEST_CASE("cone properties on a random corpus") {
  corpus::Rng rng(corpus::kSeed + 10);
  for (int trial = 0; trial < 80; ++trial) {
    RationalCone c = corpus::random_pointed_cone(rng, 4, 4);
    const std::size_t n = c.ambient_rank();

    // double description consistency
    for (const Vector& r : c.rays())
      for (const Vector& h : c.facet_normals()) CHECK(dot(r, h) >= 0);
    CHECK(cone_from_inequalities(n, c.facet_normals()) == c);
    CHECK(dual_cone(dual_cone(c)) == c);
    // and the dual rebuilt from its generators by double description
    std::vector<Vector> dual_gens = c.facets();
    for (const Vector& e : c.equations().basis()) {
      dual_gens.push_back(e);
      dual_gens.push_back(negate(e));
    }
    CHECK(cone_from_generators(n, dual_gens, Convexity::General) == dual_cone(c));

    // irredundant rays
    for (std::size_t i = 0; i < c.rays().size(); ++i) {
      std::vector<Vector> others = c.rays();
      others.erase(others.begin() + static_cast<long>(i));
      CHECK_FALSE(oracle::in_cone_generated(others, c.rays()[i]));
    }

    // membership agrees with the generator search on a small box
    if (n <= 3) {
      std::vector<Vector> box = oracle::enumerate_points({}, oracle::Box::cube(n, -2, 2));
      for (const Vector& v : box) CHECK(contains(c, v) == oracle::in_cone_generated(c.rays(), v));
    }

    // faces: closed under intersection, dimension = rank of ray span
    std::vector<Face> fs = faces(c);
    for (const Face& f : fs) CHECK(f.dimension() == oracle::rank(f.cone.rays()));
    for (const Face& f : fs)
      for (const Face& g : fs) {
        std::vector<std::size_t> common;
        std::set_intersection(f.ray_indices.begin(), f.ray_indices.end(), g.ray_indices.begin(),
                              g.ray_indices.end(), std::back_inserter(common));
        bool found = std::any_of(fs.begin(), fs.end(),
                                 [&](const Face& h) { return h.ray_indices == common; });
        CHECK(found);
      }
  }
}

TEST_CASE("face lookup by rays") {
  RationalCone wedge = cone_from_generators(2, vs({{1, 0}, {1, 2}}));
  Face f = face_spanned_by(wedge, vs({{1, 0}}));
  CHECK(f.dimension() == 1);
  CHECK_THROWS_AS(face_spanned_by(wedge, vs({{1, 1}})), DomainError);
}
