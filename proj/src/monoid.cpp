#include "logtoric/monoid.hpp"

#include "logtoric/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

namespace logtoric {

namespace {

using RaySet = std::vector<std::size_t>;

// Pulling triangulation of a pointed cone: each face is coned from its
// first ray over the facets that miss that ray.
class PullingTriangulation {
public:
  explicit PullingTriangulation(const RationalCone& c) {
    for (Face& f : faces(c)) dims_.emplace(f.ray_indices, f.dimension());
  }

  std::vector<RaySet> simplices_of(const RaySet& face) {
    if (auto it = memo_.find(face); it != memo_.end()) return it->second;
    const std::size_t dim = dims_.at(face);
    std::vector<RaySet> out;
    if (face.size() == dim) {
      out.push_back(face);
    } else {
      const std::size_t apex = face.front();
      for (const auto& [sub, sub_dim] : dims_) {
        if (sub_dim + 1 != dim) continue;
        if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
        if (!std::includes(face.begin(), face.end(), sub.begin(), sub.end())) continue;
        for (RaySet s : simplices_of(sub)) {
          s.insert(std::lower_bound(s.begin(), s.end(), apex), apex);
          out.push_back(std::move(s));
        }
      }
    }
    memo_.emplace(face, out);
    return out;
  }

private:
  std::map<RaySet, std::size_t> dims_;
  std::map<RaySet, std::vector<RaySet>> memo_;
};

// Lattice points x = R*lambda with lambda in [0,1)^m, for a nonsingular
// square matrix R whose columns generate a simplicial cone.
void parallelepiped_points(const Matrix& r, std::vector<Vector>& out) {
  const std::size_t m = r.rows();
  SmithDecomposition d = smith_normal_form(r);
  for (const Integer& x : d.diagonal)
    if (sgn(x) == 0) throw InvariantViolation("simplicial cone generators are dependent");

  Vector e = zero_vector(m);
  for (;;) {
    Vector x = d.left_inverse.apply(e);
    // lambda = V * D^-1 * e
    Vector shift(m);
    for (std::size_t j = 0; j < m; ++j) {
      Rational lambda = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (sgn(e[i]) != 0) lambda += Rational(d.right(j, i) * e[i], d.diagonal[i]);
      lambda.canonicalize();
      mpz_fdiv_q(shift[j].get_mpz_t(), lambda.get_num_mpz_t(), lambda.get_den_mpz_t());
    }
    Vector p = subtract(x, r.apply(shift));
    if (!is_zero(p)) out.push_back(std::move(p));

    std::size_t i = 0;
    for (; i < m; ++i) {
      e[i] += 1;
      if (e[i] < d.diagonal[i]) break;
      e[i] = 0;
    }
    if (i == m) break;
  }
}

// Hilbert basis of a pointed, full-dimensional cone in Z^m.
std::vector<Vector> pointed_hilbert_basis(const RationalCone& c) {
  if (c.is_zero()) return {};
  const std::size_t m = c.ambient_rank();
  PullingTriangulation tri(c);
  RaySet all(c.rays().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::set<Vector> pool(c.rays().begin(), c.rays().end());
  std::vector<Vector> points;
  for (const RaySet& s : tri.simplices_of(all)) {
    std::vector<Vector> cols;
    for (std::size_t i : s) cols.push_back(c.rays()[i]);
    points.clear();
    parallelepiped_points(Matrix::from_columns(m, cols), points);
    pool.insert(points.begin(), points.end());
  }

  const Vector grading = c.grading();
  std::vector<std::pair<Integer, Vector>> candidates;
  for (const Vector& v : pool) candidates.emplace_back(dot(grading, v), v);
  std::sort(candidates.begin(), candidates.end());

  std::vector<std::pair<Integer, Vector>> irreducible;
  for (const auto& [deg, x] : candidates) {
    bool reducible = false;
    for (const auto& [hdeg, h] : irreducible) {
      if (hdeg >= deg) break;
      if (contains(c, subtract(x, h))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) irreducible.emplace_back(deg, x);
  }
  std::vector<Vector> out;
  for (auto& [deg, x] : irreducible) out.push_back(std::move(x));
  return out;
}

std::vector<Vector> columns_times(const Matrix& m, std::span<const Vector> vs) {
  std::vector<Vector> out;
  for (const Vector& v : vs) out.push_back(m.apply(v));
  return out;
}

// Integral coordinates of a primitive direction of v inside `lattice`.
Vector direction_in(const Sublattice& lattice, const Vector& v) {
  auto q = lattice.rational_coordinates(v);
  if (!q)
    throw DomainError("cone generator " + to_string(v) + " is outside the span of the lattice");
  return primitive_from_rational(*q);
}

} // namespace

SaturatedGenerators saturated_generators(const RationalCone& cone, const Sublattice& group) {
  if (cone.ambient_rank() != group.ambient_rank())
    throw DomainError("cone in Z^" + std::to_string(cone.ambient_rank()) + " but lattice in Z^" +
                      std::to_string(group.ambient_rank()));
  SaturatedGenerators out;
  if (cone.is_zero() || group.rank() == 0) return out;

  // Chain of coordinate changes down to a pointed full-dimensional cone:
  // Z^n <- group (Z^k) <- span of the cone (Z^s) <- quotient by lineality.
  const std::size_t k = group.rank();
  std::vector<Vector> in_group;
  for (const Vector& g : cone.generators()) in_group.push_back(direction_in(group, g));
  RationalCone c1 = cone_from_generators(k, in_group, Convexity::General);

  Sublattice span = saturate_sublattice(Sublattice::spanned_by(k, c1.generators())).saturation;
  std::vector<Vector> in_span;
  for (const Vector& g : c1.generators()) in_span.push_back(*span.coordinates(g));
  std::vector<Vector> lin_in_span;
  for (const Vector& l : c1.lineality().basis()) lin_in_span.push_back(*span.coordinates(l));

  const std::size_t s = span.rank();
  Sublattice lin = Sublattice::spanned_by(s, lin_in_span);
  AdaptedBasis adapted = adapted_basis(lin);
  const std::size_t u = adapted.split;
  const std::size_t m = s - u;

  Matrix to_quotient(m, s);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < s; ++j) to_quotient(i, j) = adapted.inverse(u + i, j);
  Matrix lift_from_quotient(s, m), lift_units(s, u);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < m; ++j) lift_from_quotient(i, j) = adapted.basis(i, u + j);
    for (std::size_t j = 0; j < u; ++j) lift_units(i, j) = adapted.basis(i, j);
  }

  std::vector<Vector> quotient_gens = columns_times(to_quotient, in_span);
  RationalCone c2 = cone_from_generators(m, quotient_gens, Convexity::Strong);
  if (!c2.is_full_dimensional()) throw InvariantViolation("quotient cone is not full-dimensional");

  const Matrix to_ambient = group.basis_matrix() * span.basis_matrix();
  const Matrix units_to_ambient = to_ambient * lift_units;
  const Matrix sharp_to_ambient = to_ambient * lift_from_quotient;

  for (std::size_t j = 0; j < u; ++j) out.units.push_back(units_to_ambient.column(j));
  Sublattice units = Sublattice::spanned_by(group.ambient_rank(), out.units);
  out.units = units.basis();
  for (const Vector& h : pointed_hilbert_basis(c2))
    out.sharp.push_back(units.reduce(sharp_to_ambient.apply(h)));
  sort_unique(out.sharp);
  return out;
}

// ---------------------------------------------------------- AffineMonoid

namespace {

class MembershipSearch {
public:
  MembershipSearch(const AffineMonoid& m, std::span<const Vector> non_units)
      : monoid_(m), grading_(m.cone().grading()) {
    for (const Vector& g : non_units) gens_.emplace_back(dot(grading_, g), g);
    std::sort(gens_.begin(), gens_.end());
  }

  bool contains(const Vector& v) {
    if (!logtoric::contains(monoid_.cone(), v) || !monoid_.group().contains(v)) return false;
    Vector x = monoid_.unit_sublattice().reduce(v);
    if (is_zero(x)) return true;
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    const Integer deg = dot(grading_, x);
    bool found = false;
    for (const auto& [gdeg, g] : gens_) {
      if (gdeg > deg) break;
      if (contains(subtract(x, g))) {
        found = true;
        break;
      }
    }
    memo_.emplace(std::move(x), found);
    return found;
  }

private:
  const AffineMonoid& monoid_;
  Vector grading_;
  std::vector<std::pair<Integer, Vector>> gens_;
  std::map<Vector, bool> memo_;
};

} // namespace

void AffineMonoid::finish_generators() {
  generators_.clear();
  for (const Vector& u : units_.basis()) {
    generators_.push_back(u);
    generators_.push_back(negate(u));
  }
  generators_.insert(generators_.end(), sharp_.begin(), sharp_.end());
  sort_unique(generators_);
}

AffineMonoid AffineMonoid::trivial(std::size_t ambient_rank) {
  AffineMonoid m;
  m.ambient_rank_ = ambient_rank;
  m.cone_ = cone_from_generators(ambient_rank, {});
  m.units_ = Sublattice::zero(ambient_rank);
  m.group_ = Sublattice::zero(ambient_rank);
  return m;
}

AffineMonoid AffineMonoid::saturated_in(const RationalCone& cone, const Sublattice& group) {
  SaturatedGenerators sg = saturated_generators(cone, group);
  AffineMonoid m;
  m.ambient_rank_ = cone.ambient_rank();
  m.units_ = Sublattice::spanned_by(m.ambient_rank_, sg.units);
  m.sharp_ = std::move(sg.sharp);
  m.finish_generators();
  m.cone_ = cone_from_generators(m.ambient_rank_, m.generators_, Convexity::General);
  m.group_ = Sublattice::spanned_by(m.ambient_rank_, m.generators_);
  m.saturated_ = true;
  return m;
}

AffineMonoid AffineMonoid::generated_by(std::size_t ambient_rank, std::span<const Vector> generators) {
  AffineMonoid m;
  m.ambient_rank_ = ambient_rank;
  m.cone_ = cone_from_generators(ambient_rank, generators, Convexity::General);
  m.group_ = Sublattice::spanned_by(ambient_rank, generators);

  std::vector<Vector> unit_gens, others;
  for (const Vector& g : generators) {
    if (is_zero(g)) continue;
    if (logtoric::contains(m.cone_, negate(g)))
      unit_gens.push_back(g);
    else
      others.push_back(g);
  }
  m.units_ = Sublattice::spanned_by(ambient_rank, unit_gens);
  for (Vector& g : others) g = m.units_.reduce(g);
  sort_unique(others);

  // Drop generators that decompose over the others.
  std::vector<Vector> kept;
  for (std::size_t i = 0; i < others.size(); ++i) {
    std::vector<Vector> rest;
    for (std::size_t j = 0; j < others.size(); ++j)
      if (j != i) rest.push_back(others[j]);
    MembershipSearch search(m, rest);
    bool redundant = false;
    for (const Vector& h : rest)
      if (search.contains(subtract(others[i], h))) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(others[i]);
  }
  m.sharp_ = std::move(kept);
  m.finish_generators();

  SaturatedGenerators sat = saturated_generators(m.cone_, m.group_);
  MembershipSearch search(m, m.sharp_);
  m.saturated_ = std::all_of(sat.sharp.begin(), sat.sharp.end(),
                             [&](const Vector& v) { return search.contains(v); }) &&
                 std::all_of(sat.units.begin(), sat.units.end(),
                             [&](const Vector& v) { return m.units_.contains(v); });
  return m;
}

bool AffineMonoid::contains(std::span<const Integer> v) const {
  if (v.size() != ambient_rank_)
    throw DomainError("vector " + to_string(v) + " is not in Z^" + std::to_string(ambient_rank_));
  Vector x(v.begin(), v.end());
  if (saturated_) return logtoric::contains(cone_, x) && group_.contains(x);
  MembershipSearch search(*this, sharp_);
  return search.contains(x);
}

// ----------------------------------------------------------- NatTupleSet

NatTupleSet::NatTupleSet(std::size_t width, std::vector<Tuple> tuples)
    : width_(width), tuples_(std::move(tuples)) {
  for (const Tuple& t : tuples_)
    if (t.size() != width_)
      throw DomainError("tuple of length " + std::to_string(t.size()) + " in a set of width " +
                        std::to_string(width_));
  std::sort(tuples_.begin(), tuples_.end());
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
}

bool dominated_by(const NatTupleSet::Tuple& a, const NatTupleSet::Tuple& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

NatTupleSet minimal_elements(const NatTupleSet& s) {
  // Visit in order of total size: anything that could dominate a tuple
  // from below has a strictly smaller sum and has been decided already.
  std::vector<std::pair<std::uint64_t, const NatTupleSet::Tuple*>> order;
  for (const auto& t : s.tuples()) {
    std::uint64_t sum = 0;
    for (std::uint64_t x : t) sum += x;
    order.emplace_back(sum, &t);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<NatTupleSet::Tuple> minimal;
  for (const auto& [sum, t] : order) {
    bool covered = std::any_of(minimal.begin(), minimal.end(),
                               [&](const NatTupleSet::Tuple& m) { return dominated_by(m, *t); });
    if (!covered) minimal.push_back(*t);
  }
  return NatTupleSet(s.width(), std::move(minimal));
}

// ------------------------------------------------------------ operations

AffineMonoid hilbert_basis(const RationalCone& c) {
  if (!c.is_strongly_convex())
    throw DomainError("hilbert_basis: cone contains a line; the Hilbert basis is not unique");
  return AffineMonoid::saturated_in(c, Sublattice::full(c.ambient_rank()));
}

AffineMonoid saturate(const AffineMonoid& m) {
  if (m.saturated()) return m;
  return AffineMonoid::saturated_in(m.cone(), m.group());
}

Sharpening sharpen(const AffineMonoid& m) {
  const std::size_t n = m.ambient_rank();
  Sublattice sat_units = saturate_sublattice(m.unit_sublattice()).saturation;
  AdaptedBasis adapted = adapted_basis(sat_units);
  const std::size_t u = adapted.split;
  Matrix proj(n - u, n);
  for (std::size_t i = 0; i < n - u; ++i)
    for (std::size_t j = 0; j < n; ++j) proj(i, j) = adapted.inverse(u + i, j);

  std::vector<Vector> images;
  for (const Vector& g : m.sharp_generators()) images.push_back(proj.apply(g));
  return {AffineMonoid::generated_by(n - u, images), m.unit_sublattice(),
          LatticeMap(n, n - u, std::move(proj))};
}

Sublattice group_completion(const AffineMonoid& m) { return m.group(); }

} // namespace logtoric
