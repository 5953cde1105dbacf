#include "logtoric/toric_chart.hpp"

#include "logtoric/error.hpp"

#include <algorithm>
#include <string>

namespace logtoric {

ToricChart::ToricChart(RationalCone cone) : cone_(std::move(cone)) {
  if (!cone_.is_strongly_convex())
    throw DomainError("a toric chart needs a strongly convex cone");
  dual_monoid_ = AffineMonoid::saturated_in(dual_cone(cone_), Sublattice::full(cone_.ambient_rank()));
}

ToricChart::ToricChart(std::size_t lattice_rank, std::span<const Vector> cone_generators)
    : ToricChart(cone_from_generators(lattice_rank, cone_generators, Convexity::Strong)) {}

bool MonomialIdeal::contains(std::span<const Integer> v) const {
  return std::any_of(generator_exponents.begin(), generator_exponents.end(),
                     [&](const Vector& g) { return monoid.contains(subtract(v, g)); });
}

namespace {

bool positive_on_rays(const Vector& m, const std::vector<Vector>& rays) {
  return std::all_of(rays.begin(), rays.end(), [&](const Vector& r) { return dot(m, r) >= 1; });
}

// 0/1 coefficient tuples over `basis` with at most `max_support` ones whose
// sum pairs positively with every ray.
void collect_covering_tuples(const std::vector<Vector>& basis, const std::vector<Vector>& rays,
                             std::size_t max_support, std::size_t next, NatTupleSet::Tuple& cur,
                             Vector& sum, std::size_t support,
                             std::vector<NatTupleSet::Tuple>& out) {
  if (support > 0 && positive_on_rays(sum, rays)) {
    out.push_back(cur);
    return; // supersets are dominated by this tuple
  }
  if (support == max_support) return;
  for (std::size_t j = next; j < basis.size(); ++j) {
    cur[j] = 1;
    Vector extended = add(sum, basis[j]);
    collect_covering_tuples(basis, rays, max_support, j + 1, cur, extended, support + 1, out);
    cur[j] = 0;
  }
}

} // namespace

MonomialIdeal boundary_ideal_generators(const ToricChart& c) {
  MonomialIdeal ideal{c.dual_monoid(), {}};
  const std::vector<Vector>& rays = c.cone().rays();
  if (rays.empty()) return ideal;

  // Any ideal element m = sum n_j alpha_j picks, for each ray, some alpha_j
  // that is positive on it; those alpha_j alone already sum into the
  // ideal and divide m. So the minimal tuples are 0/1 with support at
  // most the number of rays.
  const std::vector<Vector>& basis = c.dual_monoid().sharp_generators();
  const std::size_t d = c.lattice_rank();
  std::vector<NatTupleSet::Tuple> tuples;
  NatTupleSet::Tuple cur(basis.size(), 0);
  Vector sum = zero_vector(d);
  collect_covering_tuples(basis, rays, rays.size(), 0, cur, sum, 0, tuples);
  NatTupleSet minimal = minimal_elements(NatTupleSet(basis.size(), std::move(tuples)));

  // Coefficients are not unique; finish in exponent space.
  std::vector<Vector> exponents;
  for (const auto& t : minimal.tuples()) {
    Vector m = zero_vector(d);
    for (std::size_t j = 0; j < t.size(); ++j)
      if (t[j] != 0) m = add(m, scale(Integer(static_cast<unsigned long>(t[j])), basis[j]));
    exponents.push_back(c.dual_monoid().unit_sublattice().reduce(m));
  }
  sort_unique(exponents);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    bool divisible = false;
    for (std::size_t j = 0; j < exponents.size() && !divisible; ++j)
      if (j != i && c.dual_monoid().contains(subtract(exponents[i], exponents[j])))
        divisible = true;
    if (!divisible) ideal.generator_exponents.push_back(exponents[i]);
  }
  return ideal;
}

namespace {

void require_face(const ToricChart& c, const Face& f) {
  if (!is_face_of(f, c.cone())) {
    std::string rays;
    for (const Vector& r : f.cone.rays()) rays += to_string(r);
    throw DomainError("cone spanned by {" + rays + "} is not a face of the chart's cone");
  }
}

} // namespace

OrbitData orbit_data(const ToricChart& c, const Face& f) {
  require_face(c, f);
  std::vector<Vector> perp;
  for (const Vector& g : c.dual_monoid().generators())
    if (std::all_of(f.cone.rays().begin(), f.cone.rays().end(),
                    [&](const Vector& r) { return sgn(dot(g, r)) == 0; }))
      perp.push_back(g);
  OrbitData o;
  o.face = f;
  o.orbit_dimension = c.lattice_rank() - f.dimension();
  o.closure_monoid = AffineMonoid::generated_by(c.lattice_rank(), perp);
  return o;
}

ToricChart face_localization(const ToricChart& c, const Face& f) {
  require_face(c, f);
  return ToricChart(f.cone);
}

SplitResult split_torus_factor(const ToricChart& c) {
  const std::size_t d = c.lattice_rank();
  SplitResult s;
  s.n1 = saturate_sublattice(Sublattice::spanned_by(d, c.cone().rays())).saturation;
  s.n2 = complement(s.n1);
  s.torus_rank = d - s.n1.rank();

  std::vector<Vector> rays_in_n1;
  for (const Vector& r : c.cone().rays()) rays_in_n1.push_back(*s.n1.coordinates(r));
  RationalCone tau1 = cone_from_generators(s.n1.rank(), rays_in_n1, Convexity::Strong);
  s.factor_monoid = hilbert_basis(dual_cone(tau1));
  return s;
}

AffineMonoid SplitResult::reassemble() const {
  const std::size_t d = n1.ambient_rank();
  const std::size_t t = n1.rank();
  std::vector<Vector> cols = n1.basis();
  cols.insert(cols.end(), n2.basis().begin(), n2.basis().end());
  SmithDecomposition snf = smith_normal_form(Matrix::from_columns(d, cols));
  // W^-T carries coordinates dual to [n1 | n2] back to M.
  const Matrix to_m = (snf.right * snf.left).transpose();

  std::vector<Vector> gens;
  for (const Vector& a : factor_monoid.generators()) {
    Vector v = zero_vector(d);
    std::copy(a.begin(), a.end(), v.begin());
    gens.push_back(to_m.apply(v));
  }
  for (std::size_t j = t; j < d; ++j) {
    Vector e = to_m.apply(unit_vector(d, j));
    gens.push_back(negate(e));
    gens.push_back(std::move(e));
  }
  return AffineMonoid::generated_by(d, gens);
}

Sublattice triviality_locus_group(const ToricChart& c) { return group_completion(c.dual_monoid()); }

} // namespace logtoric
