#include "logtoric/base_change.hpp"

#include "logtoric/error.hpp"

#include <string>

namespace logtoric {

namespace {

Vector group_coordinates(const Sublattice& g, std::span<const Integer> v, const char* what) {
  auto c = g.coordinates(v);
  if (!c) throw InvariantViolation(std::string(what) + " image " + to_string(v) + " leaves its group");
  return std::move(*c);
}

void require_same_source(const MonoidChart& theta, const MonoidChart& phi) {
  if (!(theta.source() == phi.source()))
    throw DomainError("base change needs charts with a common source monoid");
}

} // namespace

PushoutPresentation monoid_pushout(const MonoidChart& theta, const MonoidChart& phi) {
  require_same_source(theta, phi);
  const Sublattice& qgp = theta.target().group();
  const Sublattice& p2gp = phi.target().group();
  const std::size_t q = qgp.rank();
  const std::size_t p2 = p2gp.rank();
  const std::size_t n = q + p2;

  // Relation columns (theta b, -phi b) for a basis b of P^gp.
  std::vector<Vector> relations;
  for (const Vector& b : theta.source().group().basis()) {
    Vector col = group_coordinates(qgp, theta.map()(b), "theta");
    Vector tail = negate(group_coordinates(p2gp, phi.map()(b), "phi"));
    col.insert(col.end(), tail.begin(), tail.end());
    relations.push_back(std::move(col));
  }
  Matrix r = Matrix::from_columns(n, relations);

  PushoutPresentation out;
  CokernelInvariants inv = cokernel_invariants(LatticeMap(relations.size(), n, r));
  out.group_pushout_rank = inv.free_rank;
  out.torsion_divisors = inv.torsion_divisors;
  for (const Integer& d : out.torsion_divisors) out.torsion_order *= d;

  // The free quotient is Z^n / sat(relations); the Hermite basis of the
  // forms vanishing on the relations is a canonical way to coordinatize it.
  Sublattice forms = kernel(LatticeMap(n, relations.size(), r.transpose()));
  const std::size_t f = forms.rank();
  Matrix proj_q(f, q), proj_p2(f, p2);
  for (std::size_t i = 0; i < f; ++i) {
    const Vector& y = forms.basis()[i];
    for (std::size_t j = 0; j < q; ++j) proj_q(i, j) = y[j];
    for (std::size_t j = 0; j < p2; ++j) proj_p2(i, j) = y[q + j];
  }
  out.q_projection = LatticeMap(q, f, std::move(proj_q));
  out.p2_projection = LatticeMap(p2, f, std::move(proj_p2));

  for (const Vector& g : theta.target().generators())
    out.q_images.push_back(out.q_projection(group_coordinates(qgp, g, "Q generator")));
  for (const Vector& g : phi.target().generators())
    out.p2_images.push_back(out.p2_projection(group_coordinates(p2gp, g, "P' generator")));
  return out;
}

SatBaseChangeResult saturated_base_change(const MonoidChart& theta, const MonoidChart& phi) {
  require_same_source(theta, phi);
  if (!is_dominant(theta)) throw DomainError("saturated base change needs a dominant chart");
  PushoutPresentation po = monoid_pushout(theta, phi);
  const std::size_t f = po.group_pushout_rank;

  std::vector<Vector> images = po.q_images;
  images.insert(images.end(), po.p2_images.begin(), po.p2_images.end());
  AffineMonoid integral = AffineMonoid::generated_by(f, images);

  SatBaseChangeResult r;
  r.main_monoid = saturate(integral);
  r.torsion_order = po.torsion_order;

  const AffineMonoid& p2 = phi.target();
  const Sublattice& p2gp = p2.group();
  if (p2gp.saturated()) {
    // Extend P'^gp -> F to the ambient lattice through a complement.
    AdaptedBasis adapted = adapted_basis(p2gp);
    Matrix to_coords(p2gp.rank(), p2.ambient_rank());
    for (std::size_t i = 0; i < p2gp.rank(); ++i)
      for (std::size_t j = 0; j < p2.ambient_rank(); ++j) to_coords(i, j) = adapted.inverse(i, j);
    LatticeMap ambient = po.p2_projection * LatticeMap(p2.ambient_rank(), p2gp.rank(), to_coords);
    r.structural_map = MonoidChart(p2, r.main_monoid, ambient);
  } else {
    std::vector<Vector> coords;
    for (const Vector& g : p2.generators()) coords.push_back(group_coordinates(p2gp, g, "P' generator"));
    AffineMonoid source = AffineMonoid::generated_by(p2gp.rank(), coords);
    r.structural_map = MonoidChart(source, r.main_monoid, po.p2_projection);
  }
  r.fibre_dim = f - image(r.structural_map.group_map()).rank();
  return r;
}

BaseChangeReport verify_base_change(const SatBaseChangeResult& r, const MonoidChart& theta) {
  BaseChangeReport rep;
  const AffineMonoid& main = r.main_monoid;

  rep.saturated = main.group().saturated() && saturate(main) == main;
  if (!rep.saturated) rep.diagnostics.push_back("main monoid is not saturated in its group");

  LogSmoothness smooth = is_log_smooth(r.structural_map);
  rep.log_smooth = smooth.verdict;
  if (!rep.log_smooth) {
    std::string k;
    for (const Vector& v : smooth.kernel) k += to_string(v);
    rep.diagnostics.push_back("structural map has kernel " + k + " on the group of P'");
  }

  rep.dominant = is_dominant(r.structural_map);
  if (!rep.dominant) rep.diagnostics.push_back("structural map is not dominant");

  const auto rank_main = static_cast<long>(main.group().rank());
  const auto rank_p2 = static_cast<long>(r.structural_map.source().group().rank());
  const auto rank_q = static_cast<long>(theta.target().group().rank());
  const auto rank_p = static_cast<long>(theta.source().group().rank());
  const auto fd = static_cast<long>(r.fibre_dim);
  rep.fibre_dim_identity = fd == rank_main - rank_p2 && fd == rank_q - rank_p;
  if (!rep.fibre_dim_identity)
    rep.diagnostics.push_back("fibre_dim " + std::to_string(fd) + " but rank(main) - rank(P') = " +
                              std::to_string(rank_main - rank_p2) + " and rank(Q) - rank(P) = " +
                              std::to_string(rank_q - rank_p));
  return rep;
}

} // namespace logtoric
