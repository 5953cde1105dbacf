#include "logtoric/log_morphism.hpp"

#include "logtoric/error.hpp"

#include <algorithm>
#include <string>

namespace logtoric {

MonoidChart::MonoidChart(AffineMonoid source, AffineMonoid target, LatticeMap map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.source_rank() != source_.ambient_rank() || map_.target_rank() != target_.ambient_rank())
    throw DomainError("chart map Z^" + std::to_string(map_.source_rank()) + " -> Z^" +
                      std::to_string(map_.target_rank()) + " does not match monoids in Z^" +
                      std::to_string(source_.ambient_rank()) + " and Z^" +
                      std::to_string(target_.ambient_rank()));
  for (const Vector& g : source_.generators())
    if (!target_.contains(map_(g)))
      throw DomainError("generator " + to_string(g) + " maps to " + to_string(map_(g)) +
                        ", which is not in the target monoid");
}

MonoidChart MonoidChart::identity(const AffineMonoid& m) {
  return MonoidChart(m, m, LatticeMap::identity(m.ambient_rank()));
}

LatticeMap MonoidChart::group_map() const { return restrict_to(map_, source_.group()); }

MonoidChart from_toric_morphism(const ToricChart& src, const ToricChart& dst,
                                const LatticeMap& lattice_map) {
  if (lattice_map.source_rank() != src.lattice_rank() ||
      lattice_map.target_rank() != dst.lattice_rank())
    throw DomainError("lattice map Z^" + std::to_string(lattice_map.source_rank()) + " -> Z^" +
                      std::to_string(lattice_map.target_rank()) + " does not connect N of ranks " +
                      std::to_string(src.lattice_rank()) + " and " +
                      std::to_string(dst.lattice_rank()));
  for (const Vector& r : src.cone().rays()) {
    Vector image = lattice_map(r);
    if (!contains(dst.cone(), image))
      throw DomainError("ray " + to_string(r) + " maps to " + to_string(image) +
                        ", outside the target cone");
  }
  return MonoidChart(dst.dual_monoid(), src.dual_monoid(), lattice_map.dual());
}

bool is_dominant(const MonoidChart& c) { return kernel(c.group_map()).rank() == 0; }

CokernelInvariants group_cokernel(const MonoidChart& c) {
  const Sublattice& qgp = c.target().group();
  std::vector<Vector> cols;
  for (const Vector& b : c.source().group().basis()) {
    auto coords = qgp.coordinates(c.map()(b));
    if (!coords) throw InvariantViolation("image of P^gp is not inside Q^gp");
    cols.push_back(std::move(*coords));
  }
  return cokernel_invariants(
      LatticeMap(cols.size(), qgp.rank(), Matrix::from_columns(qgp.rank(), cols)));
}

LogSmoothness is_log_smooth(const MonoidChart& c) {
  LogSmoothness r;
  Sublattice ker = kernel(c.group_map());
  const Matrix to_ambient = c.source().group().basis_matrix();
  for (const Vector& k : ker.basis()) r.kernel.push_back(to_ambient.apply(k));
  r.kernel = Sublattice::spanned_by(c.source().ambient_rank(), r.kernel).basis();
  r.verdict = r.kernel.empty();
  r.torsion_divisors = group_cokernel(c).torsion_divisors;
  return r;
}

LogEtaleness log_etale_report(const MonoidChart& c) {
  LogEtaleness r;
  CokernelInvariants coker = group_cokernel(c);
  r.cokernel_free_rank = coker.free_rank;
  r.torsion_divisors = coker.torsion_divisors;
  r.verdict = is_dominant(c) && coker.free_rank == 0;
  return r;
}

bool is_log_etale(const MonoidChart& c) { return log_etale_report(c).verdict; }

bool is_strict(const MonoidChart& c) {
  Sharpening p = sharpen(c.source());
  Sharpening q = sharpen(c.target());
  if (p.sharp.group().rank() != q.sharp.group().rank()) return false;

  std::vector<Vector> images;
  for (const Vector& g : c.source().sharp_generators()) images.push_back(q.projection(c.map()(g)));
  std::vector<Vector> unique = images;
  sort_unique(unique);
  if (unique.size() != images.size()) return false;
  return unique == q.sharp.sharp_generators();
}

std::size_t fibre_dimension(const MonoidChart& c) {
  if (!is_dominant(c)) throw DomainError("fibre_dimension: chart is not dominant");
  return c.target().group().rank() - image(c.group_map()).rank();
}

} // namespace logtoric
