#include "logtoric/cone.hpp"

#include "logtoric/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace logtoric {

namespace {

void check_lengths(std::size_t n, std::span<const Vector> vs, const char* what) {
  for (const Vector& v : vs)
    if (v.size() != n)
      throw DomainError(std::string(what) + " " + to_string(v) + " does not lie in Z^" +
                        std::to_string(n));
}

// Zero sets of the rays against the constraints processed so far.
std::vector<bool> zero_set(const Vector& ray, std::span<const Vector> constraints) {
  std::vector<bool> z(constraints.size());
  for (std::size_t i = 0; i < constraints.size(); ++i) z[i] = sgn(dot(constraints[i], ray)) == 0;
  return z;
}

bool is_superset(const std::vector<bool>& big, const std::vector<bool>& small) {
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small[i] && !big[i]) return false;
  return true;
}

// Solves G c = rhs for a symmetric positive definite rational G.
std::vector<Rational> solve_spd(std::vector<std::vector<Rational>> g, std::vector<Rational> rhs) {
  const std::size_t k = rhs.size();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t p = col;
    while (p < k && sgn(g[p][col]) == 0) ++p;
    if (p == k) throw InvariantViolation("singular Gram matrix");
    std::swap(g[p], g[col]);
    std::swap(rhs[p], rhs[col]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || sgn(g[r][col]) == 0) continue;
      Rational f = g[r][col] / g[col][col];
      for (std::size_t c = col; c < k; ++c) g[r][c] -= f * g[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < k; ++i) rhs[i] /= g[i][i];
  return rhs;
}

// Primitive direction of v minus its orthogonal projection onto span(basis).
Vector orthogonal_reduce(const Vector& v, const std::vector<Vector>& basis) {
  if (basis.empty()) return primitive(v);
  const std::size_t k = basis.size();
  std::vector<std::vector<Rational>> gram(k, std::vector<Rational>(k));
  std::vector<Rational> rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  std::vector<Rational> c = solve_spd(std::move(gram), std::move(rhs));
  std::vector<Rational> r(v.begin(), v.end());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= c[i] * basis[i][j];
  return primitive_from_rational(r);
}

std::vector<Vector> canonical_directions(std::span<const Vector> vs, const Sublattice& modulo) {
  std::vector<Vector> out;
  for (const Vector& v : vs) {
    Vector r = orthogonal_reduce(v, modulo.basis());
    if (!logtoric::is_zero(r)) out.push_back(std::move(r));
  }
  sort_unique(out);
  return out;
}

Sublattice saturated_span(std::size_t n, std::span<const Vector> vs) {
  return saturate_sublattice(Sublattice::spanned_by(n, vs)).saturation;
}

} // namespace

DoubleDescription double_description(std::size_t n, std::span<const Vector> constraints) {
  check_lengths(n, constraints, "constraint");
  DoubleDescription dd;
  for (std::size_t i = 0; i < n; ++i) dd.lineality.push_back(unit_vector(n, i));

  std::vector<Vector> processed;
  for (const Vector& h : constraints) {
    if (logtoric::is_zero(h)) continue;

    auto lin = std::find_if(dd.lineality.begin(), dd.lineality.end(),
                            [&](const Vector& l) { return sgn(dot(h, l)) != 0; });
    if (lin != dd.lineality.end()) {
      // The half-space cuts the lineality space: one line becomes a ray
      // and everything else is moved into h-perp along it.
      Vector l = *lin;
      dd.lineality.erase(lin);
      Integer hl = dot(h, l);
      if (hl < 0) {
        l = negate(l);
        hl = -hl;
      }
      auto shear = [&](Vector& v) {
        Integer hv = dot(h, v);
        if (sgn(hv) == 0) return;
        for (std::size_t j = 0; j < n; ++j) v[j] = hl * v[j] - hv * l[j];
        v = primitive(v);
      };
      for (Vector& v : dd.lineality) shear(v);
      for (Vector& r : dd.rays) shear(r);
      dd.rays.push_back(primitive(l));
      processed.push_back(h);
      continue;
    }

    std::vector<Vector> pos, zero, neg;
    for (Vector& r : dd.rays) {
      int s = sgn(dot(h, r));
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(std::move(r));
    }
    std::vector<Vector> next;
    if (!neg.empty()) {
      std::vector<const Vector*> all;
      for (const Vector& r : pos) all.push_back(&r);
      for (const Vector& r : zero) all.push_back(&r);
      for (const Vector& r : neg) all.push_back(&r);
      std::vector<std::vector<bool>> zs;
      for (const Vector* r : all) zs.push_back(zero_set(*r, processed));
      const std::size_t npos = pos.size(), nzero = zero.size();
      for (std::size_t i = 0; i < npos; ++i) {
        for (std::size_t j = 0; j < neg.size(); ++j) {
          const std::size_t jj = npos + nzero + j;
          std::vector<bool> common(processed.size());
          for (std::size_t k = 0; k < processed.size(); ++k) common[k] = zs[i][k] && zs[jj][k];
          bool adjacent = true;
          for (std::size_t k = 0; k < all.size() && adjacent; ++k)
            if (k != i && k != jj && is_superset(zs[k], common)) adjacent = false;
          if (!adjacent) continue;
          Integer hp = dot(h, pos[i]), hn = dot(h, neg[j]);
          Vector c(n);
          for (std::size_t k = 0; k < n; ++k) c[k] = hp * neg[j][k] - hn * pos[i][k];
          next.push_back(primitive(c));
        }
      }
    }
    for (Vector& r : pos) next.push_back(std::move(r));
    for (Vector& r : zero) next.push_back(std::move(r));
    sort_unique(next);
    dd.rays = std::move(next);
    processed.push_back(h);
  }
  return dd;
}

std::vector<Vector> RationalCone::generators() const {
  std::vector<Vector> g = rays_;
  for (const Vector& l : lineality_.basis()) {
    g.push_back(l);
    g.push_back(negate(l));
  }
  return g;
}

std::vector<Vector> RationalCone::facet_normals() const {
  std::vector<Vector> f = facets_;
  for (const Vector& e : equations_.basis()) {
    f.push_back(e);
    f.push_back(negate(e));
  }
  return f;
}

Vector RationalCone::grading() const {
  Vector g = zero_vector(ambient_rank_);
  for (const Vector& f : facets_) g = add(g, f);
  return g;
}

RationalCone cone_from_generators(std::size_t ambient_rank, std::span<const Vector> vectors,
                                  Convexity convexity) {
  check_lengths(ambient_rank, vectors, "generator");
  // Dualize twice: the first pass finds the facets, the second recovers
  // irredundant generators and the lineality space from them.
  DoubleDescription dual = double_description(ambient_rank, vectors);
  std::vector<Vector> inequalities = dual.rays;
  for (const Vector& e : dual.lineality) {
    inequalities.push_back(e);
    inequalities.push_back(negate(e));
  }
  DoubleDescription primal = double_description(ambient_rank, inequalities);

  RationalCone c;
  c.ambient_rank_ = ambient_rank;
  c.lineality_ = saturated_span(ambient_rank, primal.lineality);
  c.equations_ = saturated_span(ambient_rank, dual.lineality);
  c.rays_ = canonical_directions(primal.rays, c.lineality_);
  c.facets_ = canonical_directions(dual.rays, c.equations_);
  if (convexity == Convexity::Strong && !c.is_strongly_convex())
    throw DomainError("cone contains the line spanned by " + to_string(c.lineality_.basis().front()) +
                      "; a strongly convex cone was required");
  return c;
}

RationalCone cone_from_inequalities(std::size_t ambient_rank, std::span<const Vector> normals) {
  return dual_cone(cone_from_generators(ambient_rank, normals, Convexity::General));
}

RationalCone dual_cone(const RationalCone& c) {
  RationalCone d;
  d.ambient_rank_ = c.ambient_rank_;
  d.rays_ = c.facets_;
  d.lineality_ = c.equations_;
  d.facets_ = c.rays_;
  d.equations_ = c.lineality_;
  return d;
}

bool contains(const RationalCone& c, std::span<const Integer> v) {
  if (v.size() != c.ambient_rank())
    throw DomainError("vector " + to_string(v) + " is not in Z^" + std::to_string(c.ambient_rank()));
  for (const Vector& f : c.facets())
    if (sgn(dot(f, v)) < 0) return false;
  for (const Vector& e : c.equations().basis())
    if (sgn(dot(e, v)) != 0) return false;
  return true;
}

std::vector<Face> faces(const RationalCone& c) {
  if (!c.is_strongly_convex()) throw DomainError("faces: cone is not strongly convex");
  const auto& rays = c.rays();
  const auto& facets = c.facets();

  using RaySet = std::vector<std::size_t>;
  std::vector<RaySet> tight(facets.size());
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (sgn(dot(facets[f], rays[r])) == 0) tight[f].push_back(r);

  RaySet all(rays.size());
  for (std::size_t r = 0; r < rays.size(); ++r) all[r] = r;
  std::set<RaySet> found{all};
  std::vector<RaySet> queue{all};
  while (!queue.empty()) {
    RaySet cur = std::move(queue.back());
    queue.pop_back();
    for (const RaySet& t : tight) {
      RaySet meet;
      std::set_intersection(cur.begin(), cur.end(), t.begin(), t.end(), std::back_inserter(meet));
      if (found.insert(meet).second) queue.push_back(meet);
    }
  }

  std::vector<Face> out;
  for (const RaySet& s : found) {
    Face face;
    face.ray_indices = s;
    std::vector<Vector> gens;
    for (std::size_t r : s) gens.push_back(rays[r]);
    face.cone = cone_from_generators(c.ambient_rank(), gens, Convexity::Strong);
    face.defining_normal = zero_vector(c.ambient_rank());
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (std::includes(tight[f].begin(), tight[f].end(), s.begin(), s.end()))
        face.defining_normal = add(face.defining_normal, facets[f]);
    out.push_back(std::move(face));
  }
  std::stable_sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    return a.ray_indices < b.ray_indices;
  });
  return out;
}

bool is_face_of(const Face& f, const RationalCone& c) {
  if (f.cone.ambient_rank() != c.ambient_rank() || f.defining_normal.size() != c.ambient_rank())
    return false;
  if (!c.is_strongly_convex()) return false;
  std::vector<Vector> tight_rays;
  for (const Vector& r : c.rays()) {
    int s = sgn(dot(f.defining_normal, r));
    if (s < 0) return false;
    if (s == 0) tight_rays.push_back(r);
  }
  sort_unique(tight_rays);
  return tight_rays == f.cone.rays();
}

Face face_spanned_by(const RationalCone& c, std::span<const Vector> rays) {
  const std::vector<Vector> want = cone_from_generators(c.ambient_rank(), rays).rays();
  for (Face& f : faces(c))
    if (f.cone.rays() == want) return f;
  std::string listed;
  for (const Vector& r : want) listed += to_string(r);
  throw DomainError("no face of the cone is spanned by {" + listed + "}");
}

} // namespace logtoric
