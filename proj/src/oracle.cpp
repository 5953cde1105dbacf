#include "logtoric/oracle.hpp"

#include "logtoric/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <string>

namespace logtoric::oracle {

namespace mp = boost::multiprecision;
using Big = mp::cpp_int;
using BigRational = mp::cpp_rational;
using BigVector = std::vector<Big>;

namespace {

Big to_big(const Integer& x) { return Big(x.get_str()); }

BigVector to_big(const Vector& v) {
  BigVector out;
  out.reserve(v.size());
  for (const Integer& x : v) out.push_back(to_big(x));
  return out;
}

Vector from_small(const std::vector<std::int64_t>& v) {
  Vector out;
  out.reserve(v.size());
  for (std::int64_t x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

Big dot_small(const BigVector& h, const std::vector<std::int64_t>& x) {
  Big s = 0;
  for (std::size_t i = 0; i < h.size(); ++i) s += h[i] * x[i];
  return s;
}

Big dot_big(const BigVector& a, const BigVector& b) {
  Big s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool lex_less_small(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Visits the box in lexicographic order.
void for_each_point(const Box& b, const std::function<void(const std::vector<std::int64_t>&)>& f) {
  if (b.empty()) return;
  std::vector<std::int64_t> x = b.lower;
  const std::size_t n = b.rank();
  while (true) {
    f(x);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < b.upper[i]) {
        ++x[i];
        for (std::size_t j = i + 1; j < n; ++j) x[j] = b.lower[j];
        break;
      }
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

std::size_t bareiss_rank(std::vector<BigVector> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  Big prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// Solves sum c_i cols[i] = v over Q when cols are linearly independent and
// v is in their span; nullopt otherwise.
std::optional<std::vector<BigRational>> solve(const std::vector<BigVector>& cols, const BigVector& v) {
  const std::size_t n = v.size(), k = cols.size();
  std::vector<std::vector<BigRational>> m(n, std::vector<BigRational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = BigRational(cols[j][i]);
    m[i][k] = BigRational(v[i]);
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = r;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt; // dependent columns
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || m[i][c] == 0) continue;
      BigRational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j <= k; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (m[i][k] != 0) return std::nullopt;
  std::vector<BigRational> out(k);
  for (std::size_t i = 0; i < r; ++i) out[pivots[i]] = m[i][k] / m[i][pivots[i]];
  return out;
}

bool in_cone_big(const std::vector<BigVector>& gens, const BigVector& v) {
  if (std::all_of(v.begin(), v.end(), [](const Big& x) { return x == 0; })) return true;
  const std::size_t m = gens.size();
  // Caratheodory: v is a nonnegative combination of independent generators.
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t)> search = [&](std::size_t next) -> bool {
    if (!pick.empty()) {
      std::vector<BigVector> cols;
      for (std::size_t i : pick) cols.push_back(gens[i]);
      if (bareiss_rank(cols) < cols.size()) return false;
      if (auto c = solve(cols, v))
        if (std::all_of(c->begin(), c->end(), [](const BigRational& x) { return x >= 0; }))
          return true;
      if (pick.size() == v.size()) return false;
    }
    for (std::size_t j = next; j < m; ++j) {
      pick.push_back(j);
      if (search(j + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return search(0);
}

bool in_lattice_big(const std::vector<BigVector>& basis, const BigVector& v) {
  if (basis.empty()) return std::all_of(v.begin(), v.end(), [](const Big& x) { return x == 0; });
  auto c = solve(basis, v);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(),
                     [](const BigRational& x) { return mp::denominator(x) == 1; });
}

std::vector<Vector> sorted_lex(std::vector<std::vector<std::int64_t>> pts) {
  std::sort(pts.begin(), pts.end(), lex_less_small);
  std::vector<Vector> out;
  for (const auto& p : pts) out.push_back(from_small(p));
  return out;
}

} // namespace

Box Box::make(std::vector<std::int64_t> lower, std::vector<std::int64_t> upper) {
  if (lower.size() != upper.size()) throw DomainError("box bounds have different lengths");
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] > upper[i]) throw DomainError("box lower bound exceeds upper bound");
  return Box{std::move(lower), std::move(upper)};
}

Box Box::cube(std::size_t rank, std::int64_t lo, std::int64_t hi) {
  return Box{std::vector<std::int64_t>(rank, lo), std::vector<std::int64_t>(rank, hi)};
}

bool Box::empty() const {
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] > upper[i]) return true;
  return false;
}

std::vector<Vector> enumerate_points(const std::vector<Vector>& normals, const Box& b) {
  std::vector<BigVector> hs;
  for (const Vector& h : normals) {
    if (h.size() != b.rank()) throw DomainError("normal and box ranks differ");
    hs.push_back(to_big(h));
  }
  std::vector<Vector> out;
  for_each_point(b, [&](const std::vector<std::int64_t>& x) {
    for (const BigVector& h : hs)
      if (dot_small(h, x) < 0) return;
    out.push_back(from_small(x));
  });
  return out;
}

std::vector<Vector> enumerate_cone_points(const RationalCone& c, const Box& b) {
  if (c.ambient_rank() != b.rank()) throw DomainError("cone and box ranks differ");
  return enumerate_points(c.facet_normals(), b);
}

std::vector<Vector> brute_hilbert_basis(const RationalCone& c, const Box& b) {
  std::vector<BigVector> normals;
  for (const Vector& h : c.facet_normals()) normals.push_back(to_big(h));
  BigVector grading(b.rank(), Big(0));
  for (const Vector& f : c.facets()) {
    BigVector fb = to_big(f);
    for (std::size_t i = 0; i < fb.size(); ++i) grading[i] += fb[i];
  }

  struct Point {
    Big degree;
    std::vector<std::int64_t> x;
    BigVector big;
  };
  std::vector<Point> pts;
  for_each_point(b, [&](const std::vector<std::int64_t>& x) {
    if (std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; })) return;
    for (const BigVector& h : normals)
      if (dot_small(h, x) < 0) return;
    BigVector big(x.begin(), x.end());
    pts.push_back({dot_small(grading, x), x, std::move(big)});
  });
  std::stable_sort(pts.begin(), pts.end(),
                   [](const Point& a, const Point& p) { return a.degree < p.degree; });

  auto in_cone = [&](const BigVector& v) {
    return std::all_of(normals.begin(), normals.end(),
                       [&](const BigVector& h) { return dot_big(h, v) >= 0; });
  };
  std::vector<const Point*> irreducible;
  for (const Point& p : pts) {
    if (p.degree <= 0) throw DomainError("brute_hilbert_basis needs a pointed cone");
    bool reducible = false;
    for (const Point* h : irreducible) {
      BigVector diff(p.big.size());
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = p.big[i] - h->big[i];
      if (in_cone(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) irreducible.push_back(&p);
  }
  std::vector<std::vector<std::int64_t>> raw;
  for (const Point* p : irreducible) raw.push_back(p->x);
  return sorted_lex(std::move(raw));
}

Box hilbert_box(std::size_t rank, const std::vector<Vector>& generators) {
  std::vector<BigVector> gens;
  for (const Vector& g : generators) gens.push_back(to_big(g));
  const std::size_t dim = bareiss_rank(gens);
  Box b = Box::cube(rank, 0, 0);
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<Big> entries;
    for (const BigVector& g : gens) entries.push_back(mp::abs(g[i]));
    std::sort(entries.begin(), entries.end(), std::greater<>());
    Big bound = 0;
    for (std::size_t j = 0; j < std::min(dim, entries.size()); ++j) bound += entries[j];
    b.lower[i] = -static_cast<std::int64_t>(bound);
    b.upper[i] = static_cast<std::int64_t>(bound);
  }
  return b;
}

bool brute_ideal_membership(const std::vector<Vector>& generators, const Vector& v,
                            const std::vector<Vector>& monoid_points) {
  const BigVector vb = to_big(v);
  std::vector<BigVector> pts;
  for (const Vector& p : monoid_points) pts.push_back(to_big(p));
  for (const Vector& g : generators) {
    BigVector d = to_big(g);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = vb[i] - d[i];
    if (std::find(pts.begin(), pts.end(), d) != pts.end()) return true;
  }
  return false;
}

bool in_cone_generated(const std::vector<Vector>& generators, const Vector& v) {
  std::vector<BigVector> gens;
  for (const Vector& g : generators) gens.push_back(to_big(g));
  return in_cone_big(gens, to_big(v));
}

bool in_lattice(const std::vector<Vector>& basis, const Vector& v) {
  std::vector<BigVector> b;
  for (const Vector& g : basis) b.push_back(to_big(g));
  return in_lattice_big(b, to_big(v));
}

std::vector<Vector> brute_saturation(const std::vector<Vector>& generators,
                                     const std::vector<Vector>& group_basis, const Box& b) {
  std::vector<BigVector> gens, basis;
  for (const Vector& g : generators) gens.push_back(to_big(g));
  for (const Vector& g : group_basis) basis.push_back(to_big(g));

  std::vector<std::vector<std::int64_t>> pts;
  for_each_point(b, [&](const std::vector<std::int64_t>& x) {
    if (std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; })) return;
    BigVector xb(x.begin(), x.end());
    if (in_lattice_big(basis, xb) && in_cone_big(gens, xb)) pts.push_back(x);
  });

  std::vector<std::vector<std::int64_t>> irreducible;
  for (const auto& x : pts) {
    bool reducible = false;
    for (const auto& h : pts) {
      if (h == x) continue;
      BigVector d(x.size());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = Big(x[i]) - Big(h[i]);
      if (in_cone_big(gens, d) && in_lattice_big(basis, d)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) irreducible.push_back(x);
  }
  return sorted_lex(std::move(irreducible));
}

std::size_t rank(const std::vector<Vector>& rows) {
  std::vector<BigVector> a;
  for (const Vector& r : rows) a.push_back(to_big(r));
  return bareiss_rank(std::move(a));
}

bool injective_on_span(const Matrix& m, const std::vector<Vector>& vectors) {
  std::vector<BigVector> src, img;
  for (const Vector& v : vectors) {
    if (v.size() != m.cols()) throw DomainError("vector length does not match the matrix");
    BigVector vb = to_big(v);
    BigVector w(m.rows(), Big(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) w[i] += to_big(m(i, j)) * vb[j];
    src.push_back(std::move(vb));
    img.push_back(std::move(w));
  }
  return bareiss_rank(std::move(src)) == bareiss_rank(std::move(img));
}

std::vector<Tuple> brute_minimal_elements(std::vector<Tuple> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  auto le = [](const Tuple& a, const Tuple& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  std::vector<Tuple> out;
  for (const Tuple& t : s) {
    bool minimal = true;
    for (const Tuple& u : s)
      if (u != t && le(u, t)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(t);
  }
  return out;
}

} // namespace logtoric::oracle
