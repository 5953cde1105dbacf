#include "logtoric/integer.hpp"

#include "logtoric/error.hpp"

#include <algorithm>
#include <sstream>

namespace logtoric {

Vector make_vector(std::initializer_list<long> values) {
  Vector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

Vector zero_vector(std::size_t n) { return Vector(n, Integer(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size())
    throw DomainError("dot: length mismatch " + std::to_string(a.size()) +
                      " vs " + std::to_string(b.size()));
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Integer& x) { return sgn(x) == 0; });
}

Vector add(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw DomainError("add: length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector subtract(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw DomainError("subtract: length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector negate(std::span<const Integer> v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

Vector scale(const Integer& c, std::span<const Integer> v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const Integer& x : v) g = gcd(g, x);
  return g;
}

Vector primitive(std::span<const Integer> v) {
  Integer g = content(v);
  Vector r(v.begin(), v.end());
  if (g > 1)
    for (Integer& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return r;
}

Vector primitive_from_rational(std::span<const Rational> v) {
  Integer den = 1;
  for (const Rational& q : v) den = lcm(den, q.get_den());
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * den;
    r[i] = scaled.get_num();
  }
  return primitive(r);
}

Integer l1_norm(std::span<const Integer> v) {
  Integer s = 0;
  for (const Integer& x : v) s += abs(x);
  return s;
}

bool graded_lex_less(const Vector& a, const Vector& b) {
  Integer na = l1_norm(a), nb = l1_norm(b);
  if (na != nb) return na < nb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_unique(std::vector<Vector>& vs) {
  std::sort(vs.begin(), vs.end(), graded_lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

} // namespace logtoric
