#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace logtoric {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer vector in an ambient lattice Z^n.
using Vector = std::vector<Integer>;

Vector make_vector(std::initializer_list<long> values);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
bool is_zero(std::span<const Integer> v);

Vector add(std::span<const Integer> a, std::span<const Integer> b);
Vector subtract(std::span<const Integer> a, std::span<const Integer> b);
Vector negate(std::span<const Integer> v);
Vector scale(const Integer& c, std::span<const Integer> v);

/// gcd of all entries; 0 for the zero vector.
Integer content(std::span<const Integer> v);

/// Divides by the content. The zero vector is returned unchanged.
Vector primitive(std::span<const Integer> v);

/// Clears denominators of a rational vector and returns the primitive
/// integer vector pointing in the same direction.
Vector primitive_from_rational(std::span<const Rational> v);

Integer l1_norm(std::span<const Integer> v);

/// Graded-lexicographic order: L1 norm first, then lexicographic.
bool graded_lex_less(const Vector& a, const Vector& b);

/// Sorts with graded_lex_less and removes duplicates.
void sort_unique(std::vector<Vector>& vs);

std::string to_string(std::span<const Integer> v);

} // namespace logtoric
