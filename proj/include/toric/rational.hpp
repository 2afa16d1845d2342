#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

using ZVector = std::vector<Integer>;
using QVector = std::vector<Rational>;

/// Renders "p" for integers and "p/q" otherwise (lowest terms, q > 0).
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p" or "p/q". Returns false on malformed input or when the
/// fraction is not already in lowest terms with a positive denominator.
bool parse_rational(std::string_view text, Rational& out);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
inline bool is_integral(const Rational& q) { return q.get_den() == 1; }
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

QVector to_rational(const ZVector& v);
Rational dot(const QVector& a, const QVector& b);
Integer dot(const ZVector& a, const ZVector& b);
Rational dot(const QVector& a, const ZVector& b);

/// Positive multiple of v that is a primitive integer vector. v must be nonzero.
ZVector primitive_integer(const QVector& v);
ZVector primitive_integer(const ZVector& v);
bool is_primitive(const ZVector& v);
bool is_zero(const QVector& v);
bool is_zero(const ZVector& v);

/// Least common multiple of the denominators.
Integer common_denominator(const QVector& v);

}  // namespace toric
