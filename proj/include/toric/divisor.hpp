#pragma once

#include <cstddef>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

/// Torus-invariant Q-divisor: one rational coefficient per ray.
struct ToricDivisor {
  QVector coefficients;

  ToricDivisor() = default;
  explicit ToricDivisor(QVector coeffs) : coefficients(std::move(coeffs)) {}

  static ToricDivisor zero(std::size_t rays) { return ToricDivisor(QVector(rays)); }
  static ToricDivisor prime(std::size_t rays, std::size_t i) {
    QVector c(rays);
    c[i] = 1;
    return ToricDivisor(std::move(c));
  }
  /// K = -sum D_i.
  static ToricDivisor canonical(std::size_t rays) { return ToricDivisor(QVector(rays, Rational(-1))); }
  static ToricDivisor anticanonical(std::size_t rays) { return ToricDivisor(QVector(rays, Rational(1))); }
  static ToricDivisor from_integers(const std::vector<long>& c) {
    QVector q;
    for (long x : c) q.emplace_back(x);
    return ToricDivisor(std::move(q));
  }

  std::size_t size() const noexcept { return coefficients.size(); }
  const Rational& operator[](std::size_t i) const { return coefficients[i]; }
  Rational& operator[](std::size_t i) { return coefficients[i]; }

  bool is_integral() const;
  bool is_effective() const;

  ToricDivisor& operator+=(const ToricDivisor& o);
  ToricDivisor& operator-=(const ToricDivisor& o);
  ToricDivisor& operator*=(const Rational& k);

  friend ToricDivisor operator+(ToricDivisor a, const ToricDivisor& b) { return a += b; }
  friend ToricDivisor operator-(ToricDivisor a, const ToricDivisor& b) { return a -= b; }
  friend ToricDivisor operator*(const Rational& k, ToricDivisor a) { return a *= k; }
  friend ToricDivisor operator-(ToricDivisor a) { return a *= Rational(-1); }
  friend bool operator==(const ToricDivisor&, const ToricDivisor&) = default;
};

}  // namespace toric
