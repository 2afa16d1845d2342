#include "toric/rational.hpp"

#include <cassert>
#include <cctype>

namespace toric {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

bool parse_rational(std::string_view text, Rational& out) {
  auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) return false;
  } else {
    auto den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text[0] == '-' || den_text[0] == '+') return false;
    if (!parse_integer(text.substr(0, slash), num) || !parse_integer(den_text, den)) return false;
    if (den <= 0) return false;
    if (gcd(num, den) != 1) return false;
    if (den == 1) return false;
  }
  out = Rational(num, den);
  out.canonicalize();
  return true;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

QVector to_rational(const ZVector& v) {
  QVector q;
  q.reserve(v.size());
  for (const auto& z : v) q.emplace_back(z);
  return q;
}

Rational dot(const QVector& a, const QVector& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(const ZVector& a, const ZVector& b) {
  assert(a.size() == b.size());
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const QVector& a, const ZVector& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer common_denominator(const QVector& v) {
  Integer d = 1;
  for (const auto& q : v) d = lcm(d, q.get_den());
  return d;
}

ZVector primitive_integer(const QVector& v) {
  Integer den = common_denominator(v);
  ZVector z(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * den;
    z[i] = scaled.get_num();
    g = gcd(g, z[i]);
  }
  assert(g != 0);
  for (auto& x : z) x /= g;
  return z;
}

ZVector primitive_integer(const ZVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  assert(g != 0);
  ZVector z = v;
  for (auto& x : z) x /= g;
  return z;
}

bool is_primitive(const ZVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g == 1;
}

bool is_zero(const QVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const ZVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace toric
