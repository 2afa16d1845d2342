#include "toric/divisor_theory.hpp"

#include <algorithm>
#include <map>

#include "toric/cone.hpp"
#include "toric/error.hpp"
#include "toric/linalg.hpp"

namespace toric {

namespace {

void check_length(const Fan& fan, const ToricDivisor& d) {
  if (d.size() != fan.num_rays())
    throw Error(ErrorKind::DimensionMismatch, "divisor has " + std::to_string(d.size()) + " coefficients, fan has " +
                                                  std::to_string(fan.num_rays()) + " rays");
}

IntMatrix to_integer(const QMatrix& q) {
  IntMatrix z(q.rows(), q.cols());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) {
      if (!is_integral(q(i, j))) throw std::logic_error("unimodular inverse is not integral");
      z(i, j) = q(i, j).get_num();
    }
  return z;
}

Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

}  // namespace

ClassGroup::ClassGroup(const Fan& fan) {
  const std::size_t r = fan.num_rays();
  const std::size_t n = fan.dim();
  SmithForm snf = smith_normal_form(fan.ray_matrix());
  ZVector inv = snf.invariants();
  for (std::size_t i = 0; i < n; ++i)
    if (inv[i] == 0) throw Error(ErrorKind::RaysDoNotSpan, "rays do not span the lattice vector space");

  const std::size_t rho = r - n;
  IntMatrix Q(rho, r);
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < r; ++j) Q(i, j) = snf.U(n + i, j);
  HermiteForm hnf = hermite_normal_form(Q);
  free_projection_ = hnf.H;

  IntMatrix Uinv = to_integer(*inverse(to_rational(snf.U)));
  IntMatrix Ginv = to_integer(*inverse(to_rational(hnf.G)));
  IntMatrix tail(r, rho);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < rho; ++j) tail(i, j) = Uinv(i, n + j);
  free_lift_ = rho ? tail * Ginv : IntMatrix(r, 0);

  std::vector<std::size_t> tors;
  for (std::size_t i = 0; i < n; ++i)
    if (inv[i] > 1) tors.push_back(i);
  torsion_projection_ = IntMatrix(tors.size(), r);
  torsion_lift_ = IntMatrix(r, tors.size());
  for (std::size_t k = 0; k < tors.size(); ++k) {
    torsion_orders_.push_back(inv[tors[k]]);
    for (std::size_t j = 0; j < r; ++j) {
      Integer x = snf.U(tors[k], j) % inv[tors[k]];
      if (x < 0) x += inv[tors[k]];
      torsion_projection_(k, j) = x;
      torsion_lift_(j, k) = Uinv(j, tors[k]);
    }
  }
}

QVector ClassGroup::free_coordinates(const ToricDivisor& d) const {
  return to_rational(free_projection_) * d.coefficients;
}

ZVector ClassGroup::torsion_coordinates(const ToricDivisor& d) const {
  if (!d.is_integral()) throw Error(ErrorKind::NonIntegralDivisor, "torsion part needs an integral divisor");
  ZVector t(torsion_orders_.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    Integer x = 0;
    for (std::size_t j = 0; j < num_rays(); ++j) x += torsion_projection_(k, j) * d[j].get_num();
    x %= torsion_orders_[k];
    if (x < 0) x += torsion_orders_[k];
    t[k] = x;
  }
  return t;
}

DivisorClass ClassGroup::class_of(const ToricDivisor& d) const {
  DivisorClass c;
  c.free = free_coordinates(d);
  if (d.is_integral()) c.torsion = torsion_coordinates(d);
  return c;
}

ToricDivisor ClassGroup::representative(const QVector& free) const {
  return ToricDivisor(to_rational(free_lift_) * free);
}

ToricDivisor ClassGroup::representative(const DivisorClass& c) const {
  ToricDivisor d = representative(c.free);
  if (!c.torsion.empty()) {
    QVector t = to_rational(torsion_lift_) * to_rational(c.torsion);
    for (std::size_t j = 0; j < num_rays(); ++j) d[j] += t[j];
  }
  return d;
}

std::vector<ZVector> ClassGroup::torsion_elements() const {
  std::vector<ZVector> out;
  ZVector t(torsion_orders_.size(), 0);
  for (;;) {
    out.push_back(t);
    std::size_t k = 0;
    while (k < t.size()) {
      if (t[k] + 1 < torsion_orders_[k]) {
        ++t[k];
        break;
      }
      t[k] = 0;
      ++k;
    }
    if (k == t.size()) return out;
  }
}

ClassGroup class_group(const Fan& fan) { return ClassGroup(fan); }

std::vector<QVector> cartier_data(const Fan& fan, const ToricDivisor& d) {
  check_length(fan, d);
  const std::size_t n = fan.dim();
  std::vector<QVector> out;
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
    const auto& cone = fan.max_cones()[c];
    const QMatrix& dual = fan.dual_basis(c);
    QVector u(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) u[k] -= d[cone[j]] * dual(j, k);
    out.push_back(std::move(u));
  }
  return out;
}

Integer cartier_index(const Fan& fan, const ToricDivisor& d) {
  Integer k = 1;
  for (const auto& u : cartier_data(fan, d)) k = lcm(k, common_denominator(u));
  return k;
}

RationalPolytope section_polytope(const Fan& fan, const ToricDivisor& d) {
  check_length(fan, d);
  std::vector<QVector> normals;
  for (const auto& v : fan.rays()) normals.push_back(to_rational(v));
  return RationalPolytope(fan.dim(), std::move(normals), d.coefficients);
}

Integer h0(const Fan& fan, const ToricDivisor& d) {
  check_length(fan, d);
  if (!d.is_integral()) throw Error(ErrorKind::NonIntegralDivisor, "h0 needs an integral divisor");
  return Integer(static_cast<unsigned long>(count_lattice_points(section_polytope(fan, d))));
}

Rational curve_intersection(const Fan& fan, const ToricDivisor& d, const Wall& w) {
  check_length(fan, d);
  // Shift D by a principal divisor to vanish on cones[0]; what remains
  // meeting C_w is a multiple of D_{opposite[1]}, whose degree on C_w is
  // mult(wall) / mult(cones[1]).
  const QVector u = cartier_data(fan, d)[w.cones[0]];
  const std::size_t far = w.opposite[1];
  Rational coeff = d[far] + dot(u, fan.ray(far));
  Integer mult_wall = cone_multiplicity(fan, w.shared);
  Integer mult_cone = cone_multiplicity(fan, fan.max_cones()[w.cones[1]]);
  return coeff * make_rational(mult_wall, mult_cone);
}

QVector curve_class(const Fan& fan, const ClassGroup& cl, const Wall& w) {
  QVector c(cl.rank());
  for (std::size_t j = 0; j < cl.rank(); ++j) {
    QVector e(cl.rank());
    e[j] = 1;
    c[j] = curve_intersection(fan, cl.representative(e), w);
  }
  return c;
}

bool is_nef(const Fan& fan, const ToricDivisor& d) {
  return std::all_of(fan.walls().begin(), fan.walls().end(),
                     [&](const Wall& w) { return curve_intersection(fan, d, w) >= 0; });
}

bool is_ample(const Fan& fan, const ToricDivisor& d) {
  return std::all_of(fan.walls().begin(), fan.walls().end(),
                     [&](const Wall& w) { return curve_intersection(fan, d, w) > 0; });
}

ToricDivisor ample_divisor(const Fan& fan) {
  ClassGroup cl(fan);
  std::vector<QVector> curves;
  for (const auto& w : fan.walls()) curves.push_back(curve_class(fan, cl, w));
  RationalCone nef = RationalCone::from_inequalities(cl.rank(), curves);
  if (!nef.full_dimensional() || !nef.pointed())
    throw Error(ErrorKind::NotProjective, "nef cone is not full-dimensional");
  QVector p = nef.interior_point();
  if (cl.rank() == 0 || is_zero(p)) throw Error(ErrorKind::NotProjective, "no ample class");
  ToricDivisor a = cl.representative(to_rational(primitive_integer(p)));
  if (!is_ample(fan, a)) throw std::logic_error("interior nef class failed the ampleness check");
  return a;
}

Rational volume(const Fan& fan, const ToricDivisor& d) {
  return polytope_volume(section_polytope(fan, d)) * Rational(factorial(fan.dim()));
}

namespace {

// (A + tD)^n is a polynomial in t of degree n that equals Vol(A + tD) while
// A + tD stays nef; its t^n coefficient is D^n.
Rational top_power(const Fan& fan, const ToricDivisor& d, const ToricDivisor& ample) {
  const std::size_t n = fan.dim();
  std::optional<Rational> t_max;
  for (const auto& w : fan.walls()) {
    Rational dc = curve_intersection(fan, d, w);
    if (dc >= 0) continue;
    Rational limit = curve_intersection(fan, ample, w) / (-dc);
    if (!t_max || limit < *t_max) t_max = limit;
  }
  Rational span = t_max ? *t_max : Rational(1);
  std::vector<Rational> ts, values;
  for (std::size_t j = 0; j <= n; ++j) {
    Rational t = span * make_rational(static_cast<long>(j), static_cast<long>(n));
    ts.push_back(t);
    values.push_back(volume(fan, ample + t * d));
  }
  Rational lead = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    Rational denom = 1;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != j) denom *= ts[j] - ts[i];
    lead += values[j] / denom;
  }
  return lead;
}

}  // namespace

Rational top_self_intersection(const Fan& fan, const ToricDivisor& d) {
  check_length(fan, d);
  return top_power(fan, d, ample_divisor(fan));
}

Rational intersection_number(const Fan& fan, const std::vector<ToricDivisor>& divisors) {
  const std::size_t n = fan.dim();
  if (divisors.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "intersection needs exactly dim divisors");
  for (const auto& d : divisors) check_length(fan, d);
  ToricDivisor ample = ample_divisor(fan);
  // Polarization: D_1...D_n = 1/n! sum_{S != {}} (-1)^{n-|S|} (sum_S D_i)^n.
  std::map<QVector, Rational> cache;
  Rational total = 0;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    ToricDivisor sum = ToricDivisor::zero(fan.num_rays());
    std::size_t size = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1UL << i)) {
        sum += divisors[i];
        ++size;
      }
    auto it = cache.find(sum.coefficients);
    if (it == cache.end()) it = cache.emplace(sum.coefficients, top_power(fan, sum, ample)).first;
    total += ((n - size) % 2 == 0) ? it->second : -it->second;
  }
  return total / Rational(factorial(n));
}

Rational degree(const Fan& fan, const ToricDivisor& d, const ToricDivisor& h) {
  check_length(fan, d);
  check_length(fan, h);
  if (!is_nef(fan, h)) throw Error(ErrorKind::HNotNef, "degree is taken against a nef class");
  std::vector<ToricDivisor> args(fan.dim(), h);
  args[0] = d;
  return intersection_number(fan, args);
}

}  // namespace toric
