#include "toric/singularities.hpp"

#include <algorithm>
#include <set>

#include "toric/error.hpp"
#include "toric/linalg.hpp"
#include "toric/polytope.hpp"

namespace toric {

namespace {

void check_length(const Fan& fan, const ToricDivisor& d) {
  if (d.size() != fan.num_rays())
    throw Error(ErrorKind::DimensionMismatch, "divisor has " + std::to_string(d.size()) + " coefficients, fan has " +
                                                  std::to_string(fan.num_rays()) + " rays");
}

bool all_below_one(const ToricDivisor& d) {
  return std::all_of(d.coefficients.begin(), d.coefficients.end(), [](const Rational& q) { return q < 1; });
}

}  // namespace

DiscrepancyFunction::DiscrepancyFunction(const Fan& fan, const ToricDivisor& boundary) : fan_(&fan) {
  check_length(fan, boundary);
  const std::size_t n = fan.dim();
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
    // m = sum_j (1 - d_j) * (row j of the dual basis)
    const auto& cone = fan.max_cones()[c];
    const QMatrix& dual = fan.dual_basis(c);
    QVector m(n);
    for (std::size_t j = 0; j < n; ++j) {
      Rational a = 1 - boundary[cone[j]];
      for (std::size_t k = 0; k < n; ++k) m[k] += a * dual(j, k);
    }
    covectors_.push_back(std::move(m));
  }
}

Rational DiscrepancyFunction::operator()(const ZVector& v) const {
  std::size_t c = fan_->containing_cone(v);
  return dot(covectors_[c], v);
}

Rational log_discrepancy(const Fan& fan, const ToricDivisor& boundary, const ZVector& v) {
  if (v.size() != fan.dim()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from fan dimension");
  if (!is_primitive(v)) throw Error(ErrorKind::NonPrimitive, "valuation vector must be primitive and nonzero");
  return DiscrepancyFunction(fan, boundary)(v);
}

std::vector<ZVector> exceptional_points(const Fan& fan, const ToricDivisor& boundary, const Rational& bound) {
  check_length(fan, boundary);
  if (!all_below_one(boundary))
    throw Error(ErrorKind::UnboundedPolytope, "scan region is unbounded when some coefficient is >= 1");
  DiscrepancyFunction A(fan, boundary);
  const std::size_t n = fan.dim();
  std::set<ZVector> found;
  std::set<ZVector> rays(fan.rays().begin(), fan.rays().end());
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
    std::vector<QVector> normals;
    QVector offsets;
    const QMatrix& dual = fan.dual_basis(c);
    for (std::size_t j = 0; j < n; ++j) {
      normals.push_back(dual.row(j));
      offsets.push_back(0);
    }
    QVector neg = A.covector(c);
    for (auto& x : neg) x = -x;
    normals.push_back(std::move(neg));
    offsets.push_back(bound);
    for (auto& p : lattice_points(RationalPolytope(n, std::move(normals), std::move(offsets)))) {
      if (is_zero(p) || !is_primitive(p) || rays.count(p)) continue;
      found.insert(std::move(p));
    }
  }
  return {found.begin(), found.end()};
}

PairClassification classify_pair(const Fan& fan, const ToricDivisor& boundary) {
  check_length(fan, boundary);
  PairClassification out;
  const auto& d = boundary.coefficients;
  out.floor_condition = std::all_of(d.begin(), d.end(), [](const Rational& q) { return q >= 0 && q <= 1; });
  out.log_canonical = std::all_of(d.begin(), d.end(), [](const Rational& q) { return q <= 1; });
  out.klt = all_below_one(boundary);

  if (!out.klt) {
    out.boundary_coefficient_at_least_one = true;
    // A is linear and >= 0 on every cone when all d_i <= 1, with A(v_i) = 0
    // for some ray; otherwise it is unbounded below on the lattice.
    if (out.log_canonical) out.mld = Rational(0);
    return out;
  }

  Rational min_ray = 1 - d[0];
  for (const auto& q : d) min_ray = std::min(min_ray, Rational(1 - q));
  Rational bound = std::max(Rational(static_cast<long>(fan.dim())), min_ray);
  DiscrepancyFunction A(fan, boundary);
  for (const auto& v : exceptional_points(fan, boundary, bound)) {
    Rational a = A(v);
    if (!out.min_exceptional || a < *out.min_exceptional) out.min_exceptional = a;
  }
  // klt by linearity: every A(v_i) > 0, so A > 0 away from the origin.
  if (out.min_exceptional && *out.min_exceptional <= 0)
    throw std::logic_error("klt pair with a nonpositive exceptional log discrepancy");

  out.mld = out.min_exceptional ? std::min(min_ray, *out.min_exceptional) : min_ray;
  const bool canonical_values = !out.min_exceptional || *out.min_exceptional >= 1;
  const bool terminal_values = !out.min_exceptional || *out.min_exceptional > 1;
  out.canonical = out.floor_condition && canonical_values;
  out.terminal = out.floor_condition && terminal_values;
  return out;
}

bool is_one_canonical(const Fan& fan, const ToricDivisor& boundary) {
  check_length(fan, boundary);
  if (!all_below_one(boundary)) return false;
  DiscrepancyFunction A(fan, boundary);
  for (const auto& v : exceptional_points(fan, boundary, Rational(2)))
    if (A(v) < 2) return false;
  return true;
}

Integer gorenstein_index(const Fan& fan, const ToricDivisor& boundary) {
  DiscrepancyFunction A(fan, boundary);
  Integer k = 1;
  for (const auto& m : A.covectors()) k = lcm(k, common_denominator(m));
  return k;
}

bool simplex_terminal(const Fan& fan, std::size_t cone) {
  const std::size_t n = fan.dim();
  const auto& idx = fan.max_cones()[cone];
  IntMatrix B(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) B(i, j) = fan.ray(idx[j])[i];
  // Z^n / B Z^n is generated by U^{-1} e_i with orders s_i (U B V = S).
  SmithForm snf = smith_normal_form(B);
  QMatrix Uinv = *inverse(to_rational(snf.U));
  const QMatrix& dual = fan.dual_basis(cone);
  ZVector orders = snf.invariants();
  ZVector k(n, 0);
  for (;;) {
    std::size_t j = 0;
    while (j < n) {
      if (k[j] + 1 < orders[j]) {
        ++k[j];
        break;
      }
      k[j] = 0;
      ++j;
    }
    if (j == n) return true;
    QVector x = Uinv * to_rational(k);
    QVector lambda = dual * x;
    Rational height = 0;
    for (auto& l : lambda) height += l - Rational(floor(l));
    if (height <= 1) return false;
  }
}

}  // namespace toric
