#pragma once

#include <optional>
#include <vector>

#include "toric/divisor.hpp"
#include "toric/fan.hpp"

namespace toric {

/// Piecewise-linear log discrepancy function A of a toric pair (X, D):
/// linear on each maximal cone, A(v_i) = 1 - d_i on the rays.
class DiscrepancyFunction {
 public:
  DiscrepancyFunction(const Fan& fan, const ToricDivisor& boundary);

  /// m_sigma with <m_sigma, v_i> = 1 - d_i for the rays of cone c.
  const QVector& covector(std::size_t cone) const { return covectors_[cone]; }
  const std::vector<QVector>& covectors() const noexcept { return covectors_; }

  /// Value at any lattice vector of the support.
  Rational operator()(const ZVector& v) const;

 private:
  const Fan* fan_;
  std::vector<QVector> covectors_;
};

/// a_E(X, D) for the toric valuation of the primitive vector v.
Rational log_discrepancy(const Fan& fan, const ToricDivisor& boundary, const ZVector& v);

struct PairClassification {
  bool klt = false;
  bool log_canonical = false;
  bool canonical = false;
  bool terminal = false;
  /// 0 <= d_i <= 1 for every i, i.e. floor((1 - eps) D) = 0 for small eps.
  bool floor_condition = false;
  /// Some coefficient is >= 1: canonical/terminal decided by the floor
  /// condition without scanning.
  bool boundary_coefficient_at_least_one = false;
  /// nullopt encodes -infinity.
  std::optional<Rational> mld;
  /// Minimum of A over exceptional (non-ray) primitive vectors found in the
  /// scan region; nullopt when the region holds none.
  std::optional<Rational> min_exceptional;
};

PairClassification classify_pair(const Fan& fan, const ToricDivisor& boundary);

/// Log discrepancy >= 2 on every exceptional toric valuation.
bool is_one_canonical(const Fan& fan, const ToricDivisor& boundary);

/// Smallest k >= 1 with k (K + D) Cartier.
Integer gorenstein_index(const Fan& fan, const ToricDivisor& boundary);

/// Primitive non-ray lattice vectors v of the support with A(v) <= bound,
/// sorted. Requires all d_i < 1 so the region is bounded.
std::vector<ZVector> exceptional_points(const Fan& fan, const ToricDivisor& boundary, const Rational& bound);

/// Terminality of the maximal cone c for D = 0, decided on the fundamental
/// parallelepiped: terminal iff no nonzero lattice point other than the rays
/// lies in conv(0, v_1, ..., v_n).
bool simplex_terminal(const Fan& fan, std::size_t cone);

}  // namespace toric
