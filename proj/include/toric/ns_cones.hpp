#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "toric/cone.hpp"
#include "toric/divisor.hpp"
#include "toric/divisor_theory.hpp"
#include "toric/fan.hpp"

namespace toric {

enum class ConeTag { nef, eff, mov, mori };

std::string_view to_string(ConeTag tag);

/// A cone in N^1(X) (free class coordinates of Cl(X)) or, for the Mori
/// cone, in N_1(X) written as functionals on those coordinates.
struct NSCone {
  ConeTag tag;
  RationalCone cone;
};

NSCone nef_cone(const Fan& fan);
NSCone effective_cone(const Fan& fan);
/// Intersection over i of cone([D_j] : j != i).
NSCone moving_cone(const Fan& fan);
/// Generated by the curve classes of all walls.
NSCone mori_cone(const Fan& fan);

/// Walls whose curve class spans an extremal ray of the Mori cone, by index.
std::vector<std::size_t> extremal_walls(const Fan& fan);

struct Positivity {
  bool ample = false;
  bool nef = false;
  bool big = false;
  bool effective = false;
};

Positivity classify_positivity(const Fan& fan, const ToricDivisor& d);

enum class FanoType { fano, weak_fano, neither };

std::string_view to_string(FanoType t);

/// Type of the pair (X, D): klt and -(K + D) ample (fano) or nef and big
/// (weak_fano).
FanoType fano_type(const Fan& fan, const ToricDivisor& boundary);

struct NefValue {
  Rational tau;
  std::size_t witness;  ///< wall index
};

/// tau = max over walls of -(B.C)/(A.C); ties go to the smaller wall index.
NefValue nef_value(const Fan& fan, const ToricDivisor& b, const ToricDivisor& a);

struct VolumeSample {
  QVector point;  ///< free class coordinates
  Rational volume;
  Rational top_power;
};

struct VolumeCriterionReport {
  bool exact_ample = false;
  bool criterion_verdict = false;
  Rational radius;
  long samples = 0;
  std::size_t grid_size = 0;
  std::vector<VolumeSample> disagreements;
};

/// Compares Vol(xi) with xi^n on the grid [D] + radius * k / samples,
/// k in [-samples, samples]^rho (free class coordinates).
VolumeCriterionReport volume_criterion_check(const Fan& fan, const ToricDivisor& d, const Rational& radius,
                                             long samples);

struct BaseComponent {
  std::size_t ray;
  Rational multiplicity;
  friend bool operator==(const BaseComponent&, const BaseComponent&) = default;
};

/// Divisorial part of the stable base locus of D: for each ray, the
/// normalized vanishing order min (<m, v_i> + k d_i) / k over lattice points
/// m of k P_D, for k = 1, 2, ... until two consecutive dilates agree (at most
/// max_dilate). Throws ClassNotEffective when P_D is empty.
std::vector<BaseComponent> stable_base_divisorial(const Fan& fan, const ToricDivisor& d, long max_dilate = 12);

}  // namespace toric
