#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/divisor.hpp"
#include "toric/divisor_theory.hpp"
#include "toric/fan.hpp"

namespace toric {

/// Cox ring k[x_1..x_r] graded by Cl(X), with degrees against an ample H.
struct CoxPresentation {
  ToricDivisor ample;
  std::vector<DivisorClass> grading;  ///< class of each variable
  QVector degrees;                    ///< D_i . H^{n-1}
  Rational m;
  Rational M;
};

/// Throws HNotAmple.
CoxPresentation cox_presentation(const Fan& fan, const ToricDivisor& ample);

/// h0 of an integral representative of the class. Throws
/// NoIntegralRepresentative for a class with non-integral free part.
Integer hilbert_component(const Fan& fan, const DivisorClass& c);

/// Sum of h0 over effective classes of H-degree <= d (torsion included).
Integer hilbert_slice(const Fan& fan, const ToricDivisor& ample, const Rational& d);

struct RigidityHypotheses {
  bool simplicial = true;
  bool terminal = false;
  bool fano = false;
};

enum class SmoothnessCheck { not_applicable, holds, violated };

struct RigidityVerdict {
  RigidityHypotheses hypotheses;
  bool rigid_by_theorem = false;
  std::vector<std::string> reasons;      ///< failed hypotheses
  std::vector<std::string> annotations;  ///< known failure class
  bool canonical = false;
  bool gorenstein = false;
  bool smooth = false;
  /// Dimension 3, terminal, Gorenstein, Fano: smoothness must hold.
  SmoothnessCheck smoothness = SmoothnessCheck::not_applicable;
};

std::string_view to_string(SmoothnessCheck s);

RigidityVerdict rigidity_check(const Fan& fan);

}  // namespace toric
