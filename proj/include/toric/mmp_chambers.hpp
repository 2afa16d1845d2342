#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "toric/cone.hpp"
#include "toric/divisor.hpp"
#include "toric/fan.hpp"

namespace toric {

enum class ContractionType { fiber, divisorial, flipping };

std::string_view to_string(ContractionType t);

/// One extremal contraction of a fan, read off the wall relation:
/// no negative coefficient is a fiber contraction, one is divisorial (that
/// ray is contracted), more is a flip.
struct ContractionStep {
  std::size_t wall = 0;
  ConeIndices shared;
  ZVector relation;
  ContractionType type = ContractionType::fiber;
  std::optional<std::size_t> contracted_ray;
  /// Flip: the new fan on the same rays. Divisorial: the fan without the
  /// contracted ray (remaining rays keep their relative order). Fiber: the
  /// base of the fibration when it is a simplicial fan of positive dimension.
  std::optional<Fan> target;
  /// Dimension of the image of the contraction.
  std::size_t target_dim = 0;
};

/// Surgery for the wall without certificate checks.
ContractionStep contract_wall(const Fan& fan, std::size_t wall);

/// Contraction of a (K + D)-negative extremal wall. Throws NotNegative or
/// NotExtremal when a certificate fails.
ContractionStep classify_contraction(const Fan& fan, const ToricDivisor& boundary, std::size_t wall);

struct MmpStep {
  ContractionStep step;
  /// Original index of each ray of the fan the step acts on.
  std::vector<std::size_t> ray_labels;
  /// Scaling value lambda with K + D + lambda H zero on the contracted curve.
  Rational threshold;
};

struct MmpResult {
  std::vector<MmpStep> steps;
  Fan final_fan;
  std::vector<std::size_t> final_ray_labels;
  /// True when the run stopped because K + D became nef.
  bool ended_nef = false;
};

/// (K + D)-MMP with scaling by an ample H. Each step contracts the negative
/// extremal wall with the largest ratio -(K + D).C / H.C (the current
/// scaling threshold); ties go to the smallest wall index. Stops when K + D
/// is nef or after a fiber contraction.
MmpResult run_mmp(const Fan& fan, const ToricDivisor& boundary, const ToricDivisor& scaling);

/// Upper bound on MMP steps: rays + number of arrangement hyperplanes.
std::size_t mmp_step_bound(const Fan& fan);

struct Chamber {
  RationalCone cone;  ///< free class coordinates
  QVector sample;     ///< primitive integral interior class
  /// Rays (original indices) and maximal cones of the model's fan.
  std::vector<std::size_t> model_rays;
  std::vector<ConeIndices> model_cones;
  bool is_nef = false;
  std::size_t cells = 0;
};

struct ChamberAdjacency {
  std::size_t first;
  std::size_t second;
  ContractionType type;
};

struct ChamberDecomposition {
  std::size_t dim = 0;
  std::vector<ZVector> rays;
  RationalCone moving;
  std::vector<Chamber> chambers;
  std::vector<ChamberAdjacency> adjacency;
  std::size_t hyperplanes = 0;
  std::size_t cells = 0;
};

inline constexpr std::size_t kMaxChamberRank = 4;
inline constexpr std::size_t kMaxChamberRays = 12;

/// Mori chambers of the moving cone: cells of the arrangement of
/// hyperplanes spanned by ray classes, grouped by the normal fan of P_D at
/// an interior sample. Throws DeskScaleExceeded above rank 4 or 12 rays and
/// NotProjective when the nef cone is not full-dimensional.
ChamberDecomposition mori_chambers(const Fan& fan);

/// The fan of the chamber's model (rays in original order).
Fan model_of_chamber(const ChamberDecomposition& dec, std::size_t chamber);

/// Normalized volume of a full-dimensional pointed cone, measured on the
/// slice <u, x> <= 1 for the given interior covector u.
Rational cone_slice_volume(const RationalCone& cone, const QVector& u);

}  // namespace toric
