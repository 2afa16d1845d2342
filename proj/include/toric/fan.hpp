#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "toric/matrix.hpp"
#include "toric/rational.hpp"

namespace toric {

using ConeIndices = std::vector<std::size_t>;

/// Unvalidated fan data as read from a document.
struct RawFan {
  std::size_t dim = 0;
  std::vector<ZVector> rays;
  std::vector<ConeIndices> max_cones;
};

/// A codimension-one cone shared by two maximal cones, with the primitive
/// linear relation among the n+1 rays involved.
struct Wall {
  ConeIndices shared;                     ///< the n-1 wall rays, sorted
  std::array<std::size_t, 2> cones{};     ///< adjacent maximal cones (by index)
  std::array<std::size_t, 2> opposite{};  ///< opposite[k] is the ray of cones[k] off the wall
  ZVector relation;                       ///< length = ray count; zero off the n+1 rays

  const Integer& coefficient(std::size_t ray) const { return relation[ray]; }
};

/// Complete simplicial fan. Only obtainable through validate_fan.
class Fan {
 public:
  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_rays() const noexcept { return rays_.size(); }
  const std::vector<ZVector>& rays() const noexcept { return rays_; }
  const ZVector& ray(std::size_t i) const { return rays_[i]; }
  const std::vector<ConeIndices>& max_cones() const noexcept { return cones_; }
  const std::vector<Wall>& walls() const noexcept { return walls_; }

  /// Rows are the dual basis of maximal cone c: row j pairs to 1 with its
  /// j-th ray and to 0 with the others.
  const QMatrix& dual_basis(std::size_t c) const { return dual_bases_[c]; }

  /// Index of the first maximal cone containing v, with v's coordinates in
  /// that cone's ray basis.
  std::size_t containing_cone(const ZVector& v, QVector* coords = nullptr) const;

  /// Rays as rows of an r x n integer matrix.
  IntMatrix ray_matrix() const;

  bool is_smooth() const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.cones_ == b.cones_;
  }

 private:
  friend Fan validate_fan(const RawFan& raw);
  Fan() = default;

  std::size_t dim_ = 0;
  std::vector<ZVector> rays_;
  std::vector<ConeIndices> cones_;
  std::vector<QMatrix> dual_bases_;
  std::vector<Wall> walls_;
};

/// Checks primitivity, simpliciality, proper face intersections and
/// completeness, in that order; throws Error naming the offending datum.
/// Maximal cones are stored with sorted indices, in sorted order.
Fan validate_fan(const RawFan& raw);

/// Index of the sublattice spanned by the cone's rays inside the lattice of
/// its linear span; 1 iff the cone is smooth. The set must be a face of some
/// maximal cone.
Integer cone_multiplicity(const Fan& fan, const ConeIndices& cone);

/// Walls of the fan (same as fan.walls()).
const std::vector<Wall>& walls(const Fan& fan);

/// Index of the wall whose shared rays and adjacent cones match; nullopt if none.
std::optional<std::size_t> find_wall(const Fan& fan, const ConeIndices& shared);

}  // namespace toric
