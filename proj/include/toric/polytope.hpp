#pragma once

#include <cstddef>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

/// Polyhedron { m : <a_i, m> >= -c_i } with a cached vertex description.
///
/// Vertices come from the double-description run on the homogenized cone,
/// so emptiness and boundedness are decided from the same data as the
/// vertex list.
class RationalPolytope {
 public:
  RationalPolytope(std::size_t dim, std::vector<QVector> normals, QVector offsets);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<QVector>& normals() const noexcept { return normals_; }
  const QVector& offsets() const noexcept { return offsets_; }

  bool empty() const noexcept { return vertices_.empty(); }
  bool bounded() const noexcept { return bounded_; }
  /// Sorted lexicographically.
  const std::vector<QVector>& vertices() const noexcept { return vertices_; }
  /// For each vertex, the indices of inequalities tight at it.
  const std::vector<std::vector<std::size_t>>& vertex_incidences() const noexcept { return incidences_; }

  bool contains(const QVector& m) const;
  bool contains(const ZVector& m) const;
  /// Slack <a_i, m> + c_i of inequality i.
  Rational slack(std::size_t i, const QVector& m) const;

  /// Dimension of the affine hull (-1 when empty).
  long affine_dim() const;
  /// Inequalities whose tight set is a facet (requires a nonempty polytope).
  std::vector<std::size_t> facet_indices() const;
  bool has_integral_vertices() const;

  RationalPolytope dilate(const Rational& k) const;

 private:
  std::size_t dim_;
  std::vector<QVector> normals_;
  QVector offsets_;
  std::vector<QVector> vertices_;
  std::vector<std::vector<std::size_t>> incidences_;
  bool bounded_ = true;
};

/// Integer points of a bounded polytope, sorted lexicographically.
/// Bounding-box scan derived from the vertex coordinates; cost is the box
/// volume times the inequality count, fine for the small polytopes here.
std::vector<ZVector> lattice_points(const RationalPolytope& p);
std::size_t count_lattice_points(const RationalPolytope& p);

/// Euclidean volume via a pulling triangulation of the vertex hull.
/// Lower-dimensional polytopes have volume 0.
Rational polytope_volume(const RationalPolytope& p);

/// Affine dimension of a point set (-1 when empty).
long affine_dimension(const std::vector<QVector>& points);

}  // namespace toric
