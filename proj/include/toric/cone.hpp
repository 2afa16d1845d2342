#pragma once

#include <cstddef>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

/// Vertex-side description produced by the double-description step:
/// the cone is lineality + cone(rays).
struct ConeGenerators {
  std::vector<QVector> rays;
  std::vector<QVector> lineality;
};

/// Double description: generators of {x : <a, x> >= 0 for a in inequalities,
/// <e, x> = 0 for e in equations}. Rays are returned unnormalized.
ConeGenerators generators_of(std::size_t dim, const std::vector<QVector>& inequalities,
                             const std::vector<QVector>& equations = {});

/// A rational polyhedral cone held in both descriptions.
///
/// Generators are primitive integer vectors taken modulo the lineality space
/// (projected onto its orthogonal complement); facets are primitive integer
/// covectors taken modulo the equations. Both lists are sorted
/// lexicographically, so two equal cones compare equal syntactically.
class RationalCone {
 public:
  static RationalCone from_generators(std::size_t dim, const std::vector<QVector>& generators,
                                      const std::vector<QVector>& lineality = {});
  static RationalCone from_generators(std::size_t dim, const std::vector<ZVector>& generators);
  static RationalCone from_inequalities(std::size_t dim, const std::vector<QVector>& inequalities,
                                        const std::vector<QVector>& equations = {});
  static RationalCone from_inequalities(std::size_t dim, const std::vector<ZVector>& inequalities);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ZVector>& generators() const noexcept { return generators_; }
  const std::vector<ZVector>& lineality() const noexcept { return lineality_; }
  const std::vector<ZVector>& facets() const noexcept { return facets_; }
  const std::vector<ZVector>& equations() const noexcept { return equations_; }

  bool pointed() const noexcept { return lineality_.empty(); }
  bool full_dimensional() const noexcept { return equations_.empty(); }
  /// Dimension of the linear span.
  std::size_t span_dim() const noexcept { return dim_ - equations_.size(); }
  bool is_zero() const noexcept { return generators_.empty() && lineality_.empty(); }

  bool contains(const QVector& x) const;
  bool contains(const RationalCone& other) const;
  /// Relative interior membership.
  bool contains_in_relative_interior(const QVector& x) const;
  /// Sum of the generators: a point of the relative interior.
  QVector interior_point() const;

  friend bool operator==(const RationalCone&, const RationalCone&) = default;

 private:
  RationalCone() = default;
  static RationalCone from_both(std::size_t dim, const ConeGenerators& gens,
                                const ConeGenerators& dual_gens);

  std::size_t dim_ = 0;
  std::vector<ZVector> generators_;
  std::vector<ZVector> lineality_;
  std::vector<ZVector> facets_;
  std::vector<ZVector> equations_;
};

/// {u : <u, x> >= 0 for all x in C}.
RationalCone dual_cone(const RationalCone& cone);

RationalCone intersect(const RationalCone& a, const RationalCone& b);

}  // namespace toric
