#pragma once

#include <optional>
#include <vector>

#include "toric/divisor.hpp"
#include "toric/fan.hpp"
#include "toric/matrix.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// A class in Cl(X): free coordinates in the fixed basis plus torsion
/// residues (only meaningful for integral classes).
struct DivisorClass {
  QVector free;
  ZVector torsion;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Cl(X) = Z^rays / M, computed from the Smith form of the ray matrix.
///
/// The free basis is the Hermite normal form of the free projection, which
/// makes it independent of the elimination path; on F_2 with rays
/// (1,0),(0,1),(-1,2),(0,-1) it is the (F, E) basis.
class ClassGroup {
 public:
  explicit ClassGroup(const Fan& fan);

  std::size_t rank() const noexcept { return free_projection_.rows(); }
  std::size_t num_rays() const noexcept { return free_projection_.cols(); }
  /// Invariant factors > 1.
  const ZVector& torsion() const noexcept { return torsion_orders_; }
  /// rank x rays: a ray-coefficient vector to its free coordinates.
  const IntMatrix& free_projection() const noexcept { return free_projection_; }
  /// torsion x rays: residues are taken modulo torsion()[k].
  const IntMatrix& torsion_projection() const noexcept { return torsion_projection_; }

  QVector free_coordinates(const ToricDivisor& d) const;
  /// Torsion residues; requires an integral divisor.
  ZVector torsion_coordinates(const ToricDivisor& d) const;
  DivisorClass class_of(const ToricDivisor& d) const;
  /// A divisor in the class (integral when the free part is integral).
  ToricDivisor representative(const DivisorClass& c) const;
  ToricDivisor representative(const QVector& free) const;
  /// Torsion enumeration: all residue vectors.
  std::vector<ZVector> torsion_elements() const;

 private:
  IntMatrix free_projection_;
  IntMatrix torsion_projection_;
  IntMatrix free_lift_;     // rays x rank
  IntMatrix torsion_lift_;  // rays x torsion
  ZVector torsion_orders_;
};

ClassGroup class_group(const Fan& fan);

/// Per-cone covector u with <u, v_i> = -d_i on the rays of the cone.
std::vector<QVector> cartier_data(const Fan& fan, const ToricDivisor& d);

/// Smallest k >= 1 with k D Cartier (1 means Cartier).
Integer cartier_index(const Fan& fan, const ToricDivisor& d);
inline bool is_cartier(const Fan& fan, const ToricDivisor& d) { return cartier_index(fan, d) == 1; }

/// P_D = { m : <m, v_i> >= -d_i }.
RationalPolytope section_polytope(const Fan& fan, const ToricDivisor& d);

/// Number of lattice points of P_D; D must be integral.
Integer h0(const Fan& fan, const ToricDivisor& d);

/// D . C_w for the torus-invariant curve of wall w.
Rational curve_intersection(const Fan& fan, const ToricDivisor& d, const Wall& w);

/// The functional D |-> D . C_w written in free class coordinates.
QVector curve_class(const Fan& fan, const ClassGroup& cl, const Wall& w);

bool is_nef(const Fan& fan, const ToricDivisor& d);
bool is_ample(const Fan& fan, const ToricDivisor& d);

/// An ample integral divisor: the primitive class of the sum of the nef
/// cone generators. Throws NotProjective when the nef cone is not
/// full-dimensional.
ToricDivisor ample_divisor(const Fan& fan);

/// Vol(D) = n! vol(P_D).
Rational volume(const Fan& fan, const ToricDivisor& d);

/// D^n, the intersection polynomial evaluated on D (for any D, nef or not).
Rational top_self_intersection(const Fan& fan, const ToricDivisor& d);

/// Mixed intersection number D_1 ... D_n (exactly dim many divisors).
Rational intersection_number(const Fan& fan, const std::vector<ToricDivisor>& divisors);

/// deg_H(D) = D . H^{n-1}; H must be nef.
Rational degree(const Fan& fan, const ToricDivisor& d, const ToricDivisor& h);

}  // namespace toric
