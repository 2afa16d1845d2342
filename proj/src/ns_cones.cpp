#include "toric/ns_cones.hpp"

#include <algorithm>
#include <set>

#include "toric/error.hpp"
#include "toric/linalg.hpp"
#include "toric/polytope.hpp"
#include "toric/singularities.hpp"

namespace toric {

std::string_view to_string(ConeTag tag) {
  switch (tag) {
    case ConeTag::nef: return "nef";
    case ConeTag::eff: return "eff";
    case ConeTag::mov: return "mov";
    case ConeTag::mori: return "mori";
  }
  return "?";
}

std::string_view to_string(FanoType t) {
  switch (t) {
    case FanoType::fano: return "fano";
    case FanoType::weak_fano: return "weak_fano";
    case FanoType::neither: return "neither";
  }
  return "?";
}

namespace {

std::vector<QVector> ray_classes(const Fan& fan, const ClassGroup& cl) {
  std::vector<QVector> out;
  for (std::size_t i = 0; i < fan.num_rays(); ++i)
    out.push_back(cl.free_coordinates(ToricDivisor::prime(fan.num_rays(), i)));
  return out;
}

std::vector<QVector> curve_classes(const Fan& fan, const ClassGroup& cl) {
  std::vector<QVector> out;
  for (const auto& w : fan.walls()) out.push_back(curve_class(fan, cl, w));
  return out;
}

}  // namespace

NSCone nef_cone(const Fan& fan) {
  ClassGroup cl(fan);
  return {ConeTag::nef, RationalCone::from_inequalities(cl.rank(), curve_classes(fan, cl))};
}

NSCone effective_cone(const Fan& fan) {
  ClassGroup cl(fan);
  return {ConeTag::eff, RationalCone::from_generators(cl.rank(), ray_classes(fan, cl))};
}

NSCone moving_cone(const Fan& fan) {
  ClassGroup cl(fan);
  auto classes = ray_classes(fan, cl);
  std::optional<RationalCone> mov;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::vector<QVector> rest;
    for (std::size_t j = 0; j < classes.size(); ++j)
      if (j != i) rest.push_back(classes[j]);
    auto c = RationalCone::from_generators(cl.rank(), rest);
    mov = mov ? intersect(*mov, c) : c;
  }
  return {ConeTag::mov, *mov};
}

NSCone mori_cone(const Fan& fan) {
  ClassGroup cl(fan);
  return {ConeTag::mori, RationalCone::from_generators(cl.rank(), curve_classes(fan, cl))};
}

std::vector<std::size_t> extremal_walls(const Fan& fan) {
  ClassGroup cl(fan);
  auto curves = curve_classes(fan, cl);
  auto mori = RationalCone::from_generators(cl.rank(), curves);
  std::set<ZVector> gens(mori.generators().begin(), mori.generators().end());
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < curves.size(); ++w)
    if (!is_zero(curves[w]) && gens.count(primitive_integer(curves[w]))) out.push_back(w);
  return out;
}

Positivity classify_positivity(const Fan& fan, const ToricDivisor& d) {
  Positivity p;
  p.nef = is_nef(fan, d);
  p.ample = is_ample(fan, d);
  auto poly = section_polytope(fan, d);
  p.effective = !poly.empty();
  p.big = p.effective && polytope_volume(poly) > 0;
  return p;
}

FanoType fano_type(const Fan& fan, const ToricDivisor& boundary) {
  if (!classify_pair(fan, boundary).klt) return FanoType::neither;
  ToricDivisor minus = -(ToricDivisor::canonical(fan.num_rays()) + boundary);
  auto p = classify_positivity(fan, minus);
  if (p.ample) return FanoType::fano;
  if (p.nef && p.big) return FanoType::weak_fano;
  return FanoType::neither;
}

NefValue nef_value(const Fan& fan, const ToricDivisor& b, const ToricDivisor& a) {
  if (!is_ample(fan, a)) throw Error(ErrorKind::ANotAmple, "nef value needs an ample reference class");
  std::optional<NefValue> best;
  for (std::size_t w = 0; w < fan.walls().size(); ++w) {
    const Wall& wall = fan.walls()[w];
    Rational t = -curve_intersection(fan, b, wall) / curve_intersection(fan, a, wall);
    if (!best || t > best->tau) best = NefValue{t, w};
  }
  return *best;
}

VolumeCriterionReport volume_criterion_check(const Fan& fan, const ToricDivisor& d, const Rational& radius,
                                             long samples) {
  if (samples < 1) throw Error(ErrorKind::DimensionMismatch, "samples must be positive");
  ClassGroup cl(fan);
  VolumeCriterionReport report;
  report.exact_ample = is_ample(fan, d);
  report.radius = radius;
  report.samples = samples;
  const QVector centre = cl.free_coordinates(d);
  const std::size_t rho = cl.rank();
  std::vector<long> k(rho, -samples);
  for (;;) {
    QVector point = centre;
    for (std::size_t j = 0; j < rho; ++j) point[j] += radius * make_rational(k[j], samples);
    ToricDivisor xi = cl.representative(point);
    Rational vol = volume(fan, xi);
    Rational top = top_self_intersection(fan, xi);
    ++report.grid_size;
    if (vol != top) report.disagreements.push_back({point, vol, top});
    std::size_t j = rho;
    while (j > 0 && k[j - 1] == samples) k[--j] = -samples;
    if (j == 0) break;
    ++k[j - 1];
  }
  report.criterion_verdict = report.disagreements.empty();
  return report;
}

std::vector<BaseComponent> stable_base_divisorial(const Fan& fan, const ToricDivisor& d, long max_dilate) {
  auto poly = section_polytope(fan, d);
  if (poly.empty()) throw Error(ErrorKind::ClassNotEffective, "section polytope is empty");
  const std::size_t r = fan.num_rays();
  std::optional<QVector> previous;
  QVector orders;
  for (long k = 1; k <= max_dilate; ++k) {
    auto points = lattice_points(poly.dilate(k));
    if (points.empty()) continue;
    QVector current(r);
    for (std::size_t i = 0; i < r; ++i) {
      std::optional<Rational> lowest;
      for (const auto& m : points) {
        Rational v = dot(m, fan.ray(i)) + k * d[i];
        if (!lowest || v < *lowest) lowest = v;
      }
      current[i] = *lowest / k;
    }
    orders = current;
    if (previous && *previous == current) break;
    previous = std::move(current);
  }
  std::vector<BaseComponent> out;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] > 0) out.push_back({i, orders[i]});
  return out;
}

}  // namespace toric
