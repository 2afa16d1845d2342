#include "toric/cox_rigidity.hpp"

#include <algorithm>

#include "toric/error.hpp"
#include "toric/ns_cones.hpp"
#include "toric/singularities.hpp"

namespace toric {

std::string_view to_string(SmoothnessCheck s) {
  switch (s) {
    case SmoothnessCheck::not_applicable: return "not_applicable";
    case SmoothnessCheck::holds: return "holds";
    case SmoothnessCheck::violated: return "violated";
  }
  return "?";
}

CoxPresentation cox_presentation(const Fan& fan, const ToricDivisor& ample) {
  if (ample.size() != fan.num_rays()) throw Error(ErrorKind::DimensionMismatch, "ample class length differs from ray count");
  if (!is_ample(fan, ample)) throw Error(ErrorKind::HNotAmple, "grading needs an ample class");
  ClassGroup cl(fan);
  CoxPresentation p{ample, {}, {}, 0, 0};
  for (std::size_t i = 0; i < fan.num_rays(); ++i) {
    ToricDivisor d = ToricDivisor::prime(fan.num_rays(), i);
    p.grading.push_back(cl.class_of(d));
    p.degrees.push_back(degree(fan, d, ample));
  }
  p.m = *std::min_element(p.degrees.begin(), p.degrees.end());
  p.M = *std::max_element(p.degrees.begin(), p.degrees.end());
  if (p.m <= 0) throw std::logic_error("ample class with a nonpositive variable degree");
  return p;
}

Integer hilbert_component(const Fan& fan, const DivisorClass& c) {
  for (const auto& x : c.free)
    if (!is_integral(x)) throw Error(ErrorKind::NoIntegralRepresentative, "class has a fractional free part");
  ToricDivisor d = class_group(fan).representative(c);
  if (!d.is_integral()) throw Error(ErrorKind::NoIntegralRepresentative, "representative is not integral");
  return h0(fan, d);
}

Integer hilbert_slice(const Fan& fan, const ToricDivisor& ample, const Rational& d) {
  if (!is_ample(fan, ample)) throw Error(ErrorKind::HNotAmple, "slices need an ample class");
  ClassGroup cl(fan);
  const std::size_t rho = cl.rank();
  // degree as a functional on free coordinates
  QVector deg(rho);
  for (std::size_t j = 0; j < rho; ++j) {
    QVector e(rho);
    e[j] = 1;
    deg[j] = degree(fan, cl.representative(e), ample);
  }
  auto eff = effective_cone(fan).cone;
  std::vector<QVector> normals;
  QVector offsets;
  for (const auto& f : eff.facets()) {
    normals.push_back(to_rational(f));
    offsets.push_back(0);
  }
  QVector neg = deg;
  for (auto& x : neg) x = -x;
  normals.push_back(neg);
  offsets.push_back(d);
  auto classes = lattice_points(RationalPolytope(rho, normals, offsets));
  auto torsion = cl.torsion_elements();
  Integer total = 0;
  for (const auto& c : classes)
    for (const auto& t : torsion) total += hilbert_component(fan, DivisorClass{to_rational(c), t});
  return total;
}

RigidityVerdict rigidity_check(const Fan& fan) {
  RigidityVerdict v;
  const ToricDivisor zero = ToricDivisor::zero(fan.num_rays());
  auto pair = classify_pair(fan, zero);
  v.hypotheses.simplicial = true;  // every validated fan is simplicial
  v.hypotheses.terminal = pair.terminal;
  v.canonical = pair.canonical;
  FanoType type = fano_type(fan, zero);
  v.hypotheses.fano = type == FanoType::fano;
  v.gorenstein = gorenstein_index(fan, zero) == 1;
  v.smooth = fan.is_smooth();

  if (!v.hypotheses.terminal) {
    v.reasons.push_back("not terminal");
    if (v.canonical) v.annotations.push_back("canonical_not_terminal: canonical Fano examples of this kind are not rigid in general");
  }
  if (!v.hypotheses.fano) {
    v.reasons.push_back("not Fano");
    if (type == FanoType::weak_fano)
      v.annotations.push_back("weak_fano: -K nef and big but not ample; smooth weak Fano examples are not rigid in general");
  }
  v.rigid_by_theorem = v.hypotheses.simplicial && v.hypotheses.terminal && v.hypotheses.fano;
  if (fan.dim() == 3 && v.hypotheses.terminal && v.gorenstein && v.hypotheses.fano)
    v.smoothness = v.smooth ? SmoothnessCheck::holds : SmoothnessCheck::violated;
  return v;
}

}  // namespace toric
