#include "toric/report.hpp"

#include "toric/cox_rigidity.hpp"
#include "toric/divisor_theory.hpp"
#include "toric/error.hpp"
#include "toric/mmp_chambers.hpp"
#include "toric/ns_cones.hpp"
#include "toric/singularities.hpp"

namespace toric::report {

namespace {

Json q(const Rational& x) { return to_string(x); }
Json z(const Integer& x) { return to_string(x); }

Json qvec(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(q(x));
  return out;
}

Json ints(const ZVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.fits_slong_p() ? Json(x.get_si()) : Json(to_string(x)));
  return out;
}

Json int_rows(const std::vector<ZVector>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(ints(r));
  return out;
}

Json matrix_rows(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(ints(m.row(i)));
  return out;
}

Json cone_json(const RationalCone& c) {
  return Json{{"generators", int_rows(c.generators())}, {"facets", int_rows(c.facets())}};
}

Json positivity(const Positivity& p) {
  return Json{{"ample", p.ample}, {"nef", p.nef}, {"big", p.big}, {"effective", p.effective}};
}

Json labelled(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& labels) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(labels[i]);
  return out;
}

// A relation on the current rays, written against the original ray indices.
Json relation_json(const ZVector& rel, const std::vector<std::size_t>& labels, std::size_t total) {
  ZVector full(total, 0);
  for (std::size_t i = 0; i < rel.size(); ++i) full[labels[i]] = rel[i];
  return ints(full);
}

ToricDivisor default_ample(const FanDocument& doc, const Fan& fan) {
  if (doc.ample) return doc.divisor(*doc.ample);
  return ample_divisor(fan);
}

}  // namespace

std::string render(const Json& j) { return j.dump(2) + "\n"; }

Json fan_json(const Fan& fan) {
  Json cones = Json::array();
  for (const auto& c : fan.max_cones()) cones.push_back(c);
  return Json{{"dim", fan.dim()}, {"rays", int_rows(fan.rays())}, {"max_cones", cones}};
}

Json classify(const FanDocument& doc, const std::optional<std::string>& divisor) {
  Fan fan = doc.fan();
  ToricDivisor d = divisor ? doc.divisor(*divisor) : ToricDivisor::zero(fan.num_rays());
  auto c = classify_pair(fan, d);
  ToricDivisor minus = -(ToricDivisor::canonical(fan.num_rays()) + d);
  Json out{{"command", "classify"},
           {"boundary", divisor ? Json(*divisor) : Json(nullptr)},
           {"coefficients", qvec(d.coefficients)},
           {"klt", c.klt},
           {"log_canonical", c.log_canonical},
           {"canonical", c.canonical},
           {"terminal", c.terminal},
           {"floor_condition", c.floor_condition},
           {"boundary_coefficient_at_least_one", c.boundary_coefficient_at_least_one},
           {"mld", c.mld ? q(*c.mld) : Json(nullptr)},
           {"min_exceptional", c.min_exceptional ? q(*c.min_exceptional) : Json(nullptr)},
           {"gorenstein_index", z(gorenstein_index(fan, d))},
           {"one_canonical", is_one_canonical(fan, d)},
           {"smooth", fan.is_smooth()},
           {"anticanonical_positivity", positivity(classify_positivity(fan, minus))},
           {"fano_type", std::string(to_string(fano_type(fan, d)))}};
  if (divisor) out["boundary_positivity"] = positivity(classify_positivity(fan, d));
  return out;
}

Json cones(const FanDocument& doc) {
  Fan fan = doc.fan();
  ClassGroup cl(fan);
  Json walls = Json::array();
  for (auto w : extremal_walls(fan)) walls.push_back(Json{{"wall", w}, {"shared", fan.walls()[w].shared}});
  return Json{{"command", "cones"},
              {"class_basis", matrix_rows(cl.free_projection())},
              {"torsion", ints(cl.torsion())},
              {"nef", cone_json(nef_cone(fan).cone)},
              {"eff", cone_json(effective_cone(fan).cone)},
              {"mov", cone_json(moving_cone(fan).cone)},
              {"mori", cone_json(mori_cone(fan).cone)},
              {"extremal_walls", walls}};
}

Json chambers(const FanDocument& doc) {
  Fan fan = doc.fan();
  auto dec = mori_chambers(fan);
  Json list = Json::array();
  for (const auto& ch : dec.chambers) {
    Json cones = Json::array();
    for (const auto& c : ch.model_cones) cones.push_back(c);
    list.push_back(Json{{"cone", cone_json(ch.cone)},
                        {"sample", qvec(ch.sample)},
                        {"nef", ch.is_nef},
                        {"cells", ch.cells},
                        {"model", Json{{"rays", ch.model_rays}, {"max_cones", cones}}}});
  }
  Json adj = Json::array();
  for (const auto& a : dec.adjacency)
    adj.push_back(Json{{"chambers", {a.first, a.second}}, {"type", std::string(to_string(a.type))}});
  return Json{{"command", "chambers"}, {"moving", cone_json(dec.moving)}, {"hyperplanes", dec.hyperplanes},
              {"cells", dec.cells},          {"chambers", list},                 {"adjacency", adj}};
}

Json nef_value(const FanDocument& doc, const std::string& b, const std::string& a) {
  Fan fan = doc.fan();
  auto nv = toric::nef_value(fan, doc.divisor(b), doc.divisor(a));
  const Wall& w = fan.walls()[nv.witness];
  return Json{{"command", "nef-value"},
              {"b", b},
              {"a", a},
              {"tau", q(nv.tau)},
              {"witness", Json{{"wall", nv.witness}, {"shared", w.shared}, {"relation", ints(w.relation)}}}};
}

Json volume(const FanDocument& doc, const std::string& divisor) {
  Fan fan = doc.fan();
  ToricDivisor d = doc.divisor(divisor);
  auto poly = section_polytope(fan, d);
  Rational euclid = polytope_volume(poly);
  Rational vol = toric::volume(fan, d);
  Rational top = top_self_intersection(fan, d);
  bool nef = is_nef(fan, d);
  Rational scaled = euclid;
  for (std::size_t k = 2; k <= fan.dim(); ++k) scaled *= static_cast<long>(k);
  // D^n only computes the volume when D is nef.
  return Json{{"command", "volume"},
              {"divisor", divisor},
              {"volume", q(vol)},
              {"polytope_volume", q(euclid)},
              {"n_factorial_polytope_volume", q(scaled)},
              {"top_self_intersection", q(top)},
              {"nef", nef},
              {"top_power_agrees", nef ? Json(vol == top) : Json(nullptr)}};
}

Json h0(const FanDocument& doc, const std::string& divisor, long dilate) {
  Fan fan = doc.fan();
  ToricDivisor d = Rational(dilate) * doc.divisor(divisor);
  return Json{{"command", "h0"}, {"divisor", divisor}, {"dilate", dilate}, {"h0", z(toric::h0(fan, d))}};
}

Json cox(const FanDocument& doc, const std::optional<std::string>& ample) {
  Fan fan = doc.fan();
  ToricDivisor h;
  std::string label;
  if (ample) {
    h = doc.divisor(*ample);
    label = *ample;
  } else if (fano_type(fan, ToricDivisor::zero(fan.num_rays())) == FanoType::fano) {
    h = ToricDivisor::anticanonical(fan.num_rays());
    label = "-K";
  } else {
    h = default_ample(doc, fan);
    label = doc.ample ? *doc.ample : "generated";
  }
  auto p = cox_presentation(fan, h);
  ClassGroup cl(fan);
  Json grading = Json::array();
  for (const auto& c : p.grading) grading.push_back(Json{{"free", qvec(c.free)}, {"torsion", ints(c.torsion)}});
  return Json{{"command", "cox"},
              {"ample", label},
              {"ample_coefficients", qvec(h.coefficients)},
              {"class_basis", matrix_rows(cl.free_projection())},
              {"torsion", ints(cl.torsion())},
              {"grading", grading},
              {"degrees", qvec(p.degrees)},
              {"m", q(p.m)},
              {"M", q(p.M)}};
}

Json mmp(const FanDocument& doc, const std::optional<std::string>& divisor, const std::optional<std::string>& scaling) {
  Fan fan = doc.fan();
  ToricDivisor d = divisor ? doc.divisor(*divisor) : ToricDivisor::zero(fan.num_rays());
  ToricDivisor h = scaling ? doc.divisor(*scaling) : default_ample(doc, fan);
  auto run = run_mmp(fan, d, h);
  Json steps = Json::array();
  for (const auto& s : run.steps) {
    Json step{{"type", std::string(to_string(s.step.type))},
              {"wall", labelled(s.step.shared, s.ray_labels)},
              {"relation", relation_json(s.step.relation, s.ray_labels, fan.num_rays())},
              {"threshold", q(s.threshold)},
              {"target_dim", s.step.target_dim}};
    if (s.step.contracted_ray) step["contracted_ray"] = s.ray_labels[*s.step.contracted_ray];
    if (s.step.target) step["target"] = fan_json(*s.step.target);
    steps.push_back(step);
  }
  return Json{{"command", "mmp"},
              {"steps", steps},
              {"final", fan_json(run.final_fan)},
              {"final_rays", run.final_ray_labels},
              {"ended_nef", run.ended_nef}};
}

Json rigidity(const FanDocument& doc) {
  Fan fan = doc.fan();
  auto v = rigidity_check(fan);
  return Json{{"command", "rigidity"},
              {"verdict", v.rigid_by_theorem ? "rigid_by_theorem" : "hypotheses_fail"},
              {"hypotheses",
               Json{{"simplicial", v.hypotheses.simplicial}, {"terminal", v.hypotheses.terminal}, {"fano", v.hypotheses.fano}}},
              {"reasons", v.reasons},
              {"annotations", v.annotations},
              {"canonical", v.canonical},
              {"gorenstein", v.gorenstein},
              {"smooth", v.smooth},
              {"dim3_gorenstein_smoothness", std::string(to_string(v.smoothness))}};
}

}  // namespace toric::report
