#include "toric/mmp_chambers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/divisor_theory.hpp"
#include "toric/error.hpp"
#include "toric/linalg.hpp"
#include "toric/ns_cones.hpp"
#include "toric/singularities.hpp"

namespace toric {

std::string_view to_string(ContractionType t) {
  switch (t) {
    case ContractionType::fiber: return "fiber";
    case ContractionType::divisorial: return "divisorial";
    case ContractionType::flipping: return "flipping";
  }
  return "?";
}

namespace {

ContractionType type_of(const ZVector& relation) {
  std::size_t negative = std::count_if(relation.begin(), relation.end(), [](const Integer& b) { return b < 0; });
  if (negative == 0) return ContractionType::fiber;
  return negative == 1 ? ContractionType::divisorial : ContractionType::flipping;
}

ConeIndices sorted_union(ConeIndices a, const ConeIndices& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

ConeIndices without(const ConeIndices& a, std::size_t x) {
  ConeIndices out;
  for (auto i : a)
    if (i != x) out.push_back(i);
  return out;
}

bool includes(const ConeIndices& big, const ConeIndices& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Base of a fiber-type contraction: the fan's image in N / (N cap span J+).
std::optional<Fan> fibration_base(const Fan& fan, const ConeIndices& positive, std::size_t& target_dim) {
  const std::size_t n = fan.dim();
  std::vector<ZVector> support;
  for (auto i : positive) support.push_back(fan.ray(i));
  IntMatrix K = IntMatrix::from_rows(support, n);
  SmithForm snf = smith_normal_form(K);
  std::size_t s = 0;
  for (const auto& d : snf.invariants())
    if (d != 0) ++s;
  target_dim = n - s;
  if (target_dim == 0) return std::nullopt;
  auto project = [&](const ZVector& v) {
    ZVector out(target_dim);
    for (std::size_t c = 0; c < target_dim; ++c)
      for (std::size_t k = 0; k < n; ++k) out[c] += v[k] * snf.V(k, s + c);
    return out;
  };
  std::vector<ZVector> image_rays;
  std::map<ZVector, std::size_t> index;
  for (const auto& v : fan.rays()) {
    ZVector p = project(v);
    if (is_zero(p)) continue;
    p = primitive_integer(p);
    if (!index.count(p)) {
      index[p] = image_rays.size();
      image_rays.push_back(p);
    }
  }
  std::set<ConeIndices> cones;
  for (const auto& sigma : fan.max_cones()) {
    std::vector<ZVector> gens;
    for (auto i : sigma) {
      ZVector p = project(fan.ray(i));
      if (!is_zero(p)) gens.push_back(p);
    }
    auto c = RationalCone::from_generators(target_dim, gens);
    if (!c.full_dimensional()) continue;
    if (c.generators().size() != target_dim) return std::nullopt;
    ConeIndices idx;
    for (const auto& g : c.generators()) {
      auto it = index.find(g);
      if (it == index.end()) return std::nullopt;
      idx.push_back(it->second);
    }
    std::sort(idx.begin(), idx.end());
    cones.insert(idx);
  }
  try {
    return validate_fan(RawFan{target_dim, image_rays, {cones.begin(), cones.end()}});
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<QVector> ray_classes(const Fan& fan, const ClassGroup& cl) {
  std::vector<QVector> out;
  for (std::size_t i = 0; i < fan.num_rays(); ++i)
    out.push_back(cl.free_coordinates(ToricDivisor::prime(fan.num_rays(), i)));
  return out;
}

// Primitive normals (first nonzero entry positive) of hyperplanes spanned by
// rank-1 many ray classes.
std::vector<ZVector> arrangement(const std::vector<QVector>& classes, std::size_t rank) {
  std::set<ZVector> normals;
  if (rank < 2) return {};
  std::vector<std::size_t> idx(rank - 1);
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  const std::size_t r = classes.size();
  if (idx.size() > r) return {};
  for (;;) {
    QMatrix A(idx.size(), rank);
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t c = 0; c < rank; ++c) A(a, c) = classes[idx[a]][c];
    auto ns = nullspace(A);
    if (ns.size() == 1) {
      ZVector h = primitive_integer(ns[0]);
      auto first = std::find_if(h.begin(), h.end(), [](const Integer& x) { return x != 0; });
      if (*first < 0)
        for (auto& x : h) x = -x;
      normals.insert(h);
    }
    std::size_t k = idx.size();
    while (k > 0 && idx[k - 1] == r - idx.size() + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
  }
  return {normals.begin(), normals.end()};
}

std::vector<QVector> as_rational(const std::vector<ZVector>& v) {
  std::vector<QVector> out;
  for (const auto& x : v) out.push_back(to_rational(x));
  return out;
}

}  // namespace

ContractionStep contract_wall(const Fan& fan, std::size_t w) {
  if (w >= fan.walls().size()) throw Error(ErrorKind::NotExtremal, "no wall with index " + std::to_string(w));
  auto extremal = extremal_walls(fan);
  if (!std::binary_search(extremal.begin(), extremal.end(), w))
    throw Error(ErrorKind::NotExtremal, "wall " + std::to_string(w) + " does not span an extremal ray");
  const Wall& wall = fan.walls()[w];
  ContractionStep step;
  step.wall = w;
  step.shared = wall.shared;
  step.relation = wall.relation;
  step.type = type_of(wall.relation);
  const std::size_t n = fan.dim();

  ConeIndices positive, negative, support;
  for (std::size_t i = 0; i < wall.relation.size(); ++i) {
    if (wall.relation[i] > 0) positive.push_back(i);
    if (wall.relation[i] < 0) negative.push_back(i);
    if (wall.relation[i] != 0) support.push_back(i);
  }

  if (step.type == ContractionType::fiber) {
    step.target = fibration_base(fan, positive, step.target_dim);
    return step;
  }
  step.target_dim = n;

  // Links K: cones J \ {i} + K lie in the fan for every i in J+.
  std::set<ConeIndices> cones(fan.max_cones().begin(), fan.max_cones().end());
  std::set<ConeIndices> links;
  for (auto i : positive) {
    ConeIndices base = without(support, i);
    for (const auto& sigma : fan.max_cones()) {
      if (!includes(sigma, base)) continue;
      ConeIndices k;
      std::set_difference(sigma.begin(), sigma.end(), base.begin(), base.end(), std::back_inserter(k));
      bool ok = k.size() + support.size() == n + 1;
      for (auto j : positive) ok = ok && cones.count(sorted_union(without(support, j), k));
      if (ok) links.insert(k);
    }
  }
  for (const auto& k : links) {
    for (auto i : positive) cones.erase(sorted_union(without(support, i), k));
    for (auto i : negative) cones.insert(sorted_union(without(support, i), k));
  }

  RawFan raw{n, fan.rays(), {cones.begin(), cones.end()}};
  if (step.type == ContractionType::divisorial) {
    const std::size_t j = negative[0];
    step.contracted_ray = j;
    raw.rays.erase(raw.rays.begin() + static_cast<std::ptrdiff_t>(j));
    for (auto& c : raw.max_cones) {
      for (auto& i : c) {
        if (i == j) throw std::logic_error("contracted ray survives the surgery");
        if (i > j) --i;
      }
    }
  }
  step.target = validate_fan(raw);
  return step;
}

ContractionStep classify_contraction(const Fan& fan, const ToricDivisor& boundary, std::size_t w) {
  if (boundary.size() != fan.num_rays()) throw Error(ErrorKind::DimensionMismatch, "boundary length differs from ray count");
  if (w >= fan.walls().size()) throw Error(ErrorKind::NotExtremal, "no wall with index " + std::to_string(w));
  ToricDivisor kd = ToricDivisor::canonical(fan.num_rays()) + boundary;
  Rational dc = curve_intersection(fan, kd, fan.walls()[w]);
  if (dc >= 0)
    throw Error(ErrorKind::NotNegative, "(K+D).C = " + to_string(dc) + " on wall " + std::to_string(w));
  return contract_wall(fan, w);
}

std::size_t mmp_step_bound(const Fan& fan) {
  ClassGroup cl(fan);
  return fan.num_rays() + arrangement(ray_classes(fan, cl), cl.rank()).size();
}

MmpResult run_mmp(const Fan& fan, const ToricDivisor& boundary, const ToricDivisor& scaling) {
  if (boundary.size() != fan.num_rays() || scaling.size() != fan.num_rays())
    throw Error(ErrorKind::DimensionMismatch, "divisor length differs from ray count");
  if (!classify_pair(fan, boundary).klt) throw Error(ErrorKind::NotKlt, "the MMP needs a klt pair");
  if (!is_ample(fan, scaling)) throw Error(ErrorKind::HNotAmple, "the scaling class must be ample");
  const std::size_t bound = mmp_step_bound(fan);

  Fan cur = fan;
  ToricDivisor d = boundary, h = scaling;
  std::vector<std::size_t> labels(fan.num_rays());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i;
  std::vector<MmpStep> steps;
  bool ended_nef = false;

  for (;;) {
    ToricDivisor kd = ToricDivisor::canonical(cur.num_rays()) + d;
    std::optional<Rational> lambda;
    std::vector<Rational> ratio(cur.walls().size());
    std::vector<bool> negative(cur.walls().size(), false);
    for (std::size_t w = 0; w < cur.walls().size(); ++w) {
      Rational kc = curve_intersection(cur, kd, cur.walls()[w]);
      if (kc >= 0) continue;
      Rational hc = curve_intersection(cur, h, cur.walls()[w]);
      if (hc <= 0) throw std::logic_error("scaling class fails to be positive on a negative curve");
      negative[w] = true;
      ratio[w] = -kc / hc;
      if (!lambda || ratio[w] > *lambda) lambda = ratio[w];
    }
    if (!lambda) {
      ended_nef = true;
      break;
    }
    if (steps.size() >= bound)
      throw Error(ErrorKind::StepBoundExceeded, "MMP exceeded " + std::to_string(bound) + " steps");
    std::optional<std::size_t> chosen;
    for (auto w : extremal_walls(cur))
      if (negative[w] && ratio[w] == *lambda) {
        chosen = w;
        break;
      }
    if (!chosen) throw std::logic_error("no extremal wall attains the scaling threshold");
    ContractionStep step = contract_wall(cur, *chosen);
    steps.push_back({step, labels, *lambda});
    if (step.type == ContractionType::fiber) break;
    if (step.type == ContractionType::divisorial) {
      const std::size_t j = *step.contracted_ray;
      labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(j));
      d.coefficients.erase(d.coefficients.begin() + static_cast<std::ptrdiff_t>(j));
      h.coefficients.erase(h.coefficients.begin() + static_cast<std::ptrdiff_t>(j));
    }
    cur = *step.target;
  }
  return MmpResult{std::move(steps), cur, labels, ended_nef};
}

Rational cone_slice_volume(const RationalCone& cone, const QVector& u) {
  std::vector<QVector> normals = as_rational(cone.facets());
  QVector offsets(normals.size());
  QVector neg = u;
  for (auto& x : neg) x = -x;
  normals.push_back(neg);
  offsets.push_back(1);
  return polytope_volume(RationalPolytope(cone.dim(), normals, offsets));
}

ChamberDecomposition mori_chambers(const Fan& fan) {
  ClassGroup cl(fan);
  const std::size_t rho = cl.rank();
  if (rho > kMaxChamberRank || fan.num_rays() > kMaxChamberRays)
    throw Error(ErrorKind::DeskScaleExceeded, "chamber computation is limited to rank <= 4 and <= 12 rays");
  ample_divisor(fan);  // NotProjective

  ChamberDecomposition dec{fan.dim(), fan.rays(), moving_cone(fan).cone, {}, {}, 0, 0};
  auto hyperplanes = arrangement(ray_classes(fan, cl), rho);
  dec.hyperplanes = hyperplanes.size();

  std::vector<RationalCone> cells = {dec.moving};
  for (const auto& h : hyperplanes) {
    QVector hq = to_rational(h);
    std::vector<RationalCone> next;
    for (const auto& c : cells) {
      bool pos = false, neg = false;
      for (const auto& g : c.generators()) {
        Rational s = dot(hq, g);
        pos = pos || s > 0;
        neg = neg || s < 0;
      }
      if (!(pos && neg)) {
        next.push_back(c);
        continue;
      }
      for (int sign : {1, -1}) {
        std::vector<QVector> ineq = as_rational(c.facets());
        QVector hs = hq;
        for (auto& x : hs) x *= sign;
        ineq.push_back(hs);
        auto piece = RationalCone::from_inequalities(rho, ineq);
        if (piece.full_dimensional()) next.push_back(piece);
      }
    }
    cells = std::move(next);
  }
  dec.cells = cells.size();

  // group cells by the normal fan of P_D at an interior sample
  using Model = std::pair<std::vector<std::size_t>, std::vector<ConeIndices>>;
  std::map<Model, std::vector<std::size_t>> groups;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    ToricDivisor d = cl.representative(to_rational(primitive_integer(cells[c].interior_point())));
    auto p = section_polytope(fan, d);
    auto facets = p.facet_indices();
    std::set<ConeIndices> cones;
    for (const auto& tight : p.vertex_incidences()) {
      ConeIndices cone;
      std::set_intersection(tight.begin(), tight.end(), facets.begin(), facets.end(), std::back_inserter(cone));
      cones.insert(cone);
    }
    groups[{facets, {cones.begin(), cones.end()}}].push_back(c);
  }

  const RationalCone nef = nef_cone(fan).cone;
  for (const auto& [model, members] : groups) {
    std::vector<QVector> gens;
    for (auto c : members)
      for (const auto& g : cells[c].generators()) gens.push_back(to_rational(g));
    Chamber ch{RationalCone::from_generators(rho, gens), {}, model.first, model.second, false, members.size()};
    ch.sample = to_rational(primitive_integer(ch.cone.interior_point()));
    ch.is_nef = ch.cone == nef;
    dec.chambers.push_back(std::move(ch));
  }
  std::sort(dec.chambers.begin(), dec.chambers.end(),
            [](const Chamber& a, const Chamber& b) { return a.cone.generators() < b.cone.generators(); });

  if (rho >= 2) {
    for (std::size_t a = 0; a < dec.chambers.size(); ++a)
      for (std::size_t b = a + 1; b < dec.chambers.size(); ++b) {
        auto shared = intersect(dec.chambers[a].cone, dec.chambers[b].cone);
        if (shared.span_dim() != rho - 1) continue;
        Fan model = model_of_chamber(dec, a);
        ToricDivisor full = cl.representative(shared.interior_point());
        QVector pushed;
        for (auto i : dec.chambers[a].model_rays) pushed.push_back(full[i]);
        ToricDivisor facet_class(pushed);
        std::optional<ContractionType> type;
        for (auto w : extremal_walls(model))
          if (curve_intersection(model, facet_class, model.walls()[w]) == 0) {
            type = type_of(model.walls()[w].relation);
            break;
          }
        if (!type) throw std::logic_error("shared chamber facet has no extremal wall on the model");
        dec.adjacency.push_back({a, b, *type});
      }
  }
  return dec;
}

Fan model_of_chamber(const ChamberDecomposition& dec, std::size_t chamber) {
  const Chamber& ch = dec.chambers.at(chamber);
  RawFan raw{dec.dim, {}, {}};
  std::map<std::size_t, std::size_t> reindex;
  for (auto i : ch.model_rays) {
    reindex[i] = raw.rays.size();
    raw.rays.push_back(dec.rays[i]);
  }
  for (const auto& c : ch.model_cones) {
    ConeIndices idx;
    for (auto i : c) idx.push_back(reindex.at(i));
    raw.max_cones.push_back(idx);
  }
  return validate_fan(raw);
}

}  // namespace toric
