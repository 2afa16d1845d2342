#include "toric/cone.hpp"

#include <algorithm>
#include <cassert>

#include "toric/linalg.hpp"

namespace toric {

namespace {

QVector normalized(const QVector& v) { return to_rational(primitive_integer(v)); }

// Two rays of the current cone are adjacent iff the processed constraints
// tight at both have rank (dim - lineality - 2).
bool adjacent(const QVector& p, const QVector& q, const std::vector<QVector>& processed,
              std::size_t target_rank, std::size_t dim) {
  std::vector<QVector> tight;
  for (const auto& a : processed)
    if (dot(a, p) == 0 && dot(a, q) == 0) tight.push_back(a);
  if (tight.size() < target_rank) return false;
  return rank(tight, dim) == target_rank;
}

std::vector<ZVector> canonical_rays(const std::vector<QVector>& rays,
                                    const std::vector<ZVector>& lineality) {
  std::vector<ZVector> out;
  for (const auto& r : rays) {
    QVector p = project_out(r, lineality);
    if (is_zero(p)) continue;
    out.push_back(primitive_integer(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ConeGenerators generators_of(std::size_t dim, const std::vector<QVector>& inequalities,
                             const std::vector<QVector>& equations) {
  std::vector<QVector> constraints;
  for (const auto& e : equations) {
    constraints.push_back(e);
    QVector neg = e;
    for (auto& x : neg) x = -x;
    constraints.push_back(std::move(neg));
  }
  for (const auto& a : inequalities) constraints.push_back(a);

  std::vector<QVector> lineality;
  for (std::size_t i = 0; i < dim; ++i) {
    QVector e(dim);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<QVector> rays;
  std::vector<QVector> processed;

  for (const auto& a : constraints) {
    assert(a.size() == dim);
    if (is_zero(a)) continue;
    auto pivot = std::find_if(lineality.begin(), lineality.end(),
                              [&](const QVector& l) { return dot(a, l) != 0; });
    if (pivot != lineality.end()) {
      QVector l0 = *pivot;
      lineality.erase(pivot);
      Rational al0 = dot(a, l0);
      if (al0 < 0) {
        for (auto& x : l0) x = -x;
        al0 = -al0;
      }
      auto shift = [&](QVector& v) {
        Rational f = dot(a, v) / al0;
        if (f == 0) return;
        for (std::size_t j = 0; j < dim; ++j) v[j] -= f * l0[j];
      };
      for (auto& l : lineality) shift(l);
      for (auto& r : rays) {
        shift(r);
        r = normalized(r);
      }
      rays.push_back(normalized(l0));
      processed.push_back(a);
      continue;
    }

    std::vector<QVector> pos, neg, next;
    std::vector<Rational> pos_val, neg_val;
    for (auto& r : rays) {
      Rational v = dot(a, r);
      if (v > 0) {
        pos.push_back(r);
        pos_val.push_back(v);
      } else if (v < 0) {
        neg.push_back(r);
        neg_val.push_back(v);
      } else {
        next.push_back(r);
      }
    }
    if (neg.empty()) {
      processed.push_back(a);
      continue;
    }
    const std::size_t free_dim = dim - lineality.size();
    const std::size_t target = free_dim >= 2 ? free_dim - 2 : 0;
    for (std::size_t i = 0; i < pos.size(); ++i)
      for (std::size_t k = 0; k < neg.size(); ++k) {
        if (!adjacent(pos[i], neg[k], processed, target, dim)) continue;
        QVector combo(dim);
        for (std::size_t j = 0; j < dim; ++j) combo[j] = pos_val[i] * neg[k][j] - neg_val[k] * pos[i][j];
        if (!is_zero(combo)) next.push_back(normalized(combo));
      }
    for (auto& p : pos) next.push_back(std::move(p));
    rays = std::move(next);
    processed.push_back(a);
  }
  return {std::move(rays), std::move(lineality)};
}

RationalCone RationalCone::from_both(std::size_t dim, const ConeGenerators& gens,
                                     const ConeGenerators& dual_gens) {
  RationalCone c;
  c.dim_ = dim;
  c.lineality_ = canonical_span_basis(gens.lineality, dim);
  c.generators_ = canonical_rays(gens.rays, c.lineality_);
  c.equations_ = canonical_span_basis(dual_gens.lineality, dim);
  c.facets_ = canonical_rays(dual_gens.rays, c.equations_);
  return c;
}

RationalCone RationalCone::from_generators(std::size_t dim, const std::vector<QVector>& generators,
                                           const std::vector<QVector>& lineality) {
  // Dual cone {u : <u,g> >= 0, <u,l> = 0}; its generators are our facets and
  // its lineality our equations. Converting back gives minimal generators.
  ConeGenerators dual = generators_of(dim, generators, lineality);
  ConeGenerators primal = generators_of(dim, dual.rays, dual.lineality);
  return from_both(dim, primal, dual);
}

RationalCone RationalCone::from_generators(std::size_t dim, const std::vector<ZVector>& generators) {
  std::vector<QVector> q;
  for (const auto& g : generators) q.push_back(to_rational(g));
  return from_generators(dim, q);
}

RationalCone RationalCone::from_inequalities(std::size_t dim,
                                             const std::vector<QVector>& inequalities,
                                             const std::vector<QVector>& equations) {
  ConeGenerators primal = generators_of(dim, inequalities, equations);
  ConeGenerators dual = generators_of(dim, primal.rays, primal.lineality);
  return from_both(dim, primal, dual);
}

RationalCone RationalCone::from_inequalities(std::size_t dim,
                                             const std::vector<ZVector>& inequalities) {
  std::vector<QVector> q;
  for (const auto& g : inequalities) q.push_back(to_rational(g));
  return from_inequalities(dim, q);
}

bool RationalCone::contains(const QVector& x) const {
  for (const auto& e : equations_)
    if (dot(x, e) != 0) return false;
  for (const auto& f : facets_)
    if (dot(x, f) < 0) return false;
  return true;
}

bool RationalCone::contains(const RationalCone& other) const {
  for (const auto& g : other.generators_)
    if (!contains(to_rational(g))) return false;
  for (const auto& l : other.lineality_) {
    QVector q = to_rational(l);
    if (!contains(q)) return false;
    for (auto& x : q) x = -x;
    if (!contains(q)) return false;
  }
  return true;
}

bool RationalCone::contains_in_relative_interior(const QVector& x) const {
  for (const auto& e : equations_)
    if (dot(x, e) != 0) return false;
  for (const auto& f : facets_)
    if (dot(x, f) <= 0) return false;
  return true;
}

QVector RationalCone::interior_point() const {
  QVector p(dim_);
  for (const auto& g : generators_)
    for (std::size_t j = 0; j < dim_; ++j) p[j] += g[j];
  return p;
}

RationalCone dual_cone(const RationalCone& cone) {
  std::vector<QVector> gens;
  for (const auto& f : cone.facets()) gens.push_back(to_rational(f));
  std::vector<QVector> lin;
  for (const auto& e : cone.equations()) lin.push_back(to_rational(e));
  return RationalCone::from_generators(cone.dim(), gens, lin);
}

RationalCone intersect(const RationalCone& a, const RationalCone& b) {
  assert(a.dim() == b.dim());
  std::vector<QVector> ineq, eq;
  for (const auto* c : {&a, &b}) {
    for (const auto& f : c->facets()) ineq.push_back(to_rational(f));
    for (const auto& e : c->equations()) eq.push_back(to_rational(e));
  }
  return RationalCone::from_inequalities(a.dim(), ineq, eq);
}

}  // namespace toric
