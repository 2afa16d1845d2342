#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "toric/cone.hpp"
#include "toric/error.hpp"
#include "toric/linalg.hpp"

namespace toric {

namespace {

std::string describe(const ConeIndices& c) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << '}';
  return os.str();
}

QMatrix columns_of(const std::vector<ZVector>& rays, const ConeIndices& idx, std::size_t dim) {
  QMatrix B(dim, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) B(i, j) = rays[idx[j]][i];
  return B;
}

ConeIndices set_intersection(const ConeIndices& a, const ConeIndices& b) {
  ConeIndices out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// cone(a) ∩ cone(b) == cone(a ∩ b), for simplicial maximal cones with dual bases.
bool proper_intersection(const ConeIndices& a, const QMatrix& dual_a,
                         const ConeIndices& b, const QMatrix& dual_b, std::size_t dim) {
  std::vector<QVector> ineq;
  for (std::size_t j = 0; j < dim; ++j) {
    ineq.push_back(dual_a.row(j));
    ineq.push_back(dual_b.row(j));
  }
  ConeGenerators meet = generators_of(dim, ineq);
  if (!meet.lineality.empty()) return false;
  ConeIndices common = set_intersection(a, b);
  for (const auto& g : meet.rays) {
    QVector coords = dual_a * g;
    for (std::size_t j = 0; j < dim; ++j)
      if (coords[j] != 0 && !std::binary_search(common.begin(), common.end(), a[j])) return false;
  }
  return true;
}

}  // namespace

Fan validate_fan(const RawFan& raw) {
  const std::size_t n = raw.dim;
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "fan dimension must be positive");

  for (std::size_t i = 0; i < raw.rays.size(); ++i) {
    if (raw.rays[i].size() != n)
      throw Error(ErrorKind::DimensionMismatch, "ray " + std::to_string(i) + " has wrong length");
    if (!is_primitive(raw.rays[i]))
      throw Error(ErrorKind::NonPrimitiveRay, "ray " + std::to_string(i) + " is zero or not primitive");
  }
  for (std::size_t i = 0; i < raw.rays.size(); ++i)
    for (std::size_t j = i + 1; j < raw.rays.size(); ++j)
      if (raw.rays[i] == raw.rays[j])
        throw Error(ErrorKind::BadFaceIntersection,
                    "rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

  Fan fan;
  fan.dim_ = n;
  fan.rays_ = raw.rays;
  std::vector<bool> used(raw.rays.size(), false);
  for (auto cone : raw.max_cones) {
    std::sort(cone.begin(), cone.end());
    bool bad = cone.size() != n || std::adjacent_find(cone.begin(), cone.end()) != cone.end();
    for (auto idx : cone) bad = bad || idx >= raw.rays.size();
    if (bad) throw Error(ErrorKind::DegenerateCone, describe(cone) + " is not a set of " + std::to_string(n) + " ray indices");
    if (rank(columns_of(raw.rays, cone, n)) != n)
      throw Error(ErrorKind::DegenerateCone, describe(cone) + " has linearly dependent rays");
    for (auto idx : cone) used[idx] = true;
    fan.cones_.push_back(std::move(cone));
  }
  std::sort(fan.cones_.begin(), fan.cones_.end());
  if (std::adjacent_find(fan.cones_.begin(), fan.cones_.end()) != fan.cones_.end())
    throw Error(ErrorKind::BadFaceIntersection, "maximal cone listed twice");
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) throw Error(ErrorKind::DegenerateCone, "ray " + std::to_string(i) + " lies in no maximal cone");

  for (const auto& cone : fan.cones_) fan.dual_bases_.push_back(*inverse(columns_of(fan.rays_, cone, n)));

  const auto& cones = fan.cones_;
  for (std::size_t a = 0; a < cones.size(); ++a)
    for (std::size_t b = a + 1; b < cones.size(); ++b)
      if (!proper_intersection(cones[a], fan.dual_bases_[a], cones[b], fan.dual_bases_[b], n))
        throw Error(ErrorKind::BadFaceIntersection, describe(cones[a]) + " and " + describe(cones[b]) +
                                                        " do not meet in a common face");

  // Each facet of each maximal cone must have exactly two cofaces.
  std::map<ConeIndices, std::vector<std::pair<std::size_t, std::size_t>>> cofaces;
  for (std::size_t c = 0; c < cones.size(); ++c)
    for (std::size_t drop = 0; drop < n; ++drop) {
      ConeIndices facet;
      for (std::size_t j = 0; j < n; ++j)
        if (j != drop) facet.push_back(cones[c][j]);
      cofaces[facet].emplace_back(c, cones[c][drop]);
    }
  for (const auto& [facet, owners] : cofaces)
    if (owners.size() != 2)
      throw Error(ErrorKind::NotComplete, "wall " + describe(facet) + " has " + std::to_string(owners.size()) +
                                              " adjacent maximal cone(s)");

  std::vector<std::size_t> parent(cones.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [facet, owners] : cofaces) parent[find(owners[0].first)] = find(owners[1].first);
  for (std::size_t c = 0; c < cones.size(); ++c)
    if (find(c) != find(0)) throw Error(ErrorKind::NotComplete, "support is not connected");

  for (const auto& [facet, owners] : cofaces) {
    Wall w;
    w.shared = facet;
    w.cones = {owners[0].first, owners[1].first};
    w.opposite = {owners[0].second, owners[1].second};
    ConeIndices involved = {w.opposite[0], w.opposite[1]};
    involved.insert(involved.end(), facet.begin(), facet.end());
    auto kernel = nullspace(columns_of(fan.rays_, involved, n));
    if (kernel.size() != 1) throw Error(ErrorKind::BadFaceIntersection, "wall " + describe(facet) + " is degenerate");
    ZVector rel = primitive_integer(kernel[0]);
    if (rel[0] < 0)
      for (auto& x : rel) x = -x;
    if (rel[0] <= 0 || rel[1] <= 0)
      throw Error(ErrorKind::BadFaceIntersection, "cones adjacent along " + describe(facet) + " overlap");
    w.relation.assign(fan.rays_.size(), 0);
    for (std::size_t k = 0; k < involved.size(); ++k) w.relation[involved[k]] = rel[k];
    fan.walls_.push_back(std::move(w));
  }
  return fan;
}

std::size_t Fan::containing_cone(const ZVector& v, QVector* coords) const {
  if (v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from fan dimension");
  QVector q = to_rational(v);
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    QVector lambda = dual_bases_[c] * q;
    if (std::all_of(lambda.begin(), lambda.end(), [](const Rational& x) { return x >= 0; })) {
      if (coords) *coords = std::move(lambda);
      return c;
    }
  }
  throw Error(ErrorKind::NotInSupport, "vector lies outside the support of the fan");
}

IntMatrix Fan::ray_matrix() const { return IntMatrix::from_rows(rays_, dim_); }

bool Fan::is_smooth() const {
  for (const auto& c : cones_)
    if (cone_multiplicity(*this, c) != 1) return false;
  return true;
}

Integer cone_multiplicity(const Fan& fan, const ConeIndices& cone) {
  ConeIndices sorted = cone;
  std::sort(sorted.begin(), sorted.end());
  bool is_face = std::any_of(fan.max_cones().begin(), fan.max_cones().end(), [&](const ConeIndices& m) {
    return std::includes(m.begin(), m.end(), sorted.begin(), sorted.end());
  });
  if (!is_face) throw Error(ErrorKind::DegenerateCone, describe(sorted) + " is not a cone of the fan");
  if (sorted.empty()) return 1;
  std::vector<ZVector> rows;
  for (auto i : sorted) rows.push_back(fan.ray(i));
  SmithForm snf = smith_normal_form(IntMatrix::from_rows(rows, fan.dim()));
  Integer mult = 1;
  for (const auto& d : snf.invariants()) mult *= d;
  return mult;
}

const std::vector<Wall>& walls(const Fan& fan) { return fan.walls(); }

std::optional<std::size_t> find_wall(const Fan& fan, const ConeIndices& shared) {
  ConeIndices key = shared;
  std::sort(key.begin(), key.end());
  for (std::size_t w = 0; w < fan.walls().size(); ++w)
    if (fan.walls()[w].shared == key) return w;
  return std::nullopt;
}

}  // namespace toric
