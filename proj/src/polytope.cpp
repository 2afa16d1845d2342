#include "toric/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "toric/cone.hpp"
#include "toric/error.hpp"
#include "toric/linalg.hpp"

namespace toric {

RationalPolytope::RationalPolytope(std::size_t dim, std::vector<QVector> normals, QVector offsets)
    : dim_(dim), normals_(std::move(normals)), offsets_(std::move(offsets)) {
  assert(normals_.size() == offsets_.size());
  // Homogenize: (m, t) with <a_i, m> + c_i t >= 0, t >= 0.
  std::vector<QVector> hom;
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    assert(normals_[i].size() == dim_);
    QVector row = normals_[i];
    row.push_back(offsets_[i]);
    hom.push_back(std::move(row));
  }
  QVector t_axis(dim_ + 1);
  t_axis[dim_] = 1;
  hom.push_back(t_axis);
  ConeGenerators gens = generators_of(dim_ + 1, hom);

  if (!gens.lineality.empty()) bounded_ = false;
  for (const auto& r : gens.rays) {
    const Rational& t = r[dim_];
    if (t == 0) {
      bounded_ = false;
      continue;
    }
    QVector v(r.begin(), r.begin() + static_cast<long>(dim_));
    for (auto& x : v) x /= t;
    vertices_.push_back(std::move(v));
  }
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  for (const auto& v : vertices_) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < normals_.size(); ++i)
      if (slack(i, v) == 0) tight.push_back(i);
    incidences_.push_back(std::move(tight));
  }
}

Rational RationalPolytope::slack(std::size_t i, const QVector& m) const {
  return dot(normals_[i], m) + offsets_[i];
}

bool RationalPolytope::contains(const QVector& m) const {
  for (std::size_t i = 0; i < normals_.size(); ++i)
    if (slack(i, m) < 0) return false;
  return true;
}

bool RationalPolytope::contains(const ZVector& m) const { return contains(to_rational(m)); }

long affine_dimension(const std::vector<QVector>& points) {
  if (points.empty()) return -1;
  std::vector<QVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    QVector d(points[0].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return static_cast<long>(rank(diffs, points[0].size()));
}

long RationalPolytope::affine_dim() const { return affine_dimension(vertices_); }

std::vector<std::size_t> RationalPolytope::facet_indices() const {
  const long d = affine_dim();
  std::vector<std::size_t> facets;
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    std::vector<QVector> tight;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (std::binary_search(incidences_[v].begin(), incidences_[v].end(), i)) tight.push_back(vertices_[v]);
    if (tight.size() == vertices_.size()) continue;
    if (affine_dimension(tight) == d - 1) facets.push_back(i);
  }
  return facets;
}

bool RationalPolytope::has_integral_vertices() const {
  for (const auto& v : vertices_)
    for (const auto& x : v)
      if (!is_integral(x)) return false;
  return true;
}

RationalPolytope RationalPolytope::dilate(const Rational& k) const {
  QVector off = offsets_;
  for (auto& c : off) c *= k;
  return RationalPolytope(dim_, normals_, off);
}

namespace {

void require_bounded(const RationalPolytope& p) {
  if (!p.empty() && !p.bounded())
    throw Error(ErrorKind::UnboundedPolytope, "polytope has a nontrivial recession cone");
}

template <class Visit>
void scan_box(const RationalPolytope& p, Visit&& visit) {
  const std::size_t n = p.dim();
  ZVector lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational mn = p.vertices()[0][j], mx = p.vertices()[0][j];
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = ceil(mn);
    hi[j] = floor(mx);
    if (lo[j] > hi[j]) return;
  }
  if (n == 0) {
    if (p.contains(ZVector{})) visit(ZVector{});
    return;
  }
  ZVector x = lo;
  for (;;) {
    if (p.contains(x)) visit(x);
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (x[j] < hi[j]) {
        ++x[j];
        for (std::size_t k = j + 1; k < n; ++k) x[k] = lo[k];
        break;
      }
      if (j == 0) return;
    }
  }
}

}  // namespace

std::vector<ZVector> lattice_points(const RationalPolytope& p) {
  require_bounded(p);
  std::vector<ZVector> pts;
  if (p.empty()) return pts;
  scan_box(p, [&](const ZVector& x) { pts.push_back(x); });
  return pts;  // odometer order is already lexicographic
}

std::size_t count_lattice_points(const RationalPolytope& p) {
  require_bounded(p);
  std::size_t count = 0;
  if (p.empty()) return 0;
  scan_box(p, [&](const ZVector&) { ++count; });
  return count;
}

Rational polytope_volume(const RationalPolytope& p) {
  require_bounded(p);
  const std::size_t n = p.dim();
  if (p.empty() || p.affine_dim() < static_cast<long>(n)) return 0;
  const auto& verts = p.vertices();
  const auto& inc = p.vertex_incidences();
  const std::size_t m = p.normals().size();

  using Face = std::vector<std::size_t>;  // sorted vertex indices
  std::function<std::vector<Face>(const Face&, long)> triangulate = [&](const Face& face, long k) {
    if (k == 0) return std::vector<Face>{face};
    const std::size_t apex = face.front();
    std::set<Face> subfaces;
    for (std::size_t i = 0; i < m; ++i) {
      Face sub;
      for (auto v : face)
        if (std::binary_search(inc[v].begin(), inc[v].end(), i)) sub.push_back(v);
      if (sub.empty() || sub.size() == face.size()) continue;
      if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
      std::vector<QVector> pts;
      for (auto v : sub) pts.push_back(verts[v]);
      if (affine_dimension(pts) == k - 1) subfaces.insert(std::move(sub));
    }
    std::vector<Face> simplices;
    for (const auto& sub : subfaces)
      for (auto s : triangulate(sub, k - 1)) {
        s.push_back(apex);
        simplices.push_back(std::move(s));
      }
    return simplices;
  };

  Face all(verts.size());
  std::iota(all.begin(), all.end(), 0);
  Rational total = 0;
  Integer nfact = 1;
  for (std::size_t i = 2; i <= n; ++i) nfact *= static_cast<unsigned long>(i);
  for (const auto& simplex : triangulate(all, static_cast<long>(n))) {
    QMatrix M(n, n);
    const auto& base = verts[simplex.back()];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) M(r, c) = verts[simplex[r]][c] - base[c];
    total += abs(determinant(M));
  }
  return total / Rational(nfact);
}

}  // namespace toric
