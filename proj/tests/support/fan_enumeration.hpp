#pragma once

// Brute-force enumeration of complete simplicial fans on a fixed ray set,
// every ray used. Cones are glued across walls; a finished candidate is kept
// when a handful of generic points each lie in exactly one cone, so the
// search never relies on the library's face-intersection test.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "toric/fan.hpp"

namespace toric::oracle {

namespace detail {

// Coordinates of x in the basis of the cone's rays (Cramer's rule).
inline QVector cone_coordinates(const std::vector<ZVector>& rays, const ConeIndices& cone, const QVector& x) {
  const std::size_t n = cone.size();
  IntMatrix B(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) B(i, j) = rays[cone[j]][i];
  Rational det = Rational(laplace_det(B));
  QVector out(n);
  for (std::size_t j = 0; j < n; ++j) {
    QMatrix M = to_rational(B);
    for (std::size_t i = 0; i < n; ++i) M(i, j) = x[i];
    IntMatrix num(n, n);
    Integer den = 1;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) den = lcm(den, M(r, c).get_den());
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) num(r, c) = Integer(M(r, c) * den);
    Rational d = Rational(laplace_det(num));
    for (std::size_t k = 0; k < n; ++k) d /= den;
    out[j] = d / det;
  }
  return out;
}

inline bool strictly_inside(const std::vector<ZVector>& rays, const ConeIndices& cone, const QVector& x) {
  auto c = cone_coordinates(rays, cone, x);
  return std::all_of(c.begin(), c.end(), [](const Rational& q) { return q > 0; });
}

// Sign of <normal of wall hyperplane, x>, normal fixed by the cone's own apex.
inline int side(const std::vector<ZVector>& rays, const ConeIndices& wall, const ZVector& x) {
  const std::size_t n = wall.size() + 1;
  IntMatrix B(n, n);
  for (std::size_t j = 0; j < wall.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) B(i, j) = rays[wall[j]][i];
  for (std::size_t i = 0; i < n; ++i) B(i, n - 1) = x[i];
  Integer d = laplace_det(B);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

}  // namespace detail

inline std::vector<std::vector<ConeIndices>> complete_fans_on(std::size_t n, const std::vector<ZVector>& rays) {
  const std::size_t r = rays.size();
  std::vector<ConeIndices> candidates;
  subsets(r, n, [&](const std::vector<std::size_t>& idx) {
    IntMatrix B(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) B(i, j) = rays[idx[j]][i];
    if (laplace_det(B) == 0) return;
    for (std::size_t k = 0; k < r; ++k) {
      if (std::find(idx.begin(), idx.end(), k) != idx.end()) continue;
      auto c = detail::cone_coordinates(rays, idx, to_rational(rays[k]));
      if (std::all_of(c.begin(), c.end(), [](const Rational& q) { return q >= 0; })) return;
    }
    candidates.push_back(idx);
  });

  // generic probe points: coordinates with unrelated large prime parts
  const long primes[] = {1000003, 999983, 1000033, 999979, 1000037, 999961, 1000039, 999953};
  std::vector<QVector> probes;
  for (std::size_t s = 0; s < 5; ++s) {
    QVector p;
    for (std::size_t i = 0; i < n; ++i) {
      long num = primes[(i + s) % 8] + static_cast<long>(31 * s + 7 * i);
      long den = primes[(i + 2 * s + 3) % 8];
      p.push_back(make_rational(((i + s) % 3 == 0) ? -num : num, den));
    }
    probes.push_back(p);
  }

  std::set<std::vector<ConeIndices>> found;
  std::vector<ConeIndices> chosen;
  std::map<ConeIndices, std::vector<std::size_t>> cofaces;  // wall -> chosen cone positions

  auto walls_of = [&](const ConeIndices& c) {
    std::vector<std::pair<ConeIndices, std::size_t>> out;
    for (std::size_t drop = 0; drop < c.size(); ++drop) {
      ConeIndices w;
      for (std::size_t k = 0; k < c.size(); ++k)
        if (k != drop) w.push_back(c[k]);
      out.push_back({w, c[drop]});
    }
    return out;
  };

  std::function<void()> search = [&]() {
    // first wall with a single coface
    const ConeIndices* open = nullptr;
    for (const auto& [w, cs] : cofaces)
      if (cs.size() == 1) {
        open = &w;
        break;
      }
    if (!open) {
      std::set<std::size_t> used;
      for (const auto& c : chosen) used.insert(c.begin(), c.end());
      if (used.size() != r) return;
      for (const auto& p : probes) {
        std::size_t hits = 0;
        for (const auto& c : chosen) hits += detail::strictly_inside(rays, c, p);
        if (hits != 1) return;
      }
      auto sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      found.insert(sorted);
      return;
    }
    const ConeIndices wall = *open;
    const ConeIndices& existing = chosen[cofaces[wall][0]];
    std::size_t apex = 0;
    for (auto i : existing)
      if (!std::binary_search(wall.begin(), wall.end(), i)) apex = i;
    const int apex_side = detail::side(rays, wall, rays[apex]);
    for (const auto& c : candidates) {
      if (!std::includes(c.begin(), c.end(), wall.begin(), wall.end())) continue;
      if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
      std::size_t other = 0;
      for (auto i : c)
        if (!std::binary_search(wall.begin(), wall.end(), i)) other = i;
      if (detail::side(rays, wall, rays[other]) != -apex_side) continue;
      bool ok = true;
      for (const auto& [w, a] : walls_of(c)) {
        auto it = cofaces.find(w);
        if (it != cofaces.end() && it->second.size() >= 2) ok = false;
      }
      if (!ok) continue;
      chosen.push_back(c);
      for (const auto& [w, a] : walls_of(c)) cofaces[w].push_back(chosen.size() - 1);
      search();
      for (const auto& [w, a] : walls_of(c)) {
        auto& v = cofaces[w];
        v.pop_back();
        if (v.empty()) cofaces.erase(w);
      }
      chosen.pop_back();
    }
  };

  for (const auto& c : candidates) {
    if (!detail::strictly_inside(rays, c, probes[0])) continue;
    chosen = {c};
    cofaces.clear();
    for (const auto& [w, a] : walls_of(c)) cofaces[w].push_back(0);
    search();
  }
  return {found.begin(), found.end()};
}

}  // namespace toric::oracle
