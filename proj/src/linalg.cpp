#include "toric/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace toric {

QMatrix to_rational(const IntMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j);
  return q;
}

ZVector SmithForm::invariants() const {
  std::size_t k = std::min(S.rows(), S.cols());
  ZVector d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = S(i, i);
  return d;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Smallest |S(i,j)| != 0 in the trailing block starting at (t,t).
bool find_pivot(const IntMatrix& S, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < S.rows(); ++i)
    for (std::size_t j = t; j < S.cols(); ++j) {
      if (S(i, j) == 0) continue;
      Integer a = abs(S(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  IntMatrix S = A;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t pi = 0, pj = 0;
    if (!find_pivot(S, t, pi, pj)) break;
    S.swap_rows(t, pi);
    U.swap_rows(t, pi);
    S.swap_cols(t, pj);
    V.swap_cols(t, pj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Integer q = floor_div(S(i, t), S(t, t));
        S.add_row(i, t, -q);
        U.add_row(i, t, -q);
        if (S(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Integer q = floor_div(S(t, j), S(t, t));
        S.add_col(j, t, -q);
        V.add_col(j, t, -q);
        if (S(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // Bring the smallest remainder in row/column t to the pivot.
        std::size_t bi = t, bj = t;
        Integer best = abs(S(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (S(i, t) != 0 && abs(S(i, t)) < best) {
            best = abs(S(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(t, j) != 0 && abs(S(t, j)) < best) {
            best = abs(S(t, j));
            bi = t;
            bj = j;
          }
        S.swap_rows(t, bi);
        U.swap_rows(t, bi);
        S.swap_cols(t, bj);
        V.swap_cols(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j)
          if (S(i, j) % S(t, t) != 0) {
            S.add_row(t, i, 1);
            U.add_row(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
  }
  return {std::move(U), std::move(S), std::move(V)};
}

HermiteForm hermite_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  IntMatrix H = A;
  IntMatrix G = IntMatrix::identity(m);
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    // Euclid on column j among rows r..m-1.
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (H(i, j) != 0 && (best == m || abs(H(i, j)) < abs(H(best, j)))) best = i;
      if (best == m) break;
      H.swap_rows(r, best);
      G.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (H(i, j) == 0) continue;
        Integer q = floor_div(H(i, j), H(r, j));
        H.add_row(i, r, -q);
        G.add_row(i, r, -q);
        if (H(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, j) == 0) continue;
    if (H(r, j) < 0) {
      H.negate_row(r);
      G.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(H(i, j), H(r, j));
      if (q == 0) continue;
      H.add_row(i, r, -q);
      G.add_row(i, r, -q);
    }
    ++r;
  }
  return {std::move(G), std::move(H)};
}

Integer determinant(const IntMatrix& A) {
  assert(A.rows() == A.cols());
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      M.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j));
        mpz_divexact(M(i, j).get_mpz_t(), M(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

std::vector<std::size_t> row_reduce(QMatrix& A) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < A.cols() && r < A.rows(); ++j) {
    std::size_t p = r;
    while (p < A.rows() && A(p, j) == 0) ++p;
    if (p == A.rows()) continue;
    A.swap_rows(r, p);
    Rational inv = 1 / A(r, j);
    for (std::size_t k = 0; k < A.cols(); ++k) A(r, k) *= inv;
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (i == r || A(i, j) == 0) continue;
      A.add_row(i, r, -A(i, j));
    }
    pivots.push_back(j);
    ++r;
  }
  return pivots;
}

Rational determinant(const QMatrix& A) {
  assert(A.rows() == A.cols());
  QMatrix M = A;
  Rational det = 1;
  const std::size_t n = M.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && M(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      M.swap_rows(k, p);
      det = -det;
    }
    det *= M(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (M(i, k) == 0) continue;
      M.add_row(i, k, -M(i, k) / M(k, k));
    }
  }
  return det;
}

std::size_t rank(const QMatrix& A) {
  QMatrix M = A;
  return row_reduce(M).size();
}

std::size_t rank(const std::vector<QVector>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  return rank(QMatrix::from_rows(rows, cols));
}

std::vector<QVector> nullspace(const QMatrix& A) {
  QMatrix R = A;
  auto pivots = row_reduce(R);
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < A.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector x(A.cols());
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -R(i, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<QMatrix> inverse(const QMatrix& A) {
  assert(A.rows() == A.cols());
  const std::size_t n = A.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<QVector> solve_square(const QMatrix& A, const QVector& b) {
  auto inv = inverse(A);
  if (!inv) return std::nullopt;
  return (*inv) * b;
}

std::vector<ZVector> canonical_span_basis(const std::vector<QVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  QMatrix M = QMatrix::from_rows(vectors, dim);
  auto pivots = row_reduce(M);
  std::vector<ZVector> basis;
  for (std::size_t i = 0; i < pivots.size(); ++i) basis.push_back(primitive_integer(M.row(i)));
  return basis;
}

QVector project_out(const QVector& v, const std::vector<ZVector>& basis) {
  if (basis.empty()) return v;
  const std::size_t k = basis.size();
  std::vector<QVector> qb;
  for (const auto& b : basis) qb.push_back(to_rational(b));
  QMatrix gram(k, k);
  QVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = dot(qb[i], v);
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(qb[i], qb[j]);
  }
  auto coeffs = solve_square(gram, rhs);
  assert(coeffs);
  QVector out = v;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[j] -= (*coeffs)[i] * qb[i][j];
  return out;
}

}  // namespace toric
