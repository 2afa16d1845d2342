#pragma once

#include <optional>
#include <vector>

#include "toric/matrix.hpp"

namespace toric {

/// U * A * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  /// The diagonal of S (length min(rows, cols)).
  ZVector invariants() const;
};

SmithForm smith_normal_form(const IntMatrix& A);

/// Row-style Hermite normal form: G * A = H with G unimodular, H in reduced
/// row echelon form over Z (positive pivots, entries above each pivot reduced
/// into [0, pivot)). Zero rows are kept at the bottom.
struct HermiteForm {
  IntMatrix G;
  IntMatrix H;
};

HermiteForm hermite_normal_form(const IntMatrix& A);

Integer determinant(const IntMatrix& A);
Rational determinant(const QMatrix& A);

std::size_t rank(const QMatrix& A);
std::size_t rank(const std::vector<QVector>& rows, std::size_t cols);

/// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> row_reduce(QMatrix& A);

/// Basis of {x : A x = 0}.
std::vector<QVector> nullspace(const QMatrix& A);

/// Unique solution of a square nonsingular system; nullopt if singular.
std::optional<QVector> solve_square(const QMatrix& A, const QVector& b);

/// Inverse of a square nonsingular matrix; nullopt if singular.
std::optional<QMatrix> inverse(const QMatrix& A);

/// Canonical basis (primitive integer rows of the RREF) of the row span.
std::vector<ZVector> canonical_span_basis(const std::vector<QVector>& vectors, std::size_t dim);

/// Orthogonal projection of v onto the complement of span(basis).
QVector project_out(const QVector& v, const std::vector<ZVector>& basis);

}  // namespace toric
