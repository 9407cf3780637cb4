#pragma once

// Dense complex helpers shared by the form and representation code. All rank
// decisions use the threshold tol * max(sigma_max, 1) * max(rows, cols).

#include "tanglesig/types.hpp"

namespace tanglesig::linalg {

double rank_threshold(double sigma_max, Eigen::Index rows, Eigen::Index cols, double tol);

Eigen::Index numerical_rank(const CMatrix& m, double tol = kDefaultTol);

/// Orthonormal basis of the column space.
CMatrix column_space(const CMatrix& m, double tol = kDefaultTol);

/// Orthonormal basis of the kernel (cols x k).
CMatrix null_space(const CMatrix& m, double tol = kDefaultTol);

/// Orthonormal basis of span(a) ∩ span(b); both must have the same row count.
CMatrix intersect(const CMatrix& a, const CMatrix& b, double tol = kDefaultTol);

/// span(b) ⊆ span(a).
bool contains(const CMatrix& a, const CMatrix& b, double tol = kDefaultTol);

/// Mutual containment of column spaces.
bool same_span(const CMatrix& a, const CMatrix& b, double tol = kDefaultTol);

/// Minimum-norm least-squares solution x of a x = rhs.
CMatrix solve_least_squares(const CMatrix& a, const CMatrix& rhs, double tol = kDefaultTol);

/// Block diagonal [a 0; 0 b].
CMatrix block_diag(const CMatrix& a, const CMatrix& b);

/// Largest absolute entry (0 for empty matrices).
double max_abs(const CMatrix& m);

}  // namespace tanglesig::linalg
