#pragma once

// Reduced Burau and coloured Gassner representations evaluated at a torus
// point, and the twisted intersection form on the punctured disk.
//
// The free group of the disk D_n is generated by loops x_1..x_n around the
// punctures; the boundary loop is x_1 x_2 ... x_n. sigma_i acts by
// x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i.

#include <vector>

#include "tanglesig/braidtangle.hpp"
#include "tanglesig/hermforms.hpp"

namespace tanglesig {

/// Free-group words: letter k > 0 is x_k, k < 0 is x_|k|^{-1}.
using FreeWord = std::vector<int>;

FreeWord free_reduce(const FreeWord& w);
FreeWord free_inverse(const FreeWord& w);

struct PuncturedDiskModel {
  ColouredObject object;
  Omega omega;
  CMatrix boundary_row;  // 1 x n, entries t_j - 1

  /// Throws OmegaOnForbiddenLocus.
  PuncturedDiskModel(ColouredObject object, Omega omega, double tol = kDefaultTol);

  Eigen::Index punctures() const { return boundary_row.cols(); }
  /// t_j = omega_{|c(j)|}^{sgn c(j)}.
  std::vector<cplx> values() const;
  /// n x (n-1) basis of ker(boundary_row): columns e_j - kappa_j e_{j+1}.
  CMatrix reduced_basis() const;
};

struct FreeGroupAutomorphism {
  std::vector<FreeWord> images;  // images[j] = image of x_{j+1}

  static FreeGroupAutomorphism identity(int n);
  /// Apply this, then other.
  FreeGroupAutomorphism then(const FreeGroupAutomorphism& other) const;
  /// The image of an arbitrary word.
  FreeWord apply(const FreeWord& w) const;

  bool operator==(const FreeGroupAutomorphism&) const = default;
};

FreeGroupAutomorphism braid_to_automorphism(const ColouredBraid& b);

/// D(i, j) = d(image of x_j)/dx_i evaluated at x_k -> t_k of the model.
CMatrix fox_jacobian(const FreeGroupAutomorphism& a, const PuncturedDiskModel& model);

/// Fox derivatives of one word: entry i = dw/dx_{i+1} evaluated at values.
CVector fox_gradient(const FreeWord& w, const std::vector<cplx>& values);

struct EvaluatedRep {
  CMatrix matrix;
  PuncturedDiskModel source_model;
  PuncturedDiskModel target_model;
};

/// The reduced coloured Gassner matrix in the reduced bases (reduced Burau for mu = 1).
EvaluatedRep reduced_rep(const ColouredBraid& b, const Omega& omega, double tol = kDefaultTol);

struct DiskForm {
  PuncturedDiskModel model;
  CMatrix form;

  SkewSpace space() const { return SkewSpace(form); }
};

/// The twisted intersection form on the reduced basis. Defined on the whole
/// forbidden-locus complement; degenerate exactly when I_c(omega) = 1.
DiskForm intersection_form(const ColouredObject& c, const Omega& omega, double tol = kDefaultTol);

/// The invariant form of B_c. Throws AdmissibilityViolated when I_c(omega) = 1 and
/// NonUniqueForm when the invariance system does not have a one-dimensional real solution space.
DiskForm invariant_form(const ColouredObject& c, const Omega& omega, double tol = kDefaultTol);

/// Words generating the coloured braid group B_c: pure generators and, for
/// positions of equal signed colour, lifted transpositions.
std::vector<ColouredBraid> coloured_braid_generators(const ColouredObject& c);

/// Graph of r; throws NotUnitary.
IsotropicRelation graph_relation(const EvaluatedRep& r, const DiskForm& source,
                                 const DiskForm& target, double tol = kDefaultTol);

}  // namespace tanglesig
