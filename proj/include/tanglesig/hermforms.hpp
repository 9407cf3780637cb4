#pragma once

// Skew-Hermitian spaces, isotropic subspaces and relations, and the integer
// invariants built on them (signature, Maslov index, Meyer cocycle).
//
// Sesquilinear convention: lambda(x, y) = x^* J y, conjugate-linear in x.

#include <vector>

#include "tanglesig/types.hpp"

namespace tanglesig {

struct SignatureResult {
  int plus = 0;
  int minus = 0;
  int null = 0;
  double tol = kDefaultTol;

  int signature() const { return plus - minus; }
  int dimension() const { return plus + minus + null; }
};

/// Counts eigenvalues > tol, < -tol and within [-tol, tol] of (M + M^*)/2.
/// Throws NotHermitian if |M - M^*| > 100 tol, IllConditioned if some |eigenvalue| is in (tol, 10 tol).
SignatureResult hermitian_signature(const CMatrix& m, double tol = kDefaultTol);

class SkewSpace {
 public:
  SkewSpace() = default;
  /// Throws NotHermitian unless form^* = -form within 100 tol.
  explicit SkewSpace(CMatrix form, double tol = kDefaultTol);

  Eigen::Index dim() const { return form_.rows(); }
  const CMatrix& form() const { return form_; }
  /// The same space with the opposite form.
  SkewSpace negated() const;

  bool matches(const SkewSpace& other, double tol = kDefaultTol) const;

 private:
  CMatrix form_;
};

class Subspace {
 public:
  Subspace() = default;
  /// basis must have full column rank (throws DecompositionFailed otherwise).
  Subspace(SkewSpace ambient, CMatrix basis, double tol = kDefaultTol);

  /// Span of arbitrary columns; an orthonormal basis is extracted.
  static Subspace span(SkewSpace ambient, const CMatrix& vectors, double tol = kDefaultTol);
  static Subspace whole(const SkewSpace& ambient);
  static Subspace zero(const SkewSpace& ambient);

  const SkewSpace& ambient() const { return ambient_; }
  const CMatrix& basis() const { return basis_; }
  Eigen::Index dim() const { return basis_.cols(); }

  /// Largest |lambda(b_i, b_j)| over basis columns, relative to the form and basis scale.
  double isotropy_residual() const;
  bool is_isotropic(double tol = 1e-8) const;
  bool is_lagrangian(double tol = 1e-8) const;

  /// Column-space equality within tol.
  bool same_as(const Subspace& other, double tol = kDefaultTol) const;

 private:
  SkewSpace ambient_;
  CMatrix basis_;
};

/// A totally isotropic subspace of (-source) ⊕ target: a morphism source => target.
class IsotropicRelation {
 public:
  IsotropicRelation() = default;
  /// Throws NotIsotropic if the space is not isotropic for (-lambda_src) ⊕ lambda_tgt.
  IsotropicRelation(SkewSpace source, SkewSpace target, const CMatrix& spanning,
                    double tol = kDefaultTol);

  const SkewSpace& source() const { return source_; }
  const SkewSpace& target() const { return target_; }
  const Subspace& space() const { return space_; }

  /// Basis rows belonging to the source / target summand.
  CMatrix source_part() const { return space_.basis().topRows(source_.dim()); }
  CMatrix target_part() const { return space_.basis().bottomRows(target_.dim()); }

  bool same_as(const IsotropicRelation& other, double tol = kDefaultTol) const;

 private:
  SkewSpace source_;
  SkewSpace target_;
  Subspace space_;
};

/// (-source) ⊕ target.
SkewSpace relation_ambient(const SkewSpace& source, const SkewSpace& target);

/// Kernel of x -> basis(V)^* J x.
Subspace annihilator(const Subspace& v, double tol = kDefaultTol);

/// Signature of f(a, b) = lambda(a_2, b) on (L1 + L2) ∩ L3, where a = a_1 + a_2.
/// Throws SpaceMismatch, NotIsotropic, DecompositionFailed.
int maslov(const Subspace& l1, const Subspace& l2, const Subspace& l3, double tol = kDefaultTol);

/// Data behind the Meyer cocycle: E = Im(g1^{-1} - I) ∩ Im(I - g2) and preimages
/// x = (g1^{-1} - I) x1 = (I - g2) x2 of the columns of e.
struct MeyerData {
  CMatrix e;
  CMatrix x1;
  CMatrix x2;
  CMatrix a;  // g1^{-1} - I
  CMatrix b;  // I - g2
};

MeyerData meyer_data(const CMatrix& g1, const CMatrix& g2, double tol = kDefaultTol);

/// Signature of b(x, y) = lambda(x1 + x2, y) for the given preimages.
int meyer_from(const MeyerData& data, const SkewSpace& ambient, double tol = kDefaultTol);

/// Meyer cocycle of two lambda-unitary matrices. Throws NotUnitary.
int meyer(const CMatrix& g1, const CMatrix& g2, const SkewSpace& ambient,
          double tol = kDefaultTol);

/// Residual |g^* J g - J| relative to |J| |g|^2.
double unitarity_residual(const CMatrix& g, const CMatrix& source_form, const CMatrix& target_form);

/// Composite N1 then N2: pairs (h1, h3) with (h1, h2) ∈ N1 and (h2, h3) ∈ N2.
/// Throws SpaceMismatch unless target(N1) == source(N2).
IsotropicRelation compose_relations(const IsotropicRelation& n1, const IsotropicRelation& n2,
                                    double tol = kDefaultTol);

/// Diagonal {(h, h)} in (-H) ⊕ H, the identity morphism of H.
IsotropicRelation diagonal(const SkewSpace& h);

/// Graph {(v, g v)} in (-source) ⊕ target.
IsotropicRelation graph_of(const CMatrix& g, const SkewSpace& source, const SkewSpace& target,
                           double tol = kDefaultTol);

SkewSpace direct_sum(const SkewSpace& x, const SkewSpace& y);
Subspace direct_sum(const Subspace& x, const Subspace& y);
/// (N ⊕ N'): H1 ⊕ H1' => H2 ⊕ H2'.
IsotropicRelation direct_sum(const IsotropicRelation& x, const IsotropicRelation& y);

}  // namespace tanglesig
