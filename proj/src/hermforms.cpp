#include "tanglesig/hermforms.hpp"

#include <algorithm>
#include <cmath>

#include "tanglesig/error.hpp"
#include "tanglesig/linalg.hpp"

namespace tanglesig {

namespace {

constexpr double kResidualTol = 1e-8;

double scale_of(const CMatrix& m) { return std::max(1.0, linalg::max_abs(m)); }

void require_same_ambient(const SkewSpace& a, const SkewSpace& b, const char* what) {
  if (!a.matches(b)) throw Error(ErrorKind::SpaceMismatch, what);
}

}  // namespace

SignatureResult hermitian_signature(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NotHermitian, "matrix is not square");
  SignatureResult out;
  out.tol = tol;
  if (m.rows() == 0) return out;
  const double skew = linalg::max_abs(m - m.adjoint());
  if (skew > 100.0 * tol * scale_of(m)) {
    throw Error(ErrorKind::NotHermitian,
                "matrix differs from its adjoint by " + std::to_string(skew));
  }
  const CMatrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h, Eigen::EigenvaluesOnly);
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    const double v = eig.eigenvalues()(i);
    const double a = std::abs(v);
    if (a > tol && a < 10.0 * tol) {
      throw Error(ErrorKind::IllConditioned,
                  "eigenvalue " + std::to_string(v) + " inside the rejection band");
    }
    if (v > tol)
      ++out.plus;
    else if (v < -tol)
      ++out.minus;
    else
      ++out.null;
  }
  return out;
}

SkewSpace::SkewSpace(CMatrix form, double tol) : form_(std::move(form)) {
  if (form_.rows() != form_.cols()) throw Error(ErrorKind::NotHermitian, "form is not square");
  if (linalg::max_abs(form_ + form_.adjoint()) > 100.0 * tol * scale_of(form_)) {
    throw Error(ErrorKind::NotHermitian, "form is not skew-Hermitian");
  }
}

SkewSpace SkewSpace::negated() const {
  SkewSpace out;
  out.form_ = -form_;
  return out;
}

bool SkewSpace::matches(const SkewSpace& other, double tol) const {
  if (dim() != other.dim()) return false;
  const double eps = std::max(tol, kResidualTol);
  return linalg::max_abs(form_ - other.form_) <= eps * std::max(scale_of(form_), scale_of(other.form_));
}

Subspace::Subspace(SkewSpace ambient, CMatrix basis, double tol)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {
  if (basis_.rows() != ambient_.dim()) {
    throw Error(ErrorKind::SpaceMismatch, "basis rows do not match the ambient dimension");
  }
  if (linalg::numerical_rank(basis_, tol) != basis_.cols()) {
    throw Error(ErrorKind::DecompositionFailed, "basis is not of full column rank");
  }
}

Subspace Subspace::span(SkewSpace ambient, const CMatrix& vectors, double tol) {
  if (vectors.rows() != ambient.dim()) {
    throw Error(ErrorKind::SpaceMismatch, "vector length does not match the ambient dimension");
  }
  Subspace out;
  out.basis_ = linalg::column_space(vectors, tol);
  out.ambient_ = std::move(ambient);
  return out;
}

Subspace Subspace::whole(const SkewSpace& ambient) {
  return Subspace(ambient, CMatrix::Identity(ambient.dim(), ambient.dim()));
}

Subspace Subspace::zero(const SkewSpace& ambient) {
  Subspace out;
  out.ambient_ = ambient;
  out.basis_ = CMatrix(ambient.dim(), 0);
  return out;
}

double Subspace::isotropy_residual() const {
  if (dim() == 0) return 0.0;
  const CMatrix gram = basis_.adjoint() * ambient_.form() * basis_;
  const double b = linalg::max_abs(basis_);
  return linalg::max_abs(gram) / (scale_of(ambient_.form()) * std::max(1.0, b * b));
}

bool Subspace::is_isotropic(double tol) const { return isotropy_residual() <= tol; }

bool Subspace::is_lagrangian(double tol) const {
  return is_isotropic(tol) && 2 * dim() == ambient_.dim();
}

bool Subspace::same_as(const Subspace& other, double tol) const {
  return ambient_.matches(other.ambient_) && linalg::same_span(basis_, other.basis_, tol);
}

SkewSpace relation_ambient(const SkewSpace& source, const SkewSpace& target) {
  return SkewSpace(linalg::block_diag(-source.form(), target.form()));
}

IsotropicRelation::IsotropicRelation(SkewSpace source, SkewSpace target, const CMatrix& spanning,
                                     double tol)
    : source_(std::move(source)), target_(std::move(target)) {
  space_ = Subspace::span(relation_ambient(source_, target_), spanning, tol);
  if (!space_.is_isotropic(kResidualTol)) {
    throw Error(ErrorKind::NotIsotropic,
                "relation residual " + std::to_string(space_.isotropy_residual()));
  }
}

bool IsotropicRelation::same_as(const IsotropicRelation& other, double tol) const {
  return source_.matches(other.source_) && target_.matches(other.target_) &&
         space_.same_as(other.space_, tol);
}

Subspace annihilator(const Subspace& v, double tol) {
  const SkewSpace& h = v.ambient();
  if (v.dim() == 0) return Subspace::whole(h);
  const CMatrix pairing = v.basis().adjoint() * h.form();
  return Subspace(h, linalg::null_space(pairing, tol), tol);
}

int maslov(const Subspace& l1, const Subspace& l2, const Subspace& l3, double tol) {
  require_same_ambient(l1.ambient(), l2.ambient(), "maslov: L1 and L2 live in different spaces");
  require_same_ambient(l1.ambient(), l3.ambient(), "maslov: L1 and L3 live in different spaces");
  for (const Subspace* l : {&l1, &l2, &l3}) {
    if (!l->is_isotropic(kResidualTol)) {
      throw Error(ErrorKind::NotIsotropic,
                  "maslov: residual " + std::to_string(l->isotropy_residual()));
    }
  }
  const Eigen::Index dim = l1.ambient().dim();
  CMatrix sum(dim, l1.dim() + l2.dim());
  sum << l1.basis(), l2.basis();
  const CMatrix v = linalg::intersect(sum, l3.basis(), tol);
  if (v.cols() == 0) return 0;
  const CMatrix coef = linalg::solve_least_squares(sum, v, tol);
  if (linalg::max_abs(sum * coef - v) > kResidualTol * std::max(1.0, linalg::max_abs(sum))) {
    throw Error(ErrorKind::DecompositionFailed, "maslov: a = a1 + a2 has no solution");
  }
  const CMatrix a2 = l2.basis() * coef.bottomRows(l2.dim());
  const CMatrix f = a2.adjoint() * l1.ambient().form() * v;
  return hermitian_signature(f, tol).signature();
}

MeyerData meyer_data(const CMatrix& g1, const CMatrix& g2, double tol) {
  const Eigen::Index n = g1.rows();
  MeyerData d;
  d.a = g1.inverse() - CMatrix::Identity(n, n);
  d.b = CMatrix::Identity(n, n) - g2;
  d.e = linalg::intersect(d.a, d.b, tol);
  d.x1 = linalg::solve_least_squares(d.a, d.e, tol);
  d.x2 = linalg::solve_least_squares(d.b, d.e, tol);
  return d;
}

int meyer_from(const MeyerData& data, const SkewSpace& ambient, double tol) {
  if (data.e.cols() == 0) return 0;
  const double scale = std::max(1.0, linalg::max_abs(data.e));
  if (linalg::max_abs(data.a * data.x1 - data.e) > kResidualTol * scale ||
      linalg::max_abs(data.b * data.x2 - data.e) > kResidualTol * scale) {
    throw Error(ErrorKind::DecompositionFailed, "meyer: preimages do not reproduce E");
  }
  const CMatrix b = (data.x1 + data.x2).adjoint() * ambient.form() * data.e;
  return hermitian_signature(b, tol).signature();
}

double unitarity_residual(const CMatrix& g, const CMatrix& source_form,
                          const CMatrix& target_form) {
  const CMatrix diff = g.adjoint() * target_form * g - source_form;
  const double gs = std::max(1.0, linalg::max_abs(g));
  return linalg::max_abs(diff) /
         (std::max(scale_of(source_form), scale_of(target_form)) * gs * gs);
}

int meyer(const CMatrix& g1, const CMatrix& g2, const SkewSpace& ambient, double tol) {
  const Eigen::Index n = ambient.dim();
  if (g1.rows() != n || g1.cols() != n || g2.rows() != n || g2.cols() != n) {
    throw Error(ErrorKind::SpaceMismatch, "meyer: matrix size does not match the form");
  }
  for (const CMatrix* g : {&g1, &g2}) {
    const double r = unitarity_residual(*g, ambient.form(), ambient.form());
    if (r > kResidualTol) {
      throw Error(ErrorKind::NotUnitary, "meyer: unitarity residual " + std::to_string(r));
    }
  }
  return meyer_from(meyer_data(g1, g2, tol), ambient, tol);
}

IsotropicRelation compose_relations(const IsotropicRelation& n1, const IsotropicRelation& n2,
                                    double tol) {
  require_same_ambient(n1.target(), n2.source(), "compose: target and source differ");
  const CMatrix p1 = n1.source_part();
  const CMatrix q1 = n1.target_part();
  const CMatrix p2 = n2.source_part();
  const CMatrix q2 = n2.target_part();
  CMatrix match(q1.rows(), q1.cols() + p2.cols());
  match << q1, -p2;
  const CMatrix kernel = linalg::null_space(match, tol);
  CMatrix spanning(p1.rows() + q2.rows(), kernel.cols());
  spanning << p1 * kernel.topRows(q1.cols()), q2 * kernel.bottomRows(p2.cols());
  return IsotropicRelation(n1.source(), n2.target(), spanning, tol);
}

IsotropicRelation graph_of(const CMatrix& g, const SkewSpace& source, const SkewSpace& target,
                           double tol) {
  if (g.cols() != source.dim() || g.rows() != target.dim()) {
    throw Error(ErrorKind::SpaceMismatch, "graph: matrix size does not match the spaces");
  }
  const double r = unitarity_residual(g, source.form(), target.form());
  if (r > kResidualTol) {
    throw Error(ErrorKind::NotUnitary, "graph: unitarity residual " + std::to_string(r));
  }
  CMatrix spanning(source.dim() + target.dim(), source.dim());
  spanning << CMatrix::Identity(source.dim(), source.dim()), g;
  return IsotropicRelation(source, target, spanning, tol);
}

IsotropicRelation diagonal(const SkewSpace& h) {
  return graph_of(CMatrix::Identity(h.dim(), h.dim()), h, h);
}

SkewSpace direct_sum(const SkewSpace& x, const SkewSpace& y) {
  return SkewSpace(linalg::block_diag(x.form(), y.form()));
}

Subspace direct_sum(const Subspace& x, const Subspace& y) {
  return Subspace(direct_sum(x.ambient(), y.ambient()), linalg::block_diag(x.basis(), y.basis()));
}

IsotropicRelation direct_sum(const IsotropicRelation& x, const IsotropicRelation& y) {
  const Eigen::Index sx = x.source().dim();
  const Eigen::Index sy = y.source().dim();
  const Eigen::Index tx = x.target().dim();
  const Eigen::Index ty = y.target().dim();
  const Eigen::Index kx = x.space().dim();
  const Eigen::Index ky = y.space().dim();
  // Reorder (src_x, tgt_x) ⊕ (src_y, tgt_y) into (src_x, src_y, tgt_x, tgt_y).
  CMatrix spanning = CMatrix::Zero(sx + sy + tx + ty, kx + ky);
  spanning.block(0, 0, sx, kx) = x.source_part();
  spanning.block(sx, kx, sy, ky) = y.source_part();
  spanning.block(sx + sy, 0, tx, kx) = x.target_part();
  spanning.block(sx + sy + tx, kx, ty, ky) = y.target_part();
  return IsotropicRelation(direct_sum(x.source(), y.source()), direct_sum(x.target(), y.target()),
                           spanning);
}

}  // namespace tanglesig
