#include "tanglesig/linalg.hpp"

#include <algorithm>

namespace tanglesig::linalg {

namespace {

using Svd = Eigen::JacobiSVD<CMatrix>;

}  // namespace

double rank_threshold(double sigma_max, Eigen::Index rows, Eigen::Index cols, double tol) {
  return tol * std::max(sigma_max, 1.0) * static_cast<double>(std::max(rows, cols));
}

Eigen::Index numerical_rank(const CMatrix& m, double tol) {
  if (m.size() == 0) return 0;
  Svd svd(m);
  const auto& s = svd.singularValues();
  const double thr = rank_threshold(s(0), m.rows(), m.cols(), tol);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > thr) ++r;
  return r;
}

CMatrix column_space(const CMatrix& m, double tol) {
  if (m.cols() == 0 || m.rows() == 0) return CMatrix(m.rows(), 0);
  Svd svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double thr = rank_threshold(s(0), m.rows(), m.cols(), tol);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > thr) ++r;
  return svd.matrixU().leftCols(r);
}

CMatrix null_space(const CMatrix& m, double tol) {
  const Eigen::Index n = m.cols();
  if (n == 0) return CMatrix(0, 0);
  if (m.rows() == 0) return CMatrix::Identity(n, n);
  Svd svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double thr = rank_threshold(s(0), m.rows(), m.cols(), tol);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > thr) ++r;
  return svd.matrixV().rightCols(n - r);
}

CMatrix intersect(const CMatrix& a, const CMatrix& b, double tol) {
  const Eigen::Index dim = a.rows();
  if (a.cols() == 0 || b.cols() == 0) return CMatrix(dim, 0);
  const CMatrix qa = column_space(a, tol);
  const CMatrix qb = column_space(b, tol);
  if (qa.cols() == 0 || qb.cols() == 0) return CMatrix(dim, 0);
  CMatrix stacked(dim, qa.cols() + qb.cols());
  stacked << qa, -qb;
  const CMatrix kernel = null_space(stacked, tol);
  if (kernel.cols() == 0) return CMatrix(dim, 0);
  return column_space(qa * kernel.topRows(qa.cols()), tol);
}

bool contains(const CMatrix& a, const CMatrix& b, double tol) {
  if (b.cols() == 0) return true;
  CMatrix joined(a.rows(), a.cols() + b.cols());
  joined << a, b;
  return numerical_rank(joined, tol) == numerical_rank(a, tol);
}

bool same_span(const CMatrix& a, const CMatrix& b, double tol) {
  const Eigen::Index ra = numerical_rank(a, tol);
  if (ra != numerical_rank(b, tol)) return false;
  CMatrix joined(a.rows(), a.cols() + b.cols());
  joined << a, b;
  return numerical_rank(joined, tol) == ra;
}

CMatrix solve_least_squares(const CMatrix& a, const CMatrix& rhs, double tol) {
  if (a.cols() == 0) return CMatrix(0, rhs.cols());
  if (a.rows() == 0) return CMatrix::Zero(a.cols(), rhs.cols());
  Svd svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double thr = rank_threshold(s(0), a.rows(), a.cols(), tol);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > thr) ++r;
  const CMatrix u = svd.matrixU().leftCols(r);
  const CMatrix v = svd.matrixV().leftCols(r);
  const Eigen::VectorXd inv = s.head(r).cwiseInverse();
  return v * (inv.asDiagonal() * (u.adjoint() * rhs));
}

CMatrix block_diag(const CMatrix& a, const CMatrix& b) {
  CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace tanglesig::linalg
