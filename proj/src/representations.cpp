#include "tanglesig/representations.hpp"

#include <cmath>
#include <cstdlib>

#include "tanglesig/error.hpp"
#include "tanglesig/linalg.hpp"

namespace tanglesig {

namespace {

FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
  FreeWord out;
  for (int letter : w) {
    const FreeWord& im = images[std::abs(letter) - 1];
    if (letter > 0) {
      out.insert(out.end(), im.begin(), im.end());
    } else {
      for (auto it = im.rbegin(); it != im.rend(); ++it) out.push_back(-*it);
    }
  }
  return free_reduce(out);
}

FreeGroupAutomorphism generator_automorphism(int n, int k) {
  FreeGroupAutomorphism g = FreeGroupAutomorphism::identity(n);
  const int i = std::abs(k);
  if (k > 0) {
    g.images[i - 1] = {i, i + 1, -i};
    g.images[i] = {i};
  } else {
    g.images[i - 1] = {i + 1};
    g.images[i] = {-(i + 1), i, i + 1};
  }
  return g;
}

// Real basis of the (n x n) skew-Hermitian matrices.
std::vector<CMatrix> skew_hermitian_basis(Eigen::Index n) {
  std::vector<CMatrix> out;
  const cplx I(0.0, 1.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    CMatrix m = CMatrix::Zero(n, n);
    m(i, i) = I;
    out.push_back(m);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      CMatrix re = CMatrix::Zero(n, n);
      re(i, j) = 1.0;
      re(j, i) = -1.0;
      out.push_back(re);
      CMatrix im = CMatrix::Zero(n, n);
      im(i, j) = I;
      im(j, i) = I;
      out.push_back(im);
    }
  }
  return out;
}

}  // namespace

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

PuncturedDiskModel::PuncturedDiskModel(ColouredObject object_, Omega omega_, double tol)
    : object(std::move(object_)), omega(std::move(omega_)) {
  require_off_forbidden_locus(omega, tol);
  if (omega.mu() != static_cast<std::size_t>(object.mu)) {
    throw Error(ErrorKind::ColourMismatch, "omega has " + std::to_string(omega.mu()) +
                                               " coordinates, object has mu = " +
                                               std::to_string(object.mu));
  }
  const auto t = puncture_values(object, omega);
  boundary_row = CMatrix(1, static_cast<Eigen::Index>(t.size()));
  for (std::size_t j = 0; j < t.size(); ++j) boundary_row(0, static_cast<Eigen::Index>(j)) = t[j] - 1.0;
}

std::vector<cplx> PuncturedDiskModel::values() const { return puncture_values(object, omega); }

CMatrix PuncturedDiskModel::reduced_basis() const {
  const Eigen::Index n = punctures();
  if (n == 0) return CMatrix(0, 0);
  CMatrix b = CMatrix::Zero(n, n - 1);
  for (Eigen::Index j = 0; j + 1 < n; ++j) {
    b(j, j) = 1.0;
    b(j + 1, j) = -boundary_row(0, j) / boundary_row(0, j + 1);
  }
  return b;
}

FreeGroupAutomorphism FreeGroupAutomorphism::identity(int n) {
  FreeGroupAutomorphism a;
  for (int j = 1; j <= n; ++j) a.images.push_back({j});
  return a;
}

FreeGroupAutomorphism FreeGroupAutomorphism::then(const FreeGroupAutomorphism& other) const {
  FreeGroupAutomorphism out;
  for (const auto& w : images) out.images.push_back(substitute(w, other.images));
  return out;
}

FreeWord FreeGroupAutomorphism::apply(const FreeWord& w) const { return substitute(w, images); }

FreeGroupAutomorphism braid_to_automorphism(const ColouredBraid& b) {
  const int n = static_cast<int>(b.source.size());
  FreeGroupAutomorphism a = FreeGroupAutomorphism::identity(n);
  for (int k : b.word) a = a.then(generator_automorphism(n, k));
  return a;
}

CVector fox_gradient(const FreeWord& w, const std::vector<cplx>& values) {
  CVector g = CVector::Zero(static_cast<Eigen::Index>(values.size()));
  cplx prefix = 1.0;
  for (int letter : free_reduce(w)) {
    const int x = std::abs(letter) - 1;
    if (letter > 0) {
      g(x) += prefix;
      prefix *= values[x];
    } else {
      prefix /= values[x];
      g(x) -= prefix;
    }
  }
  return g;
}

CMatrix fox_jacobian(const FreeGroupAutomorphism& a, const PuncturedDiskModel& model) {
  const auto t = model.values();
  const auto n = static_cast<Eigen::Index>(a.images.size());
  CMatrix d(static_cast<Eigen::Index>(t.size()), n);
  for (Eigen::Index j = 0; j < n; ++j) d.col(j) = fox_gradient(a.images[j], t);
  return d;
}

EvaluatedRep reduced_rep(const ColouredBraid& b, const Omega& omega, double tol) {
  PuncturedDiskModel src(b.source, omega, tol);
  PuncturedDiskModel tgt(b.target(), omega, tol);
  const CMatrix d = fox_jacobian(braid_to_automorphism(b), tgt);
  const CMatrix bs = src.reduced_basis();
  const CMatrix bt = tgt.reduced_basis();
  CMatrix r = linalg::solve_least_squares(bt, d * bs, tol);
  return EvaluatedRep{std::move(r), std::move(src), std::move(tgt)};
}

DiskForm intersection_form(const ColouredObject& c, const Omega& omega, double tol) {
  PuncturedDiskModel model(c, omega, tol);
  const auto t = model.values();
  const auto n = static_cast<Eigen::Index>(t.size());
  // Lasso intersection numbers; entry (i, j), i <= j, conjugated.
  CMatrix k = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    k(i, i) = std::conj(1.0 - 1.0 / t[i]);
    for (Eigen::Index j = i + 1; j < n; ++j) k(i, j) = std::conj((1.0 - t[i]) * (1.0 - 1.0 / t[j]));
  }
  const CMatrix b = model.reduced_basis();
  CMatrix form = b.adjoint() * k * b;
  form = (form - form.adjoint()) / 2.0;
  return DiskForm{std::move(model), std::move(form)};
}

std::vector<ColouredBraid> coloured_braid_generators(const ColouredObject& c) {
  const int n = static_cast<int>(c.size());
  std::vector<ColouredBraid> out;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> conj;  // sigma_{j-1} ... sigma_{i+1}
      for (int k = j - 1; k > i; --k) conj.push_back(k);
      std::vector<int> pure = conj;
      pure.push_back(i);
      pure.push_back(i);
      for (auto it = conj.rbegin(); it != conj.rend(); ++it) pure.push_back(-*it);
      out.emplace_back(c, pure);
      if (c.entries[i - 1] == c.entries[j - 1]) {
        std::vector<int> swap = conj;
        swap.push_back(i);
        for (auto it = conj.rbegin(); it != conj.rend(); ++it) swap.push_back(-*it);
        out.emplace_back(c, swap);
      }
    }
  }
  return out;
}

DiskForm invariant_form(const ColouredObject& c, const Omega& omega, double tol) {
  if (!is_admissible(c, omega, tol)) {
    throw Error(ErrorKind::AdmissibilityViolated, "invariant_form: I_c(omega) = 1");
  }
  DiskForm geometric = intersection_form(c, omega, tol);
  const Eigen::Index m = geometric.form.rows();
  if (m == 0) return geometric;

  const auto basis = skew_hermitian_basis(m);
  std::vector<CMatrix> reps;
  for (const auto& g : coloured_braid_generators(c)) {
    if (g.is_endomorphism()) reps.push_back(reduced_rep(g, omega, tol).matrix);
  }
  // Real linear system: for each basis element, the stacked residuals R^* J R - J.
  const Eigen::Index per = 2 * m * m;
  Eigen::MatrixXd system(std::max<Eigen::Index>(1, per * static_cast<Eigen::Index>(reps.size())),
                         static_cast<Eigen::Index>(basis.size()));
  system.setZero();
  for (std::size_t col = 0; col < basis.size(); ++col) {
    for (std::size_t r = 0; r < reps.size(); ++r) {
      const CMatrix res = reps[r].adjoint() * basis[col] * reps[r] - basis[col];
      for (Eigen::Index e = 0; e < m * m; ++e) {
        const auto row = static_cast<Eigen::Index>(r) * per + 2 * e;
        system(row, static_cast<Eigen::Index>(col)) = res(e).real();
        system(row + 1, static_cast<Eigen::Index>(col)) = res(e).imag();
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double thr = linalg::rank_threshold(s(0), system.rows(), system.cols(), 1e-7);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > thr) ++rank;
  const Eigen::Index nullity = system.cols() - rank;
  if (nullity != 1) {
    throw Error(ErrorKind::NonUniqueForm, "invariance system has a " + std::to_string(nullity) +
                                              "-dimensional solution space");
  }
  CMatrix solved = CMatrix::Zero(m, m);
  const Eigen::VectorXd v = svd.matrixV().col(system.cols() - 1);
  for (std::size_t col = 0; col < basis.size(); ++col) solved += v(static_cast<Eigen::Index>(col)) * basis[col];
  // The geometric form must be a real multiple of the solution.
  const cplx ratio = (solved.adjoint() * geometric.form).trace() / (solved.adjoint() * solved).trace();
  if (std::abs(ratio.imag()) > 1e-6 * std::abs(ratio) ||
      linalg::max_abs(geometric.form - ratio.real() * solved) >
          1e-6 * std::max(1.0, linalg::max_abs(geometric.form))) {
    throw Error(ErrorKind::NonUniqueForm, "intersection form is not invariant");
  }
  return geometric;
}

IsotropicRelation graph_relation(const EvaluatedRep& r, const DiskForm& source,
                                 const DiskForm& target, double tol) {
  return graph_of(r.matrix, source.space(), target.space(), tol);
}

}  // namespace tanglesig
