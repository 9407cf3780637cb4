#include "tanglesig/signatures.hpp"

#include <cstdlib>

#include "tanglesig/error.hpp"
#include "tanglesig/linalg.hpp"
#include "tanglesig/representations.hpp"
#include "tanglesig/tanglefunctor.hpp"

namespace tanglesig {

namespace {

std::vector<int> negate(std::vector<int> eps) {
  for (int& e : eps) e = -e;
  return eps;
}

cplx power(cplx w, int e) { return e > 0 ? w : std::conj(w); }

}  // namespace

void CComplexData::validate(double tol) const {
  const std::size_t expected = std::size_t{1} << static_cast<std::size_t>(mu);
  if (matrices.size() != expected) {
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(expected) +
                                           " matrices A_eps, found " +
                                           std::to_string(matrices.size()));
  }
  Eigen::Index size = -1;
  for (const auto& [eps, a] : matrices) {
    if (eps.size() != static_cast<std::size_t>(mu)) {
      throw Error(ErrorKind::ParseError, "sign vector of wrong length");
    }
    if (a.rows() != a.cols() || (size >= 0 && a.rows() != size)) {
      throw Error(ErrorKind::ParseError, "matrices A_eps must be square of equal size");
    }
    size = a.rows();
    const auto partner = matrices.find(negate(eps));
    if (partner == matrices.end()) throw Error(ErrorKind::ParseError, "missing A_{-eps}");
    if (linalg::max_abs(partner->second - a.transpose()) >
        tol * std::max(1.0, linalg::max_abs(a))) {
      throw Error(ErrorKind::TransposeSymmetryViolated, "A_{-eps} differs from A_eps^T");
    }
  }
}

SignatureResult lt_signature(const SeifertData& data, cplx w, double tol) {
  if (std::abs(std::abs(w) - 1.0) > tol || std::abs(w - 1.0) <= tol) {
    throw Error(ErrorKind::OmegaOnForbiddenLocus, "lt_signature needs |w| = 1, w != 1");
  }
  if (data.A.rows() != data.A.cols()) throw Error(ErrorKind::ParseError, "Seifert matrix not square");
  const CMatrix m = (1.0 - w) * data.A + (1.0 - std::conj(w)) * data.A.transpose();
  return hermitian_signature(m, tol);
}

CMatrix mv_matrix(const CComplexData& data, const Omega& omega, double tol) {
  require_off_forbidden_locus(omega, tol);
  if (omega.mu() != static_cast<std::size_t>(data.mu)) {
    throw Error(ErrorKind::ColourMismatch, "omega and C-complex have different mu");
  }
  data.validate(tol);
  const Eigen::Index size = data.matrices.begin()->second.rows();
  CMatrix h = CMatrix::Zero(size, size);
  for (const auto& [eps, a] : data.matrices) {
    cplx coef = 1.0;
    for (std::size_t i = 0; i < eps.size(); ++i) coef *= 1.0 - std::conj(power(omega[i], eps[i]));
    h += coef * a;
  }
  return h;
}

SignatureResult mv_signature(const CComplexData& data, const Omega& omega, double tol) {
  return hermitian_signature(mv_matrix(data, omega, tol), tol);
}

SignatureResult closure_signature(const ClosureData& data, const Omega& omega, double tol) {
  if (const auto* s = std::get_if<SeifertData>(&data)) {
    require_off_forbidden_locus(omega, tol);
    if (omega.mu() != 1) throw Error(ErrorKind::ColourMismatch, "Seifert data needs mu = 1");
    return lt_signature(*s, omega[0], tol);
  }
  return mv_signature(std::get<CComplexData>(data), omega, tol);
}

SeifertData seifert_from_braid(const ColouredBraid& b) {
  const auto& e = b.source.entries;
  for (int x : e) {
    if (x != e.front()) throw Error(ErrorKind::ColourMismatch, "seifert_from_braid needs one colour");
  }
  struct Loop {
    int column, a, b, sa, sb;  // word positions a < b of consecutive letters in the column
  };
  std::vector<Loop> loops;
  const int n = static_cast<int>(b.source.size());
  for (int col = 1; col < n; ++col) {
    int prev = -1;
    for (int p = 0; p < static_cast<int>(b.word.size()); ++p) {
      if (std::abs(b.word[p]) != col) continue;
      if (prev >= 0) {
        loops.push_back({col, prev, p, b.word[prev] > 0 ? 1 : -1, b.word[p] > 0 ? 1 : -1});
      }
      prev = p;
    }
  }
  const auto g = static_cast<Eigen::Index>(loops.size());
  CMatrix v = CMatrix::Zero(g, g);
  for (Eigen::Index x = 0; x < g; ++x) {
    const Loop& lx = loops[x];
    for (Eigen::Index y = 0; y < g; ++y) {
      const Loop& ly = loops[y];
      if (x == y) {
        v(x, y) = -(lx.sa + lx.sb) / 2.0;
      } else if (lx.column == ly.column && lx.b == ly.a) {
        v(x, y) = (lx.sb + 1) / 2.0;
      } else if (lx.column == ly.column && ly.b == lx.a) {
        v(x, y) = (lx.sa - 1) / 2.0;
      } else if (lx.column == ly.column + 1) {
        if (ly.a < lx.a && lx.a < ly.b && ly.b < lx.b)
          v(x, y) = 1.0;
        else if (lx.a < ly.a && ly.a < lx.b && lx.b < ly.b)
          v(x, y) = -1.0;
      }
    }
  }
  return SeifertData{v};
}

bool DefectReport::consistent() const {
  if (!admissible || !error.empty()) return true;
  if (lhs && rhs && *lhs != *rhs) return false;
  if (rhs && meyer_rhs && *rhs != *meyer_rhs) return false;
  return true;
}

std::optional<ClosureOracle> automatic_oracle(const TangleWord& t1, const TangleWord& t2) {
  const auto b1 = t1.as_braid();
  const auto b2 = t2.as_braid();
  if (!b1 || !b2 || t1.source().mu != 1) return std::nullopt;
  for (int x : t1.source().entries) {
    if (x != 1) return std::nullopt;
  }
  ClosureOracle o;
  o.t1 = seifert_from_braid(*b1);
  o.t2 = seifert_from_braid(*b2);
  o.t1t2 = seifert_from_braid(compose(*b1, *b2));
  return o;
}

DefectReport defect(const TangleWord& t1, const TangleWord& t2, const Omega& omega,
                    const std::optional<ClosureOracle>& oracle, double tol) {
  if (!t1.is_endomorphism() || !t2.is_endomorphism()) {
    throw Error(ErrorKind::NotAnEndomorphism, "defect needs endomorphism tangles");
  }
  if (!(t1.source() == t2.source())) {
    throw Error(ErrorKind::ColourMismatch, "defect needs tangles on the same object");
  }
  const ColouredObject& c = t1.source();
  require_off_forbidden_locus(omega, tol);
  if (omega.mu() != static_cast<std::size_t>(c.mu)) {
    throw Error(ErrorKind::ColourMismatch, "omega and tangles have different mu");
  }

  DefectReport r;
  r.omega = omega;
  r.admissible = is_admissible(c, omega, tol);
  try {
    const FunctorValue f1 = functor_value(reflect(t1), omega, tol);
    const FunctorValue f2 = functor_value(t2, omega, tol);
    const IsotropicRelation delta = diagonal(intersection_form(c, omega, tol).space());
    r.rhs = maslov(f1.relation.space(), delta.space(), f2.relation.space(), tol);

    const auto b1 = t1.as_braid();
    const auto b2 = t2.as_braid();
    if (b1 && b2) {
      const SkewSpace h = intersection_form(c, omega, tol).space();
      r.meyer_rhs = -meyer(reduced_rep(*b1, omega, tol).matrix, reduced_rep(*b2, omega, tol).matrix,
                           h, tol);
    }

    const auto data = oracle ? oracle : automatic_oracle(t1, t2);
    if (data && data->complete()) {
      const SignatureResult s12 = closure_signature(*data->t1t2, omega, tol);
      const SignatureResult s1 = closure_signature(*data->t1, omega, tol);
      const SignatureResult s2 = closure_signature(*data->t2, omega, tol);
      r.lhs = s12.signature() - s1.signature() - s2.signature();
      r.nullity = s12.null;
    }
  } catch (const Error& e) {
    r.error = std::string(to_string(e.kind())) + ": " + e.what();
  }
  return r;
}

GridSpec GridSpec::uniform(int mu, int n) {
  GridSpec g;
  std::vector<double> axis;
  for (int k = 1; k < n; ++k) axis.push_back(static_cast<double>(k) / n);
  g.axes.assign(static_cast<std::size_t>(mu), axis);
  return g;
}

std::size_t GridSpec::size() const {
  if (axes.empty()) return 0;
  std::size_t s = 1;
  for (const auto& a : axes) s *= a.size();
  return s;
}

Omega GridSpec::point(std::size_t index) const {
  std::vector<double> turns(axes.size());
  for (std::size_t i = axes.size(); i-- > 0;) {
    turns[i] = axes[i][index % axes[i].size()];
    index /= axes[i].size();
  }
  return Omega::from_turns(turns);
}

namespace {

DefectReport sweep_point(const TangleWord& t1, const TangleWord& t2, const Omega& omega,
                         const std::optional<ClosureOracle>& oracle, double tol) {
  try {
    return defect(t1, t2, omega, oracle, tol);
  } catch (const Error& e) {
    DefectReport r;
    r.omega = omega;
    r.error = std::string(to_string(e.kind())) + ": " + e.what();
    return r;
  }
}

}  // namespace

std::vector<DefectReport> defect_sweep_serial(const TangleWord& t1, const TangleWord& t2,
                                              const GridSpec& grid,
                                              const std::optional<ClosureOracle>& oracle,
                                              double tol) {
  std::vector<DefectReport> rows(grid.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = sweep_point(t1, t2, grid.point(i), oracle, tol);
  return rows;
}

std::vector<DefectReport> defect_sweep(const TangleWord& t1, const TangleWord& t2,
                                       const GridSpec& grid,
                                       const std::optional<ClosureOracle>& oracle, double tol) {
  std::vector<DefectReport> rows(grid.size());
  const auto count = static_cast<long long>(rows.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    rows[k] = sweep_point(t1, t2, grid.point(k), oracle, tol);
  }
  return rows;
}

}  // namespace tanglesig
