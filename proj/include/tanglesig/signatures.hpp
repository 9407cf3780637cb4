#pragma once

// Levine-Tristram and multivariate signatures, a Seifert-matrix oracle for
// braid closures, and the signature defect of a pair of tangles.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tanglesig/braidtangle.hpp"
#include "tanglesig/hermforms.hpp"

namespace tanglesig {

struct SeifertData {
  CMatrix A;
};

/// Matrices A_eps keyed by sign vectors (entries +1 / -1, length mu).
struct CComplexData {
  int mu = 1;
  std::map<std::vector<int>, CMatrix> matrices;

  /// Throws TransposeSymmetryViolated unless A_{-eps} = A_eps^T for every eps;
  /// ParseError on missing keys or unequal sizes.
  void validate(double tol = kDefaultTol) const;
};

using ClosureData = std::variant<SeifertData, CComplexData>;

/// Signature of (1 - w) A + (1 - conj w) A^T.
SignatureResult lt_signature(const SeifertData& data, cplx w, double tol = kDefaultTol);

/// H(omega) = sum_eps prod_i (1 - conj(omega_i)^{eps_i}) A_eps.
CMatrix mv_matrix(const CComplexData& data, const Omega& omega, double tol = kDefaultTol);
SignatureResult mv_signature(const CComplexData& data, const Omega& omega, double tol = kDefaultTol);

SignatureResult closure_signature(const ClosureData& data, const Omega& omega,
                                  double tol = kDefaultTol);

/// Seifert matrix of the braid closure from n stacked disks and one band per letter.
SeifertData seifert_from_braid(const ColouredBraid& b);

/// Signature data for the closures of t1, t2 and t1 then t2.
struct ClosureOracle {
  std::optional<ClosureData> t1;
  std::optional<ClosureData> t2;
  std::optional<ClosureData> t1t2;

  bool complete() const { return t1 && t2 && t1t2; }
};

struct DefectReport {
  Omega omega;
  std::optional<int> lhs;
  std::optional<int> rhs;
  std::optional<int> meyer_rhs;
  std::optional<int> nullity;  // nullity of the signature matrix of the composite closure
  bool admissible = false;
  std::string error;

  /// Defect checks: only asserted at admissible points without errors.
  bool consistent() const;
};

/// Builds the oracle automatically when both tangles are one-colour braids with positive colours.
std::optional<ClosureOracle> automatic_oracle(const TangleWord& t1, const TangleWord& t2);

/// lhs: sigma(closure(t1 then t2)) - sigma(closure t1) - sigma(closure t2) from the oracle
/// (or the automatic one); rhs: Maslov(F(reflect t1), diagonal, F(t2)); meyer_rhs:
/// -Meyer(rep t1, rep t2) for braids. Throws ColourMismatch, NotAnEndomorphism,
/// OmegaOnForbiddenLocus.
DefectReport defect(const TangleWord& t1, const TangleWord& t2, const Omega& omega,
                    const std::optional<ClosureOracle>& oracle = std::nullopt,
                    double tol = kDefaultTol);

/// Rectangular grid: one list of angles (turns) per colour.
struct GridSpec {
  std::vector<std::vector<double>> axes;

  /// Angles k/n, k = 1..n-1, on every axis.
  static GridSpec uniform(int mu, int n);
  std::size_t size() const;
  Omega point(std::size_t index) const;
};

/// Per-point errors are stored in the rows; rows are in grid order.
std::vector<DefectReport> defect_sweep(const TangleWord& t1, const TangleWord& t2,
                                       const GridSpec& grid,
                                       const std::optional<ClosureOracle>& oracle = std::nullopt,
                                       double tol = kDefaultTol);
std::vector<DefectReport> defect_sweep_serial(const TangleWord& t1, const TangleWord& t2,
                                              const GridSpec& grid,
                                              const std::optional<ClosureOracle>& oracle = std::nullopt,
                                              double tol = kDefaultTol);

}  // namespace tanglesig
