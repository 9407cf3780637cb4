#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace tanglesig {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Default tolerance for rank decisions, signatures and locus tests.
inline constexpr double kDefaultTol = 1e-9;

/// A point of the torus (S^1)^mu, one unit complex number per colour.
struct Omega {
  std::vector<cplx> values;
  std::vector<double> given_turns;  // set by from_turns; reported back verbatim by turns()

  static Omega from_turns(const std::vector<double>& turns);

  std::size_t mu() const { return values.size(); }
  cplx operator[](std::size_t colour_index) const { return values[colour_index]; }
  /// Angles in [0, 1).
  std::vector<double> turns() const;
};

/// Throws OmegaOnForbiddenLocus if some coordinate is within tol of 1, or not of unit modulus.
void require_off_forbidden_locus(const Omega& omega, double tol = kDefaultTol);

}  // namespace tanglesig
