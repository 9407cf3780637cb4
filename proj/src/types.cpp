#include "tanglesig/types.hpp"

#include <cmath>
#include <numbers>

#include "tanglesig/error.hpp"

namespace tanglesig {

Omega Omega::from_turns(const std::vector<double>& turns) {
  Omega omega;
  omega.values.reserve(turns.size());
  for (double turn : turns) {
    omega.values.push_back(std::polar(1.0, 2.0 * std::numbers::pi * turn));
    omega.given_turns.push_back(turn - std::floor(turn));
  }
  return omega;
}

std::vector<double> Omega::turns() const {
  if (given_turns.size() == values.size()) return given_turns;
  std::vector<double> out;
  out.reserve(values.size());
  for (cplx w : values) {
    double t = std::arg(w) / (2.0 * std::numbers::pi);
    if (t < 0.0) t += 1.0;
    out.push_back(t);
  }
  return out;
}

void require_off_forbidden_locus(const Omega& omega, double tol) {
  for (std::size_t j = 0; j < omega.mu(); ++j) {
    const cplx w = omega[j];
    if (std::abs(std::abs(w) - 1.0) > tol) {
      throw Error(ErrorKind::OmegaOnForbiddenLocus,
                  "omega_" + std::to_string(j + 1) + " is not of unit modulus");
    }
    if (std::abs(w - 1.0) <= tol) {
      throw Error(ErrorKind::OmegaOnForbiddenLocus, "omega_" + std::to_string(j + 1) + " = 1");
    }
  }
}

}  // namespace tanglesig
