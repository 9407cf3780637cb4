#pragma once

// The isotropic functor on coloured tangles: twisted first homology of the
// tangle exterior from a Wirtinger presentation, and the kernel of
// j(x, x') = i_top(x') - i_bottom(x) as an isotropic relation.

#include <string>
#include <vector>

#include "tanglesig/braidtangle.hpp"
#include "tanglesig/hermforms.hpp"
#include "tanglesig/representations.hpp"

namespace tanglesig {

struct TanglePresentation {
  std::vector<int> arc_colours;      // colour (1..mu) of each arc generator x_1..x_m
  std::vector<FreeWord> relators;    // one per crossing, in arc generators
  std::vector<FreeWord> bottom_words;
  std::vector<FreeWord> top_words;
  int mu = 1;

  std::size_t arc_count() const { return arc_colours.size(); }
};

TanglePresentation presentation(const TangleWord& t);

struct TwistedH1 {
  CMatrix boundary1;  // 1 x arcs
  CMatrix boundary2;  // arcs x relators
  CMatrix cycles;     // orthonormal basis of ker boundary1
  CMatrix boundaries; // orthonormal basis of im boundary2

  Eigen::Index dimension() const { return cycles.cols() - boundaries.cols(); }
};

/// Throws OmegaOnForbiddenLocus.
TwistedH1 twisted_h1(const TanglePresentation& p, const Omega& omega, double tol = kDefaultTol);

struct FunctorValue {
  IsotropicRelation relation;
  bool lagrangian_expected = true;  // false when I_c or I_c' equals 1
  std::string warning;
};

/// Throws OmegaOnForbiddenLocus. At inadmissible boundary points the value is
/// still computed with the (degenerate) intersection forms and a warning is attached.
FunctorValue functor_value(const TangleWord& t, const Omega& omega, double tol = kDefaultTol);

}  // namespace tanglesig
