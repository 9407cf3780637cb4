#pragma once

// Coloured objects, braid words and Morse-word tangle diagrams.
//
// Positions and generators are 1-based: the crossing slice at position i acts
// on strands i and i+1, like the braid generator sigma_i. A signed colour +j
// marks a strand oriented upwards, -j one oriented downwards.

#include <optional>
#include <vector>

#include "tanglesig/types.hpp"

namespace tanglesig {

struct ColouredObject {
  int mu = 1;
  std::vector<int> entries;

  ColouredObject() = default;
  /// Validates that every |entry| lies in 1..mu.
  ColouredObject(int mu, std::vector<int> entries);

  std::size_t size() const { return entries.size(); }
  int colour(std::size_t pos) const;       // 1-based position -> |c(pos)|
  int orientation(std::size_t pos) const;  // 1-based position -> sgn c(pos)

  bool operator==(const ColouredObject&) const = default;
};

/// omega_{|c|}^{sgn c} for one signed colour.
cplx colour_value(int signed_colour, const Omega& omega);

/// The values omega_{|c(j)|}^{sgn c(j)}, j = 1..n.
std::vector<cplx> puncture_values(const ColouredObject& c, const Omega& omega);

struct ColouredBraid {
  ColouredObject source;
  std::vector<int> word;  // k > 0: sigma_k, k < 0: sigma_|k|^{-1}

  ColouredBraid() = default;
  ColouredBraid(ColouredObject source, std::vector<int> word);

  ColouredObject target() const;
  bool is_endomorphism() const { return target() == source; }
  /// perm[p] = top position (1-based) reached by the strand starting at bottom position p+1.
  std::vector<int> permutation() const;
};

struct Slice {
  enum class Kind { Crossing, Cup, Cap };

  Kind kind = Kind::Crossing;
  int pos = 1;
  int sign = 1;     // crossing only
  int colour = 1;   // cup only
  bool up = true;   // cup only: strand at pos oriented upwards

  static Slice crossing(int pos, int sign) { return {Kind::Crossing, pos, sign, 0, true}; }
  static Slice cup(int pos, int colour, bool up) { return {Kind::Cup, pos, 0, colour, up}; }
  static Slice cap(int pos) { return {Kind::Cap, pos, 0, 0, true}; }

  bool operator==(const Slice&) const = default;
};

class TangleWord {
 public:
  TangleWord() = default;
  /// Checks strand bookkeeping and cap colour/orientation compatibility; throws InvalidTangle.
  TangleWord(ColouredObject source, std::vector<Slice> slices);

  static TangleWord identity(const ColouredObject& c);
  static TangleWord from_braid(const ColouredBraid& b);

  const ColouredObject& source() const { return source_; }
  const std::vector<Slice>& slices() const { return slices_; }
  const ColouredObject& target() const { return levels_.back(); }
  /// Object below slice k is levels()[k]; levels().back() is the target.
  const std::vector<ColouredObject>& levels() const { return levels_; }

  bool is_endomorphism() const { return source_ == target(); }
  /// The braid word if every slice is a crossing.
  std::optional<ColouredBraid> as_braid() const;
  std::size_t crossing_count() const;

  bool operator==(const TangleWord& other) const {
    return source_ == other.source_ && slices_ == other.slices_;
  }

 private:
  ColouredObject source_;
  std::vector<Slice> slices_;
  std::vector<ColouredObject> levels_;
};

/// a then b (a below b). Throws ColourMismatch unless target(a) == source(b).
TangleWord compose(const TangleWord& a, const TangleWord& b);
ColouredBraid compose(const ColouredBraid& a, const ColouredBraid& b);

/// Reflection across a horizontal plane with reversed orientation.
TangleWord reflect(const TangleWord& t);
ColouredBraid reflect(const ColouredBraid& b);

/// i_j = sum of sgn c(k) over positions with |c(k)| = j.
std::vector<int> exponent_sums(const ColouredObject& c);

/// I_c(omega) = prod_j omega_j^{i_j}. Throws OmegaOnForbiddenLocus.
cplx admissibility(const ColouredObject& c, const Omega& omega, double tol = kDefaultTol);

/// |I_c(omega) - 1| > tol.
bool is_admissible(const ColouredObject& c, const Omega& omega, double tol = kDefaultTol);

struct ClosureDescription {
  struct Component {
    int colour = 1;
    std::vector<int> positions;  // bottom positions on this component, in strand order
  };
  std::vector<Component> components;
};

/// Components of the closure of an endomorphism tangle; throws NotAnEndomorphism.
ClosureDescription closure(const TangleWord& t);

}  // namespace tanglesig
