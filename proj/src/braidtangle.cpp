#include "tanglesig/braidtangle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <string>

#include "tanglesig/error.hpp"

namespace tanglesig {

namespace {

std::string describe(const ColouredObject& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.entries.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(c.entries[k]);
  }
  return s + ")";
}

int sgn(int v) { return v > 0 ? 1 : -1; }

}  // namespace

ColouredObject::ColouredObject(int mu_, std::vector<int> entries_)
    : mu(mu_), entries(std::move(entries_)) {
  if (mu < 1) throw Error(ErrorKind::InvalidTangle, "mu must be positive");
  for (int e : entries) {
    if (e == 0 || std::abs(e) > mu) {
      throw Error(ErrorKind::InvalidTangle,
                  "colour " + std::to_string(e) + " outside +-1..+-" + std::to_string(mu));
    }
  }
}

int ColouredObject::colour(std::size_t pos) const { return std::abs(entries.at(pos - 1)); }

int ColouredObject::orientation(std::size_t pos) const { return sgn(entries.at(pos - 1)); }

cplx colour_value(int signed_colour, const Omega& omega) {
  const cplx w = omega[static_cast<std::size_t>(std::abs(signed_colour) - 1)];
  return signed_colour > 0 ? w : 1.0 / w;
}

std::vector<cplx> puncture_values(const ColouredObject& c, const Omega& omega) {
  if (omega.mu() < static_cast<std::size_t>(c.mu)) {
    throw Error(ErrorKind::OmegaOnForbiddenLocus,
                "omega has " + std::to_string(omega.mu()) + " coordinates, need " +
                    std::to_string(c.mu));
  }
  std::vector<cplx> t;
  t.reserve(c.size());
  for (int e : c.entries) t.push_back(colour_value(e, omega));
  return t;
}

// ---------------------------------------------------------------------------
// Braids

ColouredBraid::ColouredBraid(ColouredObject source_, std::vector<int> word_)
    : source(std::move(source_)), word(std::move(word_)) {
  const int n = static_cast<int>(source.size());
  for (int k : word) {
    if (k == 0 || std::abs(k) > n - 1) {
      throw Error(ErrorKind::InvalidTangle,
                  "generator " + std::to_string(k) + " invalid on " + std::to_string(n) +
                      " strands");
    }
  }
}

ColouredObject ColouredBraid::target() const {
  ColouredObject c = source;
  for (int k : word) {
    const auto i = static_cast<std::size_t>(std::abs(k) - 1);
    std::swap(c.entries[i], c.entries[i + 1]);
  }
  return c;
}

std::vector<int> ColouredBraid::permutation() const {
  // at[q] = original bottom position of the strand currently at q
  std::vector<int> at(source.size());
  std::iota(at.begin(), at.end(), 1);
  for (int k : word) {
    const auto i = static_cast<std::size_t>(std::abs(k) - 1);
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> perm(source.size());
  for (std::size_t q = 0; q < at.size(); ++q) perm[static_cast<std::size_t>(at[q] - 1)] = static_cast<int>(q + 1);
  return perm;
}

// ---------------------------------------------------------------------------
// Tangles

TangleWord::TangleWord(ColouredObject source, std::vector<Slice> slices)
    : source_(std::move(source)), slices_(std::move(slices)) {
  levels_.reserve(slices_.size() + 1);
  levels_.push_back(source_);
  for (std::size_t k = 0; k < slices_.size(); ++k) {
    const Slice& s = slices_[k];
    ColouredObject next = levels_.back();
    const int n = static_cast<int>(next.size());
    const std::string where = "slice " + std::to_string(k) + " on " + describe(next);
    switch (s.kind) {
      case Slice::Kind::Crossing:
        if (s.pos < 1 || s.pos > n - 1 || (s.sign != 1 && s.sign != -1)) {
          throw Error(ErrorKind::InvalidTangle, "bad crossing at " + where);
        }
        std::swap(next.entries[static_cast<std::size_t>(s.pos - 1)],
                  next.entries[static_cast<std::size_t>(s.pos)]);
        break;
      case Slice::Kind::Cup: {
        if (s.pos < 1 || s.pos > n + 1 || s.colour < 1 || s.colour > next.mu) {
          throw Error(ErrorKind::InvalidTangle, "bad cup at " + where);
        }
        const int first = s.up ? s.colour : -s.colour;
        auto it = next.entries.begin() + (s.pos - 1);
        next.entries.insert(it, {first, -first});
        break;
      }
      case Slice::Kind::Cap: {
        if (s.pos < 1 || s.pos > n - 1) throw Error(ErrorKind::InvalidTangle, "bad cap at " + where);
        const int a = next.entries[static_cast<std::size_t>(s.pos - 1)];
        const int b = next.entries[static_cast<std::size_t>(s.pos)];
        if (a != -b) {
          throw Error(ErrorKind::InvalidTangle,
                      "cap joins strands of different colour or equal orientation at " + where);
        }
        auto it = next.entries.begin() + (s.pos - 1);
        next.entries.erase(it, it + 2);
        break;
      }
    }
    levels_.push_back(std::move(next));
  }
}

TangleWord TangleWord::identity(const ColouredObject& c) { return TangleWord(c, {}); }

TangleWord TangleWord::from_braid(const ColouredBraid& b) {
  std::vector<Slice> slices;
  slices.reserve(b.word.size());
  for (int k : b.word) slices.push_back(Slice::crossing(std::abs(k), sgn(k)));
  return TangleWord(b.source, std::move(slices));
}

std::optional<ColouredBraid> TangleWord::as_braid() const {
  std::vector<int> word;
  for (const Slice& s : slices_) {
    if (s.kind != Slice::Kind::Crossing) return std::nullopt;
    word.push_back(s.sign * s.pos);
  }
  return ColouredBraid(source_, std::move(word));
}

std::size_t TangleWord::crossing_count() const {
  return static_cast<std::size_t>(std::count_if(slices_.begin(), slices_.end(), [](const Slice& s) {
    return s.kind == Slice::Kind::Crossing;
  }));
}

TangleWord compose(const TangleWord& a, const TangleWord& b) {
  if (!(a.target() == b.source())) {
    throw Error(ErrorKind::ColourMismatch,
                "target " + describe(a.target()) + " != source " + describe(b.source()));
  }
  std::vector<Slice> slices = a.slices();
  slices.insert(slices.end(), b.slices().begin(), b.slices().end());
  return TangleWord(a.source(), std::move(slices));
}

ColouredBraid compose(const ColouredBraid& a, const ColouredBraid& b) {
  if (!(a.target() == b.source)) {
    throw Error(ErrorKind::ColourMismatch,
                "target " + describe(a.target()) + " != source " + describe(b.source));
  }
  std::vector<int> word = a.word;
  word.insert(word.end(), b.word.begin(), b.word.end());
  return ColouredBraid(a.source, std::move(word));
}

TangleWord reflect(const TangleWord& t) {
  const auto& slices = t.slices();
  const auto& levels = t.levels();
  std::vector<Slice> out;
  out.reserve(slices.size());
  for (std::size_t r = slices.size(); r-- > 0;) {
    const Slice& s = slices[r];
    switch (s.kind) {
      case Slice::Kind::Crossing:
        out.push_back(Slice::crossing(s.pos, -s.sign));
        break;
      case Slice::Kind::Cup:
        out.push_back(Slice::cap(s.pos));
        break;
      case Slice::Kind::Cap: {
        const ColouredObject& below = levels[r];
        const auto p = static_cast<std::size_t>(s.pos);
        out.push_back(Slice::cup(s.pos, below.colour(p), below.orientation(p) > 0));
        break;
      }
    }
  }
  return TangleWord(t.target(), std::move(out));
}

ColouredBraid reflect(const ColouredBraid& b) {
  std::vector<int> word(b.word.rbegin(), b.word.rend());
  for (int& k : word) k = -k;
  return ColouredBraid(b.target(), std::move(word));
}

std::vector<int> exponent_sums(const ColouredObject& c) {
  std::vector<int> sums(static_cast<std::size_t>(c.mu), 0);
  for (int e : c.entries) sums[static_cast<std::size_t>(std::abs(e) - 1)] += sgn(e);
  return sums;
}

cplx admissibility(const ColouredObject& c, const Omega& omega, double tol) {
  if (omega.mu() < static_cast<std::size_t>(c.mu)) {
    throw Error(ErrorKind::OmegaOnForbiddenLocus, "omega has too few coordinates");
  }
  require_off_forbidden_locus(omega, tol);
  const std::vector<int> sums = exponent_sums(c);
  cplx value = 1.0;
  for (std::size_t j = 0; j < sums.size(); ++j) value *= std::pow(omega[j], sums[j]);
  return value;
}

bool is_admissible(const ColouredObject& c, const Omega& omega, double tol) {
  return std::abs(admissibility(c, omega, tol) - 1.0) > tol;
}

// ---------------------------------------------------------------------------
// Closure

ClosureDescription closure(const TangleWord& t) {
  if (!t.is_endomorphism()) {
    throw Error(ErrorKind::NotAnEndomorphism,
                describe(t.source()) + " -> " + describe(t.target()));
  }
  const auto& levels = t.levels();
  const std::size_t n_levels = levels.size();
  std::vector<std::size_t> offset(n_levels + 1, 0);
  for (std::size_t l = 0; l < n_levels; ++l) offset[l + 1] = offset[l] + levels[l].size();
  const std::size_t n_nodes = offset.back();
  auto node = [&](std::size_t level, int pos) { return offset[level] + static_cast<std::size_t>(pos - 1); };

  // Every node has a lower (slot 0) and an upper (slot 1) half-edge.
  struct HalfEdge {
    std::size_t node = 0;
    int slot = 0;
  };
  std::vector<std::array<HalfEdge, 2>> adj(n_nodes);
  auto link = [&](std::size_t a, int sa, std::size_t b, int sb) {
    adj[a][static_cast<std::size_t>(sa)] = {b, sb};
    adj[b][static_cast<std::size_t>(sb)] = {a, sa};
  };

  for (std::size_t k = 0; k + 1 < n_levels; ++k) {
    const Slice& s = t.slices()[k];
    const int width = static_cast<int>(levels[k].size());
    switch (s.kind) {
      case Slice::Kind::Crossing:
        for (int p = 1; p <= width; ++p) {
          int q = p;
          if (p == s.pos) q = p + 1;
          else if (p == s.pos + 1) q = p - 1;
          link(node(k, p), 1, node(k + 1, q), 0);
        }
        break;
      case Slice::Kind::Cup:
        link(node(k + 1, s.pos), 0, node(k + 1, s.pos + 1), 0);
        for (int p = 1; p <= width; ++p) link(node(k, p), 1, node(k + 1, p < s.pos ? p : p + 2), 0);
        break;
      case Slice::Kind::Cap:
        link(node(k, s.pos), 1, node(k, s.pos + 1), 1);
        for (int p = 1; p <= width; ++p) {
          if (p == s.pos || p == s.pos + 1) continue;
          link(node(k, p), 1, node(k + 1, p < s.pos ? p : p - 2), 0);
        }
        break;
    }
  }
  const std::size_t top = n_levels - 1;
  for (int p = 1; p <= static_cast<int>(levels[top].size()); ++p) link(node(top, p), 1, node(0, p), 0);

  std::vector<bool> seen(n_nodes, false);
  ClosureDescription out;
  auto walk = [&](std::size_t start, int leave_slot, ClosureDescription::Component& comp) {
    std::size_t cur = start;
    int slot = leave_slot;
    do {
      seen[cur] = true;
      if (cur < offset[1]) comp.positions.push_back(static_cast<int>(cur + 1));
      const HalfEdge next = adj[cur][static_cast<std::size_t>(slot)];
      cur = next.node;
      slot = 1 - next.slot;
    } while (!(cur == start && slot == leave_slot));
  };

  const ColouredObject& bottom = levels[0];
  for (int p = 1; p <= static_cast<int>(bottom.size()); ++p) {
    if (seen[node(0, p)]) continue;
    ClosureDescription::Component comp;
    comp.colour = bottom.colour(static_cast<std::size_t>(p));
    walk(node(0, p), bottom.orientation(static_cast<std::size_t>(p)) > 0 ? 1 : 0, comp);
    out.components.push_back(std::move(comp));
  }
  for (std::size_t l = 1; l < n_levels; ++l) {
    for (int p = 1; p <= static_cast<int>(levels[l].size()); ++p) {
      if (seen[node(l, p)]) continue;
      ClosureDescription::Component comp;
      comp.colour = levels[l].colour(static_cast<std::size_t>(p));
      walk(node(l, p), 1, comp);
      out.components.push_back(std::move(comp));
    }
  }
  return out;
}

}  // namespace tanglesig
