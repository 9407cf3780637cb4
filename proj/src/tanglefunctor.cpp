#include "tanglesig/tanglefunctor.hpp"

#include <cstdlib>
#include <numeric>

#include "tanglesig/error.hpp"
#include "tanglesig/linalg.hpp"

namespace tanglesig {

namespace {

struct UnionFind {
  std::vector<int> parent;

  int make() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

FreeWord meridian(int arc, int orientation) { return {orientation > 0 ? arc + 1 : -(arc + 1)}; }

// Fox derivatives of a disk loop, in arc coordinates.
CMatrix inclusion(const std::vector<FreeWord>& words, const std::vector<cplx>& values) {
  CMatrix out(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(words.size()));
  for (std::size_t j = 0; j < words.size(); ++j) {
    out.col(static_cast<Eigen::Index>(j)) = fox_gradient(words[j], values);
  }
  return out;
}

std::vector<cplx> arc_values(const TanglePresentation& p, const Omega& omega) {
  std::vector<cplx> v;
  v.reserve(p.arc_count());
  for (int c : p.arc_colours) v.push_back(omega[static_cast<std::size_t>(c - 1)]);
  return v;
}

}  // namespace

TanglePresentation presentation(const TangleWord& t) {
  UnionFind arcs;
  std::vector<int> colour;
  std::vector<int> current;
  struct Crossing {
    int over, under_in, under_out, writhe;
  };
  std::vector<Crossing> crossings;

  const ColouredObject& src = t.source();
  for (std::size_t j = 1; j <= src.size(); ++j) {
    current.push_back(arcs.make());
    colour.push_back(src.colour(j));
  }
  std::vector<int> bottom_arcs = current;

  for (std::size_t k = 0; k < t.slices().size(); ++k) {
    const Slice& s = t.slices()[k];
    const ColouredObject& below = t.levels()[k];
    const auto i = static_cast<std::size_t>(s.pos - 1);
    switch (s.kind) {
      case Slice::Kind::Crossing: {
        // sign +1: the strand from position i+1 passes over to position i.
        const std::size_t over_pos = s.sign > 0 ? i + 1 : i;
        const std::size_t under_pos = s.sign > 0 ? i : i + 1;
        const int over = current[over_pos];
        const int under = current[under_pos];
        const int fresh = arcs.make();
        colour.push_back(colour[static_cast<std::size_t>(under)]);
        const int writhe = s.sign * below.orientation(i + 1) * below.orientation(i + 2);
        if (below.orientation(under_pos + 1) > 0)
          crossings.push_back({over, under, fresh, writhe});
        else
          crossings.push_back({over, fresh, under, writhe});
        current[i] = s.sign > 0 ? over : fresh;
        current[i + 1] = s.sign > 0 ? fresh : over;
        break;
      }
      case Slice::Kind::Cup: {
        const int fresh = arcs.make();
        colour.push_back(s.colour);
        current.insert(current.begin() + static_cast<std::ptrdiff_t>(i), {fresh, fresh});
        break;
      }
      case Slice::Kind::Cap:
        arcs.join(current[i], current[i + 1]);
        current.erase(current.begin() + static_cast<std::ptrdiff_t>(i),
                      current.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        break;
    }
  }

  // Renumber union-find classes as consecutive generators.
  std::vector<int> index(arcs.parent.size(), -1);
  TanglePresentation p;
  p.mu = src.mu;
  for (std::size_t a = 0; a < arcs.parent.size(); ++a) {
    const auto root = static_cast<std::size_t>(arcs.find(static_cast<int>(a)));
    if (index[root] < 0) {
      index[root] = static_cast<int>(p.arc_colours.size());
      p.arc_colours.push_back(colour[root]);
    }
  }
  auto gen = [&](int a) { return index[static_cast<std::size_t>(arcs.find(a))]; };

  for (const auto& c : crossings) {
    // u_out = o^{-e} u_in o^{e}, written as u_out^{-1} o^{-e} u_in o^{e}.
    const int o = gen(c.over) + 1;
    p.relators.push_back(
        free_reduce({-(gen(c.under_out) + 1), -c.writhe * o, gen(c.under_in) + 1, c.writhe * o}));
  }
  for (std::size_t j = 0; j < src.size(); ++j) {
    p.bottom_words.push_back(meridian(gen(bottom_arcs[j]), src.orientation(j + 1)));
  }
  const ColouredObject& tgt = t.target();
  for (std::size_t j = 0; j < tgt.size(); ++j) {
    p.top_words.push_back(meridian(gen(current[j]), tgt.orientation(j + 1)));
  }
  return p;
}

TwistedH1 twisted_h1(const TanglePresentation& p, const Omega& omega, double tol) {
  require_off_forbidden_locus(omega, tol);
  const auto values = arc_values(p, omega);
  TwistedH1 h;
  const auto m = static_cast<Eigen::Index>(values.size());
  h.boundary1 = CMatrix(1, m);
  for (Eigen::Index a = 0; a < m; ++a) h.boundary1(0, a) = values[static_cast<std::size_t>(a)] - 1.0;
  h.boundary2 = inclusion(p.relators, values);
  h.cycles = linalg::null_space(h.boundary1, tol);
  h.boundaries = linalg::column_space(h.boundary2, tol);
  return h;
}

FunctorValue functor_value(const TangleWord& t, const Omega& omega, double tol) {
  require_off_forbidden_locus(omega, tol);
  const TanglePresentation p = presentation(t);
  const auto values = arc_values(p, omega);
  const DiskForm bottom = intersection_form(t.source(), omega, tol);
  const DiskForm top = intersection_form(t.target(), omega, tol);

  const CMatrix ib = inclusion(p.bottom_words, values) * bottom.model.reduced_basis();
  const CMatrix it = inclusion(p.top_words, values) * top.model.reduced_basis();
  const CMatrix d2 = inclusion(p.relators, values);

  const Eigen::Index rows = static_cast<Eigen::Index>(values.size());
  const Eigen::Index nb = ib.cols();
  const Eigen::Index nt = it.cols();
  CMatrix j(rows, nb + nt + d2.cols());
  j << -ib, it, d2;
  const CMatrix kernel = linalg::null_space(j, tol);
  CMatrix spanning(nb + nt, kernel.cols());
  spanning << kernel.topRows(nb), kernel.middleRows(nb, nt);

  FunctorValue out{IsotropicRelation(bottom.space(), top.space(), spanning, tol), true, {}};
  if (!is_admissible(t.source(), omega, tol) || !is_admissible(t.target(), omega, tol)) {
    out.lagrangian_expected = false;
    out.warning = "boundary admissibility fails; value is isotropic but need not be Lagrangian";
  }
  return out;
}

}  // namespace tanglesig
