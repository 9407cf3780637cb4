#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>

#include "oracles.hpp"
#include "tanglesig/error.hpp"
#include "tanglesig/hermforms.hpp"
#include "tanglesig/linalg.hpp"

using namespace tanglesig;

namespace {

constexpr int kCases = 100;
const cplx I(0.0, 1.0);

SkewSpace random_space(std::mt19937& rng, Eigen::Index n) {
  return SkewSpace(I * oracle::random_hermitian(rng, n));
}

// A random Lagrangian of (-H) + H: the diagonal moved by a random unitary of that space.
IsotropicRelation random_relation(std::mt19937& rng, const SkewSpace& h, bool shrink) {
  const SkewSpace amb = relation_ambient(h, h);
  const CMatrix u = oracle::random_unitary_for(rng, amb.form());
  const Eigen::Index n = h.dim();
  CMatrix diag(2 * n, n);
  diag << CMatrix::Identity(n, n), CMatrix::Identity(n, n);
  CMatrix span = u * diag;
  if (shrink && n > 1) span = span.leftCols(n - 1).eval();
  return IsotropicRelation(h, h, span);
}

struct Triple {
  SkewSpace h;
  std::array<Subspace, 3> l;
};

Triple random_triple(std::mt19937& rng) {
  std::uniform_int_distribution<int> dim(1, 4);
  const Eigen::Index k = dim(rng);
  const SkewSpace h(oracle::split_form(k));
  const CMatrix u = oracle::random_unitary_for(rng, h.form(), 0.3);
  Triple t{h, {}};
  for (auto& l : t.l) l = Subspace(h, u * oracle::random_lagrangian(rng, k));
  return t;
}

}  // namespace

TEST_CASE("hermitian_signature") {
  const cplx w = oracle::unit(0.25);
  CMatrix m(1, 1);
  m(0, 0) = -2.0 + 2.0 * w.real();
  const auto s = hermitian_signature(m);
  CHECK(s.plus == 0);
  CHECK(s.minus == 1);
  CHECK(s.null == 0);
  CHECK(s.signature() == -1);

  const auto z = hermitian_signature(CMatrix::Zero(3, 3));
  CHECK(z.null == 3);
  CHECK(z.signature() == 0);

  CMatrix t(2, 2);
  t << -2, 1, 1, -2;
  t *= 2.0;  // eigenvalues -2 and -6
  CHECK(hermitian_signature(t).minus == 2);
  CHECK(hermitian_signature(t).signature() == oracle::descartes_signature(t));

  CMatrix nh(2, 2);
  nh << 1, 1, 0, 1;
  CHECK_THROWS_AS(hermitian_signature(nh), Error);

  CMatrix band = CMatrix::Zero(2, 2);
  band(0, 0) = 5e-9;
  try {
    hermitian_signature(band);
    FAIL("expected IllConditioned");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IllConditioned);
  }
}

TEST_CASE("signature agrees with Descartes and is congruence invariant") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int c = 0; c < kCases; ++c) {
    const Eigen::Index n = dim(rng);
    const CMatrix h = oracle::random_hermitian(rng, n);
    const int s = hermitian_signature(h).signature();
    CHECK(s == oracle::descartes_signature(h));
    const CMatrix p = oracle::random_matrix(rng, n, n);
    CHECK(hermitian_signature(p.adjoint() * h * p).signature() == s);
  }
}

TEST_CASE("annihilator") {
  std::mt19937 rng(7);
  const SkewSpace h = random_space(rng, 4);
  CHECK(annihilator(Subspace::zero(h)).dim() == 4);
  CHECK(annihilator(Subspace::whole(h)).dim() == 0);
  for (int c = 0; c < kCases; ++c) {
    std::uniform_int_distribution<int> k(0, 4);
    const CMatrix v = oracle::random_matrix(rng, 4, k(rng));
    const Subspace s = Subspace::span(h, v);
    const auto rank = linalg::numerical_rank(h.form() * s.basis());
    CHECK(annihilator(s).dim() == 4 - rank);
    CHECK(linalg::max_abs(s.basis().adjoint() * h.form() * annihilator(s).basis()) < 1e-9);
  }
}

TEST_CASE("maslov basics") {
  std::mt19937 rng(21);
  for (int c = 0; c < 20; ++c) {
    const Triple t = random_triple(rng);
    CHECK(maslov(t.l[0], t.l[0], t.l[0]) == 0);
  }
  const SkewSpace h = random_space(rng, 3);
  const Subspace d = diagonal(h).space();
  CHECK(maslov(d, d, d) == 0);

  const SkewSpace s(oracle::split_form(1));
  CMatrix notiso(2, 1);
  notiso << 1, I;
  CHECK_THROWS_AS(maslov(Subspace(s, notiso), Subspace(s, notiso), Subspace(s, notiso)), Error);
}

TEST_CASE("maslov is antisymmetric under permutations") {
  std::mt19937 rng(22);
  int nonzero = 0;
  for (int c = 0; c < kCases; ++c) {
    const Triple t = random_triple(rng);
    const int m = maslov(t.l[0], t.l[1], t.l[2]);
    nonzero += m != 0;
    std::array<int, 3> p{0, 1, 2};
    do {
      int inversions = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) inversions += p[i] > p[j];
      const int sign = inversions % 2 ? -1 : 1;
      CHECK(maslov(t.l[p[0]], t.l[p[1]], t.l[p[2]]) == sign * m);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  CHECK(nonzero > 10);
}

TEST_CASE("maslov is additive and basis independent") {
  std::mt19937 rng(23);
  for (int c = 0; c < kCases; ++c) {
    const Triple a = random_triple(rng);
    const Triple b = random_triple(rng);
    const int sum = maslov(direct_sum(a.l[0], b.l[0]), direct_sum(a.l[1], b.l[1]),
                           direct_sum(a.l[2], b.l[2]));
    CHECK(sum == maslov(a.l[0], a.l[1], a.l[2]) + maslov(b.l[0], b.l[1], b.l[2]));

    std::array<Subspace, 3> moved;
    for (int i = 0; i < 3; ++i) {
      const Eigen::Index k = a.l[i].dim();
      moved[i] = Subspace(a.h, a.l[i].basis() * oracle::random_matrix(rng, k, k));
    }
    CHECK(maslov(moved[0], moved[1], moved[2]) == maslov(a.l[0], a.l[1], a.l[2]));
  }
}

TEST_CASE("meyer basics") {
  std::mt19937 rng(31);
  const SkewSpace h = random_space(rng, 3);
  const CMatrix g = oracle::random_unitary_for(rng, h.form());
  CHECK(meyer(CMatrix::Identity(3, 3), g, h) == 0);
  CHECK(meyer(g, CMatrix::Identity(3, 3), h) == 0);
  CHECK_THROWS_AS(meyer(oracle::random_matrix(rng, 3, 3), g, h), Error);
}

TEST_CASE("meyer cocycle identity") {
  std::mt19937 rng(32);
  std::uniform_int_distribution<int> dim(1, 4);
  int nonzero = 0;
  for (int c = 0; c < kCases; ++c) {
    const SkewSpace h = random_space(rng, dim(rng));
    const CMatrix a = oracle::random_unitary_for(rng, h.form());
    const CMatrix b = oracle::random_unitary_for(rng, h.form());
    const CMatrix d = oracle::random_unitary_for(rng, h.form());
    const int lhs = meyer(a, b, h) + meyer(a * b, d, h);
    const int rhs = meyer(a, b * d, h) + meyer(b, d, h);
    CHECK(lhs == rhs);
    nonzero += meyer(a, b, h) != 0;
  }
  CHECK(nonzero > 10);
}

TEST_CASE("meyer: direct sums, bounds, preimages, basis change, graph bridge") {
  std::mt19937 rng(33);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int c = 0; c < kCases; ++c) {
    const SkewSpace h1 = random_space(rng, dim(rng));
    const SkewSpace h2 = random_space(rng, dim(rng));
    const CMatrix g1 = oracle::random_unitary_for(rng, h1.form());
    const CMatrix g2 = oracle::random_unitary_for(rng, h1.form());
    const CMatrix k1 = oracle::random_unitary_for(rng, h2.form());
    const CMatrix k2 = oracle::random_unitary_for(rng, h2.form());
    const int m = meyer(g1, g2, h1);
    CHECK(meyer(linalg::block_diag(g1, k1), linalg::block_diag(g2, k2), direct_sum(h1, h2)) ==
          m + meyer(k1, k2, h2));

    MeyerData data = meyer_data(g1, g2);
    CHECK(std::abs(m) <= data.e.cols());
    CHECK(data.e.cols() <= h1.dim());

    // Other preimages: add kernel vectors of g1^{-1} - I and I - g2.
    const CMatrix ka = linalg::null_space(data.a);
    const CMatrix kb = linalg::null_space(data.b);
    if (ka.cols() > 0) data.x1 += ka * oracle::random_matrix(rng, ka.cols(), data.e.cols());
    if (kb.cols() > 0) data.x2 += kb * oracle::random_matrix(rng, kb.cols(), data.e.cols());
    CHECK(meyer_from(data, h1) == m);

    // Another basis of E.
    MeyerData other = meyer_data(g1, g2);
    const CMatrix p = oracle::random_matrix(rng, other.e.cols(), other.e.cols());
    other.e = other.e * p;
    other.x1 = other.x1 * p;
    other.x2 = other.x2 * p;
    CHECK(meyer_from(other, h1) == m);

    // Meyer = -Maslov of the graphs.
    const Subspace a = graph_of(g1.inverse(), h1, h1).space();
    const Subspace d = diagonal(h1).space();
    const Subspace b = graph_of(g2, h1, h1).space();
    CHECK(maslov(a, d, b) == -m);
  }
}

TEST_CASE("relation composition") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int c = 0; c < kCases; ++c) {
    const SkewSpace h = random_space(rng, dim(rng));
    const IsotropicRelation n1 = random_relation(rng, h, c % 3 == 0);
    const IsotropicRelation n2 = random_relation(rng, h, false);
    const IsotropicRelation n3 = random_relation(rng, h, c % 5 == 0);
    const IsotropicRelation d = diagonal(h);
    CHECK(compose_relations(d, n1).same_as(n1));
    CHECK(compose_relations(n1, d).same_as(n1));
    const IsotropicRelation n12 = compose_relations(n1, n2);
    CHECK(n12.space().is_isotropic());
    CHECK(compose_relations(n12, n3).same_as(compose_relations(n1, compose_relations(n2, n3))));

    const CMatrix a = oracle::random_unitary_for(rng, h.form());
    const CMatrix b = oracle::random_unitary_for(rng, h.form());
    CHECK(compose_relations(graph_of(a, h, h), graph_of(b, h, h)).same_as(graph_of(b * a, h, h)));
  }
  std::mt19937 r2(42);
  const SkewSpace h2 = random_space(r2, 2);
  const SkewSpace h3 = random_space(r2, 3);
  CHECK_THROWS_AS(compose_relations(diagonal(h2), diagonal(h3)), Error);
}

TEST_CASE("direct sums and Lagrangians") {
  std::mt19937 rng(51);
  const SkewSpace a = random_space(rng, 2);
  const SkewSpace b = random_space(rng, 3);
  CHECK(direct_sum(a, b).dim() == 5);
  const IsotropicRelation r = direct_sum(diagonal(a), diagonal(b));
  CHECK(r.same_as(diagonal(direct_sum(a, b))));
  CHECK(r.space().is_lagrangian());
  CHECK(diagonal(a).space().is_lagrangian());
  CHECK_THROWS_AS(SkewSpace(oracle::random_hermitian(rng, 2)), Error);
}
