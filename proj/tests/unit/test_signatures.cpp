#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tanglesig/error.hpp"
#include "tanglesig/io.hpp"
#include "tanglesig/linalg.hpp"
#include "tanglesig/representations.hpp"
#include "tanglesig/signatures.hpp"

using namespace tanglesig;

namespace {

const std::string kFixtures = TANGLESIG_FIXTURES;

ClosureData fixture(const std::string& name) {
  return io::parse_closure(io::load_json(kFixtures + "/" + name));
}

TangleWord tangle(const std::string& name) {
  return io::parse_tangle(io::load_json(kFixtures + "/" + name));
}

CMatrix real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  CMatrix m(static_cast<Eigen::Index>(rows.size()),
            static_cast<Eigen::Index>(rows.size() ? rows.begin()->size() : 0));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (double v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

std::vector<int> random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1), sgn(0, 1);
  std::vector<int> w;
  for (int i = 0; i < len; ++i) w.push_back(sgn(rng) ? gen(rng) : -gen(rng));
  return w;
}

CMatrix random_integer_matrix(std::mt19937& rng, Eigen::Index n) {
  std::uniform_int_distribution<int> d(-2, 2);
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

// Product of elementary integer row operations: determinant 1.
CMatrix random_unimodular(std::mt19937& rng, Eigen::Index n) {
  CMatrix p = CMatrix::Identity(n, n);
  std::uniform_int_distribution<Eigen::Index> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-2, 2);
  for (int s = 0; s < 6; ++s) {
    const Eigen::Index i = idx(rng), j = idx(rng);
    if (i == j) continue;
    p.row(i) += static_cast<double>(mult(rng)) * p.row(j);
  }
  return p;
}

}  // namespace

TEST_CASE("lt_signature") {
  const SeifertData hopf{real_matrix({{-1}})};
  for (int k = 1; k < 24; ++k) CHECK(lt_signature(hopf, oracle::unit(k / 24.0)).signature() == -1);
  CHECK(lt_signature(SeifertData{CMatrix::Zero(2, 2)}, oracle::unit(0.3)).signature() == 0);

  const SeifertData trefoil{real_matrix({{-1, 1}, {0, -1}})};
  CHECK(lt_signature(trefoil, -1.0).signature() == -2);
  const CMatrix h = 2.0 * (trefoil.A + trefoil.A.transpose());
  CHECK(oracle::descartes_signature(h) == -2);

  CHECK_THROWS_AS(lt_signature(hopf, 1.0), Error);
}

TEST_CASE("lt_signature: congruence and mirror") {
  std::mt19937 rng(81);
  int checked = 0;
  for (int k = 0; k < 120; ++k) {
    std::uniform_int_distribution<int> nn(1, 4);
    const CMatrix a = random_integer_matrix(rng, nn(rng));
    const CMatrix p = random_unimodular(rng, a.rows());
    for (int g = 1; g < 13; ++g) {
      const cplx w = oracle::unit(g / 13.0);
      try {
        const int s = lt_signature(SeifertData{a}, w).signature();
        CHECK(lt_signature(SeifertData{p * a * p.transpose()}, w).signature() == s);
        CHECK(lt_signature(SeifertData{-CMatrix(a.transpose())}, w).signature() == -s);
        ++checked;
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IllConditioned);
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("mv_signature") {
  const auto hopf2 = std::get<CComplexData>(fixture("hopf2_ccomplex.json"));
  const auto link = std::get<CComplexData>(fixture("twocolour_link_ccomplex.json"));
  int compared = 0;
  for (int a = 1; a < 16; ++a) {
    for (int b = 1; b < 16; ++b) {
      const Omega w = Omega::from_turns({a / 16.0, b / 16.0});
      CHECK(mv_signature(hopf2, w).signature() == 0);
      const double re = ((1.0 - w[0]) * (1.0 - w[1])).real();
      if (std::abs(re) < 1e-9) continue;
      CHECK(mv_signature(link, w).signature() == oracle::twocolour_link_signature(w[0], w[1]));
      ++compared;
    }
  }
  CHECK(compared > 150);

  // One colour reduces to Levine-Tristram.
  std::mt19937 rng(82);
  for (int k = 0; k < 100; ++k) {
    const CMatrix a = random_integer_matrix(rng, 3);
    CComplexData d;
    d.mu = 1;
    d.matrices[{1}] = a;
    d.matrices[{-1}] = a.transpose();
    const Omega w = Omega::from_turns({std::uniform_real_distribution<double>(0.05, 0.95)(rng)});
    CHECK(linalg::max_abs(mv_matrix(d, w) - ((1.0 - w[0]) * a + (1.0 - std::conj(w[0])) * a.transpose())
                                             .transpose()) < 1e-12);
  }

  try {
    fixture("bad_transpose_ccomplex.json");
    FAIL("expected TransposeSymmetryViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TransposeSymmetryViolated);
  }
  CHECK_THROWS_AS(mv_signature(link, Omega::from_turns({0.0, 0.5})), Error);
}

TEST_CASE("seifert_from_braid") {
  const ColouredObject c2(1, {1, 1});
  const CMatrix hopf = seifert_from_braid(ColouredBraid(c2, {1, 1})).A;
  CHECK(hopf.rows() == 1);
  CHECK(std::abs(hopf(0, 0) + 1.0) < 1e-15);
  CHECK(seifert_from_braid(ColouredBraid(c2, {1})).A.rows() == 0);
  CHECK(lt_signature(seifert_from_braid(ColouredBraid(c2, {1})), oracle::unit(0.3)).signature() == 0);

  const SeifertData tre = seifert_from_braid(ColouredBraid(c2, {1, 1, 1}));
  const SeifertData ref{real_matrix({{-1, 1}, {0, -1}})};
  for (int k = 1; k < 13; ++k) {
    CHECK(lt_signature(tre, oracle::unit(k / 13.0)).signature() ==
          lt_signature(ref, oracle::unit(k / 13.0)).signature());
  }
}

TEST_CASE("Seifert oracle agrees with the Burau Alexander polynomial") {
  std::mt19937 rng(83);
  for (int k = 0; k < 100;) {
    std::uniform_int_distribution<int> nn(2, 4);
    const int n = nn(rng);
    const ColouredBraid b(ColouredObject(1, std::vector<int>(n, 1)), random_word(rng, n, 7));
    bool connected = true;
    for (int g = 1; g < n; ++g)
      connected = connected && std::any_of(b.word.begin(), b.word.end(), [g](int x) { return std::abs(x) == g; });
    // A column without crossings splits the closure; the two determinants then differ.
    if (!connected) continue;
    ++k;
    const double t = std::uniform_real_distribution<double>(0.05, 0.45)(rng);
    const cplx w = oracle::unit(t);
    const cplx s = oracle::alexander_seifert(seifert_from_braid(b).A, w);
    const cplx r = oracle::alexander_burau(reduced_rep(b, Omega::from_turns({t})).matrix, n, w);
    // Equal up to a unit +-t^k.
    CHECK(std::abs(std::abs(s) - std::abs(r)) < 1e-8 * std::max(1.0, std::abs(s)));
  }
}

TEST_CASE("defect on the Hopf case") {
  const ColouredObject c(1, {1, 1});
  const auto s = TangleWord::from_braid(ColouredBraid(c, {1}));
  const auto r = defect(s, s, Omega::from_turns({0.25}));
  CHECK(*r.lhs == -1);
  CHECK(*r.rhs == -1);
  CHECK(*r.meyer_rhs == -1);
  CHECK(r.admissible);
  CHECK(r.consistent());

  const auto m = defect(s, s, Omega::from_turns({0.5}));
  CHECK(*m.lhs == -1);
  CHECK(*m.meyer_rhs == 0);
  CHECK_FALSE(m.admissible);
  CHECK(m.consistent());

  const auto id = TangleWord::identity(c);
  const auto z = defect(id, id, Omega::from_turns({0.3}));
  CHECK(*z.lhs == 0);
  CHECK(*z.rhs == 0);
  CHECK(*z.meyer_rhs == 0);

  CHECK_THROWS_AS(defect(s, s, Omega::from_turns({0.0})), Error);
  CHECK_THROWS_AS(defect(s, TangleWord::identity(ColouredObject(1, {1, 1, 1})), Omega::from_turns({0.3})),
                  Error);
}

TEST_CASE("defect beyond braids with fixture closures") {
  const auto t1 = tangle("sigma1sq_c3_tangle.json");
  const auto t2 = tangle("sigma1sq_capcup_tangle.json");
  const auto e = tangle("capcup_tangle.json");
  ClosureOracle braided{fixture("hopf_seifert.json"), fixture("hopf_seifert.json"),
                        fixture("t24_seifert.json")};
  ClosureOracle unlinks{fixture("unlink_seifert.json"), fixture("unlink_seifert.json"),
                        fixture("unlink_seifert.json")};
  for (int k = 1; k < 13; ++k) {
    const Omega w = Omega::from_turns({k / 13.0});
    const auto r = defect(t1, t2, w, braided);
    CHECK(r.admissible);
    CHECK(r.lhs == r.rhs);
    CHECK_FALSE(r.meyer_rhs.has_value());
    const auto q = defect(e, e, w, unlinks);
    CHECK(*q.lhs == 0);
    CHECK(*q.rhs == 0);
  }
}

TEST_CASE("defect identity on random braid pairs") {
  std::mt19937 rng(84);
  int asserted = 0;
  for (int k = 0; k < 150; ++k) {
    std::uniform_int_distribution<int> nn(2, 3), len(0, 6);
    const int n = nn(rng);
    const ColouredObject c(1, std::vector<int>(n, 1));
    const auto a = TangleWord::from_braid(ColouredBraid(c, random_word(rng, n, len(rng))));
    const auto b = TangleWord::from_braid(ColouredBraid(c, random_word(rng, n, len(rng))));
    for (int g = 1; g < 25; g += 5) {
      const Omega w = Omega::from_turns({g / 25.0});
      const auto r = defect(a, b, w);
      if (!r.admissible) continue;
      CHECK(r.error.empty());
      CHECK(r.lhs == r.rhs);
      CHECK(r.rhs == r.meyer_rhs);
      ++asserted;
    }
  }
  CHECK(asserted > 500);
}

TEST_CASE("defect_sweep on the two-colour case") {
  const auto beta = TangleWord::from_braid(ColouredBraid(ColouredObject(2, {1, 2}), {1, 1}));
  ClosureOracle o{fixture("hopf2_ccomplex.json"), fixture("hopf2_ccomplex.json"),
                  fixture("twocolour_link_ccomplex.json")};
  const GridSpec grid = GridSpec::uniform(2, 16);
  const auto rows = defect_sweep(beta, beta, grid, o);
  REQUIRE(rows.size() == 225);
  int violated_on_locus = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    CHECK(r.omega.turns() == grid.point(i).turns());
    const cplx w1 = r.omega[0], w2 = r.omega[1];
    if (r.admissible) {
      CHECK(r.consistent());
      const double re = ((1.0 - w1) * (1.0 - w2) * (1.0 - w1 * w2)).real();
      CHECK(*r.meyer_rhs == (std::abs(re) < 1e-9 ? 0 : oracle::twocolour_meyer(w1, w2)));
    } else {
      CHECK(std::abs(w1 * w2 - 1.0) < 1e-9);
      violated_on_locus += r.lhs != r.rhs;
    }
  }
  CHECK(violated_on_locus > 0);

  const auto one = defect_sweep(beta, beta, GridSpec{{{0.125}, {0.375}}}, o);
  REQUIRE(one.size() == 1);
  const auto direct = defect(beta, beta, Omega::from_turns({0.125, 0.375}), o);
  CHECK(one[0].lhs == direct.lhs);
  CHECK(one[0].rhs == direct.rhs);

  // Rows do not depend on the order of the grid.
  GridSpec reversed = grid;
  for (auto& axis : reversed.axes) std::reverse(axis.begin(), axis.end());
  const auto back = defect_sweep(beta, beta, reversed, o);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = back[rows.size() - 1 - i];
    CHECK(r.rhs == rows[i].rhs);
    CHECK(r.lhs == rows[i].lhs);
  }
}
