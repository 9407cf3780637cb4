// Times the OpenMP defect sweep against the serial reference on the same grid.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "tanglesig/signatures.hpp"

using namespace tanglesig;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same_rows(const std::vector<DefectReport>& a, const std::vector<DefectReport>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].lhs != b[i].lhs || a[i].rhs != b[i].rhs || a[i].meyer_rhs != b[i].meyer_rhs ||
        a[i].admissible != b[i].admissible || a[i].error != b[i].error)
      return false;
  }
  return true;
}

void run(const char* name, const TangleWord& t1, const TangleWord& t2, const GridSpec& grid) {
  std::vector<DefectReport> par, ser;
  const double ts = seconds([&] { ser = defect_sweep_serial(t1, t2, grid); });
  const double tp = seconds([&] { par = defect_sweep(t1, t2, grid); });
  std::printf("%-28s points=%6zu serial=%8.3fs parallel=%8.3fs speedup=%5.2f threads=%d %s\n", name,
              grid.size(), ts, tp, ts / tp, omp_get_max_threads(),
              same_rows(par, ser) ? "rows-match" : "ROWS-DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 48;

  const ColouredObject c2(2, {1, 2});
  const auto beta = TangleWord::from_braid(ColouredBraid(c2, {1, 1}));
  run("two-colour beta, beta", beta, beta, GridSpec::uniform(2, n));

  const ColouredObject c3(1, {1, 1, 1, 1});
  const auto a = TangleWord::from_braid(ColouredBraid(c3, {1, 2, -3, 1, 2, 3, 3}));
  const auto b = TangleWord::from_braid(ColouredBraid(c3, {2, -1, 3, 3, 2, 1}));
  run("B4 words, one colour", a, b, GridSpec::uniform(1, n * n));
  return 0;
}
