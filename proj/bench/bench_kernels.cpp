// Serial vs OpenMP timings for the batch kernels.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <omp.h>

#include "idcycle/graph_io.hpp"
#include "idcycle/implicit_degree.hpp"
#include "idcycle/oracle.hpp"
#include "idcycle/workbench.hpp"

using namespace idcycle;

namespace {

template <typename F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-22s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name, serial, parallel,
              serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const char* catalog_path = argc > 1 ? argv[1] : IDCYCLE_DEFAULT_CATALOG;
  std::printf("threads: %d\n", omp_get_max_threads());

  Graph big = gen_random_graph({GraphModel::Gnp, 3000, 0.01}, 1);
  std::vector<int> a, b;
  double ts = seconds([&] { a = implicit_degrees_serial(big); });
  double tp = seconds([&] { b = implicit_degrees_parallel(big); });
  row("implicit degrees", ts, tp, a == b);

  std::ifstream in(catalog_path);
  if (!in) {
    std::fprintf(stderr, "cannot open %s\n", catalog_path);
    return 1;
  }
  auto catalog = read_graph6_catalog(in);
  VerifyOptions vopts;
  vopts.seed = 42;
  VerifyReport vs, vp;
  ts = seconds([&] { vs = verify_theorem_small_serial(catalog, vopts); });
  tp = seconds([&] { vp = verify_theorem_small_parallel(catalog, vopts); });
  row("verify n<=7", ts, tp, vs == vp);

  HuntOptions hopts;
  hopts.budget = 4000;
  hopts.seed = 7;
  HuntReport hs, hp;
  ts = seconds([&] { hs = hunt_io_counterexamples_serial(hopts); });
  tp = seconds([&] { hp = hunt_io_counterexamples_parallel(hopts); });
  row("hunt 4000", ts, tp, hs == hp);
  return 0;
}
