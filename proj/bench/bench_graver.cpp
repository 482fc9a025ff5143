// Times the OpenMP enumeration kernel against the serial reference on a few
// stock graphs (or one passed on the command line) and checks they agree.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "toricgraph/enumerate.hpp"

using namespace toric;
using clock_type = std::chrono::steady_clock;

namespace {

double run_ms(const std::function<BasisReport()>& f, size_t& count) {
  auto t0 = clock_type::now();
  BasisReport r = f();
  auto t1 = clock_type::now();
  count = r.elements.size();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_one(const std::string& name, const Graph& g) {
  EnumCaps caps;
  caps.candidate_budget = 2'000'000'000LL;
  size_t ns = 0, np = 0;
  double serial = run_ms([&] { return enumerate_graver_serial(g, caps); }, ns);
  double parallel = run_ms([&] { return enumerate_graver(g, caps); }, np);
  BasisReport a = enumerate_graver_serial(g, caps);
  BasisReport b = enumerate_graver(g, caps);
  const char* match = a.binomials() == b.binomials() ? "ok" : "MISMATCH";
  std::printf("%-14s %8zu elements  serial %9.2f ms  parallel %9.2f ms  speedup %5.2fx  %s\n",
              name.c_str(), np, serial, parallel, parallel > 0 ? serial / parallel : 0.0, match);
  if (ns != np || std::string(match) != "ok") std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif
  if (argc > 1) {
    std::ifstream in(argv[1]);
    if (!in) {
      std::fprintf(stderr, "cannot open %s\n", argv[1]);
      return 1;
    }
    std::ostringstream s;
    s << in.rdbuf();
    bench_one(argv[1], parse_graph(s.str()));
    return 0;
  }
  bench_one("K5", complete_graph(5));
  bench_one("K6", complete_graph(6));
  bench_one("family(5,5)", family_graph(5, 5));
  bench_one("family(5,7)", family_graph(5, 7));
  return 0;
}
