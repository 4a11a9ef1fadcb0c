// Serial vs OpenMP sweep timings; the two runs must agree instance by instance.
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <omp.h>

#include "mipbs/sweep.hpp"

using namespace mipbs;

namespace {

template <class F>
double seconds(F f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same(const std::vector<SweepOutcome>& a, const std::vector<SweepOutcome>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].yes != b[i].yes || a[i].pass != b[i].pass) return false;
  }
  return true;
}

template <class F>
bool bench(const char* name, const std::vector<SubsetSumInstance>& instances, F check) {
  std::vector<SweepOutcome> serial, parallel;
  const double ts = seconds([&] { serial = map_serial(instances, check); });
  const double tp = seconds([&] { parallel = map_parallel(instances, check); });
  const bool agree = same(serial, parallel);
  std::cout << std::left << std::setw(6) << name << std::right << std::setw(8) << instances.size()
            << std::fixed << std::setprecision(3) << std::setw(10) << ts << std::setw(10) << tp
            << std::setw(9) << std::setprecision(2) << ts / tp << "x" << (agree ? "" : "  MISMATCH") << '\n';
  return agree;
}

}  // namespace

int main(int argc, char** argv) {
  const int mip_n = argc > 1 ? std::atoi(argv[1]) : 5;
  const int mbs_n = argc > 2 ? std::atoi(argv[2]) : 2;
  std::cout << "threads " << omp_get_max_threads() << '\n'
            << std::left << std::setw(6) << "sweep" << std::right << std::setw(8) << "inst" << std::setw(10)
            << "serial" << std::setw(10) << "omp" << std::setw(10) << "speedup" << '\n';
  bool ok = bench("mip", enumerate_instances(mip_n, 4, 1), check_mip_instance);
  ok = bench("mbs", enumerate_instances(mbs_n, 3, 0), check_mbs_outcome) && ok;
  return ok ? 0 : 1;
}
