// Times the OpenMP kernels against the serial reference paths and checks
// that both produce identical output (the reductions are ordered, so the
// results must match bit for bit, not just within tolerance).
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qgrass/exec.hpp"
#include "qgrass/gwcalc.hpp"
#include "qgrass/verify.hpp"

using namespace qgrass;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double best_ms(F&& body, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto start = Clock::now();
    body();
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (ms < best) best = ms;
  }
  return best;
}

void print_row(const std::string& kernel, const BoxShape& box, double serial_ms,
               double parallel_ms, bool identical) {
  std::printf("%-18s  (%d,%d)  %10.2f  %12.2f  %7.2fx  %s\n", kernel.c_str(), box.d, box.n,
              serial_ms, parallel_ms, serial_ms / parallel_ms, identical ? "yes" : "NO");
}

bool same_table(const std::vector<GwRow<double>>& a, const std::vector<GwRow<double>>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].exact != b[i].exact || a[i].rounded != b[i].rounded ||
        a[i].residual != b[i].residual)
      return false;
  return true;
}

void bench_gw_table(const BoxShape& box, int reps) {
  auto serial = gw_table<double>(box, Exec::serial);
  auto parallel = gw_table<double>(box, Exec::parallel);
  double s = best_ms([&] { gw_table<double>(box, Exec::serial); }, reps);
  double p = best_ms([&] { gw_table<double>(box, Exec::parallel); }, reps);
  print_row("gw-table", box, s, p, same_table(serial, parallel));
}

void bench_orthogonality(const BoxShape& box, int reps) {
  const Cplx<double> t = Cplx<double>::from(1.0);
  bool identical = true;
  double s = 0.0, p = 0.0;
  for (OrthoCheck c : all_checks()) {
    auto rs = check_orthogonality<double>(box, c, t, Exec::serial);
    auto rp = check_orthogonality<double>(box, c, t, Exec::parallel);
    identical = identical && rs.max_residual == rp.max_residual && rs.witness == rp.witness;
    s += best_ms([&] { check_orthogonality<double>(box, c, t, Exec::serial); }, reps);
    p += best_ms([&] { check_orthogonality<double>(box, c, t, Exec::parallel); }, reps);
  }
  print_row("pairing-suite", box, s, p, identical);
}

void bench_inequality(const BoxShape& box, int reps) {
  auto rs = inequality_scan<double>(box, Exec::serial);
  auto rp = inequality_scan<double>(box, Exec::parallel);
  bool identical = rs.violations == rp.violations && rs.worst_excess == rp.worst_excess &&
                   rs.rows.size() == rp.rows.size();
  for (size_t i = 0; identical && i < rs.rows.size(); ++i)
    identical = rs.rows[i].max_abs == rp.rows[i].max_abs;
  double s = best_ms([&] { inequality_scan<double>(box, Exec::serial); }, reps);
  double p = best_ms([&] { inequality_scan<double>(box, Exec::parallel); }, reps);
  print_row("inequality-scan", box, s, p, identical);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n\n", omp_get_max_threads());
#else
  std::printf("OpenMP unavailable; both columns run the serial path\n\n");
#endif
  std::printf("%-18s  %-5s  %10s  %12s  %8s  %s\n", "kernel", "box", "serial ms", "parallel ms",
              "speedup", "identical");

  bench_gw_table(BoxShape(2, 5), 3);
  bench_gw_table(BoxShape(3, 6), 2);
  bench_orthogonality(BoxShape(2, 5), 3);
  bench_orthogonality(BoxShape(3, 6), 2);
  bench_inequality(BoxShape(3, 7), 3);
  bench_inequality(BoxShape(4, 8), 2);
  return 0;
}
