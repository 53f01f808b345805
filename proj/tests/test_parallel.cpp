#include <vector>

#include "doctest.h"
#include "qgrass/gwcalc.hpp"
#include "qgrass/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace qgrass;

namespace {

using C = Cplx<double>;

struct ThreadGuard {
  ThreadGuard() {
#ifdef _OPENMP
    omp_set_num_threads(4);
#endif
  }
  ~ThreadGuard() {
#ifdef _OPENMP
    omp_set_num_threads(1);
#endif
  }
};

}  // namespace

TEST_CASE("table generation is bit-reproducible across execution policies") {
  ThreadGuard guard;
  for (BoxShape box : {BoxShape(2, 4), BoxShape(2, 5)}) {
    auto serial = gw_table<double>(box, Exec::serial);
    auto parallel = gw_table<double>(box, Exec::parallel);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].lam == parallel[i].lam);
      CHECK(serial[i].mu == parallel[i].mu);
      CHECK(serial[i].nu == parallel[i].nu);
      CHECK(serial[i].k == parallel[i].k);
      CHECK(serial[i].exact == parallel[i].exact);
      CHECK(serial[i].rounded == parallel[i].rounded);
      CHECK(serial[i].residual == parallel[i].residual);  // bitwise
    }
  }
}

TEST_CASE("single invariants are bit-reproducible") {
  ThreadGuard guard;
  BoxShape box(3, 6);
  auto a = vi_invariant<double>(Partition{3, 2, 1}, Partition{2, 1}, Partition{3, 3},
                                1, box, Exec::serial);
  auto b = vi_invariant<double>(Partition{3, 2, 1}, Partition{2, 1}, Partition{3, 3},
                                1, box, Exec::parallel);
  CHECK(a.admissible == b.admissible);
  CHECK(a.value == b.value);
  CHECK(a.residual == b.residual);
}

TEST_CASE("orthogonality sweeps are bit-reproducible") {
  ThreadGuard guard;
  BoxShape box(2, 5);
  for (auto check : all_checks()) {
    auto s = check_orthogonality<double>(box, check, C{1.0, 0.0}, Exec::serial);
    auto p = check_orthogonality<double>(box, check, C{1.0, 0.0}, Exec::parallel);
    CHECK(s.max_residual == p.max_residual);
    CHECK(s.witness == p.witness);
  }
}

TEST_CASE("inequality scans are bit-reproducible") {
  ThreadGuard guard;
  BoxShape box(2, 6);
  auto s = inequality_scan<double>(box, Exec::serial);
  auto p = inequality_scan<double>(box, Exec::parallel);
  REQUIRE(s.rows.size() == p.rows.size());
  CHECK(s.violations == p.violations);
  for (size_t i = 0; i < s.rows.size(); ++i) {
    CHECK(s.rows[i].lam == p.rows[i].lam);
    CHECK(s.rows[i].max_abs == p.rows[i].max_abs);
    CHECK(s.rows[i].argmax == p.rows[i].argmax);
    CHECK(s.rows[i].bound == p.rows[i].bound);
  }
}

TEST_CASE("numeric expansion is bit-reproducible") {
  ThreadGuard guard;
  BoxShape box(2, 5);
  SymOracle<double> oracle = [](std::span<const C> z) {
    return eval_schur(Partition{2, 1}, z) * eval_schur(Partition{1, 1}, z);
  };
  auto s = expand_numeric<double>(oracle, 5, C{0.5, 0.0}, box, Exec::serial);
  auto p = expand_numeric<double>(oracle, 5, C{0.5, 0.0}, box, Exec::parallel);
  REQUIRE(s.size() == p.size());
  for (const auto& [nu, coeff] : s) {
    CHECK(coeff.re == p.at(nu).re);
    CHECK(coeff.im == p.at(nu).im);
  }
}

TEST_CASE("extended precision inside worker threads") {
  ThreadGuard guard;
  extended_precision::set_bits(192);
  auto rows = gw_table<ExtendedReal>(BoxShape(2, 4), Exec::parallel);
  CHECK_FALSE(rows.empty());
  for (const auto& row : rows) {
    CHECK(row.exact == row.rounded);
    CHECK(row.residual < ExtendedReal("1e-30"));
  }
  auto serial = gw_table<ExtendedReal>(BoxShape(2, 4), Exec::serial);
  REQUIRE(serial.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i)
    CHECK(serial[i].residual == rows[i].residual);  // bitwise, via the shared tree
  extended_precision::set_bits(128);
}
