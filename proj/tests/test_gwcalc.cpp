#include <cmath>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "doctest.h"
#include "qgrass/gwcalc.hpp"
#include "qgrass/verify.hpp"

using namespace qgrass;

namespace {
using C = Cplx<double>;
}

TEST_CASE("residue sum reproduces the named invariants") {
  BoxShape box(2, 4);
  auto r = vi_invariant<double>(Partition{1}, Partition{2, 1}, Partition{2, 2}, 1, box);
  CHECK(r.admissible);
  CHECK(r.value == BigInt(1));
  CHECK(r.residual < 1e-9);

  r = vi_invariant<double>(Partition{1, 1}, Partition{1, 1}, Partition{2, 2}, 1, box);
  CHECK(r.admissible);
  CHECK(r.value == BigInt(0));
  CHECK(r.residual < 1e-9);

  r = vi_invariant<double>(Partition{1}, Partition{1}, Partition{1}, 1, BoxShape(1, 2));
  CHECK(r.admissible);
  CHECK(r.value == BigInt(1));
  CHECK(r.residual < 1e-12);
}

TEST_CASE("degree-inadmissible inputs give the zero result") {
  BoxShape box(2, 4);
  auto r = vi_invariant<double>(Partition{1}, Partition{1}, Partition{1}, 1, box);
  CHECK_FALSE(r.admissible);
  CHECK(r.value == BigInt(0));
}

TEST_CASE("rounding certificate") {
  auto [v, res] = round_to_integer(C{2.9999998, 1e-7});
  CHECK(v == BigInt(3));
  CHECK(res < 1e-6);
  auto [v2, res2] = round_to_integer(C{-1.25, 0.0});
  CHECK(v2 == BigInt(-1));
  CHECK(res2 == doctest::Approx(0.25));
}

TEST_CASE("full table agrees with the combinatorial engine") {
  for (BoxShape box : {BoxShape(1, 3), BoxShape(2, 4)}) {
    auto rows = gw_table<double>(box);
    CHECK_FALSE(rows.empty());
    for (const auto& row : rows) {
      CHECK(row.exact == row.rounded);
      CHECK(row.residual < 1e-8);
      CHECK(row.exact >= 0);
    }
  }
}

TEST_CASE("table rows are symmetric in the first two labels") {
  BoxShape box(2, 4);
  auto rows = gw_table<double>(box);
  auto key = [](const Partition& a, const Partition& b, const Partition& c) {
    return a.to_string() + "|" + b.to_string() + "|" + c.to_string();
  };
  std::map<std::string, BigInt> val;
  for (const auto& row : rows) val[key(row.lam, row.mu, row.nu)] = row.exact;
  for (const auto& row : rows) {
    auto it = val.find(key(row.mu, row.lam, row.nu));
    REQUIRE(it != val.end());
    CHECK(it->second == row.exact);
  }
}

TEST_CASE("k = 0 rows match tableau counts") {
  BoxShape box(2, 4);
  for (const auto& row : gw_table<double>(box)) {
    if (row.k != 0) continue;
    CHECK(row.exact == lr_coefficient(row.lam, row.mu, poincare_dual(row.nu, box)));
  }
}

TEST_CASE("basis reproduction by the numeric expansion") {
  BoxShape box(2, 4);
  for (const Partition& rho : enumerate_box(box)) {
    SymOracle<double> oracle = [&rho](std::span<const C> z) {
      return eval_schur(rho, z);
    };
    auto m = expand_numeric<double>(oracle, rho.size(), C{1.0, 0.0}, box);
    for (const auto& [nu, coeff] : m) {
      double want = (nu == rho) ? 1.0 : 0.0;
      CHECK(std::abs(coeff.re - want) < 1e-9);
      CHECK(std::abs(coeff.im) < 1e-9);
    }
  }
}

TEST_CASE("elementary square expands classically") {
  BoxShape box(2, 4);
  SymOracle<double> oracle = [](std::span<const C> z) {
    auto e1 = eval_elementary(1, z);
    return e1 * e1;
  };
  auto m = expand_numeric<double>(oracle, 2, C{1.0, 0.0}, box);
  CHECK(std::abs(m.at(Partition{2}).re - 1.0) < 1e-9);
  CHECK(std::abs(m.at(Partition{1, 1}).re - 1.0) < 1e-9);
  for (const auto& [nu, coeff] : m) {
    if (nu == Partition{2} || nu == Partition{1, 1}) continue;
    CHECK(std::sqrt(to_double(abs2(coeff))) < 1e-9);
  }
}

TEST_CASE("expansion of a product tracks the engine across t") {
  BoxShape box(2, 4);
  Partition lam{2, 1}, mu{2, 1};
  auto prod = multiply(RingElement::schubert(box, lam), RingElement::schubert(box, mu));
  for (double tval : {0.5, 1.0, 2.0}) {
    C t{tval, 0.0};
    SymOracle<double> oracle = [&](std::span<const C> z) {
      return eval_schur(lam, z) * eval_schur(mu, z);
    };
    auto m = expand_numeric<double>(oracle, lam.size() + mu.size(), t, box);
    for (const auto& [nu, coeff] : m) {
      double want = 0.0;
      for (int k = 0; k <= 3; ++k) {
        BigInt c = prod.coefficient(k, nu);
        if (c != 0) want += static_cast<double>(c.convert_to<long long>()) * std::pow(tval, 4 * k);
      }
      CHECK(std::abs(coeff.re - want) < 1e-8 * std::max(1.0, std::abs(want)));
      CHECK(std::abs(coeff.im) < 1e-8);
    }
  }
}

TEST_CASE("expansion coefficients vanish off the degree class") {
  BoxShape box(2, 4);
  // degree-3 oracle: E_1 * E_2
  SymOracle<double> oracle = [](std::span<const C> z) {
    return eval_elementary(1, z) * eval_elementary(2, z);
  };
  auto m = expand_numeric<double>(oracle, 3, C{1.0, 0.0}, box);
  for (const auto& [nu, coeff] : m) {
    if (nu.size() % 4 == 3) continue;
    CHECK(std::sqrt(to_double(abs2(coeff))) < 1e-9);
  }
}

TEST_CASE("plain fiber sums of off-degree monomials vanish") {
  for (BoxShape box : {BoxShape(2, 4), BoxShape(2, 5)}) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int trial = 0; trial < 8; ++trial) {
      int a = pick(rng), b = pick(rng);
      int deg = a + 2 * b;
      if (deg % box.n == 0) continue;
      std::vector<C> sums;
      for (const auto& I : enumerate_index_tuples(box)) {
        auto z = root_tuple<double>(I);
        auto e1 = eval_elementary(1, std::span<const C>(z));
        auto e2 = eval_elementary(2, std::span<const C>(z));
        sums.push_back(cpow(e1, a) * cpow(e2, b));
      }
      auto total = pairwise_sum(std::span<const C>(sums));
      CHECK(std::sqrt(to_double(abs2(total))) < 1e-9);
    }
  }
}

TEST_CASE("top-class pairing") {
  BoxShape box(2, 4);
  auto p = quantum_pairing(Partition{2}, Partition{2}, box);
  REQUIRE(p.has_value());
  CHECK(p->first == 0);
  CHECK(p->second == BigInt(1));

  // dual partners pair to 1 at k = 0; everything else misses the top class
  BoxShape b25(2, 5);
  for (const auto& lam : enumerate_box(b25)) {
    auto q = quantum_pairing(lam, poincare_dual(lam, b25), b25);
    REQUIRE(q.has_value());
    CHECK(q->first == 0);
    CHECK(q->second == BigInt(1));
  }

  CHECK_FALSE(quantum_pairing(Partition{1}, Partition{1}, BoxShape(1, 2)).has_value());
}

TEST_CASE("extended-precision residue sums certify tightly") {
  extended_precision::set_bits(192);
  auto r = vi_invariant<ExtendedReal>(Partition{1}, Partition{2, 1}, Partition{2, 2}, 1,
                                      BoxShape(2, 4));
  CHECK(r.value == BigInt(1));
  CHECK(r.residual < ExtendedReal("1e-30"));
  extended_precision::set_bits(128);
}
