#include <cmath>
#include <vector>

#include "doctest.h"
#include "qgrass/verify.hpp"

using namespace qgrass;

namespace {
using C = Cplx<double>;
}

TEST_CASE("check names round-trip and accept aliases") {
  for (auto check : all_checks()) CHECK(parse_check(check_name(check)) == check);
  CHECK(parse_check("orthogonality1") == OrthoCheck::prop1);
  CHECK(parse_check("orthogonality2") == OrthoCheck::prop2);
  CHECK(parse_check("orthogonality3") == OrthoCheck::prop3);
  CHECK_THROWS_AS(parse_check("nonsense"), std::invalid_argument);
}

TEST_CASE("tableau counts, frozen values") {
  CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{2}) == BigInt(1));
  CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{1, 1}) == BigInt(1));
  CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == BigInt(2));
  CHECK(lr_coefficient(Partition{}, Partition{2, 1}, Partition{2, 1}) == BigInt(1));
  CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{3}) == BigInt(0));
  CHECK(lr_coefficient(Partition{2}, Partition{2}, Partition{2, 2}) == BigInt(1));
  CHECK(lr_coefficient(Partition{2}, Partition{2}, Partition{3, 1}) == BigInt(1));
  CHECK(lr_coefficient(Partition{2}, Partition{1, 1}, Partition{2, 2}) == BigInt(0));
  // content must be a horizontal strip per row block: multiplicity-free Pieri
  CHECK(lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{4, 3, 2}) == BigInt(2));
}

TEST_CASE("tableau counts agree with classical products in a big box") {
  // s_mu * s_nu coefficients via the engine at k = 0 are tableau counts
  BoxShape box(3, 7);
  auto all = enumerate_box(box);
  for (const auto& lam : all) {
    for (const auto& mu : all) {
      if (lam.size() + mu.size() > 6) continue;  // keep the sweep quick
      auto prod = multiply(RingElement::schubert(box, lam), RingElement::schubert(box, mu));
      for (const auto& nu : all) {
        if (nu.size() != lam.size() + mu.size()) continue;
        CHECK(prod.coefficient(0, nu) == lr_coefficient(lam, mu, nu));
      }
    }
  }
}

TEST_CASE("tableau counts cover every classical coefficient of a full box") {
  BoxShape box(3, 6);
  auto all = enumerate_box(box);
  const int full = box.c() * box.d;
  for (const auto& lam : all) {
    for (const auto& mu : all) {
      if (lam.size() + mu.size() > full) continue;
      auto prod = multiply(RingElement::schubert(box, lam), RingElement::schubert(box, mu));
      for (const auto& nu : all) {
        if (nu.size() != lam.size() + mu.size()) continue;
        CHECK(prod.coefficient(0, nu) == lr_coefficient(lam, mu, nu));
      }
    }
  }
}

TEST_CASE("orthogonality residuals stay at rounding level") {
  for (BoxShape box : {BoxShape(2, 5), BoxShape(3, 6)}) {
    for (double tv : {0.5, 1.0, 2.0}) {
      C t{tv, 0.0};
      for (auto check : all_checks()) {
        auto rep = check_orthogonality<double>(box, check, t);
        INFO(rep.check, " box ", box.to_string(), " t=", tv, " witness ", rep.witness);
        CHECK(rep.max_residual < 1e-9);
      }
    }
  }
}

TEST_CASE("orthogonality catches a broken identity") {
  // sanity: residuals are meaningful, not vacuously zero
  BoxShape box(2, 5);
  auto rep = check_orthogonality<double>(box, OrthoCheck::prop3, C{1.0, 0.0});
  CHECK(rep.max_residual > 0.0);
  CHECK_FALSE(rep.witness.empty());
}

TEST_CASE("schur duality residuals") {
  BoxShape box(2, 5);
  for (const auto& lam : enumerate_box(box))
    for (const auto& I : enumerate_index_tuples(box))
      CHECK(schur_duality_residual<double>(lam, I) < 1e-10);

  // frozen instance: dual-over-top ratio at the symmetric tuple
  auto z = root_tuple<double>(tuple_I0(BoxShape(2, 4)));
  auto e = elementary_all(std::span<const C>(z), 2);
  auto num = schur_from_elementary(Partition{2, 1}, std::span<const C>(e));
  auto den = schur_from_elementary(Partition{2, 2}, std::span<const C>(e));
  auto ratio = num / den;
  CHECK(ratio.re == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(ratio.im) < 1e-12);
}

TEST_CASE("inequality scan finds no violations on small boxes") {
  for (BoxShape box : {BoxShape(2, 4), BoxShape(2, 5), BoxShape(3, 6)}) {
    auto rep = inequality_scan<double>(box);
    CHECK(rep.violations == 0);
    CHECK(rep.rows.size() == enumerate_box(box).size());
    for (const auto& row : rep.rows) {
      CHECK(row.max_abs <= row.bound + 1e-9 * std::max(1.0, row.bound));
    }
  }
}

TEST_CASE("inequality scan: known maxima") {
  BoxShape box(2, 4);
  auto rep = inequality_scan<double>(box);
  for (const auto& row : rep.rows) {
    if (row.lam == Partition{1}) {
      CHECK(row.max_abs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
      CHECK(row.bound == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    }
    if (row.lam == Partition{}) {
      CHECK(row.max_abs == doctest::Approx(1.0));
      CHECK(row.bound == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("inequality bound is attained within tolerance") {
  // the symmetric tuple realizes the bound, so max_abs == bound for all rows
  BoxShape box(3, 6);
  auto rep = inequality_scan<double>(box);
  for (const auto& row : rep.rows)
    CHECK(std::abs(row.max_abs - row.bound) < 1e-9 * std::max(1.0, row.bound));
}
