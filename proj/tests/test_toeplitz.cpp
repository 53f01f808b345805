#include <cmath>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qgrass/qring.hpp"
#include "qgrass/toeplitz.hpp"

using namespace qgrass;

namespace {

using C = Cplx<double>;

std::mt19937_64& rng() {
  static std::mt19937_64 gen(424242);
  return gen;
}

C random_unit_scale() {
  std::uniform_real_distribution<double> mag(0.4, 1.6);
  std::uniform_real_distribution<double> arg(0.0, 6.28);
  double m = mag(rng()), a = arg(rng());
  return C{m * std::cos(a), m * std::sin(a)};
}

const IndexTuple& random_tuple(const std::vector<IndexTuple>& all) {
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  return all[pick(rng())];
}

double cdist(const C& a, const C& b) { return std::sqrt(to_double(abs2(a - b))); }

ToeplitzPoint<double> identity_point(const BoxShape& box) {
  std::vector<C> bands(static_cast<size_t>(box.n - 1), C{0.0, 0.0});
  return ToeplitzPoint<double>(box, bands, std::nullopt);
}

}  // namespace

TEST_CASE("band layout of a constructed point") {
  BoxShape box(2, 4);
  auto u = fiber_point(C{1.0, 0.0}, tuple_I0(box));
  CHECK(u.band(0).re == doctest::Approx(1.0));
  CHECK(u.band(1).re == doctest::Approx(std::sqrt(2.0)));
  CHECK(std::abs(u.band(1).im) < 1e-14);
  CHECK(u.band(2).re == doctest::Approx(1.0));
  CHECK(cdist(u.band(3), C{0.0, 0.0}) == 0.0);   // above the top generator
  CHECK(cdist(u.band(-1), C{0.0, 0.0}) == 0.0);  // lower triangle
  CHECK(cdist(u.band(7), C{0.0, 0.0}) == 0.0);

  auto dense = u.dense();
  for (int r = 0; r < box.n; ++r) {
    CHECK(dense[static_cast<size_t>(r)][static_cast<size_t>(r)].re == doctest::Approx(1.0));
    for (int s = 0; s < r; ++s)
      CHECK(cdist(dense[static_cast<size_t>(r)][static_cast<size_t>(s)], C{0.0, 0.0}) == 0.0);
  }
  // constant along diagonals
  CHECK(cdist(dense[0][1], dense[2][3]) == 0.0);
}

TEST_CASE("corner minors, small closed forms") {
  BoxShape line(1, 2);
  std::vector<C> bands{C{3.5, -1.0}};
  ToeplitzPoint<double> u(line, bands, std::nullopt);
  CHECK(cdist(corner_minor(u, 1), C{3.5, -1.0}) < 1e-15);

  BoxShape box(2, 4);
  auto v = fiber_point(C{1.3, 0.4}, tuple_I0(box));
  CHECK(cdist(corner_minor(v, box.n - 1), v.band(box.n - 1)) < 1e-13);

  auto id = identity_point(box);
  for (int j = 1; j < box.n; ++j) CHECK(abs_c(corner_minor(id, j)) == 0.0);
}

TEST_CASE("interval minors") {
  BoxShape box(2, 5);
  auto u = fiber_point(C{0.9, 0.2}, IndexTuple(box, {1, 5}));
  CHECK(cdist(interval_minor(u, 3, 2), C{1.0, 0.0}) == 0.0);  // empty convention
  CHECK(cdist(interval_minor(u, 2, 2), u.band(1)) < 1e-14);
  CHECK(cdist(interval_minor(u, 1, 1), C{1.0, 0.0}) == 0.0);  // diagonal entry
}

TEST_CASE("stratum signatures") {
  BoxShape box(2, 4);
  CHECK(stratum_signature(identity_point(box)) == std::set<int>{1, 2, 3});
  CHECK(stratum_signature(fiber_point(C{1.0, 0.0}, tuple_I0(box))) == std::set<int>{1, 3});

  for (BoxShape b : {BoxShape(2, 5), BoxShape(3, 6)}) {
    std::set<int> expect;
    for (int j = 1; j < b.n; ++j)
      if (j != b.d) expect.insert(j);
    auto tuples = enumerate_index_tuples(b);
    for (int trial = 0; trial < 4; ++trial) {
      auto u = fiber_point(random_unit_scale(), random_tuple(tuples));
      CHECK(stratum_signature(u) == expect);
    }
  }
}

TEST_CASE("membership residuals characterize the variety") {
  BoxShape box(2, 5);
  auto tuples = enumerate_index_tuples(box);
  for (int trial = 0; trial < 6; ++trial) {
    auto z = root_tuple_scaled(random_unit_scale(), random_tuple(tuples));
    for (const auto& r : membership_residuals(std::span<const C>(z), box))
      CHECK(std::sqrt(to_double(abs2(r))) < 1e-12);
  }

  // all-zero tuple is the trivial point
  std::vector<C> zero(2, C{0.0, 0.0});
  for (const auto& r : membership_residuals(std::span<const C>(zero), box))
    CHECK(abs_c(r) == 0.0);

  // distinct values with unequal fifth powers fail loudly
  std::vector<C> bad{C{0.9, 0.1}, C{-0.3, 0.8}};
  double worst = 0.0;
  for (const auto& r : membership_residuals(std::span<const C>(bad), box))
    worst = std::max(worst, std::sqrt(to_double(abs2(r))));
  CHECK(worst >= 0.1);

  // repeated roots fail even with equal n-th powers
  auto z = root_tuple<double>(tuple_I0(box));
  std::vector<C> rep{z[0], z[0]};
  worst = 0.0;
  for (const auto& r : membership_residuals(std::span<const C>(rep), box))
    worst = std::max(worst, std::sqrt(to_double(abs2(r))));
  CHECK(worst >= 0.1);
}

TEST_CASE("membership defect of constructed and tampered points") {
  BoxShape box(2, 4);
  auto u = fiber_point(C{2.0, -0.7}, IndexTuple(box, {1, 3}));
  CHECK(membership_defect(u) < 1e-12);

  // nonzero band above the top generator
  std::vector<C> bands{C{1.0, 0.0}, C{0.5, 0.0}, C{0.25, 0.0}};
  ToeplitzPoint<double> bad(box, bands, std::nullopt);
  CHECK(membership_defect(bad) >= 0.1);
}

TEST_CASE("deformation coordinate at fiber points") {
  for (BoxShape box : {BoxShape(1, 3), BoxShape(2, 4), BoxShape(2, 5), BoxShape(3, 6)}) {
    auto tuples = enumerate_index_tuples(box);
    for (int trial = 0; trial < 5; ++trial) {
      C t = random_unit_scale();
      auto u = fiber_point(t, random_tuple(tuples));
      CHECK(cdist(point_q_value(u), cpow(t, box.n)) < 1e-10);
    }
  }
  // trivial point sits over zero
  CHECK(abs_c(point_q_value(identity_point(BoxShape(2, 4)))) == 0.0);
}

TEST_CASE("inverse bands invert the matrix") {
  BoxShape box(3, 6);
  auto u = fiber_point(C{0.8, 0.3}, tuple_I0(box));
  auto y = inverse_entries(u);
  const int n = box.n;
  auto dense = u.dense();
  // v[r][s] = (-1)^(s-r) y_(s-r)
  auto vband = [&](int k) -> C {
    if (k == 0) return C{1.0, 0.0};
    if (k < 0 || k > n - 1) return C{0.0, 0.0};
    C val = y[static_cast<size_t>(k - 1)];
    return (k % 2 == 0) ? val : C{0.0, 0.0} - val;
  };
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      C acc{0.0, 0.0};
      for (int m = 0; m < n; ++m) acc += dense[static_cast<size_t>(r)][static_cast<size_t>(m)] * vband(s - m);
      double want = (r == s) ? 1.0 : 0.0;
      CHECK(cdist(acc, C{want, 0.0}) < 1e-12);
    }
  }
}

TEST_CASE("corner minors of the inverse match complementary corner minors") {
  for (int n : {4, 5, 6, 7}) {
    BoxShape box(2, n);
    auto u = fiber_point(random_unit_scale(), random_tuple(enumerate_index_tuples(box)));
    auto y = inverse_entries(u);
    std::vector<C> ibands(static_cast<size_t>(n - 1));
    for (int k = 1; k <= n - 1; ++k) {
      ibands[static_cast<size_t>(k - 1)] =
          (k % 2 == 0) ? y[static_cast<size_t>(k - 1)] : C{0.0, 0.0} - y[static_cast<size_t>(k - 1)];
    }
    ToeplitzPoint<double> v(box, ibands, std::nullopt);
    auto tri = [](int m) { return m * (m + 1) / 2; };
    for (int j = 1; j <= n - 1; ++j) {
      int sign = ((tri(n - j) + tri(n) - tri(j)) % 2 == 0) ? 1 : -1;
      C lhs = corner_minor(v, j);
      C rhs = corner_minor(u, n - j);
      if (sign < 0) rhs = C{0.0, 0.0} - rhs;
      CHECK(cdist(lhs, rhs) < 1e-10);
    }
  }
}

TEST_CASE("evaluation at variety points") {
  BoxShape box(2, 4);
  auto tuples = enumerate_index_tuples(box);
  for (int trial = 0; trial < 6; ++trial) {
    C t = random_unit_scale();
    const auto& I = random_tuple(tuples);
    auto u = fiber_point(t, I);
    auto z = root_tuple_scaled(t, I);

    for (const auto& lam : enumerate_box(box)) {
      C direct = eval_schur(lam, std::span<const C>(z), SchurMethod::bialternant);
      C via = evaluate(RingElement::schubert(box, lam), u);
      CHECK(cdist(direct, via) < 1e-9);
    }

    // the bare deformation element evaluates to t^n
    auto qel = RingElement::unit(box).q_shifted(1);
    CHECK(cdist(evaluate(qel, u), cpow(t, box.n)) < 1e-9);
  }
}

TEST_CASE("evaluation is a ring homomorphism on sample points") {
  BoxShape box(2, 5);
  auto parts = enumerate_box(box);
  auto tuples = enumerate_index_tuples(box);
  std::uniform_int_distribution<size_t> pick(0, parts.size() - 1);
  int samples = 0;
  while (samples < 30) {
    C t = random_unit_scale();
    auto u = fiber_point(t, random_tuple(tuples));
    auto a = RingElement::schubert(box, parts[pick(rng())]);
    auto b = RingElement::schubert(box, parts[pick(rng())]);
    C lhs = evaluate(multiply(a, b), u);
    C rhs = evaluate(a, u) * evaluate(b, u);
    double scale = std::max(1.0, std::sqrt(to_double(abs2(rhs))));
    CHECK(cdist(lhs, rhs) < 1e-8 * scale);
    ++samples;
  }
}

TEST_CASE("evaluation rejects off-variety points") {
  BoxShape box(2, 4);
  std::vector<C> bands{C{1.0, 0.0}, C{0.5, 0.0}, C{0.25, 0.0}};
  ToeplitzPoint<double> bad(box, bands, std::nullopt);
  CHECK_THROWS_AS(evaluate(RingElement::unit(box), bad), std::domain_error);
  CHECK_THROWS_AS(evaluate(RingElement::unit(BoxShape(2, 5)),
                           fiber_point(C{1.0, 0.0}, tuple_I0(box))),
                  std::invalid_argument);
}

TEST_CASE("rescaling a point") {
  BoxShape box(3, 6);
  C t0{1.0, 0.0};
  auto u = fiber_point(t0, tuple_I0(box));
  C s{0.6, 0.2};
  auto v = scale_point(s, u);
  for (int j = 1; j <= box.d; ++j) CHECK(cdist(v.band(j), cpow(s, j) * u.band(j)) < 1e-13);
  CHECK(cdist(point_q_value(v), cpow(s, box.n) * point_q_value(u)) < 1e-10);
  REQUIRE(v.provenance().has_value());
  CHECK(cdist(v.provenance()->t, s) < 1e-14);
  CHECK(membership_defect(v) < 1e-12);
}

TEST_CASE("inverse corner minors dualize on arbitrary band matrices") {
  // The complementary-minor identity needs nothing beyond det = 1, so it
  // must hold off the variety too.
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  for (int n : {3, 4, 5, 6}) {
    BoxShape box(1, n);
    std::vector<C> bands;
    for (int k = 1; k < n; ++k) bands.push_back(C{entry(rng()), entry(rng())});
    ToeplitzPoint<double> u(box, bands, std::nullopt);

    auto y = inverse_entries(u);
    std::vector<C> ibands(static_cast<size_t>(n - 1));
    for (int k = 1; k <= n - 1; ++k)
      ibands[static_cast<size_t>(k - 1)] =
          (k % 2 == 0) ? y[static_cast<size_t>(k - 1)] : C{0.0, 0.0} - y[static_cast<size_t>(k - 1)];
    ToeplitzPoint<double> v(box, ibands, std::nullopt);

    auto tri = [](int m) { return m * (m + 1) / 2; };
    for (int j = 1; j <= n - 1; ++j) {
      int sign = ((tri(n - j) + tri(n) - tri(j)) % 2 == 0) ? 1 : -1;
      C lhs = corner_minor(v, j);
      C rhs = corner_minor(u, n - j);
      if (sign < 0) rhs = C{0.0, 0.0} - rhs;
      CHECK(cdist(lhs, rhs) < 1e-9);
    }
  }
}

TEST_CASE("the fiber over q = 1 has binomial(n,d) distinct member points") {
  for (BoxShape box : {BoxShape(2, 4), BoxShape(2, 5), BoxShape(3, 6)}) {
    auto tuples = enumerate_index_tuples(box);
    std::vector<ToeplitzPoint<double>> points;
    for (const auto& I : tuples) points.push_back(fiber_point(C{1.0, 0.0}, I));
    CHECK(points.size() == tuples.size());

    for (const auto& u : points) {
      CHECK(membership_defect(u) < 1e-12);
      CHECK(cdist(point_q_value(u), C{1.0, 0.0}) < 1e-12);
    }
    for (size_t a = 0; a < points.size(); ++a) {
      for (size_t b = a + 1; b < points.size(); ++b) {
        double gap = 0.0;
        for (int k = 1; k < box.n; ++k)
          gap = std::max(gap, cdist(points[a].band(k), points[b].band(k)));
        CHECK(gap > 1e-6);
      }
    }
  }
}
