#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qgrass/exec.hpp"
#include "qgrass/numeric.hpp"
#include "qgrass/partitions.hpp"
#include "qgrass/qring.hpp"
#include "qgrass/rootdata.hpp"
#include "qgrass/symfun.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qgrass {

/// Per-fiber-point data shared by all residue sums over a box: the label
/// tuples in enumeration order, cached elementary values E_0..E_d, squared
/// Vandermonde weights and the top-class values E_d^c.
template <class R>
struct FiberData {
  BoxShape box;
  std::vector<IndexTuple> tuples;
  std::vector<std::vector<Cplx<R>>> elem;
  std::vector<R> vand2;
  std::vector<Cplx<R>> top;
};

template <class R>
FiberData<R> make_fiber_data(const BoxShape& box) {
  FiberData<R> f{box, enumerate_index_tuples(box), {}, {}, {}};
  f.elem.reserve(f.tuples.size());
  f.vand2.reserve(f.tuples.size());
  f.top.reserve(f.tuples.size());
  for (const auto& I : f.tuples) {
    auto z = root_tuple<R>(I);
    f.elem.push_back(elementary_all(std::span<const Cplx<R>>(z), box.d));
    f.vand2.push_back(vandermonde_sq(std::span<const Cplx<R>>(z)));
    f.top.push_back(cpow(f.elem.back()[static_cast<size_t>(box.d)], box.c()));
  }
  return f;
}

template <class R>
struct ViResult {
  bool admissible = false;
  BigInt value = 0;
  R residual = R(0);
};

/// Nearest integer with the certification distance |z - round(z)|.
template <class R>
std::pair<BigInt, R> round_to_integer(const Cplx<R>& z) {
  using std::floor;
  using std::sqrt;
  R f = floor(z.re + R(0.5));
  if (!(f < R(4.0e18) && f > R(-4.0e18)))
    throw precision_error("round_to_integer: value too large to certify");
  BigInt v(static_cast<long long>(f));
  R dr = z.re - f;
  return {v, sqrt(dr * dr + z.im * z.im)};
}

template <class R>
ViResult<R> vi_invariant_fiber(const FiberData<R>& fiber, const Partition& lam, const Partition& mu,
                               const Partition& nu, int k) {
  const BoxShape& box = fiber.box;
  if (!lam.fits(box) || !mu.fits(box) || !nu.fits(box))
    throw std::invalid_argument("vi_invariant: partition outside box");
  if (k < 0 || box.c() * box.d + k * box.n != lam.size() + mu.size() + nu.size()) return {};

  const size_t m = fiber.tuples.size();
  std::vector<Cplx<R>> summands(m);
  for (size_t j = 0; j < m; ++j) {
    std::span<const Cplx<R>> e(fiber.elem[j]);
    Cplx<R> s = schur_from_elementary(lam, e) * schur_from_elementary(mu, e) *
                schur_from_elementary(nu, e);
    summands[j] = s * fiber.vand2[j] / fiber.top[j];
  }
  Cplx<R> total = pairwise_sum(std::span<const Cplx<R>>(summands));
  R nd(1);
  for (int i = 0; i < box.d; ++i) nd *= R(box.n);
  total = total / nd;
  auto [value, residual] = round_to_integer(total);
  return {true, value, residual};
}

/// Residue-sum evaluation of a single invariant. The Exec policy controls
/// whether the summand buffer is filled by OpenMP workers; the reduction
/// tree is the same either way.
template <class R>
ViResult<R> vi_invariant(const Partition& lam, const Partition& mu, const Partition& nu, int k,
                         const BoxShape& box, Exec exec = Exec::serial) {
  if (exec == Exec::serial) {
    auto fiber = make_fiber_data<R>(box);
    return vi_invariant_fiber(fiber, lam, mu, nu, k);
  }
  if (!lam.fits(box) || !mu.fits(box) || !nu.fits(box))
    throw std::invalid_argument("vi_invariant: partition outside box");
  if (k < 0 || box.c() * box.d + k * box.n != lam.size() + mu.size() + nu.size()) return {};
  auto fiber = make_fiber_data<R>(box);
  const long m = static_cast<long>(fiber.tuples.size());
  std::vector<Cplx<R>> summands(static_cast<size_t>(m));
#ifdef _OPENMP
#pragma omp parallel
  {
    extended_precision::thread_init();
#pragma omp for schedule(static)
    for (long j = 0; j < m; ++j) {
      std::span<const Cplx<R>> e(fiber.elem[static_cast<size_t>(j)]);
      Cplx<R> s = schur_from_elementary(lam, e) * schur_from_elementary(mu, e) *
                  schur_from_elementary(nu, e);
      summands[static_cast<size_t>(j)] = s * fiber.vand2[static_cast<size_t>(j)] / fiber.top[static_cast<size_t>(j)];
    }
  }
#else
  for (long j = 0; j < m; ++j) {
    std::span<const Cplx<R>> e(fiber.elem[static_cast<size_t>(j)]);
    Cplx<R> s = schur_from_elementary(lam, e) * schur_from_elementary(mu, e) *
                schur_from_elementary(nu, e);
    summands[static_cast<size_t>(j)] = s * fiber.vand2[static_cast<size_t>(j)] / fiber.top[static_cast<size_t>(j)];
  }
#endif
  Cplx<R> total = pairwise_sum(std::span<const Cplx<R>>(summands));
  R nd(1);
  for (int i = 0; i < box.d; ++i) nd *= R(box.n);
  total = total / nd;
  auto [value, residual] = round_to_integer(total);
  return ViResult<R>{true, value, residual};
}

template <class R>
struct GwRow {
  Partition lam, mu, nu;
  int k = 0;
  BigInt exact = 0;   // combinatorial engine
  BigInt rounded = 0; // residue-sum engine
  R residual = R(0);
};

/// Full table of nonzero invariants for a box, computed independently by
/// both engines. Rows appear in canonical (lam, mu, nu) order regardless of
/// the execution policy.
template <class R>
std::vector<GwRow<R>> gw_table(const BoxShape& box, Exec exec = Exec::serial) {
  const auto parts = enumerate_box(box);
  const auto fiber = make_fiber_data<R>(box);
  const size_t N = parts.size();
  std::vector<std::vector<GwRow<R>>> buckets(N * N);

  auto work = [&](size_t p) {
    const Partition& lam = parts[p / N];
    const Partition& mu = parts[p % N];
    RingElement prod =
        multiply(RingElement::schubert(box, lam), RingElement::schubert(box, mu));
    for (const Partition& nu : parts) {
      int total = lam.size() + mu.size() + nu.size() - box.c() * box.d;
      if (total < 0 || total % box.n != 0) continue;
      int k = total / box.n;
      BigInt exact = prod.coefficient(k, poincare_dual(nu, box));
      ViResult<R> vi = vi_invariant_fiber(fiber, lam, mu, nu, k);
      if (exact != 0 || vi.value != 0)
        buckets[p].push_back(GwRow<R>{lam, mu, nu, k, exact, vi.value, vi.residual});
    }
  };

  const long total = static_cast<long>(N * N);
  if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      extended_precision::thread_init();
#pragma omp for schedule(dynamic)
      for (long p = 0; p < total; ++p) work(static_cast<size_t>(p));
    }
#else
    for (long p = 0; p < total; ++p) work(static_cast<size_t>(p));
#endif
  } else {
    for (long p = 0; p < total; ++p) work(static_cast<size_t>(p));
  }

  std::vector<GwRow<R>> rows;
  for (auto& b : buckets)
    for (auto& r : b) rows.push_back(std::move(r));
  return rows;
}

/// Numeric expansion of a symmetric evaluation oracle in the Schubert
/// basis via the weighted fiber sum; degree is the homogeneity degree of
/// the oracle (coefficients with |nu| not congruent to it mod n vanish).
template <class R>
using SymOracle = std::function<Cplx<R>(std::span<const Cplx<R>>)>;

template <class R>
std::map<Partition, Cplx<R>, CanonicalLess> expand_numeric(const SymOracle<R>& oracle, int degree,
                                                           const Cplx<R>& t, const BoxShape& box,
                                                           Exec exec = Exec::serial) {
  (void)degree;
  const auto parts = enumerate_box(box);
  const auto tuples = enumerate_index_tuples(box);
  const size_t m = tuples.size();
  const Cplx<R> tinv = Cplx<R>(R(1)) / t;

  // contributions[j] holds the summand of every coefficient at fiber index j
  std::vector<std::vector<Cplx<R>>> contributions(m);
  auto work = [&](size_t j) {
    auto z = root_tuple_scaled(t, tuples[j]);
    Cplx<R> pval = oracle(std::span<const Cplx<R>>(z));
    R w = vandermonde_sq<R>(tuples[j]);
    std::vector<Cplx<R>> zi(z.size());
    for (size_t i = 0; i < z.size(); ++i)
      zi[i] = tinv * conj(eval_root<R>(tuples[j].doubled()[i], box.n));
    auto elem = elementary_all(std::span<const Cplx<R>>(zi), box.d);
    contributions[j].reserve(parts.size());
    for (const Partition& nu : parts)
      contributions[j].push_back(pval * schur_from_elementary(nu, std::span<const Cplx<R>>(elem)) * w);
  };

  if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      extended_precision::thread_init();
#pragma omp for schedule(static)
      for (long j = 0; j < static_cast<long>(m); ++j) work(static_cast<size_t>(j));
    }
#else
    for (size_t j = 0; j < m; ++j) work(j);
#endif
  } else {
    for (size_t j = 0; j < m; ++j) work(j);
  }

  R nd(1);
  for (int i = 0; i < box.d; ++i) nd *= R(box.n);
  std::map<Partition, Cplx<R>, CanonicalLess> out;
  std::vector<Cplx<R>> col(m);
  for (size_t pi = 0; pi < parts.size(); ++pi) {
    for (size_t j = 0; j < m; ++j) col[j] = contributions[j][pi];
    out[parts[pi]] = pairwise_sum(std::span<const Cplx<R>>(col)) / nd;
  }
  return out;
}

/// Exact pairing: the (k, coefficient) of the top rectangular class in
/// s_lam * s_mu, when present.
std::optional<std::pair<int, BigInt>> quantum_pairing(const Partition& lam, const Partition& mu,
                                                      const BoxShape& box);

}  // namespace qgrass
