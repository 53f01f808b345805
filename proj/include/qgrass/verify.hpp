#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qgrass/exec.hpp"
#include "qgrass/gwcalc.hpp"
#include "qgrass/numeric.hpp"
#include "qgrass/partitions.hpp"
#include "qgrass/rootdata.hpp"
#include "qgrass/symfun.hpp"
#include "qgrass/totalpos.hpp"

namespace qgrass {

enum class OrthoCheck { littlewood, prop1, prop2, prop3, row_char, row_pd };

OrthoCheck parse_check(const std::string& name);
std::string check_name(OrthoCheck check);
std::vector<OrthoCheck> all_checks();

template <class R>
struct CheckReport {
  std::string check;
  BoxShape box;
  R max_residual = R(0);
  std::string witness;
};

/// Number of skew tableaux of shape nu/lam, content mu, with lattice
/// reverse reading word. Independent of the ring engine.
BigInt lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

namespace detail {

template <class R, class F>
std::vector<std::pair<R, std::string>> run_items(long count, Exec exec, F&& f) {
  std::vector<std::pair<R, std::string>> items(static_cast<size_t>(count));
  if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      extended_precision::thread_init();
#pragma omp for schedule(dynamic)
      for (long i = 0; i < count; ++i) items[static_cast<size_t>(i)] = f(i);
    }
#else
    for (long i = 0; i < count; ++i) items[static_cast<size_t>(i)] = f(i);
#endif
  } else {
    for (long i = 0; i < count; ++i) items[static_cast<size_t>(i)] = f(i);
  }
  return items;
}

template <class R>
CheckReport<R> reduce_items(std::string name, const BoxShape& box,
                            const std::vector<std::pair<R, std::string>>& items) {
  CheckReport<R> rep{std::move(name), box, R(0), ""};
  for (const auto& [res, note] : items) {
    if (res > rep.max_residual) {
      rep.max_residual = res;
      rep.witness = note;
    }
  }
  return rep;
}

/// Random complex tuples with entries t * (unit square), reproducible from
/// the seed alone.
template <class R>
std::vector<std::vector<Cplx<R>>> random_tuples(int count, int len, const Cplx<R>& t, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<std::vector<Cplx<R>>> out(static_cast<size_t>(count));
  for (auto& tup : out) {
    tup.resize(static_cast<size_t>(len));
    for (auto& z : tup) z = t * Cplx<R>::from(dist(gen), dist(gen));
  }
  return out;
}

}  // namespace detail

/// Residual sweep of one of the pairing identities over a box. Residuals
/// are |lhs - rhs| / max(1, largest summand magnitude, |rhs|), which keeps
/// heavy cancellation visible instead of hiding it.
template <class R>
CheckReport<R> check_orthogonality(const BoxShape& box, OrthoCheck check, const Cplx<R>& t,
                                   Exec exec = Exec::serial, unsigned seed = 20240801u,
                                   int samples = 4) {
  const auto parts = enumerate_box(box);
  const auto fiber = make_fiber_data<R>(box);
  const long m = static_cast<long>(fiber.tuples.size());
  const long np = static_cast<long>(parts.size());
  const int d = box.d, c = box.c(), n = box.n;

  std::vector<Partition> pd(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) pd[i] = poincare_dual(parts[i], box);

  R nd(1);
  for (int i = 0; i < d; ++i) nd *= R(n);

  // scaled-root caches used by prop2
  std::vector<std::vector<Cplx<R>>> elem_scaled;
  if (check == OrthoCheck::prop2) {
    elem_scaled.resize(static_cast<size_t>(m));
    for (long j = 0; j < m; ++j) {
      auto z = root_tuple_scaled(t, fiber.tuples[static_cast<size_t>(j)]);
      elem_scaled[static_cast<size_t>(j)] = elementary_all(std::span<const Cplx<R>>(z), d);
    }
  }

  auto residual_of = [](const Cplx<R>& lhs, const Cplx<R>& rhs, const R& scale) {
    R s = scale;
    if (s < R(1)) s = R(1);
    return abs_c(lhs - rhs) / s;
  };

  switch (check) {
    case OrthoCheck::littlewood: {
      auto zs = detail::random_tuples<R>(samples, d, t, seed);
      auto ws = detail::random_tuples<R>(samples, c, t, seed + 1);
      auto items = detail::run_items<R>(samples, exec, [&](long i) {
        std::span<const Cplx<R>> z(zs[static_cast<size_t>(i)]);
        std::span<const Cplx<R>> w(ws[static_cast<size_t>(i)]);
        auto ez = elementary_all(z, d);
        auto ew = elementary_all(w, c);
        std::vector<Cplx<R>> summands(parts.size());
        R scale(0);
        for (size_t pi = 0; pi < parts.size(); ++pi) {
          summands[pi] = schur_from_elementary(parts[pi], std::span<const Cplx<R>>(ez)) *
                         schur_from_elementary(parts[pi].conjugate(), std::span<const Cplx<R>>(ew));
          R a = abs_c(summands[pi]);
          if (a > scale) scale = a;
        }
        Cplx<R> lhs = pairwise_sum(std::span<const Cplx<R>>(summands));
        Cplx<R> rhs(R(1));
        for (const auto& zi : z)
          for (const auto& wj : w) rhs *= Cplx<R>(R(1)) + zi * wj;
        R a = abs_c(rhs);
        if (a > scale) scale = a;
        std::ostringstream os;
        os << "sample " << i;
        return std::make_pair(residual_of(lhs, rhs, scale), os.str());
      });
      return detail::reduce_items(check_name(check), box, items);
    }

    case OrthoCheck::prop1: {
      auto zs = detail::random_tuples<R>(samples, d, t, seed);
      auto items = detail::run_items<R>(samples * m, exec, [&](long it) {
        long i = it / m, j = it % m;
        std::span<const Cplx<R>> z(zs[static_cast<size_t>(i)]);
        auto ez = elementary_all(z, d);
        std::vector<Cplx<R>> summands(parts.size());
        R scale(0);
        for (size_t pi = 0; pi < parts.size(); ++pi) {
          summands[pi] =
              schur_from_elementary(parts[pi], std::span<const Cplx<R>>(ez)) *
              schur_from_elementary(pd[pi], std::span<const Cplx<R>>(fiber.elem[static_cast<size_t>(j)]));
          R a = abs_c(summands[pi]);
          if (a > scale) scale = a;
        }
        Cplx<R> lhs = pairwise_sum(std::span<const Cplx<R>>(summands));
        Cplx<R> rhs = fiber.top[static_cast<size_t>(j)];
        auto hat = complement(fiber.tuples[static_cast<size_t>(j)]);
        for (const auto& zk : z)
          for (int l : hat.doubled()) rhs *= Cplx<R>(R(1)) - zk * eval_root<R>(-l, n);
        R a = abs_c(rhs);
        if (a > scale) scale = a;
        std::ostringstream os;
        os << "sample " << i << " J=" << fiber.tuples[static_cast<size_t>(j)].to_string();
        return std::make_pair(residual_of(lhs, rhs, scale), os.str());
      });
      return detail::reduce_items(check_name(check), box, items);
    }

    case OrthoCheck::prop2: {
      auto items = detail::run_items<R>(m * m, exec, [&](long it) {
        long i = it / m, j = it % m;
        std::vector<Cplx<R>> summands(parts.size());
        R scale(0);
        for (size_t pi = 0; pi < parts.size(); ++pi) {
          summands[pi] =
              schur_from_elementary(parts[pi], std::span<const Cplx<R>>(elem_scaled[static_cast<size_t>(i)])) *
              schur_from_elementary(pd[pi], std::span<const Cplx<R>>(elem_scaled[static_cast<size_t>(j)]));
          R a = abs_c(summands[pi]);
          if (a > scale) scale = a;
        }
        Cplx<R> lhs = pairwise_sum(std::span<const Cplx<R>>(summands));
        Cplx<R> rhs(R(0));
        if (i == j) {
          Cplx<R> top = cpow(elem_scaled[static_cast<size_t>(i)][static_cast<size_t>(d)], c);
          rhs = nd * top / fiber.vand2[static_cast<size_t>(i)];
        }
        R a = abs_c(rhs);
        if (a > scale) scale = a;
        std::ostringstream os;
        os << "I=" << fiber.tuples[static_cast<size_t>(i)].to_string()
           << " J=" << fiber.tuples[static_cast<size_t>(j)].to_string();
        return std::make_pair(residual_of(lhs, rhs, scale), os.str());
      });
      return detail::reduce_items(check_name(check), box, items);
    }

    case OrthoCheck::prop3: {
      auto items = detail::run_items<R>(m * m, exec, [&](long it) {
        long i = it / m, j = it % m;
        std::vector<Cplx<R>> summands(parts.size());
        R scale(0);
        for (size_t pi = 0; pi < parts.size(); ++pi) {
          summands[pi] =
              schur_from_elementary(parts[pi], std::span<const Cplx<R>>(fiber.elem[static_cast<size_t>(i)])) *
              conj(schur_from_elementary(parts[pi], std::span<const Cplx<R>>(fiber.elem[static_cast<size_t>(j)])));
          R a = abs_c(summands[pi]);
          if (a > scale) scale = a;
        }
        Cplx<R> lhs = pairwise_sum(std::span<const Cplx<R>>(summands));
        Cplx<R> rhs(R(0));
        if (i == j) rhs = Cplx<R>(nd / fiber.vand2[static_cast<size_t>(i)]);
        R a = abs_c(rhs);
        if (a > scale) scale = a;
        std::ostringstream os;
        os << "I=" << fiber.tuples[static_cast<size_t>(i)].to_string()
           << " J=" << fiber.tuples[static_cast<size_t>(j)].to_string();
        return std::make_pair(residual_of(lhs, rhs, scale), os.str());
      });
      return detail::reduce_items(check_name(check), box, items);
    }

    case OrthoCheck::row_char:
    case OrthoCheck::row_pd: {
      const bool charv = (check == OrthoCheck::row_char);
      auto items = detail::run_items<R>(np * np, exec, [&](long it) {
        size_t a = static_cast<size_t>(it / np), b = static_cast<size_t>(it % np);
        std::vector<Cplx<R>> summands(static_cast<size_t>(m));
        R scale(0);
        for (long j = 0; j < m; ++j) {
          std::span<const Cplx<R>> e(fiber.elem[static_cast<size_t>(j)]);
          Cplx<R> sa = schur_from_elementary(parts[a], e);
          Cplx<R> sb = charv ? conj(schur_from_elementary(parts[b], e))
                             : schur_from_elementary(pd[b], e) / fiber.top[static_cast<size_t>(j)];
          summands[static_cast<size_t>(j)] = sa * sb * fiber.vand2[static_cast<size_t>(j)] / nd;
          R av = abs_c(summands[static_cast<size_t>(j)]);
          if (av > scale) scale = av;
        }
        Cplx<R> lhs = pairwise_sum(std::span<const Cplx<R>>(summands));
        Cplx<R> rhs(a == b ? R(1) : R(0));
        std::ostringstream os;
        os << "lambda=" << parts[a].to_string() << " mu=" << parts[b].to_string();
        return std::make_pair(residual_of(lhs, rhs, scale), os.str());
      });
      return detail::reduce_items(check_name(check), box, items);
    }
  }
  throw std::logic_error("check_orthogonality: unknown check");
}

/// max of the two transpose-duality gaps at (lam, I): the transposed value
/// against the dual-over-top ratio and against the plain conjugate.
template <class R>
R schur_duality_residual(const Partition& lam, const IndexTuple& I) {
  const BoxShape& box = I.box();
  if (!lam.fits(box)) throw std::invalid_argument("schur_duality_residual: partition outside box");
  auto zt = root_tuple<R>(transpose(I));
  Cplx<R> lhs = eval_schur(lam.conjugate(), std::span<const Cplx<R>>(zt));
  auto z = root_tuple<R>(I);
  auto e = elementary_all(std::span<const Cplx<R>>(z), box.d);
  std::span<const Cplx<R>> es(e);
  Cplx<R> top = cpow(e[static_cast<size_t>(box.d)], box.c());
  Cplx<R> a = schur_from_elementary(poincare_dual(lam, box), es) / top;
  Cplx<R> b = conj(schur_from_elementary(lam, es));
  R r1 = abs_c(lhs - a), r2 = abs_c(lhs - b);
  return r1 > r2 ? r1 : r2;
}

template <class R>
struct InequalityRow {
  Partition lam;
  R max_abs = R(0);
  IndexTuple argmax;
  R bound = R(0);
};

template <class R>
struct InequalityReport {
  BoxShape box;
  std::vector<InequalityRow<R>> rows;
  int violations = 0;
  R worst_excess = R(0);  // max of max_abs - bound over rows
};

/// For every shape, the largest Schubert magnitude over the fiber against
/// the positive-ray bound. The bound comes from the sine-ratio form.
template <class R>
InequalityReport<R> inequality_scan(const BoxShape& box, Exec exec = Exec::serial,
                                    const R& tol = R(1e-9)) {
  const auto parts = enumerate_box(box);
  const auto fiber = make_fiber_data<R>(box);
  const long np = static_cast<long>(parts.size());

  std::vector<InequalityRow<R>> rows(static_cast<size_t>(np),
                                     InequalityRow<R>{Partition{}, R(0), tuple_I0(box), R(0)});
  auto work = [&](long pi) {
    InequalityRow<R> row{parts[static_cast<size_t>(pi)], R(0), tuple_I0(box),
                         hook_schur_value(parts[static_cast<size_t>(pi)], R(1), box)};
    for (size_t j = 0; j < fiber.tuples.size(); ++j) {
      R v = abs_c(schur_from_elementary(parts[static_cast<size_t>(pi)],
                                        std::span<const Cplx<R>>(fiber.elem[j])));
      if (v > row.max_abs) {
        row.max_abs = v;
        row.argmax = fiber.tuples[j];
      }
    }
    rows[static_cast<size_t>(pi)] = std::move(row);
  };

  if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      extended_precision::thread_init();
#pragma omp for schedule(dynamic)
      for (long pi = 0; pi < np; ++pi) work(pi);
    }
#else
    for (long pi = 0; pi < np; ++pi) work(pi);
#endif
  } else {
    for (long pi = 0; pi < np; ++pi) work(pi);
  }

  InequalityReport<R> rep{box, std::move(rows), 0, R(-1)};
  for (const auto& row : rep.rows) {
    R excess = row.max_abs - row.bound;
    if (excess > rep.worst_excess) rep.worst_excess = excess;
    R s = row.bound > R(1) ? row.bound : R(1);
    if (row.max_abs > row.bound + tol * s) ++rep.violations;
  }
  return rep;
}

}  // namespace qgrass
