#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "qgrass/numeric.hpp"
#include "qgrass/partitions.hpp"

namespace qgrass {

/// E_0..E_kmax of the given variables (coefficients of prod_i (1 + z_i T)).
template <class R>
std::vector<Cplx<R>> elementary_all(std::span<const Cplx<R>> z, int kmax) {
  std::vector<Cplx<R>> e(static_cast<size_t>(kmax) + 1, Cplx<R>(R(0)));
  e[0] = Cplx<R>(R(1));
  int filled = 0;
  for (const auto& zi : z) {
    filled = std::min(filled + 1, kmax);
    for (int m = filled; m >= 1; --m) e[static_cast<size_t>(m)] += zi * e[static_cast<size_t>(m - 1)];
  }
  return e;
}

template <class R>
Cplx<R> eval_elementary(int k, std::span<const Cplx<R>> z) {
  if (k < 0 || k > static_cast<int>(z.size())) return Cplx<R>(R(0));
  return elementary_all(z, k)[static_cast<size_t>(k)];
}

/// H_0..H_kmax via the one-variable-at-a-time recurrence.
template <class R>
std::vector<Cplx<R>> homogeneous_all(std::span<const Cplx<R>> z, int kmax) {
  std::vector<Cplx<R>> h(static_cast<size_t>(kmax) + 1, Cplx<R>(R(0)));
  h[0] = Cplx<R>(R(1));
  for (const auto& zj : z) {
    for (int m = 1; m <= kmax; ++m) h[static_cast<size_t>(m)] += zj * h[static_cast<size_t>(m - 1)];
  }
  return h;
}

template <class R>
Cplx<R> eval_homogeneous(int k, std::span<const Cplx<R>> z) {
  if (k < 0) return Cplx<R>(R(0));
  return homogeneous_all(z, k)[static_cast<size_t>(k)];
}

enum class SchurMethod { dual_jt, jt, bialternant };

/// Schur value from precomputed elementary values elem = (E_0..E_m);
/// indices outside that window contribute zero. This is the inner loop of
/// the fiber sweeps, so the caller caches elem once per point.
template <class R>
Cplx<R> schur_from_elementary(const Partition& lam, std::span<const Cplx<R>> elem) {
  const int sz = lam.part(1);
  if (sz == 0) return Cplx<R>(R(1));
  Partition t = lam.conjugate();
  Mat<Cplx<R>> m(static_cast<size_t>(sz), std::vector<Cplx<R>>(static_cast<size_t>(sz)));
  for (int i = 1; i <= sz; ++i) {
    for (int j = 1; j <= sz; ++j) {
      int idx = t.part(i) - i + j;
      m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          (idx >= 0 && idx < static_cast<int>(elem.size())) ? elem[static_cast<size_t>(idx)]
                                                            : Cplx<R>(R(0));
    }
  }
  return bareiss_det(std::move(m));
}

template <class R>
Cplx<R> eval_schur(const Partition& lam, std::span<const Cplx<R>> z,
                   SchurMethod method = SchurMethod::dual_jt) {
  const int nv = static_cast<int>(z.size());
  switch (method) {
    case SchurMethod::dual_jt: {
      auto elem = elementary_all(z, nv);
      return schur_from_elementary(lam, std::span<const Cplx<R>>(elem));
    }
    case SchurMethod::jt: {
      const int sz = lam.rows();
      if (sz == 0) return Cplx<R>(R(1));
      auto h = homogeneous_all(z, lam.part(1) + sz - 1);
      Mat<Cplx<R>> m(static_cast<size_t>(sz), std::vector<Cplx<R>>(static_cast<size_t>(sz)));
      for (int i = 1; i <= sz; ++i) {
        for (int j = 1; j <= sz; ++j) {
          int idx = lam.part(i) - i + j;
          m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
              (idx >= 0 && idx < static_cast<int>(h.size())) ? h[static_cast<size_t>(idx)]
                                                             : Cplx<R>(R(0));
        }
      }
      return bareiss_det(std::move(m));
    }
    case SchurMethod::bialternant: {
      if (lam.rows() > nv)
        throw std::invalid_argument("eval_schur: bialternant needs at most one part per variable");
      for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
          if (z[static_cast<size_t>(i)] == z[static_cast<size_t>(j)])
            throw std::domain_error("eval_schur: bialternant requires distinct variables");
      auto power_mat = [&](bool shifted) {
        Mat<Cplx<R>> m(static_cast<size_t>(nv), std::vector<Cplx<R>>(static_cast<size_t>(nv)));
        for (int i = 0; i < nv; ++i) {
          for (int j = 1; j <= nv; ++j) {
            long e = (shifted ? lam.part(j) : 0) + nv - j;
            m[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] = cpow(z[static_cast<size_t>(i)], e);
          }
        }
        return m;
      };
      Cplx<R> num = bareiss_det(power_mat(true));
      Cplx<R> den = bareiss_det(power_mat(false));
      return num / den;
    }
  }
  throw std::logic_error("eval_schur: unknown method");
}

}  // namespace qgrass
