#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qgrass/numeric.hpp"
#include "qgrass/partitions.hpp"
#include "qgrass/toeplitz.hpp"

namespace qgrass {

/// The totally positive ray: bands x_j = t^j * prod_{m<j} sin((d-m)pi/n) /
/// sin((m+1)pi/n) for j <= d, zero above. Matches the point with spectrum
/// t * zeta^{I0} but is assembled from real sine ratios.
template <class R>
ToeplitzPoint<R> positive_point(const R& t, const BoxShape& box) {
  std::vector<Cplx<R>> bands(static_cast<size_t>(box.n - 1), Cplx<R>(R(0)));
  R run(1);
  R tp(1);
  for (int j = 1; j <= box.d; ++j) {
    run *= sin_pi_frac<R>(box.d - (j - 1), box.n) / sin_pi_frac<R>(j, box.n);
    tp *= t;
    bands[static_cast<size_t>(j - 1)] = Cplx<R>(tp * run);
  }
  return ToeplitzPoint<R>(box, std::move(bands), PointProvenance<R>{Cplx<R>(t), tuple_I0(box)});
}

/// Closed sine-ratio form of a Schubert value on the positive ray:
/// t^|lam| * prod_cells sin((d-i+j)pi/n) / sin(hook(i,j)pi/n). Lattice
/// zeros in the numerator are detected exactly (before any division) and
/// give 0; they occur precisely for shapes outside the box.
template <class R>
R hook_schur_value(const Partition& lam, const R& t, const BoxShape& box) {
  using std::pow;
  const int n = box.n;
  for (int i = 1; i <= lam.rows(); ++i)
    for (int j = 1; j <= lam.part(i); ++j)
      if ((box.d - i + j) % n == 0) return R(0);
  Partition conj = lam.conjugate();
  R acc = pow(t, lam.size());
  for (int i = 1; i <= lam.rows(); ++i) {
    for (int j = 1; j <= lam.part(i); ++j) {
      int hook = lam.part(i) + conj.part(j) - i - j + 1;
      acc *= sin_pi_frac<R>(box.d - i + j, n) / sin_pi_frac<R>(hook, n);
    }
  }
  return acc;
}

enum class TnnMethod { connected_columns, all_minors };

struct MinorWitness {
  std::vector<int> rows;
  std::vector<int> cols;
  double value = 0.0;
};

struct TnnReport {
  bool nonneg = true;
  std::optional<MinorWitness> violation;
};

namespace detail {
template <class R>
Mat<R> real_dense(const ToeplitzPoint<R>& u, const R& tol) {
  const int n = u.box().n;
  R scale(1);
  for (int j = 1; j < n; ++j) {
    R v = abs_c(u.band(j));
    if (v > scale) scale = v;
  }
  using std::abs;
  for (int j = 1; j < n; ++j)
    if (abs(u.band(j).im) > tol * scale)
      throw std::invalid_argument("total nonnegativity: point has complex bands");
  Mat<R> m(static_cast<size_t>(n), std::vector<R>(static_cast<size_t>(n), R(0)));
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) m[static_cast<size_t>(r)][static_cast<size_t>(s)] = u.band(s - r).re;
  return m;
}

template <class R>
R submatrix_det(const Mat<R>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  Mat<R> sub(rows.size(), std::vector<R>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      sub[i][j] = m[static_cast<size_t>(rows[i] - 1)][static_cast<size_t>(cols[j] - 1)];
  return bareiss_det_real(std::move(sub));
}

inline bool next_subset(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int p = k - 1;
  while (p >= 0 && idx[static_cast<size_t>(p)] == n - k + p + 1) --p;
  if (p < 0) return false;
  ++idx[static_cast<size_t>(p)];
  for (int j = p + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  return true;
}
}  // namespace detail

/// Sign scan over minors of the dense matrix. connected_columns restricts
/// to column intervals; all_minors takes every row/column subset pair.
template <class R>
TnnReport is_totally_nonnegative(const ToeplitzPoint<R>& u, TnnMethod method = TnnMethod::all_minors,
                                 const R& tol = R(1e-9)) {
  const int n = u.box().n;
  Mat<R> m = detail::real_dense(u, tol);
  R scale(1);
  for (const auto& row : m)
    for (const R& v : row) {
      using std::abs;
      R a = abs(v);
      if (a > scale) scale = a;
    }

  TnnReport report;
  auto test = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
    R det = detail::submatrix_det(m, rows, cols);
    if (det < -tol * scale) {
      report.nonneg = false;
      report.violation = MinorWitness{rows, cols, to_double(det)};
      return false;
    }
    return true;
  };

  for (int k = 1; k <= n && report.nonneg; ++k) {
    std::vector<int> rows(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) rows[static_cast<size_t>(i)] = i + 1;
    do {
      if (method == TnnMethod::connected_columns) {
        for (int a = 1; a + k - 1 <= n; ++a) {
          std::vector<int> cols(static_cast<size_t>(k));
          for (int i = 0; i < k; ++i) cols[static_cast<size_t>(i)] = a + i;
          if (!test(rows, cols)) break;
        }
      } else {
        std::vector<int> cols(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) cols[static_cast<size_t>(i)] = i + 1;
        do {
          if (!test(rows, cols)) break;
        } while (detail::next_subset(cols, n));
      }
      if (!report.nonneg) break;
    } while (detail::next_subset(rows, n));
  }
  return report;
}

/// Parameter grid of the stratum factorization, rows i = 1..d (outer band
/// index d-i+1) by columns j = 1..c.
template <class R>
class FactorGrid {
public:
  FactorGrid(BoxShape box, std::vector<R> a) : box_(box), a_(std::move(a)) {
    if (static_cast<int>(a_.size()) != box_.d * box_.c())
      throw std::invalid_argument("FactorGrid: need d*c parameters");
  }
  static FactorGrid zeros(const BoxShape& box) {
    return FactorGrid(box, std::vector<R>(static_cast<size_t>(box.d * box.c()), R(0)));
  }

  const BoxShape& box() const { return box_; }
  const R& at(int i, int j) const { return a_[index(i, j)]; }
  R& at(int i, int j) { return a_[index(i, j)]; }

private:
  size_t index(int i, int j) const {
    if (i < 1 || i > box_.d || j < 1 || j > box_.c())
      throw std::out_of_range("FactorGrid: position");
    return static_cast<size_t>((i - 1) * box_.c() + (j - 1));
  }
  BoxShape box_;
  std::vector<R> a_;
};

/// Positions in product order: (d,c) first, row index descending outermost.
/// Any linear extension of the grid partial order ((i,j) before (i',j')
/// when i >= i' and j >= j') yields the same product; this is the one used
/// by default.
std::vector<std::pair<int, int>> canonical_factor_order(const BoxShape& box);

/// Ratio formula for the factorization parameters in terms of interval
/// minors. Requires every interval minor in the denominators to be nonzero
/// (the open stratum condition) and a real point.
template <class R>
FactorGrid<R> factor_params(const ToeplitzPoint<R>& u, const R& tol = R(1e-9)) {
  const BoxShape& box = u.box();
  Mat<R> md = detail::real_dense(u, tol);
  const int d = box.d, c = box.c();

  // interval minor with its own Hadamard magnitude scale, so tiny-but-honest
  // values (small |t| raised to the minor degree) are not mistaken for zeros
  auto delta = [&](int a, int b) -> R { return interval_minor(u, a, b).re; };
  auto delta_checked = [&](int a, int b) -> R {
    if (b < a) return R(1);
    using std::abs;
    using std::sqrt;
    R had(1);
    for (int i = 1; i <= b - a + 1; ++i) {
      R norm2(0);
      for (int j = a; j <= b; ++j) {
        R e = md[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
        norm2 += e * e;
      }
      had *= sqrt(norm2);
    }
    R v = delta(a, b);
    if (abs(v) <= tol * had)
      throw std::domain_error("factor_params: interval minor vanishes (not in the open stratum)");
    return v;
  };

  FactorGrid<R> grid = FactorGrid<R>::zeros(box);
  for (int k = 1; k <= d; ++k) {
    for (int m = 1; m <= c; ++m) {
      R num = delta(k + 1, k + m) * delta(k, k + m - 2);
      R den = delta_checked(k + 1, k + m - 1) * delta_checked(k, k + m - 1);
      grid.at(d - k + 1, m) = num / den;
    }
  }
  return grid;
}

/// Product of simple root matrices x_{d-i+j}(a_{(i,j)}) in the given
/// order (canonical_factor_order by default). The result is banded
/// Toeplitz; the bands are read off the first row.
template <class R>
ToeplitzPoint<R> reconstruct(const FactorGrid<R>& grid,
                             const std::vector<std::pair<int, int>>* order = nullptr) {
  const BoxShape& box = grid.box();
  const int n = box.n;
  std::vector<std::pair<int, int>> fallback;
  if (!order) {
    fallback = canonical_factor_order(box);
    order = &fallback;
  }
  Mat<R> m(static_cast<size_t>(n), std::vector<R>(static_cast<size_t>(n), R(0)));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = R(1);
  for (const auto& [i, j] : *order) {
    const int r = box.d - i + j;  // simple root index, 1-based
    const R& a = grid.at(i, j);
    // right-multiply by (I + a * E_{r,r+1}): col r+1 += a * col r
    for (int row = 0; row < n; ++row)
      m[static_cast<size_t>(row)][static_cast<size_t>(r)] += a * m[static_cast<size_t>(row)][static_cast<size_t>(r - 1)];
  }
  std::vector<Cplx<R>> bands(static_cast<size_t>(n - 1));
  for (int j = 1; j < n; ++j) bands[static_cast<size_t>(j - 1)] = Cplx<R>(m[0][static_cast<size_t>(j)]);
  return ToeplitzPoint<R>(box, std::move(bands));
}

struct PositivityReport {
  bool positive = true;
  std::optional<Partition> failing;
};

/// Strict positivity of every rectangular Schubert value; certifies total
/// positivity of the stratum point.
template <class R>
PositivityReport positivity_certificate(const ToeplitzPoint<R>& u, const R& tol = R(1e-9)) {
  const BoxShape& box = u.box();
  PositivityReport rep;
  for (int k = 1; k <= box.d; ++k) {
    for (int w = 1; w <= box.c(); ++w) {
      RingElement el = RingElement::schubert(box, rectangle(w, k));
      Cplx<R> v = evaluate(el, u, tol);
      if (!(v.re > tol)) {
        rep.positive = false;
        rep.failing = rectangle(w, k);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace qgrass
