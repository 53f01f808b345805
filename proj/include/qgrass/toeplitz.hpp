#pragma once

#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "qgrass/numeric.hpp"
#include "qgrass/partitions.hpp"
#include "qgrass/qring.hpp"
#include "qgrass/rootdata.hpp"
#include "qgrass/symfun.hpp"

namespace qgrass {

template <class R>
struct PointProvenance {
  Cplx<R> t;
  IndexTuple I;
};

/// Unipotent upper-triangular banded Toeplitz matrix, stored by its bands
/// x_1..x_{n-1} (x_0 = 1). Points built from a spectral parameter keep
/// their (t, I) provenance for tolerance scaling and reporting.
template <class R>
class ToeplitzPoint {
public:
  ToeplitzPoint(BoxShape box, std::vector<Cplx<R>> bands,
                std::optional<PointProvenance<R>> prov = std::nullopt)
      : box_(box), x_(std::move(bands)), prov_(std::move(prov)) {
    if (static_cast<int>(x_.size()) != box_.n - 1)
      throw std::invalid_argument("ToeplitzPoint: need n-1 bands");
  }

  const BoxShape& box() const { return box_; }
  const std::vector<Cplx<R>>& bands() const { return x_; }
  const std::optional<PointProvenance<R>>& provenance() const { return prov_; }

  /// x_j, with x_0 = 1 and x_j = 0 outside [0, n-1].
  Cplx<R> band(int j) const {
    if (j == 0) return Cplx<R>(R(1));
    if (j < 0 || j >= box_.n) return Cplx<R>(R(0));
    return x_[static_cast<size_t>(j - 1)];
  }

  Mat<Cplx<R>> dense() const {
    Mat<Cplx<R>> m(static_cast<size_t>(box_.n), std::vector<Cplx<R>>(static_cast<size_t>(box_.n)));
    for (int r = 0; r < box_.n; ++r)
      for (int s = 0; s < box_.n; ++s) m[static_cast<size_t>(r)][static_cast<size_t>(s)] = band(s - r);
    return m;
  }

private:
  BoxShape box_;
  std::vector<Cplx<R>> x_;
  std::optional<PointProvenance<R>> prov_;
};

/// Bands of the matrix with spectrum z (|z| = d): x_j = E_j(z), zero above d.
template <class R>
ToeplitzPoint<R> build_point(std::span<const Cplx<R>> z, const BoxShape& box,
                             std::optional<PointProvenance<R>> prov = std::nullopt) {
  if (static_cast<int>(z.size()) != box.d)
    throw std::invalid_argument("build_point: need d spectral values");
  auto e = elementary_all(z, box.n - 1);
  e.erase(e.begin());
  return ToeplitzPoint<R>(box, std::move(e), std::move(prov));
}

/// u_n(t * zeta^I), provenance attached.
template <class R>
ToeplitzPoint<R> fiber_point(const Cplx<R>& t, const IndexTuple& I) {
  if (!I.is_member()) throw std::invalid_argument("fiber_point: tuple is not a member label");
  auto z = root_tuple_scaled(t, I);
  return build_point<R>(z, I.box(), PointProvenance<R>{t, I});
}

/// Minor with 1-based row/column index lists (equal sizes).
template <class R>
Cplx<R> minor(const ToeplitzPoint<R>& u, std::span<const int> rows, std::span<const int> cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor: rank mismatch");
  const int n = u.box().n;
  for (int r : rows)
    if (r < 1 || r > n) throw std::out_of_range("minor: row index");
  for (int c : cols)
    if (c < 1 || c > n) throw std::out_of_range("minor: column index");
  Mat<Cplx<R>> m(rows.size(), std::vector<Cplx<R>>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) m[i][j] = u.band(cols[j] - rows[i]);
  return bareiss_det(std::move(m));
}

/// Top-right corner minor: rows 1..n-j against columns j+1..n.
template <class R>
Cplx<R> corner_minor(const ToeplitzPoint<R>& u, int j) {
  const int n = u.box().n;
  if (j < 0 || j > n) throw std::out_of_range("corner_minor: order");
  std::vector<int> rows, cols;
  for (int i = 1; i <= n - j; ++i) rows.push_back(i);
  for (int i = j + 1; i <= n; ++i) cols.push_back(i);
  return minor(u, std::span<const int>(rows), std::span<const int>(cols));
}

/// Interval minor: rows 1..b-a+1 against columns a..b; empty intervals
/// count as 1.
template <class R>
Cplx<R> interval_minor(const ToeplitzPoint<R>& u, int a, int b) {
  if (b < a) return Cplx<R>(R(1));
  if (a < 1 || b > u.box().n) throw std::out_of_range("interval_minor: bounds");
  std::vector<int> rows, cols;
  for (int i = 1; i <= b - a + 1; ++i) rows.push_back(i);
  for (int i = a; i <= b; ++i) cols.push_back(i);
  return minor(u, std::span<const int>(rows), std::span<const int>(cols));
}

/// Indices of vanishing corner minors, thresholded relative to the largest
/// corner minor magnitude.
template <class R>
std::set<int> stratum_signature(const ToeplitzPoint<R>& u, const R& tol = R(1e-9)) {
  const int n = u.box().n;
  std::vector<R> mag;
  mag.reserve(static_cast<size_t>(n - 1));
  for (int j = 1; j < n; ++j) mag.push_back(abs_c(corner_minor(u, j)));
  R scale(1);
  for (const R& v : mag)
    if (v > scale) scale = v;
  std::set<int> out;
  for (int j = 1; j < n; ++j)
    if (mag[static_cast<size_t>(j - 1)] <= tol * scale) out.insert(j);
  return out;
}

/// Dual band values H_{c+1}..H_{n-1} of a spectral tuple; these vanish
/// exactly on admissible spectra.
template <class R>
std::vector<Cplx<R>> membership_residuals(std::span<const Cplx<R>> z, const BoxShape& box) {
  auto h = homogeneous_all(z, box.n - 1);
  std::vector<Cplx<R>> out;
  for (int k = box.c() + 1; k <= box.n - 1; ++k) out.push_back(h[static_cast<size_t>(k)]);
  return out;
}

namespace detail {
/// y_0..y_m by the alternating band convolution (bands above n-1 are zero).
template <class R>
std::vector<Cplx<R>> dual_bands(const ToeplitzPoint<R>& u, int m) {
  std::vector<Cplx<R>> y(static_cast<size_t>(m) + 1, Cplx<R>(R(0)));
  y[0] = Cplx<R>(R(1));
  for (int mm = 1; mm <= m; ++mm) {
    Cplx<R> acc(R(0));
    for (int j = 1; j <= std::min(mm, u.box().n - 1); ++j) {
      Cplx<R> term = u.band(j) * y[static_cast<size_t>(mm - j)];
      if (j % 2 == 0)
        acc -= term;
      else
        acc += term;
    }
    y[static_cast<size_t>(mm)] = acc;
  }
  return y;
}
}  // namespace detail

/// Bands y_1..y_{n-1} of the inverse matrix, up to alternating signs:
/// (u^{-1})_{r,s} = (-1)^{s-r} y_{s-r}.
template <class R>
std::vector<Cplx<R>> inverse_entries(const ToeplitzPoint<R>& u) {
  auto y = detail::dual_bands(u, u.box().n - 1);
  y.erase(y.begin());
  return y;
}

/// q evaluated at the point: (-1)^(d+1) y_n.
template <class R>
Cplx<R> point_q_value(const ToeplitzPoint<R>& u) {
  auto y = detail::dual_bands(u, u.box().n);
  Cplx<R> yn = y[static_cast<size_t>(u.box().n)];
  return (u.box().d % 2 == 0) ? -yn : yn;
}

/// Worst violation of the cut equations x_{d+1..n-1} = 0, y_{c+1..n-1} = 0,
/// scaled by |t|^n when provenance is available and by the band/dual band
/// magnitudes otherwise.
template <class R>
R membership_defect(const ToeplitzPoint<R>& u) {
  using std::pow;
  const BoxShape& box = u.box();
  auto y = detail::dual_bands(u, box.n);
  R worst(0);
  for (int j = box.d + 1; j <= box.n - 1; ++j) {
    R v = abs_c(u.band(j));
    if (v > worst) worst = v;
  }
  for (int k = box.c() + 1; k <= box.n - 1; ++k) {
    R v = abs_c(y[static_cast<size_t>(k)]);
    if (v > worst) worst = v;
  }
  R scale(1);
  if (u.provenance()) {
    R tn = pow(abs_c(u.provenance()->t), box.n);
    if (tn > scale) scale = tn;
  } else {
    for (int j = 1; j <= box.n - 1; ++j) {
      R v = abs_c(u.band(j));
      if (v > scale) scale = v;
    }
    R yn = abs_c(y[static_cast<size_t>(box.n)]);
    if (yn > scale) scale = yn;
  }
  return worst / scale;
}

/// Evaluate a ring element at a variety point. The bands provide the
/// generator values, q comes from the dual band at level n.
template <class R>
Cplx<R> evaluate(const RingElement& el, const ToeplitzPoint<R>& u, const R& tol = R(1e-9)) {
  if (!(el.box() == u.box())) throw std::invalid_argument("evaluate: box mismatch");
  R defect = membership_defect(u);
  if (!(defect <= tol)) throw std::domain_error("evaluate: point violates the variety equations");
  const BoxShape& box = u.box();
  std::vector<Cplx<R>> elem(static_cast<size_t>(box.d) + 1);
  elem[0] = Cplx<R>(R(1));
  for (int j = 1; j <= box.d; ++j) elem[static_cast<size_t>(j)] = u.band(j);
  Cplx<R> qv = point_q_value(u);
  Cplx<R> acc(R(0));
  for (const auto& [key, coef] : el.terms()) {
    Cplx<R> term = schur_from_elementary(key.lam, std::span<const Cplx<R>>(elem));
    term *= cpow(qv, key.q);
    acc += to_real<R>(coef) * term;
  }
  return acc;
}

/// Scaling flow on bands: x_j -> t^j x_j.
template <class R>
ToeplitzPoint<R> scale_point(const Cplx<R>& t, const ToeplitzPoint<R>& u) {
  std::vector<Cplx<R>> bands = u.bands();
  Cplx<R> f(R(1));
  for (size_t j = 0; j < bands.size(); ++j) {
    f *= t;
    bands[j] *= f;
  }
  std::optional<PointProvenance<R>> prov;
  if (u.provenance()) prov = PointProvenance<R>{t * u.provenance()->t, u.provenance()->I};
  return ToeplitzPoint<R>(u.box(), std::move(bands), std::move(prov));
}

}  // namespace qgrass
