#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace qgrass {

/// All floating-point kernels are templated on the real carrier R.
/// R = double is the default; ExtendedReal is an MPFR-backed type whose
/// mantissa width is set at run time (see extended_precision below).
using ExtendedReal = boost::multiprecision::mpfr_float;

/// Thrown when a rounding step cannot certify an integer result.
class precision_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Runtime control of the ExtendedReal mantissa. MPFR keeps its working
/// precision in thread-local state, so OpenMP workers must call
/// thread_init() before producing ExtendedReal values.
namespace extended_precision {
void set_bits(unsigned bits);
unsigned bits();
void thread_init();
}  // namespace extended_precision

template <class R>
inline double to_double(const R& x) {
  return static_cast<double>(x);
}

template <class R>
inline R pi_value() {
  return boost::math::constants::pi<R>();
}

/// Minimal complex type over an arbitrary real carrier. std::complex is
/// only specified for the builtin floating types, hence our own.
template <class R>
struct Cplx {
  R re{};
  R im{};

  Cplx() = default;
  Cplx(R r) : re(std::move(r)) {}
  Cplx(R r, R i) : re(std::move(r)), im(std::move(i)) {}

  static Cplx from(double r, double i = 0.0) { return Cplx(R(r), R(i)); }

  Cplx& operator+=(const Cplx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Cplx& operator-=(const Cplx& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Cplx operator+(Cplx a, const Cplx& b) { return a += b; }
  friend Cplx operator-(Cplx a, const Cplx& b) { return a -= b; }
  friend Cplx operator-(const Cplx& a) { return Cplx(-a.re, -a.im); }
  friend Cplx operator*(const Cplx& a, const Cplx& b) {
    return Cplx(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  Cplx& operator*=(const Cplx& o) { return *this = *this * o; }
  friend Cplx operator*(const R& s, const Cplx& a) { return Cplx(s * a.re, s * a.im); }
  friend Cplx operator*(const Cplx& a, const R& s) { return s * a; }
  friend bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }
};

template <class R>
inline Cplx<R> conj(const Cplx<R>& z) {
  return Cplx<R>(z.re, -z.im);
}

template <class R>
inline R abs2(const Cplx<R>& z) {
  return z.re * z.re + z.im * z.im;
}

template <class R>
inline R abs_c(const Cplx<R>& z) {
  using std::sqrt;
  return sqrt(abs2(z));
}

template <class R>
inline Cplx<R> operator/(const Cplx<R>& a, const Cplx<R>& b) {
  R d = abs2(b);
  Cplx<R> n = a * conj(b);
  return Cplx<R>(n.re / d, n.im / d);
}

template <class R>
inline Cplx<R> operator/(const Cplx<R>& a, const R& s) {
  return Cplx<R>(a.re / s, a.im / s);
}

template <class R>
inline Cplx<R> cpow(Cplx<R> base, long e) {
  Cplx<R> acc(R(1));
  if (e < 0) {
    base = Cplx<R>(R(1)) / base;
    e = -e;
  }
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

/// sin(m*pi/n), argument reduced to [0, 2n) first.
template <class R>
inline R sin_pi_frac(long long m, long long n) {
  using std::sin;
  m %= 2 * n;
  if (m < 0) m += 2 * n;
  return sin(pi_value<R>() * R(static_cast<double>(m)) / R(static_cast<double>(n)));
}

/// exp(i*pi*num/den).
template <class R>
inline Cplx<R> unit_phase(long long num, long long den) {
  using std::cos;
  using std::sin;
  num %= 2 * den;
  if (num < 0) num += 2 * den;
  R arg = pi_value<R>() * R(static_cast<double>(num)) / R(static_cast<double>(den));
  return Cplx<R>(cos(arg), sin(arg));
}

/// Deterministic pairwise (tree) summation. The reduction tree depends only
/// on the length of the input, never on thread count, so parallel callers
/// that fill the summand buffer first get bit-reproducible totals.
template <class T>
inline T pairwise_sum(std::span<const T> v) {
  if (v.empty()) return T{};
  if (v.size() <= 8) {
    T acc = v[0];
    for (size_t i = 1; i < v.size(); ++i) acc += v[i];
    return acc;
  }
  size_t half = v.size() / 2;
  T a = pairwise_sum(v.subspan(0, half));
  T b = pairwise_sum(v.subspan(half));
  return a += b;
}

template <class T>
using Mat = std::vector<std::vector<T>>;

/// Determinant by fraction-free (Bareiss) elimination with partial
/// pivoting on |.|^2. Matrix sizes in this project stay below ~12.
template <class R>
inline Cplx<R> bareiss_det(Mat<Cplx<R>> m) {
  const size_t n = m.size();
  if (n == 0) return Cplx<R>(R(1));
  int sign = 1;
  Cplx<R> prev(R(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    R best = abs2(m[k][k]);
    for (size_t i = k + 1; i < n; ++i) {
      R cand = abs2(m[i][k]);
      if (cand > best) {
        best = cand;
        piv = i;
      }
    }
    if (best == R(0)) return Cplx<R>(R(0));
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = Cplx<R>(R(0));
    }
    prev = m[k][k];
  }
  Cplx<R> det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

/// Real-matrix variant, used by the total-nonnegativity checks.
template <class R>
inline R bareiss_det_real(Mat<R> m) {
  using std::abs;
  const size_t n = m.size();
  if (n == 0) return R(1);
  int sign = 1;
  R prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    R best = abs(m[k][k]);
    for (size_t i = k + 1; i < n; ++i) {
      R cand = abs(m[i][k]);
      if (cand > best) {
        best = cand;
        piv = i;
      }
    }
    if (best == R(0)) return R(0);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = R(0);
    }
    prev = m[k][k];
  }
  return sign < 0 ? R(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

}  // namespace qgrass
