#pragma once

#include <map>
#include <string>
#include <vector>

#include "qgrass/bigint.hpp"
#include "qgrass/partitions.hpp"

namespace qgrass {

struct QTermKey {
  int q = 0;
  Partition lam;
  friend bool operator==(const QTermKey&, const QTermKey&) = default;
};

struct QTermKeyLess {
  bool operator()(const QTermKey& a, const QTermKey& b) const {
    if (a.q != b.q) return a.q < b.q;
    return canonical_less(a.lam, b.lam);
  }
};

/// Element of the deformed cohomology ring in the Schubert basis: an
/// integer combination of q^k * s_lambda with lambda inside the box.
class RingElement {
public:
  explicit RingElement(BoxShape box) : box_(box) {}

  static RingElement zero(const BoxShape& box) { return RingElement(box); }
  static RingElement unit(const BoxShape& box);
  static RingElement schubert(const BoxShape& box, const Partition& lam, int qdeg = 0);

  const BoxShape& box() const { return box_; }
  const std::map<QTermKey, BigInt, QTermKeyLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(int qdeg, const Partition& lam) const;

  void add_term(int qdeg, const Partition& lam, const BigInt& c);
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement scaled(const BigInt& c) const;
  RingElement q_shifted(int power) const;

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.box_ == b.box_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

private:
  BoxShape box_;
  std::map<QTermKey, BigInt, QTermKeyLess> terms_;
};

/// Multiplication by the degree-k generator (k-th band coordinate),
/// 1 <= k <= d. Produces classical terms (vertical k-strip growth inside
/// the box) plus q-terms (strip first row, then strip a vertical
/// (d-k)-strip), each with multiplicity one.
RingElement pieri_multiply(const RingElement& el, int k);

/// One monomial of the band-coordinate expansion of a Schubert element.
struct XMonomial {
  std::vector<int> exponents;  // exponents[j-1] = power of the degree-j generator
  BigInt coeff;
};

/// Determinantal expansion of s_lambda into band-coordinate monomials.
std::vector<XMonomial> expand_schubert_poly(const Partition& lam, const BoxShape& box);

/// Full ring product. The right factor is expanded into generator
/// monomials which are folded onto the left factor one generator at a
/// time. Set QGRASS_QRING_CHECK=1 to cross-check against the mirrored
/// product on every call.
RingElement multiply(const RingElement& a, const RingElement& b);

/// Coefficient of q^k * s_{PD(nu)} in s_lambda * s_mu.
BigInt structure_constant(const Partition& lam, const Partition& mu, const Partition& nu, int k,
                          const BoxShape& box);

/// Image of the m-th dual band coordinate under the quotient, computed by
/// the alternating convolution recurrence. Vanishes for c < m < n; at
/// m = n it is (-1)^(d+1) q.
RingElement y_element(int m, const BoxShape& box);

}  // namespace qgrass
