#include "qgrass/qring.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qgrass {

RingElement RingElement::unit(const BoxShape& box) {
  RingElement el(box);
  el.add_term(0, Partition{}, 1);
  return el;
}

RingElement RingElement::schubert(const BoxShape& box, const Partition& lam, int qdeg) {
  if (!lam.fits(box)) throw std::invalid_argument("RingElement::schubert: partition outside box");
  if (qdeg < 0) throw std::invalid_argument("RingElement::schubert: negative q power");
  RingElement el(box);
  el.add_term(qdeg, lam, 1);
  return el;
}

BigInt RingElement::coefficient(int qdeg, const Partition& lam) const {
  auto it = terms_.find(QTermKey{qdeg, lam});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void RingElement::add_term(int qdeg, const Partition& lam, const BigInt& c) {
  if (!lam.fits(box_)) throw std::invalid_argument("RingElement::add_term: partition outside box");
  if (qdeg < 0) throw std::invalid_argument("RingElement::add_term: negative q power");
  if (c == 0) return;
  QTermKey key{qdeg, lam};
  auto [it, fresh] = terms_.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElement& RingElement::operator+=(const RingElement& o) {
  if (!(box_ == o.box_)) throw std::invalid_argument("RingElement: box mismatch");
  for (const auto& [key, c] : o.terms_) add_term(key.q, key.lam, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  if (!(box_ == o.box_)) throw std::invalid_argument("RingElement: box mismatch");
  for (const auto& [key, c] : o.terms_) add_term(key.q, key.lam, -c);
  return *this;
}

RingElement RingElement::scaled(const BigInt& c) const {
  RingElement out(box_);
  if (c == 0) return out;
  for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
  return out;
}

RingElement RingElement::q_shifted(int power) const {
  RingElement out(box_);
  for (const auto& [key, v] : terms_) {
    if (key.q + power < 0) throw std::invalid_argument("RingElement::q_shifted: negative q power");
    out.terms_.emplace(QTermKey{key.q + power, key.lam}, v);
  }
  return out;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c << "*";
    if (key.q == 1)
      os << "q*";
    else if (key.q > 1)
      os << "q^" << key.q << "*";
    os << "s" << key.lam.to_string();
  }
  return os.str();
}

namespace {

// Conjugate row lengths padded to c entries.
std::vector<int> conj_padded(const Partition& lam, int c) {
  Partition t = lam.conjugate();
  std::vector<int> out(static_cast<size_t>(c), 0);
  for (int j = 1; j <= c; ++j) out[static_cast<size_t>(j - 1)] = t.part(j);
  return out;
}

Partition from_conjugate(const std::vector<int>& colt) {
  std::vector<int> v = colt;
  while (!v.empty() && v.back() == 0) v.pop_back();
  return Partition(std::move(v)).conjugate();
}

// All weakly decreasing fillings with position-wise bounds lo/hi and fixed sum.
void enumerate_bounded(const std::vector<int>& lo, const std::vector<int>& hi, int target,
                       std::vector<int>& acc, size_t pos, const std::function<void(const std::vector<int>&)>& yield) {
  if (pos == lo.size()) {
    if (target == 0) yield(acc);
    return;
  }
  int minrest = 0, maxrest = 0;
  for (size_t j = pos + 1; j < lo.size(); ++j) {
    minrest += lo[j];
    maxrest += hi[j];
  }
  for (int v = lo[pos]; v <= hi[pos]; ++v) {
    int rem = target - v;
    if (rem < minrest || rem > maxrest) continue;
    acc[pos] = v;
    enumerate_bounded(lo, hi, rem, acc, pos + 1, yield);
  }
  acc[pos] = 0;
}

}  // namespace

RingElement pieri_multiply(const RingElement& el, int k) {
  const BoxShape& box = el.box();
  const int d = box.d;
  const int c = box.c();
  if (k < 1 || k > d) throw std::invalid_argument("pieri_multiply: generator degree out of range");

  RingElement out(box);
  for (const auto& [key, coef] : el.terms()) {
    const auto lt = conj_padded(key.lam, c);
    const int lsize = key.lam.size();

    // Classical terms: nu^t interlaces lambda^t from above, first entry
    // capped at d, total grows by k.
    {
      std::vector<int> lo = lt, hi(static_cast<size_t>(c));
      for (int j = 0; j < c; ++j)
        hi[static_cast<size_t>(j)] = (j == 0) ? d : lt[static_cast<size_t>(j - 1)];
      std::vector<int> acc(static_cast<size_t>(c), 0);
      const BigInt coef_copy = coef;
      const int qdeg = key.q;
      enumerate_bounded(lo, hi, lsize + k, acc, 0, [&](const std::vector<int>& nut) {
        out.add_term(qdeg, from_conjugate(nut), coef_copy);
      });
    }

    // q-terms exist only when the first row is full; they strip that row
    // and then a vertical (d-k)-strip.
    if (lt[static_cast<size_t>(c - 1)] >= 1) {
      int target = lsize + k - box.n;
      if (target >= 0) {
        std::vector<int> lo(static_cast<size_t>(c)), hi(static_cast<size_t>(c));
        for (int j = 0; j < c; ++j) {
          int next = (j + 1 < c) ? lt[static_cast<size_t>(j + 1)] : 0;
          lo[static_cast<size_t>(j)] = std::max(0, next - 1);
          hi[static_cast<size_t>(j)] = lt[static_cast<size_t>(j)] - 1;
        }
        std::vector<int> acc(static_cast<size_t>(c), 0);
        const BigInt coef_copy = coef;
        const int qdeg = key.q;
        enumerate_bounded(lo, hi, target, acc, 0, [&](const std::vector<int>& mut) {
          out.add_term(qdeg + 1, from_conjugate(mut), coef_copy);
        });
      }
    }
  }
  return out;
}

std::vector<XMonomial> expand_schubert_poly(const Partition& lam, const BoxShape& box) {
  if (!lam.fits(box)) throw std::invalid_argument("expand_schubert_poly: partition outside box");
  const int c = box.c();
  const int d = box.d;
  const auto lt = conj_padded(lam, c);

  std::map<std::vector<int>, BigInt> acc;
  std::vector<int> exps(static_cast<size_t>(d), 0);

  // Sign-tracked expansion of det(X_{lt_i - i + j}) over column choices.
  std::function<void(int, unsigned, int)> walk = [&](int row, unsigned used, int sign) {
    if (row == c) {
      auto [it, fresh] = acc.emplace(exps, sign);
      if (!fresh) it->second += sign;
      return;
    }
    for (int j = 0; j < c; ++j) {
      if (used & (1u << j)) continue;
      int idx = lt[static_cast<size_t>(row)] - (row + 1) + (j + 1);
      if (idx < 0 || idx > d) continue;
      int inv = 0;
      for (int jj = j + 1; jj < c; ++jj)
        if (used & (1u << jj)) ++inv;
      int s = (inv % 2 == 0) ? sign : -sign;
      if (idx > 0) ++exps[static_cast<size_t>(idx - 1)];
      walk(row + 1, used | (1u << j), s);
      if (idx > 0) --exps[static_cast<size_t>(idx - 1)];
    }
  };
  walk(0, 0u, 1);

  std::vector<XMonomial> out;
  for (auto& [e, cfe] : acc)
    if (cfe != 0) out.push_back(XMonomial{e, cfe});
  return out;
}

namespace {

RingElement multiply_core(const RingElement& a, const RingElement& b) {
  const BoxShape& box = a.box();
  RingElement out(box);
  for (const auto& [key, coef] : b.terms()) {
    for (const auto& mon : expand_schubert_poly(key.lam, box)) {
      RingElement acc = a.q_shifted(key.q).scaled(coef * mon.coeff);
      for (int j = 1; j <= box.d; ++j)
        for (int r = 0; r < mon.exponents[static_cast<size_t>(j - 1)]; ++r)
          acc = pieri_multiply(acc, j);
      out += acc;
    }
  }
  return out;
}

}  // namespace

RingElement multiply(const RingElement& a, const RingElement& b) {
  if (!(a.box() == b.box())) throw std::invalid_argument("multiply: box mismatch");
  RingElement out = multiply_core(a, b);
  static const bool cross_check = std::getenv("QGRASS_QRING_CHECK") != nullptr;
  if (cross_check) {
    RingElement mirrored = multiply_core(b, a);
    if (!(out == mirrored))
      throw std::logic_error("multiply: product is not symmetric: " + out.to_string() +
                             " vs " + mirrored.to_string());
  }
  return out;
}

BigInt structure_constant(const Partition& lam, const Partition& mu, const Partition& nu, int k,
                          const BoxShape& box) {
  if (!lam.fits(box) || !mu.fits(box) || !nu.fits(box))
    throw std::invalid_argument("structure_constant: partition outside box");
  if (k < 0) return 0;
  if (box.c() * box.d + k * box.n != lam.size() + mu.size() + nu.size()) return 0;
  RingElement prod = multiply(RingElement::schubert(box, lam), RingElement::schubert(box, mu));
  return prod.coefficient(k, poincare_dual(nu, box));
}

RingElement y_element(int m, const BoxShape& box) {
  if (m < 0) throw std::invalid_argument("y_element: negative index");
  std::vector<RingElement> y;
  y.reserve(static_cast<size_t>(m) + 1);
  y.push_back(RingElement::unit(box));
  for (int mm = 1; mm <= m; ++mm) {
    RingElement acc(box);
    for (int j = 1; j <= std::min(box.d, mm); ++j) {
      RingElement term = pieri_multiply(y[static_cast<size_t>(mm - j)], j);
      if (j % 2 == 0)
        acc -= term;
      else
        acc += term;
    }
    y.push_back(std::move(acc));
  }
  return y.back();
}

}  // namespace qgrass
