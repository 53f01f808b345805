#include "qgrass/gwcalc.hpp"

namespace qgrass {

std::optional<std::pair<int, BigInt>> quantum_pairing(const Partition& lam, const Partition& mu,
                                                      const BoxShape& box) {
  RingElement prod = multiply(RingElement::schubert(box, lam), RingElement::schubert(box, mu));
  const Partition top = rectangle(box.c(), box.d);
  for (const auto& [key, coef] : prod.terms())
    if (key.lam == top) return std::make_pair(key.q, coef);
  return std::nullopt;
}

}  // namespace qgrass
