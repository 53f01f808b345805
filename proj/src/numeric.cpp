#include "qgrass/numeric.hpp"

#include <algorithm>
#include <atomic>

namespace qgrass::extended_precision {

namespace {
std::atomic<unsigned> g_bits{128};

unsigned digits10_for(unsigned bits) {
  // mpfr_float precision is configured in decimal digits; round up so the
  // requested binary mantissa is covered.
  return std::max(16u, static_cast<unsigned>(bits * 0.30103) + 2u);
}
}  // namespace

void set_bits(unsigned bits) {
  g_bits.store(std::max(24u, bits));
  thread_init();
}

unsigned bits() { return g_bits.load(); }

void thread_init() {
  ExtendedReal::default_precision(digits10_for(g_bits.load()));
}

}  // namespace qgrass::extended_precision
