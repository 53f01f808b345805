#include "qgrass/totalpos.hpp"

namespace qgrass {

std::vector<std::pair<int, int>> canonical_factor_order(const BoxShape& box) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(box.d * box.c()));
  for (int i = box.d; i >= 1; --i)
    for (int j = box.c(); j >= 1; --j) out.emplace_back(i, j);
  return out;
}

}  // namespace qgrass
