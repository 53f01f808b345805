#include "qgrass/verify.hpp"

#include <stdexcept>

namespace qgrass {

OrthoCheck parse_check(const std::string& name) {
  if (name == "littlewood") return OrthoCheck::littlewood;
  if (name == "pairing1" || name == "orthogonality1") return OrthoCheck::prop1;
  if (name == "pairing2" || name == "orthogonality2") return OrthoCheck::prop2;
  if (name == "pairing3" || name == "orthogonality3") return OrthoCheck::prop3;
  if (name == "row-char") return OrthoCheck::row_char;
  if (name == "row-pd") return OrthoCheck::row_pd;
  throw std::invalid_argument("unknown check: " + name);
}

std::string check_name(OrthoCheck check) {
  switch (check) {
    case OrthoCheck::littlewood: return "littlewood";
    case OrthoCheck::prop1: return "pairing1";
    case OrthoCheck::prop2: return "pairing2";
    case OrthoCheck::prop3: return "pairing3";
    case OrthoCheck::row_char: return "row-char";
    case OrthoCheck::row_pd: return "row-pd";
  }
  throw std::logic_error("check_name: unknown check");
}

std::vector<OrthoCheck> all_checks() {
  return {OrthoCheck::littlewood, OrthoCheck::prop1, OrthoCheck::prop2,
          OrthoCheck::prop3,      OrthoCheck::row_char, OrthoCheck::row_pd};
}

namespace {

struct LrState {
  std::vector<std::vector<int>> cell;  // filled values, 0 = empty
  std::vector<int> count;              // letter multiplicities so far
  const Partition* lam;
  const Partition* mu;
  const Partition* nu;
  BigInt total = 0;
};

void lr_fill(LrState& st, int row, int col) {
  const int rows = st.nu->rows();
  // advance to next unfilled cell (rows top..bottom, columns right..left)
  while (row <= rows && col < st.lam->part(row) + 1) {
    ++row;
    col = (row <= rows) ? st.nu->part(row) : 0;
  }
  if (row > rows) {
    st.total += 1;
    return;
  }
  const int L = st.mu->rows();
  int upper = L;
  // column-strict against the cell above
  int above = (row > 1 && col <= st.nu->part(row - 1)) ? st.cell[static_cast<size_t>(row - 2)][static_cast<size_t>(col - 1)] : 0;
  // row-weak against the cell to the right (already filled)
  if (col < st.nu->part(row)) {
    int right = st.cell[static_cast<size_t>(row - 1)][static_cast<size_t>(col)];
    if (right < upper) upper = right;
  }
  for (int v = 1; v <= upper; ++v) {
    if (row > 1 && col <= st.nu->part(row - 1) && v <= above) continue;  // need strict increase down
    if (st.count[static_cast<size_t>(v - 1)] + 1 > st.mu->part(v)) continue;
    if (v >= 2 && st.count[static_cast<size_t>(v - 1)] + 1 > st.count[static_cast<size_t>(v - 2)]) continue;
    st.cell[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)] = v;
    ++st.count[static_cast<size_t>(v - 1)];
    lr_fill(st, row, col - 1);
    --st.count[static_cast<size_t>(v - 1)];
    st.cell[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)] = 0;
  }
}

}  // namespace

BigInt lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (lam.size() + mu.size() != nu.size()) return 0;
  for (int i = 1; i <= lam.rows(); ++i)
    if (lam.part(i) > nu.part(i)) return 0;
  if (mu.empty()) return lam == nu ? 1 : 0;

  LrState st;
  st.lam = &lam;
  st.mu = &mu;
  st.nu = &nu;
  st.cell.assign(static_cast<size_t>(nu.rows()), {});
  for (int i = 1; i <= nu.rows(); ++i) st.cell[static_cast<size_t>(i - 1)].assign(static_cast<size_t>(nu.part(i)), 0);
  st.count.assign(static_cast<size_t>(mu.rows()), 0);
  lr_fill(st, 1, nu.part(1));
  return st.total;
}

}  // namespace qgrass
