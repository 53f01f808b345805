#include "qgrass/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qgrass {

namespace {
int mod2(int x) { return ((x % 2) + 2) % 2; }
}  // namespace

IndexTuple::IndexTuple(BoxShape box, std::vector<int> doubled)
    : box_(box), doubled_(std::move(doubled)) {
  const int lo = -(box_.d - 1);
  const int hi = 2 * box_.n - (box_.d + 1);
  const int parity = mod2(box_.d - 1);
  for (size_t k = 0; k < doubled_.size(); ++k) {
    if (mod2(doubled_[k]) != parity) throw std::invalid_argument("IndexTuple: entry parity mismatch");
    if (doubled_[k] < lo || doubled_[k] > hi) throw std::invalid_argument("IndexTuple: entry out of range");
    if (k > 0 && doubled_[k] <= doubled_[k - 1])
      throw std::invalid_argument("IndexTuple: entries must be strictly increasing");
  }
}

int IndexTuple::norm2() const { return std::accumulate(doubled_.begin(), doubled_.end(), 0); }

std::string IndexTuple::entry_string(int k) const {
  int m = doubled_.at(static_cast<size_t>(k - 1));
  std::ostringstream os;
  if (m % 2 == 0)
    os << m / 2;
  else
    os << m << "/2";
  return os.str();
}

std::string IndexTuple::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int k = 1; k <= length(); ++k) {
    if (k > 1) os << ",";
    os << entry_string(k);
  }
  os << ")";
  return os.str();
}

bool tuple_less(const IndexTuple& a, const IndexTuple& b) {
  return std::lexicographical_compare(a.doubled().begin(), a.doubled().end(), b.doubled().begin(),
                                      b.doubled().end());
}

std::vector<int> base_doubled(const BoxShape& box) {
  std::vector<int> out(static_cast<size_t>(box.n));
  for (int m = 0; m < box.n; ++m) out[static_cast<size_t>(m)] = -(box.d - 1) + 2 * m;
  return out;
}

std::vector<IndexTuple> enumerate_index_tuples(const BoxShape& box) {
  const auto base = base_doubled(box);
  const int n = box.n;
  const int d = box.d;
  std::vector<IndexTuple> out;
  std::vector<int> idx(static_cast<size_t>(d));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<int> tup(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) tup[static_cast<size_t>(k)] = base[static_cast<size_t>(idx[static_cast<size_t>(k)])];
    out.emplace_back(box, std::move(tup));
    // next combination in lexicographic order
    int k = d - 1;
    while (k >= 0 && idx[static_cast<size_t>(k)] == n - d + k) --k;
    if (k < 0) break;
    ++idx[static_cast<size_t>(k)];
    for (int j = k + 1; j < d; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

IndexTuple tuple_I0(const BoxShape& box) {
  std::vector<int> tup(static_cast<size_t>(box.d));
  for (int k = 0; k < box.d; ++k) tup[static_cast<size_t>(k)] = -(box.d - 1) + 2 * k;
  return IndexTuple(box, std::move(tup));
}

IndexTuple index_of_partition(const Partition& lam, const BoxShape& box) {
  if (!lam.fits(box)) throw std::invalid_argument("index_of_partition: partition outside box");
  std::vector<int> tup(static_cast<size_t>(box.d));
  for (int k = 1; k <= box.d; ++k)
    tup[static_cast<size_t>(k - 1)] = box.d + 1 + 2 * lam.part(box.d + 1 - k) - 2 * (box.d + 1 - k);
  return IndexTuple(box, std::move(tup));
}

Partition partition_of_index(const IndexTuple& I) {
  if (!I.is_member()) throw std::invalid_argument("partition_of_index: tuple is not a member label");
  const int d = I.box().d;
  std::vector<int> parts(static_cast<size_t>(d));
  for (int k = 1; k <= d; ++k) {
    int num = I.doubled()[static_cast<size_t>(k - 1)] + d + 1 - 2 * k;
    if (num % 2 != 0) throw std::invalid_argument("partition_of_index: parity corrupt");
    parts[static_cast<size_t>(d - k)] = num / 2;
  }
  return Partition(std::move(parts));
}

IndexTuple complement(const IndexTuple& I) {
  auto base = base_doubled(I.box());
  std::vector<int> rest;
  rest.reserve(base.size() - I.doubled().size());
  size_t p = 0;
  for (int b : base) {
    if (p < I.doubled().size() && I.doubled()[p] == b) {
      ++p;
      continue;
    }
    rest.push_back(b);
  }
  if (p != I.doubled().size()) throw std::invalid_argument("complement: tuple not inside base ladder");
  return IndexTuple(I.box(), std::move(rest));
}

IndexTuple transpose(const IndexTuple& I) {
  if (!I.is_member()) throw std::invalid_argument("transpose: tuple is not a member label");
  auto hat = complement(I);
  const auto& h = hat.doubled();
  std::vector<int> tup(h.size());
  for (size_t k = 0; k < h.size(); ++k) tup[k] = I.box().n - h[h.size() - 1 - k];
  return IndexTuple(BoxShape(I.box().c(), I.box().n), std::move(tup));
}

}  // namespace qgrass
