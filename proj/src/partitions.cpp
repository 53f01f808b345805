#include "qgrass/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qgrass {

BoxShape::BoxShape(int d_, int n_) : d(d_), n(n_) {
  if (d < 1 || d >= n) throw std::invalid_argument("BoxShape: need 1 <= d < n");
}

std::string BoxShape::to_string() const {
  std::ostringstream os;
  os << "(" << d << "," << n << ")";
  return os.str();
}

namespace {
void validate_and_strip(std::vector<int>& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && p[i] > p[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
}
}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { validate_and_strip(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate_and_strip(parts_); }

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  if (i < 1) throw std::out_of_range("Partition::part: 1-based index");
  return i <= rows() ? parts_[i - 1] : 0;
}

bool Partition::fits(const BoxShape& box) const {
  return rows() <= box.d && (parts_.empty() || parts_[0] <= box.c());
}

Partition Partition::conjugate() const {
  std::vector<int> t;
  if (parts_.empty()) return Partition{};
  t.resize(parts_[0]);
  for (int j = 0; j < parts_[0]; ++j) {
    int count = 0;
    for (int p : parts_)
      if (p > j) ++count;
    t[j] = count;
  }
  return Partition(std::move(t));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

bool canonical_less(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  // Equal weight: earlier means lexicographically larger part vector.
  return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end(),
                                      [](int x, int y) { return x > y; });
}

Partition rectangle(int m, int k) {
  if (m < 0 || k < 0) throw std::invalid_argument("rectangle: negative dimension");
  if (m == 0) return Partition{};
  return Partition(std::vector<int>(static_cast<size_t>(k), m));
}

namespace {
void emit(std::vector<int>& acc, int maxpart, int rowsleft, std::vector<Partition>& out) {
  out.emplace_back(acc);
  if (rowsleft == 0) return;
  for (int p = maxpart; p >= 1; --p) {
    acc.push_back(p);
    emit(acc, p, rowsleft - 1, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> enumerate_box(const BoxShape& box) {
  std::vector<Partition> out;
  std::vector<int> acc;
  emit(acc, box.c(), box.d, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Partition poincare_dual(const Partition& lam, const BoxShape& box) {
  if (!lam.fits(box)) throw std::invalid_argument("poincare_dual: partition outside box");
  std::vector<int> out(static_cast<size_t>(box.d));
  for (int i = 0; i < box.d; ++i) out[static_cast<size_t>(i)] = box.c() - lam.part(box.d - i);
  return Partition(std::move(out));
}

std::map<std::pair<int, int>, int> hook_lengths(const Partition& lam) {
  std::map<std::pair<int, int>, int> out;
  Partition t = lam.conjugate();
  for (int i = 1; i <= lam.rows(); ++i) {
    for (int j = 1; j <= lam.part(i); ++j) {
      out[{i, j}] = lam.part(i) + t.part(j) - i - j + 1;
    }
  }
  return out;
}

}  // namespace qgrass
