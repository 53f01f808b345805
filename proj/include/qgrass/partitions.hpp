#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qgrass {

/// Ambient shape: partitions with at most d rows and at most c = n-d columns.
struct BoxShape {
  int d = 1;
  int n = 2;

  BoxShape() = default;
  BoxShape(int d_, int n_);

  int c() const { return n - d; }
  friend bool operator==(const BoxShape&, const BoxShape&) = default;
  std::string to_string() const;
};

class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const;
  /// 1-based row length; zero beyond the last row.
  int part(int i) const;
  bool empty() const { return parts_.empty(); }
  bool fits(const BoxShape& box) const;
  Partition conjugate() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;  // weakly decreasing, no trailing zeros
};

/// Canonical enumeration order: by weight, then lexicographically with the
/// larger first part earlier, e.g. (), (1), (2), (1,1), (2,1), (2,2).
bool canonical_less(const Partition& a, const Partition& b);

struct CanonicalLess {
  bool operator()(const Partition& a, const Partition& b) const { return canonical_less(a, b); }
};

/// (m^k): k rows of length m.
Partition rectangle(int m, int k);

/// All partitions inside the box, in canonical order.
std::vector<Partition> enumerate_box(const BoxShape& box);

/// Complement rotated by a half turn inside the box.
Partition poincare_dual(const Partition& lam, const BoxShape& box);

/// Hook lengths keyed by 1-based (row, column) cells.
std::map<std::pair<int, int>, int> hook_lengths(const Partition& lam);

}  // namespace qgrass
