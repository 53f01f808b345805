#pragma once

#include <span>
#include <string>
#include <vector>

#include "qgrass/numeric.hpp"
#include "qgrass/partitions.hpp"

namespace qgrass {

/// Label tuple for a fiber point: d spectral exponents drawn from the base
/// ladder -(d-1)/2 + m, m = 0..n-1. Entries are stored doubled so that
/// half-integers (even d) stay exact integers. A tuple of length c with the
/// same parity appears as the complement of a member tuple.
class IndexTuple {
public:
  IndexTuple(BoxShape box, std::vector<int> doubled);

  const BoxShape& box() const { return box_; }
  const std::vector<int>& doubled() const { return doubled_; }
  int length() const { return static_cast<int>(doubled_.size()); }
  /// Twice the coordinate sum (always an integer).
  int norm2() const;
  bool is_member() const { return length() == box_.d; }
  std::string entry_string(int k) const;  // 1-based, "3/2" or "2"
  std::string to_string() const;

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;

private:
  BoxShape box_;
  std::vector<int> doubled_;  // strictly increasing, parity d-1 mod 2
};

bool tuple_less(const IndexTuple& a, const IndexTuple& b);

/// The doubled base ladder, length n, ascending.
std::vector<int> base_doubled(const BoxShape& box);

/// All C(n,d) member tuples, ascending-lexicographic on doubled entries.
/// The first element is always the symmetric tuple I0.
std::vector<IndexTuple> enumerate_index_tuples(const BoxShape& box);

IndexTuple tuple_I0(const BoxShape& box);

/// Bijection with box partitions: entry k is (d+1)/2 + lam_{d+1-k} - (d+1-k).
IndexTuple index_of_partition(const Partition& lam, const BoxShape& box);
Partition partition_of_index(const IndexTuple& I);

/// Remaining c ladder values, ascending (same box, length c).
IndexTuple complement(const IndexTuple& I);

/// Member of the transposed family (box (c,n)): n/2 minus the reversed
/// complement. Satisfies index_of_partition(lam^t) == transpose(index_of_partition(lam)).
IndexTuple transpose(const IndexTuple& I);

/// exp(2*pi*i/n)^(doubled/2) = exp(i*pi*doubled/n).
template <class R>
Cplx<R> eval_root(int doubled, int n) {
  return unit_phase<R>(doubled, n);
}

template <class R>
std::vector<Cplx<R>> root_tuple(const IndexTuple& I) {
  std::vector<Cplx<R>> out;
  out.reserve(I.doubled().size());
  for (int m : I.doubled()) out.push_back(eval_root<R>(m, I.box().n));
  return out;
}

template <class R>
std::vector<Cplx<R>> root_tuple_scaled(const Cplx<R>& t, const IndexTuple& I) {
  auto out = root_tuple<R>(I);
  for (auto& z : out) z = t * z;
  return out;
}

/// Squared modulus of the Vandermonde product over all pairs; invariant
/// under permutations of the input.
template <class R>
R vandermonde_sq(std::span<const Cplx<R>> z) {
  R acc(1);
  for (size_t k = 0; k < z.size(); ++k)
    for (size_t l = k + 1; l < z.size(); ++l) acc *= abs2(z[k] - z[l]);
  return acc;
}

template <class R>
R vandermonde_sq(const IndexTuple& I) {
  auto z = root_tuple<R>(I);
  return vandermonde_sq(std::span<const Cplx<R>>(z));
}

}  // namespace qgrass
