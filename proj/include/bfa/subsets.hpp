#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace bfa {

/// A subset T of the variable index set [n] = {1,...,n}, stored as an n-bit
/// mask with bit j-1 set iff variable j is in T.
///
/// Variable masks live in "variable space"; truth-table indices put X_1 at
/// the most significant bit, so the corresponding point chi_T of F_2^n is
/// obtained through point_mask().
class VariableSubset {
 public:
  VariableSubset(int n, uint64_t mask) : n_(n), mask_(mask) {
    if (n < 1 || n > 63) throw std::out_of_range("VariableSubset: n outside [1,63]");
    if (mask >> n) throw std::invalid_argument("VariableSubset: mask does not fit in n bits");
  }

  static VariableSubset from_indices(int n, std::initializer_list<int> vars) {
    return from_indices(n, std::vector<int>(vars));
  }
  static VariableSubset from_indices(int n, const std::vector<int>& vars) {
    uint64_t m = 0;
    for (int v : vars) {
      if (v < 1 || v > n) throw std::out_of_range("VariableSubset: variable index outside [1,n]");
      m |= uint64_t(1) << (v - 1);
    }
    return {n, m};
  }
  static VariableSubset full(int n) { return {n, n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1}; }

  int n() const { return n_; }
  uint64_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool is_empty() const { return mask_ == 0; }
  bool contains(int var) const { return var >= 1 && var <= n_ && (mask_ >> (var - 1) & 1); }

  /// chi_T as a truth-table index: variable j maps to index bit n-j.
  uint64_t point_mask() const {
    uint64_t p = 0;
    for (uint64_t m = mask_; m;) {
      int j = std::countr_zero(m) + 1;
      p |= uint64_t(1) << (n_ - j);
      m &= m - 1;
    }
    return p;
  }

  VariableSubset complement() const { return {n_, ~mask_ & ((uint64_t(1) << n_) - 1)}; }
  bool subset_of(const VariableSubset& s) const { return n_ == s.n_ && (mask_ & ~s.mask_) == 0; }

  friend VariableSubset operator|(const VariableSubset& a, const VariableSubset& b) {
    a.check_same(b);
    return {a.n_, a.mask_ | b.mask_};
  }
  friend VariableSubset operator&(const VariableSubset& a, const VariableSubset& b) {
    a.check_same(b);
    return {a.n_, a.mask_ & b.mask_};
  }

  /// Member variables in ascending order, 1-based.
  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(size());
    for (uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  bool operator==(const VariableSubset&) const = default;

 private:
  void check_same(const VariableSubset& o) const {
    if (n_ != o.n_) throw std::invalid_argument("VariableSubset: mismatched ambient n");
  }
  int n_;
  uint64_t mask_;
};

/// Visits all nonempty subsets of [n] in ascending mask order.
template <class Fn>
void for_each_nonempty_subset(int n, Fn&& fn) {
  uint64_t end = uint64_t(1) << n;
  for (uint64_t m = 1; m < end; ++m) fn(VariableSubset(n, m));
}

/// Visits all size-t subsets of [n] in ascending mask order (Gosper's hack).
template <class Fn>
void for_each_subset_of_size(int n, int t, Fn&& fn) {
  if (t < 1 || t > n) throw std::out_of_range("subset size outside [1,n]");
  uint64_t end = uint64_t(1) << n;
  uint64_t m = (uint64_t(1) << t) - 1;
  while (m < end) {
    fn(VariableSubset(n, m));
    uint64_t c = m & -m;
    uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
    if (r == 0) break;  // t == n wrapped
  }
}

}  // namespace bfa
