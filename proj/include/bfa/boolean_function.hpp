#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bfa/rational.hpp"
#include "bfa/subsets.hpp"

namespace bfa {

/// An n-variable Boolean function stored as a packed truth table of 2^n bits.
///
/// Index convention (fixed everywhere): for index i in [0, 2^n), variable
/// X_1 is the most significant bit of i and X_n the least significant, i.e.
/// i = sum_j x_j * 2^(n-j). Instances are immutable after construction.
class BooleanFunction {
 public:
  /// Largest admissible n. Defaults to 20 (1 MiB table, 8 MiB spectra); may
  /// be raised up to 26, at the caller's own memory expense.
  static int variable_cap() { return cap().load(std::memory_order_relaxed); }
  static void set_variable_cap(int n) {
    if (n < 1 || n > 26) throw std::out_of_range("variable cap outside [1,26]");
    cap().store(n, std::memory_order_relaxed);
  }

  static BooleanFunction constant(int n, bool value) {
    BooleanFunction f(n);
    if (value)
      for (auto& w : f.words_) w = ~uint64_t(0);
    f.mask_tail();
    return f;
  }

  /// f(x) = x_1 xor ... xor x_n.
  static BooleanFunction parity(int n) {
    return from_bit_fn(n, [](uint64_t x) { return std::popcount(x) & 1; });
  }

  /// Indicator of the single point with truth-table index `point`.
  static BooleanFunction indicator(int n, uint64_t point) {
    BooleanFunction f(n);
    if (point >= f.domain_size()) throw std::out_of_range("indicator: point outside domain");
    f.set_bit(point, true);
    return f;
  }

  /// Builds from a {0,1} string of length 2^n, table index 0 first.
  static BooleanFunction from_bits(int n, std::string_view bits) {
    BooleanFunction f(n);
    if (bits.size() != f.domain_size())
      throw std::invalid_argument("from_bits: table length is not 2^n");
    for (uint64_t i = 0; i < bits.size(); ++i) {
      char c = bits[i];
      if (c != '0' && c != '1') throw std::invalid_argument("from_bits: table must be over {0,1}");
      f.set_bit(i, c == '1');
    }
    return f;
  }

  /// Builds from the 2^n-bit table read as big-endian hex: table index 0 is
  /// the most significant bit of the first digit. Requires n >= 2.
  static BooleanFunction from_hex(int n, std::string_view hex) {
    if (n < 2) throw std::invalid_argument("from_hex: needs n >= 2");
    BooleanFunction f(n);
    if (hex.size() != f.domain_size() / 4)
      throw std::invalid_argument("from_hex: expected 2^n/4 hex digits");
    for (size_t d = 0; d < hex.size(); ++d) {
      int v = hex_digit(hex[d]);
      for (int j = 0; j < 4; ++j) f.set_bit(4 * d + j, (v >> (3 - j)) & 1);
    }
    return f;
  }

  template <class Fn>
  static BooleanFunction from_bit_fn(int n, Fn&& fn) {
    BooleanFunction f(n);
    for (uint64_t i = 0; i < f.domain_size(); ++i) f.set_bit(i, bool(fn(i)));
    return f;
  }

  static BooleanFunction random(int n, std::mt19937_64& rng) {
    BooleanFunction f(n);
    for (auto& w : f.words_) w = rng();
    f.mask_tail();
    return f;
  }

  int n() const { return n_; }
  uint64_t domain_size() const { return uint64_t(1) << n_; }

  bool operator()(uint64_t x) const { return words_[x >> 6] >> (x & 63) & 1; }

  uint64_t weight() const {
    uint64_t w = 0;
    for (uint64_t word : words_) w += std::popcount(word);
    return w;
  }
  Rational expectation() const { return Rational::dyadic((int64_t)weight(), n_); }
  Rational variance() const {
    Rational e = expectation();
    return e * (Rational(1) - e);
  }
  bool is_balanced() const { return weight() == domain_size() / 2; }

  /// Sets the variables in `fixed` to the bits of `assignment` and returns
  /// the function on the remaining variables, kept in ascending original
  /// index order. Bit k-1 of `assignment` holds the value of the smallest
  /// fixed variable (same MSB-first convention as table indices).
  BooleanFunction restrict_vars(const VariableSubset& fixed, uint64_t assignment) const {
    check_ambient(fixed);
    int k = fixed.size();
    if (k < static_cast<int>(64) && (assignment >> k) != 0)
      throw std::invalid_argument("restrict_vars: assignment has more bits than fixed variables");
    std::vector<uint64_t> sf = scatter_table(n_, fixed.indices());
    std::vector<uint64_t> sr = scatter_table(n_, fixed.complement().indices());
    uint64_t base = sf[assignment];
    BooleanFunction g(n_ - k, internal_tag{});
    for (uint64_t y = 0; y < (uint64_t(1) << (n_ - k)); ++y) g.set_bit(y, (*this)(base | sr[y]));
    return g;
  }

  /// String-assignment overload; length must equal #fixed, first character
  /// goes to the smallest fixed variable.
  BooleanFunction restrict_vars(const VariableSubset& fixed, std::string_view assignment) const {
    if (static_cast<int>(assignment.size()) != fixed.size())
      throw std::invalid_argument("restrict_vars: assignment length != #fixed");
    uint64_t a = 0;
    for (char c : assignment) {
      if (c != '0' && c != '1') throw std::invalid_argument("restrict_vars: assignment over {0,1}");
      a = a << 1 | (c == '1');
    }
    return restrict_vars(fixed, a);
  }

  /// True iff the variables in T do not affect the function, i.e. all
  /// restrictions fixing T to a value are pairwise equal; equivalently every
  /// restriction fixing the complement of T is constant.
  bool is_degenerate_on(const VariableSubset& T) const;

  std::string to_bit_string() const {
    std::string s(domain_size(), '0');
    for (uint64_t i = 0; i < domain_size(); ++i)
      if ((*this)(i)) s[i] = '1';
    return s;
  }
  std::string to_hex_string() const {
    if (n_ < 2) throw std::domain_error("to_hex_string: needs n >= 2");
    static const char* digits = "0123456789abcdef";
    std::string s(domain_size() / 4, '0');
    for (size_t d = 0; d < s.size(); ++d) {
      int v = 0;
      for (int j = 0; j < 4; ++j) v |= int((*this)(4 * d + j)) << (3 - j);
      s[d] = digits[v];
    }
    return s;
  }

  bool operator==(const BooleanFunction&) const = default;

  /// Per-assignment truth-table positions for a variable list: entry a is
  /// the table index whose `vars` bits spell a (MSB-first over ascending
  /// variables) and whose other bits are zero.
  static std::vector<uint64_t> scatter_table(int n, const std::vector<int>& vars) {
    int k = static_cast<int>(vars.size());
    std::vector<uint64_t> tab(uint64_t(1) << k);
    std::vector<uint64_t> bit(k);
    for (int q = 0; q < k; ++q) bit[q] = uint64_t(1) << (n - vars[k - 1 - q]);
    tab[0] = 0;
    for (uint64_t a = 1; a < tab.size(); ++a)
      tab[a] = tab[a & (a - 1)] | bit[std::countr_zero(a)];
    return tab;
  }

 private:
  struct internal_tag {};
  BooleanFunction(int n, internal_tag) : n_(n) {
    // n == 0 arises transiently while restricting every variable.
    if (n < 0 || n > 26) throw std::out_of_range("BooleanFunction: n outside range");
    words_.assign((domain_size() + 63) / 64, 0);
  }

  explicit BooleanFunction(int n) : n_(n) {
    if (n < 1 || n > variable_cap())
      throw std::out_of_range("BooleanFunction: n outside [1, cap]");
    words_.assign((domain_size() + 63) / 64, 0);
  }

  static std::atomic<int>& cap() {
    static std::atomic<int> c{20};
    return c;
  }

  static int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("from_hex: invalid hex digit");
  }

  void set_bit(uint64_t x, bool v) {
    if (v)
      words_[x >> 6] |= uint64_t(1) << (x & 63);
    else
      words_[x >> 6] &= ~(uint64_t(1) << (x & 63));
  }
  void mask_tail() {
    if (n_ < 6) words_[0] &= (uint64_t(1) << domain_size()) - 1;
  }
  void check_ambient(const VariableSubset& s) const {
    if (s.n() != n_) throw std::invalid_argument("variable subset has mismatched ambient n");
  }

  int n_;
  std::vector<uint64_t> words_;
};

/// Weight of every restriction obtained by fixing the variables in `fixed`:
/// entry a (MSB-first assignment over the fixed variables, ascending) is
/// wt(f with fixed <- a), a function of the remaining n-#fixed variables.
/// One pass over the table, O(2^n).
inline std::vector<uint32_t> fiber_weights(const BooleanFunction& f, const VariableSubset& fixed) {
  if (fixed.n() != f.n()) throw std::invalid_argument("fiber_weights: mismatched ambient n");
  int n = f.n(), k = fixed.size();
  std::vector<uint64_t> sf = BooleanFunction::scatter_table(n, fixed.indices());
  std::vector<uint64_t> sr = BooleanFunction::scatter_table(n, fixed.complement().indices());
  std::vector<uint32_t> w(uint64_t(1) << k, 0);
  for (uint64_t a = 0; a < w.size(); ++a) {
    uint64_t base = sf[a];
    uint32_t acc = 0;
    for (uint64_t y = 0; y < (uint64_t(1) << (n - k)); ++y) acc += f(base | sr[y]);
    w[a] = acc;
  }
  return w;
}

inline bool BooleanFunction::is_degenerate_on(const VariableSubset& T) const {
  check_ambient(T);
  if (T.is_empty()) throw std::invalid_argument("is_degenerate_on: empty variable set");
  uint32_t full = uint32_t(1) << T.size();
  for (uint32_t w : fiber_weights(*this, T.complement()))
    if (w != 0 && w != full) return false;
  return true;
}

}  // namespace bfa
