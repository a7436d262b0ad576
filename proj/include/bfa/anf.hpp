#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bfa/boolean_function.hpp"

namespace bfa {

namespace detail {

// Grammar: expr := term ('+' term)* ; term := '1' | var ('*' var)* ;
// var := 'x' integer (1-based). Whitespace is ignored.
class AnfParser {
 public:
  AnfParser(std::string_view text, int n) : text_(text), n_(n) {}

  // Returns one point mask per term: bits of the participating variables in
  // truth-table position (variable j -> bit n-j). '1' yields mask 0.
  std::vector<uint64_t> parse() {
    std::vector<uint64_t> monomials;
    monomials.push_back(term());
    skip_ws();
    while (pos_ < text_.size()) {
      expect('+');
      monomials.push_back(term());
      skip_ws();
    }
    return monomials;
  }

 private:
  uint64_t term() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '1') {
      ++pos_;
      return 0;
    }
    uint64_t mask = variable();
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      mask |= variable();
      skip_ws();
    }
    return mask;
  }

  uint64_t variable() {
    skip_ws();
    expect('x');
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected variable index after 'x'");
    long idx = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (idx < 1 || idx > n_) fail("variable index outside [1,n]");
    return uint64_t(1) << (n_ - idx);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("ANF parse error at position " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  int n_;
  size_t pos_ = 0;
};

}  // namespace detail

/// Builds the truth table of an algebraic-normal-form expression: the XOR of
/// the listed monomials evaluated pointwise.
inline BooleanFunction build_from_anf(std::string_view expr, int n) {
  if (n < 1 || n > BooleanFunction::variable_cap())
    throw std::out_of_range("build_from_anf: n outside [1, cap]");
  std::vector<uint64_t> monomials = detail::AnfParser(expr, n).parse();
  uint64_t size = uint64_t(1) << n;
  std::vector<uint8_t> tbl(size, 0);
  for (uint64_t m : monomials) {
    // The monomial is 1 exactly on the subcube of points covering m.
    uint64_t comp = ~m & (size - 1);
    uint64_t s = comp;
    for (;;) {
      tbl[m | s] ^= 1;
      if (s == 0) break;
      s = (s - 1) & comp;
    }
  }
  return BooleanFunction::from_bit_fn(n, [&](uint64_t x) { return tbl[x]; });
}

}  // namespace bfa
