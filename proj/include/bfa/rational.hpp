#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bfa {

namespace detail {

inline unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

/// Exact rational with reduced 64-bit numerator and positive denominator.
///
/// Spectral values are dyadic (power-of-two denominator); subset averages
/// add binomial factors. Intermediates run through 128-bit arithmetic and a
/// reduced result that does not fit back into 64 bits throws
/// std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int64_t num, int64_t den) { *this = make(num, den); }

  /// num / 2^log2_den
  static Rational dyadic(int64_t num, int log2_den) {
    if (log2_den < 0 || log2_den > 62)
      throw std::out_of_range("Rational::dyadic: exponent out of range");
    return make(num, (__int128)1 << log2_den);
  }

  /// Reduce a 128-bit fraction; throws std::overflow_error if the reduced
  /// value needs more than 64 bits.
  static Rational make(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      den = -den;
      num = -num;
    }
    if (num == 0) return Rational();
    unsigned __int128 a = num < 0 ? (unsigned __int128)(-num) : (unsigned __int128)num;
    unsigned __int128 g = detail::gcd_u128(a, (unsigned __int128)den);
    num /= (__int128)g;
    den /= (__int128)g;
    if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
      throw std::overflow_error("Rational: reduced value exceeds 64 bits");
    Rational r;
    r.num_ = (int64_t)num;
    r.den_ = (int64_t)den;
    return r;
  }

  int64_t numerator() const { return num_; }
  int64_t denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_dyadic() const { return (den_ & (den_ - 1)) == 0; }
  int log2_denominator() const {
    if (!is_dyadic()) throw std::domain_error("Rational: denominator is not a power of two");
    return std::countr_zero((uint64_t)den_);
  }
  double to_double() const { return (double)num_ / (double)den_; }
  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return make((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = (__int128)a.num_ * b.den_;
    __int128 r = (__int128)b.num_ * a.den_;
    return l < r ? std::strong_ordering::less
         : l > r ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

}  // namespace bfa
