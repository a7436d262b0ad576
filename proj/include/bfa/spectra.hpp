#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <vector>

#include "bfa/boolean_function.hpp"
#include "bfa/rational.hpp"
#include "bfa/subsets.hpp"

namespace bfa {

enum class SpectrumKind { walsh, autocorrelation, fourier_generic };

/// 2^n exact dyadic values indexed by points of F_2^n: raw integer
/// numerators over the common denominator 2^log2_den.
class RealSpectrum {
 public:
  RealSpectrum(int n, SpectrumKind kind, int log2_den, std::vector<int64_t> values)
      : n_(n), kind_(kind), log2_den_(log2_den), values_(std::move(values)) {
    if (values_.size() != (uint64_t(1) << n_))
      throw std::invalid_argument("RealSpectrum: value count is not 2^n");
    if (kind_ != SpectrumKind::fourier_generic) {
      int64_t one = int64_t(1) << log2_den_;
      for (int64_t v : values_)
        if (v > one || v < -one)
          throw std::invalid_argument("RealSpectrum: value outside [-1,1]");
      if (kind_ == SpectrumKind::autocorrelation && values_[0] != one)
        throw std::invalid_argument("RealSpectrum: autocorrelation at 0 must be 1");
    }
  }

  int n() const { return n_; }
  SpectrumKind kind() const { return kind_; }
  int log2_den() const { return log2_den_; }
  uint64_t size() const { return values_.size(); }
  std::span<const int64_t> raw() const { return values_; }
  int64_t raw_value(uint64_t i) const { return values_[i]; }
  Rational value(uint64_t i) const { return Rational::dyadic(values_[i], log2_den_); }

 private:
  int n_;
  SpectrumKind kind_;
  int log2_den_;
  std::vector<int64_t> values_;
};

/// In-place unnormalised Walsh-Hadamard butterfly:
/// v'[a] = sum_x v[x] (-1)^<x,a>, O(n 2^n) integer operations.
inline void walsh_hadamard_inplace(std::span<int64_t> v) {
  size_t size = v.size();
  if (size == 0 || (size & (size - 1)))
    throw std::invalid_argument("walsh_hadamard: length not a power of two");
  for (size_t len = 1; len < size; len <<= 1)
    for (size_t i = 0; i < size; i += len << 1)
      for (size_t j = i; j < i + len; ++j) {
        int64_t a = v[j], b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
}

/// psi_hat(a) = 2^-n sum_x psi(x) (-1)^<x,a>.
inline RealSpectrum fourier_transform(std::span<const int64_t> psi) {
  size_t size = psi.size();
  if (size == 0 || (size & (size - 1)))
    throw std::invalid_argument("fourier_transform: length not a power of two");
  int n = std::countr_zero(size);
  std::vector<int64_t> v(psi.begin(), psi.end());
  walsh_hadamard_inplace(v);
  return {n, SpectrumKind::fourier_generic, n, std::move(v)};
}

/// psi(x) = sum_a psi_hat(a) (-1)^<x,a>; recovers integer-valued inputs
/// exactly (the general result is exact dyadic).
inline std::vector<Rational> inverse_fourier(const RealSpectrum& spec) {
  std::vector<int64_t> v(spec.raw().begin(), spec.raw().end());
  walsh_hadamard_inplace(v);
  std::vector<Rational> out;
  out.reserve(v.size());
  for (int64_t x : v) out.push_back(Rational::dyadic(x, spec.log2_den()));
  return out;
}

/// W_f(a) = 2^-n sum_x (-1)^(f(x) xor <x,a>), exact with denominator 2^n.
inline RealSpectrum walsh_spectrum(const BooleanFunction& f) {
  int n = f.n();
  std::vector<int64_t> v(f.domain_size());
  for (uint64_t x = 0; x < f.domain_size(); ++x) v[x] = f(x) ? -1 : 1;
  walsh_hadamard_inplace(v);
  unsigned __int128 parseval = 0;
  for (int64_t s : v) parseval += (unsigned __int128)(s * s);
  if (parseval != (unsigned __int128)1 << (2 * n))
    throw std::logic_error("walsh_spectrum: Parseval check failed");
  return {n, SpectrumKind::walsh, n, std::move(v)};
}

enum class AutocorrMethod { direct, wiener_khintchine };

/// C_f(a) = 2^-n sum_x (-1)^(f(x) xor f(x xor a)); `direct` sums the
/// definition in O(4^n), `wiener_khintchine` inverse-transforms the squared
/// Walsh spectrum in O(n 2^n). Both give identical exact values.
inline RealSpectrum autocorrelation_spectrum(const BooleanFunction& f, AutocorrMethod method) {
  int n = f.n();
  uint64_t size = f.domain_size();
  std::vector<int64_t> c(size);
  if (method == AutocorrMethod::direct) {
    for (uint64_t a = 0; a < size; ++a) {
      int64_t disagreements = 0;
      for (uint64_t x = 0; x < size; ++x) disagreements += f(x) != f(x ^ a);
      c[a] = (int64_t)size - 2 * disagreements;
    }
  } else {
    RealSpectrum w = walsh_spectrum(f);
    for (uint64_t a = 0; a < size; ++a) {
      int64_t s = w.raw_value(a);
      c[a] = s * s;
    }
    walsh_hadamard_inplace(c);
    for (uint64_t x = 0; x < size; ++x) {
      if (c[x] & (size - 1)) throw std::logic_error("autocorrelation: inexact division");
      c[x] >>= n;
    }
  }
  return {n, SpectrumKind::autocorrelation, n, std::move(c)};
}

/// Transform route beats the direct sum beyond small n.
inline RealSpectrum autocorrelation_spectrum(const BooleanFunction& f) {
  return autocorrelation_spectrum(
      f, f.n() > 12 ? AutocorrMethod::wiener_khintchine : AutocorrMethod::direct);
}

/// Level weights of the squared Walsh spectrum: p_hat(k) = sum over points
/// of weight k of W_f^2, held exactly over the denominator 2^(2n).
class WeightDistribution {
 public:
  WeightDistribution(int n, std::vector<int64_t> level_num)
      : n_(n), num_(std::move(level_num)) {
    if (num_.size() != size_t(n_) + 1)
      throw std::invalid_argument("WeightDistribution: needs n+1 levels");
  }
  int n() const { return n_; }
  int log2_den() const { return 2 * n_; }
  int64_t raw(int k) const { return num_.at(k); }
  Rational p(int k) const { return Rational::dyadic(num_.at(k), 2 * n_); }

 private:
  int n_;
  std::vector<int64_t> num_;
};

inline WeightDistribution weight_distribution(const RealSpectrum& walsh) {
  if (walsh.kind() != SpectrumKind::walsh)
    throw std::invalid_argument("weight_distribution: needs a Walsh spectrum");
  int n = walsh.n();
  std::vector<int64_t> lev(n + 1, 0);
  for (uint64_t u = 0; u < walsh.size(); ++u) {
    int64_t s = walsh.raw_value(u);
    lev[std::popcount(u)] += s * s;
  }
  return {n, std::move(lev)};
}

inline WeightDistribution weight_distribution(const BooleanFunction& f) {
  return weight_distribution(walsh_spectrum(f));
}

/// W^{>=k}(f) = sum_{i>=k} p_hat(i).
inline Rational tail_weight(const WeightDistribution& wd, int k) {
  if (k < 0 || k > wd.n()) throw std::out_of_range("tail_weight: k outside [0,n]");
  int64_t acc = 0;
  for (int i = k; i <= wd.n(); ++i) acc += wd.raw(i);
  return Rational::dyadic(acc, wd.log2_den());
}
inline Rational tail_weight(const BooleanFunction& f, int k) {
  return tail_weight(weight_distribution(f), k);
}

/// L_{1,t}(f) = sum over weight-t points of |W_f|.
inline Rational level_l1(const RealSpectrum& walsh, int t) {
  if (walsh.kind() != SpectrumKind::walsh)
    throw std::invalid_argument("level_l1: needs a Walsh spectrum");
  if (t < 0 || t > walsh.n()) throw std::out_of_range("level_l1: t outside [0,n]");
  int64_t acc = 0;
  for (uint64_t u = 0; u < walsh.size(); ++u)
    if (std::popcount(u) == t) acc += std::abs(walsh.raw_value(u));
  return Rational::dyadic(acc, walsh.log2_den());
}
inline Rational level_l1(const BooleanFunction& f, int t) {
  return level_l1(walsh_spectrum(f), t);
}

namespace detail {

/// sum of v over the subcube { a : a <= m } (m a point mask), 0 included.
inline int64_t subcube_sum(std::span<const int64_t> v, uint64_t m) {
  int64_t acc = 0;
  uint64_t s = m;
  for (;;) {
    acc += v[s];
    if (s == 0) break;
    s = (s - 1) & m;
  }
  return acc;
}

/// Same with the (-1)^wt(a) sign.
inline int64_t subcube_sum_signed(std::span<const int64_t> v, uint64_t m) {
  int64_t acc = 0;
  uint64_t s = m;
  for (;;) {
    acc += (std::popcount(s) & 1) ? -v[s] : v[s];
    if (s == 0) break;
    s = (s - 1) & m;
  }
  return acc;
}

}  // namespace detail

/// Checks, exactly, both Poisson-summation identities for the coordinate
/// subspace E = { x <= chi_(complement of T) }:
///   sum_{w in E} W_f(w)^2 = (#E / 2^n) sum_{u in E_perp} C_f(u)
///   sum_{w in E} W_f(w)^2 = 2^-(n-t) sum_a W_{f_a}(0)^2
/// where f_a fixes the complement of T to a.
inline bool subspace_identity_check(const BooleanFunction& f, const VariableSubset& T) {
  if (T.n() != f.n()) throw std::invalid_argument("subspace_identity_check: mismatched n");
  if (T.is_empty()) throw std::invalid_argument("subspace_identity_check: empty variable set");
  int n = f.n(), t = T.size();

  RealSpectrum w = walsh_spectrum(f);
  int64_t lhs = 0;  // over 2^(2n)
  uint64_t e_mask = T.complement().point_mask();
  uint64_t s = e_mask;
  for (;;) {
    int64_t x = w.raw_value(s);
    lhs += x * x;
    if (s == 0) break;
    s = (s - 1) & e_mask;
  }
  Rational left = Rational::dyadic(lhs, 2 * n);

  RealSpectrum ac = autocorrelation_spectrum(f);
  int64_t csum = detail::subcube_sum(ac.raw(), T.point_mask());  // over 2^n
  Rational right1 = Rational::dyadic(csum, n + t);

  std::vector<uint32_t> fw = fiber_weights(f, T.complement());
  int64_t acc = 0;  // sum of W_{f_a}(0)^2 over 2^(2t-2)... accumulated as (2^(t-1)-w)^2
  int64_t half = int64_t(1) << (t - 1);
  for (uint32_t wt : fw) {
    int64_t d = half - (int64_t)wt;
    acc += d * d;
  }
  Rational right2 = Rational::dyadic(acc, (n - t) + (2 * t - 2));

  return left == right1 && left == right2;
}

}  // namespace bfa
