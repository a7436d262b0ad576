#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bfa/boolean_function.hpp"
#include "bfa/combinatorics.hpp"
#include "bfa/rational.hpp"
#include "bfa/spectra.hpp"

namespace bfa {

/// Path statistics on the hypercube between supp(f) and its complement.
///
/// Stores x_a = #{u : f(u)=1, f(u xor a)=0}; the number n_a of
/// length-wt(a) paths whose endpoints differ by a is wt(a)! * x_a, derived
/// on demand (the formulas all consume n_a / wt(a)! = x_a).
class PathCensus {
 public:
  PathCensus(int n, std::vector<int64_t> x) : n_(n), x_(std::move(x)) {
    if (x_.size() != (uint64_t(1) << n_))
      throw std::invalid_argument("PathCensus: count size is not 2^n");
  }
  int n() const { return n_; }
  uint64_t size() const { return x_.size(); }
  int64_t pair_count(uint64_t alpha) const { return x_.at(alpha); }
  unsigned __int128 path_count(uint64_t alpha) const {
    return factorial128(std::popcount(alpha)) * (unsigned __int128)x_.at(alpha);
  }
  const std::vector<int64_t>& pair_counts() const { return x_; }

 private:
  int n_;
  std::vector<int64_t> x_;
};

enum class CensusMethod { direct, autocorr };

/// `direct` enumerates ordered crossing pairs in O(4^n); `autocorr` uses
/// x_a = 2^(n-2) (1 - C_f(a)). Identical exact results.
inline PathCensus path_census(const BooleanFunction& f,
                              CensusMethod method = CensusMethod::autocorr) {
  int n = f.n();
  uint64_t size = f.domain_size();
  std::vector<int64_t> x(size, 0);
  if (method == CensusMethod::direct) {
    for (uint64_t a = 1; a < size; ++a) {
      int64_t cnt = 0;
      for (uint64_t u = 0; u < size; ++u) cnt += f(u) && !f(u ^ a);
      x[a] = cnt;
    }
  } else {
    RealSpectrum ac = autocorrelation_spectrum(f);
    for (uint64_t a = 1; a < size; ++a) {
      int64_t d = (int64_t)size - ac.raw_value(a);  // 2^n (1 - C) = 4 x_a
      x[a] = d >> 2;
    }
  }
  return {n, std::move(x)};
}

/// e(A, complement of A) for A = supp(f): crossing edges of the hypercube,
/// equal to the sum of x over the unit vectors.
inline int64_t edge_boundary(const BooleanFunction& f) {
  int64_t e = 0;
  for (uint64_t u = 0; u < f.domain_size(); ++u)
    if (f(u))
      for (int j = 0; j < f.n(); ++j) e += !f(u ^ (uint64_t(1) << j));
  return e;
}

/// t-inf(f) evaluated from the path census:
/// 1 - (2^(n+t-2) C(n,t))^-1 sum_a C(n-wt(a), t-wt(a)) (2^(n-2) - x_a),
/// with C(a,b) = 0 for b < 0.
inline Rational t_influence_by_paths(const PathCensus& census, int t) {
  int n = census.n();
  if (t < 1 || t > n) throw std::out_of_range("t_influence_by_paths: t outside [1,n]");
  // Scaled by 4 so 2^(n-2) stays integral down to n = 1.
  __int128 acc = 0;
  int64_t size = int64_t(1) << n;
  for (uint64_t a = 0; a < census.size(); ++a) {
    int w = std::popcount(a);
    int64_t b = binomial(n - w, t - w);
    if (b != 0) acc += (__int128)b * (size - 4 * census.pair_count(a));
  }
  __int128 den = (__int128)binomial(n, t) << (n + t);
  return Rational::make(den - acc, den);
}
inline Rational t_influence_by_paths(const BooleanFunction& f, int t) {
  return t_influence_by_paths(path_census(f), t);
}

/// Verifies W_f(b)^2 = Delta_b - 2^-(2n-2) sum_a (-1)^<a,b> n_a / wt(a)!
/// for every b, exactly.
inline bool walsh_from_paths_check(const BooleanFunction& f) {
  int n = f.n();
  PathCensus census = path_census(f);
  std::vector<int64_t> h = census.pair_counts();
  walsh_hadamard_inplace(h);
  RealSpectrum w = walsh_spectrum(f);
  for (uint64_t b = 0; b < w.size(); ++b) {
    int64_t s = w.raw_value(b);
    int64_t rhs = (b == 0 ? int64_t(1) << (2 * n) : 0) - 4 * h[b];
    if (s * s != rhs) return false;
  }
  return true;
}

}  // namespace bfa
