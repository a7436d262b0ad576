#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bfa/boolean_function.hpp"
#include "bfa/combinatorics.hpp"
#include "bfa/influence.hpp"
#include "bfa/rational.hpp"
#include "bfa/spectra.hpp"

namespace bfa {

/// Flat squared Walsh spectrum: W_f(a)^2 = 2^-n for every a.
inline bool is_bent(const RealSpectrum& walsh) {
  if (walsh.kind() != SpectrumKind::walsh) throw std::invalid_argument("is_bent: needs Walsh");
  if (walsh.n() % 2) return false;
  int64_t target = int64_t(1) << walsh.n();
  for (uint64_t u = 0; u < walsh.size(); ++u) {
    int64_t s = walsh.raw_value(u);
    if (s * s != target) return false;
  }
  return true;
}
inline bool is_bent(const BooleanFunction& f) { return is_bent(walsh_spectrum(f)); }

/// Influence-side bent test: inf_f(T) = 1 - 2^-#T for every nonempty T.
/// Runs all 2^n - 1 subcube sums of the autocorrelation in O(n 2^n).
inline bool bent_by_influence(const BooleanFunction& f) {
  int n = f.n();
  RealSpectrum ac = autocorrelation_spectrum(f);
  std::vector<int64_t> g(ac.raw().begin(), ac.raw().end());
  for (int j = 0; j < n; ++j)
    for (uint64_t m = 0; m < g.size(); ++m)
      if (m >> j & 1) g[m] += g[m ^ (uint64_t(1) << j)];
  // inf(T) = 1 - 2^-t iff the autocorrelation sums to C_f(0) on the subcube.
  int64_t c0 = int64_t(1) << n;
  for (uint64_t m = 1; m < g.size(); ++m)
    if (g[m] != c0) return false;
  return true;
}

/// Largest m with W_f vanishing on all points of weight <= m; disengaged
/// (nullopt) when f is unbalanced, i.e. W_f(0) != 0.
inline std::optional<int> resiliency_order(const BooleanFunction& f) {
  RealSpectrum w = walsh_spectrum(f);
  int min_wt = w.n() + 1;
  for (uint64_t u = 0; u < w.size(); ++u)
    if (w.raw_value(u) != 0) min_wt = std::min(min_wt, std::popcount(u));
  if (min_wt == 0) return std::nullopt;
  return min_wt - 1;
}

/// Largest k >= 1 with C_f vanishing on all shifts of weight 1..k; 0 when
/// the function is not PC(1); n when the autocorrelation vanishes off 0.
inline int pc_order(const BooleanFunction& f) {
  RealSpectrum ac = autocorrelation_spectrum(f);
  int min_wt = ac.n() + 1;
  for (uint64_t u = 1; u < ac.size(); ++u)
    if (ac.raw_value(u) != 0) min_wt = std::min(min_wt, std::popcount(u));
  return min_wt == ac.n() + 1 ? ac.n() : min_wt - 1;
}

/// Closest junta on S (S may be empty: distance to constants) and the exact
/// disagreement fraction delta = 2^-#S sum_a min(E(f_a), 1-E(f_a)).
/// Ties E(f_a) = 1/2 resolve to the constant 0 fiber.
inline std::pair<Rational, BooleanFunction> junta_distance(const BooleanFunction& f,
                                                           const VariableSubset& S) {
  if (S.n() != f.n()) throw std::invalid_argument("junta_distance: mismatched ambient n");
  int n = f.n(), s = S.size();
  std::vector<uint32_t> fw = fiber_weights(f, S);
  uint64_t fiber = uint64_t(1) << (n - s);
  int64_t disagreements = 0;
  for (uint32_t w : fw) disagreements += std::min<uint64_t>(w, fiber - w);
  Rational delta = Rational::dyadic(disagreements, n);

  std::vector<uint64_t> pos;  // point positions of S's variables, MSB-first
  for (int v : S.indices()) pos.push_back(uint64_t(1) << (n - v));
  BooleanFunction g = BooleanFunction::from_bit_fn(n, [&](uint64_t x) {
    uint64_t a = 0;
    for (uint64_t p : pos) a = a << 1 | ((x & p) != 0);
    return fw[a] > fiber / 2;
  });
  return {delta, g};
}

/// For an s-junta: t-inf(f) <= 1 - C(n-s,t)/C(n,t).
inline bool junta_influence_bound_check(const BooleanFunction& f, int s, int t) {
  int n = f.n();
  if (s < 0 || s > n) throw std::out_of_range("junta_influence_bound_check: s outside [0,n]");
  Rational bound = Rational(binomial(n, t) - binomial(n - s, t), binomial(n, t));
  return t_influence(f, t) <= bound;
}

/// Shannon entropy (base 2) of the squared Walsh spectrum, with 0 log 0 = 0.
/// The one non-exact computation in the library; 64-bit floats.
inline double fourier_entropy(const BooleanFunction& f) {
  RealSpectrum w = walsh_spectrum(f);
  int n = w.n();
  long double acc = 0.0L;
  long double scale = std::exp2l((long double)-2 * n);
  for (uint64_t u = 0; u < w.size(); ++u) {
    int64_t s = w.raw_value(u);
    if (s == 0) continue;
    long double sq = (long double)s * (long double)s;
    acc += sq * scale * (2 * n - std::log2l(sq));
  }
  return (double)acc;
}

/// rho_t(f) = (H(f)/n) / t-inf(f); domain error when the influence is zero.
inline double fei_ratio(const BooleanFunction& f, int t) {
  Rational ti = t_influence(f, t);
  if (ti.is_zero()) throw std::domain_error("fei_ratio: zero t-influence (constant function)");
  return fourier_entropy(f) / f.n() / ti.to_double();
}

/// Least positive k with k >= t-1 + (n-t+1)(1 - (1 - x)^(1/t)) for
/// x = t-inf(f)/epsilon, evaluated in exact arithmetic; the Fourier spectrum
/// is then epsilon-concentrated on weights up to k. Requires
/// epsilon in [t-inf(f), 1].
inline int concentration_threshold(const BooleanFunction& f, int t, const Rational& epsilon) {
  int n = f.n();
  if (t < 1 || t > n) throw std::out_of_range("concentration_threshold: t outside [1,n]");
  Rational ti = t_influence(f, t);
  if (epsilon < ti || epsilon > Rational(1))
    throw std::domain_error("concentration_threshold: epsilon outside [t-inf(f), 1]");
  Rational rem = Rational(1) - ti / epsilon;  // 1 - x
  // k >= t-1 + (n-t+1)(1-y), y = (1-x)^(1/t), iff n-k <= 0 or
  // (1-x) (n-t+1)^t >= (n-k)^t. The right side may exceed 128 bits for
  // raised caps; saturation keeps the comparison correct (saturated means
  // the predicate fails).
  const unsigned __int128 sat = ~(unsigned __int128)0;
  auto mul_sat = [sat](unsigned __int128 a, uint64_t b) {
    if (b != 0 && a > sat / b) return sat;
    return a * b;
  };
  auto pow_sat = [&](int64_t base, int exp) {
    unsigned __int128 r = 1;
    for (int i = 0; i < exp; ++i) r = mul_sat(r, (uint64_t)base);
    return r;
  };
  unsigned __int128 lhs = mul_sat(pow_sat(n - t + 1, t), (uint64_t)rem.numerator());
  for (int k = 1; k <= n; ++k) {
    if (n - k <= 0) return k;
    unsigned __int128 rhs = mul_sat(pow_sat(n - k, t), (uint64_t)rem.denominator());
    if (lhs != sat && rhs != sat && lhs >= rhs) return k;
  }
  return n;  // unreachable: k = n always satisfies n - k <= 0
}

struct CharacterizationReport {
  bool is_bent = false;
  std::optional<int> resiliency_order;
  int pc_order = 0;
  double entropy = 0.0;
  std::vector<std::string> notes;
};

inline CharacterizationReport characterize(const BooleanFunction& f) {
  CharacterizationReport r;
  r.is_bent = is_bent(f);
  r.resiliency_order = resiliency_order(f);
  r.pc_order = pc_order(f);
  r.entropy = fourier_entropy(f);
  uint64_t w = f.weight();
  if (w == 0 || w == f.domain_size()) r.notes.push_back("constant");
  if (f.is_balanced()) r.notes.push_back("balanced");
  return r;
}

}  // namespace bfa
