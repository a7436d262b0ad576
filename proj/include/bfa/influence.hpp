#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bfa/boolean_function.hpp"
#include "bfa/combinatorics.hpp"
#include "bfa/rational.hpp"
#include "bfa/spectra.hpp"
#include "bfa/subsets.hpp"

namespace bfa {

enum class Measure { ac, pi, bl, gs, fb, mu };

inline const char* measure_name(Measure m) {
  switch (m) {
    case Measure::ac: return "ac";
    case Measure::pi: return "pi";
    case Measure::bl: return "bl";
    case Measure::gs: return "gs";
    case Measure::fb: return "fb";
    case Measure::mu: return "mu";
  }
  return "?";
}

struct InfluenceValue {
  Rational value;
  Measure measure;
  VariableSubset subset;
};

namespace detail {

inline void require_nonempty(const VariableSubset& T, const char* who) {
  if (T.is_empty()) throw std::invalid_argument(std::string(who) + ": empty variable set");
}
inline void require_same_n(const BooleanFunction& f, const VariableSubset& T, const char* who) {
  if (T.n() != f.n()) throw std::invalid_argument(std::string(who) + ": mismatched ambient n");
}

/// Count of x with f(x) != f(x xor shift).
inline int64_t shift_disagreements(const BooleanFunction& f, uint64_t shift) {
  int64_t d = 0;
  for (uint64_t x = 0; x < f.domain_size(); ++x) d += f(x) != f(x ^ shift);
  return d;
}

}  // namespace detail

enum class InfluenceAlgorithm { restriction, autocorr, walsh };

/// inf_f(T) from a precomputed autocorrelation spectrum:
/// 1 - 2^-t sum_{a <= chi_T} C_f(a).
inline Rational influence_autocorr(const RealSpectrum& ac, const VariableSubset& T) {
  detail::require_nonempty(T, "influence");
  if (ac.kind() != SpectrumKind::autocorrelation || ac.n() != T.n())
    throw std::invalid_argument("influence: needs a matching autocorrelation spectrum");
  int n = ac.n(), t = T.size();
  int64_t csum = detail::subcube_sum(ac.raw(), T.point_mask());
  return Rational::dyadic((int64_t(1) << (n + t)) - csum, n + t);
}

/// inf_f(T) from a precomputed Walsh spectrum:
/// sum over u with supp(u) meeting T of W_f(u)^2.
inline Rational influence_walsh(const RealSpectrum& walsh, const VariableSubset& T) {
  detail::require_nonempty(T, "influence");
  if (walsh.kind() != SpectrumKind::walsh || walsh.n() != T.n())
    throw std::invalid_argument("influence: needs a matching Walsh spectrum");
  uint64_t pm = T.point_mask();
  int64_t acc = 0;
  for (uint64_t u = 0; u < walsh.size(); ++u)
    if (u & pm) {
      int64_t s = walsh.raw_value(u);
      acc += s * s;
    }
  return Rational::dyadic(acc, 2 * walsh.n());
}

/// Influence of the variables in T on f. The default restriction scan runs
/// in O(2^n) table work: 1 - 2^-(n-t) sum_a W_{f_a}(0)^2 over the
/// restrictions f_a fixing the complement of T. All three algorithms return
/// identical exact values.
inline InfluenceValue influence(const BooleanFunction& f, const VariableSubset& T,
                                InfluenceAlgorithm algorithm = InfluenceAlgorithm::restriction) {
  detail::require_same_n(f, T, "influence");
  detail::require_nonempty(T, "influence");
  int n = f.n(), t = T.size();
  Rational v;
  switch (algorithm) {
    case InfluenceAlgorithm::restriction: {
      std::vector<uint32_t> fw = fiber_weights(f, T.complement());
      int64_t half = int64_t(1) << (t - 1);
      int64_t acc = 0;
      for (uint32_t w : fw) {
        int64_t d = half - (int64_t)w;
        acc += d * d;
      }
      v = Rational::dyadic((int64_t(1) << (n + t - 2)) - acc, n + t - 2);
      break;
    }
    case InfluenceAlgorithm::autocorr:
      v = influence_autocorr(autocorrelation_spectrum(f), T);
      break;
    case InfluenceAlgorithm::walsh:
      v = influence_walsh(walsh_spectrum(f), T);
      break;
  }
  return {v, Measure::ac, T};
}

/// inf_f(i) = Pr[f(x) != f(x xor e_i)] = (1 - C_f(e_i)) / 2.
inline InfluenceValue influence_variable(const BooleanFunction& f, int i) {
  if (i < 1 || i > f.n()) throw std::out_of_range("influence_variable: index outside [1,n]");
  VariableSubset T = VariableSubset::from_indices(f.n(), {i});
  int64_t d = detail::shift_disagreements(f, T.point_mask());
  return {Rational::dyadic(d, f.n()), Measure::ac, T};
}

/// N_{n,t,k}: size-t subsets of [n] meeting a fixed k-set, i.e.
/// C(n,t) - C(n-k,t).
inline int64_t subset_count(int n, int t, int k) {
  if (t < 1 || t > n) throw std::out_of_range("subset_count: t outside [1,n]");
  if (k < 0 || k > n) throw std::out_of_range("subset_count: k outside [0,n]");
  return binomial(n, t) - binomial(n - k, t);
}

enum class AggregateAlgorithm { enumerate, spectral };

/// t-inf(f): average influence over all size-t subsets. The spectral route
/// evaluates 1 - C(n,t)^-1 sum_{k<=n-t} C(n-k,t) p_hat(k).
inline Rational t_influence(const BooleanFunction& f, int t,
                            AggregateAlgorithm algorithm = AggregateAlgorithm::spectral) {
  int n = f.n();
  if (t < 1 || t > n) throw std::out_of_range("t_influence: t outside [1,n]");
  if (algorithm == AggregateAlgorithm::enumerate) {
    Rational sum;
    for_each_subset_of_size(n, t, [&](const VariableSubset& T) { sum += influence(f, T).value; });
    return sum / Rational(binomial(n, t));
  }
  WeightDistribution wd = weight_distribution(f);
  __int128 acc = 0;
  for (int k = 0; k <= n - t; ++k) acc += (__int128)binomial(n - k, t) * wd.raw(k);
  __int128 den = (__int128)binomial(n, t) << (2 * n);
  return Rational::make(den - acc, den);
}

/// PI_f(T) from an autocorrelation spectrum:
/// 2^-t sum_{a <= chi_T} (-1)^wt(a) C_f(a).
inline Rational pseudo_influence_autocorr(const RealSpectrum& ac, const VariableSubset& T) {
  detail::require_nonempty(T, "pseudo_influence");
  if (ac.kind() != SpectrumKind::autocorrelation || ac.n() != T.n())
    throw std::invalid_argument("pseudo_influence: needs a matching autocorrelation spectrum");
  int64_t acc = detail::subcube_sum_signed(ac.raw(), T.point_mask());
  return Rational::dyadic(acc, ac.n() + T.size());
}

/// PI_f(T) from a Walsh spectrum: sum over u >= chi_T of W_f(u)^2.
inline Rational pseudo_influence_walsh(const RealSpectrum& walsh, const VariableSubset& T) {
  detail::require_nonempty(T, "pseudo_influence");
  if (walsh.kind() != SpectrumKind::walsh || walsh.n() != T.n())
    throw std::invalid_argument("pseudo_influence: needs a matching Walsh spectrum");
  uint64_t pm = T.point_mask();
  uint64_t comp = ~pm & (walsh.size() - 1);
  int64_t acc = 0;
  uint64_t s = comp;
  for (;;) {
    int64_t x = walsh.raw_value(pm | s);
    acc += x * x;
    if (s == 0) break;
    s = (s - 1) & comp;
  }
  return Rational::dyadic(acc, 2 * walsh.n());
}

enum class PseudoAlgorithm { autocorr, walsh };

/// Pseudo-influence of T on f; equals influence for singleton T. Both
/// algorithms return identical exact values.
inline InfluenceValue pseudo_influence(const BooleanFunction& f, const VariableSubset& T,
                                       PseudoAlgorithm algorithm = PseudoAlgorithm::walsh) {
  detail::require_same_n(f, T, "pseudo_influence");
  detail::require_nonempty(T, "pseudo_influence");
  Rational v = algorithm == PseudoAlgorithm::autocorr
                   ? pseudo_influence_autocorr(autocorrelation_spectrum(f), T)
                   : pseudo_influence_walsh(walsh_spectrum(f), T);
  return {v, Measure::pi, T};
}

/// t-PI(f): the subset average, equal to C(n,t)^-1 sum_{k>=t} C(k,t) p_hat(k).
inline Rational t_pseudo_influence(const BooleanFunction& f, int t,
                                   AggregateAlgorithm algorithm = AggregateAlgorithm::spectral) {
  int n = f.n();
  if (t < 1 || t > n) throw std::out_of_range("t_pseudo_influence: t outside [1,n]");
  if (algorithm == AggregateAlgorithm::enumerate) {
    RealSpectrum w = walsh_spectrum(f);
    Rational sum;
    for_each_subset_of_size(
        n, t, [&](const VariableSubset& T) { sum += pseudo_influence_walsh(w, T); });
    return sum / Rational(binomial(n, t));
  }
  WeightDistribution wd = weight_distribution(f);
  __int128 acc = 0;
  for (int k = t; k <= n; ++k) acc += (__int128)binomial(k, t) * wd.raw(k);
  return Rational::make(acc, (__int128)binomial(n, t) << (2 * n));
}

/// Ben-Or--Linial influence: the fraction of assignments to the other
/// variables under which the restriction to T is non-constant.
inline InfluenceValue bl_influence(const BooleanFunction& f, const VariableSubset& T) {
  detail::require_same_n(f, T, "bl_influence");
  detail::require_nonempty(T, "bl_influence");
  int n = f.n(), t = T.size();
  uint32_t full = uint32_t(1) << t;
  int64_t nonconstant = 0;
  for (uint32_t w : fiber_weights(f, T.complement())) nonconstant += (w != 0 && w != full);
  return {Rational::dyadic(nonconstant, n - t), Measure::bl, T};
}

/// t-I(f): average BL influence over all size-t subsets.
inline Rational t_bl_influence(const BooleanFunction& f, int t) {
  int n = f.n();
  if (t < 1 || t > n) throw std::out_of_range("t_bl_influence: t outside [1,n]");
  Rational sum;
  for_each_subset_of_size(n, t, [&](const VariableSubset& T) { sum += bl_influence(f, T).value; });
  return sum / Rational(binomial(n, t));
}

/// Gangopadhyay--Stanica influence: Pr[f(x) != f(x xor chi_T)].
inline InfluenceValue gs_influence(const BooleanFunction& f, const VariableSubset& T) {
  detail::require_same_n(f, T, "gs_influence");
  detail::require_nonempty(T, "gs_influence");
  int64_t d = detail::shift_disagreements(f, T.point_mask());
  return {Rational::dyadic(d, f.n()), Measure::gs, T};
}

/// Fischer et al. / Blais influence, via the closed form
/// 2^-(n-1-t) sum_b Var(f_b) over restrictions fixing the complement of T.
/// Equals influence(f,T) / 2.
inline InfluenceValue fb_influence(const BooleanFunction& f, const VariableSubset& T) {
  detail::require_same_n(f, T, "fb_influence");
  detail::require_nonempty(T, "fb_influence");
  int n = f.n(), t = T.size();
  int64_t full = int64_t(1) << t;
  int64_t acc = 0;
  for (uint32_t w : fiber_weights(f, T.complement())) acc += (int64_t)w * (full - w);
  return {Rational::dyadic(acc, n + t - 1), Measure::fb, T};
}

/// mu_f(T) = Pr over a <= chi_T and u of [f(u) != f(u xor a)]
///         = 2^-t sum_{a <= chi_T} (1 - C_f(a)) / 2. Equals influence / 2.
inline InfluenceValue mu_probability(const BooleanFunction& f, const VariableSubset& T) {
  detail::require_same_n(f, T, "mu_probability");
  detail::require_nonempty(T, "mu_probability");
  int n = f.n(), t = T.size();
  RealSpectrum ac = autocorrelation_spectrum(f);
  int64_t csum = detail::subcube_sum(ac.raw(), T.point_mask());
  return {Rational::dyadic((int64_t(1) << (n + t)) - csum, n + t + 1), Measure::mu, T};
}

struct UnionDecomposition {
  Rational whole;  // inf(S u T)
  Rational left;   // inf(S)
  Rational right;  // inf(T)
  Rational cross;  // sum of W^2 over u meeting both S and T
};

/// inf(S u T) = inf(S) + inf(T) - cross, with cross >= 0 certifying
/// sub-additivity. All four values from one Walsh pass.
inline UnionDecomposition union_decomposition(const BooleanFunction& f, const VariableSubset& S,
                                              const VariableSubset& T) {
  detail::require_same_n(f, S, "union_decomposition");
  detail::require_same_n(f, T, "union_decomposition");
  detail::require_nonempty(S, "union_decomposition");
  detail::require_nonempty(T, "union_decomposition");
  RealSpectrum w = walsh_spectrum(f);
  uint64_t ps = S.point_mask(), pt = T.point_mask();
  int64_t acc_union = 0, acc_s = 0, acc_t = 0, acc_cross = 0;
  for (uint64_t u = 0; u < w.size(); ++u) {
    int64_t s = w.raw_value(u);
    int64_t sq = s * s;
    bool hits_s = u & ps, hits_t = u & pt;
    if (hits_s || hits_t) acc_union += sq;
    if (hits_s) acc_s += sq;
    if (hits_t) acc_t += sq;
    if (hits_s && hits_t) acc_cross += sq;
  }
  int d = 2 * f.n();
  return {Rational::dyadic(acc_union, d), Rational::dyadic(acc_s, d),
          Rational::dyadic(acc_t, d), Rational::dyadic(acc_cross, d)};
}

}  // namespace bfa
