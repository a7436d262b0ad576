#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bfa/boolean_function.hpp"
#include "bfa/rational.hpp"
#include "bfa/subsets.hpp"

namespace bfa {

/// Brute-force reference implementations, written directly against the
/// probability definitions. They share nothing with the transform-based
/// fast paths beyond truth-table evaluation, so agreement certifies both.
namespace oracle {

struct OracleConfig {
  int max_exhaustive_n = 3;
  uint64_t rng_seed = 0x9e3779b97f4a7c15ULL;
};

namespace detail {
inline void check(const BooleanFunction& f, const VariableSubset& T, const char* who) {
  if (T.n() != f.n()) throw std::invalid_argument(std::string(who) + ": mismatched ambient n");
  if (T.is_empty()) throw std::invalid_argument(std::string(who) + ": empty variable set");
}
}  // namespace detail

/// Pr over (a <= chi_T, u) of [f(u) != f(u xor a)], by full enumeration of
/// the 2^(t+n) event space. Equals influence(f,T)/2.
inline Rational influence_by_definition(const BooleanFunction& f, const VariableSubset& T) {
  detail::check(f, T, "influence_by_definition");
  int n = f.n(), t = T.size();
  uint64_t pm = T.point_mask();
  int64_t count = 0;
  uint64_t a = pm;
  for (;;) {
    for (uint64_t u = 0; u < f.domain_size(); ++u) count += f(u) != f(u ^ a);
    if (a == 0) break;
    a = (a - 1) & pm;
  }
  return Rational::dyadic(count, t + n);
}

/// Tal's influence J_f(T) = E_y[(D_T f)(y)^2] with
/// (D_T f)(y) = 2^-t sum_b (-1)^(wt(b) + f(b on T, y on rest)).
/// Equals pseudo_influence(f,T).
inline Rational tal_influence_by_definition(const BooleanFunction& f, const VariableSubset& T) {
  detail::check(f, T, "tal_influence_by_definition");
  int n = f.n(), t = T.size();
  std::vector<uint64_t> on_t = BooleanFunction::scatter_table(n, T.indices());
  std::vector<uint64_t> on_rest = BooleanFunction::scatter_table(n, T.complement().indices());
  int64_t acc = 0;
  for (uint64_t y = 0; y < (uint64_t(1) << (n - t)); ++y) {
    int64_t d = 0;
    for (uint64_t b = 0; b < on_t.size(); ++b) {
      int sign = (std::popcount(b) + (int)f(on_t[b] | on_rest[y])) & 1;
      d += sign ? -1 : 1;
    }
    acc += d * d;
  }
  return Rational::dyadic(acc, n + t);
}

/// Pr over (x, y-bits-on-T) of [f(x) != f(Z(T,x,y))] where Z takes y on T
/// and x elsewhere; bits of y off T cannot matter and are not enumerated.
/// Equals fb_influence(f,T).
inline Rational fb_influence_by_enumeration(const BooleanFunction& f, const VariableSubset& T) {
  detail::check(f, T, "fb_influence_by_enumeration");
  int n = f.n(), t = T.size();
  uint64_t pm = T.point_mask();
  std::vector<uint64_t> on_t = BooleanFunction::scatter_table(n, T.indices());
  int64_t count = 0;
  for (uint64_t x = 0; x < f.domain_size(); ++x) {
    bool fx = f(x);
    uint64_t keep = x & ~pm;
    for (uint64_t y = 0; y < on_t.size(); ++y) count += fx != f(keep | on_t[y]);
  }
  return Rational::dyadic(count, n + t);
}

}  // namespace oracle
}  // namespace bfa
