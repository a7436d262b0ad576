#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bfa/anf.hpp"
#include "bfa/boolean_function.hpp"
#include "bfa/influence.hpp"

using namespace bfa;

namespace {

BooleanFunction all_functions_nth(int n, uint64_t table) {
  return BooleanFunction::from_bit_fn(n, [&](uint64_t x) { return table >> x & 1; });
}

BooleanFunction gs_example() {
  return build_from_anf("x2*x3 + x2*x4 + x1*x2*x3 + x1*x2*x4", 4);
}

Rational inf_of(const BooleanFunction& f, const VariableSubset& T,
                InfluenceAlgorithm alg = InfluenceAlgorithm::restriction) {
  return influence(f, T, alg).value;
}

template <class Fn>
void for_all_functions_upto(int max_n, Fn&& fn) {
  for (int n = 1; n <= max_n; ++n) {
    uint64_t tables = uint64_t(1) << (uint64_t(1) << n);
    for (uint64_t tbl = 0; tbl < tables; ++tbl) fn(all_functions_nth(n, tbl));
  }
}

}  // namespace

TEST_CASE("influence on the named functions, all algorithms") {
  BooleanFunction p3 = BooleanFunction::parity(3);
  VariableSubset t12 = VariableSubset::from_indices(3, {1, 2});
  for (auto alg :
       {InfluenceAlgorithm::restriction, InfluenceAlgorithm::autocorr, InfluenceAlgorithm::walsh})
    CHECK(inf_of(p3, t12, alg) == Rational(1));

  VariableSubset t34 = VariableSubset::from_indices(4, {3, 4});
  for (auto alg :
       {InfluenceAlgorithm::restriction, InfluenceAlgorithm::autocorr, InfluenceAlgorithm::walsh})
    CHECK(inf_of(gs_example(), t34, alg) == Rational(1, 4));

  BooleanFunction and3 = build_from_anf("x1*x2*x3", 3);
  CHECK(inf_of(and3, VariableSubset::full(3)) == Rational(7, 16));

  CHECK_THROWS_AS(influence(p3, VariableSubset(3, 0)), std::invalid_argument);
}

TEST_CASE("influence of a single variable") {
  BooleanFunction andf = BooleanFunction::from_bits(2, "0001");
  CHECK(influence_variable(andf, 1).value == Rational(1, 2));
  CHECK(influence_variable(andf, 1).value == inf_of(andf, VariableSubset::from_indices(2, {1})));

  BooleanFunction c = BooleanFunction::constant(3, true);
  for (int i = 1; i <= 3; ++i) CHECK(influence_variable(c, i).value == Rational(0));

  for (int n = 1; n <= 6; ++n)
    for (int i = 1; i <= n; ++i)
      CHECK(influence_variable(BooleanFunction::parity(n), i).value == Rational(1));

  CHECK_THROWS_AS(influence_variable(andf, 0), std::out_of_range);
  CHECK_THROWS_AS(influence_variable(andf, 3), std::out_of_range);
}

TEST_CASE("three influence algorithms agree; singleton equals variable form") {
  std::mt19937_64 rng(23);
  auto check_one = [&](const BooleanFunction& f) {
    for_each_nonempty_subset(f.n(), [&](const VariableSubset& T) {
      Rational a = inf_of(f, T, InfluenceAlgorithm::restriction);
      CHECK(a == inf_of(f, T, InfluenceAlgorithm::autocorr));
      CHECK(a == inf_of(f, T, InfluenceAlgorithm::walsh));
      if (T.size() == 1) CHECK(a == influence_variable(f, T.indices()[0]).value);
    });
  };
  for_all_functions_upto(3, check_one);
  for (int rep = 0; rep < 20; ++rep) check_one(BooleanFunction::random(6, rng));
}

TEST_CASE("t-influence") {
  CHECK(t_influence(build_from_anf("x1*x2 + x3*x4", 4), 1) == Rational(1, 2));
  for (int t = 1; t <= 4; ++t)
    CHECK(t_influence(BooleanFunction::constant(4, false), t) == Rational(0));
  CHECK(t_influence(BooleanFunction::parity(3), 1) == Rational(1));
  CHECK(t_influence(build_from_anf("x1*x2*x3", 3), 1) == Rational(1, 4));
  // Non-dyadic aggregate: a dictator among 3 variables averages to 1/3.
  CHECK(t_influence(build_from_anf("x1", 3), 1) == Rational(1, 3));
  CHECK_THROWS_AS(t_influence(BooleanFunction::parity(3), 0), std::out_of_range);
  CHECK_THROWS_AS(t_influence(BooleanFunction::parity(3), 4), std::out_of_range);
}

TEST_CASE("t-influence: enumerate equals spectral") {
  for_all_functions_upto(3, [&](const BooleanFunction& f) {
    for (int t = 1; t <= f.n(); ++t)
      CHECK(t_influence(f, t, AggregateAlgorithm::enumerate) ==
            t_influence(f, t, AggregateAlgorithm::spectral));
  });
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 10; ++rep) {
    BooleanFunction f = BooleanFunction::random(6, rng);
    for (int t = 1; t <= 6; ++t)
      CHECK(t_influence(f, t, AggregateAlgorithm::enumerate) ==
            t_influence(f, t, AggregateAlgorithm::spectral));
  }
}

TEST_CASE("subset_count") {
  for (int n = 1; n <= 8; ++n)
    for (int t = 1; t <= n; ++t) {
      CHECK(subset_count(n, t, 0) == 0);
      for (int k = 0; k <= n; ++k) {
        int64_t direct = 0;
        for (int i = 1; i <= std::min(k, t); ++i) direct += binomial(k, i) * binomial(n - k, t - i);
        CHECK(subset_count(n, t, k) == direct);
        if (t == 1) CHECK(subset_count(n, 1, k) == k);
      }
    }
  CHECK(subset_count(4, 2, 1) == 3);
  CHECK_THROWS_AS(subset_count(4, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(subset_count(4, 2, 5), std::out_of_range);
}

TEST_CASE("pseudo-influence") {
  BooleanFunction andf = BooleanFunction::from_bits(2, "0001");
  VariableSubset both = VariableSubset::from_indices(2, {1, 2});
  CHECK(pseudo_influence(andf, both, PseudoAlgorithm::autocorr).value == Rational(1, 4));
  CHECK(pseudo_influence(andf, both, PseudoAlgorithm::walsh).value == Rational(1, 4));

  for (int n = 1; n <= 5; ++n)
    for_each_nonempty_subset(n, [&](const VariableSubset& T) {
      CHECK(pseudo_influence(BooleanFunction::parity(n), T).value == Rational(1));
    });

  VariableSubset single = VariableSubset::from_indices(2, {1});
  CHECK(pseudo_influence(andf, single).value == Rational(1, 2));
  CHECK(pseudo_influence(andf, single).value == inf_of(andf, single));

  CHECK_THROWS_AS(pseudo_influence(andf, VariableSubset(2, 0)), std::invalid_argument);
}

TEST_CASE("pseudo-influence: both algorithms agree; singletons equal influence") {
  for_all_functions_upto(3, [&](const BooleanFunction& f) {
    for_each_nonempty_subset(f.n(), [&](const VariableSubset& T) {
      Rational a = pseudo_influence(f, T, PseudoAlgorithm::autocorr).value;
      CHECK(a == pseudo_influence(f, T, PseudoAlgorithm::walsh).value);
      CHECK(Rational(0) <= a);
      CHECK(a <= Rational(1));
      if (T.size() == 1) CHECK(a == inf_of(f, T));
    });
  });
}

TEST_CASE("t-pseudo-influence") {
  for (int n = 1; n <= 5; ++n)
    for (int t = 1; t <= n; ++t)
      CHECK(t_pseudo_influence(BooleanFunction::parity(n), t) == Rational(1));
  for (int t = 1; t <= 4; ++t)
    CHECK(t_pseudo_influence(BooleanFunction::constant(4, true), t) == Rational(0));
  CHECK(t_pseudo_influence(BooleanFunction::from_bits(2, "0001"), 2) == Rational(1, 4));
  for_all_functions_upto(3, [&](const BooleanFunction& f) {
    for (int t = 1; t <= f.n(); ++t)
      CHECK(t_pseudo_influence(f, t, AggregateAlgorithm::enumerate) ==
            t_pseudo_influence(f, t, AggregateAlgorithm::spectral));
  });
}

TEST_CASE("ben-or--linial influence") {
  BooleanFunction ind6 = BooleanFunction::indicator(6, 0);
  CHECK(bl_influence(ind6, VariableSubset::from_indices(6, {4, 5, 6})).value == Rational(1, 8));
  CHECK(bl_influence(ind6, VariableSubset::from_indices(6, {2, 3, 6})).value == Rational(1, 8));
  CHECK(bl_influence(ind6, VariableSubset::from_indices(6, {2, 3, 4, 5, 6})).value ==
        Rational(1, 2));

  CHECK(bl_influence(BooleanFunction::constant(4, false), VariableSubset::full(4)).value ==
        Rational(0));

  CHECK(t_bl_influence(BooleanFunction::constant(3, true), 2) == Rational(0));
  CHECK(t_bl_influence(BooleanFunction::parity(3), 1) == Rational(1));
  CHECK(t_bl_influence(build_from_anf("x1*x2*x3", 3), 1) == Rational(1, 4));
  CHECK_THROWS_AS(t_bl_influence(BooleanFunction::parity(3), 0), std::out_of_range);
}

TEST_CASE("bl influence properties, exhaustive n <= 3") {
  for_all_functions_upto(3, [&](const BooleanFunction& f) {
    for_each_nonempty_subset(f.n(), [&](const VariableSubset& T) {
      Rational bl = bl_influence(f, T).value;
      CHECK(Rational(0) <= bl);
      CHECK(bl <= Rational(1));
      CHECK((bl == Rational(0)) == f.is_degenerate_on(T));
      // monotone under supersets
      for_each_nonempty_subset(f.n(), [&](const VariableSubset& S) {
        if (T.subset_of(S)) CHECK(bl <= bl_influence(f, S).value);
      });
    });
  });
}

TEST_CASE("gs influence") {
  CHECK(gs_influence(gs_example(), VariableSubset::from_indices(4, {3, 4})).value == Rational(0));
  CHECK_FALSE(gs_example().is_degenerate_on(VariableSubset::from_indices(4, {3, 4})));
  CHECK(gs_influence(BooleanFunction::parity(3), VariableSubset::from_indices(3, {1})).value ==
        Rational(1));
  CHECK(gs_influence(BooleanFunction::constant(3, false), VariableSubset::full(3)).value ==
        Rational(0));
}

TEST_CASE("fb influence and mu probability") {
  BooleanFunction p3 = BooleanFunction::parity(3);
  VariableSubset t12 = VariableSubset::from_indices(3, {1, 2});
  CHECK(fb_influence(p3, t12).value == Rational(1, 2));
  CHECK(mu_probability(p3, t12).value == Rational(1, 2));

  CHECK(fb_influence(BooleanFunction::constant(4, true), VariableSubset::full(4)).value ==
        Rational(0));
  CHECK(mu_probability(BooleanFunction::constant(4, true), VariableSubset::full(4)).value ==
        Rational(0));

  VariableSubset t34 = VariableSubset::from_indices(4, {3, 4});
  CHECK(fb_influence(gs_example(), t34).value == Rational(1, 8));
  CHECK(mu_probability(gs_example(), t34).value == Rational(1, 8));
}

TEST_CASE("halving: fb = mu = influence/2 <= 1/2, exhaustive n <= 3") {
  for_all_functions_upto(3, [&](const BooleanFunction& f) {
    for_each_nonempty_subset(f.n(), [&](const VariableSubset& T) {
      Rational half = inf_of(f, T) / Rational(2);
      CHECK(fb_influence(f, T).value == half);
      CHECK(mu_probability(f, T).value == half);
      CHECK(half <= Rational(1, 2));
    });
  });
}

TEST_CASE("union decomposition") {
  BooleanFunction p3 = BooleanFunction::parity(3);
  UnionDecomposition d = union_decomposition(p3, VariableSubset::from_indices(3, {1}),
                                             VariableSubset::from_indices(3, {2}));
  CHECK(d.whole == Rational(1));
  CHECK(d.left == Rational(1));
  CHECK(d.right == Rational(1));
  CHECK(d.cross == Rational(1));

  // f degenerate on T: the union contributes nothing beyond S.
  BooleanFunction dict = build_from_anf("x1", 3);
  UnionDecomposition d2 = union_decomposition(dict, VariableSubset::from_indices(3, {1}),
                                              VariableSubset::from_indices(3, {3}));
  CHECK(d2.right == Rational(0));
  CHECK(d2.whole == d2.left);

  CHECK_THROWS_AS(union_decomposition(p3, VariableSubset(3, 0), VariableSubset::full(3)),
                  std::invalid_argument);
}

TEST_CASE("influence basic properties, exhaustive n <= 3") {
  for_all_functions_upto(3, [&](const BooleanFunction& f) {
    int n = f.n();
    for_each_nonempty_subset(n, [&](const VariableSubset& T) {
      Rational v = inf_of(f, T);
      CHECK(Rational(0) <= v);
      CHECK(v <= Rational(1));
      CHECK((v == Rational(0)) == f.is_degenerate_on(T));
      bool all_balanced = true;
      auto fw = fiber_weights(f, T.complement());
      for (uint32_t w : fw) all_balanced = all_balanced && w * 2 == (uint32_t(1) << T.size());
      CHECK((v == Rational(1)) == all_balanced);
    });
    for_each_nonempty_subset(n, [&](const VariableSubset& S) {
      for_each_nonempty_subset(n, [&](const VariableSubset& T) {
        UnionDecomposition d = union_decomposition(f, S, T);
        CHECK(d.whole == d.left + d.right - d.cross);
        CHECK(d.cross >= Rational(0));
        CHECK(d.whole <= d.left + d.right);
        CHECK(d.whole >= d.right);  // monotone: S u T contains T
        CHECK(d.whole == inf_of(f, S | T));
      });
    });
  });
}

TEST_CASE("ordering chain pi <= inf <= bl with exact equality condition, n <= 3") {
  for_all_functions_upto(3, [&](const BooleanFunction& f) {
    for_each_nonempty_subset(f.n(), [&](const VariableSubset& T) {
      Rational pi = pseudo_influence(f, T).value;
      Rational in = inf_of(f, T);
      Rational bl = bl_influence(f, T).value;
      CHECK(pi <= in);
      CHECK(in <= bl);
      // inf = bl iff every restriction fixing the complement is constant or
      // balanced.
      bool flat = true;
      uint32_t full = uint32_t(1) << T.size();
      for (uint32_t w : fiber_weights(f, T.complement()))
        flat = flat && (w == 0 || w == full || 2 * w == full);
      CHECK((in == bl) == flat);
    });
  });
}

TEST_CASE("pseudo-influence anti-properties") {
  // Non-increasing under supersets.
  for_all_functions_upto(3, [&](const BooleanFunction& f) {
    for_each_nonempty_subset(f.n(), [&](const VariableSubset& T) {
      for_each_nonempty_subset(f.n(), [&](const VariableSubset& S) {
        if (T.subset_of(S))
          CHECK(pseudo_influence(f, S).value <= pseudo_influence(f, T).value);
      });
    });
  });

  // There are non-degenerate functions with zero pseudo-influence; search at
  // n = 3 instead of hard-coding one.
  bool found = false;
  VariableSubset full3 = VariableSubset::full(3);
  for (uint64_t tbl = 0; tbl < 256 && !found; ++tbl) {
    BooleanFunction f = all_functions_nth(3, tbl);
    if (!f.is_degenerate_on(full3) && pseudo_influence(f, full3).value == Rational(0)) {
      found = true;
      CHECK(inf_of(f, full3) > Rational(0));
    }
  }
  CHECK(found);
}

TEST_CASE("t-influence monotone in t and poincare bound, all n <= 4") {
  for_all_functions_upto(4, [&](const BooleanFunction& f) {
    int n = f.n();
    Rational prev;
    Rational var4 = Rational(4) * f.variance();
    for (int t = 1; t <= n; ++t) {
      Rational cur = t_influence(f, t);
      CHECK(prev <= cur);
      prev = cur;
      CHECK(cur >= Rational(4 * t) / Rational(n) * f.variance());
    }
    CHECK(prev == var4);  // equality at t = n
  });
}

TEST_CASE("monotonicity and sub-additivity on random larger functions") {
  std::mt19937_64 rng(0x5eedull);
  for (int rep = 0; rep < 50; ++rep) {
    BooleanFunction f = BooleanFunction::random(8, rng);
    for (int pair = 0; pair < 8; ++pair) {
      VariableSubset S(8, 1 + rng() % 255);
      VariableSubset T(8, 1 + rng() % 255);
      UnionDecomposition d = union_decomposition(f, S, T);
      CHECK(d.whole == d.left + d.right - d.cross);
      CHECK(d.whole <= d.left + d.right);
      CHECK(d.whole >= d.left);
      CHECK(d.whole >= d.right);
    }
  }
}
