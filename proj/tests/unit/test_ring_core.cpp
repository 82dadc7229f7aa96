#include <random>
#include <thread>

#include "doctest.h"

#include "bott/error.hpp"
#include "bott/ring.hpp"
#include "test_support.hpp"

using namespace bott;
using namespace bott::testing;

TEST_SUITE("ring_core") {
  TEST_CASE("construction") {
    const BottRing cp1(BottMatrix(1));
    CHECK(cp1.alpha(1).is_zero());
    CHECK(cp1.square(cp1.generator(1)).is_zero());

    const BottRing sigma(hirzebruch(5));
    CHECK(sigma.alpha(2) == x(1, 5));

    CHECK_THROWS_AS(matrix(2, {{2, 1, 1}}), InputError);
    CHECK_THROWS_AS(matrix(2, {{1, 1, 1}}), InputError);
    CHECK_THROWS_AS(matrix(2, {{1, 3, 1}}), InputError);
    CHECK_THROWS_AS(matrix(3, {{1, 2, 1}, {1, 2, 2}}), InputError);
    CHECK_THROWS_AS(BottMatrix(0), InputError);
    CHECK_THROWS_AS(BottMatrix(kMaxHeight + 1), InputError);
  }

  TEST_CASE("alpha") {
    const BottRing h4(tower_h(4));
    CHECK(h4.alpha(1).is_zero());
    for (int j = 2; j <= 4; ++j) CHECK(h4.alpha(j) == x(1));
    CHECK(BottRing(hirzebruch(-3)).alpha(2) == x(1, -3));
    CHECK_THROWS_AS(h4.alpha(0), InputError);
    CHECK_THROWS_AS(h4.alpha(5), InputError);
  }

  TEST_CASE("linear_combine") {
    const std::vector<Coeff> c1{2, -2};
    const std::vector<CohomologyClass> v1{x(1), x(1)};
    CHECK(linear_combine(c1, v1).is_zero());

    const std::vector<Coeff> c2{2, -1};
    const std::vector<CohomologyClass> v2{x(2), x(1)};
    CHECK(linear_combine(c2, v2) == x(2, 2) - x(1));

    const std::vector<Coeff> c3{1, 1};
    const std::vector<CohomologyClass> v3{mono({1, 2}), mono({1, 2})};
    CHECK(linear_combine(c3, v3) == mono({1, 2}, 2));

    const std::vector<Coeff> bad{1};
    CHECK_THROWS_AS(linear_combine(bad, v3), InputError);
  }

  TEST_CASE("reduce_monomial") {
    const BottRing sigma1(hirzebruch(1));
    const std::vector<int> x2sq{0, 2};
    CHECK(sigma1.reduce_monomial(x2sq) == mono({1, 2}));

    const std::vector<int> x1sq{2, 0};
    CHECK(sigma1.reduce_monomial(x1sq).is_zero());
    CHECK(BottRing(tower_h(3)).reduce_monomial(std::vector<int>{2}).is_zero());

    const std::vector<int> x2x3{0, 1, 1};
    CHECK(BottRing(tower_h(3)).reduce_monomial(x2x3) == mono({2, 3}));

    const std::vector<int> negative{-1, 0};
    CHECK_THROWS_AS(sigma1.reduce_monomial(negative), InputError);
  }

  TEST_CASE("mul") {
    const BottRing sigma1(hirzebruch(1));
    CHECK(sigma1.mul(x(2), x(2)) == mono({1, 2}));

    const BottRing h3(tower_h(3));
    const auto g = x(2, 2) - x(1);
    CHECK(h3.mul(g, g).is_zero());

    // Degree above 2n vanishes.
    CHECK(sigma1.mul(mono({1, 2}), x(2)).is_zero());
    CHECK(sigma1.mul(mono({1, 2}), mono({1, 2})).is_zero());

    CHECK_THROWS_AS(sigma1.mul(x(3), x(1)), InputError);
  }

  TEST_CASE("mul detects overflow") {
    const BottRing ring(hirzebruch(3'000'000'000LL));
    const auto big = x(2, 4'000'000'000LL);
    CHECK_THROWS_AS(ring.mul(big, big), OverflowError);
  }

  TEST_CASE("mod2_reduce") {
    CHECK(mod2_reduce(x(2, 2) - x(1)) == mod2_reduce(x(1)));
    CHECK(mod2_reduce(x(1)).lift() == x(1));
    CHECK(mod2_reduce(x(1, 2)).is_zero());
    CHECK(mod2_reduce(x(1, -3) + mono({1, 2}, 4)).lift() == x(1));
  }

  TEST_CASE("is_primitive") {
    CHECK(is_primitive(x(1)));
    CHECK(is_primitive(x(2, 2) - x(1)));
    CHECK_FALSE(is_primitive(x(1, 2) + x(2, 4)));
    CHECK_THROWS_AS(is_primitive(CohomologyClass{}), InputError);
    CHECK_THROWS_AS(is_primitive(mono({1, 2})), InputError);
    CHECK_THROWS_AS(is_primitive(x(1) + mono({1, 2})), InputError);
  }

  TEST_CASE("top_coefficient") {
    CHECK(BottRing(tower_h(2)).top_coefficient(mono({1, 2})) == 1);
    const BottRing sigma1(hirzebruch(1));
    CHECK(sigma1.top_coefficient(sigma1.mul(x(2), x(2))) == 1);
    CHECK(BottRing(hirzebruch(4)).top_coefficient(x(1)) == 0);
  }

  TEST_CASE("chern_fiber_c1") {
    const BottRing h5(tower_h(5));
    CHECK(h5.chern_fiber_c1(5) == x(1) - x(5, 2));

    // Stage with alpha = -x_1: Sigma_{-1}.
    const BottRing neg(hirzebruch(-1));
    CHECK(neg.chern_fiber_c1(2) == x(1, -1) - x(2, 2));

    CHECK(h5.chern_fiber_c1(1) == x(1, -2));
    CHECK_THROWS_AS(h5.chern_fiber_c1(6), InputError);

    // The quadratic remainder vanishes.
    CHECK(h5.fiber_total_chern_class(3) == CohomologyClass::unit() + x(1) - x(3, 2));
  }

  TEST_CASE("basis ranks") {
    const BottRing ring(tower_h(5));
    const int binom[] = {1, 5, 10, 10, 5, 1};
    for (int k = 0; k <= 5; ++k) {
      const auto b = ring.basis(k);
      CHECK(static_cast<int>(b.size()) == binom[k]);
      CHECK(std::is_sorted(b.begin(), b.end()));
      for (auto m : b) CHECK(m.size() == k);
    }
  }

  TEST_CASE("term order") {
    const auto m = [](std::vector<int> idx) { return Monomial::from_indices(idx); };
    CHECK(m({}) < m({3}));
    CHECK(m({1}) < m({2}));
    CHECK(m({3}) < m({1, 2}));
    CHECK(m({1, 2}) < m({1, 3}));
    CHECK(m({1, 3}) < m({2, 3}));
    CHECK(m({1, 4}) < m({2, 3}));
    CHECK_FALSE(m({2, 3}) < m({2, 3}));
    CHECK(mono({2, 3}).to_string() == "x_2x_3");
    CHECK((x(1, -1) + x(2, 2)).to_string() == "-x_1 + 2x_2");
  }

  TEST_CASE("property: confluence of rewrite orders") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> exp(0, 3);
    for (int trial = 0; trial < 400; ++trial) {
      const int n = 1 + trial % 5;
      const BottRing ring(random_matrix(rng, n, 3));
      std::vector<int> e(static_cast<std::size_t>(n));
      for (auto& v : e) v = exp(rng);
      const auto hi = ring.reduce_monomial(e, RewriteOrder::HighestFirst);
      CHECK(ring.reduce_monomial(e, RewriteOrder::LowestFirst) == hi);
      CHECK(ring.reduce_monomial(e, RewriteOrder::Random, rng()) == hi);

      Poly p{{e, 1}};
      CHECK(naive_normal_form(ring.matrix(), p) == hi);
    }
  }

  TEST_CASE("property: products agree with the naive oracle") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 1 + trial % 5;
      const BottMatrix m = random_matrix(rng, n, 3);
      const BottRing ring(m);
      const auto a = random_class(rng, n, 10);
      const auto b = random_class(rng, n, 10);
      CHECK(ring.mul(a, b) == naive_mul(m, a, b));
    }
  }

  TEST_CASE("property: defining relations, grading, cache coherence") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 1 + trial % 6;
      const BottRing ring(random_matrix(rng, n, 4));
      for (int j = 1; j <= n; ++j) {
        CHECK(ring.mul(ring.generator(j), ring.generator(j)) == ring.mul(ring.alpha(j), ring.generator(j)));
        CHECK(ring.mul(ring.generator(j), ring.generator(j) - ring.alpha(j)).is_zero());
        CHECK(ring.chern_fiber_c1(j) + x(j, 2) - ring.alpha(j) == CohomologyClass{});
      }
      const auto a = random_linear(rng, n, 5);
      const auto b = ring.mul(a, random_linear(rng, n, 5));
      CHECK(b.is_homogeneous_of(4));
      // n + 1 degree-2 factors always vanish.
      CohomologyClass p = CohomologyClass::unit();
      for (int k = 0; k <= n; ++k) p = ring.mul(p, random_linear(rng, n, 3));
      CHECK(p.is_zero());

      const auto c = random_class(rng, n, 10);
      const auto d = random_class(rng, n, 10);
      const auto before = ring.mul(c, d);
      ring.clear_cache();
      CHECK(ring.cache_size() == 0);
      CHECK(ring.mul(c, d) == before);
    }
  }

  TEST_CASE("concurrent products agree") {
    const BottRing ring(tower_h(6));
    std::mt19937_64 rng(3);
    std::vector<std::pair<CohomologyClass, CohomologyClass>> inputs;
    for (int k = 0; k < 64; ++k) inputs.emplace_back(random_class(rng, 6, 5, 6), random_class(rng, 6, 5, 6));
    std::vector<CohomologyClass> expected;
    for (const auto& [a, b] : inputs) expected.push_back(naive_mul(ring.matrix(), a, b));

    std::vector<int> ok(4, 1);
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t)
      workers.emplace_back([&, t] {
        for (std::size_t k = 0; k < inputs.size(); ++k)
          if (ring.mul(inputs[k].first, inputs[k].second) != expected[k]) ok[t] = 0;
      });
    for (auto& w : workers) w.join();
    for (int v : ok) CHECK(v == 1);
  }
}
