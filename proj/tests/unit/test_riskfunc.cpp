#include "oracles/generators.hpp"
#include "oracles/statistics.hpp"
#include "pathrisk/errors.hpp"
#include "pathrisk/riskfunc.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace pathrisk;
using V = std::vector<double>;

namespace {

EmpiricalSample one_to_ten() {
    V v(10);
    std::iota(v.begin(), v.end(), 1.0);
    return EmpiricalSample(v);
}

}  // namespace

TEST_CASE("EmpiricalSample invariants") {
    CHECK_THROWS_AS(EmpiricalSample(V{}), std::invalid_argument);
    CHECK_THROWS_AS(EmpiricalSample(V{1.0, NAN}), std::invalid_argument);
    const EmpiricalSample s(V{3, 1, 2});
    CHECK(s.min() == 1);
    CHECK(s.max() == 3);
    CHECK(s.mean() == 2);
    CHECK(s.values()[0] == 3);  // order preserved
}

TEST_CASE("quantile examples") {
    CHECK(quantile(one_to_ten(), 0.9) == 9.0);
    CHECK(quantile(one_to_ten(), 0.0) == 1.0);
    CHECK(quantile(EmpiricalSample(V(7, 2.5)), 0.37) == 2.5);
    CHECK_THROWS_AS(quantile(one_to_ten(), 1.0), DomainError);
    CHECK_THROWS_AS(quantile(one_to_ten(), -0.1), DomainError);
}

TEST_CASE("tail_mean examples") {
    CHECK(tail_mean(one_to_ten(), 0.9) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(tail_mean(one_to_ten(), 0.0) == doctest::Approx(5.5).epsilon(1e-12));
    CHECK(tail_mean(EmpiricalSample(V{0.1, 0.2, 0.3, 0.4}), 0.5) == doctest::Approx(0.35).epsilon(1e-12));
    CHECK_THROWS_AS(tail_mean(one_to_ten(), 1.0), DomainError);
}

TEST_CASE("tail_mean at a level between grid points weights the boundary order statistic") {
    // {1..10}, alpha 0.85: (0.05 * 9 + 0.1 * 10) / 0.15
    CHECK(tail_mean(one_to_ten(), 0.85) == doctest::Approx((0.05 * 9 + 0.1 * 10) / 0.15).epsilon(1e-12));
}

TEST_CASE("quantile and tail_mean agree with the literal definitions") {
    gen::Rng rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const V v = rng.sample(rng.index(1, 60));
        const double alpha = trial % 5 == 0 ? static_cast<double>(rng.index(0, 9)) / 10.0 : rng.uniform(0.0, 0.999);
        const EmpiricalSample s(v);
        REQUIRE(quantile(s, alpha) == oracle::quantile(v, alpha));
        REQUIRE(std::fabs(tail_mean(s, alpha) - oracle::tail_mean(v, alpha)) <= 1e-9 * (1 + std::fabs(tail_mean(s, alpha))));
    }
}

TEST_CASE("tail_mean properties on random samples") {
    gen::Rng rng(4);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = rng.index(1, 80);
        const V v = rng.sample(n);
        const EmpiricalSample s(v);
        const double alpha = rng.uniform(0.0, 0.99);
        REQUIRE(tail_mean(s, alpha) >= quantile(s, alpha) - 1e-12);

        double prev = -INFINITY;
        for (double a = 0.0; a < 0.995; a += 0.01) {
            const double tm = tail_mean(s, a);
            REQUIRE(tm >= prev - 1e-12);
            prev = tm;
        }

        REQUIRE(tail_mean(s, static_cast<double>(n - 1) / static_cast<double>(n)) ==
                doctest::Approx(s.max()).epsilon(1e-12));

        const double c = rng.uniform(-3, 3);
        const double lambda = rng.uniform(0.1, 5);
        V shifted = v, scaled = v;
        for (auto& x : shifted) x += c;
        for (auto& x : scaled) x *= lambda;
        REQUIRE(std::fabs(quantile(EmpiricalSample(shifted), alpha) - (quantile(s, alpha) + c)) <= 1e-12);
        REQUIRE(std::fabs(tail_mean(EmpiricalSample(shifted), alpha) - (tail_mean(s, alpha) + c)) <= 1e-9);
        REQUIRE(std::fabs(quantile(EmpiricalSample(scaled), alpha) - lambda * quantile(s, alpha)) <= 1e-12 * (1 + lambda));
        REQUIRE(std::fabs(tail_mean(EmpiricalSample(scaled), alpha) - lambda * tail_mean(s, alpha)) <= 1e-9 * (1 + lambda));
    }
}

TEST_CASE("tail_mean is subadditive over paired scenarios") {
    gen::Rng rng(8);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = rng.index(2, 100);
        const V a = rng.sample(n), b = rng.sample(n, 2.0);
        V sum(n);
        for (std::size_t i = 0; i < n; ++i) sum[i] = a[i] + b[i];
        const double alpha = rng.uniform(0.0, 0.99);
        REQUIRE(tail_mean(EmpiricalSample(sum), alpha) <=
                tail_mean(EmpiricalSample(a), alpha) + tail_mean(EmpiricalSample(b), alpha) + 1e-12);
    }
}

TEST_CASE("deviation") {
    CHECK(deviation(EmpiricalSample(V{1, 3})) == doctest::Approx(1.41421356).epsilon(1e-8));
    CHECK(deviation(EmpiricalSample(V(5, 0.3))) == 0.0);
    const V v{0.3, -1.2, 4.0, 2.2};
    V tripled = v;
    for (auto& x : tripled) x *= 3;
    CHECK(deviation(EmpiricalSample(tripled)) == doctest::Approx(3 * deviation(EmpiricalSample(v))).epsilon(1e-12));
    CHECK(deviation(EmpiricalSample(v)) == doctest::Approx(oracle::sample_sd(v)).epsilon(1e-12));
    CHECK_THROWS_AS(deviation(EmpiricalSample(V{1})), DomainError);
}

TEST_CASE("skewness") {
    CHECK(std::fabs(skewness(EmpiricalSample(V{-1, 0, 1}))) < 1e-15);
    CHECK(skewness(EmpiricalSample(V{0, 0, 0, 1})) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(skewness(EmpiricalSample(V{0, 0, 0, 1})) == doctest::Approx(1.1547).epsilon(1e-4));
    CHECK(skewness(EmpiricalSample(V{5, 5, 5, 6})) == doctest::Approx(skewness(EmpiricalSample(V{0, 0, 0, 1}))).epsilon(1e-9));
    CHECK_THROWS_AS(skewness(EmpiricalSample(V{2, 2, 2})), DomainError);
    CHECK_THROWS_AS(skewness(EmpiricalSample(V{1, 2})), DomainError);
}

TEST_CASE("volatility") {
    // sample sd of {0.01, -0.01, 0} is exactly 0.01
    CHECK(volatility(ReturnSeries({0.01, -0.01, 0.0})) == doctest::Approx(0.15875).epsilon(1e-4));
    const double sd = std::sqrt(2 * 0.01 * 0.01);
    CHECK(volatility(ReturnSeries({0.002, 0.002, 0.002})) == 0.0);
    CHECK_THROWS_AS(volatility(ReturnSeries({0.01})), DomainError);
    CHECK(volatility(ReturnSeries({0.01, -0.01}, {}, 12)) == doctest::Approx(sd * std::sqrt(12.0)).epsilon(1e-12));

    gen::Rng rng(17);
    V v(100000);
    for (auto& x : v) x = rng.normal(0.01);
    CHECK(volatility(ReturnSeries(v)) == doctest::Approx(0.01 * std::sqrt(252.0)).epsilon(0.01));
}

TEST_CASE("expected_shortfall") {
    CHECK(expected_shortfall(ReturnSeries({0.01, -0.02, 0.03, -0.04}), 0.5) == doctest::Approx(0.03).epsilon(1e-12));
    CHECK(expected_shortfall(ReturnSeries({0.01, 0.02, 0.03}), 0.0) == doctest::Approx(-0.02).epsilon(1e-12));

    gen::Rng rng(18);
    const double sigma = 0.02;
    V v(200000);
    for (auto& x : v) x = rng.normal(sigma);
    CHECK(expected_shortfall(ReturnSeries(v), 0.9) == doctest::Approx(1.7550 * sigma).epsilon(0.02));
}

TEST_CASE("pearson") {
    const V a{1, 2, 3}, b{1, 2, 4};
    CHECK(pearson(EmpiricalSample(a), EmpiricalSample(a)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(pearson(EmpiricalSample(a), EmpiricalSample(V{-1, -2, -3})) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(pearson(EmpiricalSample(a), EmpiricalSample(b)) == doctest::Approx(0.98198).epsilon(1e-5));
    CHECK_THROWS_AS(pearson(EmpiricalSample(a), EmpiricalSample(V{1, 2})), DomainError);
    CHECK_THROWS_AS(pearson(EmpiricalSample(a), EmpiricalSample(V{1, 1, 1})), DomainError);

    gen::Rng rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = rng.index(2, 50);
        const V x = rng.sample(n), y = rng.sample(n);
        const double r = pearson(EmpiricalSample(x), EmpiricalSample(y));
        REQUIRE(r >= -1.0);
        REQUIRE(r <= 1.0);
        REQUIRE(std::fabs(r - oracle::pearson(x, y)) < 1e-12);
    }
}
