#include "equidist/analysis.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

using namespace equidist;
using namespace equidist::analysis;
using equidist::sequences::DilationSequence;

namespace {
constexpr double kPi = std::numbers::pi;

DilationSequence ints(std::initializer_list<long long> v) {
    std::vector<BigInt> t;
    for (long long x : v) t.emplace_back(x);
    return DilationSequence(std::move(t));
}
}  // namespace

TEST_CASE("sawtooth basics") {
    auto f = PeriodicBVFunction::sawtooth();
    CHECK(f.evaluate(0.25) == doctest::Approx(-0.25));
    CHECK(f.mean_exact() == 0);
    CHECK(f.variation_exact() == 1);
    CHECK(square_integral(f) == BigRational(1, 12));
    // periodicity and the right-limit convention
    CHECK(f.evaluate(1.25) == doctest::Approx(-0.25));
    CHECK(f.evaluate(0.0) == doctest::Approx(-0.5));
    CHECK(f.evaluate(-0.75) == doctest::Approx(-0.25));
}

TEST_CASE("centered indicator basics") {
    auto f = PeriodicBVFunction::centered_indicator(BigRational(0), BigRational(1, 2));
    CHECK(f.evaluate(0.25) == doctest::Approx(0.5));
    CHECK(f.evaluate(0.75) == doctest::Approx(-0.5));
    CHECK(f.evaluate(0.5) == doctest::Approx(-0.5));  // open at b
    CHECK(f.mean_exact() == 0);
    CHECK(f.variation_exact() == 2);

    auto g = PeriodicBVFunction::centered_indicator(BigRational(1, 4), BigRational(3, 4));
    CHECK(g.mean_exact() == 0);
    CHECK(g.variation_exact() == 2);
    CHECK(g.evaluate(0.5) == doctest::Approx(0.5));
    CHECK(g.evaluate(0.25) == doctest::Approx(0.5));  // right limit at a

    CHECK_THROWS_AS(PeriodicBVFunction::centered_indicator(BigRational(1, 2), BigRational(1, 2)),
                    std::invalid_argument);
}

TEST_CASE("generic constructor computes mean and periodic variation") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        auto f = oracles::random_bv_function(rng);
        double grid_mean =
            oracles::grid_quadrature([&](double x) { return f.evaluate(x); }, 1 << 12);
        CHECK(f.mean() == doctest::Approx(grid_mean).epsilon(1e-3).scale(1.0));
        CHECK(f.variation() >= 0.0);
    }
}

TEST_CASE("fourier coefficients of the sawtooth are -1/(pi j)") {
    auto f = PeriodicBVFunction::sawtooth();
    std::vector<double> a, b;
    f.fourier_coefficients(8, a, b);
    for (std::size_t j = 1; j <= 8; ++j) {
        CHECK(a[j] == doctest::Approx(0.0).epsilon(1e-13));
        CHECK(b[j] == doctest::Approx(-1.0 / (kPi * static_cast<double>(j))).epsilon(1e-12));
    }
}

TEST_CASE("fourier coefficients of the centered indicator") {
    auto f = PeriodicBVFunction::centered_indicator(BigRational(0), BigRational(1, 2));
    std::vector<double> a, b;
    f.fourier_coefficients(9, a, b);
    for (std::size_t j = 1; j <= 9; ++j) {
        CHECK(a[j] == doctest::Approx(0.0).epsilon(1e-13));
        if (j % 2 == 0)
            CHECK(b[j] == doctest::Approx(0.0).epsilon(1e-13));
        else
            CHECK(std::abs(b[j]) ==
                  doctest::Approx(2.0 / (kPi * static_cast<double>(j))).epsilon(1e-12));
    }
}

TEST_CASE("zero function has zero coefficients") {
    auto f = PeriodicBVFunction::zero();
    std::vector<double> a, b;
    f.fourier_coefficients(4, a, b);
    for (std::size_t j = 1; j <= 4; ++j) {
        CHECK(a[j] == 0.0);
        CHECK(b[j] == 0.0);
    }
}

TEST_CASE("fourier coefficients match grid quadrature on random functions") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 10; ++t) {
        auto f = oracles::random_bv_function(rng);
        std::vector<double> a, b;
        f.fourier_coefficients(5, a, b);
        for (std::size_t j = 1; j <= 5; ++j) {
            double aj = 2.0 * oracles::grid_quadrature(
                                  [&](double x) {
                                      return f.evaluate(x) * std::cos(2.0 * kPi * j * x);
                                  },
                                  1 << 14);
            double bj = 2.0 * oracles::grid_quadrature(
                                  [&](double x) {
                                      return f.evaluate(x) * std::sin(2.0 * kPi * j * x);
                                  },
                                  1 << 14);
            CHECK(a[j] == doctest::Approx(aj).epsilon(5e-3).scale(1.0));
            CHECK(b[j] == doctest::Approx(bj).epsilon(5e-3).scale(1.0));
        }
    }
}

TEST_CASE("fourier decay: j max(|a_j|,|b_j|) <= Var(f)") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 10; ++t) {
        auto f = oracles::random_bv_function(rng);
        std::vector<double> a, b;
        f.fourier_coefficients(1 << 12, a, b);
        double var = f.variation();
        for (std::size_t j = 1; j < a.size(); ++j) {
            double m = std::max(std::abs(a[j]), std::abs(b[j]));
            CHECK(static_cast<double>(j) * m <= var * (1.0 + 1e-9) + 1e-12);
        }
    }
}

TEST_CASE("parseval at desk scale for the sawtooth") {
    auto f = PeriodicBVFunction::sawtooth();
    std::vector<double> a, b;
    f.fourier_coefficients(10000, a, b);
    KahanSum s;
    for (std::size_t j = 1; j < a.size(); ++j) s.add((a[j] * a[j] + b[j] * b[j]) / 2.0);
    CHECK(s.value() == doctest::Approx(1.0 / 12.0).epsilon(1e-4));
}

TEST_CASE("variance of a trigonometric summand integrates to (a^2+b^2)/2") {
    const double a = 0.8, b = -1.3;
    for (int n : {1, 3, 7}) {
        double v = oracles::grid_quadrature(
            [&](double x) {
                double t = a * std::cos(2.0 * kPi * n * x) + b * std::sin(2.0 * kPi * n * x);
                return t * t;
            },
            1 << 16);
        CHECK(v == doctest::Approx((a * a + b * b) / 2.0).epsilon(1e-9));
    }
}

TEST_CASE("dilated sums") {
    auto f = PeriodicBVFunction::sawtooth();
    CHECK(dilated_sum(f, ints({1}), {1.0}, 0.25, 1) == doctest::Approx(-0.25));
    CHECK(dilated_sum(f, ints({1, 2}), {1.0, 1.0}, 0.25, 2) == doctest::Approx(-0.25));
    CHECK(dilated_sum(f, ints({1, 2}), {0.0, 0.0}, 0.25, 2) == 0.0);
    CHECK_THROWS_AS(dilated_sum(f, ints({1}), {1.0, 1.0}, 0.25, 2), std::invalid_argument);
}

TEST_CASE("maximal partial sums") {
    auto f = PeriodicBVFunction::sawtooth();
    CHECK(maximal_partial_sum(f, ints({3}), {2.0}, 0.25, 1) ==
          doctest::Approx(std::abs(2.0 * f.evaluate(0.75))));
    CHECK(maximal_partial_sum(f, ints({1, 2}), {1.0, -1.0}, 0.25, 2) == doctest::Approx(0.25));

    // monotone in N and dominates the final partial sum
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto D = ints({1, 2, 3, 5, 8, 13});
    CoefficientList c{0.3, -1.0, 0.7, 0.2, -0.4, 1.1};
    for (int t = 0; t < 20; ++t) {
        double x = u(rng);
        double prev = 0.0;
        for (std::size_t n = 1; n <= 6; ++n) {
            double cur = maximal_partial_sum(f, D, c, x, n);
            CHECK(cur + 1e-15 >= prev);
            CHECK(cur + 1e-15 >= std::abs(dilated_sum(f, D, c, x, n)));
            prev = cur;
        }
    }
}

TEST_CASE("l2 maximal norm: single sawtooth term is sqrt(1/12)") {
    auto f = PeriodicBVFunction::sawtooth();
    QuadratureSpec exact{QuadratureSpec::Mode::ExactPiecewise, 0};
    CHECK(l2_maximal_norm(f, ints({1}), {1.0}, 1, exact) ==
          doctest::Approx(std::sqrt(1.0 / 12.0)).epsilon(1e-12));

    QuadratureSpec grid{QuadratureSpec::Mode::Grid, 1 << 12};
    CHECK(l2_maximal_norm(f, ints({1}), {0.0}, 1, grid) == 0.0);
}

TEST_CASE("l2 maximal norm dominates the plain L2 norm of the full sum") {
    auto f = PeriodicBVFunction::sawtooth();
    auto D = ints({1, 2});
    QuadratureSpec grid{QuadratureSpec::Mode::Grid, 1 << 14};
    double maximal = l2_maximal_norm(f, D, {1.0, 1.0}, 2, grid);
    // int (f1+f2)^2 = 3/12, so the maximal norm is at least 0.5
    CHECK(maximal + 1e-3 >= 0.5);
    QuadratureSpec exact{QuadratureSpec::Mode::ExactPiecewise, 0};
    double plain = l2_maximal_norm(f, D, {1.0, 1.0}, 2, exact);
    CHECK(plain == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(maximal + 1e-6 >= plain);
}

TEST_CASE("grid budget is enforced") {
    auto f = PeriodicBVFunction::sawtooth();
    QuadratureSpec tiny{QuadratureSpec::Mode::Grid, 1 << 10};
    CHECK_THROWS_AS(l2_maximal_norm(f, ints({4096}), {1.0}, 1, tiny), std::invalid_argument);
    QuadratureSpec small{QuadratureSpec::Mode::Grid, 512};
    CHECK_THROWS_AS(l2_maximal_norm(f, ints({1}), {1.0}, 1, small), std::invalid_argument);
}

TEST_CASE("rm bound arithmetic") {
    CHECK(rm_bound(1, {1.0}) == doctest::Approx(4.0));
    CHECK(rm_bound(4, {1.0, 1.0, 1.0, 1.0}) == doctest::Approx(64.0));
    CoefficientList c(8, 0.0);
    c[0] = 1.0;
    CHECK(rm_bound(8, c) == doctest::Approx(25.0));
    CHECK_THROWS_AS(rm_bound(3, {1.0}), std::invalid_argument);
}

TEST_CASE("rm check on small instances") {
    QuadratureSpec Q{QuadratureSpec::Mode::Grid, 1 << 14};
    auto [lhs1, rhs1] = rm_check(ints({1}), {1.0}, Q);
    CHECK(lhs1 == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(rhs1 == doctest::Approx(4.0));
    CHECK(lhs1 <= rhs1 * (1.0 + 1e-6));

    auto [lhs4, rhs4] = rm_check(ints({1, 2, 3, 4}), {1.0, 1.0, 1.0, 1.0}, Q);
    CHECK(rhs4 == doctest::Approx(64.0));
    CHECK(lhs4 <= rhs4 * (1.0 + 1e-6));

    auto [lhs0, rhs0] = rm_check(ints({1, 2}), {0.0, 0.0}, Q);
    CHECK(lhs0 == 0.0);
    CHECK(rhs0 == 0.0);
}

TEST_CASE("rm check holds on random trigonometric instances") {
    std::mt19937_64 rng(42);
    QuadratureSpec Q{QuadratureSpec::Mode::Grid, 1 << 13};
    for (int t = 0; t < 25; ++t) {
        std::uniform_int_distribution<std::size_t> ns(1, 32);
        std::size_t N = ns(rng);
        std::set<std::uint64_t> fr;
        std::uniform_int_distribution<std::uint64_t> fs(1, 4 * N + 8);
        while (fr.size() < N) fr.insert(fs(rng));
        std::vector<BigInt> terms(fr.begin(), fr.end());
        DilationSequence D(std::move(terms));
        CoefficientList c;
        std::uniform_real_distribution<double> cs(-1.5, 1.5);
        for (std::size_t i = 0; i < N; ++i) c.push_back(cs(rng));
        auto [lhs, rhs] = rm_check(D, c, Q);
        CHECK(lhs <= rhs * (1.0 + 1e-6) + 1e-12);
    }
}

TEST_CASE("fourier partial sums converge at continuity points") {
    auto f = PeriodicBVFunction::sawtooth();
    CHECK(fourier_partial_sum(f, 1, 0.25) == doctest::Approx(-1.0 / kPi).epsilon(1e-12));
    CHECK(fourier_partial_sum(f, 1 << 10, 0.25) == doctest::Approx(-0.25).epsilon(1e-2));
    CHECK(fourier_partial_sum(f, 1 << 10, 0.7) == doctest::Approx(0.2).epsilon(1e-2));

    auto zero = PeriodicBVFunction::zero();
    CHECK(fourier_partial_sum(zero, 16, 0.3) == 0.0);
}

TEST_CASE("exact dilated product integral matches the known closed forms") {
    auto f = PeriodicBVFunction::sawtooth();
    CHECK(dilated_product_integral(f, 1, 1) == BigRational(1, 12));
    CHECK(dilated_product_integral(f, 2, 3) == BigRational(1, 72));
    CHECK(dilated_product_integral(f, 2, 4) == BigRational(1, 24));

    auto ind = PeriodicBVFunction::centered_indicator(BigRational(0), BigRational(1, 2));
    CHECK(dilated_product_integral(ind, 1, 1) == BigRational(1, 4));
}

TEST_CASE("exact sum-square integral agrees with pairwise expansion") {
    std::mt19937_64 rng(64);
    auto f = PeriodicBVFunction::sawtooth();
    for (int t = 0; t < 10; ++t) {
        std::uniform_int_distribution<int> ns(1, 4);
        int N = ns(rng);
        std::set<int> terms;
        std::uniform_int_distribution<int> ts(1, 12);
        while (static_cast<int>(terms.size()) < N) terms.insert(ts(rng));
        std::vector<BigInt> tv(terms.begin(), terms.end());
        DilationSequence D(std::move(tv));
        std::vector<BigRational> c;
        std::uniform_int_distribution<int> cs(-3, 3);
        for (int i = 0; i < N; ++i) c.emplace_back(cs(rng), 2);

        BigRational direct = dilated_sum_square_integral(f, D, c, N);
        BigRational pairwise = 0;
        for (int k = 0; k < N; ++k)
            for (int l = 0; l < N; ++l)
                pairwise += c[k] * c[l] * dilated_product_integral(f, D.term(k), D.term(l));
        CHECK(direct == pairwise);
    }
}
