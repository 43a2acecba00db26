#include "equidist/discrepancy.hpp"

#include "equidist/analysis.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace equidist;
using namespace equidist::discrepancy;
using equidist::sequences::PointSet;

namespace {
HighPrecisionReal rat(long long p, long long q) {
    return HighPrecisionReal::exact_rational(BigRational(p, q));
}
}  // namespace

TEST_CASE("counting function uses half-open intervals") {
    PointSet P({0.25, 0.75});
    CHECK(counting_function(P, 0.0, 0.5) == 1);
    CHECK(counting_function(PointSet({0.5}), 0.5, 1.0) == 1);
    CHECK(counting_function(PointSet({0.1, 0.2, 0.3}), 0.2, 0.3) == 1);
    CHECK_THROWS_AS(counting_function(P, 0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(counting_function(P, -0.1, 0.5), std::invalid_argument);
}

TEST_CASE("star discrepancy closed form on the anchor examples") {
    CHECK(star_discrepancy(PointSet({0.5})) == 0.5);
    CHECK(star_discrepancy(PointSet({0.0})) == 1.0);
    CHECK(star_discrepancy(PointSet({0.125, 0.375, 0.625, 0.875})) == 0.125);
}

TEST_CASE("extreme discrepancy closed form") {
    CHECK(extreme_discrepancy(PointSet({0.5})) == 1.0);
    CHECK(extreme_discrepancy(PointSet({0.125, 0.375, 0.625, 0.875})) == 0.25);
}

TEST_CASE("closed forms match the brute-force oracles on random sets") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        PointSet P = oracles::random_point_set(rng, 24);
        double star = star_discrepancy(P);
        double ext = extreme_discrepancy(P);
        CHECK(star == doctest::Approx(oracles::brute_force_star(P)).epsilon(1e-12));
        CHECK(ext == doctest::Approx(oracles::brute_force_extreme(P)).epsilon(1e-12));
        // two-sided bound and the 1/(2N) floor
        CHECK(star <= ext + 1e-15);
        CHECK(ext <= 2.0 * star + 1e-15);
        CHECK(star + 1e-15 >= 1.0 / (2.0 * static_cast<double>(P.size())));
    }
}

TEST_CASE("exact rational star discrepancy") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 50; ++trial) {
        auto [P, exact] = oracles::random_rational_point_set(rng, 16, 64);
        CHECK(star_discrepancy_exact(exact) == oracles::brute_force_star_exact(exact));
    }
}

TEST_CASE("1/(2N) floor is attained by centered equidistant points") {
    for (std::size_t N : {1u, 4u, 9u, 32u}) {
        std::vector<BigRational> pts;
        for (std::size_t i = 1; i <= N; ++i)
            pts.emplace_back(2 * static_cast<long long>(i) - 1, 2 * static_cast<long long>(N));
        CHECK(star_discrepancy_exact(pts) == BigRational(1, 2 * static_cast<long long>(N)));
    }
}

TEST_CASE("discrepancies are invariant under permutation") {
    std::mt19937_64 rng(77);
    PointSet P = oracles::random_point_set(rng, 32);
    std::vector<double> shuffled = P.values();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    PointSet Q(shuffled);
    CHECK(star_discrepancy(P) == star_discrepancy(Q));
    CHECK(extreme_discrepancy(P) == extreme_discrepancy(Q));
}

TEST_CASE("weyl sum basics") {
    CHECK(std::abs(weyl_sum(PointSet({0.5, 0.0}), 1).value) < 1e-15);

    auto P3 = sequences::kronecker_sequence(rat(1, 3), 3);
    auto resonance = weyl_sum(P3, 3);
    CHECK(resonance.value.real() == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(resonance.value.imag() == doctest::Approx(0.0).epsilon(1e-14));

    auto P4 = sequences::kronecker_sequence(rat(1, 3), 4);
    auto w = weyl_sum(P4, 1);
    CHECK(w.value.real() == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(w.value.imag() == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));

    CHECK_THROWS_AS(weyl_sum(P4, 0), std::invalid_argument);
}

TEST_CASE("weyl sum magnitude never exceeds N") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        PointSet P = oracles::random_point_set(rng, 64);
        for (long long h : {1, 2, 7}) CHECK(std::abs(weyl_sum(P, h).value) <= P.size() + 1e-9);
    }
}

TEST_CASE("closed form agrees with the spec examples") {
    auto z1 = weyl_sum_closed_form(rat(1, 2), 1, 2);
    CHECK(std::abs(z1) < 1e-14);
    auto z2 = weyl_sum_closed_form(rat(1, 4), 1, 4);
    CHECK(std::abs(z2) < 1e-14);
    auto z3 = weyl_sum_closed_form(rat(1, 3), 1, 4);
    CHECK(z3.real() == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(z3.imag() == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
    // degenerate branch: h*x integral
    auto z4 = weyl_sum_closed_form(rat(1, 3), 3, 7);
    CHECK(z4.real() == 7.0);
    CHECK(z4.imag() == 0.0);
}

TEST_CASE("closed form matches direct summation on kronecker sets") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 60; ++trial) {
        BigRational x = oracles::random_rational(rng, 200);
        std::uniform_int_distribution<long long> hs(-32, 32);
        long long h = hs(rng);
        if (h == 0) h = 5;
        std::uniform_int_distribution<std::size_t> ns(1, 300);
        std::size_t N = ns(rng);
        auto hp = HighPrecisionReal::exact_rational(x);
        auto P = sequences::kronecker_sequence(hp, N);
        auto direct = weyl_sum(P, h).value;
        auto closed = weyl_sum_closed_form(hp, h, N);
        CHECK(std::abs(direct - closed) < 1e-10);
    }
}

TEST_CASE("erdos-turan bound on resonant and degenerate sets") {
    // N copies of 0: bound is 3/1 + 3*1 = 6
    PointSet zeros(std::vector<double>(10, 0.0));
    CHECK(erdos_turan_bound(zeros, 1) == doctest::Approx(6.0).epsilon(1e-12));

    // equidistant points: all Weyl sums with h < N vanish, bound = 3/H
    std::vector<double> eq;
    const std::size_t N = 16;
    for (std::size_t k = 0; k < N; ++k) eq.push_back(static_cast<double>(k) / N);
    PointSet equi(eq);
    for (unsigned H : {1u, 3u, 15u})
        CHECK(erdos_turan_bound(equi, H) == doctest::Approx(3.0 / H).epsilon(1e-9));

    PointSet mid({0.125, 0.375, 0.625, 0.875});
    CHECK(erdos_turan_bound(mid, 3) >= star_discrepancy(mid));
}

TEST_CASE("erdos-turan bound dominates exact star discrepancy") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 100; ++trial) {
        PointSet P = oracles::random_point_set(rng, 64);
        double star = star_discrepancy(P);
        for (unsigned H : {1u, 4u, 16u, 64u}) CHECK(erdos_turan_bound(P, H) >= star);
    }
}

TEST_CASE("koksma inequality on the worked examples") {
    auto saw = analysis::PeriodicBVFunction::sawtooth();
    PointSet mid({0.125, 0.375, 0.625, 0.875});
    auto [lhs, rhs] = koksma_bound(saw, mid);
    CHECK(lhs == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(rhs == doctest::Approx(0.125).epsilon(1e-12));

    // indicator on a single point: lhs = 0.5; rhs = Var * D* = 2 * 0.75
    auto ind = analysis::PeriodicBVFunction::centered_indicator(BigRational(0), BigRational(1, 2));
    auto [l2, r2] = koksma_bound(ind, PointSet({0.25}));
    CHECK(l2 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r2 == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(l2 <= r2);

    auto zero = analysis::PeriodicBVFunction::zero();
    auto [l3, r3] = koksma_bound(zero, mid);
    CHECK(l3 == 0.0);
    CHECK(r3 == 0.0);
}

TEST_CASE("koksma inequality holds exactly on random rational pairs") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 100; ++trial) {
        auto f = oracles::random_bv_function(rng);
        auto [P, exact] = oracles::random_rational_point_set(rng, 24, 64);
        auto [lhs, rhs] = koksma_bound_exact(f, exact);
        CHECK(lhs <= rhs);
    }
}

TEST_CASE("schmidt reference curve") {
    CHECK(schmidt_reference(3) == doctest::Approx(std::log(3.0) / 3.0));
    CHECK(schmidt_reference(100) == doctest::Approx(0.046051701859880914));
    CHECK(schmidt_reference(1000000) == doctest::Approx(1.3815510557964274e-5));
    CHECK_THROWS_AS(schmidt_reference(1), std::invalid_argument);
}
