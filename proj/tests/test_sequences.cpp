#include "equidist/sequences.hpp"

#include "equidist/discrepancy.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace equidist;
using namespace equidist::sequences;

namespace {
HighPrecisionReal rat(long long p, long long q) {
    return HighPrecisionReal::exact_rational(BigRational(p, q));
}
}  // namespace

TEST_CASE("kronecker sequence on rationals") {
    auto half = kronecker_sequence(rat(1, 2), 4);
    CHECK(half.values() == std::vector<double>{0.5, 0.0, 0.5, 0.0});

    auto third = kronecker_sequence(rat(1, 3), 3);
    REQUIRE(third.has_exact());
    CHECK(third.exact_values()[0] == BigRational(1, 3));
    CHECK(third.exact_values()[1] == BigRational(2, 3));
    CHECK(third.exact_values()[2] == 0);
}

TEST_CASE("kronecker sequence of sqrt2 at 128 bits") {
    auto x = HighPrecisionReal::sqrt_of_integer(BigInt(2), 128);
    auto P = kronecker_sequence(x, 5);
    // frozen from frac(k*sqrt(2)), k=1..5
    const double expected[5] = {0.41421356237309505, 0.82842712474619010, 0.24264068711928514,
                                0.65685424949238020, 0.07106781186547524};
    for (int k = 0; k < 5; ++k) CHECK(P[k] == doctest::Approx(expected[k]).epsilon(1e-14));
}

TEST_CASE("kronecker periodicity divides the denominator") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> qs(2, 50);
        int q = qs(rng);
        std::uniform_int_distribution<int> ps(1, q - 1);
        int p = ps(rng);
        auto P = kronecker_sequence(rat(p, q), 3 * static_cast<std::size_t>(q));
        for (std::size_t k = 0; k + q < P.size(); ++k)
            CHECK(P[k] == P[k + static_cast<std::size_t>(q)]);
    }
}

TEST_CASE("dilated sequence matches the spec examples") {
    auto D = DilationSequence({BigInt(1), BigInt(2), BigInt(3)});
    auto P = dilated_sequence(D, rat(1, 4), 3);
    CHECK(P.values() == std::vector<double>{0.25, 0.5, 0.75});

    auto pow2 = geometric_dilation(BigInt(2), 4);
    auto Q = dilated_sequence(pow2, rat(1, 3), 4);
    REQUIRE(Q.has_exact());
    CHECK(Q.exact_values()[0] == BigRational(2, 3));
    CHECK(Q.exact_values()[1] == BigRational(1, 3));
    CHECK(Q.exact_values()[2] == BigRational(2, 3));
    CHECK(Q.exact_values()[3] == BigRational(1, 3));

    auto Z = dilated_sequence(pow2, rat(0, 1), 4);
    for (double v : Z.values()) CHECK(v == 0.0);

    CHECK_THROWS_AS(dilated_sequence(D, rat(1, 4), 5), std::invalid_argument);
}

TEST_CASE("dilated with 1..N equals kronecker") {
    auto x = rat(21, 55);
    auto D = DilationSequence::first_integers(20);
    auto A = dilated_sequence(D, x, 20);
    auto B = kronecker_sequence(x, 20);
    CHECK(A.values() == B.values());
}

TEST_CASE("geometric window path agrees with exact residues") {
    // same sequence through the bit-window fast path and the residue path
    BigInt m = (BigInt(1) << 256) / 7 * 3;  // ~ 3/7 as a 256-bit fixed point
    auto x = HighPrecisionReal::fixed_point(m, 256);
    auto D = geometric_dilation(BigInt(2), 100);
    auto fast = dilated_sequence(D, x, 100);

    for (std::size_t k = 1; k <= 100; ++k) {
        double exact = to_double(x.frac_times(BigInt(1) << k));
        CHECK(fast[k - 1] == doctest::Approx(exact).epsilon(1e-9));
    }
}

TEST_CASE("geometric dilation stays exact at 10^20") {
    auto D = geometric_dilation(BigInt(10), 20);
    CHECK(D.term(19) == BigInt("100000000000000000000"));
    CHECK(D.terms().back() == BigInt("100000000000000000000"));
    auto E = geometric_dilation(BigInt(3), 4);
    CHECK(E.terms() == std::vector<BigInt>{3, 9, 27, 81});
}

TEST_CASE("hadamard ratio") {
    CHECK(geometric_dilation(BigInt(2), 4).hadamard_ratio() == 2.0);
    CHECK(DilationSequence({BigInt(2), BigInt(4), BigInt(8), BigInt(16)}).hadamard_ratio() == 2.0);
    CHECK(DilationSequence({BigInt(1), BigInt(2), BigInt(3), BigInt(4)}).hadamard_ratio() ==
          doctest::Approx(4.0 / 3.0));
    // squares k = 1..11: the minimum consecutive ratio is 121/100
    std::vector<BigInt> squares;
    for (int k = 1; k <= 11; ++k) squares.emplace_back(k * k);
    CHECK(DilationSequence(std::move(squares)).hadamard_ratio() == doctest::Approx(1.21));
    CHECK_THROWS_AS(DilationSequence({BigInt(5)}).hadamard_ratio(), std::invalid_argument);
    // hadamard_ratio(geometric(theta,K)) == theta exactly
    for (int theta = 2; theta <= 7; ++theta)
        CHECK(geometric_dilation(BigInt(theta), 5).hadamard_ratio() ==
              static_cast<double>(theta));
}

TEST_CASE("power sequence on rationals") {
    auto ints = power_sequence(HighPrecisionReal::exact_integer(BigInt(2)), 3);
    CHECK(ints.values() == std::vector<double>{0.0, 0.0, 0.0});

    auto P = power_sequence(rat(3, 2), 4);
    REQUIRE(P.has_exact());
    CHECK(P.exact_values()[0] == BigRational(1, 2));
    CHECK(P.exact_values()[1] == BigRational(1, 4));
    CHECK(P.exact_values()[2] == BigRational(3, 8));
    CHECK(P.exact_values()[3] == BigRational(1, 16));

    // spot value at k = 40 against an independent big-integer power
    auto Q = power_sequence(rat(3, 2), 40);
    BigInt p40 = boost::multiprecision::pow(BigInt(3), 40);
    BigInt q40 = boost::multiprecision::pow(BigInt(2), 40);
    CHECK(Q.exact_values()[39] == BigRational(p40 % q40, q40));

    CHECK_THROWS_AS(power_sequence(rat(1, 2), 3), std::invalid_argument);
    CHECK_THROWS_AS(power_sequence(rat(3, 2), 1u << 21), PrecisionExhausted);
}

TEST_CASE("power sequence respects the fixed-point error cap") {
    auto x = HighPrecisionReal::sqrt_of_integer(BigInt(2), 128);
    CHECK_NOTHROW(power_sequence(x, 50));
    CHECK_THROWS_AS(power_sequence(x, 500), PrecisionExhausted);
}

TEST_CASE("digits_of") {
    auto b13 = digits_of(rat(1, 3), 2, 6);
    CHECK(b13.digits == std::vector<int>{0, 1, 0, 1, 0, 1});
    auto b12 = digits_of(rat(1, 2), 2, 4);
    CHECK(b12.digits == std::vector<int>{1, 0, 0, 0});
    auto b17 = digits_of(rat(1, 7), 10, 6);
    CHECK(b17.digits == std::vector<int>{1, 4, 2, 8, 5, 7});
}

TEST_CASE("champernowne") {
    CHECK(champernowne(10, 12).digits == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 1, 0, 1});
    CHECK(champernowne(2, 8).digits == std::vector<int>{1, 1, 0, 1, 1, 1, 0, 0});
    CHECK(champernowne(10, 1).digits == std::vector<int>{1});
}

TEST_CASE("copeland-erdos") {
    CHECK(copeland_erdos(10, 10).digits == std::vector<int>{2, 3, 5, 7, 1, 1, 1, 3, 1, 7});
    CHECK(copeland_erdos(2, 5).digits == std::vector<int>{1, 0, 1, 1, 1});
    CHECK(copeland_erdos(10, 1).digits == std::vector<int>{2});
}

TEST_CASE("block frequency uses sliding windows") {
    auto s = digits_of(rat(1, 3), 2, 6);
    CHECK(block_frequency(s, {0}) == 0.5);

    DigitStream zeros(2, std::vector<int>(10, 0), DigitOrigin::Explicit);
    CHECK(block_frequency(zeros, {1}) == 0.0);

    DigitStream cd(10, {1, 2, 3, 4, 5, 6, 7, 8, 9, 1, 0, 1}, DigitOrigin::Explicit);
    CHECK(block_frequency(cd, {1}) == doctest::Approx(0.25));

    // overlapping windows: "11" in 111 occurs twice over 2 windows
    DigitStream ones(2, {1, 1, 1}, DigitOrigin::Explicit);
    CHECK(block_frequency(ones, {1, 1}) == 1.0);

    CHECK_THROWS_AS(block_frequency(cd, {11}), std::invalid_argument);
}

TEST_CASE("all generators stay inside the unit interval") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto x = HighPrecisionReal::exact_rational(oracles::random_rational(rng, 997));
        auto P = kronecker_sequence(x, 64);
        for (double v : P.values()) {
            CHECK(v >= 0.0);
            CHECK(v < 1.0);
        }
        auto D = geometric_dilation(BigInt(3), 32);
        auto Q = dilated_sequence(D, x, 32);
        for (double v : Q.values()) {
            CHECK(v >= 0.0);
            CHECK(v < 1.0);
        }
    }
}

TEST_CASE("wall criterion consistency for x = 1/3 in base 2") {
    // x = 1/3 is not normal in base 2: its digit blocks are periodic and the
    // dyadic orbit frac(2^k/3) is not equidistributed. Both detectors agree.
    auto s = digits_of(rat(1, 3), 2, 64);
    bool digit_flags_uniform = true;
    // single digits hit 1/2 each, but the blocks 00 and 11 never occur
    digit_flags_uniform &= std::abs(block_frequency(s, {0, 0}) - 0.25) < 0.05;
    digit_flags_uniform &= std::abs(block_frequency(s, {1, 1}) - 0.25) < 0.05;
    CHECK_FALSE(digit_flags_uniform);

    auto D = geometric_dilation(BigInt(2), 64);
    auto P = dilated_sequence(D, rat(1, 3), 64);
    double dstar = equidist::discrepancy::star_discrepancy(P);
    bool orbit_equidistributed = dstar < 0.1;
    CHECK_FALSE(orbit_equidistributed);
    CHECK(digit_flags_uniform == orbit_equidistributed);
}
