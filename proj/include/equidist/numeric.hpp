#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace equidist {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Thrown when a requested computation would exceed the exact-arithmetic
/// precision budget (e.g. x^k beyond the configured bit budget).
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

double to_double(const BigRational& r);
double to_double(const BigInt& n);

/// Round a rational in [0,1) to double, clamped below 1 so the half-open
/// invariant survives rounding.
double unit_to_double(const BigRational& r);

/// frac(x) = x - floor(x), always in [0,1).
BigRational frac(const BigRational& x);

/// Reduce x modulo m (result in [0, m)); exact.
BigRational mod(const BigRational& x, const BigRational& m);

/// Compensated (Kahan) summation of doubles.
class KahanSum {
  public:
    void add(double v) {
        double y = v - c_;
        double t = sum_ + y;
        c_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

  private:
    double sum_ = 0.0;
    double c_ = 0.0;
};

/// MSB-first view of the binary expansion of a number in [0,1).
/// words[0] holds fractional bits 1..64, words[1] bits 65..128, and so on.
/// window(j) returns frac(2^j * x) truncated to 64 bits, as a double.
class DyadicExpansion {
  public:
    DyadicExpansion(std::vector<std::uint64_t> words, std::size_t bits)
        : words_(std::move(words)), bits_(bits) {}

    std::size_t bits() const { return bits_; }

    /// Requires bit_offset + 64 <= bits().
    double window(std::size_t bit_offset) const;

  private:
    std::vector<std::uint64_t> words_;
    std::size_t bits_;
};

/// A real number held either exactly (rational) or as a fixed-point
/// approximation m / 2^p with a declared precision of p bits.
///
/// Every instance *is* an exact rational internally; the exact/fixed-point
/// distinction records whether that rational is the intended number itself
/// or an approximation with |error| <= 2^-p.
class HighPrecisionReal {
  public:
    HighPrecisionReal() : value_(0), exact_(true), precision_bits_(0) {}

    static HighPrecisionReal exact_rational(BigRational v);
    static HighPrecisionReal exact_integer(const BigInt& n) { return exact_rational(BigRational(n)); }

    /// value = mantissa / 2^precision_bits. Requires precision_bits >= 64.
    static HighPrecisionReal fixed_point(BigInt mantissa, unsigned precision_bits);

    /// sqrt(n) rounded down to precision_bits fractional bits.
    static HighPrecisionReal sqrt_of_integer(const BigInt& n, unsigned precision_bits);

    /// Accepts "p/q", integers, plain decimals ("0.25"), and "sqrtD@BITS"
    /// (e.g. "sqrt2@128" for a 128-bit fixed-point root).
    static HighPrecisionReal parse(const std::string& text);

    bool exact() const { return exact_; }
    unsigned precision_bits() const { return precision_bits_; }
    const BigRational& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }
    bool is_rational_input() const { return exact_; }

    double to_double() const { return equidist::to_double(value_); }

    BigRational frac() const { return equidist::frac(value_); }

    /// frac(n * x) of the stored representation, exact.
    BigRational frac_times(const BigInt& n) const;
    double frac_times_double(const BigInt& n) const { return equidist::to_double(frac_times(n)); }

    /// Binary expansion of frac(x), truncated/padded to at least `bits`
    /// fractional bits (rounded up to a whole number of 64-bit words).
    DyadicExpansion dyadic_expansion(std::size_t bits) const;

  private:
    BigRational value_;
    bool exact_;
    unsigned precision_bits_;
};

}  // namespace equidist
