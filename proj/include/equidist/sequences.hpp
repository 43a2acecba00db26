#pragma once

#include "equidist/numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace equidist::sequences {

using UnitPoint = double;  // validated to [0,1) at PointSet boundaries

/// Ordered finite list of points in [0,1). Generators that run in exact
/// arithmetic also attach the exact rational values when the total size is
/// modest, so downstream consumers (Weyl sums, exact discrepancy) can avoid
/// double rounding.
class PointSet {
  public:
    explicit PointSet(std::vector<double> points);
    PointSet(std::vector<double> points, std::vector<BigRational> exact);

    std::size_t size() const { return points_.size(); }
    double operator[](std::size_t i) const { return points_[i]; }
    const std::vector<double>& values() const { return points_; }

    bool has_exact() const { return !exact_.empty(); }
    const std::vector<BigRational>& exact_values() const { return exact_; }

    /// Subset of the first n points (keeps exact values when present).
    PointSet prefix(std::size_t n) const;

  private:
    std::vector<double> points_;
    std::vector<BigRational> exact_;  // empty, or same length as points_
};

/// Strictly increasing positive integers n_1 < n_2 < ...; either stored
/// explicitly or represented symbolically as theta^1..theta^K (so that
/// dilation experiments can run at K where materializing theta^K is
/// impossible).
class DilationSequence {
  public:
    explicit DilationSequence(std::vector<BigInt> terms);
    static DilationSequence geometric(const BigInt& theta, std::size_t count);
    static DilationSequence first_integers(std::size_t n);

    std::size_t size() const { return geometric_ ? count_ : terms_.size(); }
    bool is_geometric() const { return geometric_; }
    const BigInt& ratio() const { return theta_; }

    BigInt term(std::size_t i) const;              // 0-based: term(0) = n_1
    const std::vector<BigInt>& terms() const;      // materializes if geometric

    /// inf over k of n_{k+1}/n_k; Hadamard lacunary iff > 1. Needs >= 2 terms.
    double hadamard_ratio() const;

  private:
    DilationSequence() = default;
    mutable std::vector<BigInt> terms_;
    BigInt theta_ = 0;
    std::size_t count_ = 0;
    bool geometric_ = false;
};

enum class DigitOrigin { ExpansionOfRational, Champernowne, CopelandErdos, Explicit };

struct DigitStream {
    int base = 10;
    std::vector<int> digits;
    DigitOrigin origin = DigitOrigin::Explicit;

    DigitStream(int base_, std::vector<int> digits_, DigitOrigin origin_);
};

// -- generators --------------------------------------------------------------

/// Points frac(k*x), k = 1..N.
PointSet kronecker_sequence(const HighPrecisionReal& x, std::size_t N);

/// Points frac(n_k * x), k = 1..N. Requires N <= D.size().
PointSet dilated_sequence(const DilationSequence& D, const HighPrecisionReal& x, std::size_t N);

/// theta, theta^2, ..., theta^K as exact integers. Requires theta >= 2.
DilationSequence geometric_dilation(const BigInt& theta, std::size_t K);

/// Points frac(x^k), k = 1..N, for x > 1; exact arithmetic within the bit
/// budget, PrecisionExhausted beyond it.
PointSet power_sequence(const HighPrecisionReal& x, std::size_t N,
                        std::size_t budget_bits = std::size_t(1) << 20);

/// First N base-b digits of x in [0,1); terminating expansions use the
/// trailing-zero form.
DigitStream digits_of(const HighPrecisionReal& x, int base, std::size_t N);

DigitStream champernowne(int base, std::size_t N);
DigitStream copeland_erdos(int base, std::size_t N);

/// Sliding-window frequency of `block` among the first len(s) digits:
/// matches / (len - d + 1).
double block_frequency(const DigitStream& s, const std::vector<int>& block);

}  // namespace equidist::sequences
