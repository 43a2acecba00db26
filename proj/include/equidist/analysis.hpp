#pragma once

#include "equidist/numeric.hpp"
#include "equidist/sequences.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace equidist::analysis {

using sequences::DilationSequence;

using CoefficientList = std::vector<double>;

/// 1-periodic piecewise-affine function. On [breaks[i], breaks[i+1]) the
/// value is slopes[i]*x + intercepts[i]; the value at a breakpoint is the
/// right limit. All piece data is exact rational, so products and integrals
/// of dilates can be computed without rounding.
class PeriodicBVFunction {
  public:
    PeriodicBVFunction(std::vector<BigRational> breaks, std::vector<BigRational> slopes,
                       std::vector<BigRational> intercepts);

    /// frac(x) - 1/2. Mean 0, Var 1 (the continuous representative on [0,1]).
    static PeriodicBVFunction sawtooth();

    /// 1_(a,b)(frac(x)) - (b-a), right-continuous representative.
    /// Mean 0, Var 2 (one jump at each endpoint of the interval).
    static PeriodicBVFunction centered_indicator(const BigRational& a, const BigRational& b);
    static PeriodicBVFunction centered_indicator(double a, double b);

    static PeriodicBVFunction zero();

    std::size_t piece_count() const { return slopes_.size(); }
    const std::vector<BigRational>& breakpoints() const { return breaks_; }
    const std::vector<BigRational>& slopes() const { return slopes_; }
    const std::vector<BigRational>& intercepts() const { return intercepts_; }

    double evaluate(double x) const;
    BigRational evaluate_exact(const BigRational& x) const;

    double mean() const { return to_double(mean_); }
    const BigRational& mean_exact() const { return mean_; }

    double variation() const { return to_double(variation_); }
    const BigRational& variation_exact() const { return variation_; }

    /// Closed-form Fourier coefficients a_j = 2 int f cos(2 pi j x),
    /// b_j = 2 int f sin(2 pi j x), j = 1..J (integration by parts per piece).
    void fourier_coefficients(std::size_t J, std::vector<double>& a, std::vector<double>& b) const;

  private:
    std::vector<BigRational> breaks_;      // 0 = t_0 < ... < t_m = 1
    std::vector<BigRational> slopes_;      // per piece
    std::vector<BigRational> intercepts_;  // per piece, absolute coordinates
    BigRational mean_;
    BigRational variation_;

    friend PeriodicBVFunction with_pinned_variation(PeriodicBVFunction f, BigRational var);
};

struct QuadratureSpec {
    enum class Mode { ExactPiecewise, Grid };
    Mode mode = Mode::Grid;
    std::size_t grid = std::size_t(1) << 18;  // >= 2^10 in grid mode
};

/// sum_{k<=M} c_k f(n_k x).
double dilated_sum(const PeriodicBVFunction& f, const DilationSequence& D,
                   const CoefficientList& c, double x, std::size_t M);

/// max over 1 <= M <= N of |sum_{k<=M} c_k f(n_k x)|.
double maximal_partial_sum(const PeriodicBVFunction& f, const DilationSequence& D,
                           const CoefficientList& c, double x, std::size_t N);

/// Estimate of ( int_0^1 (max_{M<=N} |sum_{k<=M} c_k f(n_k x)|)^2 dx )^(1/2).
/// Grid mode samples midpoints and is a lower estimate of the true norm;
/// exact mode integrates the full (M = N) sum without the inner max, which
/// is also a lower bound of the maximal norm.
double l2_maximal_norm(const PeriodicBVFunction& f, const DilationSequence& D,
                       const CoefficientList& c, std::size_t N, const QuadratureSpec& Q);

/// Rademacher-Menshov majorant (log2 N + 2)^2 * sum c_k^2.
double rm_bound(std::size_t N, const CoefficientList& c);

/// lhs = grid estimate of int max_M (sum_{k<=M} c_k sqrt(2) cos(2 pi n_k x))^2,
/// rhs = rm_bound. The sqrt(2) factor orthonormalizes the cosines.
std::pair<double, double> rm_check(const DilationSequence& phi_frequencies,
                                   const CoefficientList& c, const QuadratureSpec& Q);

/// Fourier partial sum s_J(f;x) from the closed-form coefficients.
double fourier_partial_sum(const PeriodicBVFunction& f, std::size_t J, double x);

// -- exact quadrature core ----------------------------------------------------

/// Exact integral over [0,1] of f(m x) * f(n x) via the common breakpoint
/// refinement of the two dilates.
BigRational dilated_product_integral(const PeriodicBVFunction& f, const BigInt& m,
                                     const BigInt& n);

/// Exact integral over [0,1] of ( sum_{k<=N} c_k f(n_k x) )^2.
BigRational dilated_sum_square_integral(const PeriodicBVFunction& f, const DilationSequence& D,
                                        const std::vector<BigRational>& c, std::size_t N);

/// Exact integral over [0,1] of f(x)^2.
BigRational square_integral(const PeriodicBVFunction& f);

}  // namespace equidist::analysis
