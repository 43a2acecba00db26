#pragma once

#include "equidist/analysis_fwd.hpp"
#include "equidist/numeric.hpp"
#include "equidist/sequences.hpp"

#include <complex>
#include <span>
#include <utility>

namespace equidist::discrepancy {

using sequences::PointSet;

struct DiscrepancyResult {
    double star = 0.0;
    double extreme = 0.0;
    std::size_t N = 0;
};

struct WeylSum {
    long long h = 0;
    std::size_t N = 0;
    std::complex<double> value;
};

/// Number of points of P in the half-open interval [a,b).
std::size_t counting_function(const PointSet& P, double a, double b);

/// Exact sup over a in [0,1] of |#([0,a))/N - a| via the sorted closed form.
double star_discrepancy(const PointSet& P);
BigRational star_discrepancy_exact(std::span<const BigRational> points);

/// Exact sup over [a,b) of |#([a,b))/N - (b-a)|.
double extreme_discrepancy(const PointSet& P);

DiscrepancyResult discrepancies(const PointSet& P);

/// Direct summation of exp(2*pi*i*h*x_k); uses the exact point values when
/// the PointSet carries them (phase reduced mod 1 in rational arithmetic).
WeylSum weyl_sum(const PointSet& P, long long h);

/// Geometric-series closed form for sum_{k=1..N} e^(2 pi i h k x), evaluated
/// in the numerically stable sine-ratio form with exact phase reduction.
/// Degenerate case (h*x integral) returns N.
std::complex<double> weyl_sum_closed_form(const HighPrecisionReal& x, long long h, std::size_t N);

/// Normalized Erdos-Turan bound: 3/H + (3/N) * sum_{h<=H} |S_h|/h >= D_N^*.
double erdos_turan_bound(const PointSet& P, unsigned H);

/// (lhs, rhs) of Koksma's inequality: |mean f(x_k) - integral f| <= Var(f) D*.
std::pair<double, double> koksma_bound(const analysis::PeriodicBVFunction& f, const PointSet& P);

/// Exact-rational evaluation of the same pair, for point sets given exactly.
std::pair<BigRational, BigRational> koksma_bound_exact(const analysis::PeriodicBVFunction& f,
                                                       std::span<const BigRational> points);

/// (log N)/N, the optimal-order reference envelope. Requires N >= 2.
double schmidt_reference(std::size_t N);

}  // namespace equidist::discrepancy
