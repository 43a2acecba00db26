#pragma once

#include "equidist/analysis.hpp"
#include "equidist/number_theory.hpp"
#include "equidist/numeric.hpp"
#include "equidist/sequences.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace equidist::gcdsums {

using sequences::DilationSequence;

/// Distinct positive integers n_1 < ... < n_N (input order is irrelevant;
/// duplicates are rejected).
class IntegerSet {
  public:
    explicit IntegerSet(std::vector<BigInt> elements);
    static IntegerSet from_u64(const std::vector<std::uint64_t>& elements);

    std::size_t size() const { return elements_.size(); }
    const std::vector<BigInt>& elements() const { return elements_; }
    const BigInt& operator[](std::size_t i) const { return elements_[i]; }

  private:
    std::vector<BigInt> elements_;
};

struct GcdSumValue {
    double value = 0.0;
    std::optional<BigRational> exact;  // present when computed in rational arithmetic
    double alpha = 1.0;
};

/// Full double sum (diagonal included) of gcd(n_k,n_l)^2 / (n_k n_l); exact
/// rational for |S| <= 512, compensated floating point beyond.
GcdSumValue gal_sum(const IntegerSet& S);

/// sum of gcd^(2 alpha) / (n_k n_l)^alpha for alpha in [1/2, 1]; exact at
/// alpha = 1 (delegates to gal_sum).
GcdSumValue gcd_sum_alpha(const IntegerSet& S, double alpha);

/// gcd(m,n)^2 / (12 m n), the exact value of int ( {mx}-1/2 )( {nx}-1/2 ) dx.
BigRational franel_landau(const BigInt& m, const BigInt& n);

/// Exact int ( sum_{k<=N} ({n_k x} - 1/2) )^2 dx = gal_sum / 12.
BigRational sawtooth_sum_l2(const DilationSequence& D, std::size_t N);

/// Exact int f(mx) f(nx) dx via common-refinement quadrature.
BigRational pair_correlation_exact(const analysis::PeriodicBVFunction& f, const BigInt& m,
                                   const BigInt& n);
double pair_correlation(const analysis::PeriodicBVFunction& f, const BigInt& m, const BigInt& n);

/// N (log log N)^2, the extremal order of the Gal sum. Requires N >= 16.
double gal_envelope(std::size_t N);

/// Aistleitner-Berkes-Seip exponent g(alpha, N); alpha in [1/2, 1), N >= 16.
double g_alpha(double alpha, std::size_t N);

/// C_eps * N * exp((1+eps) g(alpha,N)).
double abs_bound(double alpha, std::size_t N, double eps, double C_eps);

/// N exp(5 log N / log log N). Requires N >= 16.
double dyer_harman_bound(std::size_t N);

struct SearchConfig {
    std::uint64_t seed = 0;
    std::size_t restarts = 8;
    std::size_t max_iterations = 200;  // steepest-ascent steps per restart
    std::uint64_t max_element = 0;     // 0 -> 4 N^2
    bool record_trace = false;
};

struct SearchResult {
    IntegerSet best;
    double value = 0.0;
    std::optional<BigRational> exact;  // alpha == 1
    std::size_t iterations = 0;
    std::vector<std::vector<std::uint64_t>> trace;  // accepted states, when recorded
};

/// Steepest-ascent local search with random restarts for the maximizer of
/// gcd_sum_alpha over N-element sets; deterministic for a fixed seed.
SearchResult extremal_search(std::size_t N, double alpha, const SearchConfig& cfg);

/// sum_{n<=N} psi(n) phi(n) / n for a tabulated psi (psi[0] unused).
double duffin_schaeffer_partial(const std::vector<double>& psi, std::size_t N);

}  // namespace equidist::gcdsums
