#pragma once

#include "equidist/numeric.hpp"
#include "equidist/sequences.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace equidist::experiments {

using sequences::DilationSequence;

/// Reproducible RNG addressing: the same (seed, stream) yields the same
/// draws under any parallel schedule.
struct RngSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    std::mt19937_64 engine() const;
};

enum class NormalizerKind { Lil, Baker, Optimal, Clt };

const char* normalizer_name(NormalizerKind kind);

struct TrajectoryReport {
    std::vector<std::size_t> Ns;
    std::vector<double> raw;
    std::vector<double> normalized;
    NormalizerKind normalizer = NormalizerKind::Lil;
    double eps = 0.0;           // for baker/optimal
    bool degenerate = false;    // x = 0 or a small-denominator rational
};

class EmpiricalCDF {
  public:
    explicit EmpiricalCDF(std::vector<double> sample);
    std::size_t count() const { return sorted_.size(); }
    const std::vector<double>& sorted() const { return sorted_; }
    double cdf(double t) const;
    /// sup over t of |F_M(t) - Phi(t)|.
    double ks_vs_normal() const;

  private:
    std::vector<double> sorted_;
};

struct CltResult {
    EmpiricalCDF cdf;
    double ks = 0.0;
    bool lacunary_warning = false;  // hadamard ratio <= 1
};

/// Standard normal distribution function, |error| < 1e-14 (erfc-based).
double normal_cdf(double t);

/// sqrt(2 N log log N); requires N >= 16.
double lil_normalizer(std::size_t N);

/// M sample paths of sum_{k<=N} cos(2 pi n_k x) / sqrt(N/2) with x uniform,
/// plus the KS distance of their empirical distribution to the normal law.
CltResult clt_experiment(const DilationSequence& D, std::size_t N, std::size_t M,
                         const RngSpec& rng);

/// raw_N = |sum_{k<=N} cos(2 pi n_k x)|, normalized by sqrt(2 N log log N).
TrajectoryReport lil_sum_trajectory(const DilationSequence& D, const HighPrecisionReal& x,
                                    const std::vector<std::size_t>& Ns);

/// raw_N = N * D_N^* of (frac(n_k x))_{k<=N}, normalized by sqrt(2 N log log N).
TrajectoryReport lil_discrepancy_trajectory(const DilationSequence& D,
                                            const HighPrecisionReal& x,
                                            const std::vector<std::size_t>& Ns);

/// Exact a.e. limsup of the normalized discrepancy of (frac(theta^k x)).
double fukuyama_constant(unsigned theta);

enum class BakerExponent { ThreeHalves, Half };

/// raw_N = sqrt(N) * D_N^*, normalized by (log N)^(exponent + eps).
TrajectoryReport baker_ratio(const DilationSequence& D, const HighPrecisionReal& x,
                             const std::vector<std::size_t>& Ns, double eps,
                             BakerExponent exponent);

/// Fractional bits a sampled x needs so that every frac(n_k x), k <= N,
/// retains at least 64 meaningful bits.
std::size_t required_fractional_bits(const DilationSequence& D, std::size_t N);

/// M reproducible uniform draws with 64 fractional bits.
std::vector<HighPrecisionReal> sample_uniform(const RngSpec& rng, std::size_t M);

/// One uniform draw with the requested number of fractional bits.
HighPrecisionReal sample_fixed_point(std::mt19937_64& engine, std::size_t bits);

}  // namespace equidist::experiments
