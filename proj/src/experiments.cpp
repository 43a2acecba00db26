#include "equidist/experiments.hpp"

#include "equidist/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace equidist::experiments {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// degenerate LIL parameter: zero, or an exact rational with a small
// denominator (the orbit is eventually periodic and the statistic is noise)
bool degenerate_parameter(const HighPrecisionReal& x) {
    if (x.is_zero()) return true;
    return x.exact() && denominator(x.value()) <= 1024;
}

std::size_t dilation_bits(const DilationSequence& D, std::size_t N) {
    if (D.is_geometric()) return (msb(D.ratio()) + 1) * N + 64;
    return msb(D.term(N - 1)) + 1 + 64;
}

void validate_ns(const std::vector<std::size_t>& Ns, std::size_t available) {
    if (Ns.empty()) throw std::invalid_argument("trajectory: Ns must be non-empty");
    if (Ns.front() < 16) throw std::invalid_argument("trajectory: Ns entries must be >= 16");
    for (std::size_t i = 1; i < Ns.size(); ++i)
        if (Ns[i] <= Ns[i - 1])
            throw std::invalid_argument("trajectory: Ns must be strictly increasing");
    if (Ns.back() > available)
        throw std::invalid_argument("trajectory: Ns exceeds available dilation terms");
}

}  // namespace

std::mt19937_64 RngSpec::engine() const {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32), 0x9e3779b9u};
    return std::mt19937_64(seq);
}

const char* normalizer_name(NormalizerKind kind) {
    switch (kind) {
        case NormalizerKind::Lil: return "lil";
        case NormalizerKind::Baker: return "baker";
        case NormalizerKind::Optimal: return "optimal";
        case NormalizerKind::Clt: return "clt";
    }
    return "?";
}

EmpiricalCDF::EmpiricalCDF(std::vector<double> sample) : sorted_(std::move(sample)) {
    if (sorted_.empty()) throw std::invalid_argument("EmpiricalCDF: empty sample");
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCDF::cdf(double t) const {
    auto it = std::upper_bound(sorted_.begin(), sorted_.end(), t);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCDF::ks_vs_normal() const {
    const double M = static_cast<double>(sorted_.size());
    double ks = 0.0;
    for (std::size_t i = 0; i < sorted_.size(); ++i) {
        double phi = normal_cdf(sorted_[i]);
        ks = std::max(ks, std::abs(static_cast<double>(i + 1) / M - phi));
        ks = std::max(ks, std::abs(phi - static_cast<double>(i) / M));
    }
    return ks;
}

double normal_cdf(double t) { return 0.5 * std::erfc(-t / std::numbers::sqrt2); }

double lil_normalizer(std::size_t N) {
    if (N < 16) throw std::invalid_argument("lil_normalizer: N must be >= 16");
    double n = static_cast<double>(N);
    return std::sqrt(2.0 * n * std::log(std::log(n)));
}

CltResult clt_experiment(const DilationSequence& D, std::size_t N, std::size_t M,
                         const RngSpec& rng) {
    if (N == 0 || N > D.size()) throw std::invalid_argument("clt_experiment: bad N");
    if (M == 0) throw std::invalid_argument("clt_experiment: M must be >= 1");
    bool warn = D.size() >= 2 ? (D.hadamard_ratio() <= 1.0) : false;

    const std::size_t bits = dilation_bits(D, N);
    const double scale = std::sqrt(static_cast<double>(N) / 2.0);
    std::vector<double> stats;
    stats.reserve(M);
    for (std::size_t i = 0; i < M; ++i) {
        RngSpec path{rng.seed, rng.stream + i};
        auto engine = path.engine();
        HighPrecisionReal x = sample_fixed_point(engine, bits);
        sequences::PointSet pts = sequences::dilated_sequence(D, x, N);
        KahanSum s;
        for (double p : pts.values()) s.add(std::cos(kTwoPi * p));
        stats.push_back(s.value() / scale);
    }
    EmpiricalCDF cdf(std::move(stats));
    double ks = cdf.ks_vs_normal();
    return {std::move(cdf), ks, warn};
}

TrajectoryReport lil_sum_trajectory(const DilationSequence& D, const HighPrecisionReal& x,
                                    const std::vector<std::size_t>& Ns) {
    validate_ns(Ns, D.size());
    TrajectoryReport report;
    report.Ns = Ns;
    report.normalizer = NormalizerKind::Lil;
    report.degenerate = degenerate_parameter(x);

    sequences::PointSet pts = sequences::dilated_sequence(D, x, Ns.back());
    KahanSum s;
    std::size_t next = 0;
    for (std::size_t k = 0; k < Ns.back(); ++k) {
        s.add(std::cos(kTwoPi * pts[k]));
        if (k + 1 == Ns[next]) {
            double raw = std::abs(s.value());
            report.raw.push_back(raw);
            report.normalized.push_back(raw / lil_normalizer(Ns[next]));
            ++next;
        }
    }
    return report;
}

namespace {

TrajectoryReport discrepancy_trajectory(const DilationSequence& D, const HighPrecisionReal& x,
                                        const std::vector<std::size_t>& Ns,
                                        NormalizerKind kind, double eps, double exponent) {
    validate_ns(Ns, D.size());
    TrajectoryReport report;
    report.Ns = Ns;
    report.normalizer = kind;
    report.eps = eps;
    report.degenerate = degenerate_parameter(x);

    sequences::PointSet pts = sequences::dilated_sequence(D, x, Ns.back());
    for (std::size_t N : Ns) {
        double dstar = discrepancy::star_discrepancy(pts.prefix(N));
        double n = static_cast<double>(N);
        if (kind == NormalizerKind::Lil) {
            double raw = n * dstar;
            report.raw.push_back(raw);
            report.normalized.push_back(raw / lil_normalizer(N));
        } else {
            double raw = std::sqrt(n) * dstar;
            report.raw.push_back(raw);
            report.normalized.push_back(raw / std::pow(std::log(n), exponent + eps));
        }
    }
    return report;
}

}  // namespace

TrajectoryReport lil_discrepancy_trajectory(const DilationSequence& D,
                                            const HighPrecisionReal& x,
                                            const std::vector<std::size_t>& Ns) {
    return discrepancy_trajectory(D, x, Ns, NormalizerKind::Lil, 0.0, 0.0);
}

double fukuyama_constant(unsigned theta) {
    if (theta < 2) throw std::invalid_argument("fukuyama_constant: theta must be >= 2");
    double t = static_cast<double>(theta);
    if (theta == 2) return std::sqrt(42.0) / 9.0;
    if (theta % 2 == 0) return std::sqrt((t + 1.0) * t * (t - 2.0)) / (2.0 * std::sqrt((t - 1.0) * (t - 1.0) * (t - 1.0)));
    return std::sqrt(t + 1.0) / (2.0 * std::sqrt(t - 1.0));
}

TrajectoryReport baker_ratio(const DilationSequence& D, const HighPrecisionReal& x,
                             const std::vector<std::size_t>& Ns, double eps,
                             BakerExponent exponent) {
    if (!(eps > 0.0)) throw std::invalid_argument("baker_ratio: eps must be > 0");
    bool three_halves = exponent == BakerExponent::ThreeHalves;
    return discrepancy_trajectory(
        D, x, Ns, three_halves ? NormalizerKind::Baker : NormalizerKind::Optimal, eps,
        three_halves ? 1.5 : 0.5);
}

std::size_t required_fractional_bits(const DilationSequence& D, std::size_t N) {
    if (N == 0 || N > D.size()) throw std::invalid_argument("required_fractional_bits: bad N");
    return dilation_bits(D, N);
}

std::vector<HighPrecisionReal> sample_uniform(const RngSpec& rng, std::size_t M) {
    if (M == 0) throw std::invalid_argument("sample_uniform: M must be >= 1");
    auto engine = rng.engine();
    std::vector<HighPrecisionReal> out;
    out.reserve(M);
    for (std::size_t i = 0; i < M; ++i) out.push_back(sample_fixed_point(engine, 64));
    return out;
}

HighPrecisionReal sample_fixed_point(std::mt19937_64& engine, std::size_t bits) {
    std::size_t words = (bits + 63) / 64;
    BigInt m = 0;
    for (std::size_t i = 0; i < words; ++i) {
        m <<= 64;
        m += BigInt(engine());
    }
    return HighPrecisionReal::fixed_point(std::move(m),
                                          static_cast<unsigned>(words * 64));
}

}  // namespace equidist::experiments
