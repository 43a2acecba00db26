#include "equidist/discrepancy.hpp"

#include "equidist/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace equidist::discrepancy {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::size_t counting_function(const PointSet& P, double a, double b) {
    if (!(0.0 <= a && a < b && b <= 1.0))
        throw std::invalid_argument("counting_function: need 0 <= a < b <= 1");
    std::size_t n = 0;
    for (double x : P.values())
        if (x >= a && x < b) ++n;
    return n;
}

double star_discrepancy(const PointSet& P) {
    std::vector<double> x = P.values();
    std::sort(x.begin(), x.end());
    const double N = static_cast<double>(x.size());
    double best = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double up = static_cast<double>(i + 1) / N - x[i];
        double down = x[i] - static_cast<double>(i) / N;
        best = std::max({best, up, down});
    }
    return best;
}

BigRational star_discrepancy_exact(std::span<const BigRational> points) {
    if (points.empty()) throw std::invalid_argument("star_discrepancy_exact: empty point set");
    std::vector<BigRational> x(points.begin(), points.end());
    std::sort(x.begin(), x.end());
    const BigRational N(static_cast<long long>(x.size()));
    BigRational best = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        BigRational up = BigRational(static_cast<long long>(i + 1)) / N - x[i];
        BigRational down = x[i] - BigRational(static_cast<long long>(i)) / N;
        if (up > best) best = up;
        if (down > best) best = down;
    }
    return best;
}

double extreme_discrepancy(const PointSet& P) {
    std::vector<double> x = P.values();
    std::sort(x.begin(), x.end());
    const double N = static_cast<double>(x.size());
    double max_up = -2.0, max_down = -2.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        max_up = std::max(max_up, static_cast<double>(i + 1) / N - x[i]);
        max_down = std::max(max_down, x[i] - static_cast<double>(i) / N);
    }
    return max_up + max_down;
}

DiscrepancyResult discrepancies(const PointSet& P) {
    return {star_discrepancy(P), extreme_discrepancy(P), P.size()};
}

WeylSum weyl_sum(const PointSet& P, long long h) {
    if (h == 0) throw std::invalid_argument("weyl_sum: h must be nonzero");
    KahanSum re, im;
    if (P.has_exact()) {
        BigInt hh(h);
        for (const BigRational& x : P.exact_values()) {
            double phase = kTwoPi * to_double(frac(BigRational(hh) * x));
            re.add(std::cos(phase));
            im.add(std::sin(phase));
        }
    } else {
        for (double x : P.values()) {
            double t = std::fmod(static_cast<double>(h) * x, 1.0);
            if (t < 0) t += 1.0;
            re.add(std::cos(kTwoPi * t));
            im.add(std::sin(kTwoPi * t));
        }
    }
    return {h, P.size(), {re.value(), im.value()}};
}

std::complex<double> weyl_sum_closed_form(const HighPrecisionReal& x, long long h, std::size_t N) {
    if (h == 0) throw std::invalid_argument("weyl_sum_closed_form: h must be nonzero");
    if (N == 0) throw std::invalid_argument("weyl_sum_closed_form: N must be >= 1");
    BigRational phi = frac(BigRational(BigInt(h)) * x.value());
    if (phi == 0) return {static_cast<double>(N), 0.0};  // degenerate geometric series

    // sum_{k=1..N} e^(2 pi i k phi) = e^(pi i (N+1) phi) sin(pi N phi) / sin(pi phi),
    // with every angle reduced in rational arithmetic before evaluation.
    BigRational nphi = BigRational(static_cast<long long>(N)) * phi;
    BigInt whole = numerator(nphi) / denominator(nphi);
    BigRational r = nphi - BigRational(whole);
    double sin_top = std::sin(std::numbers::pi * to_double(r));
    if (whole % 2 != 0) sin_top = -sin_top;
    double sin_bot = std::sin(std::numbers::pi * to_double(phi));
    double mag = sin_top / sin_bot;

    BigRational half_angle = mod(BigRational(static_cast<long long>(N + 1)) * phi, BigRational(2));
    double theta = std::numbers::pi * to_double(half_angle);
    return {mag * std::cos(theta), mag * std::sin(theta)};
}

double erdos_turan_bound(const PointSet& P, unsigned H) {
    if (H == 0) throw std::invalid_argument("erdos_turan_bound: H must be >= 1");
    const double N = static_cast<double>(P.size());
    KahanSum s;
    for (unsigned h = 1; h <= H; ++h)
        s.add(std::abs(weyl_sum(P, h).value) / static_cast<double>(h));
    return 3.0 / static_cast<double>(H) + 3.0 / N * s.value();
}

std::pair<double, double> koksma_bound(const analysis::PeriodicBVFunction& f, const PointSet& P) {
    KahanSum s;
    for (double x : P.values()) s.add(f.evaluate(x));
    double lhs = std::abs(s.value() / static_cast<double>(P.size()) - f.mean());
    double rhs = f.variation() * star_discrepancy(P);
    return {lhs, rhs};
}

std::pair<BigRational, BigRational> koksma_bound_exact(const analysis::PeriodicBVFunction& f,
                                                       std::span<const BigRational> points) {
    if (points.empty()) throw std::invalid_argument("koksma_bound_exact: empty point set");
    BigRational sum = 0;
    for (const BigRational& x : points) sum += f.evaluate_exact(x);
    BigRational lhs = sum / BigRational(static_cast<long long>(points.size())) - f.mean_exact();
    if (lhs < 0) lhs = -lhs;
    BigRational rhs = f.variation_exact() * star_discrepancy_exact(points);
    return {lhs, rhs};
}

double schmidt_reference(std::size_t N) {
    if (N < 2) throw std::invalid_argument("schmidt_reference: N must be >= 2");
    return std::log(static_cast<double>(N)) / static_cast<double>(N);
}

}  // namespace equidist::discrepancy
