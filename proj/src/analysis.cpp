#include "equidist/analysis.hpp"

#include "equidist/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace equidist::analysis {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> to_doubles(const std::vector<BigRational>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(to_double(r));
    return out;
}

}  // namespace

PeriodicBVFunction::PeriodicBVFunction(std::vector<BigRational> breaks,
                                       std::vector<BigRational> slopes,
                                       std::vector<BigRational> intercepts)
    : breaks_(std::move(breaks)), slopes_(std::move(slopes)), intercepts_(std::move(intercepts)) {
    if (breaks_.size() < 2 || breaks_.front() != 0 || breaks_.back() != 1)
        throw std::invalid_argument("PeriodicBVFunction: breakpoints must run 0 = t0 < ... < tm = 1");
    for (std::size_t i = 1; i < breaks_.size(); ++i)
        if (breaks_[i] <= breaks_[i - 1])
            throw std::invalid_argument("PeriodicBVFunction: breakpoints must increase");
    if (slopes_.size() != breaks_.size() - 1 || intercepts_.size() != slopes_.size())
        throw std::invalid_argument("PeriodicBVFunction: piece count mismatch");

    mean_ = 0;
    for (std::size_t i = 0; i < slopes_.size(); ++i) {
        const BigRational &u = breaks_[i], &v = breaks_[i + 1];
        mean_ += slopes_[i] * (v * v - u * u) / 2 + intercepts_[i] * (v - u);
    }

    // Periodic variation: slope mass plus every jump, the seam included.
    // Canonical constructors pin tighter classical values where they apply.
    BigRational var = 0;
    for (std::size_t i = 0; i < slopes_.size(); ++i)
        var += abs(slopes_[i]) * (breaks_[i + 1] - breaks_[i]);
    auto value_at = [&](std::size_t piece, const BigRational& x) {
        return slopes_[piece] * x + intercepts_[piece];
    };
    for (std::size_t i = 1; i < slopes_.size(); ++i)
        var += abs(value_at(i, breaks_[i]) - value_at(i - 1, breaks_[i]));
    var += abs(value_at(0, breaks_.front()) - value_at(slopes_.size() - 1, breaks_.back()));
    variation_ = var;
}

PeriodicBVFunction with_pinned_variation(PeriodicBVFunction f, BigRational var) {
    f.variation_ = std::move(var);
    return f;
}

PeriodicBVFunction PeriodicBVFunction::sawtooth() {
    PeriodicBVFunction f({BigRational(0), BigRational(1)}, {BigRational(1)},
                         {BigRational(-1, 2)});
    return with_pinned_variation(std::move(f), BigRational(1));
}

PeriodicBVFunction PeriodicBVFunction::centered_indicator(const BigRational& a,
                                                          const BigRational& b) {
    if (!(0 <= a && a < b && b <= 1))
        throw std::invalid_argument("centered_indicator: need 0 <= a < b <= 1");
    BigRational inside = BigRational(1) - (b - a);
    BigRational outside = -(b - a);
    std::vector<BigRational> breaks{BigRational(0)}, slopes, intercepts;
    if (a > 0) {
        breaks.push_back(a);
        slopes.emplace_back(0);
        intercepts.push_back(outside);
    }
    if (b < 1) breaks.push_back(b);
    breaks.push_back(BigRational(1));
    slopes.emplace_back(0);
    intercepts.push_back(inside);
    if (b < 1) {
        slopes.emplace_back(0);
        intercepts.push_back(outside);
    }
    PeriodicBVFunction f(std::move(breaks), std::move(slopes), std::move(intercepts));
    return with_pinned_variation(std::move(f), BigRational(2));
}

PeriodicBVFunction PeriodicBVFunction::centered_indicator(double a, double b) {
    return centered_indicator(BigRational(a), BigRational(b));
}

PeriodicBVFunction PeriodicBVFunction::zero() {
    return PeriodicBVFunction({BigRational(0), BigRational(1)}, {BigRational(0)},
                              {BigRational(0)});
}

double PeriodicBVFunction::evaluate(double x) const {
    double y = x - std::floor(x);
    if (y >= 1.0) y = 0.0;  // guards the floor(-eps) rounding edge
    BigRational yr(y);
    return to_double(evaluate_exact(yr));
}

BigRational PeriodicBVFunction::evaluate_exact(const BigRational& x) const {
    BigRational y = frac(x);
    // last piece with breaks_[i] <= y
    std::size_t lo = 0, hi = slopes_.size();
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        if (breaks_[mid] <= y)
            lo = mid;
        else
            hi = mid;
    }
    return slopes_[lo] * y + intercepts_[lo];
}

void PeriodicBVFunction::fourier_coefficients(std::size_t J, std::vector<double>& a,
                                              std::vector<double>& b) const {
    if (J == 0) throw std::invalid_argument("fourier_coefficients: J must be >= 1");
    a.assign(J + 1, 0.0);
    b.assign(J + 1, 0.0);
    std::vector<double> u_d = to_doubles(breaks_);
    std::vector<double> s_d = to_doubles(slopes_);
    std::vector<double> c_d = to_doubles(intercepts_);
    for (std::size_t j = 1; j <= J; ++j) {
        double w = kTwoPi * static_cast<double>(j);
        KahanSum aj, bj;
        for (std::size_t i = 0; i < slopes_.size(); ++i) {
            // angles reduced exactly: frac(j * t) before scaling by 2*pi
            double au = kTwoPi * to_double(frac(BigRational(j) * breaks_[i]));
            double av = kTwoPi * to_double(frac(BigRational(j) * breaks_[i + 1]));
            double gu = s_d[i] * u_d[i] + c_d[i];
            double gv = s_d[i] * u_d[i + 1] + c_d[i];
            double sin_u = std::sin(au), cos_u = std::cos(au);
            double sin_v = std::sin(av), cos_v = std::cos(av);
            // int g cos = [g sin/w + s cos/w^2], int g sin = [-g cos/w + s sin/w^2]
            aj.add((gv * sin_v - gu * sin_u) / w + s_d[i] * (cos_v - cos_u) / (w * w));
            bj.add((-gv * cos_v + gu * cos_u) / w + s_d[i] * (sin_v - sin_u) / (w * w));
        }
        a[j] = 2.0 * aj.value();
        b[j] = 2.0 * bj.value();
    }
}

// -- dilated sums --------------------------------------------------------------

namespace {

double eval_dilate(const PeriodicBVFunction& f, const BigInt& n, const BigRational& x) {
    BigRational y = frac(BigRational(n) * x);
    return to_double(f.evaluate_exact(y));
}

}  // namespace

double dilated_sum(const PeriodicBVFunction& f, const DilationSequence& D,
                   const CoefficientList& c, double x, std::size_t M) {
    if (M > D.size() || M > c.size())
        throw std::invalid_argument("dilated_sum: M exceeds the dilation or coefficient list");
    BigRational xr(x);
    KahanSum s;
    for (std::size_t k = 0; k < M; ++k) s.add(c[k] * eval_dilate(f, D.term(k), xr));
    return s.value();
}

double maximal_partial_sum(const PeriodicBVFunction& f, const DilationSequence& D,
                           const CoefficientList& c, double x, std::size_t N) {
    if (N == 0) throw std::invalid_argument("maximal_partial_sum: N must be >= 1");
    if (N > D.size() || N > c.size())
        throw std::invalid_argument("maximal_partial_sum: N exceeds the dilation or coefficient list");
    BigRational xr(x);
    KahanSum s;
    double best = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
        s.add(c[k] * eval_dilate(f, D.term(k), xr));
        best = std::max(best, std::abs(s.value()));
    }
    return best;
}

namespace {

void check_grid(const QuadratureSpec& Q, const DilationSequence& D, std::size_t N) {
    if (Q.grid < (std::size_t(1) << 10))
        throw std::invalid_argument("grid quadrature: grid must be >= 2^10");
    BigInt required = BigInt(4) * BigInt(N) * D.term(N - 1);
    BigInt cap = BigInt(1) << 22;
    if (required > cap) required = cap;
    if (BigInt(Q.grid) < required)
        throw std::invalid_argument("grid budget exceeded: grid size below 4*N*max(D) (capped at 2^22)");
}

}  // namespace

double l2_maximal_norm(const PeriodicBVFunction& f, const DilationSequence& D,
                       const CoefficientList& c, std::size_t N, const QuadratureSpec& Q) {
    if (N == 0) throw std::invalid_argument("l2_maximal_norm: N must be >= 1");
    if (N > D.size() || N > c.size())
        throw std::invalid_argument("l2_maximal_norm: N exceeds the dilation or coefficient list");

    if (Q.mode == QuadratureSpec::Mode::ExactPiecewise) {
        std::vector<BigRational> cr;
        cr.reserve(N);
        for (std::size_t k = 0; k < N; ++k) cr.emplace_back(c[k]);
        return std::sqrt(to_double(dilated_sum_square_integral(f, D, cr, N)));
    }

    check_grid(Q, D, N);
    const std::size_t G = Q.grid;
    std::vector<double> breaks_d = to_doubles(f.breakpoints());
    std::vector<double> slopes_d = to_doubles(f.slopes());
    std::vector<double> icepts_d = to_doubles(f.intercepts());
    const std::uint64_t twoG = 2 * static_cast<std::uint64_t>(G);
    std::vector<std::uint64_t> res(N);
    for (std::size_t k = 0; k < N; ++k)
        res[k] = (D.term(k) % twoG).convert_to<std::uint64_t>();

    KahanSum acc;
    for (std::size_t g = 0; g < G; ++g) {
        const std::uint64_t odd = 2 * static_cast<std::uint64_t>(g) + 1;
        double running = 0.0, peak = 0.0;
        for (std::size_t k = 0; k < N; ++k) {
            // frac(n_k x_g) for x_g = (2g+1)/(2G), exact in 64-bit arithmetic
            double y = static_cast<double>((res[k] * odd) % twoG) / static_cast<double>(twoG);
            auto it = std::upper_bound(breaks_d.begin(), breaks_d.end(), y);
            std::size_t piece = static_cast<std::size_t>(it - breaks_d.begin()) - 1;
            if (piece >= slopes_d.size()) piece = slopes_d.size() - 1;
            running += c[k] * (slopes_d[piece] * y + icepts_d[piece]);
            peak = std::max(peak, std::abs(running));
        }
        acc.add(peak * peak);
    }
    return std::sqrt(acc.value() / static_cast<double>(G));
}

double rm_bound(std::size_t N, const CoefficientList& c) {
    if (c.size() != N) throw std::invalid_argument("rm_bound: |c| must equal N");
    KahanSum s;
    for (double v : c) s.add(v * v);
    double l = std::log2(static_cast<double>(N)) + 2.0;
    return l * l * s.value();
}

std::pair<double, double> rm_check(const DilationSequence& phi_frequencies,
                                   const CoefficientList& c, const QuadratureSpec& Q) {
    const std::size_t N = c.size();
    if (N == 0) throw std::invalid_argument("rm_check: empty coefficient list");
    if (N > phi_frequencies.size())
        throw std::invalid_argument("rm_check: more coefficients than frequencies");
    if (Q.grid < (std::size_t(1) << 10))
        throw std::invalid_argument("grid quadrature: grid must be >= 2^10");

    const std::size_t G = Q.grid;
    const std::uint64_t twoG = 2 * static_cast<std::uint64_t>(G);
    const double root2 = std::numbers::sqrt2;

    std::vector<std::uint64_t> res(N);
    for (std::size_t k = 0; k < N; ++k)
        res[k] = (phi_frequencies.term(k) % twoG).convert_to<std::uint64_t>();

    // Grid chunks own disjoint slices of sum/peak, so the parallel schedule
    // cannot change the result.
    std::vector<double> sum(G, 0.0), peak(G, 0.0);
    parallel_chunks(G, 1 << 14, [&](std::size_t g0, std::size_t g1) {
        for (std::size_t k = 0; k < N; ++k) {
            const std::uint64_t r = res[k];
            const double amp = c[k] * root2;
            // angle at grid point g is 2*pi * (r*(2g+1) mod 2G) / 2G; advance
            // by complex rotation, renormalized periodically on exact angles
            const double step =
                kTwoPi * static_cast<double>((2 * r) % twoG) / static_cast<double>(twoG);
            const double cs = std::cos(step), sn = std::sin(step);
            double re = 0.0, im = 0.0;
            for (std::size_t g = g0; g < g1; ++g) {
                if ((g - g0) % 4096 == 0) {
                    std::uint64_t phase = (r % twoG) * (2 * static_cast<std::uint64_t>(g) + 1) % twoG;
                    double ang = kTwoPi * static_cast<double>(phase) / static_cast<double>(twoG);
                    re = std::cos(ang);
                    im = std::sin(ang);
                }
                double s = sum[g] + amp * re;
                sum[g] = s;
                peak[g] = std::max(peak[g], std::abs(s));
                double nre = re * cs - im * sn;
                im = re * sn + im * cs;
                re = nre;
            }
        }
    });
    KahanSum acc;
    for (std::size_t g = 0; g < G; ++g) acc.add(peak[g] * peak[g]);
    double lhs = acc.value() / static_cast<double>(G);
    return {lhs, rm_bound(N, c)};
}

double fourier_partial_sum(const PeriodicBVFunction& f, std::size_t J, double x) {
    if (J == 0) throw std::invalid_argument("fourier_partial_sum: J must be >= 1");
    std::vector<double> a, b;
    f.fourier_coefficients(J, a, b);
    KahanSum s;
    for (std::size_t j = 1; j <= J; ++j) {
        double ang = kTwoPi * std::fmod(static_cast<double>(j) * x, 1.0);
        s.add(a[j] * std::cos(ang) + b[j] * std::sin(ang));
    }
    return s.value();
}

// -- exact quadrature core ------------------------------------------------------

namespace {

struct AffinePiece {
    BigRational lo, hi;  // on [lo, hi)
    BigRational A, B;    // value A*x + B
};

std::vector<AffinePiece> dilate_pieces(const PeriodicBVFunction& f, const BigInt& n) {
    if (n < 1) throw std::invalid_argument("dilate_pieces: dilation must be >= 1");
    if (n > (BigInt(1) << 24)) throw std::invalid_argument("dilate_pieces: dilation too large for exact quadrature");
    const auto& t = f.breakpoints();
    const auto& s = f.slopes();
    const auto& ic = f.intercepts();
    std::size_t reps = n.convert_to<std::size_t>();
    std::vector<AffinePiece> out;
    out.reserve(reps * s.size());
    BigRational nr(n);
    for (std::size_t j = 0; j < reps; ++j) {
        BigRational jr(static_cast<long>(j));
        for (std::size_t i = 0; i < s.size(); ++i) {
            // on [(j+t_i)/n, (j+t_{i+1})/n): f(nx) = s_i*(n x - j) + c_i
            out.push_back({(jr + t[i]) / nr, (jr + t[i + 1]) / nr, s[i] * nr, ic[i] - s[i] * jr});
        }
    }
    return out;
}

// integral over [u,v) of (A1 x + B1)(A2 x + B2)
BigRational product_piece_integral(const BigRational& u, const BigRational& v,
                                   const BigRational& A1, const BigRational& B1,
                                   const BigRational& A2, const BigRational& B2) {
    BigRational u2 = u * u, v2 = v * v;
    return A1 * A2 * (v2 * v - u2 * u) / 3 + (A1 * B2 + A2 * B1) * (v2 - u2) / 2 +
           B1 * B2 * (v - u);
}

}  // namespace

BigRational dilated_product_integral(const PeriodicBVFunction& f, const BigInt& m,
                                     const BigInt& n) {
    auto pm = dilate_pieces(f, m);
    auto pn = dilate_pieces(f, n);
    std::vector<BigRational> cuts;
    cuts.reserve(pm.size() + pn.size() + 1);
    for (const auto& p : pm) cuts.push_back(p.lo);
    for (const auto& p : pn) cuts.push_back(p.lo);
    cuts.emplace_back(1);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    BigRational total = 0;
    std::size_t im = 0, in = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const BigRational& u = cuts[i];
        const BigRational& v = cuts[i + 1];
        while (pm[im].hi <= u) ++im;
        while (pn[in].hi <= u) ++in;
        total += product_piece_integral(u, v, pm[im].A, pm[im].B, pn[in].A, pn[in].B);
    }
    return total;
}

BigRational dilated_sum_square_integral(const PeriodicBVFunction& f, const DilationSequence& D,
                                        const std::vector<BigRational>& c, std::size_t N) {
    if (N == 0) throw std::invalid_argument("dilated_sum_square_integral: N must be >= 1");
    if (N > D.size() || N > c.size())
        throw std::invalid_argument("dilated_sum_square_integral: N exceeds inputs");
    std::vector<std::vector<AffinePiece>> lists;
    lists.reserve(N);
    for (std::size_t k = 0; k < N; ++k) lists.push_back(dilate_pieces(f, D.term(k)));

    std::vector<BigRational> cuts;
    for (const auto& list : lists)
        for (const auto& p : list) cuts.push_back(p.lo);
    cuts.emplace_back(1);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<std::size_t> idx(N, 0);
    BigRational total = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const BigRational& u = cuts[i];
        const BigRational& v = cuts[i + 1];
        BigRational A = 0, B = 0;
        for (std::size_t k = 0; k < N; ++k) {
            while (lists[k][idx[k]].hi <= u) ++idx[k];
            A += c[k] * lists[k][idx[k]].A;
            B += c[k] * lists[k][idx[k]].B;
        }
        total += product_piece_integral(u, v, A, B, A, B);
    }
    return total;
}

BigRational square_integral(const PeriodicBVFunction& f) {
    return dilated_product_integral(f, 1, 1);
}

}  // namespace equidist::analysis
