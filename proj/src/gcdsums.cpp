#include "equidist/gcdsums.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace equidist::gcdsums {

IntegerSet::IntegerSet(std::vector<BigInt> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw std::invalid_argument("IntegerSet: must be non-empty");
    std::sort(elements_.begin(), elements_.end());
    if (elements_.front() < 1) throw std::invalid_argument("IntegerSet: elements must be >= 1");
    for (std::size_t i = 1; i < elements_.size(); ++i)
        if (elements_[i] == elements_[i - 1])
            throw std::invalid_argument("IntegerSet: elements must be distinct");
}

IntegerSet IntegerSet::from_u64(const std::vector<std::uint64_t>& elements) {
    std::vector<BigInt> v(elements.begin(), elements.end());
    return IntegerSet(std::move(v));
}

namespace {

constexpr std::size_t kExactLimit = 512;

double alpha_term(const BigInt& a, const BigInt& b, double alpha) {
    BigInt g = boost::multiprecision::gcd(a, b);
    double ratio = to_double(BigRational(g * g, a * b));  // in (0, 1]
    if (alpha == 1.0) return ratio;
    if (alpha == 0.5) return std::sqrt(ratio);
    return std::pow(ratio, alpha);
}

}  // namespace

GcdSumValue gal_sum(const IntegerSet& S) {
    const auto& n = S.elements();
    const std::size_t N = n.size();
    if (N <= kExactLimit) {
        BigRational total(static_cast<long long>(N));  // diagonal
        for (std::size_t k = 0; k < N; ++k) {
            for (std::size_t l = k + 1; l < N; ++l) {
                BigInt g = boost::multiprecision::gcd(n[k], n[l]);
                total += 2 * BigRational(g * g, n[k] * n[l]);
            }
        }
        return {to_double(total), total, 1.0};
    }
    KahanSum s;
    s.add(static_cast<double>(N));
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t l = k + 1; l < N; ++l) s.add(2.0 * alpha_term(n[k], n[l], 1.0));
    return {s.value(), std::nullopt, 1.0};
}

GcdSumValue gcd_sum_alpha(const IntegerSet& S, double alpha) {
    if (!(alpha >= 0.5 && alpha <= 1.0))
        throw std::invalid_argument("gcd_sum_alpha: alpha must lie in [1/2,1]");
    if (alpha == 1.0) return gal_sum(S);
    const auto& n = S.elements();
    KahanSum s;
    s.add(static_cast<double>(n.size()));
    for (std::size_t k = 0; k < n.size(); ++k)
        for (std::size_t l = k + 1; l < n.size(); ++l) s.add(2.0 * alpha_term(n[k], n[l], alpha));
    return {s.value(), std::nullopt, alpha};
}

BigRational franel_landau(const BigInt& m, const BigInt& n) {
    if (m < 1 || n < 1) throw std::invalid_argument("franel_landau: arguments must be >= 1");
    BigInt g = boost::multiprecision::gcd(m, n);
    return BigRational(g * g, 12 * m * n);
}

BigRational sawtooth_sum_l2(const DilationSequence& D, std::size_t N) {
    if (N == 0 || N > D.size()) throw std::invalid_argument("sawtooth_sum_l2: bad N");
    std::vector<BigInt> terms;
    terms.reserve(N);
    for (std::size_t k = 0; k < N; ++k) terms.push_back(D.term(k));
    BigRational total = 0;
    for (std::size_t k = 0; k < N; ++k) {
        total += franel_landau(terms[k], terms[k]);
        for (std::size_t l = k + 1; l < N; ++l) total += 2 * franel_landau(terms[k], terms[l]);
    }
    return total;
}

BigRational pair_correlation_exact(const analysis::PeriodicBVFunction& f, const BigInt& m,
                                   const BigInt& n) {
    return analysis::dilated_product_integral(f, m, n);
}

double pair_correlation(const analysis::PeriodicBVFunction& f, const BigInt& m, const BigInt& n) {
    return to_double(pair_correlation_exact(f, m, n));
}

double gal_envelope(std::size_t N) {
    if (N < 16) throw std::invalid_argument("gal_envelope: N must be >= 16");
    double ll = std::log(std::log(static_cast<double>(N)));
    return static_cast<double>(N) * ll * ll;
}

double g_alpha(double alpha, std::size_t N) {
    if (N < 16) throw std::invalid_argument("g_alpha: N must be >= 16");
    if (!(alpha >= 0.5 && alpha < 1.0))
        throw std::invalid_argument("g_alpha: alpha must lie in [1/2,1)");
    double logN = std::log(static_cast<double>(N));
    double loglogN = std::log(logN);
    if (alpha == 0.5) return 25.0 * std::sqrt(logN) * std::sqrt(loglogN);
    double lead = 8.0 / (1.0 - alpha) + 16.0 * std::pow(2.0, -alpha) / std::sqrt(2.0 * alpha - 1.0);
    return lead * std::pow(logN, 1.0 - alpha) / std::pow(loglogN, alpha) +
           std::pow(logN, (1.0 - alpha) / 2.0) / (1.0 - alpha);
}

double abs_bound(double alpha, std::size_t N, double eps, double C_eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("abs_bound: eps must be > 0");
    if (!(C_eps > 0.0)) throw std::invalid_argument("abs_bound: C_eps must be > 0");
    return C_eps * static_cast<double>(N) * std::exp((1.0 + eps) * g_alpha(alpha, N));
}

double dyer_harman_bound(std::size_t N) {
    if (N < 16) throw std::invalid_argument("dyer_harman_bound: N must be >= 16");
    double logN = std::log(static_cast<double>(N));
    return static_cast<double>(N) * std::exp(5.0 * logN / std::log(logN));
}

// -- extremal search -----------------------------------------------------------

namespace {

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

double term_u(std::uint64_t a, std::uint64_t b, double alpha) {
    std::uint64_t g = gcd_u(a, b);
    double ratio = static_cast<double>(g) * static_cast<double>(g) /
                   (static_cast<double>(a) * static_cast<double>(b));
    if (alpha == 1.0) return ratio;
    if (alpha == 0.5) return std::sqrt(ratio);
    return std::pow(ratio, alpha);
}

double objective(const std::vector<std::uint64_t>& s, double alpha) {
    KahanSum total;
    total.add(static_cast<double>(s.size()));
    for (std::size_t k = 0; k < s.size(); ++k)
        for (std::size_t l = k + 1; l < s.size(); ++l) total.add(2.0 * term_u(s[k], s[l], alpha));
    return total.value();
}

// change in the objective when s[i] is replaced by v (v not already in s)
double replace_delta(const std::vector<std::uint64_t>& s, std::size_t i, std::uint64_t v,
                     double alpha) {
    double d = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (j == i) continue;
        d += 2.0 * (term_u(v, s[j], alpha) - term_u(s[i], s[j], alpha));
    }
    return d;
}

std::vector<std::uint64_t> smooth_numbers(std::uint64_t limit) {
    std::set<std::uint64_t> out;
    for (std::uint64_t a = 1; a <= limit; a *= 2)
        for (std::uint64_t b = a; b <= limit; b *= 3)
            for (std::uint64_t c = b; c <= limit; c *= 5)
                for (std::uint64_t d = c; d <= limit; d *= 7) out.insert(d);
    return {out.begin(), out.end()};
}

}  // namespace

SearchResult extremal_search(std::size_t N, double alpha, const SearchConfig& cfg) {
    if (N < 2) throw std::invalid_argument("extremal_search: N must be >= 2");
    if (cfg.max_iterations == 0 || cfg.restarts == 0)
        throw std::invalid_argument("extremal_search: iteration budget must be >= 1");
    if (!(alpha >= 0.5 && alpha <= 1.0))
        throw std::invalid_argument("extremal_search: alpha must lie in [1/2,1]");
    const std::uint64_t limit =
        cfg.max_element ? cfg.max_element : 4 * static_cast<std::uint64_t>(N) * N;
    if (limit < N) throw std::invalid_argument("extremal_search: domain smaller than N");

    const std::vector<std::uint64_t> smooth = smooth_numbers(limit);
    static constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7};

    std::vector<std::uint64_t> best_set;
    double best_value = -1.0;
    std::size_t total_iterations = 0;
    std::vector<std::vector<std::uint64_t>> trace;

    for (std::size_t restart = 0; restart < cfg.restarts; ++restart) {
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                          static_cast<std::uint32_t>(restart)};
        std::mt19937_64 rng(seq);

        std::vector<std::uint64_t> cur;
        if (restart == 0) {
            for (std::uint64_t v = 1; v <= N; ++v) cur.push_back(v);
        } else {
            std::set<std::uint64_t> pick;
            std::uniform_int_distribution<std::size_t> si(0, smooth.size() - 1);
            std::uniform_int_distribution<std::uint64_t> ui(1, limit);
            while (pick.size() < N) pick.insert(restart % 2 == 1 ? smooth[si(rng)] : ui(rng));
            cur.assign(pick.begin(), pick.end());
        }
        double cur_value = objective(cur, alpha);
        if (cfg.record_trace) trace.push_back(cur);

        for (std::size_t iter = 0; iter < cfg.max_iterations; ++iter) {
            ++total_iterations;
            double best_delta = 1e-12;
            std::size_t best_i = 0;
            std::uint64_t best_v = 0;

            std::uniform_int_distribution<std::size_t> si(0, smooth.size() - 1);
            for (std::size_t i = 0; i < cur.size(); ++i) {
                std::vector<std::uint64_t> candidates;
                for (std::uint64_t p : kPrimes) {
                    if (cur[i] <= limit / p) candidates.push_back(cur[i] * p);
                    if (cur[i] % p == 0) candidates.push_back(cur[i] / p);
                }
                for (int t = 0; t < 4; ++t) candidates.push_back(smooth[si(rng)]);
                std::sort(candidates.begin(), candidates.end());
                candidates.erase(std::unique(candidates.begin(), candidates.end()),
                                 candidates.end());
                for (std::uint64_t v : candidates) {
                    if (v < 1 || v > limit) continue;
                    if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
                    double d = replace_delta(cur, i, v, alpha);
                    if (d > best_delta) {
                        best_delta = d;
                        best_i = i;
                        best_v = v;
                    }
                }
            }
            if (best_v == 0) break;  // local optimum
            cur[best_i] = best_v;
            cur_value += best_delta;
            std::sort(cur.begin(), cur.end());
            if (cfg.record_trace) trace.push_back(cur);
        }

        cur_value = objective(cur, alpha);  // refresh accumulated deltas
        std::sort(cur.begin(), cur.end());
        if (cur_value > best_value + 1e-12 ||
            (std::abs(cur_value - best_value) <= 1e-12 &&
             (best_set.empty() || std::lexicographical_compare(cur.begin(), cur.end(),
                                                               best_set.begin(), best_set.end())))) {
            best_value = cur_value;
            best_set = cur;
        }
    }

    IntegerSet best = IntegerSet::from_u64(best_set);
    GcdSumValue exact = gcd_sum_alpha(best, alpha);
    SearchResult result{std::move(best), exact.value, exact.exact, total_iterations,
                        std::move(trace)};
    return result;
}

double duffin_schaeffer_partial(const std::vector<double>& psi, std::size_t N) {
    if (N == 0 || psi.size() < N + 1)
        throw std::invalid_argument("duffin_schaeffer_partial: table must cover 1..N");
    for (std::size_t n = 1; n <= N; ++n)
        if (psi[n] < 0.0) throw std::invalid_argument("duffin_schaeffer_partial: psi must be >= 0");
    std::vector<std::uint64_t> phi = totient_table(N);
    KahanSum s;
    for (std::size_t n = 1; n <= N; ++n)
        s.add(psi[n] * static_cast<double>(phi[n]) / static_cast<double>(n));
    return s.value();
}

}  // namespace equidist::gcdsums
