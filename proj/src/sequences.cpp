#include "equidist/sequences.hpp"

#include "equidist/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace equidist::sequences {

namespace {

// Exact values are kept only while N * denominator-bits stays modest;
// beyond that the doubles are the deliverable.
constexpr std::size_t kExactRetentionBits = std::size_t(1) << 25;

void check_unit(double v) {
    if (!(v >= 0.0 && v < 1.0)) throw std::invalid_argument("PointSet: value outside [0,1)");
}

}  // namespace

PointSet::PointSet(std::vector<double> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("PointSet: must be non-empty");
    for (double v : points_) check_unit(v);
}

PointSet::PointSet(std::vector<double> points, std::vector<BigRational> exact)
    : points_(std::move(points)), exact_(std::move(exact)) {
    if (points_.empty()) throw std::invalid_argument("PointSet: must be non-empty");
    if (!exact_.empty() && exact_.size() != points_.size())
        throw std::invalid_argument("PointSet: exact/double length mismatch");
    for (double v : points_) check_unit(v);
}

PointSet PointSet::prefix(std::size_t n) const {
    if (n == 0 || n > size()) throw std::invalid_argument("PointSet::prefix: bad length");
    std::vector<double> pts(points_.begin(), points_.begin() + n);
    if (exact_.empty()) return PointSet(std::move(pts));
    std::vector<BigRational> ex(exact_.begin(), exact_.begin() + n);
    return PointSet(std::move(pts), std::move(ex));
}

DilationSequence::DilationSequence(std::vector<BigInt> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("DilationSequence: must be non-empty");
    if (terms_.front() < 1) throw std::invalid_argument("DilationSequence: terms must be >= 1");
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (terms_[i] <= terms_[i - 1])
            throw std::invalid_argument("DilationSequence: terms must be strictly increasing");
}

DilationSequence DilationSequence::geometric(const BigInt& theta, std::size_t count) {
    if (theta < 2) throw std::invalid_argument("DilationSequence: geometric ratio must be >= 2");
    if (count == 0) throw std::invalid_argument("DilationSequence: must be non-empty");
    DilationSequence d;
    d.geometric_ = true;
    d.theta_ = theta;
    d.count_ = count;
    return d;
}

DilationSequence DilationSequence::first_integers(std::size_t n) {
    std::vector<BigInt> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = BigInt(i + 1);
    return DilationSequence(std::move(t));
}

BigInt DilationSequence::term(std::size_t i) const {
    if (i >= size()) throw std::out_of_range("DilationSequence::term");
    if (!geometric_) return terms_[i];
    return boost::multiprecision::pow(theta_, static_cast<unsigned>(i + 1));
}

const std::vector<BigInt>& DilationSequence::terms() const {
    if (geometric_ && terms_.empty()) {
        terms_.reserve(count_);
        BigInt t = 1;
        for (std::size_t i = 0; i < count_; ++i) {
            t *= theta_;
            terms_.push_back(t);
        }
    }
    return terms_;
}

double DilationSequence::hadamard_ratio() const {
    if (size() < 2) throw std::invalid_argument("hadamard_ratio: needs at least 2 terms");
    if (geometric_) return to_double(theta_);
    std::size_t arg = 0;
    for (std::size_t i = 1; i + 1 < terms_.size(); ++i) {
        // terms_[i+1]/terms_[i] < terms_[arg+1]/terms_[arg]  (exact cross-multiply)
        if (terms_[i + 1] * terms_[arg] < terms_[arg + 1] * terms_[i]) arg = i;
    }
    return to_double(BigRational(terms_[arg + 1], terms_[arg]));
}

DigitStream::DigitStream(int base_, std::vector<int> digits_, DigitOrigin origin_)
    : base(base_), digits(std::move(digits_)), origin(origin_) {
    if (base < 2) throw std::invalid_argument("DigitStream: base must be >= 2");
    if (digits.empty()) throw std::invalid_argument("DigitStream: must be non-empty");
    for (int d : digits)
        if (d < 0 || d >= base) throw std::invalid_argument("DigitStream: digit out of range");
}

// -- generators --------------------------------------------------------------

namespace {

struct ExactPoints {
    std::vector<double> pts;
    std::vector<BigRational> exact;
    BigInt den;
    bool keep;

    ExactPoints(std::size_t n, BigInt den_) : den(std::move(den_)) {
        pts.reserve(n);
        std::size_t den_bits = den == 0 ? 0 : msb(den) + 1;
        keep = n * den_bits <= kExactRetentionBits;
        if (keep) exact.reserve(n);
    }

    void push(const BigInt& num) {
        pts.push_back(unit_to_double(BigRational(num, den)));
        if (keep) exact.emplace_back(num, den);
    }

    PointSet finish() {
        if (keep) return PointSet(std::move(pts), std::move(exact));
        return PointSet(std::move(pts));
    }
};

}  // namespace

PointSet kronecker_sequence(const HighPrecisionReal& x, std::size_t N) {
    if (N == 0) throw std::invalid_argument("kronecker_sequence: N must be >= 1");
    const BigInt& p = numerator(x.value());
    const BigInt& q = denominator(x.value());
    BigInt pm = p % q;
    if (pm < 0) pm += q;
    ExactPoints out(N, q);
    BigInt r = 0;
    for (std::size_t k = 0; k < N; ++k) {
        r += pm;
        if (r >= q) r -= q;
        out.push(r);
    }
    return out.finish();
}

PointSet dilated_sequence(const DilationSequence& D, const HighPrecisionReal& x, std::size_t N) {
    if (N == 0) throw std::invalid_argument("dilated_sequence: N must be >= 1");
    if (N > D.size()) throw std::invalid_argument("dilated_sequence: N exceeds available terms");
    const BigInt& p = numerator(x.value());
    const BigInt& q = denominator(x.value());

    if (D.is_geometric()) {
        const BigInt& theta = D.ratio();
        // Power-of-two ratio against a dyadic x: frac(2^(e*k) x) is a bit
        // window of the binary expansion (exact, zero-padded past the stored
        // bits). This is what makes N ~ 2^20 trajectories feasible.
        if ((theta & (theta - 1)) == 0 && (q & (q - 1)) == 0) {
            std::size_t e = msb(theta);
            std::size_t need = e * N + 64;
            if (need <= (std::size_t(1) << 30)) {
                DyadicExpansion exp = x.dyadic_expansion(need);
                std::vector<double> pts;
                pts.reserve(N);
                for (std::size_t k = 1; k <= N; ++k) pts.push_back(exp.window(e * k));
                return PointSet(std::move(pts));
            }
        }
        // Iterated residue: r_k = theta^k * p mod q, one scalar step each.
        ExactPoints out(N, q);
        BigInt r = p % q;
        if (r < 0) r += q;
        for (std::size_t k = 0; k < N; ++k) {
            r = (r * theta) % q;
            out.push(r);
        }
        return out.finish();
    }

    const std::vector<BigInt>& terms = D.terms();
    ExactPoints out(N, q);
    for (std::size_t k = 0; k < N; ++k) {
        BigInt r = (terms[k] % q) * (p % q) % q;
        if (r < 0) r += q;
        out.push(r);
    }
    return out.finish();
}

DilationSequence geometric_dilation(const BigInt& theta, std::size_t K) {
    if (theta < 2) throw std::invalid_argument("geometric_dilation: theta must be >= 2");
    if (K == 0) throw std::invalid_argument("geometric_dilation: K must be >= 1");
    return DilationSequence::geometric(theta, K);
}

PointSet power_sequence(const HighPrecisionReal& x, std::size_t N, std::size_t budget_bits) {
    if (N == 0) throw std::invalid_argument("power_sequence: N must be >= 1");
    if (x.value() <= 1) throw std::invalid_argument("power_sequence: requires x > 1");
    const BigInt& p = numerator(x.value());
    const BigInt& q = denominator(x.value());

    if (x.exact()) {
        // q^N must fit the bit budget.
        std::size_t qbits = q == 1 ? 1 : msb(q) + 1;
        if (qbits * N > budget_bits)
            throw PrecisionExhausted("power_sequence: q^N exceeds the bit budget");
    } else {
        // Fixed-point input: frac((x+err)^k) drifts by ~ k*x^(k-1)*2^-p;
        // cap N so the accumulated error stays below 2^-40.
        double log2x = std::log2(x.to_double());
        double pbits = static_cast<double>(x.precision_bits());
        double worst = std::log2(static_cast<double>(N)) + (static_cast<double>(N) - 1.0) * log2x;
        if (worst > pbits - 40.0)
            throw PrecisionExhausted("power_sequence: N too large for the declared precision");
        if (static_cast<double>(x.precision_bits()) * static_cast<double>(N) >
            static_cast<double>(budget_bits))
            throw PrecisionExhausted("power_sequence: denominator growth exceeds the bit budget");
    }

    std::vector<double> pts;
    pts.reserve(N);
    std::vector<BigRational> exact;
    BigInt num = 1, den = 1;
    bool keep_exact = true;
    std::size_t bits_used = 0;
    for (std::size_t k = 1; k <= N; ++k) {
        num *= p;
        den *= q;
        BigInt r = num % den;
        pts.push_back(unit_to_double(BigRational(r, den)));
        bits_used += (den == 1 ? 1 : msb(den) + 1);
        if (keep_exact && bits_used <= kExactRetentionBits)
            exact.emplace_back(r, den);
        else
            keep_exact = false;
    }
    if (keep_exact) return PointSet(std::move(pts), std::move(exact));
    return PointSet(std::move(pts));
}

DigitStream digits_of(const HighPrecisionReal& x, int base, std::size_t N) {
    if (base < 2) throw std::invalid_argument("digits_of: base must be >= 2");
    if (N == 0) throw std::invalid_argument("digits_of: N must be >= 1");
    BigRational v = x.value();
    if (v < 0 || v >= 1) throw std::invalid_argument("digits_of: x must lie in [0,1)");
    // Long division; remainder 0 yields trailing zeros (the terminating form).
    BigInt num = numerator(v);
    const BigInt& den = denominator(v);
    std::vector<int> digits;
    digits.reserve(N);
    for (std::size_t i = 0; i < N; ++i) {
        num *= base;
        BigInt d = num / den;
        num -= d * den;
        digits.push_back(static_cast<int>(d));
    }
    return DigitStream(base, std::move(digits), DigitOrigin::ExpansionOfRational);
}

namespace {

void append_digits(std::vector<int>& out, std::uint64_t value, int base, std::size_t limit) {
    int buf[64];
    int n = 0;
    while (value > 0) {
        buf[n++] = static_cast<int>(value % static_cast<std::uint64_t>(base));
        value /= static_cast<std::uint64_t>(base);
    }
    for (int i = n - 1; i >= 0 && out.size() < limit; --i) out.push_back(buf[i]);
}

}  // namespace

DigitStream champernowne(int base, std::size_t N) {
    if (base < 2) throw std::invalid_argument("champernowne: base must be >= 2");
    if (N == 0) throw std::invalid_argument("champernowne: N must be >= 1");
    std::vector<int> digits;
    digits.reserve(N);
    for (std::uint64_t i = 1; digits.size() < N; ++i) append_digits(digits, i, base, N);
    return DigitStream(base, std::move(digits), DigitOrigin::Champernowne);
}

DigitStream copeland_erdos(int base, std::size_t N) {
    if (base < 2) throw std::invalid_argument("copeland_erdos: base must be >= 2");
    if (N == 0) throw std::invalid_argument("copeland_erdos: N must be >= 1");
    std::vector<int> digits;
    digits.reserve(N);
    std::uint64_t limit = 64;
    while (digits.size() < N) {
        digits.clear();
        for (std::uint64_t p : gcdsums::primes_up_to(limit)) {
            append_digits(digits, p, base, N);
            if (digits.size() >= N) break;
        }
        if (digits.size() < N) limit *= 4;
    }
    return DigitStream(base, std::move(digits), DigitOrigin::CopelandErdos);
}

double block_frequency(const DigitStream& s, const std::vector<int>& block) {
    if (block.empty()) throw std::invalid_argument("block_frequency: block must be non-empty");
    if (block.size() > s.digits.size())
        throw std::invalid_argument("block_frequency: block longer than stream");
    for (int d : block)
        if (d < 0 || d >= s.base)
            throw std::invalid_argument("block_frequency: block digit out of range for base");
    std::size_t windows = s.digits.size() - block.size() + 1;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < windows; ++i) {
        if (std::equal(block.begin(), block.end(), s.digits.begin() + i)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(windows);
}

}  // namespace equidist::sequences
