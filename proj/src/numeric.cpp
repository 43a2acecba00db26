#include "equidist/numeric.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <cstdlib>

namespace equidist {

double to_double(const BigRational& r) { return r.convert_to<double>(); }
double to_double(const BigInt& n) { return n.convert_to<double>(); }

double unit_to_double(const BigRational& r) {
    double v = r.convert_to<double>();
    if (v >= 1.0) v = 0x1.fffffffffffffp-1;  // nearest double below 1
    if (v < 0.0) v = 0.0;
    return v;
}

BigRational frac(const BigRational& x) {
    BigInt num = numerator(x);
    BigInt den = denominator(x);
    BigInt r = num % den;   // sign follows num
    if (r < 0) r += den;
    return BigRational(r, den);
}

BigRational mod(const BigRational& x, const BigRational& m) {
    if (m <= 0) throw std::invalid_argument("mod: modulus must be positive");
    BigRational q = x / m;
    BigInt fl = numerator(q) / denominator(q);
    if (q < 0 && fl * denominator(q) != numerator(q)) fl -= 1;
    return x - BigRational(fl) * m;
}

double DyadicExpansion::window(std::size_t bit_offset) const {
    if (bit_offset + 64 > bits_)
        throw std::out_of_range("DyadicExpansion::window: offset beyond stored bits");
    std::size_t q = bit_offset / 64;
    std::size_t r = bit_offset % 64;
    std::uint64_t w;
    if (r == 0) {
        w = words_[q];
    } else {
        w = words_[q] << r;
        if (q + 1 < words_.size()) w |= words_[q + 1] >> (64 - r);
    }
    return static_cast<double>(w) * 0x1p-64;
}

HighPrecisionReal HighPrecisionReal::exact_rational(BigRational v) {
    HighPrecisionReal x;
    x.value_ = std::move(v);
    x.exact_ = true;
    x.precision_bits_ = 0;
    return x;
}

HighPrecisionReal HighPrecisionReal::fixed_point(BigInt mantissa, unsigned precision_bits) {
    if (precision_bits < 64)
        throw std::invalid_argument("fixed_point: precision must be at least 64 bits");
    HighPrecisionReal x;
    x.value_ = BigRational(std::move(mantissa), BigInt(1) << precision_bits);
    x.exact_ = false;
    x.precision_bits_ = precision_bits;
    return x;
}

HighPrecisionReal HighPrecisionReal::sqrt_of_integer(const BigInt& n, unsigned precision_bits) {
    if (n < 0) throw std::invalid_argument("sqrt_of_integer: negative argument");
    BigInt shifted = n << (2 * static_cast<std::size_t>(precision_bits));
    BigInt mantissa = sqrt(shifted);
    return fixed_point(std::move(mantissa), precision_bits);
}

HighPrecisionReal HighPrecisionReal::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse: empty number");
    if (text.rfind("sqrt", 0) == 0) {
        auto at = text.find('@');
        std::string d = text.substr(4, at == std::string::npos ? std::string::npos : at - 4);
        unsigned bits = 128;
        if (at != std::string::npos) bits = static_cast<unsigned>(std::stoul(text.substr(at + 1)));
        return sqrt_of_integer(BigInt(d), bits);
    }
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt p(text.substr(0, slash));
        BigInt q(text.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("parse: zero denominator");
        return exact_rational(BigRational(p, q));
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string ip = text.substr(0, dot);
        std::string fp = text.substr(dot + 1);
        if (fp.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("parse: bad decimal: " + text);
        bool neg = !ip.empty() && ip[0] == '-';
        if (neg) ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        BigInt scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        BigInt num = BigInt(ip) * scale + (fp.empty() ? BigInt(0) : BigInt(fp));
        BigRational v(num, scale);
        if (neg) v = -v;
        return exact_rational(v);
    }
    return exact_rational(BigRational(BigInt(text)));
}

BigRational HighPrecisionReal::frac_times(const BigInt& n) const {
    const BigInt& p = numerator(value_);
    const BigInt& q = denominator(value_);
    BigInt r = (n * p) % q;
    if (r < 0) r += q;
    return BigRational(r, q);
}

DyadicExpansion HighPrecisionReal::dyadic_expansion(std::size_t bits) const {
    std::size_t words = (bits + 63) / 64;
    std::size_t padded = words * 64;
    BigRational f = frac();
    // floor(frac(x) * 2^padded); exact when the denominator is a power of two
    // not exceeding 2^padded (the fixed-point case).
    BigInt scaled = (numerator(f) << padded) / denominator(f);
    std::vector<std::uint64_t> out(words, 0);
    for (std::size_t i = 0; i < words && scaled != 0; ++i) {
        out[words - 1 - i] = static_cast<std::uint64_t>(scaled & 0xffffffffffffffffULL);
        scaled >>= 64;
    }
    return DyadicExpansion(std::move(out), padded);
}

}  // namespace equidist
