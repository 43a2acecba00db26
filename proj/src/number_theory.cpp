#include "equidist/number_theory.hpp"

#include <stdexcept>

namespace equidist::gcdsums {

std::uint64_t gcd(std::uint64_t m, std::uint64_t n) {
    if (m == 0 || n == 0) throw std::invalid_argument("gcd: arguments must be >= 1");
    while (n != 0) {
        std::uint64_t t = m % n;
        m = n;
        n = t;
    }
    return m;
}

BigInt gcd(const BigInt& m, const BigInt& n) {
    if (m <= 0 || n <= 0) throw std::invalid_argument("gcd: arguments must be >= 1");
    return boost::multiprecision::gcd(m, n);
}

std::uint64_t totient(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("totient: argument must be >= 1");
    std::uint64_t result = n;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<std::uint64_t> totient_table(std::uint64_t n) {
    std::vector<std::uint64_t> phi(n + 1);
    for (std::uint64_t i = 0; i <= n; ++i) phi[i] = i;
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (phi[p] == p) {  // p prime
            for (std::uint64_t k = p; k <= n; k += p) phi[k] -= phi[k] / p;
        }
    }
    return phi;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (!composite[p]) {
            primes.push_back(p);
            for (std::uint64_t k = p * p; k <= n; k += p) composite[k] = true;
        }
    }
    return primes;
}

}  // namespace equidist::gcdsums
