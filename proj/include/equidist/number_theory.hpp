#pragma once

#include "equidist/numeric.hpp"

#include <cstdint>
#include <vector>

namespace equidist::gcdsums {

std::uint64_t gcd(std::uint64_t m, std::uint64_t n);
BigInt gcd(const BigInt& m, const BigInt& n);

/// Euler totient via trial division by sieved primes.
std::uint64_t totient(std::uint64_t n);

/// phi(1..n) in one pass (linear sieve); index 0 unused.
std::vector<std::uint64_t> totient_table(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

}  // namespace equidist::gcdsums
