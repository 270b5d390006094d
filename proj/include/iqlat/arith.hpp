#pragma once

#include <cstdint>
#include <vector>

#include "iqlat/qfield.hpp"

namespace iqlat {

enum class PrimeKind { Split, Inert, Ramified };

const char* to_string(PrimeKind k);

struct PrimeSplit {
    std::uint64_t p = 0;
    PrimeKind kind = PrimeKind::Inert;
};

struct PrimePower {
    std::uint64_t p = 0;
    unsigned e = 0;
};

// One prime of a shell norm together with its splitting behavior.
struct NormFactor {
    std::uint64_t p = 0;
    unsigned e = 0;
    PrimeKind kind = PrimeKind::Inert;
};

bool is_prime(std::uint64_t n);

// Complete factorization, primes ascending. factorize(1) is empty.
// Small inputs go through a shared smallest-prime-factor sieve built on
// first use; larger ones fall back to trial division.
std::vector<PrimePower> factorize(std::uint64_t m);

// Split / inert / ramified decision for p in the given field. Ramified means
// p | disc; otherwise the quadratic character of the discriminant decides
// (Euler's criterion for odd p, disc mod 8 for p = 2).
// Throws NotPrimeError on composite input.
PrimeSplit classify_prime(const FieldParams& f, std::uint64_t p);

std::vector<NormFactor> classify_factorization(const FieldParams& f, std::uint64_t m);

// Number of integral ideals of norm p^e:
//   split     e+1
//   inert     1 if e even, 0 if odd
//   ramified  1
std::uint64_t ideal_count_prime_power(PrimeKind kind, unsigned e);

// F(m), multiplicative over the factorization of m. F(1) = 1.
std::uint64_t ideal_count(const FieldParams& f, std::uint64_t m);

// Shell size a(m) predicted by the formula path: w * F(m).
std::uint64_t predicted_shell_size(const FieldParams& f, std::uint64_t m);

} // namespace iqlat
