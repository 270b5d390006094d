#include "iqlat/arith.hpp"

#include <mutex>
#include <string>

namespace iqlat {

const char* to_string(PrimeKind k) {
    switch (k) {
        case PrimeKind::Split: return "split";
        case PrimeKind::Inert: return "inert";
        case PrimeKind::Ramified: return "ramified";
    }
    return "?";
}

namespace {

// Smallest-prime-factor sieve shared by all callers. Sized for the survey
// ranges (norms up to ~10^6 with headroom); built once, then read-only.
constexpr std::uint32_t kSieveLimit = 1u << 21;

const std::vector<std::uint32_t>& spf_sieve() {
    static std::vector<std::uint32_t> spf;
    static std::once_flag once;
    std::call_once(once, [] {
        spf.assign(kSieveLimit, 0);
        for (std::uint32_t i = 2; i < kSieveLimit; ++i) {
            if (spf[i] != 0) continue;
            for (std::uint64_t j = i; j < kSieveLimit; j += i)
                if (spf[j] == 0) spf[j] = i;
        }
    });
    return spf;
}

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t mod) {
    return (std::uint64_t)((unsigned __int128)x * y % mod);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t acc = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1u) acc = mulmod(acc, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1u;
    }
    return acc;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

std::vector<PrimePower> factorize(std::uint64_t m) {
    std::vector<PrimePower> out;
    if (m <= 1) return out;
    if (m < kSieveLimit) {
        const auto& spf = spf_sieve();
        while (m > 1) {
            const std::uint64_t p = spf[m];
            unsigned e = 0;
            while (m % p == 0) { m /= p; ++e; }
            out.push_back({p, e});
        }
        return out;
    }
    auto strip = [&](std::uint64_t p) {
        if (m % p != 0) return;
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        out.push_back({p, e});
    };
    strip(2);
    for (std::uint64_t q = 3; q * q <= m; q += 2) strip(q);
    if (m > 1) out.push_back({m, 1});
    return out;
}

PrimeSplit classify_prime(const FieldParams& f, std::uint64_t p) {
    if (!is_prime(p))
        throw NotPrimeError("classify_prime: " + std::to_string(p) + " is not prime");
    const std::int64_t disc = f.disc;
    if (p == 2) {
        if (disc % 2 == 0) return {p, PrimeKind::Ramified};
        const std::uint64_t r = (std::uint64_t)(((disc % 8) + 8) % 8);
        return {p, r == 1 ? PrimeKind::Split : PrimeKind::Inert};
    }
    const std::uint64_t dmod = (std::uint64_t)(((disc % (std::int64_t)p) + (std::int64_t)p) % (std::int64_t)p);
    if (dmod == 0) return {p, PrimeKind::Ramified};
    // Euler's criterion: disc^((p-1)/2) is 1 for residues, p-1 for nonresidues.
    const std::uint64_t euler = powmod(dmod, (p - 1) / 2, p);
    return {p, euler == 1 ? PrimeKind::Split : PrimeKind::Inert};
}

std::vector<NormFactor> classify_factorization(const FieldParams& f, std::uint64_t m) {
    std::vector<NormFactor> out;
    for (const auto& [p, e] : factorize(m))
        out.push_back({p, e, classify_prime(f, p).kind});
    return out;
}

std::uint64_t ideal_count_prime_power(PrimeKind kind, unsigned e) {
    if (e == 0) return 1;
    switch (kind) {
        case PrimeKind::Split: return e + 1;
        case PrimeKind::Inert: return (e % 2 == 0) ? 1 : 0;
        case PrimeKind::Ramified: return 1;
    }
    return 0;
}

std::uint64_t ideal_count(const FieldParams& f, std::uint64_t m) {
    std::uint64_t total = 1;
    for (const auto& nf : classify_factorization(f, m)) {
        total *= ideal_count_prime_power(nf.kind, nf.e);
        if (total == 0) return 0;
    }
    return total;
}

std::uint64_t predicted_shell_size(const FieldParams& f, std::uint64_t m) {
    return (std::uint64_t)f.w * ideal_count(f, m);
}

} // namespace iqlat
