#pragma once

#include <cmath>
#include <cstdint>

#include "iqlat/qfield.hpp"

namespace iqlat {

// Exact integer square roots. std::sqrt seeds the value; the correction loops
// remove any rounding at perfect-square boundaries.
inline std::uint64_t floor_isqrt(std::uint64_t x) {
    std::uint64_t r = (std::uint64_t)std::sqrt((double)x);
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

inline std::uint64_t ceil_isqrt(std::uint64_t x) {
    const std::uint64_t r = floor_isqrt(x);
    return r * r == x ? r : r + 1;
}

inline bool is_square(std::uint64_t x, std::uint64_t& root) {
    root = floor_isqrt(x);
    return root * root == x;
}

// Visits every nonzero lattice point z = a + b*theta with lo <= N(z) <= hi,
// calling fn(a, b, norm). One row per b; within a row the positive and
// negative branches of the residual quadratic are walked directly, so the
// scan does O(points + rows) work with no floating-point boundary tests.
//
// This is the bulk path. enumerate_shell (shells.hpp) solves single norms
// independently; the two are kept separate so they can cross-check each other.
template <class F>
void scan_norm_range(const FieldParams& f, std::uint64_t lo, std::uint64_t hi, F&& fn) {
    if (lo == 0) lo = 1;
    if (hi < lo) return;
    if (hi > ((std::uint64_t)1 << 60))
        throw CapacityExceededError("scan_norm_range: norm bound too large");
    const std::uint64_t d = (std::uint64_t)f.d;

    if (f.basis == BasisCase::SqrtCase) {
        // norm = a^2 + d b^2
        const std::int64_t bmax = (std::int64_t)floor_isqrt(hi / d);
        for (std::int64_t b = -bmax; b <= bmax; ++b) {
            const std::uint64_t db2 = d * (std::uint64_t)(b * b);
            const std::uint64_t rhi = hi - db2;
            const std::uint64_t amax = floor_isqrt(rhi);
            const std::uint64_t amin = (lo > db2) ? ceil_isqrt(lo - db2) : 0;
            for (std::uint64_t ua = amin; ua <= amax; ++ua) {
                const std::uint64_t norm = ua * ua + db2;
                const std::int64_t a = (std::int64_t)ua;
                if (a == 0) {
                    if (b != 0) fn((std::int64_t)0, b, norm);
                } else {
                    fn(a, b, norm);
                    fn(-a, b, norm);
                }
            }
        }
        return;
    }

    // HalfCase: 4*norm = s^2 + d b^2 with s = 2a + b, s = b (mod 2).
    const std::uint64_t lo4 = 4 * lo, hi4 = 4 * hi;
    const std::int64_t bmax = (std::int64_t)floor_isqrt(hi4 / d);
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
        const std::uint64_t db2 = d * (std::uint64_t)(b * b);
        const std::uint64_t rhi = hi4 - db2;
        std::uint64_t smin = (lo4 > db2) ? ceil_isqrt(lo4 - db2) : 0;
        const std::uint64_t smax = floor_isqrt(rhi);
        const std::uint64_t parity = (std::uint64_t)(b & 1);
        if ((smin & 1) != parity) ++smin;
        for (std::uint64_t us = smin; us <= smax; us += 2) {
            const std::uint64_t norm = (us * us + db2) / 4;
            const std::int64_t s = (std::int64_t)us;
            if (s == 0) {
                if (b != 0) fn(-b / 2, b, norm);
            } else {
                fn((s - b) / 2, b, norm);
                fn((-s - b) / 2, b, norm);
            }
        }
    }
}

} // namespace iqlat
