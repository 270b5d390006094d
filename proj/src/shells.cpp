#include "iqlat/shells.hpp"

#include <ostream>
#include <sstream>

#include "iqlat/parallel.hpp"
#include "iqlat/sweep.hpp"

namespace iqlat {

Shell enumerate_shell(const FieldParams& f, std::uint64_t m) {
    Shell shell;
    shell.m = m;
    if (m == 0) return shell;
    const std::uint64_t d = (std::uint64_t)f.d;

    if (f.basis == BasisCase::SqrtCase) {
        // a^2 = m - d b^2 must be a perfect square
        const std::int64_t bmax = (std::int64_t)floor_isqrt(m / d);
        for (std::int64_t b = -bmax; b <= bmax; ++b) {
            const std::uint64_t rem = m - d * (std::uint64_t)(b * b);
            std::uint64_t r;
            if (!is_square(rem, r)) continue;
            if (r == 0) {
                if (b != 0) shell.points.push_back({0, b});
            } else {
                shell.points.push_back({-(Int128)r, b});
                shell.points.push_back({(Int128)r, b});
            }
        }
        return shell;
    }

    // (2a+b)^2 = 4m - d b^2 must be a perfect square; the parity constraint
    // 2a+b = b (mod 2) holds automatically because d is odd.
    const std::uint64_t m4 = 4 * m;
    const std::int64_t bmax = (std::int64_t)floor_isqrt(m4 / d);
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
        const std::uint64_t rem = m4 - d * (std::uint64_t)(b * b);
        std::uint64_t r;
        if (!is_square(rem, r)) continue;
        const std::int64_t s = (std::int64_t)r;
        if (((s - b) & 1) != 0) continue;
        if (s == 0) {
            if (b != 0) shell.points.push_back({-b / 2, b});
        } else {
            shell.points.push_back({(-s - b) / 2, b});
            shell.points.push_back({(s - b) / 2, b});
        }
    }
    return shell;
}

ThetaTable theta_coeffs(const FieldParams& f, std::uint64_t max_norm, const SweepOptions& opt) {
    if (max_norm > opt.capacity)
        throw CapacityExceededError("theta_coeffs: max_norm " + std::to_string(max_norm) +
                                    " exceeds capacity " + std::to_string(opt.capacity));
    ThetaTable table;
    table.max_norm = max_norm;
    table.coeffs.assign(max_norm + 1, 0);
    table.coeffs[0] = 1;
    if (max_norm == 0) return table;

    // Disjoint norm blocks; each block fills its own slice of the table.
    constexpr std::uint64_t kBlock = 1u << 16;
    const std::uint64_t nblocks = (max_norm + kBlock - 1) / kBlock;
    std::uint32_t* counts = table.coeffs.data();
    parallel_chunks(nblocks, opt.threads, [&](std::size_t idx) {
        const std::uint64_t lo = 1 + idx * kBlock;
        const std::uint64_t hi = std::min(max_norm, lo + kBlock - 1);
        scan_norm_range(f, lo, hi,
                        [&](std::int64_t, std::int64_t, std::uint64_t norm) { ++counts[norm]; });
    });
    return table;
}

void write_theta_csv(const ThetaTable& table, std::ostream& os) {
    os << "m,a_m\n";
    for (std::uint64_t m = 0; m < table.coeffs.size(); ++m)
        os << m << ',' << table.coeffs[m] << '\n';
}

std::string theta_csv(const ThetaTable& table) {
    std::ostringstream oss;
    write_theta_csv(table, oss);
    return oss.str();
}

} // namespace iqlat
