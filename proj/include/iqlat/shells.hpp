#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "iqlat/qfield.hpp"

namespace iqlat {

// All lattice elements of one norm, sorted lexicographically by (b, a).
struct Shell {
    std::uint64_t m = 0;
    std::vector<AlgInt> points;

    std::uint64_t size() const { return (std::uint64_t)points.size(); }
    bool empty() const { return points.empty(); }
};

// Theta series coefficients a(0..max_norm); a(0) = 1 for the origin.
struct ThetaTable {
    std::uint64_t max_norm = 0;
    std::vector<std::uint32_t> coeffs;
};

struct SweepOptions {
    unsigned threads = 0;                       // 0 = all cores
    std::uint64_t capacity = 100'000'000;       // largest max_norm the bulk sweep accepts
};

// Complete, duplicate-free enumeration of the norm-m shell: one bounded loop
// over b, solving the residual quadratic in a by exact integer square root.
// An empty shell is a normal result.
Shell enumerate_shell(const FieldParams& f, std::uint64_t m);

// Coefficient table by a single disk sweep, bucketed by norm. Parallelized
// over disjoint norm blocks; output is identical for every thread count.
// Throws CapacityExceededError when max_norm exceeds opt.capacity.
ThetaTable theta_coeffs(const FieldParams& f, std::uint64_t max_norm,
                        const SweepOptions& opt = {});

// CSV export: header "m,a_m", one row per coefficient.
void write_theta_csv(const ThetaTable& table, std::ostream& os);
std::string theta_csv(const ThetaTable& table);

} // namespace iqlat
