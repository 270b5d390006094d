#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "iqlat/arith.hpp"
#include "iqlat/shells.hpp"

namespace iqlat {

struct PowerSumEntry {
    int k = 0;
    AlgInt value;
};

// Exact design diagnosis of one shell. strength is the largest t <= t_max
// with S_1 = ... = S_t = 0; the verdict is purely integer arithmetic.
// analytic_residual compares S_w / (a(m) m^{w/2}) against the sine-ratio
// product and is present whenever m has no ramified prime factor.
struct DesignReport {
    std::int64_t d = 0;
    std::uint64_t m = 0;
    std::uint64_t shell_size = 0;
    std::vector<PowerSumEntry> power_sums;   // k = 1..t_max
    int strength = 0;
    std::optional<double> analytic_residual;
};

// Minimal argument over the norm-p^e shell of a split prime, phi in (0, 2pi).
struct SplitAngleData {
    std::uint64_t p = 0;
    unsigned e = 1;
    double phi = 0.0;
};

// Exact S_k = sum of z^k over the shell. Empty shell gives (0, 0).
AlgInt power_sum(const FieldParams& f, const Shell& shell, unsigned k);

// Throws EmptyShellError when a(m) = 0.
DesignReport design_strength(const FieldParams& f, std::uint64_t m, int t_max = 8);

// Throws NotSplitError unless p is split in the field.
SplitAngleData min_split_angle(const FieldParams& f, std::uint64_t p);

// Normalized power sum of the norm-m shell predicted analytically:
//   prod over split p^a || m of sin(t(1+a)phi_p) / ((1+a) sin(t phi_p)),
// the empty product being 1. Valid for harmonics t divisible by w and for m
// whose factorization is split / even-inert only; anything else throws
// DomainError (reduce m first).
double analytic_moment(const FieldParams& f, std::uint64_t m, unsigned t);

// Checks that the arguments of the norm-p^e shell form the arithmetic
// progression {j phi : |j| <= e, j = e (mod 2)} translated by the w unit
// angles, within tol, and that the count is w(1+e).
bool arg_progression_check(const FieldParams& f, std::uint64_t p, unsigned e,
                           double tol = 1e-9);

} // namespace iqlat
