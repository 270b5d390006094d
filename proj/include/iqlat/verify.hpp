#pragma once

#include <cstdint>
#include <vector>

#include "iqlat/designs.hpp"

namespace iqlat {

// Violations are collected and reported, never thrown: every harness doubles
// as a research instrument in case a range ever exposes an anomaly.

struct SurveyViolation {
    std::uint64_t m = 0;
    int k = 0;           // offending harmonic
    AlgInt value;        // S_k(m)
};

struct SurveyResult {
    std::int64_t d = 0;
    std::uint64_t max_norm = 0;
    std::uint64_t checked = 0;   // nonempty shells examined
    std::vector<SurveyViolation> violations;
    double elapsed_seconds = 0.0;
};

struct MultiplicativityViolation {
    std::uint64_t m = 0, n = 0;
    std::uint64_t a_mn = 0;
    std::uint64_t a_m = 0;
    std::uint64_t a_n = 0;
};

struct MultiplicativityResult {
    std::int64_t d = 0;
    std::uint64_t max_product = 0;
    std::uint64_t checked_pairs = 0;
    std::vector<MultiplicativityViolation> violations;
};

struct CountFormulaViolation {
    std::uint64_t m = 0;
    std::uint64_t enumerated = 0;   // a(m) from the sweep
    std::uint64_t predicted = 0;    // w F(m)
};

struct CountFormulaResult {
    std::int64_t d = 0;
    std::uint64_t max_norm = 0;
    std::vector<CountFormulaViolation> violations;
};

struct CalcutCounterexample {
    AlgInt z;
    unsigned n = 0;
};

struct CalcutResult {
    std::int64_t d = 0;
    std::int64_t box = 0;
    unsigned max_power = 0;
    std::uint64_t checked = 0;
    std::vector<CalcutCounterexample> counterexamples;
};

struct SineProductViolation {
    std::uint64_t m = 0;
    double analytic = 0.0;
    double exact = 0.0;
};

struct SineProductResult {
    std::int64_t d = 0;
    std::uint64_t max_norm = 0;
    double tolerance = 0.0;
    std::uint64_t checked = 0;
    std::vector<SineProductViolation> violations;
};

// Exhaustive design survey over 1 <= m <= max_norm: every nonempty shell must
// have S_1 = ... = S_{w-1} = 0 and S_w != 0, i.e. strength exactly w - 1.
// Power sums accumulate during a single disk sweep over disjoint norm blocks.
SurveyResult survey_design_theorem(const FieldParams& f, std::uint64_t max_norm,
                                   const SweepOptions& opt = {});

// a'(mn) = a'(m) a'(n) for coprime pairs with mn <= max_product, where
// a' = a/w comes from the enumeration path.
MultiplicativityResult verify_multiplicativity(const FieldParams& f, std::uint64_t max_product,
                                               const SweepOptions& opt = {});

// a(m) = w F(m) for all m <= max_norm (sweep path vs formula path).
CountFormulaResult verify_count_formula(const FieldParams& f, std::uint64_t max_norm,
                                        const SweepOptions& opt = {});

// Exhaustive biconditional over the box |a|, |b| <= box: z has a real power
// with exponent <= max_power iff arg z lies in the field's admissible class,
// and an admissible z must have z^w real. All checks are exact.
CalcutResult verify_calcut(const FieldParams& f, std::int64_t box, unsigned max_power,
                           const SweepOptions& opt = {});

// |analytic_moment(m, w) - S_w(m)/(a(m) m^{w/2})| <= tolerance for every
// m <= max_norm whose factorization is split / even-inert only.
SineProductResult verify_sine_product(const FieldParams& f, std::uint64_t max_norm,
                                      double tolerance = 1e-9, const SweepOptions& opt = {});

} // namespace iqlat
