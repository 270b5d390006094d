#include "iqlat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "iqlat/parallel.hpp"
#include "iqlat/sweep.hpp"

namespace iqlat {

namespace {

constexpr std::uint64_t kBlock = 1u << 16;

struct BlockOutcome {
    std::uint64_t checked = 0;
    std::vector<SurveyViolation> violations;
};

} // namespace

SurveyResult survey_design_theorem(const FieldParams& f, std::uint64_t max_norm,
                                   const SweepOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    SurveyResult result;
    result.d = f.d;
    result.max_norm = max_norm;

    // First harmonic a unit-invariant shell can fail is t* = w: rotating by a
    // unit multiplies S_k by u^k, which kills every k not divisible by w.
    const int tstar = f.w;

    const std::uint64_t nblocks = (max_norm + kBlock - 1) / kBlock;
    std::vector<BlockOutcome> outcomes(nblocks);

    parallel_chunks(nblocks, opt.threads, [&](std::size_t idx) {
        const std::uint64_t lo = 1 + idx * kBlock;
        const std::uint64_t hi = std::min(max_norm, lo + kBlock - 1);
        const std::size_t span = (std::size_t)(hi - lo + 1);

        std::vector<AlgInt> sums(span * (std::size_t)tstar, AlgInt{0, 0});
        std::vector<std::uint32_t> counts(span, 0);

        scan_norm_range(f, lo, hi, [&](std::int64_t a, std::int64_t b, std::uint64_t norm) {
            const std::size_t slot = (std::size_t)(norm - lo);
            ++counts[slot];
            AlgInt* row = &sums[slot * (std::size_t)tstar];
            const AlgInt z{a, b};
            AlgInt zk = z;
            for (int k = 1; k <= tstar; ++k) {
                row[k - 1] = {checked_add(row[k - 1].a, zk.a), checked_add(row[k - 1].b, zk.b)};
                if (k < tstar) zk = f.mul(zk, z);
            }
        });

        BlockOutcome& out = outcomes[idx];
        const AlgInt zero{0, 0};
        for (std::size_t slot = 0; slot < span; ++slot) {
            if (counts[slot] == 0) continue;
            ++out.checked;
            const std::uint64_t m = lo + slot;
            const AlgInt* row = &sums[slot * (std::size_t)tstar];
            for (int k = 1; k < tstar; ++k)
                if (row[k - 1] != zero) out.violations.push_back({m, k, row[k - 1]});
            if (row[tstar - 1] == zero) out.violations.push_back({m, tstar, zero});
        }
    });

    for (const BlockOutcome& out : outcomes) {
        result.checked += out.checked;
        result.violations.insert(result.violations.end(), out.violations.begin(),
                                 out.violations.end());
    }
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

MultiplicativityResult verify_multiplicativity(const FieldParams& f, std::uint64_t max_product,
                                               const SweepOptions& opt) {
    MultiplicativityResult result;
    result.d = f.d;
    result.max_product = max_product;

    const ThetaTable theta = theta_coeffs(f, max_product, opt);
    const std::uint64_t w = (std::uint64_t)f.w;

    // a'(mn) = a'(m) a'(n) with a' = a/w, checked cross-multiplied so a
    // divisibility failure could not hide behind integer division.
    for (std::uint64_t m = 2; m * m <= max_product; ++m) {
        for (std::uint64_t n = m + 1; m * n <= max_product; ++n) {
            if (std::gcd(m, n) != 1) continue;
            ++result.checked_pairs;
            const std::uint64_t a_mn = theta.coeffs[m * n];
            const std::uint64_t a_m = theta.coeffs[m];
            const std::uint64_t a_n = theta.coeffs[n];
            if (w * a_mn != a_m * a_n) result.violations.push_back({m, n, a_mn, a_m, a_n});
        }
    }
    return result;
}

CountFormulaResult verify_count_formula(const FieldParams& f, std::uint64_t max_norm,
                                        const SweepOptions& opt) {
    CountFormulaResult result;
    result.d = f.d;
    result.max_norm = max_norm;

    const ThetaTable theta = theta_coeffs(f, max_norm, opt);
    for (std::uint64_t m = 1; m <= max_norm; ++m) {
        const std::uint64_t enumerated = theta.coeffs[m];
        const std::uint64_t predicted = predicted_shell_size(f, m);
        if (enumerated != predicted) result.violations.push_back({m, enumerated, predicted});
    }
    return result;
}

CalcutResult verify_calcut(const FieldParams& f, std::int64_t box, unsigned max_power,
                           const SweepOptions& opt) {
    CalcutResult result;
    result.d = f.d;
    result.box = box;
    result.max_power = max_power;

    const ArgClass admissible = (f.d == 1)   ? ArgClass::MultipleOfQuarterPi
                                : (f.d == 3) ? ArgClass::MultipleOfSixthPi
                                             : ArgClass::MultipleOfHalfPi;
    const unsigned forced = (unsigned)f.w;   // z^w is real on every admissible ray

    // One row of the box per work item; rows are merged in order.
    const std::size_t rows = (std::size_t)(2 * box + 1);
    std::vector<std::vector<CalcutCounterexample>> found(rows);
    std::vector<std::uint64_t> row_checked(rows, 0);

    parallel_chunks(rows, opt.threads, [&](std::size_t row) {
        const std::int64_t a = -box + (std::int64_t)row;
        for (std::int64_t b = -box; b <= box; ++b) {
            if (a == 0 && b == 0) continue;
            ++row_checked[row];
            const AlgInt z{a, b};
            const ArgClass cls = f.arg_class(z);

            unsigned real_power = 0;
            AlgInt zn = z;
            for (unsigned n = 1; n <= max_power; ++n) {
                if (n > 1) zn = f.mul(zn, z);
                if (is_real(zn)) { real_power = n; break; }
            }
            if (real_power != 0 && cls == ArgClass::Generic)
                found[row].push_back({z, real_power});
            if (cls == admissible && !is_real(f.pow(z, forced)))
                found[row].push_back({z, forced});
        }
    });

    for (std::size_t row = 0; row < rows; ++row) {
        result.checked += row_checked[row];
        result.counterexamples.insert(result.counterexamples.end(), found[row].begin(),
                                      found[row].end());
    }
    return result;
}

SineProductResult verify_sine_product(const FieldParams& f, std::uint64_t max_norm,
                                      double tolerance, const SweepOptions& opt) {
    SineProductResult result;
    result.d = f.d;
    result.max_norm = max_norm;
    result.tolerance = tolerance;

    const unsigned t = (unsigned)f.w;
    const std::uint64_t nblocks = (max_norm + kBlock - 1) / kBlock;
    std::vector<SineProductResult> partial(nblocks);

    parallel_chunks(nblocks, opt.threads, [&](std::size_t idx) {
        const std::uint64_t lo = 1 + idx * kBlock;
        const std::uint64_t hi = std::min(max_norm, lo + kBlock - 1);
        for (std::uint64_t m = lo; m <= hi; ++m) {
            bool valid = true;
            for (const NormFactor& nf : classify_factorization(f, m)) {
                if (nf.kind == PrimeKind::Ramified ||
                    (nf.kind == PrimeKind::Inert && nf.e % 2 != 0)) {
                    valid = false;
                    break;
                }
            }
            if (!valid) continue;
            ++partial[idx].checked;

            const Shell shell = enumerate_shell(f, m);
            const AlgInt st = power_sum(f, shell, t);
            const double exact =
                f.re(st) / ((double)shell.size() * std::pow((double)m, (double)t / 2.0));
            const double analytic = analytic_moment(f, m, t);
            if (std::abs(analytic - exact) > tolerance)
                partial[idx].violations.push_back({m, analytic, exact});
        }
    });

    for (const SineProductResult& p : partial) {
        result.checked += p.checked;
        result.violations.insert(result.violations.end(), p.violations.begin(),
                                 p.violations.end());
    }
    return result;
}

} // namespace iqlat
