#include "iqlat/designs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace iqlat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double real_value(const FieldParams& f, const AlgInt& z) {
    // Conjugation symmetry of shells forces power sums onto the real axis.
    return f.re(z);
}

} // namespace

AlgInt power_sum(const FieldParams& f, const Shell& shell, unsigned k) {
    AlgInt sum{0, 0};
    for (const AlgInt& z : shell.points) {
        const AlgInt zk = f.pow(z, k);
        sum = {checked_add(sum.a, zk.a), checked_add(sum.b, zk.b)};
    }
    return sum;
}

DesignReport design_strength(const FieldParams& f, std::uint64_t m, int t_max) {
    const Shell shell = enumerate_shell(f, m);
    if (shell.empty())
        throw EmptyShellError("design_strength: shell of norm " + std::to_string(m) +
                              " is empty for d=" + std::to_string(f.d));

    DesignReport report;
    report.d = f.d;
    report.m = m;
    report.shell_size = shell.size();
    report.power_sums.reserve((std::size_t)t_max);

    // Incremental powers: one multiplication per point per harmonic.
    std::vector<AlgInt> sums((std::size_t)t_max, AlgInt{0, 0});
    for (const AlgInt& z : shell.points) {
        AlgInt zk = z;
        for (int k = 1; k <= t_max; ++k) {
            sums[(std::size_t)k - 1] = {checked_add(sums[(std::size_t)k - 1].a, zk.a),
                                        checked_add(sums[(std::size_t)k - 1].b, zk.b)};
            if (k < t_max) zk = f.mul(zk, z);
        }
    }
    const AlgInt zero{0, 0};
    int strength = t_max;
    for (int k = 1; k <= t_max; ++k) {
        report.power_sums.push_back({k, sums[(std::size_t)k - 1]});
        if (strength == t_max && sums[(std::size_t)k - 1] != zero) strength = k - 1;
    }
    report.strength = strength;

    const auto factors = classify_factorization(f, m);
    const bool ramified_free = std::none_of(
        factors.begin(), factors.end(),
        [](const NormFactor& nf) { return nf.kind == PrimeKind::Ramified; });
    if (ramified_free) {
        const unsigned t = (unsigned)f.w;
        const AlgInt st = power_sum(f, shell, t);
        const double exact =
            real_value(f, st) / ((double)shell.size() * std::pow((double)m, (double)t / 2.0));
        report.analytic_residual = std::abs(analytic_moment(f, m, t) - exact);
    }
    return report;
}

SplitAngleData min_split_angle(const FieldParams& f, std::uint64_t p) {
    const PrimeSplit ps = classify_prime(f, p);
    if (ps.kind != PrimeKind::Split)
        throw NotSplitError("min_split_angle: " + std::to_string(p) + " is " +
                            to_string(ps.kind) + " in d=" + std::to_string(f.d));
    const Shell shell = enumerate_shell(f, p);
    double best = kTwoPi;
    std::size_t hits = 0;
    for (const AlgInt& z : shell.points) {
        const double a = f.arg(z);
        if (a < best - 1e-12) {
            best = a;
            hits = 1;
        } else if (a < best + 1e-12) {
            ++hits;
        }
    }
    // Distinct points of one norm have distinct arguments, so the minimum is
    // attained exactly once.
    if (hits != 1)
        throw Error("min_split_angle: tie at p=" + std::to_string(p) +
                    " (this cannot happen for a split prime)");
    return {p, 1, best};
}

double analytic_moment(const FieldParams& f, std::uint64_t m, unsigned t) {
    if (t == 0 || t % (unsigned)f.w != 0)
        throw DomainError("analytic_moment: harmonic t=" + std::to_string(t) +
                          " is not a positive multiple of w=" + std::to_string(f.w));
    double product = 1.0;
    for (const NormFactor& nf : classify_factorization(f, m)) {
        switch (nf.kind) {
            case PrimeKind::Ramified:
                throw DomainError("analytic_moment: m=" + std::to_string(m) +
                                  " has ramified factor " + std::to_string(nf.p));
            case PrimeKind::Inert:
                if (nf.e % 2 != 0)
                    throw DomainError("analytic_moment: m=" + std::to_string(m) +
                                      " has odd inert exponent at " + std::to_string(nf.p));
                break;  // even inert powers contribute 1
            case PrimeKind::Split: {
                const double phi = min_split_angle(f, nf.p).phi;
                const double denom = (double)(1 + nf.e) * std::sin((double)t * phi);
                if (std::abs(denom) < 1e-12)
                    throw Error("analytic_moment: degenerate angle at p=" + std::to_string(nf.p));
                product *= std::sin((double)t * (double)(1 + nf.e) * phi) / denom;
                break;
            }
        }
    }
    return product;
}

bool arg_progression_check(const FieldParams& f, std::uint64_t p, unsigned e, double tol) {
    const double phi = min_split_angle(f, p).phi;  // throws NotSplitError if not split

    std::uint64_t pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    const Shell shell = enumerate_shell(f, pe);

    std::vector<double> actual;
    actual.reserve(shell.points.size());
    for (const AlgInt& z : shell.points) actual.push_back(f.arg(z));
    std::sort(actual.begin(), actual.end());

    std::vector<double> expected;
    expected.reserve((std::size_t)f.w * (e + 1));
    const double unit_step = kTwoPi / (double)f.w;
    for (int j = -(int)e; j <= (int)e; j += 2) {
        for (int l = 0; l < f.w; ++l) {
            double a = std::fmod((double)j * phi + (double)l * unit_step, kTwoPi);
            if (a < 0) a += kTwoPi;
            expected.push_back(a);
        }
    }
    std::sort(expected.begin(), expected.end());

    if (actual.size() != expected.size()) return false;
    if (actual.size() != (std::size_t)f.w * (e + 1)) return false;

    // Sorted circular sets match iff one is a rotation of the other; the
    // offset can only shift by wrap-around near 0 / 2pi.
    const std::size_t n = actual.size();
    auto circ_dist = [](double x, double y) {
        double delta = std::abs(x - y);
        return std::min(delta, kTwoPi - delta);
    };
    for (std::size_t offset = 0; offset < n; ++offset) {
        if (circ_dist(expected[0], actual[offset]) > tol) continue;
        bool all = true;
        for (std::size_t i = 0; i < n && all; ++i)
            all = circ_dist(expected[i], actual[(i + offset) % n]) <= tol;
        if (all) return true;
    }
    return false;
}

} // namespace iqlat
