#include "iqlat/qfield.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <ostream>

namespace iqlat {

std::string int128_str(Int128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    // Peel digits from the magnitude; unsigned avoids UB at the minimum value.
    unsigned __int128 u = neg ? -(unsigned __int128)x : (unsigned __int128)x;
    std::string s;
    while (u) {
        s += char('0' + (unsigned)(u % 10));
        u /= 10;
    }
    if (neg) s += '-';
    std::reverse(s.begin(), s.end());
    return s;
}

const char* to_string(ArgClass c) {
    switch (c) {
        case ArgClass::MultipleOfQuarterPi: return "quarter_pi";
        case ArgClass::MultipleOfSixthPi: return "sixth_pi";
        case ArgClass::MultipleOfHalfPi: return "half_pi";
        case ArgClass::Generic: return "generic";
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, const AlgInt& z) {
    return os << "(" << int128_str(z.a) << ", " << int128_str(z.b) << ")";
}

AlgInt FieldParams::mul(const AlgInt& x, const AlgInt& y) const {
    const Int128 aa = checked_mul(x.a, y.a);
    const Int128 bb = checked_mul(x.b, y.b);
    const Int128 cross = checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a));
    if (basis == BasisCase::SqrtCase) {
        // theta^2 = -d
        return {checked_sub(aa, checked_mul(bb, d)), cross};
    }
    // theta^2 = theta - (1+d)/4
    return {checked_sub(aa, checked_mul(bb, half_c)), checked_add(cross, bb)};
}

AlgInt FieldParams::conj(const AlgInt& z) const {
    if (basis == BasisCase::SqrtCase) return {z.a, checked_sub(0, z.b)};
    // conj(theta) = 1 - theta
    return {checked_add(z.a, z.b), checked_sub(0, z.b)};
}

Int128 FieldParams::norm(const AlgInt& z) const {
    if (basis == BasisCase::SqrtCase) {
        // a^2 + d b^2
        return checked_add(checked_mul(z.a, z.a), checked_mul(checked_mul(z.b, z.b), d));
    }
    // a^2 + ab + b^2 (1+d)/4
    const Int128 quad = checked_mul(checked_mul(z.b, z.b), half_c);
    return checked_add(checked_add(checked_mul(z.a, z.a), checked_mul(z.a, z.b)), quad);
}

AlgInt FieldParams::pow(AlgInt z, unsigned n) const {
    AlgInt acc{1, 0};
    while (n) {
        if (n & 1u) acc = mul(acc, z);
        n >>= 1u;
        if (n) z = mul(z, z);
    }
    return acc;
}

ArgClass FieldParams::arg_class(const AlgInt& z) const {
    if (z.a == 0 && z.b == 0) throw ZeroElementError("arg_class: zero element");
    const Int128 a = z.a, b = z.b;
    if (d == 1) {
        const Int128 aa = a < 0 ? -a : a;
        const Int128 ab = b < 0 ? -b : b;
        if (a == 0 || b == 0 || aa == ab) return ArgClass::MultipleOfQuarterPi;
        return ArgClass::Generic;
    }
    if (d == 3) {
        // tan(arg z) = sqrt(3) b / (2a+b); the six pi/6 rays are
        // tan = 0, +-1/sqrt3, +-sqrt3, infinity.
        if (b == 0 || a == 0 || a == b || a + b == 0 || a + 2 * b == 0 || 2 * a + b == 0)
            return ArgClass::MultipleOfSixthPi;
        return ArgClass::Generic;
    }
    const bool pure_imag = (basis == BasisCase::SqrtCase) ? (a == 0) : (2 * a + b == 0);
    if (b == 0 || pure_imag) return ArgClass::MultipleOfHalfPi;
    return ArgClass::Generic;
}

double FieldParams::re(const AlgInt& z) const {
    if (basis == BasisCase::SqrtCase) return (double)z.a;
    return (double)z.a + 0.5 * (double)z.b;
}

double FieldParams::im(const AlgInt& z) const {
    const double root = std::sqrt((double)d);
    if (basis == BasisCase::SqrtCase) return (double)z.b * root;
    return 0.5 * (double)z.b * root;
}

double FieldParams::arg(const AlgInt& z) const {
    double a = std::atan2(im(z), re(z));
    if (a < 0) a += 2.0 * std::numbers::pi;
    if (a >= 2.0 * std::numbers::pi) a = 0.0;
    return a;
}

namespace {

std::vector<AlgInt> unit_list(std::int64_t d) {
    if (d == 1) return {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    if (d == 3) {
        // powers of theta = (1+sqrt(-3))/2, a primitive 6th root of unity
        return {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    }
    return {{1, 0}, {-1, 0}};
}

} // namespace

const std::array<std::int64_t, 9>& supported_fields() {
    static const std::array<std::int64_t, 9> k = {1, 2, 3, 7, 11, 19, 43, 67, 163};
    return k;
}

FieldParams make_field(std::int64_t d) {
    const auto& ok = supported_fields();
    if (std::find(ok.begin(), ok.end(), d) == ok.end())
        throw UnsupportedFieldError("unsupported field d=" + std::to_string(d) +
                                    " (need square-free d with class number one: "
                                    "1, 2, 3, 7, 11, 19, 43, 67, 163)");
    FieldParams f;
    f.d = d;
    // -d = 1 (mod 4) <=> d = 3 (mod 4)
    if (d % 4 == 3) {
        f.basis = BasisCase::HalfCase;
        f.disc = -d;
        f.half_c = (1 + d) / 4;
    } else {
        f.basis = BasisCase::SqrtCase;
        f.disc = -4 * d;
        f.half_c = 0;
    }
    f.w = (d == 1) ? 4 : (d == 3) ? 6 : 2;
    f.units = unit_list(d);
    return f;
}

} // namespace iqlat
