#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "iqlat/errors.hpp"

namespace iqlat {

// All element coordinates are signed 128-bit. Every ring operation is
// overflow-checked: results that do not fit throw OverflowError instead of
// wrapping. 128 bits cover everything the survey and verification ranges
// need (e.g. 12th powers over the |a|,|b| <= 50 box peak near 10^30).
using Int128 = __int128;

std::string int128_str(Int128 x);

inline Int128 checked_add(Int128 x, Int128 y) {
    Int128 r;
    if (__builtin_add_overflow(x, y, &r)) throw OverflowError("128-bit overflow in addition");
    return r;
}

inline Int128 checked_sub(Int128 x, Int128 y) {
    Int128 r;
    if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("128-bit overflow in subtraction");
    return r;
}

inline Int128 checked_mul(Int128 x, Int128 y) {
    Int128 r;
    if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("128-bit overflow in multiplication");
    return r;
}

// Basis of the ring of integers Z + Z*theta of Q(sqrt(-d)):
// theta = sqrt(-d) when -d = 2,3 (mod 4), theta = (1+sqrt(-d))/2 when -d = 1 (mod 4).
enum class BasisCase { SqrtCase, HalfCase };

enum class ArgClass { MultipleOfQuarterPi, MultipleOfSixthPi, MultipleOfHalfPi, Generic };

const char* to_string(ArgClass c);

// Element a + b*theta in integer coordinates.
struct AlgInt {
    Int128 a = 0;
    Int128 b = 0;

    friend bool operator==(const AlgInt&, const AlgInt&) = default;
};

// Shell enumeration order: lexicographic by (b, a).
inline bool operator<(const AlgInt& x, const AlgInt& y) {
    if (x.b != y.b) return x.b < y.b;
    return x.a < y.a;
}

std::ostream& operator<<(std::ostream& os, const AlgInt& z);

inline bool is_real(const AlgInt& z) { return z.b == 0; }

// One of the nine imaginary quadratic fields Q(sqrt(-d)) with class number one,
// packaged as its rank-2 integer lattice. Immutable once built; all member
// operations are pure, so values can be shared freely across threads.
struct FieldParams {
    std::int64_t d = 0;            // Q(sqrt(-d))
    std::int64_t disc = 0;         // field discriminant, -4d or -d
    BasisCase basis = BasisCase::SqrtCase;
    int w = 0;                     // number of units (4, 6, or 2)
    std::vector<AlgInt> units;
    std::int64_t half_c = 0;       // (1+d)/4 in the HalfCase, unused otherwise

    AlgInt mul(const AlgInt& x, const AlgInt& y) const;
    AlgInt conj(const AlgInt& z) const;
    Int128 norm(const AlgInt& z) const;
    AlgInt pow(AlgInt z, unsigned n) const;

    // Exact classification of arg(z) against the field's admissible angle
    // class (pi/4 for d=1, pi/6 for d=3, pi/2 otherwise). Throws ZeroElementError
    // on z = 0.
    ArgClass arg_class(const AlgInt& z) const;

    // Real embedding into C with theta in the upper half plane.
    double re(const AlgInt& z) const;
    double im(const AlgInt& z) const;
    // Argument normalized to [0, 2*pi), counterclockwise from the positive real axis.
    double arg(const AlgInt& z) const;
};

FieldParams make_field(std::int64_t d);

// The nine supported d values, ascending.
const std::array<std::int64_t, 9>& supported_fields();

} // namespace iqlat
