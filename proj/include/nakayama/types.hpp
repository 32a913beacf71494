#pragma once

#include <string>

namespace nakayama {

// Homogeneous acyclic Nakayama algebra KQ_m/(rad KQ_m)^l.  The quiver Q_m is
// m -> m-1 -> ... -> 2 -> 1, so arrows run from higher to lower vertex index
// and vertex 1 is the unique sink.  Valid instances satisfy m >= 2 and
// 2 <= l <= m-1; construct through make_algebra.
struct Algebra {
    int m = 0;  // number of vertices
    int l = 0;  // nilpotency degree of the radical

    friend bool operator==(const Algebra&, const Algebra&) = default;
};

// Interval module M(i,j): socle at vertex i, support {i, ..., i+j-1}, top at
// vertex i+j-1.  The pair (0,0) is the distinguished zero module; formulas
// that leave the valid coordinate range clamp to it.
struct ModCoord {
    int i = 0;
    int j = 0;

    bool is_zero() const { return i == 0 && j == 0; }
    static constexpr ModCoord zero() { return {}; }

    friend bool operator==(const ModCoord&, const ModCoord&) = default;
};

// Canonical order: length j ascending, then socle i ascending.  All module
// enumerations and set outputs follow it, which keeps exports byte-stable.
inline bool operator<(ModCoord a, ModCoord b)
{
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
}

std::string to_string(ModCoord x);

Algebra make_algebra(int m, int l);

// Whether M(i,j) is a nonzero module over alg, i.e. 1 <= i, 1 <= j <= l and
// i+j <= m+1.
bool coord_valid(const Algebra& alg, long long i, long long j);

// M(i,j) when valid, otherwise the zero module.
ModCoord clamp_coord(const Algebra& alg, long long i, long long j);

}  // namespace nakayama
