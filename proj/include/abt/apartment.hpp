#pragma once

// The model apartment of the affine A2 Coxeter complex: translation vectors
// in root coordinates (alpha_1, alpha_2), the spherical Weyl group S_3, the
// dominance order and vertex-type shifts.
//
// Coordinates are root values throughout: v = (alpha_1(v), alpha_2(v)).

#include <array>
#include <cstdint>
#include <string>

#include "abt/error.hpp"

namespace abt {

struct Vec {
    int i = 0, j = 0;

    friend Vec operator+(Vec a, Vec b) { return {a.i + b.i, a.j + b.j}; }
    friend Vec operator-(Vec a, Vec b) { return {a.i - b.i, a.j - b.j}; }
    friend Vec operator-(Vec a) { return {-a.i, -a.j}; }
    friend bool operator==(Vec a, Vec b) { return a.i == b.i && a.j == b.j; }
    friend bool operator!=(Vec a, Vec b) { return !(a == b); }
    friend bool operator<(Vec a, Vec b) { return a.i != b.i ? a.i < b.i : a.j < b.j; }
};

constexpr Vec t1{1, 0};
constexpr Vec t2{0, 1};

inline int length(Vec v) { return v.i + v.j; }

inline bool is_dominant(Vec v) { return v.i >= 0 && v.j >= 0; }
inline bool is_regular(Vec v) { return v.i > 0 && v.j > 0; }

inline std::string to_string(Vec v) {
    return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

enum class Weyl : std::uint8_t { e = 0, s1, s2, s1s2, s2s1, w0 };

constexpr std::array<Weyl, 6> weyl_elements{Weyl::e,    Weyl::s1,   Weyl::s2,
                                            Weyl::s1s2, Weyl::s2s1, Weyl::w0};

inline const char* weyl_name(Weyl w) {
    switch (w) {
        case Weyl::e: return "e";
        case Weyl::s1: return "s1";
        case Weyl::s2: return "s2";
        case Weyl::s1s2: return "s1s2";
        case Weyl::s2s1: return "s2s1";
        case Weyl::w0: return "w0";
    }
    return "?";
}

namespace detail {
// 2x2 matrices acting on (i,j) column vectors; s1s2 means s1 after s2
constexpr std::array<std::array<int, 4>, 6> weyl_mat{{
    {1, 0, 0, 1},     // e
    {-1, 0, 1, 1},    // s1
    {1, 1, 0, -1},    // s2
    {-1, -1, 1, 0},   // s1s2
    {0, 1, -1, -1},   // s2s1
    {0, -1, -1, 0},   // w0
}};
}  // namespace detail

inline Vec weyl_apply(Weyl w, Vec v) {
    const auto& m = detail::weyl_mat[static_cast<int>(w)];
    return {m[0] * v.i + m[1] * v.j, m[2] * v.i + m[3] * v.j};
}

// composition: (a*b)(v) = a(b(v))
inline Weyl weyl_mul(Weyl a, Weyl b) {
    const auto& ma = detail::weyl_mat[static_cast<int>(a)];
    const auto& mb = detail::weyl_mat[static_cast<int>(b)];
    std::array<int, 4> p{ma[0] * mb[0] + ma[1] * mb[2], ma[0] * mb[1] + ma[1] * mb[3],
                         ma[2] * mb[0] + ma[3] * mb[2], ma[2] * mb[1] + ma[3] * mb[3]};
    for (Weyl w : weyl_elements)
        if (detail::weyl_mat[static_cast<int>(w)] == p) return w;
    fail(errc::bad_argument, "weyl_mul: product is not a Weyl element");
}

inline Weyl weyl_inv(Weyl a) {
    for (Weyl w : weyl_elements)
        if (weyl_mul(a, w) == Weyl::e) return w;
    fail(errc::bad_argument, "weyl_inv: no inverse");
}

// the dominant representative of the W-orbit of v
inline Vec dominant(Vec v) {
    for (Weyl w : weyl_elements) {
        Vec u = weyl_apply(w, v);
        if (is_dominant(u)) return u;
    }
    fail(errc::bad_argument, "dominant: orbit misses the dominant cone");  // unreachable
}

// graph distance from 0 to v in the 1-skeleton of the model apartment
inline int sigma_dist(Vec v) { return length(dominant(v)); }

enum class Dominance { less, greater, equal, incomparable };

inline Dominance dominance_order(Vec a, Vec b) {
    Vec d = a - b;
    if (d.i == 0 && d.j == 0) return Dominance::equal;
    if (d.i >= 0 && d.j >= 0) return Dominance::greater;
    if (d.i <= 0 && d.j <= 0) return Dominance::less;
    return Dominance::incomparable;
}

// vertex-type offset mod 3 induced by translating by v; t1 shifts by +1 and
// t2 by +2 (a fixed convention, consistent across all modules)
inline int type_shift(Vec v) {
    int t = (v.i + 2 * v.j) % 3;
    return t < 0 ? t + 3 : t;
}

}  // namespace abt
