#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "abt/apartment.hpp"

using namespace abt;

namespace {

// Euclidean oracle for the reflection action: realize the simple roots of A2
// at 120 degrees in the plane, reflect with actual vector geometry, and read
// the result back in root coordinates. Independent of the integer matrices
// used by the implementation.
struct R2 {
    double x, y;
};

Vec euclid_reflect(int which, Vec v) {
    // coroot basis: a1* = (1,0), a2* = (-1/2, sqrt(3)/2); v = i*w1 + j*w2
    // where the fundamental coweights satisfy <alpha_i, w_j> = delta_ij.
    const R2 a1{1.0, 0.0};
    const R2 a2{-0.5, std::sqrt(3.0) / 2.0};
    // fundamental coweights dual to (a1, a2) under the standard inner product
    // scaled so alpha_i(x) = 2 <x, a_i>/<a_i, a_i> = <x, a_i> * 2 (unit roots)
    auto dot = [](R2 u, R2 w) { return u.x * w.x + u.y * w.y; };
    // solve for w1, w2 with alpha_i(w_j) = delta_ij where alpha_i(x) = 2 dot(x, a_i)
    // 2x2 linear solve
    double m[2][2] = {{2 * dot(a1, a1), 2 * dot(a2, a1)}, {2 * dot(a1, a2), 2 * dot(a2, a2)}};
    // w1 = u*a1 + v*a2 with m * (u,v) = (1,0); w2 similarly (0,1)
    double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    double u1 = m[1][1] / det, v1 = -m[1][0] / det;
    double u2 = -m[0][1] / det, v2 = m[0][0] / det;
    R2 w1{u1 * a1.x + v1 * a2.x, u1 * a1.y + v1 * a2.y};
    R2 w2{u2 * a1.x + v2 * a2.x, u2 * a1.y + v2 * a2.y};
    R2 p{v.i * w1.x + v.j * w2.x, v.i * w1.y + v.j * w2.y};
    R2 a = which == 1 ? a1 : a2;
    double c = 2 * dot(p, a) / dot(a, a);
    R2 r{p.x - c * a.x, p.y - c * a.y};
    // read back alpha values
    double ri = 2 * dot(r, a1), rj = 2 * dot(r, a2);
    return {static_cast<int>(std::lround(ri)), static_cast<int>(std::lround(rj))};
}

}  // namespace

TEST_CASE("length") {
    CHECK(length(Vec{2, 3}) == 5);
    CHECK(length(Vec{0, 0}) == 0);
    CHECK(length(Vec{-1, 2}) == 1);
}

TEST_CASE("reflections match the Euclidean oracle") {
    for (int i = -4; i <= 4; ++i)
        for (int j = -4; j <= 4; ++j) {
            Vec v{i, j};
            CHECK(weyl_apply(Weyl::s1, v) == euclid_reflect(1, v));
            CHECK(weyl_apply(Weyl::s2, v) == euclid_reflect(2, v));
            // w0 = s1 s2 s1 by the same oracle
            CHECK(weyl_apply(Weyl::w0, v) == euclid_reflect(1, euclid_reflect(2, euclid_reflect(1, v))));
        }
    CHECK(weyl_apply(Weyl::s1, Vec{1, 0}) == Vec{-1, 1});
    CHECK(weyl_apply(Weyl::e, Vec{5, -2}) == Vec{5, -2});
    CHECK(weyl_apply(Weyl::w0, Vec{2, 3}) == Vec{-3, -2});
}

TEST_CASE("S3 multiplication table holds") {
    for (Weyl a : weyl_elements)
        for (Weyl b : weyl_elements) {
            Weyl c = weyl_mul(a, b);
            for (int i = -3; i <= 3; ++i)
                for (int j = -3; j <= 3; ++j) {
                    Vec v{i, j};
                    CHECK(weyl_apply(c, v) == weyl_apply(a, weyl_apply(b, v)));
                }
        }
    // involutions and the longest element
    CHECK(weyl_mul(Weyl::s1, Weyl::s1) == Weyl::e);
    CHECK(weyl_mul(Weyl::s2, Weyl::s2) == Weyl::e);
    CHECK(weyl_mul(Weyl::s1, Weyl::s2) == Weyl::s1s2);
    CHECK(weyl_mul(weyl_mul(Weyl::s1, Weyl::s2), Weyl::s1) == Weyl::w0);
}

TEST_CASE("w0 negates length") {
    for (int i = -5; i <= 5; ++i)
        for (int j = -5; j <= 5; ++j) CHECK(length(weyl_apply(Weyl::w0, Vec{i, j})) == -length(Vec{i, j}));
}

TEST_CASE("length is additive") {
    for (int i = -5; i <= 5; ++i)
        for (int j = -5; j <= 5; ++j)
            for (int k = -2; k <= 2; ++k)
                for (int l = -2; l <= 2; ++l)
                    CHECK(length(Vec{i, j} + Vec{k, l}) == length(Vec{i, j}) + length(Vec{k, l}));
}

TEST_CASE("dominance order") {
    CHECK(dominance_order(Vec{2, 2}, Vec{1, 1}) == Dominance::greater);
    CHECK(dominance_order(Vec{1, 0}, Vec{0, 1}) == Dominance::incomparable);
    CHECK(dominance_order(Vec{3, 1}, Vec{3, 1}) == Dominance::equal);
    CHECK(dominance_order(Vec{0, 1}, Vec{2, 2}) == Dominance::less);
}

TEST_CASE("dominant representative") {
    for (int i = -5; i <= 5; ++i)
        for (int j = -5; j <= 5; ++j) {
            Vec d = dominant(Vec{i, j});
            CHECK(is_dominant(d));
            bool found = false;
            for (Weyl w : weyl_elements)
                if (weyl_apply(w, Vec{i, j}) == d) found = true;
            CHECK(found);
        }
    CHECK(dominant(Vec{-2, -2}) == Vec{2, 2});
    CHECK(dominant(Vec{-1, 3}) == Vec{1, 2});
}

TEST_CASE("type shift convention and homomorphism") {
    CHECK(type_shift(t1) == 1);
    CHECK(type_shift(t2) == 2);
    CHECK(type_shift(Vec{1, 1}) == 0);
    for (int i = -4; i <= 4; ++i)
        for (int j = -4; j <= 4; ++j)
            for (int k = -4; k <= 4; ++k)
                for (int l = -4; l <= 4; ++l)
                    CHECK(type_shift(Vec{i, j} + Vec{k, l}) ==
                          (type_shift(Vec{i, j}) + type_shift(Vec{k, l})) % 3);
}
