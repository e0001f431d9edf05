#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "abt/field.hpp"

using namespace abt;

namespace {

// Oracle for the F8 modulus: exhaustive scan over all 8 monic cubics over
// F2 in low-degree-first lexicographic order. A cubic over a field is
// reducible iff it has a root, so root checking decides irreducibility.
std::array<int, 3> smallest_irreducible_cubic_f2() {
    for (int c0 = 0; c0 < 2; ++c0)
        for (int c1 = 0; c1 < 2; ++c1)
            for (int c2 = 0; c2 < 2; ++c2) {
                bool has_root = false;
                for (int x = 0; x < 2; ++x) {
                    int v = (x * x * x + c2 * x * x + c1 * x + c0) % 2;
                    if (v == 0) has_root = true;
                }
                if (!has_root) return {c0, c1, c2};
            }
    return {-1, -1, -1};
}

}  // namespace

TEST_CASE("prime fields") {
    FieldSpec f2 = field_build(2, 1);
    CHECK(f2.size() == 2);
    CHECK(f2.modulus_tail() == std::vector<std::uint32_t>{1});  // x + 1
    CHECK(f2.add(1, 1) == 0);
    CHECK(f2.mul(1, 1) == 1);

    FieldSpec f3 = field_build(3, 1);
    CHECK(f3.size() == 3);
    CHECK(f3.add(2, 2) == 1);
    CHECK(f3.mul(2, 2) == 1);
    CHECK(f3.inv(2) == 2);
}

TEST_CASE("F8 uses the smallest irreducible cubic") {
    auto oracle = smallest_irreducible_cubic_f2();
    FieldSpec f8 = field_build(2, 3);
    REQUIRE(f8.modulus_tail().size() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(static_cast<int>(f8.modulus_tail()[static_cast<std::size_t>(i)]) ==
              oracle[static_cast<std::size_t>(i)]);
}

TEST_CASE("field_build rejects bad input") {
    CHECK_THROWS_AS(field_build(4, 1), error);
    CHECK_THROWS_AS(field_build(6, 2), error);
    CHECK_THROWS_AS(field_build(2, 21), error);  // 2^21 > 2^20
    try {
        field_build(4, 1);
    } catch (const error& e) {
        CHECK(e.code() == errc::non_prime_characteristic);
    }
    try {
        field_build(2, 21);
    } catch (const error& e) {
        CHECK(e.code() == errc::degree_too_large);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(20240811);
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}, {7, 1}, {2, 5}, {3, 3}}) {
        FieldSpec F = field_build(p, k);
        std::uniform_int_distribution<std::uint32_t> d(0, F.size() - 1);
        for (int it = 0; it < 100; ++it) {
            felt a = d(rng), b = d(rng), c = d(rng);
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
            CHECK(F.add(a, F.add(b, c)) == F.add(F.add(a, b), c));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.pow(a, F.size()) == a);  // x^(p^k) == x
            if (a) CHECK(F.mul(a, F.inv(a)) == F.one());
        }
    }
}

TEST_CASE("primitive elements generate") {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 2}, {2, 3}, {3, 2}, {5, 1}, {2, 4}}) {
        FieldSpec F = field_build(p, k);
        felt g = F.primitive_element();
        CHECK(F.elt_order(g) == F.size() - 1);
        for (felt a = 1; a < g; ++a) CHECK(F.elt_order(a) != F.size() - 1);
    }
}

TEST_CASE("cubic extension basics") {
    FieldSpec f4 = field_build(2, 2);
    CubicExt k64(f4);
    CHECK(k64.size() == 64);
    // modulus has no root in the base field
    const FieldSpec& F = k64.base();
    auto m = k64.modulus_tail();
    for (felt x = 0; x < F.size(); ++x) {
        felt v = F.add(F.mul(F.mul(x, x), x),
                       F.add(F.mul(m[2], F.mul(x, x)), F.add(F.mul(m[1], x), m[0])));
        CHECK(v != 0);
    }
    std::uint32_t g = k64.primitive_element();
    CHECK(k64.elt_order(g) == 63);

    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint32_t> d(0, 63);
    for (int it = 0; it < 200; ++it) {
        std::uint32_t a = d(rng), b = d(rng), c = d(rng);
        CHECK(k64.mul(a, b) == k64.mul(b, a));
        CHECK(k64.mul(a, k64.mul(b, c)) == k64.mul(k64.mul(a, b), c));
    }
    // multiplication restricted to the base field (degree-0 triples) agrees
    for (felt a = 0; a < 4; ++a)
        for (felt b = 0; b < 4; ++b)
            CHECK(k64.mul(k64.from_digits(a, 0, 0), k64.from_digits(b, 0, 0)) ==
                  k64.from_digits(F.mul(a, b), 0, 0));
}

TEST_CASE("prime power split") {
    CHECK(prime_power_split(8) == std::pair<std::uint32_t, std::uint32_t>{2, 3});
    CHECK(prime_power_split(9) == std::pair<std::uint32_t, std::uint32_t>{3, 2});
    CHECK(prime_power_split(7) == std::pair<std::uint32_t, std::uint32_t>{7, 1});
    CHECK(prime_power_split(6).first == 0);
    CHECK(prime_power_split(1).first == 0);
}
