#include <catch2/catch_amalgamated.hpp>

#include "abt/flats.hpp"

using namespace abt;

namespace {

const BuildingBall& ball22() {
    static BuildingBall B = build_ball(2, 2);
    return B;
}

const BuildingBall& ball23() {
    static BuildingBall B = build_ball(2, 3);
    return B;
}

SectorGerm germ_at(const BuildingBall& B, int x, int depth, std::size_t pick = 0) {
    auto zs = B.sphere(x, {depth, depth});
    return germ_through(B, x, zs.at(pick));
}

}  // namespace

TEST_CASE("germs and extensions") {
    const BuildingBall& B = ball22();
    int o = B.base_vertex();
    SectorGerm g = germ_at(B, o, 2);
    CHECK(g.depth() == 2);
    CHECK(B.vector_distance(o, g.at(1)) == Vec{1, 1});
    CHECK(B.vector_distance(g.at(1), g.at(2)) == Vec{1, 1});

    // every depth-1 germ extends in N_(2,2)/N_(1,1) = 16 ways
    for (int z : B.sphere(o, {1, 1})) {
        SectorGerm g1 = germ_through(B, o, z);
        CHECK(germ_extensions(B, g1).size() == 16);
    }
}

TEST_CASE("flats through a germ agree at the germ positions") {
    const BuildingBall& B = ball22();
    int o = B.base_vertex();
    SectorGerm g = germ_at(B, o, 2);
    FlatMaps fm = flats_through(B, o, g, 2);
    REQUIRE(!fm.maps.empty());
    for (std::size_t f = 0; f < fm.maps.size(); ++f) {
        CHECK(fm.image_at(f, {0, 0}) == o);
        CHECK(fm.image_at(f, {1, 1}) == g.at(1));
        // the tip beyond the radius acts as a constraint on every position
        const auto& P = fm.positions;
        for (std::size_t a = 0; a < P.size(); ++a)
            CHECK(B.vector_distance(fm.maps[f][a], g.at(2)) == dominant(Vec{2, 2} - P[a]));
        // the map is isometric on a sample of position pairs
        for (std::size_t a = 0; a < P.size(); a += 3)
            for (std::size_t b = a + 1; b < P.size(); b += 5)
                CHECK(B.vector_distance(fm.maps[f][a], fm.maps[f][b]) == dominant(P[b] - P[a]));
    }
}

TEST_CASE("Y_e is a single vertex and the Yw power laws hold") {
    // the germ depth needed for stable counts is ell(lambda); verified
    // against depth ell(lambda)+1 on the radius-4 ball
    const BuildingBall& B = ball23();
    int o = B.base_vertex();

    YwCounts c11 = count_Yw(B, o, germ_at(B, o, 3), {1, 1});
    YwCounts c21 = count_Yw(B, o, germ_at(B, o, 3), {2, 1});
    YwCounts c12 = count_Yw(B, o, germ_at(B, o, 3), {1, 2});

    auto at = [](const YwCounts& c, Weyl w) { return c.at_depth[static_cast<std::size_t>(w)]; };

    CHECK(at(c11, Weyl::e) == 1);
    CHECK(at(c21, Weyl::e) == 1);
    CHECK(at(c12, Weyl::e) == 1);

    // the four power laws: q^i, q^j, q^(i+2j), q^(2i+j); the reflection
    // fixing the alpha_1 wall carries the q^(alpha_1) law
    CHECK(at(c11, Weyl::s1) == 2);
    CHECK(at(c21, Weyl::s1) == 2 * at(c11, Weyl::s1));
    CHECK(at(c12, Weyl::s1) == at(c11, Weyl::s1));
    CHECK(at(c11, Weyl::s2) == 2);
    CHECK(at(c21, Weyl::s2) == at(c11, Weyl::s2));
    CHECK(at(c12, Weyl::s2) == 2 * at(c11, Weyl::s2));
    CHECK(at(c11, Weyl::s1s2) == 8);
    CHECK(at(c21, Weyl::s1s2) == 2 * at(c11, Weyl::s1s2));   // q^(i+2j)
    CHECK(at(c12, Weyl::s1s2) == 4 * at(c11, Weyl::s1s2));
    CHECK(at(c11, Weyl::s2s1) == 8);
    CHECK(at(c21, Weyl::s2s1) == 4 * at(c11, Weyl::s2s1));   // q^(2i+j)
    CHECK(at(c12, Weyl::s2s1) == 2 * at(c11, Weyl::s2s1));
    CHECK(at(c11, Weyl::w0) == 16);  // q^(2 ell)

    // counts at (1,1) stabilize at germ depth ell(lambda) = 2, so depths 2
    // and 3 agree; the longer shapes stabilize at depth 3 (checked against
    // depth 4 on the radius-4 ball by the acceptance suite)
    CHECK(c11.stabilized);
}

TEST_CASE("Yw counts are reproduced at a second basepoint") {
    const BuildingBall& B = ball23();
    int o = B.base_vertex();
    int x2 = B.sphere(o, {1, 0})[0];
    SectorGerm g1 = germ_at(B, o, 2);
    SectorGerm g2 = germ_at(B, x2, 2);
    YwCounts a = count_Yw(B, o, g1, {1, 1});
    YwCounts b = count_Yw(B, x2, g2, {1, 1});
    CHECK(a.at_depth == b.at_depth);
}

TEST_CASE("ratio |Y_w|/N_lambda decreases for w != w0") {
    const BuildingBall& B = ball23();
    int o = B.base_vertex();
    SectorGerm g = germ_at(B, o, 2);
    YwCounts c11 = count_Yw(B, o, g, {1, 1});
    YwCounts c22 = count_Yw(B, o, g, {2, 2});
    double n11 = 42, n22 = 672;
    for (Weyl w : {Weyl::e, Weyl::s1, Weyl::s2, Weyl::s1s2, Weyl::s2s1}) {
        double r1 = static_cast<double>(c11.at_depth[static_cast<std::size_t>(w)]) / n11;
        double r2 = static_cast<double>(c22.at_depth[static_cast<std::size_t>(w)]) / n22;
        CHECK(r2 < r1);
    }
}

TEST_CASE("Z counts: symmetry and power laws") {
    const BuildingBall& B = ball22();
    int o = B.base_vertex();
    int y11 = B.sphere(o, {1, 1})[0];
    ZCounts z11 = count_Z(B, o, y11);
    CHECK(z11.plus == z11.minus);  // symmetric shape
    CHECK(z11.plus == 3);          // (q+1) q^(j-1), stable in the ray depth
    CHECK(z11.stabilized);

    // sharing the ray on one side leaves freedom transverse to it: the
    // + count follows q^j and the - count follows q^i
    int y21 = B.sphere(o, {2, 1})[0];
    ZCounts z21 = count_Z(B, o, y21);
    CHECK(z21.plus == z11.plus);
    CHECK(z21.minus == 2 * z11.minus);

    int y12 = B.sphere(o, {1, 2})[0];
    ZCounts z12 = count_Z(B, o, y12);
    CHECK(z12.plus == 2 * z11.plus);
    CHECK(z12.minus == z11.minus);
}

TEST_CASE("Z counts do not depend on the member of the sphere") {
    const BuildingBall& B = ball22();
    int o = B.base_vertex();
    auto sphere = B.sphere(o, {1, 1});
    ZCounts first = count_Z(B, o, sphere[0]);
    for (std::size_t i = 7; i < sphere.size(); i += 11) {
        ZCounts z = count_Z(B, o, sphere[i]);
        CHECK(z.plus == first.plus);
        CHECK(z.minus == first.minus);
    }
}

TEST_CASE("horofunction basics") {
    const BuildingBall& B = ball22();
    int o = B.base_vertex();
    SectorGerm g = germ_at(B, o, 2);
    CHECK(horofunction(B, o, o, g) == Vec{0, 0});
    CHECK(horofunction(B, o, g.at(1), g) == Vec{1, 1});
    // depth guard
    SectorGerm g1 = germ_through(B, o, B.sphere(o, {1, 1})[0]);
    int far = B.sphere(o, {2, 2})[0];
    CHECK_THROWS_AS(horofunction(B, o, far, g1), error);
}

TEST_CASE("horofunction cocycle on sampled triples") {
    const BuildingBall& B = ball23();
    int o = B.base_vertex();
    SectorGerm g = germ_at(B, o, 3);
    std::vector<int> pts{o};
    for (int u : B.neighbors(o)) pts.push_back(u);
    for (std::size_t zi = 0; zi < pts.size(); zi += 5)
        for (std::size_t yi = 0; yi < pts.size(); yi += 3) {
            int z = pts[zi], y = pts[yi];
            SectorGerm gz = rebase_germ(B, g, z, 2);
            Vec lhs = horofunction(B, o, y, g);
            Vec rhs = horofunction(B, o, z, g) + horofunction(B, z, y, gz);
            CHECK(lhs == rhs);
        }
}

namespace {

// an opposite germ: the first diagonal chain straightening across x against
// the given one
SectorGerm opposite_germ(const BuildingBall& B, int x, const SectorGerm& g) {
    for (int z : B.sphere(x, {g.depth(), g.depth()}))
        if (B.geodesic_between(x, g.tip(), z)) return germ_through(B, x, z);
    fail(errc::no_common_flat, "no opposite germ found");
}

}  // namespace

TEST_CASE("beta vanishes on germ pairs through the basepoint") {
    const BuildingBall& B = ball23();
    int o = B.base_vertex();
    SectorGerm g = germ_at(B, o, 3);
    SectorGerm opp = opposite_germ(B, o, g);
    CHECK(beta_value(B, o, g, opp) == Vec{0, 0});

    // independence of the witness at off-diagonal points of a common flat
    FlatMaps fm = flats_through(B, o, g, 2);
    REQUIRE(!fm.maps.empty());
    std::size_t used = 0;
    for (std::size_t f = 0; f < fm.maps.size(); f += std::max<std::size_t>(1, fm.maps.size() / 4)) {
        if (fm.image_at(f, {-1, -1}) != opp.at(1)) continue;  // flats of this germ pair only
        ++used;
        for (Vec p : {Vec{1, 0}, Vec{0, -1}, Vec{1, 1}, Vec{-1, 0}})
            CHECK(beta_value_at(B, o, g, opp, fm.image_at(f, p)) == Vec{0, 0});
    }
    CHECK(used > 0);
}

TEST_CASE("beta basepoint-translation identity") {
    const BuildingBall& B = ball23();
    int o = B.base_vertex();
    SectorGerm g = germ_at(B, o, 3);
    SectorGerm opp = opposite_germ(B, o, g);
    Vec beta_x = beta_value(B, o, g, opp);
    REQUIRE(beta_x == Vec{0, 0});

    FlatMaps fm = flats_through(B, o, g, 2);
    REQUIRE(!fm.maps.empty());
    for (Vec p : {Vec{1, 0}, Vec{0, 1}, Vec{1, 1}}) {
        int y = fm.image_at(0, p);
        SectorGerm gy = rebase_germ(B, g, y, 2);
        SectorGerm oy = rebase_germ(B, opp, y, 2);
        Vec beta_y = beta_value(B, y, gy, oy);
        Vec hc = horofunction(B, o, y, g);
        Vec hcp = horofunction_opposite_frame(B, o, y, opp);
        CHECK(beta_x - beta_y == hc + hcp);
    }
}

TEST_CASE("germ pair that does not straighten is rejected") {
    const BuildingBall& B = ball22();
    int o = B.base_vertex();
    SectorGerm g = germ_at(B, o, 2);
    CHECK_THROWS_AS(beta_value(B, o, g, g), error);
    try {
        beta_value(B, o, g, g);
    } catch (const error& e) {
        CHECK(e.code() == errc::no_common_flat);
    }
}
