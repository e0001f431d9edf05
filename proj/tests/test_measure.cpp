#include <catch2/catch_amalgamated.hpp>

#include "abt/measure.hpp"

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

}  // namespace

TEST_CASE("visual tables are uniform probability tables") {
    const BuildingBall& B = ball22();
    int o = B.base_vertex();
    CylinderTable t = visual_table(B, o, {1, 1});
    CHECK(t.cells.size() == 42);
    CHECK(t.cell_mass == bigrat(1, 42));
    CHECK(t.total() == 1);
    CHECK_THROWS_AS(visual_table(B, o, {1, 0}), error);  // non-regular shape
}

TEST_CASE("refinement consistency in both directions") {
    const BuildingBall& B = ball23();
    int o = B.base_vertex();
    for (Vec lambda : {Vec{1, 1}, Vec{2, 1}, Vec{1, 2}, Vec{2, 2}})
        for (Vec dir : {t1, t2}) {
            RefinementReport r = refinement_check(B, o, lambda, dir);
            INFO("lambda " << to_string(lambda) << " dir " << to_string(dir) << ": " << r.witness);
            CHECK(r.pass);
            CHECK(r.children_per_cell == 4);  // N ratio q^2
        }
}

TEST_CASE("radon-nikodym cells against an adjacent basepoint") {
    const BuildingBall& B = ball23();
    int o = B.base_vertex();
    for (int y : {B.sphere(o, {1, 0})[0], B.sphere(o, {0, 1})[2]}) {
        RNReport r = rn_check(B, o, y, 2);
        INFO(r.witness);
        CHECK(r.pass);
        CHECK(r.cells_checked > 0);
        CHECK(r.cells_skipped == 0);  // depth (2,2) is fully inside
    }
}

TEST_CASE("radon-nikodym at the identity basepoint is trivial") {
    const BuildingBall& B = ball22();
    int o = B.base_vertex();
    RNReport r = rn_check(B, o, o, 2);
    CHECK(r.pass);
}

TEST_CASE("opposite-pair mass at depth (2,2)") {
    const BuildingBall& B = ball23();
    int o = B.base_vertex();
    FxMassReport r = m_mass_of_Fx(B, o, 2);
    INFO("pairs " << r.opposite_pairs << " of " << r.cells << "^2");
    CHECK(r.betas_sampled > 0);
    CHECK(r.betas_all_zero);
    CHECK(r.plain_total == r.beta_weighted_total);
    CHECK(r.plain_total > 0);
    CHECK(r.plain_total < 1);
    CHECK(r.pass());
}

TEST_CASE("opposite-pair masses agree across depths (2,2) and (3,3)") {
    const BuildingBall& B = ball23();
    int o = B.base_vertex();
    FxMassReport r2 = m_mass_of_Fx(B, o, 2);
    FxMassReport r3 = m_mass_of_Fx(B, o, 3, 16);
    CHECK(r2.plain_total == r3.plain_total);
}

TEST_CASE("projection tables: uniform masses with the alpha power laws") {
    const BuildingBall& B = ball23();
    int o = B.base_vertex();
    ProjectionTable p11 = projection_table(B, o, {1, 1}, true);
    ProjectionTable m11 = projection_table(B, o, {1, 1}, false);
    // + mass = 1/N_(i,0): shadows are the (1,0)-sphere of size 7
    CHECK(p11.groups.size() == 7);
    CHECK(p11.group_mass == bigrat(1, 7));
    CHECK(m11.group_mass == bigrat(1, 7));
    bigrat total = 0;
    for (const auto& [u, cells] : p11.groups) total += p11.group_mass;
    CHECK(total == 1);

    // masses scale with q^2 per unit of the matching coordinate and are
    // independent of the other coordinate
    ProjectionTable p21 = projection_table(B, o, {2, 1}, true);
    CHECK(p21.group_mass * 4 == p11.group_mass);
    ProjectionTable p12 = projection_table(B, o, {1, 2}, true);
    CHECK(p12.group_mass == p11.group_mass);
    ProjectionTable m12 = projection_table(B, o, {1, 2}, false);
    CHECK(m12.group_mass * 4 == m11.group_mass);
    ProjectionTable m21 = projection_table(B, o, {2, 1}, false);
    CHECK(m21.group_mass == m11.group_mass);
}

TEST_CASE("disintegration constant is cell-uniform and shape-independent") {
    const BuildingBall& B = ball23();
    int o = B.base_vertex();
    DisintegrationData d11 = disintegration_data(B, o, {1, 1});
    CHECK(d11.uniform);
    DisintegrationData d21 = disintegration_data(B, o, {2, 1});
    CHECK(d21.uniform);
    CHECK(d11.k_prime == d21.k_prime);
    CHECK(d11.k_prime == bigrat(27, 14));  // measured once for q = 2, then pinned
    // identity per cell: |Z+||Z-| m+ m- / (K' q^l) == 1/N
    bigrat lhs = bigrat(static_cast<int>(d11.z_plus * d11.z_minus)) * d11.plus_mass *
                 d11.minus_mass / (d11.k_prime * q_power(2, length(d11.lambda)));
    CHECK(lhs == bigrat(1, static_cast<int>(d11.n_lambda)));
}

TEST_CASE("both disintegration sides scale by q^-4 from (1,1) to (2,2)") {
    const BuildingBall& B = ball23();
    int o = B.base_vertex();
    DisintegrationData d11 = disintegration_data(B, o, {1, 1});
    DisintegrationData d22 = disintegration_data(B, o, {2, 2}, 5);
    CHECK(d22.uniform);
    CHECK(d11.k_prime == d22.k_prime);
    CHECK(bigrat(1, static_cast<int>(d22.n_lambda)) * 16 ==
          bigrat(1, static_cast<int>(d11.n_lambda)));
}
