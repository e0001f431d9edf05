#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "abt/projectivity.hpp"

using namespace abt;

namespace {

struct PlaneFixture {
    FieldSpec F;
    ProjectiveCoords coords;
    IncidencePlane P;
    explicit PlaneFixture(std::uint32_t p, std::uint32_t k = 1)
        : F(field_build(p, k)), P(pg2(F, &coords)) {}
    int point(std::array<felt, 3> t) const { return coords.point_index.at(ProjectiveCoords::key(t)); }
    int line(std::array<felt, 3> t) const { return coords.line_index.at(ProjectiveCoords::key(t)); }
};

// independent generation oracle: close all projectivities of length 2 and 4
// through vertices opposite v under composition
std::vector<Perm> closure_by_short_chains(const IncidencePlane& P, PVertex v) {
    std::vector<Perm> gens;
    auto vs = P.vertices();
    for (PVertex w : vs) {
        if (!P.opposite(v, w)) continue;
        gens.push_back(Perm::from_images(perspectivity_chain(P, {v, w, v})));
        for (PVertex u : vs) {
            if (!P.opposite(w, u)) continue;
            for (PVertex w2 : vs) {
                if (!P.opposite(u, w2) || !P.opposite(w2, v)) continue;
                gens.push_back(Perm::from_images(perspectivity_chain(P, {v, w, u, w2, v})));
            }
        }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    int degree = static_cast<int>(P.pencil(v).size());
    return group_closure(degree, gens);
}

}  // namespace

TEST_CASE("projection in the Fano plane") {
    PlaneFixture fx(2);
    const IncidencePlane& P = fx.P;
    PVertex v{false, fx.point({1, 0, 0})};  // point (1:0:0)
    PVertex w{true, fx.line({1, 0, 0})};    // line [1:0:0], not through v
    REQUIRE(P.opposite(v, w));
    Flag f{fx.point({0, 1, 0}), w.idx};
    Flag g = combinatorial_projection(P, v, w, f);
    CHECK(g.point == v.idx);
    CHECK(g.line == fx.line({0, 0, 1}));  // the line through (1:0:0) and (0:1:0)
}

TEST_CASE("projection restricted to an opposite pencil is involutory") {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        auto [p, k] = prime_power_split(q);
        FieldSpec F = field_build(p, k);
        IncidencePlane P = pg2(F);
        for (PVertex v : P.vertices())
            for (PVertex w : P.vertices()) {
                if (!P.opposite(v, w)) continue;
                for (Flag f : P.pencil(w)) {
                    Flag g = combinatorial_projection(P, v, w, f);
                    CHECK(g.point >= 0);
                    CHECK((g.point == v.idx || g.line == v.idx));  // lands in Ch(v)
                    CHECK(combinatorial_projection(P, w, v, g) == f);
                }
            }
    }
}

TEST_CASE("chains: identity, degree, inverses") {
    PlaneFixture fx(2);
    const IncidencePlane& P = fx.P;
    PVertex v{false, 0};
    auto id = perspectivity_chain(P, {v});
    for (std::size_t i = 0; i < id.size(); ++i) CHECK(id[i] == static_cast<int>(i));

    // any closed 2-chain is a permutation of the q+1 = 3 pencil flags
    for (PVertex w : P.vertices()) {
        if (!P.opposite(v, w)) continue;
        auto m = perspectivity_chain(P, {v, w, v});
        CHECK(m.size() == 3);
        std::set<int> img(m.begin(), m.end());
        CHECK(img.size() == 3);
    }

    // a chain followed by its reverse is the identity
    for (PVertex w : P.vertices()) {
        if (!P.opposite(v, w)) continue;
        for (PVertex u : P.vertices()) {
            if (!P.opposite(w, u)) continue;
            auto fwd = perspectivity_chain(P, {v, w, u});
            auto back = perspectivity_chain(P, {u, w, v});
            for (std::size_t i = 0; i < fwd.size(); ++i)
                CHECK(back[static_cast<std::size_t>(fwd[i])] == static_cast<int>(i));
            break;
        }
        break;
    }

    CHECK_THROWS_AS(perspectivity_chain(P, {v, v}), error);
}

TEST_CASE("projectivity group orders 6, 24, 60") {
    for (auto [q, expect] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{
             {2, 6}, {3, 24}, {4, 60}}) {
        auto [p, k] = prime_power_split(q);
        FieldSpec F = field_build(p, k);
        IncidencePlane P = pg2(F);
        ProjectivityGroup G = projectivity_group(P, {false, 0});
        CHECK(G.degree == static_cast<int>(q) + 1);
        CHECK(G.order() == expect);
    }
}

TEST_CASE("groupoid generation agrees with the short-chain closure") {
    for (std::uint32_t q : {2u, 3u}) {
        FieldSpec F = field_build(q, 1);
        IncidencePlane P = pg2(F);
        for (PVertex v : {PVertex{false, 0}, PVertex{true, 2}}) {
            ProjectivityGroup G = projectivity_group(P, v);
            auto oracle = closure_by_short_chains(P, v);
            CHECK(G.elements == oracle);
        }
    }
}

TEST_CASE("projectivity group is vertex-independent in order") {
    FieldSpec F = field_build(3, 1);
    IncidencePlane P = pg2(F);
    std::uint64_t order0 = projectivity_group(P, {false, 0}).order();
    for (PVertex v : {PVertex{false, 5}, PVertex{true, 0}, PVertex{true, 7}})
        CHECK(projectivity_group(P, v).order() == order0);
}

TEST_CASE("transitivity report for small Desarguesian planes") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        auto [p, k] = prime_power_split(q);
        FieldSpec F = field_build(p, k);
        IncidencePlane P = pg2(F);
        ProjectivityGroup G = projectivity_group(P, {false, 0});
        TransitivityReport r = transitivity_report(G, static_cast<int>(q));
        INFO("q = " << q);
        CHECK(r.max_transitivity >= 3);
        CHECK(r.order == static_cast<std::uint64_t>((q + 1)) * q * (q - 1));
        CHECK(r.sharply_3_transitive);
        CHECK(r.moufang_set);
    }
}

TEST_CASE("degree guard") {
    FieldSpec F = field_build(2, 1);
    IncidencePlane P = pg2(F);
    (void)P;
    // a fake plane of order 10 only to exercise the guard
    IncidencePlane big(16, 3, 3, {{0, 0}, {1, 1}, {2, 2}});
    CHECK_THROWS_AS(projectivity_group(big, {false, 0}), error);
}

TEST_CASE("fixed point of the half-apartment projectivity, exhaustively") {
    for (std::uint32_t q : {2u, 3u}) {
        FieldSpec F = field_build(q, 1);
        IncidencePlane P = pg2(F);
        auto configs = enumerate_nontriv_configs(P);
        // 2 panel assignments, q(q-1) ordered pairs on each side, all flags
        std::uint64_t expect =
            static_cast<std::uint64_t>(P.n_points()) * (q + 1) * 2 * (q * (q - 1)) * (q * (q - 1));
        CHECK(configs.size() == expect);
        for (const auto& cfg : configs) {
            NonTrivResult r = nontriv_fixed_point_check(P, cfg);
            REQUIRE(r.pass);
        }
    }
}

TEST_CASE("invalid configurations are rejected") {
    PlaneFixture fx(2);
    const IncidencePlane& P = fx.P;
    auto configs = enumerate_nontriv_configs(P);
    REQUIRE(!configs.empty());
    NonTrivConfig bad = configs[0];
    bad.C2 = bad.C0;  // C0 = C2
    CHECK_THROWS_AS(nontriv_fixed_point_check(P, bad), error);
    try {
        nontriv_fixed_point_check(P, bad);
    } catch (const error& e) {
        CHECK(e.code() == errc::invalid_configuration);
    }
    NonTrivConfig bad2 = configs[0];
    bad2.C1 = bad2.C0;  // C1 attaches to the wrong panel
    CHECK_THROWS_AS(nontriv_fixed_point_check(P, bad2), error);
}
