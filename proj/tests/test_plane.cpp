#include <catch2/catch_amalgamated.hpp>

#include "abt/plane.hpp"

using namespace abt;

namespace {

// The Fano plane built by hand from the classical difference set {0,1,3}
// in Z/7: points are residues, line a is {0+a, 1+a, 3+a}.
IncidencePlane fano_by_hand(bool drop_one_incidence = false) {
    std::vector<Flag> inc;
    for (int a = 0; a < 7; ++a)
        for (int d : {0, 1, 3}) inc.push_back({(d + a) % 7, a});
    if (drop_one_incidence) inc.pop_back();
    return IncidencePlane(2, 7, 7, inc);
}

IncidencePlane grid3x3() {
    // affine 3x3 grid with only rows and columns as lines
    std::vector<Flag> inc;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            inc.push_back({3 * r + c, r});      // row lines 0..2
            inc.push_back({3 * r + c, 3 + c});  // column lines 3..5
        }
    return IncidencePlane(2, 9, 6, inc);
}

}  // namespace

TEST_CASE("pg2 counts") {
    FieldSpec f2 = field_build(2, 1);
    IncidencePlane fano = pg2(f2);
    CHECK(fano.n_points() == 7);
    CHECK(fano.n_lines() == 7);
    int incidences = 0;
    for (int l = 0; l < fano.n_lines(); ++l) incidences += static_cast<int>(fano.points_of(l).size());
    CHECK(incidences == 21);

    FieldSpec f3 = field_build(3, 1);
    IncidencePlane p3 = pg2(f3);
    CHECK(p3.n_points() == 13);
    CHECK(p3.n_lines() == 13);

    FieldSpec f4 = field_build(2, 2);
    IncidencePlane p4 = pg2(f4);
    CHECK(p4.n_points() == 21);
    for (int l = 0; l < p4.n_lines(); ++l) CHECK(p4.points_of(l).size() == 5);
}

TEST_CASE("pg2 point count equals the normalized triple count") {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        FieldSpec F = field_build(p, k);
        std::uint32_t q = F.size();
        IncidencePlane P = pg2(F);
        CHECK(static_cast<std::uint32_t>(P.n_points()) == (q * q * q - 1) / (q - 1));
    }
}

TEST_CASE("axioms pass for pg2 up to order 9") {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        FieldSpec F = field_build(p, k);
        AxiomReport r = check_axioms(pg2(F));
        INFO("q = " << F.size() << " witness: " << r.witness);
        CHECK(r.pass());
    }
}

TEST_CASE("axioms pass for the hand-built Fano plane") {
    AxiomReport r = check_axioms(fano_by_hand());
    INFO(r.witness);
    CHECK(r.pass());
}

TEST_CASE("a deleted incidence is detected with a witness") {
    AxiomReport r = check_axioms(fano_by_hand(true));
    CHECK(!r.pass());
    CHECK(!r.witness.empty());
    CHECK((!r.two_lines_unique_point || !r.two_points_unique_line || !r.regular));
}

TEST_CASE("parallel lines of the 3x3 grid fail the first axiom") {
    AxiomReport r = check_axioms(grid3x3());
    CHECK(!r.two_lines_unique_point);
    CHECK(!r.pass());
}

TEST_CASE("pencils and oppositeness") {
    FieldSpec f2 = field_build(2, 1);
    IncidencePlane P = pg2(f2);
    for (PVertex v : P.vertices()) CHECK(P.pencil(v).size() == 3);
    int opposite_pairs = 0;
    for (int p = 0; p < P.n_points(); ++p)
        for (int l = 0; l < P.n_lines(); ++l)
            if (P.opposite({false, p}, {true, l})) ++opposite_pairs;
    CHECK(opposite_pairs == 7 * 7 - 21);  // non-incident point/line pairs
    CHECK(!P.opposite({false, 0}, {false, 1}));  // same type is never opposite
}
