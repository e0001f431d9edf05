#include <catch2/catch_amalgamated.hpp>

#include "abt/groupengine.hpp"

using namespace abt;

namespace {

Word mk(std::initializer_list<Syllable> s) { return reduce(Word{std::vector<Syllable>(s)}); }

Presentation z7() {
    Presentation p;
    p.generators = {"a"};
    p.relators = {mk({{0, 7}})};
    return p;
}

Presentation free2() {
    Presentation p;
    p.generators = {"a", "b"};
    return p;
}

Presentation sym3() {
    Presentation p;
    p.generators = {"a", "b"};
    p.relators = {mk({{0, 2}}), mk({{1, 3}}), mk({{0, 1}, {1, 1}, {0, 1}, {1, 1}})};
    return p;
}

}  // namespace

TEST_CASE("abelianization of gamma0 is Z/7") {
    AbelianInvariants ab = abelianization(essert_presentation(gamma0()));
    CHECK(ab.free_rank == 0);
    REQUIRE(ab.factors.size() == 1);
    CHECK(ab.factors[0] == 7);
    CHECK(ab.torsion_order() == 7);
}

TEST_CASE("abelianization of a free group") {
    AbelianInvariants ab = abelianization(free2());
    CHECK(ab.free_rank == 2);
    CHECK(ab.factors.empty());
}

TEST_CASE("abelianization of the arithmetic companion is (Z/7)^2") {
    // SNF oracle for rows {(7,0,0),(0,7,0),(0,0,7),(1,1,1),(3,3,3)}:
    // (1,1,1) clears one generator, leaving Z/7 x Z/7
    AbelianInvariants ab = abelianization(essert_presentation(gamma2()));
    CHECK(ab.free_rank == 0);
    CHECK(ab.factors == std::vector<bigint>{7, 7});
}

TEST_CASE("coset enumeration: whole group and cyclic quotients") {
    Presentation p = z7();
    CosetTable whole = todd_coxeter(p, {mk({{0, 1}})});
    CHECK(whole.size() == 1);
    CosetTable triv = todd_coxeter(p, {});
    CHECK(triv.size() == 7);

    CosetTable s3a = todd_coxeter(sym3(), {mk({{0, 1}})});
    CHECK(s3a.size() == 3);  // index of <a> in S3
    CosetTable s3b = todd_coxeter(sym3(), {mk({{1, 1}})});
    CHECK(s3b.size() == 2);
    CosetTable s3t = todd_coxeter(sym3(), {});
    CHECK(s3t.size() == 6);
}

TEST_CASE("coset enumeration hits the limit on infinite index") {
    CHECK_THROWS_AS(todd_coxeter(free2(), {}, 500), error);
    try {
        todd_coxeter(free2(), {}, 500);
    } catch (const error& e) {
        CHECK(e.code() == errc::coset_limit_exceeded);
    }
}

TEST_CASE("derived subgroup of gamma0 via HLT matches the kernel table") {
    Presentation p = essert_presentation(gamma0());
    // commutators together with two kernel words; the enumerated index must
    // equal the abelianization order 7
    std::vector<Word> gens = {
        mk({{0, 1}, {1, 1}, {0, -1}, {1, -1}}), mk({{0, 1}, {2, 1}, {0, -1}, {2, -1}}),
        mk({{1, 1}, {2, 1}, {1, -1}, {2, -1}}), mk({{2, 1}}), mk({{0, 1}, {1, 1}})};
    CosetTable viaHLT = todd_coxeter(p, gens, 10'000);
    CHECK(viaHLT.size() == 7);
    CosetTable viaAb = derived_subgroup_table(p);
    CHECK(viaAb.size() == 7);
}

TEST_CASE("derived subgroup table of gamma2 has index 49") {
    CosetTable t = derived_subgroup_table(essert_presentation(gamma2()));
    CHECK(t.size() == 49);
}

TEST_CASE("derived subgroup of a free group is of infinite index") {
    CHECK_THROWS_AS(derived_subgroup_table(free2()), error);
}

TEST_CASE("reidemeister-schreier on the index-1 table") {
    Presentation p = essert_presentation(gamma0());
    CosetTable t = todd_coxeter(p, {mk({{0, 1}}), mk({{1, 1}}), mk({{2, 1}})});
    REQUIRE(t.size() == 1);
    Presentation sub = reidemeister_schreier(p, t);
    CHECK(sub.generators.size() == 3);
    CHECK(sub.relators.size() == p.relators.size());
    AbelianInvariants a = abelianization(sub), b = abelianization(p);
    CHECK(a.factors == b.factors);
    CHECK(a.free_rank == b.free_rank);
}

TEST_CASE("schreier generator count for the index-7 subgroup") {
    Presentation p = essert_presentation(gamma0());
    CosetTable t = derived_subgroup_table(p);
    Presentation sub = reidemeister_schreier(p, t);
    // Schreier index formula: n(g-1)+1 generators, one relator per
    // (relator, coset) pair before reduction
    CHECK(sub.generators.size() == 7 * (3 - 1) + 1);
    CHECK(sub.relators.size() <= 7 * p.relators.size());
}

TEST_CASE("gamma0 derived subgroup is perfect") {
    PerfectCheckReport r = perfect_check(essert_presentation(gamma0()));
    CHECK(r.subgroup_index == 7);
    CHECK(r.perfect);
}

TEST_CASE("gamma2 derived subgroup is not perfect") {
    PerfectCheckReport r = perfect_check(essert_presentation(gamma2()));
    CHECK(r.subgroup_index == 49);
    CHECK(!r.perfect);
}

TEST_CASE("Z/7 with trivial subgroup is abelian, not perfect") {
    PerfectCheckReport r = perfect_check(z7());
    CHECK(r.subgroup_index == 7);
    Presentation p = z7();
    AbelianInvariants ab = abelianization(p);
    CHECK(ab.factors == std::vector<bigint>{7});
    CHECK(!ab.trivial());
}

TEST_CASE("subgroup abelianization is transversal-independent") {
    Presentation p = essert_presentation(gamma0());
    CosetTable t = derived_subgroup_table(p);
    AbelianInvariants bfs = abelianization(reidemeister_schreier(p, t, false));
    AbelianInvariants dfs = abelianization(reidemeister_schreier(p, t, true));
    CHECK(bfs.factors == dfs.factors);
    CHECK(bfs.free_rank == dfs.free_rank);
}

TEST_CASE("gap export and import round-trip") {
    Presentation p = essert_presentation(gamma0());
    std::string text = gap_export(p);
    CHECK(text.find("FreeGroup(\"s0\", \"s1\", \"s2\")") != std::string::npos);
    Presentation q = gap_import(text);
    CHECK(q.generators.size() == p.generators.size());
    REQUIRE(q.relators.size() == p.relators.size());
    for (std::size_t i = 0; i < p.relators.size(); ++i) CHECK(q.relators[i] == p.relators[i]);
}
