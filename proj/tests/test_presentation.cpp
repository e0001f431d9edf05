#include <catch2/catch_amalgamated.hpp>

#include "abt/exotic.hpp"
#include "abt/presentation.hpp"

using namespace abt;

namespace {

Word mk(std::initializer_list<Syllable> s) { return reduce(Word{std::vector<Syllable>(s)}); }

bool has_relator(const Presentation& p, const Word& w) {
    return std::find(p.relators.begin(), p.relators.end(), w) != p.relators.end();
}

}  // namespace

TEST_CASE("free reduction") {
    Word w = reduce(Word{{{0, 2}, {0, -2}, {1, 3}, {1, -1}, {2, 0}}});
    REQUIRE(w.syl.size() == 1);
    CHECK(w.syl[0].gen == 1);
    CHECK(w.syl[0].exp == 2);
    CHECK(reduce(concat(mk({{0, 3}, {1, 2}}), inverse(mk({{0, 3}, {1, 2}})))).empty());
}

TEST_CASE("gamma0 presentation matches the known relators") {
    Presentation p = essert_presentation(gamma0());
    CHECK(p.generators == std::vector<std::string>{"s0", "s1", "s2"});
    REQUIRE(p.relators.size() == 5);
    CHECK(has_relator(p, mk({{0, 7}})));
    CHECK(has_relator(p, mk({{1, 7}})));
    CHECK(has_relator(p, mk({{2, 7}})));
    CHECK(has_relator(p, mk({{0, 1}, {1, 1}, {2, 3}})));  // s0 s1 s2^3
    CHECK(has_relator(p, mk({{0, 3}, {1, 3}, {2, 1}})));  // s0^3 s1^3 s2
}

TEST_CASE("gamma2 presentation") {
    Presentation p = essert_presentation(gamma2());
    REQUIRE(p.relators.size() == 5);
    CHECK(has_relator(p, mk({{0, 1}, {1, 1}, {2, 1}})));  // s0 s1 s2
    CHECK(has_relator(p, mk({{0, 3}, {1, 3}, {2, 3}})));  // s0^3 s1^3 s2^3
}

TEST_CASE("invalid data is rejected") {
    EssertData d = gamma0();
    d.pi1[0] = 1;
    d.pi1[1] = 0;
    CHECK_THROWS_AS(essert_presentation(d), error);  // permutation must fix 0
    EssertData d2 = gamma0();
    d2.pi2[1] = 1;  // not a bijection anymore
    CHECK_THROWS_AS(essert_presentation(d2), error);
}

TEST_CASE("torsion classification") {
    EssertData d = gamma0();
    CHECK(torsion_classify(d, 1, 0).finite);
    CHECK(torsion_classify(d, 1, d.pi1.at(1)).finite);
    CHECK(!torsion_classify(d, 1, 2).finite);
    CHECK_THROWS_AS(torsion_classify(d, 0, 1), error);  // d = 0 branch
    // exactly 2 finite and q^2+q-1 infinite verdicts for each nonzero d
    for (std::uint32_t dd : {1u, 3u}) {
        int finite = 0, infinite = 0;
        for (std::uint32_t e = 0; e < d.n; ++e)
            (torsion_classify(d, dd, e).finite ? finite : infinite)++;
        CHECK(finite == 2);
        CHECK(infinite == static_cast<int>(d.q * d.q + d.q - 1));
    }
}

TEST_CASE("identity-scale morphism certificate") {
    MorphismCertificate c = lattice_morphism(gamma0(), gamma0());
    CHECK(c.valid);
    CHECK(c.scale == 1);
    CHECK(c.witness_d == 1);
    CHECK(c.witness_e == 2);
    for (const auto& cond : c.conditions) CHECK(cond.pass);
    CHECK(morphism_relator_check(gamma0(), gamma0()));
}

TEST_CASE("morphism rejects a target missing the scaled set") {
    EssertData tgt = exotic_construct(4).data;
    // remove 3n/7 = 9 from D: rebuild a fake D without it (this breaks the
    // difference property, so tamper only with the record membership)
    EssertData broken = tgt;
    std::vector<std::uint32_t> D = broken.D.D;
    D.erase(std::remove(D.begin(), D.end(), 9u), D.end());
    broken.D.D = D;
    broken.pi1.erase(9);
    broken.pi2 = identity_dperm(D);
    broken.D.verified = true;  // forced, to reach the bullet checks
    MorphismCertificate c = lattice_morphism(gamma0(), broken);
    CHECK(!c.valid);
    CHECK(!c.conditions[1].pass);  // bullet 2: scaled inclusion
    CHECK(c.conditions[1].witness == "d = 3");
}

TEST_CASE("exotic pipeline at q = 4") {
    ExoticBundle b = exotic_construct(4);
    CHECK(b.data.n == 21);
    CHECK(std::binary_search(b.data.D.D.begin(), b.data.D.D.end(), 3u));
    CHECK(std::binary_search(b.data.D.D.begin(), b.data.D.D.end(), 9u));
    CHECK(b.data.pi2.at(3) == 9);
    CHECK(b.data.pi2.at(9) == 3);
    CHECK(b.data.pi1.at(3) == 3);
    CHECK(b.certificate.valid);
    CHECK(b.relator_check);
    CHECK(b.certificate.witness_verdict.finite == false);
    int computed = 0, cited = 0;
    for (const auto& line : b.rationale) (line.tag == "COMPUTED" ? computed : cited)++;
    CHECK(computed == 3);
    CHECK(cited == 3);
}

TEST_CASE("exoticq = 2 reproduces the order-2 lattice") {
    ExoticBundle b = exotic_construct(2);
    CHECK(b.data == gamma0());
}

TEST_CASE("exotic rejects powers of 8") {
    CHECK_THROWS_AS(exotic_construct(8), error);
    try {
        exotic_construct(8);
    } catch (const error& e) {
        CHECK(e.code() == errc::hypothesis_violated);
    }
    CHECK_THROWS_AS(exotic_construct(6), error);
    CHECK_THROWS_AS(exotic_construct(64), error);  // 64 = 8^2
}

TEST_CASE("exotic pipeline at q = 16") {
    ExoticBundle b = exotic_construct(16);
    CHECK(b.data.n == 273);
    CHECK(b.certificate.valid);
    CHECK(b.certificate.scale == 39);
    CHECK(b.relator_check);
}
