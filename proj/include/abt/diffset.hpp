#pragma once

// Planar difference sets in cyclic groups: verification, the Singer
// construction on PG(2, F_q), the plane a difference set spans, and nested
// pairs coming from subfield inclusions.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "abt/error.hpp"
#include "abt/field.hpp"
#include "abt/plane.hpp"

namespace abt {

struct DifferenceSetRecord {
    std::uint32_t n = 0;              // modulus
    std::vector<std::uint32_t> D;     // sorted subset of Z/n
    std::string source = "user";      // singer | user | embedded
    bool verified = false;
    std::optional<std::uint32_t> witness;  // residue with != 1 representation on failure
};

// Exhaustive check of the defining axiom: every nonzero residue has exactly
// one representation d1 - d2 with d1, d2 in D.
inline DifferenceSetRecord check_difference_set(std::uint32_t n, std::vector<std::uint32_t> D,
                                                std::string source = "user") {
    require(n > 0 && !D.empty(), errc::bad_argument, "difference set check needs n > 0, D nonempty");
    std::sort(D.begin(), D.end());
    D.erase(std::unique(D.begin(), D.end()), D.end());
    for (std::uint32_t d : D) require(d < n, errc::bad_argument, "difference set entry out of range");
    std::vector<std::uint32_t> count(n, 0);
    for (std::uint32_t d1 : D)
        for (std::uint32_t d2 : D) {
            if (d1 == d2) continue;
            ++count[(d1 + n - d2) % n];
        }
    DifferenceSetRecord r{n, std::move(D), std::move(source), true, std::nullopt};
    for (std::uint32_t a = 1; a < n; ++a)
        if (count[a] != 1) {
            r.verified = false;
            r.witness = a;
            break;
        }
    return r;
}

// canonical form under the equivalence D ~ uD + c (u a unit mod n): the
// lexicographically smallest sorted image; used for reproducible reports
inline std::vector<std::uint32_t> normalize_difference_set(std::uint32_t n,
                                                           const std::vector<std::uint32_t>& D) {
    std::vector<std::uint32_t> best;
    for (std::uint32_t u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        std::vector<std::uint32_t> img;
        for (std::uint32_t d : D) img.push_back(static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(u) * d % n));
        std::sort(img.begin(), img.end());
        // the lexicographic minimum over translates starts at 0, so only
        // shifts taking a member to 0 can win
        for (std::uint32_t d0 : img) {
            std::uint32_t c = (n - d0) % n;
            std::vector<std::uint32_t> sh;
            for (std::uint32_t d : img) sh.push_back((d + c) % n);
            std::sort(sh.begin(), sh.end());
            if (best.empty() || sh < best) best = sh;
        }
    }
    return best;
}

namespace detail {

// Singer machinery: K = F_{q^3} as a cubic extension of F_q, acting on
// PG(2, F_q) through multiplication on coordinate triples.
struct SingerAction {
    const FieldSpec* F;
    CubicExt K;
    ProjectiveCoords coords;
    IncidencePlane plane;
    std::uint32_t n;  // q^2 + q + 1

    explicit SingerAction(const FieldSpec& field) : F(&field), K(field), plane(pg2(field, &coords)) {
        std::uint32_t q = field.size();
        n = q * q + q + 1;
    }

    int point_of(std::uint32_t kelt) const {
        auto d = K.digits(kelt);
        auto t = detail::normalize_triple(*F, {d[0], d[1], d[2]});
        return coords.point_index.at(ProjectiveCoords::key(t));
    }

    // D = { e in Z/n : a^e maps the base point into the line }
    std::vector<std::uint32_t> exponent_set(std::uint32_t gen, int line) const {
        std::vector<std::uint32_t> D;
        std::uint32_t x = 1;  // base point (1:0:0) as the field element 1
        for (std::uint32_t e = 0; e < n; ++e) {
            if (plane.incident(point_of(x), line)) D.push_back(e);
            x = K.mul(x, gen);
        }
        return D;
    }

    // sanity: the projective action of gen has order exactly n
    bool generates_singer_group(std::uint32_t gen) const {
        std::uint32_t x = gen;
        int base = point_of(1);
        for (std::uint32_t e = 1; e < n; ++e) {
            if (point_of(x) == base) return false;
            x = K.mul(x, gen);
        }
        return point_of(x) == base;
    }

    int line_through(int p1, int p2) const {
        auto ls = plane.joining_lines(p1, p2);
        require(ls.size() == 1, errc::bad_argument, "no unique joining line");
        return ls[0];
    }
};

}  // namespace detail

// The Singer difference set of PG(2, F_q): the cyclic group K*/F_q* acts
// freely and transitively on points, and the exponents carrying the base
// point into the line through it and its image form a difference set
// containing {0, 1}.
inline DifferenceSetRecord singer_difference_set(std::uint32_t q) {
    auto [p, k] = prime_power_split(q);
    require(p != 0, errc::bad_argument, std::to_string(q) + " is not a prime power");
    require(q <= 32, errc::field_too_large, "singer construction limited to q <= 32");
    FieldSpec F = field_build(p, k);
    detail::SingerAction S(F);
    std::uint32_t a = S.K.primitive_element();
    require(S.generates_singer_group(a), errc::bad_argument,
            "primitive element does not induce a Singer cycle");
    int base = S.point_of(1);
    int image = S.point_of(a);
    int L = S.line_through(base, image);
    auto D = S.exponent_set(a, L);
    auto rec = check_difference_set(S.n, D, "singer");
    require(rec.verified, errc::bad_argument, "singer construction failed verification");
    return rec;
}

// The projective plane spanned by a verified difference set: points are the
// residues, lines the translates D + a, incidence is membership. The
// translation action is free and transitive on points and on lines.
inline IncidencePlane plane_from_difference_set(const DifferenceSetRecord& rec) {
    require(rec.verified, errc::unverified_input, "difference set record is not verified");
    std::uint32_t n = rec.n;
    std::uint32_t q = static_cast<std::uint32_t>(rec.D.size()) - 1;
    require(n == q * q + q + 1, errc::unverified_input, "size of D does not match the modulus");
    std::vector<Flag> inc;
    std::vector<std::string> plabels, llabels;
    for (std::uint32_t a = 0; a < n; ++a) {
        plabels.push_back(std::to_string(a));
        llabels.push_back("D+" + std::to_string(a));
        for (std::uint32_t d : rec.D)
            inc.push_back({static_cast<int>((d + a) % n), static_cast<int>(a)});
    }
    return IncidencePlane(static_cast<int>(q), static_cast<int>(n), static_cast<int>(n), inc,
                          std::move(plabels), std::move(llabels));
}

struct EmbeddedPair {
    DifferenceSetRecord base;  // (n0, D0)
    DifferenceSetRecord big;   // (n, D)
    std::uint32_t scale = 0;   // n / n0
};

// Nested difference sets from the subfield inclusion F_{q0} < F_q with
// q = q0^e, under the hypotheses q0 != 1 mod 3 and e != 0 mod 3. The big set
// is built from a Singer generator a with the line through the base point
// and its image under b = a^(n/n0) (the generator of the order-n0 subgroup);
// the small set is the preimage of D under scaling, and contains {0, 1}.
// For q0 = 2 the construction is renormalized (a -> a^5) to force
// D0 = {0, 1, 3}.
inline EmbeddedPair embed_difference_sets(std::uint32_t q0, std::uint32_t e) {
    auto [p0, k0] = prime_power_split(q0);
    require(p0 != 0, errc::bad_argument, std::to_string(q0) + " is not a prime power");
    require(q0 % 3 != 1, errc::hypothesis_violated, "q0 = 1 mod 3");
    require(e >= 1 && e % 3 != 0, errc::hypothesis_violated, "e = 0 mod 3");
    std::uint64_t q64 = 1;
    for (std::uint32_t i = 0; i < e; ++i) q64 *= q0;
    require(q64 <= 32, errc::field_too_large, "q = q0^e exceeds 32");
    std::uint32_t q = static_cast<std::uint32_t>(q64);
    std::uint32_t n0 = q0 * q0 + q0 + 1;
    std::uint32_t n = q * q + q + 1;
    require(n % n0 == 0, errc::hypothesis_violated, "n0 does not divide n");
    std::uint32_t scale = n / n0;

    auto [p, k] = prime_power_split(q);
    FieldSpec F = field_build(p, k);
    detail::SingerAction S(F);
    std::uint32_t a = S.K.primitive_element();

    auto build = [&](std::uint32_t gen) {
        int base = S.point_of(1);
        std::uint32_t b = S.K.pow(gen, scale);
        int image = S.point_of(b);
        int L = S.line_through(base, image);
        auto D = S.exponent_set(gen, L);
        std::vector<std::uint32_t> D0;
        for (std::uint32_t d0 = 0; d0 < n0; ++d0)
            if (std::binary_search(D.begin(), D.end(), d0 * scale)) D0.push_back(d0);
        return std::pair{D, D0};
    };

    auto [D, D0] = build(a);
    if (q0 == 2 && !(D0.size() == 3 && D0[0] == 0 && D0[1] == 1 && D0[2] == 3)) {
        // n is never divisible by 5, so a^5 still generates; redo with it
        require(n % 5 != 0, errc::bad_argument, "unexpected modulus divisible by 5");
        std::tie(D, D0) = build(S.K.pow(a, 5));
        require(D0.size() == 3 && D0[0] == 0 && D0[1] == 1 && D0[2] == 3, errc::bad_argument,
                "renormalization did not produce {0,1,3}");
    }

    EmbeddedPair pair;
    pair.scale = scale;
    pair.big = check_difference_set(n, D, "embedded");
    pair.base = check_difference_set(n0, D0, "embedded");
    require(pair.big.verified && pair.base.verified, errc::bad_argument,
            "embedded pair failed verification");
    require(pair.base.D.size() == q0 + 1, errc::bad_argument, "small set has the wrong size");
    require(pair.base.D[0] == 0 && pair.base.D[1] == 1, errc::bad_argument,
            "small set does not contain {0,1}");
    for (std::uint32_t d : pair.base.D)
        require(std::binary_search(pair.big.D.begin(), pair.big.D.end(), d * scale),
                errc::bad_argument, "scaled inclusion fails");
    return pair;
}

}  // namespace abt
