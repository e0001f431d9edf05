#pragma once

// JSON and DOT serialization. Plain nlohmann::json objects keep keys sorted,
// so identical inputs serialize to identical bytes; nothing here embeds
// timestamps or machine state.

#include <json.hpp>
#include <string>

#include "abt/ball.hpp"
#include "abt/diffset.hpp"
#include "abt/exotic.hpp"
#include "abt/flats.hpp"
#include "abt/groupengine.hpp"
#include "abt/measure.hpp"
#include "abt/plane.hpp"
#include "abt/presentation.hpp"
#include "abt/projectivity.hpp"

namespace abt {

using json = nlohmann::json;

inline std::string rat_str(const bigrat& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

inline json to_json(const IncidencePlane& P) {
    json j;
    j["order"] = P.order();
    json pts = json::array(), lns = json::array(), inc = json::array();
    for (int p = 0; p < P.n_points(); ++p) pts.push_back(P.point_label(p));
    for (int l = 0; l < P.n_lines(); ++l) lns.push_back(P.line_label(l));
    for (int p = 0; p < P.n_points(); ++p)
        for (int l : P.lines_of(p)) inc.push_back(json::array({p, l}));
    j["points"] = pts;
    j["lines"] = lns;
    j["incidences"] = inc;
    return j;
}

inline IncidencePlane plane_from_json(const json& j) {
    std::vector<std::string> pts = j.at("points"), lns = j.at("lines");
    std::vector<Flag> inc;
    for (const auto& e : j.at("incidences")) inc.push_back({e.at(0), e.at(1)});
    return IncidencePlane(j.at("order"), static_cast<int>(pts.size()),
                          static_cast<int>(lns.size()), inc, pts, lns);
}

inline json to_json(const AxiomReport& r) {
    return json{{"two_lines_unique_point", r.two_lines_unique_point},
                {"two_points_unique_line", r.two_points_unique_line},
                {"quadrilateral", r.quadrilateral},
                {"regular", r.regular},
                {"counts", r.counts},
                {"pass", r.pass()},
                {"witness", r.witness}};
}

inline std::string to_dot(const IncidencePlane& P) {
    std::string s = "graph plane {\n";
    for (int p = 0; p < P.n_points(); ++p)
        s += "  p" + std::to_string(p) + " [label=\"" + P.point_label(p) +
             "\", color=blue];\n";
    for (int l = 0; l < P.n_lines(); ++l)
        s += "  l" + std::to_string(l) + " [label=\"" + P.line_label(l) + "\", color=red];\n";
    for (int p = 0; p < P.n_points(); ++p)
        for (int l : P.lines_of(p))
            s += "  p" + std::to_string(p) + " -- l" + std::to_string(l) + ";\n";
    s += "}\n";
    return s;
}

inline json to_json(const DifferenceSetRecord& r) {
    json j{{"n", r.n}, {"D", r.D}, {"source", r.source}, {"verified", r.verified}};
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

inline json to_json(const EmbeddedPair& p) {
    return json{{"base", to_json(p.base)}, {"big", to_json(p.big)}, {"scale", p.scale}};
}

inline json to_json(const ProjectivityGroup& G) {
    json gens = json::array();
    for (const Perm& g : G.generators) gens.push_back(g.images());
    json pencil = json::array();
    for (Flag f : G.pencil) pencil.push_back(json::array({f.point, f.line}));
    return json{{"base", json{{"is_line", G.base.is_line}, {"idx", G.base.idx}}},
                {"degree", G.degree},
                {"order", G.order()},
                {"generators", gens},
                {"pencil", pencil}};
}

inline json to_json(const TransitivityReport& r) {
    return json{{"max_transitivity", r.max_transitivity},
                {"sharply_3_transitive", r.sharply_3_transitive},
                {"moufang_set", r.moufang_set},
                {"order", r.order},
                {"sharp_bound", r.sharp_bound}};
}

inline json to_json(const Presentation& p) {
    json rel = json::array();
    for (const Word& w : p.relators) {
        json r = json::array();
        for (const Syllable& s : w.syl) r.push_back(json::array({s.gen, s.exp}));
        rel.push_back(r);
    }
    return json{{"generators", p.generators}, {"relators", rel}};
}

inline json to_json(const EssertData& d) {
    json p1 = json::array(), p2 = json::array();
    for (auto [k, v] : d.pi1) p1.push_back(json::array({k, v}));
    for (auto [k, v] : d.pi2) p2.push_back(json::array({k, v}));
    return json{{"q", d.q}, {"n", d.n}, {"D", to_json(d.D)}, {"pi1", p1}, {"pi2", p2}};
}

inline EssertData essert_from_json(const json& j) {
    EssertData d;
    d.q = j.at("q");
    d.n = j.at("n");
    const json& ds = j.at("D");
    d.D = check_difference_set(ds.at("n"), ds.at("D").get<std::vector<std::uint32_t>>(),
                               ds.value("source", "user"));
    for (const auto& e : j.at("pi1")) d.pi1[e.at(0)] = e.at(1);
    for (const auto& e : j.at("pi2")) d.pi2[e.at(0)] = e.at(1);
    validate(d);
    return d;
}

inline json to_json(const TorsionVerdict& v) {
    return json{{"d", v.d},
                {"e", v.e},
                {"order", v.finite ? "finite" : "infinite"},
                {"justification", v.justification}};
}

inline json to_json(const MorphismCertificate& c) {
    json conds = json::array();
    for (const auto& q : c.conditions)
        conds.push_back(json{{"name", q.name}, {"pass", q.pass}, {"witness", q.witness}});
    return json{{"scale", c.scale},
                {"conditions", conds},
                {"valid", c.valid},
                {"witness_word", json{{"d", c.witness_d}, {"e", c.witness_e}}},
                {"witness_verdict", to_json(c.witness_verdict)}};
}

inline json to_json(const AbelianInvariants& a) {
    json f = json::array();
    for (const bigint& x : a.factors) f.push_back(x.str());
    return json{{"invariant_factors", f}, {"free_rank", a.free_rank}, {"trivial", a.trivial()}};
}

inline json to_json(const ExoticBundle& b) {
    json rat = json::array();
    for (const auto& line : b.rationale)
        rat.push_back(json{{"tag", line.tag}, {"statement", line.statement}});
    return json{{"data", to_json(b.data)},
                {"presentation", to_json(b.presentation)},
                {"certificate", to_json(b.certificate)},
                {"relator_check", b.relator_check},
                {"rationale", rat}};
}

inline json to_json(const NonTrivResult& r) {
    json cyc = json::array();
    for (PVertex v : r.cycle) cyc.push_back(json{{"is_line", v.is_line}, {"idx", v.idx}});
    json fixed = json::array();
    for (Flag f : r.fixed) fixed.push_back(json::array({f.point, f.line}));
    return json{{"cycle", cyc},
                {"fixed", fixed},
                {"expected", json::array({r.expected.point, r.expected.line})},
                {"pass", r.pass}};
}

inline json ball_to_json(const BuildingBall& B) {
    json verts = json::array();
    for (int v = 0; v < B.n_vertices(); ++v) {
        const auto& rep = B.rep(v);
        json mat = json::array();
        for (int i = 0; i < 3; ++i) {
            json row = json::array();
            for (int j = 0; j < 3; ++j) {
                const auto& e = rep.m[static_cast<std::size_t>(3 * i + j)];
                json coeffs = json::array();
                for (int k = 0; k < e.len; ++k) coeffs.push_back(e.c[static_cast<std::size_t>(k)]);
                row.push_back(coeffs);
            }
            mat.push_back(row);
        }
        verts.push_back(json{{"matrix", mat}, {"type", B.vertex_type(v)}, {"layer", B.layer(v)}});
    }
    json adj = json::array();
    for (int v = 0; v < B.n_vertices(); ++v) adj.push_back(B.neighbors(v));
    json chambers = json::array();
    for (int u = 0; u < B.n_vertices(); ++u) {
        if (B.depth(u) < 1) continue;
        for (int v : B.neighbors(u)) {
            if (v < u) continue;
            for (int w : B.neighbors(u)) {
                if (w < v || !B.adjacent(v, w)) continue;
                chambers.push_back(json::array({u, v, w}));
            }
        }
    }
    return json{{"q", B.q()},      {"radius", B.radius()}, {"base", B.base_vertex()},
                {"vertices", verts}, {"adjacency", adj},     {"chambers", chambers}};
}

inline std::string ball_to_dot(const BuildingBall& B) {
    static const char* colors[3] = {"red", "green", "blue"};
    std::string s = "graph ball {\n";
    for (int v = 0; v < B.n_vertices(); ++v)
        s += "  v" + std::to_string(v) + " [color=" +
             colors[static_cast<std::size_t>(B.vertex_type(v))] + "];\n";
    for (int v = 0; v < B.n_vertices(); ++v)
        for (int u : B.neighbors(v))
            if (u > v) s += "  v" + std::to_string(v) + " -- v" + std::to_string(u) + ";\n";
    s += "}\n";
    return s;
}

inline json to_json(const YwCounts& c) {
    json deep, shallow;
    for (std::size_t i = 0; i < 6; ++i) {
        deep[weyl_name(weyl_elements[i])] = c.at_depth[i];
        shallow[weyl_name(weyl_elements[i])] = c.at_shallower[i];
    }
    return json{{"counts", deep},
                {"counts_one_step_shallower", shallow},
                {"stabilized", c.stabilized},
                {"flats", c.flats}};
}

inline json to_json(const ZCounts& z) {
    return json{{"plus", z.plus},
                {"minus", z.minus},
                {"plus_rays", z.plus_rays},
                {"minus_rays", z.minus_rays},
                {"plus_one_step_shallower", z.plus_shallower},
                {"minus_one_step_shallower", z.minus_shallower},
                {"stabilized", z.stabilized},
                {"uniform_across_rays", z.uniform}};
}

inline json to_json(const CylinderTable& t) {
    return json{{"base", t.base},
                {"lambda", json::array({t.lambda.i, t.lambda.j})},
                {"cells", t.cells},
                {"cell_mass", rat_str(t.cell_mass)},
                {"total", rat_str(t.total())}};
}

inline json to_json(const RefinementReport& r) {
    return json{{"pass", r.pass},
                {"cells", r.cells},
                {"children_per_cell", r.children_per_cell},
                {"witness", r.witness}};
}

inline json to_json(const RNReport& r) {
    return json{{"pass", r.pass},
                {"cells_checked", r.cells_checked},
                {"cells_skipped", r.cells_skipped},
                {"cells_unidentified", r.cells_unidentified},
                {"witness", r.witness}};
}

inline json to_json(const FxMassReport& r) {
    return json{{"cells", r.cells},
                {"opposite_pairs", r.opposite_pairs},
                {"plain_total", rat_str(r.plain_total)},
                {"beta_weighted_total", rat_str(r.beta_weighted_total)},
                {"betas_sampled", r.betas_sampled},
                {"betas_all_zero", r.betas_all_zero},
                {"pass", r.pass()}};
}

inline json to_json(const ProjectionTable& t) {
    json groups = json::array();
    for (const auto& [u, cells] : t.groups) groups.push_back(json{{"shadow", u}, {"cells", cells}});
    return json{{"base", t.base},
                {"lambda", json::array({t.lambda.i, t.lambda.j})},
                {"side", t.plus ? "plus" : "minus"},
                {"groups", groups},
                {"group_mass", rat_str(t.group_mass)},
                {"group_size", t.group_size}};
}

inline json to_json(const DisintegrationData& d) {
    return json{{"lambda", json::array({d.lambda.i, d.lambda.j})},
                {"n_lambda", d.n_lambda},
                {"z_plus", d.z_plus},
                {"z_minus", d.z_minus},
                {"plus_mass", rat_str(d.plus_mass)},
                {"minus_mass", rat_str(d.minus_mass)},
                {"k_prime", rat_str(d.k_prime)},
                {"uniform", d.uniform}};
}

}  // namespace abt
