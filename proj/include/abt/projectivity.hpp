#pragma once

// Perspectivities and projectivity groups of a projective plane.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abt/error.hpp"
#include "abt/perm.hpp"
#include "abt/plane.hpp"

namespace abt {

// The combinatorial projection to v of a flag in Ch(w), for opposite v, w:
// the unique flag of Ch(v) at minimal gallery distance from f. Restricted to
// Ch(w) it is an involutory bijection onto Ch(v).
inline Flag combinatorial_projection(const IncidencePlane& P, PVertex v, PVertex w, Flag f) {
    require(P.opposite(v, w), errc::not_opposite, "projection requires opposite vertices");
    if (w.is_line) {
        require(f.line == w.idx, errc::bad_argument, "flag not in the pencil of the source vertex");
        // v is a point off the line w; project (x, w) to (v, line(v,x))
        auto join = P.joining_lines(v.idx, f.point);
        require(join.size() == 1, errc::bad_argument, "plane is not linear at these points");
        return Flag{v.idx, join[0]};
    }
    require(f.point == w.idx, errc::bad_argument, "flag not in the pencil of the source vertex");
    // v is a line missing the point w; project (w, m) to (m /\ v, v)
    auto meet = P.meeting_points(f.line, v.idx);
    require(meet.size() == 1, errc::bad_argument, "plane is not linear at these lines");
    return Flag{meet[0], v.idx};
}

namespace detail {

inline int pencil_index(const std::vector<Flag>& pencil, Flag f) {
    auto it = std::lower_bound(pencil.begin(), pencil.end(), f);
    require(it != pencil.end() && *it == f, errc::bad_argument, "flag outside pencil");
    return static_cast<int>(it - pencil.begin());
}

}  // namespace detail

// Composite of projections along v0, ..., vk (consecutive vertices
// opposite), as an index map from the canonical pencil of v0 to that of vk.
inline std::vector<int> perspectivity_chain(const IncidencePlane& P,
                                            const std::vector<PVertex>& chain) {
    require(!chain.empty(), errc::bad_argument, "empty chain");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        require(P.opposite(chain[i], chain[i + 1]), errc::chain_broken,
                "chain vertices " + std::to_string(i) + "," + std::to_string(i + 1) +
                    " are not opposite");
    std::vector<Flag> src = P.pencil(chain.front());
    std::vector<Flag> dst = P.pencil(chain.back());
    std::vector<int> map;
    for (Flag f : src) {
        Flag g = f;
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            g = combinatorial_projection(P, chain[i + 1], chain[i], g);
        map.push_back(detail::pencil_index(dst, g));
    }
    return map;
}

struct ProjectivityGroup {
    PVertex base;
    int degree = 0;
    std::vector<Flag> pencil;       // canonical (point, line) order
    std::vector<Perm> generators;   // groupoid loop generators at base
    std::vector<Perm> elements;     // full closure, sorted
    std::uint64_t order() const { return elements.size(); }
};

// The projectivity group at v: every projectivity is a composition of
// elementary perspectivities [a; w; b], so the group at v is the vertex
// group of the perspectivity groupoid. It is generated by the loops
// path(v->a) . [a; w; b] . path(b->v) over a spanning tree of the
// oppositeness graph, and closed under composition (the closure sweep
// stabilizing is the completeness certificate).
inline ProjectivityGroup projectivity_group(const IncidencePlane& P, PVertex v) {
    require(P.order() <= 9, errc::degree_too_large, "projectivity groups limited to order <= 9");
    ProjectivityGroup G;
    G.base = v;
    G.pencil = P.pencil(v);
    G.degree = static_cast<int>(G.pencil.size());

    auto vertices = P.vertices();
    auto vid = [&](PVertex u) {
        return u.is_line ? P.n_points() + u.idx : u.idx;
    };
    int n = static_cast<int>(vertices.size());

    // single projection step as an index map between pencils
    auto step = [&](PVertex a, PVertex b) {
        std::vector<Flag> pa = P.pencil(a), pb = P.pencil(b);
        std::vector<int> m;
        for (Flag f : pa) m.push_back(detail::pencil_index(pb, combinatorial_projection(P, b, a, f)));
        return m;
    };
    auto compose = [](const std::vector<int>& f, const std::vector<int>& g) {
        // apply f then g
        std::vector<int> r(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            r[i] = g[static_cast<std::size_t>(f[i])];
        return r;
    };
    auto invert = [](const std::vector<int>& f) {
        std::vector<int> r(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) r[static_cast<std::size_t>(f[i])] = static_cast<int>(i);
        return r;
    };

    // breadth-first spanning tree of the oppositeness graph, rooted at v,
    // with the map Ch(v) -> Ch(u) along tree paths
    std::vector<std::vector<int>> to(static_cast<std::size_t>(n));
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<int> bfs{vid(v)};
    visited[static_cast<std::size_t>(vid(v))] = 1;
    std::vector<int> ident(static_cast<std::size_t>(G.degree));
    for (int i = 0; i < G.degree; ++i) ident[static_cast<std::size_t>(i)] = i;
    to[static_cast<std::size_t>(vid(v))] = ident;
    for (std::size_t head = 0; head < bfs.size(); ++head) {
        PVertex a = vertices[static_cast<std::size_t>(bfs[head])];
        for (PVertex b : vertices) {
            if (!P.opposite(a, b) || visited[static_cast<std::size_t>(vid(b))]) continue;
            visited[static_cast<std::size_t>(vid(b))] = 1;
            to[static_cast<std::size_t>(vid(b))] = compose(to[static_cast<std::size_t>(vid(a))], step(a, b));
            bfs.push_back(vid(b));
        }
    }

    // loop generators from every oppositeness edge
    std::vector<Perm> gens;
    for (PVertex a : vertices)
        for (PVertex b : vertices) {
            if (!(a < b) || !P.opposite(a, b)) continue;
            const auto& ta = to[static_cast<std::size_t>(vid(a))];
            const auto& tb = to[static_cast<std::size_t>(vid(b))];
            if (ta.empty() || tb.empty()) continue;  // disconnected vertex (degenerate input)
            std::vector<int> loop = compose(compose(ta, step(a, b)), invert(tb));
            Perm p = Perm::from_images(loop);
            if (!p.is_identity()) gens.push_back(p);
        }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    G.generators = gens;
    G.elements = group_closure(G.degree, gens);
    return G;
}

struct TransitivityReport {
    int max_transitivity = 0;
    bool sharply_3_transitive = false;
    bool moufang_set = false;
    std::uint64_t order = 0;
    std::uint64_t sharp_bound = 0;  // (q+1)q(q-1)
};

// Sharp 3-transitivity is the commutative-field criterion; the Moufang-set
// test searches the normal subgroups of a point stabilizer for one acting
// sharply transitively on the remaining points.
inline TransitivityReport transitivity_report(const ProjectivityGroup& G, int q) {
    TransitivityReport r;
    r.order = G.order();
    r.sharp_bound = static_cast<std::uint64_t>(q + 1) * q * (q - 1);
    r.max_transitivity = max_transitivity(G.elements, G.degree);
    r.sharply_3_transitive = r.max_transitivity >= 3 && r.order == r.sharp_bound;

    if (r.max_transitivity >= 2) {
        auto stab = point_stabilizer(G.elements, 0);
        for (const auto& U : normal_subgroups(stab)) {
            if (U.size() != static_cast<std::size_t>(G.degree - 1)) continue;
            bool regular = true;
            for (const Perm& u : U) {
                if (u.is_identity()) continue;
                for (int y = 1; y < G.degree && regular; ++y)
                    if (u(y) == y) regular = false;
            }
            if (regular) {
                r.moufang_set = true;
                break;
            }
        }
    }
    return r;
}

// A configuration for the fixed-point check: chambers C, C0..C3 with
// C0, C2 meeting C along one panel and C1, C3 along the other, which makes
// each gallery C_i, C, C_j a half-apartment with opposite end vertices.
struct NonTrivConfig {
    Flag C;
    Flag C0, C1, C2, C3;
};

struct NonTrivResult {
    std::vector<PVertex> cycle;   // v0, v1, v2, v3, v0
    std::vector<Flag> fixed;      // fixed flags of the composed projectivity
    Flag expected;                // C0
    bool pass = false;            // fixed == {C0}
};

inline NonTrivResult nontriv_fixed_point_check(const IncidencePlane& P, const NonTrivConfig& cfg) {
    auto shares_point = [&](Flag a, Flag b) { return a.point == b.point; };
    auto panels_ok = [&](Flag g) {
        return g != cfg.C && (g.point == cfg.C.point || g.line == cfg.C.line) &&
               P.incident(g.point, g.line);
    };
    for (Flag g : {cfg.C0, cfg.C1, cfg.C2, cfg.C3})
        require(panels_ok(g), errc::invalid_configuration,
                "chamber does not form a gallery with C along a panel");
    require(P.incident(cfg.C.point, cfg.C.line), errc::invalid_configuration, "C is not a flag");

    // C0 and C2 share one panel of C, C1 and C3 the other
    bool c0_on_point = shares_point(cfg.C0, cfg.C);
    require(shares_point(cfg.C2, cfg.C) == c0_on_point, errc::invalid_configuration,
            "C0 and C2 attach to different panels of C");
    bool c1_on_point = shares_point(cfg.C1, cfg.C);
    require(c1_on_point != c0_on_point, errc::invalid_configuration,
            "C1 must attach to the other panel of C");
    require(shares_point(cfg.C3, cfg.C) == c1_on_point, errc::invalid_configuration,
            "C1 and C3 attach to different panels of C");
    require(cfg.C0 != cfg.C2, errc::invalid_configuration, "C0 = C2");
    require(cfg.C1 != cfg.C3, errc::invalid_configuration, "C1 = C3");

    // v_i: the vertex of C_i away from C (the boundary vertex of the
    // half-apartment C_i, C, C_{i+1})
    auto far_vertex = [&](Flag g, bool on_point) {
        return on_point ? PVertex{true, g.line} : PVertex{false, g.point};
    };
    PVertex v0 = far_vertex(cfg.C0, c0_on_point);
    PVertex v1 = far_vertex(cfg.C1, c1_on_point);
    PVertex v2 = far_vertex(cfg.C2, c0_on_point);
    PVertex v3 = far_vertex(cfg.C3, c1_on_point);

    NonTrivResult res;
    res.cycle = {v0, v1, v2, v3, v0};
    res.expected = cfg.C0;
    auto map = perspectivity_chain(P, res.cycle);
    auto pencil = P.pencil(v0);
    for (std::size_t i = 0; i < map.size(); ++i)
        if (map[i] == static_cast<int>(i)) res.fixed.push_back(pencil[i]);
    res.pass = res.fixed.size() == 1 && res.fixed[0] == cfg.C0;
    return res;
}

// every valid configuration based at every flag; used by the exhaustive
// checks at small q
inline std::vector<NonTrivConfig> enumerate_nontriv_configs(const IncidencePlane& P) {
    std::vector<NonTrivConfig> out;
    for (int p = 0; p < P.n_points(); ++p)
        for (int l : P.lines_of(p)) {
            Flag C{p, l};
            std::vector<Flag> on_point, on_line;
            for (int l2 : P.lines_of(p))
                if (l2 != l) on_point.push_back({p, l2});
            for (int p2 : P.points_of(l))
                if (p2 != p) on_line.push_back({p2, l});
            for (int swap = 0; swap < 2; ++swap) {
                const auto& fam02 = swap ? on_line : on_point;
                const auto& fam13 = swap ? on_point : on_line;
                for (Flag c0 : fam02)
                    for (Flag c2 : fam02) {
                        if (c0 == c2) continue;
                        for (Flag c1 : fam13)
                            for (Flag c3 : fam13) {
                                if (c1 == c3) continue;
                                out.push_back({C, c0, c1, c2, c3});
                            }
                    }
            }
        }
    return out;
}

}  // namespace abt
