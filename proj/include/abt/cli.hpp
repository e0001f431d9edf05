#pragma once

// Command-line surface. run_cli is the whole dispatcher; the binary is a
// thin wrapper, and tests call run_cli directly to compare payload bytes.
//
// stdout carries exactly the payload JSON; the run manifest (command,
// parameters, version, elapsed time, outputs, status) goes to a separate
// file on request so that payloads stay byte-identical across runs.
//
// exit codes: 0 pass, 1 verification fail, 2 usage or precondition error.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "abt/io.hpp"

namespace abt {

constexpr const char* kToolVersion = "abt 1.0.0";

struct CliResult {
    int code = 0;
    std::string out;  // payload JSON (stdout)
    std::string err;  // diagnostics (stderr)
};

namespace climpl {

struct Ctx {
    json payload;
    bool pass = true;
    std::vector<std::string> outputs;  // files written
};

inline FieldSpec field_for_order(std::uint32_t q) {
    auto [p, k] = prime_power_split(q);
    require(p != 0, errc::bad_argument, std::to_string(q) + " is not a prime power");
    return field_build(p, k);
}

inline std::vector<std::uint32_t> parse_set(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(static_cast<std::uint32_t>(std::stoul(s.substr(pos, comma - pos))));
        pos = comma + 1;
    }
    return out;
}

inline EssertData data_by_name(const std::string& preset, std::uint32_t exotic_q) {
    if (!preset.empty()) {
        if (preset == "gamma0") return gamma0();
        if (preset == "gamma2") return gamma2();
        fail(errc::bad_argument, "unknown preset '" + preset + "' (gamma0 | gamma2)");
    }
    require(exotic_q != 0, errc::bad_argument, "need --preset or --q");
    return exotic_construct(exotic_q).data;
}

inline void write_file(Ctx& ctx, const std::string& path, const std::string& text) {
    std::ofstream f(path);
    require(f.good(), errc::bad_argument, "cannot write " + path);
    f << text;
    ctx.outputs.push_back(path);
}

}  // namespace climpl

inline CliResult run_cli(const std::vector<std::string>& args) {
    using climpl::Ctx;
    auto started = std::chrono::steady_clock::now();

    CLI::App app{"exact computations with triangle buildings, projective planes, "
                 "difference sets and panel-regular lattices"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_file, manifest_file, dot_file;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--out", out_file, "also write the payload JSON to this file");
    app.add_option("--manifest", manifest_file, "write the run manifest to this file");

    Ctx ctx;
    std::vector<std::function<void()>> todo;

    // ---- plane ------------------------------------------------------------
    auto* plane = app.add_subcommand("plane", "projective planes");
    plane->fallthrough();
    {
        auto* gen = plane->add_subcommand("gen", "build PG(2, F_q)");
        auto q = std::make_shared<std::uint32_t>(0);
        gen->add_option("--q", *q, "plane order (prime power)")->required();
        gen->add_option("--dot", dot_file, "write the incidence graph as DOT");
        gen->callback([&, q]() {
            IncidencePlane P = pg2(climpl::field_for_order(*q));
            AxiomReport r = check_axioms(P);
            ctx.payload = json{{"plane", to_json(P)}, {"axioms", to_json(r)}};
            ctx.pass = r.pass();
            if (!dot_file.empty()) climpl::write_file(ctx, dot_file, to_dot(P));
        });

        auto* check = plane->add_subcommand("check", "axiom check of a plane");
        auto cq = std::make_shared<std::uint32_t>(0);
        auto cn = std::make_shared<std::uint32_t>(0);
        auto cset = std::make_shared<std::string>();
        auto cin = std::make_shared<std::string>();
        check->add_option("--q", *cq, "check PG(2, F_q)");
        check->add_option("--n", *cn, "difference set modulus");
        check->add_option("--set", *cset, "difference set, comma separated");
        check->add_option("--in", *cin, "plane JSON file");
        check->callback([&, cq, cn, cset, cin]() {
            IncidencePlane P;
            if (!cin->empty()) {
                std::ifstream f(*cin);
                require(f.good(), errc::bad_argument, "cannot read " + *cin);
                json j = json::parse(f);
                P = plane_from_json(j);
            } else if (*cn != 0) {
                P = plane_from_difference_set(check_difference_set(*cn, climpl::parse_set(*cset)));
            } else {
                require(*cq != 0, errc::bad_argument, "need --q, --n/--set or --in");
                P = pg2(climpl::field_for_order(*cq));
            }
            AxiomReport r = check_axioms(P);
            ctx.payload = json{{"order", P.order()}, {"axioms", to_json(r)}};
            ctx.pass = r.pass();
        });
    }

    // ---- diffset ----------------------------------------------------------
    auto* ds = app.add_subcommand("diffset", "planar difference sets");
    ds->fallthrough();
    {
        auto* singer = ds->add_subcommand("singer", "Singer difference set of PG(2, F_q)");
        auto q = std::make_shared<std::uint32_t>(0);
        singer->add_option("--q", *q)->required();
        singer->callback([&, q]() {
            DifferenceSetRecord r = singer_difference_set(*q);
            ctx.payload = to_json(r);
            ctx.payload["normalized"] = normalize_difference_set(r.n, r.D);
            ctx.pass = r.verified;
        });

        auto* check = ds->add_subcommand("check", "verify the unique-difference axiom");
        auto n = std::make_shared<std::uint32_t>(0);
        auto set = std::make_shared<std::string>();
        check->add_option("--n", *n)->required();
        check->add_option("--set", *set)->required();
        check->callback([&, n, set]() {
            DifferenceSetRecord r = check_difference_set(*n, climpl::parse_set(*set));
            ctx.payload = to_json(r);
            ctx.pass = r.verified;
        });

        auto* embed = ds->add_subcommand("embed", "nested difference sets from a subfield");
        auto q0 = std::make_shared<std::uint32_t>(0);
        auto e = std::make_shared<std::uint32_t>(0);
        embed->add_option("--q0", *q0)->required();
        embed->add_option("--e", *e)->required();
        embed->callback([&, q0, e]() {
            EmbeddedPair p = embed_difference_sets(*q0, *e);
            ctx.payload = to_json(p);
            ctx.pass = p.base.verified && p.big.verified;
        });

        auto* plane_cmd = ds->add_subcommand("plane", "the plane spanned by a difference set");
        auto pn = std::make_shared<std::uint32_t>(0);
        auto pset = std::make_shared<std::string>();
        auto pq = std::make_shared<std::uint32_t>(0);
        plane_cmd->add_option("--n", *pn);
        plane_cmd->add_option("--set", *pset);
        plane_cmd->add_option("--q", *pq, "use the Singer set of PG(2, F_q)");
        plane_cmd->add_option("--dot", dot_file);
        plane_cmd->callback([&, pn, pset, pq]() {
            DifferenceSetRecord r = *pq ? singer_difference_set(*pq)
                                        : check_difference_set(*pn, climpl::parse_set(*pset));
            IncidencePlane P = plane_from_difference_set(r);
            AxiomReport a = check_axioms(P);
            ctx.payload = json{{"record", to_json(r)}, {"plane", to_json(P)}, {"axioms", to_json(a)}};
            ctx.pass = a.pass();
            if (!dot_file.empty()) climpl::write_file(ctx, dot_file, to_dot(P));
        });
    }

    // ---- proj -------------------------------------------------------------
    auto* proj = app.add_subcommand("proj", "projectivity groups");
    proj->fallthrough();
    {
        auto q = std::make_shared<std::uint32_t>(0);
        auto line = std::make_shared<bool>(false);
        auto vidx = std::make_shared<int>(0);

        auto* group = proj->add_subcommand("group", "projectivity group at a vertex");
        group->add_option("--q", *q)->required();
        group->add_flag("--line", *line, "base at a line instead of a point");
        group->add_option("--vertex", *vidx, "base vertex index");
        group->callback([&, q, line, vidx]() {
            IncidencePlane P = pg2(climpl::field_for_order(*q));
            ProjectivityGroup G = projectivity_group(P, {*line, *vidx});
            ctx.payload = to_json(G);
        });

        auto* cls = proj->add_subcommand("classify", "transitivity and Moufang report");
        auto cq = std::make_shared<std::uint32_t>(0);
        cls->add_option("--q", *cq)->required();
        cls->callback([&, cq]() {
            IncidencePlane P = pg2(climpl::field_for_order(*cq));
            ProjectivityGroup G = projectivity_group(P, {false, 0});
            TransitivityReport t = transitivity_report(G, static_cast<int>(*cq));
            ctx.payload = json{{"group", to_json(G)}, {"report", to_json(t)}};
            ctx.pass = t.max_transitivity >= 3;
        });

        auto* nt = proj->add_subcommand("nontriv", "fixed points of half-apartment projectivities");
        auto nq = std::make_shared<std::uint32_t>(0);
        nt->add_option("--q", *nq)->required();
        nt->callback([&, nq]() {
            IncidencePlane P = pg2(climpl::field_for_order(*nq));
            auto configs = enumerate_nontriv_configs(P);
            std::size_t passed = 0;
            for (const auto& cfg : configs)
                if (nontriv_fixed_point_check(P, cfg).pass) ++passed;
            ctx.payload = json{{"configurations", configs.size()},
                               {"fixed_set_is_C0", passed},
                               {"pass", passed == configs.size()}};
            ctx.pass = passed == configs.size();
        });
    }

    // ---- lattice ----------------------------------------------------------
    auto* lat = app.add_subcommand("lattice", "panel-regular lattice presentations");
    lat->fallthrough();
    {
        auto preset = std::make_shared<std::string>();
        auto q = std::make_shared<std::uint32_t>(0);
        auto gap = std::make_shared<bool>(false);

        auto* present = lat->add_subcommand("present", "Essert presentation");
        present->add_option("--preset", *preset, "gamma0 | gamma2");
        present->add_option("--q", *q, "use the exotic-family data of order q");
        present->add_flag("--gap", *gap, "include GAP text");
        present->callback([&, preset, q, gap]() {
            EssertData d = climpl::data_by_name(*preset, *q);
            Presentation p = essert_presentation(d);
            ctx.payload = json{{"data", to_json(d)}, {"presentation", to_json(p)}};
            if (*gap) ctx.payload["gap"] = gap_export(p);
        });

        auto* torsion = lat->add_subcommand("torsion", "torsion classification of s0^d s1^e");
        auto td = std::make_shared<std::uint32_t>(0);
        auto te = std::make_shared<std::uint32_t>(0);
        torsion->add_option("--preset", *preset);
        torsion->add_option("--q", *q);
        torsion->add_option("--d", *td)->required();
        torsion->add_option("--e", *te)->required();
        torsion->callback([&, preset, q, td, te]() {
            EssertData d = climpl::data_by_name(*preset, *q);
            ctx.payload = to_json(torsion_classify(d, *td, *te));
        });

        auto* morph = lat->add_subcommand("morphism", "scaling morphism certificate");
        auto sp = std::make_shared<std::string>("gamma0");
        auto tp = std::make_shared<std::string>();
        auto tq = std::make_shared<std::uint32_t>(0);
        morph->add_option("--source-preset", *sp, "source data (default gamma0)");
        morph->add_option("--target-preset", *tp);
        morph->add_option("--q", *tq, "target = exotic-family data of order q");
        morph->callback([&, sp, tp, tq]() {
            EssertData src = climpl::data_by_name(*sp, 0);
            EssertData tgt = climpl::data_by_name(*tp, *tq);
            MorphismCertificate c = lattice_morphism(src, tgt);
            bool rel = morphism_relator_check(src, tgt);
            ctx.payload = json{{"certificate", to_json(c)}, {"relator_check", rel}};
            ctx.pass = c.valid && rel;
        });

        auto* ab = lat->add_subcommand("abelianize", "abelian invariants");
        ab->add_option("--preset", *preset);
        ab->add_option("--q", *q);
        ab->callback([&, preset, q]() {
            Presentation p = essert_presentation(climpl::data_by_name(*preset, *q));
            ctx.payload = to_json(abelianization(p));
        });

        auto* perf = lat->add_subcommand("perfect", "is the derived subgroup perfect?");
        perf->add_option("--preset", *preset);
        perf->add_option("--q", *q);
        perf->callback([&, preset, q]() {
            Presentation p = essert_presentation(climpl::data_by_name(*preset, *q));
            PerfectCheckReport r = perfect_check(p);
            ctx.payload = json{{"subgroup_index", r.subgroup_index.str()},
                               {"subgroup_abelianization", to_json(r.subgroup_abelianization)},
                               {"perfect", r.perfect}};
        });

        auto* exo = lat->add_subcommand("exotic", "the exotic-family pipeline");
        auto eq = std::make_shared<std::uint32_t>(0);
        exo->add_option("--q", *eq)->required();
        exo->callback([&, eq]() {
            ExoticBundle b = exotic_construct(*eq);
            ctx.payload = to_json(b);
            ctx.pass = b.certificate.valid && b.relator_check;
        });
    }

    // ---- building ---------------------------------------------------------
    auto* bld = app.add_subcommand("building", "Bruhat-Tits ball computations");
    bld->fallthrough();
    bld->add_option("--threads", threads, "worker threads (results are schedule-independent)");
    {
        auto q = std::make_shared<std::uint32_t>(2);
        auto r = std::make_shared<int>(2);

        auto* ball = bld->add_subcommand("ball", "build the ball");
        ball->add_option("--q", *q)->required();
        ball->add_option("--r", *r)->required();
        ball->add_option("--dot", dot_file, "write the colored 1-skeleton as DOT");
        auto full = std::make_shared<bool>(false);
        ball->add_flag("--full", *full, "include the full vertex/adjacency dump");
        ball->callback([&, q, r, full]() {
            BuildingBall B = build_ball(*q, *r);
            json layers = json::array();
            for (int l = 0; l <= B.ltop(); ++l) {
                int c = 0;
                for (int v = 0; v < B.n_vertices(); ++v)
                    if (B.layer(v) == l) ++c;
                layers.push_back(c);
            }
            ctx.payload = json{{"q", *q},
                               {"radius", *r},
                               {"vertices", B.n_vertices()},
                               {"full_degree", B.full_degree()},
                               {"layer_counts", layers},
                               {"chambers_through_base", B.chambers_through(B.base_vertex())},
                               {"base_link_axioms", to_json(check_axioms(B.link(B.base_vertex())))}};
            if (*full) ctx.payload["dump"] = ball_to_json(B);
            if (!dot_file.empty()) climpl::write_file(ctx, dot_file, ball_to_dot(B));
            ctx.pass = check_axioms(B.link(B.base_vertex())).pass();
        });

        auto* sph = bld->add_subcommand("sphere", "the sphere V_lambda(x)");
        auto i = std::make_shared<int>(1), j = std::make_shared<int>(1), x = std::make_shared<int>(0);
        sph->add_option("--q", *q)->required();
        sph->add_option("--r", *r)->required();
        sph->add_option("--i", *i)->required();
        sph->add_option("--j", *j)->required();
        sph->add_option("--x", *x, "basepoint index");
        sph->callback([&, q, r, i, j, x]() {
            BuildingBall B = build_ball(*q, *r);
            auto s = B.sphere(*x, {*i, *j});
            ctx.payload = json{{"basepoint", *x},
                               {"lambda", json::array({*i, *j})},
                               {"count", s.size()},
                               {"vertices", s}};
        });

        auto* counts = bld->add_subcommand("counts", "sphere, flat and ray counting laws");
        counts->add_option("--q", *q)->required();
        counts->add_option("--r", *r)->required();
        counts->callback([&, q, r]() {
            BuildingBall B = build_ball(*q, *r);
            int o = B.base_vertex();
            json per_lambda = json::array();
            bool ok = true;
            // N_lambda / q^(2 ell) constant over regular shapes and basepoints
            bigrat K = 0;
            for (int li = 1; li <= B.ltop(); ++li)
                for (int lj = 1; li + lj <= B.ltop(); ++lj) {
                    Vec lam{li, lj};
                    std::size_t n = B.sphere(o, lam).size();
                    bigrat k = bigrat(static_cast<long long>(n)) / q_power(*q, 2 * length(lam));
                    if (K == 0) K = k;
                    if (k != K) ok = false;
                    per_lambda.push_back(json{{"lambda", json::array({li, lj})}, {"N", n}});
                }
            int checked_basepoints = 0;
            for (int v = 0; v < B.n_vertices() && checked_basepoints < 3; ++v) {
                if (B.depth(v) < 2) continue;
                std::size_t n = B.sphere(v, {1, 1}).size();
                if (bigrat(static_cast<long long>(n)) != K * q_power(*q, 4)) ok = false;
                ++checked_basepoints;
            }
            json yw = json::array();
            if (B.depth(o) >= 4) {
                for (Vec lam : {Vec{1, 1}, Vec{2, 1}, Vec{1, 2}}) {
                    if (2 * length(lam) > B.depth(o)) continue;
                    SectorGerm g = germ_through(B, o, B.sphere(o, {length(lam), length(lam)})[0]);
                    YwCounts c = count_Yw(B, o, g, lam);
                    yw.push_back(json{{"lambda", json::array({lam.i, lam.j})}, {"counts", to_json(c)}});
                }
            }
            json zs = json::array();
            if (B.depth(o) >= 3) {
                for (Vec lam : {Vec{1, 1}, Vec{2, 1}, Vec{1, 2}}) {
                    if (length(lam) + 1 > B.depth(o)) continue;
                    ZCounts z = count_Z(B, o, B.sphere(o, lam)[0]);
                    zs.push_back(json{{"lambda", json::array({lam.i, lam.j})}, {"counts", to_json(z)}});
                }
            }
            ctx.payload = json{{"K", rat_str(K)},
                               {"constant_over_shapes_and_basepoints", ok},
                               {"spheres", per_lambda},
                               {"yw", yw},
                               {"z", zs}};
            ctx.pass = ok;
        });
    }

    // ---- measure ----------------------------------------------------------
    auto* meas = app.add_subcommand("measure", "cylinder measures on the chamber boundary");
    meas->fallthrough();
    meas->add_option("--threads", threads, "worker threads (results are schedule-independent)");
    {
        auto q = std::make_shared<std::uint32_t>(2);
        auto r = std::make_shared<int>(2);

        auto* table = meas->add_subcommand("table", "visual cylinder table");
        auto i = std::make_shared<int>(1), j = std::make_shared<int>(1), x = std::make_shared<int>(0);
        table->add_option("--q", *q)->required();
        table->add_option("--r", *r)->required();
        table->add_option("--i", *i)->required();
        table->add_option("--j", *j)->required();
        table->add_option("--x", *x);
        table->callback([&, q, r, i, j, x]() {
            BuildingBall B = build_ball(*q, *r);
            CylinderTable t = visual_table(B, *x, {*i, *j});
            RefinementReport r1 = refinement_check(B, *x, {*i, *j}, t1);
            RefinementReport r2 = refinement_check(B, *x, {*i, *j}, t2);
            ctx.payload = json{{"table", to_json(t)},
                               {"refinement_t1", to_json(r1)},
                               {"refinement_t2", to_json(r2)}};
            ctx.pass = t.total() == 1 && r1.pass && r2.pass;
        });

        auto* rn = meas->add_subcommand("rn", "Radon-Nikodym cell ratios");
        auto m = std::make_shared<int>(2);
        auto yidx = std::make_shared<int>(-1);
        rn->add_option("--q", *q)->required();
        rn->add_option("--r", *r)->required();
        rn->add_option("--m", *m, "diagonal cell depth");
        rn->add_option("--y", *yidx, "second basepoint (default: a neighbor of the base)");
        rn->callback([&, q, r, m, yidx]() {
            BuildingBall B = build_ball(*q, *r);
            int o = B.base_vertex();
            int y = *yidx >= 0 ? *yidx : B.neighbors(o)[0];
            RNReport rep = rn_check(B, o, y, *m);
            ctx.payload = json{{"basepoints", json::array({o, y})}, {"report", to_json(rep)}};
            ctx.pass = rep.pass;
        });

        auto* beta = meas->add_subcommand("beta", "beta cocycle checks on germ pairs");
        auto depth = std::make_shared<int>(2);
        beta->add_option("--q", *q)->required();
        beta->add_option("--r", *r)->required();
        beta->add_option("--depth", *depth, "germ depth");
        beta->callback([&, q, r, depth]() {
            BuildingBall B = build_ball(*q, *r);
            int o = B.base_vertex();
            require(2 * *depth <= B.depth(o), errc::sphere_truncated, "germ depth exceeds budget");
            SectorGerm g = germ_through(B, o, B.sphere(o, {*depth, *depth})[0]);
            SectorGerm opp;
            for (int z : B.sphere(o, {*depth, *depth}))
                if (B.geodesic_between(o, g.tip(), z)) {
                    opp = germ_through(B, o, z);
                    break;
                }
            require(opp.base == o, errc::no_common_flat, "no opposite germ found");
            Vec b = beta_value(B, o, g, opp);
            ctx.payload = json{{"beta", json::array({b.i, b.j})},
                               {"zero_on_pairs_through_basepoint", b == Vec{0, 0}}};
            ctx.pass = b == Vec{0, 0};
        });

        auto* mfx = meas->add_subcommand("mfx", "mass of the opposite family through x");
        auto mm = std::make_shared<int>(2);
        mfx->add_option("--q", *q)->required();
        mfx->add_option("--r", *r)->required();
        mfx->add_option("--m", *mm, "diagonal depth");
        mfx->callback([&, q, r, mm]() {
            BuildingBall B = build_ball(*q, *r);
            FxMassReport rep = m_mass_of_Fx(B, B.base_vertex(), *mm, 64, threads);
            ctx.payload = to_json(rep);
            ctx.pass = rep.pass();
        });

        auto* pm = meas->add_subcommand("pm", "boundary projections of a cylinder table");
        pm->add_option("--q", *q)->required();
        pm->add_option("--r", *r)->required();
        pm->add_option("--i", *i)->required();
        pm->add_option("--j", *j)->required();
        pm->callback([&, q, r, i, j]() {
            BuildingBall B = build_ball(*q, *r);
            ProjectionTable plus = projection_table(B, B.base_vertex(), {*i, *j}, true);
            ProjectionTable minus = projection_table(B, B.base_vertex(), {*i, *j}, false);
            bigrat total = plus.group_mass * static_cast<int>(plus.groups.size());
            ctx.payload = json{{"plus", to_json(plus)},
                               {"minus", to_json(minus)},
                               {"plus_total", rat_str(total)}};
            ctx.pass = total == 1;
        });

        auto* dis = meas->add_subcommand("disint", "disintegration identity");
        dis->add_option("--q", *q)->required();
        dis->add_option("--r", *r)->required();
        dis->callback([&, q, r]() {
            BuildingBall B = build_ball(*q, *r);
            int o = B.base_vertex();
            DisintegrationData a = disintegration_data(B, o, {1, 1});
            DisintegrationData b = disintegration_data(B, o, {2, 1});
            bool ok = a.uniform && b.uniform && a.k_prime == b.k_prime;
            ctx.payload = json{{"at_11", to_json(a)},
                               {"at_21", to_json(b)},
                               {"constant", ok}};
            ctx.pass = ok;
        });
    }

    CliResult res;
    try {
        std::vector<const char*> argv;
        argv.push_back("abt");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        res.out = app.help();
        res.code = 0;
        return res;
    } catch (const CLI::ParseError& e) {
        res.code = 2;
        res.err = std::string(e.what()) + "\n";
        return res;
    } catch (const error& e) {
        res.code = 2;
        res.err = json{{"error", e.what()}}.dump(2) + "\n";
        return res;
    } catch (const std::exception& e) {
        res.code = 2;
        res.err = json{{"error", e.what()}}.dump(2) + "\n";
        return res;
    }

    res.out = ctx.payload.dump(2) + "\n";
    res.code = ctx.pass ? 0 : 1;
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        f << res.out;
        ctx.outputs.push_back(out_file);
    }
    if (!manifest_file.empty()) {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        json manifest{{"command", args.empty() ? "" : args[0]},
                      {"parameters", args},
                      {"tool_version", kToolVersion},
                      {"elapsed_ms", elapsed},
                      {"outputs", ctx.outputs},
                      {"status", res.code == 0 ? "pass" : (res.code == 1 ? "fail" : "error")}};
        std::ofstream f(manifest_file);
        f << manifest.dump(2) << "\n";
    }
    return res;
}

}  // namespace abt
