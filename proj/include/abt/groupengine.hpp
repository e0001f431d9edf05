#pragma once

// Finitely presented group computations: abelianization by Smith normal
// form, HLT coset enumeration with coincidence processing, and subgroup
// presentations via Reidemeister-Schreier rewriting.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "abt/error.hpp"
#include "abt/intmat.hpp"
#include "abt/presentation.hpp"

namespace abt {

struct AbelianInvariants {
    std::vector<bigint> factors;  // invariant factors > 1, divisibility chain
    std::size_t free_rank = 0;
    // generator images in the torsion coordinates (factor j of generator i)
    std::vector<std::vector<bigint>> torsion_images;

    bool trivial() const { return factors.empty() && free_rank == 0; }
    bigint torsion_order() const {
        bigint o = 1;
        for (const bigint& f : factors) o *= f;
        return o;
    }
};

inline AbelianInvariants abelianization(const Presentation& p) {
    std::size_t g = p.generators.size();
    AbelianInvariants out;
    if (g == 0) return out;
    if (p.relators.empty()) {
        out.free_rank = g;
        out.torsion_images.assign(g, {});
        return out;
    }
    IntMatrix m(p.relators.size(), g);
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (const Syllable& s : p.relators[r].syl) m(r, static_cast<std::size_t>(s.gen)) += s.exp;
    SmithResult snf = smith_normal_form(m);
    std::size_t nd = std::min(m.rows(), m.cols());
    std::size_t rank = 0;
    std::vector<std::pair<std::size_t, bigint>> torsion;  // (diag position, factor)
    for (std::size_t i = 0; i < nd; ++i) {
        if (snf.diag(i, i) == 0) continue;
        ++rank;
        if (snf.diag(i, i) > 1) torsion.push_back({i, snf.diag(i, i)});
    }
    out.free_rank = g - rank;
    for (const auto& [pos, f] : torsion) out.factors.push_back(f);
    // x -> x * right expresses Z^g in the Smith basis of the column side;
    // generator i maps to row i of `right`
    out.torsion_images.assign(g, std::vector<bigint>(torsion.size()));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < torsion.size(); ++j) {
            bigint v = snf.right(i, torsion[j].first) % torsion[j].second;
            if (v < 0) v += torsion[j].second;
            out.torsion_images[i][j] = v;
        }
    return out;
}

struct CosetTable {
    int ngens = 0;
    // action[c][2i] = c.g_i, action[c][2i+1] = c.g_i^-1; always fully defined
    // when complete
    std::vector<std::vector<int>> action;
    bool complete = false;
    std::vector<Word> subgroup_generators;

    std::size_t size() const { return action.size(); }
};

namespace detail {

// letters: generator i -> 2i, inverse -> 2i+1
inline std::vector<int> letters_of(const Word& w) {
    std::vector<int> ls;
    for (const Syllable& s : w.syl) {
        int letter = s.exp > 0 ? 2 * s.gen : 2 * s.gen + 1;
        long long k = s.exp > 0 ? s.exp : -s.exp;
        for (long long i = 0; i < k; ++i) ls.push_back(letter);
    }
    return ls;
}

inline int inv_letter(int l) { return l ^ 1; }

class HLT {
  public:
    HLT(int ngens, std::size_t max_cosets) : ngens_(ngens), maxc_(max_cosets) { new_coset(); }

    int ngens_;
    std::size_t maxc_;
    std::vector<std::vector<int>> tab;
    std::vector<int> parent;  // union-find over coincidences
    std::deque<std::pair<int, int>> pending;

    int new_coset() {
        require(tab.size() < maxc_, errc::coset_limit_exceeded,
                "coset enumeration exceeded " + std::to_string(maxc_) + " cosets");
        tab.emplace_back(static_cast<std::size_t>(2 * ngens_), -1);
        parent.push_back(static_cast<int>(tab.size()) - 1);
        return static_cast<int>(tab.size()) - 1;
    }

    int find(int c) {
        while (parent[static_cast<std::size_t>(c)] != c) {
            parent[static_cast<std::size_t>(c)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(c)])];
            c = parent[static_cast<std::size_t>(c)];
        }
        return c;
    }

    int get(int c, int l) const { return tab[static_cast<std::size_t>(c)][static_cast<std::size_t>(l)]; }

    void set_edge(int a, int l, int b) {
        tab[static_cast<std::size_t>(a)][static_cast<std::size_t>(l)] = b;
        tab[static_cast<std::size_t>(b)][static_cast<std::size_t>(inv_letter(l))] = a;
    }

    void join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) pending.push_back({a, b});
        process();
    }

    void process() {
        while (!pending.empty()) {
            auto [x, y] = pending.front();
            pending.pop_front();
            int a = find(x), b = find(y);
            if (a == b) continue;
            if (a > b) std::swap(a, b);  // keep the smaller representative
            parent[static_cast<std::size_t>(b)] = a;
            for (int l = 0; l < 2 * ngens_; ++l) {
                int d = get(b, l);
                if (d < 0) continue;
                d = find(d);
                int e = get(a, l);
                if (e < 0) {
                    set_edge(a, l, d);
                    // d's inverse edge may still point at b; redirect
                    tab[static_cast<std::size_t>(d)][static_cast<std::size_t>(inv_letter(l))] = a;
                } else if (find(e) != d) {
                    pending.push_back({find(e), d});
                }
            }
        }
    }

    // scan the word starting at coset c; with fill, define cosets to close
    void scan(const std::vector<int>& ls, int c, bool fill) {
        if (ls.empty()) return;
        int f = find(c);
        std::size_t fi = 0;
        while (fi < ls.size()) {
            int nxt = get(f, ls[fi]);
            if (nxt < 0) break;
            f = find(nxt);
            ++fi;
        }
        if (fi == ls.size()) {
            join(f, c);
            return;
        }
        int b = find(c);
        std::size_t bi = ls.size();
        while (bi > fi) {
            int prv = get(b, inv_letter(ls[bi - 1]));
            if (prv < 0) break;
            b = find(prv);
            --bi;
        }
        if (bi == fi) {  // full overlap: deduction or coincidence
            if (fi < ls.size()) {
                // cannot happen: bi == fi < size means both scans stalled at
                // the same gap of length 0
            }
            join(f, b);
            return;
        }
        if (bi == fi + 1) {  // gap of one: deduction
            set_edge(f, ls[fi], b);
            join(f, f);  // flush pending coincidences
            return;
        }
        if (!fill) return;
        while (bi > fi + 1) {  // define cosets to fill the gap
            int n = new_coset();
            set_edge(f, ls[fi], n);
            f = n;
            ++fi;
        }
        set_edge(f, ls[fi], find(b));
        join(f, f);
    }

    bool live(int c) { return find(c) == c; }
};

}  // namespace detail

// HLT enumeration of the cosets of <subgroup_gens> in the presented group.
// Deterministic: cosets are processed in increasing order, relators in the
// given order, and missing images defined in first-undefined scan order.
inline CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens,
                               std::size_t max_cosets = 1'000'000) {
    int ngens = static_cast<int>(p.generators.size());
    detail::HLT h(ngens, max_cosets);
    std::vector<std::vector<int>> rel_letters;
    for (const Word& r : p.relators) rel_letters.push_back(detail::letters_of(reduce(r)));

    for (const Word& w : subgroup_gens) h.scan(detail::letters_of(reduce(w)), 0, true);

    for (int c = 0; c < static_cast<int>(h.tab.size()); ++c) {
        if (!h.live(c)) continue;
        for (const auto& ls : rel_letters) {
            if (!h.live(c)) break;
            h.scan(ls, c, true);
        }
        if (!h.live(c)) continue;
        for (int l = 0; l < 2 * ngens; ++l) {
            if (!h.live(c)) break;
            if (h.get(h.find(c), l) < 0) {
                int n = h.new_coset();
                h.set_edge(h.find(c), l, n);
            }
        }
    }

    // compact live cosets in discovery order
    std::vector<int> index(h.tab.size(), -1);
    int live = 0;
    for (std::size_t c = 0; c < h.tab.size(); ++c)
        if (h.find(static_cast<int>(c)) == static_cast<int>(c)) index[c] = live++;
    CosetTable t;
    t.ngens = ngens;
    t.subgroup_generators = subgroup_gens;
    t.action.assign(static_cast<std::size_t>(live), std::vector<int>(static_cast<std::size_t>(2 * ngens), -1));
    bool complete = true;
    for (std::size_t c = 0; c < h.tab.size(); ++c) {
        if (index[c] < 0) continue;
        for (int l = 0; l < 2 * ngens; ++l) {
            int d = h.get(static_cast<int>(c), l);
            if (d < 0) {
                complete = false;
                continue;
            }
            t.action[static_cast<std::size_t>(index[c])][static_cast<std::size_t>(l)] =
                index[static_cast<std::size_t>(h.find(d))];
        }
    }
    t.complete = complete;
    require(complete, errc::coset_limit_exceeded, "enumeration finished with an incomplete table");

    // consistency certificate: every relator closes from every coset, and
    // the subgroup generators fix coset 0
    auto trace = [&](const std::vector<int>& ls, int c) {
        for (int l : ls) c = t.action[static_cast<std::size_t>(c)][static_cast<std::size_t>(l)];
        return c;
    };
    for (const Word& r : p.relators) {
        auto ls = detail::letters_of(reduce(r));
        for (int c = 0; c < static_cast<int>(t.size()); ++c)
            require(trace(ls, c) == c, errc::incomplete_table, "relator fails to close on the table");
    }
    for (const Word& w : subgroup_gens)
        require(trace(detail::letters_of(reduce(w)), 0) == 0, errc::incomplete_table,
                "subgroup generator moves coset 0");
    return t;
}

// Coset table of the abelianization kernel (the derived subgroup): cosets
// are the elements of the finite abelianization, the action is addition of
// generator images. Raises CosetLimitExceeded when the abelianization is
// infinite.
inline CosetTable derived_subgroup_table(const Presentation& p) {
    AbelianInvariants ab = abelianization(p);
    require(ab.free_rank == 0, errc::coset_limit_exceeded,
            "derived subgroup has infinite index: free abelianization part");
    std::size_t order = 1;
    std::vector<std::size_t> radix;
    for (const bigint& f : ab.factors) {
        radix.push_back(static_cast<std::size_t>(f));
        order *= static_cast<std::size_t>(f);
    }
    int ngens = static_cast<int>(p.generators.size());
    CosetTable t;
    t.ngens = ngens;
    t.complete = true;
    t.action.assign(order, std::vector<int>(static_cast<std::size_t>(2 * ngens), -1));

    auto decode = [&](std::size_t c) {
        std::vector<std::size_t> v(radix.size());
        for (std::size_t j = 0; j < radix.size(); ++j) {
            v[j] = c % radix[j];
            c /= radix[j];
        }
        return v;
    };
    auto encode = [&](const std::vector<std::size_t>& v) {
        std::size_t c = 0;
        for (std::size_t j = radix.size(); j-- > 0;) c = c * radix[j] + v[j];
        return c;
    };
    for (std::size_t c = 0; c < order; ++c) {
        auto v = decode(c);
        for (int g = 0; g < ngens; ++g) {
            auto w = v;
            for (std::size_t j = 0; j < radix.size(); ++j) {
                std::size_t img = static_cast<std::size_t>(ab.torsion_images[static_cast<std::size_t>(g)][j]);
                w[j] = (v[j] + img) % radix[j];
            }
            t.action[c][static_cast<std::size_t>(2 * g)] = static_cast<int>(encode(w));
            t.action[static_cast<std::size_t>(encode(w))][static_cast<std::size_t>(2 * g + 1)] =
                static_cast<int>(c);
        }
    }
    // canonical subgroup generators: commutators of the generator pairs
    for (int a = 0; a < ngens; ++a)
        for (int b = a + 1; b < ngens; ++b)
            t.subgroup_generators.push_back(
                reduce(Word{{{a, 1}, {b, 1}, {a, -1}, {b, -1}}}));
    return t;
}

// Subgroup presentation on Schreier generators over a breadth-first
// transversal; relators are the rewritten conjugated relators, freely
// reduced.
inline Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t,
                                          bool depth_first_transversal = false) {
    require(t.complete, errc::incomplete_table, "subgroup presentation needs a complete table");
    int ngens = t.ngens;
    std::size_t n = t.size();

    // transversal: tree edges discovered breadth-first (or depth-first)
    std::vector<int> tree_edge(n, -2);  // letter used to enter coset, -2 unvisited
    std::vector<int> tree_from(n, -1);
    tree_edge[0] = -1;
    std::vector<std::size_t> order{0};
    if (!depth_first_transversal) {
        for (std::size_t head = 0; head < order.size(); ++head) {
            std::size_t c = order[head];
            for (int l = 0; l < 2 * ngens; ++l) {
                int d = t.action[c][static_cast<std::size_t>(l)];
                if (tree_edge[static_cast<std::size_t>(d)] == -2) {
                    tree_edge[static_cast<std::size_t>(d)] = l;
                    tree_from[static_cast<std::size_t>(d)] = static_cast<int>(c);
                    order.push_back(static_cast<std::size_t>(d));
                }
            }
        }
    } else {
        std::vector<std::size_t> stack{0};
        while (!stack.empty()) {
            std::size_t c = stack.back();
            stack.pop_back();
            for (int l = 2 * ngens - 1; l >= 0; --l) {
                int d = t.action[c][static_cast<std::size_t>(l)];
                if (tree_edge[static_cast<std::size_t>(d)] == -2) {
                    tree_edge[static_cast<std::size_t>(d)] = l;
                    tree_from[static_cast<std::size_t>(d)] = static_cast<int>(c);
                    stack.push_back(static_cast<std::size_t>(d));
                }
            }
        }
    }

    // Schreier generator index for non-tree edges (coset, positive letter)
    std::vector<std::vector<int>> sgen(n, std::vector<int>(static_cast<std::size_t>(ngens), -1));
    auto is_tree = [&](std::size_t c, int g) {
        int d = t.action[c][static_cast<std::size_t>(2 * g)];
        return (tree_edge[static_cast<std::size_t>(d)] == 2 * g &&
                tree_from[static_cast<std::size_t>(d)] == static_cast<int>(c)) ||
               (tree_edge[c] == 2 * g + 1 && tree_from[c] == d);
    };
    Presentation sub;
    for (std::size_t c = 0; c < n; ++c)
        for (int g = 0; g < ngens; ++g) {
            if (is_tree(c, g)) continue;
            sgen[c][static_cast<std::size_t>(g)] = static_cast<int>(sub.generators.size());
            sub.generators.push_back("x" + std::to_string(c) + "_" + p.generators[static_cast<std::size_t>(g)]);
        }

    // rewrite a relator conjugated into the subgroup, starting at coset c
    auto rewrite = [&](const std::vector<int>& ls, std::size_t c) {
        Word w;
        std::size_t u = c;
        for (int l : ls) {
            int g = l / 2;
            if ((l & 1) == 0) {
                int s = sgen[u][static_cast<std::size_t>(g)];
                if (s >= 0) w.syl.push_back({s, 1});
                u = static_cast<std::size_t>(t.action[u][static_cast<std::size_t>(l)]);
            } else {
                std::size_t v = static_cast<std::size_t>(t.action[u][static_cast<std::size_t>(l)]);
                int s = sgen[v][static_cast<std::size_t>(g)];
                if (s >= 0) w.syl.push_back({s, -1});
                u = v;
            }
        }
        require(u == c, errc::incomplete_table, "relator scan did not close");
        return reduce(std::move(w));
    };
    for (const Word& r : p.relators) {
        auto ls = detail::letters_of(reduce(r));
        for (std::size_t c = 0; c < n; ++c) {
            Word w = rewrite(ls, c);
            if (!w.empty()) sub.relators.push_back(std::move(w));
        }
    }
    return sub;
}

struct PerfectCheckReport {
    bigint subgroup_index = 0;
    AbelianInvariants subgroup_abelianization;
    bool perfect = false;
};

// derived-subgroup perfection: enumerate the abelianization kernel, present
// it, and test that its own abelianization is trivial
inline PerfectCheckReport perfect_check(const Presentation& p) {
    CosetTable t = derived_subgroup_table(p);
    PerfectCheckReport r;
    r.subgroup_index = t.size();
    Presentation sub = reidemeister_schreier(p, t);
    r.subgroup_abelianization = abelianization(sub);
    r.perfect = r.subgroup_abelianization.trivial();
    return r;
}

// GAP-compatible text export of a presentation
inline std::string gap_export(const Presentation& p) {
    std::string s = "F := FreeGroup(";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (i) s += ", ";
        s += "\"" + p.generators[i] + "\"";
    }
    s += ");;\nG := F / [ ";
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        if (r) s += ", ";
        if (p.relators[r].empty()) {
            s += "One(F)";
            continue;
        }
        std::string w;
        for (const Syllable& y : p.relators[r].syl) {
            if (!w.empty()) w += "*";
            w += "F." + std::to_string(y.gen + 1);
            if (y.exp != 1) w += "^" + std::to_string(y.exp);
        }
        s += w;
    }
    s += " ];;\n";
    return s;
}

// parse the subset of GAP emitted by gap_export
inline Presentation gap_import(const std::string& text) {
    Presentation p;
    auto fail_parse = [&](const std::string& why) { fail(errc::bad_argument, "GAP import: " + why); };
    std::size_t fg = text.find("FreeGroup(");
    if (fg == std::string::npos) fail_parse("FreeGroup(...) not found");
    std::size_t close = text.find(')', fg);
    std::string gens = text.substr(fg + 10, close - fg - 10);
    std::size_t pos = 0;
    while ((pos = gens.find('"', pos)) != std::string::npos) {
        std::size_t end = gens.find('"', pos + 1);
        p.generators.push_back(gens.substr(pos + 1, end - pos - 1));
        pos = end + 1;
    }
    std::size_t lb = text.find('[', close);
    std::size_t rb = text.rfind(']');
    if (lb == std::string::npos || rb == std::string::npos) fail_parse("relator list not found");
    std::string body = text.substr(lb + 1, rb - lb - 1);
    body += ',';
    Word cur;
    std::size_t i = 0;
    auto flush = [&]() {
        cur = reduce(std::move(cur));
        if (!cur.empty()) p.relators.push_back(cur);
        cur = Word{};
    };
    while (i < body.size()) {
        char c = body[i];
        if (c == ',' ) { flush(); ++i; continue; }
        if (isspace(static_cast<unsigned char>(c)) || c == '*') { ++i; continue; }
        if (c == 'O') {  // One(F)
            while (i < body.size() && body[i] != ',') ++i;
            continue;
        }
        if (c == 'F') {
            if (i + 1 >= body.size() || body[i + 1] != '.') fail_parse("expected F.<k>");
            i += 2;
            std::size_t j = i;
            while (j < body.size() && isdigit(static_cast<unsigned char>(body[j]))) ++j;
            int gen = std::stoi(body.substr(i, j - i)) - 1;
            i = j;
            long long e = 1;
            if (i < body.size() && body[i] == '^') {
                ++i;
                std::size_t k = i;
                if (k < body.size() && body[k] == '-') ++k;
                while (k < body.size() && isdigit(static_cast<unsigned char>(body[k]))) ++k;
                e = std::stoll(body.substr(i, k - i));
                i = k;
            }
            cur.syl.push_back({gen, e});
            continue;
        }
        fail_parse(std::string("unexpected character '") + c + "'");
    }
    return p;
}

}  // namespace abt
