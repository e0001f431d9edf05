#pragma once

// Finite projective planes as bipartite point/line incidence structures.

#include <algorithm>
#include <array>
#include <functional>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "abt/error.hpp"
#include "abt/field.hpp"

namespace abt {

struct Flag {
    int point = -1;
    int line = -1;
    friend bool operator==(Flag a, Flag b) { return a.point == b.point && a.line == b.line; }
    friend bool operator!=(Flag a, Flag b) { return !(a == b); }
    friend bool operator<(Flag a, Flag b) {
        return a.point != b.point ? a.point < b.point : a.line < b.line;
    }
};

// a vertex of the incidence graph: a point or a line
struct PVertex {
    bool is_line = false;
    int idx = -1;
    friend bool operator==(PVertex a, PVertex b) { return a.is_line == b.is_line && a.idx == b.idx; }
    friend bool operator!=(PVertex a, PVertex b) { return !(a == b); }
    friend bool operator<(PVertex a, PVertex b) {
        return a.is_line != b.is_line ? a.is_line < b.is_line : a.idx < b.idx;
    }
};

class IncidencePlane {
  public:
    IncidencePlane() = default;

    IncidencePlane(int order, int n_points, int n_lines, const std::vector<Flag>& incidences,
                   std::vector<std::string> point_labels = {},
                   std::vector<std::string> line_labels = {})
        : q_(order),
          lines_of_point_(static_cast<std::size_t>(n_points)),
          points_of_line_(static_cast<std::size_t>(n_lines)),
          point_labels_(std::move(point_labels)),
          line_labels_(std::move(line_labels)) {
        for (Flag f : incidences) {
            lines_of_point_[static_cast<std::size_t>(f.point)].push_back(f.line);
            points_of_line_[static_cast<std::size_t>(f.line)].push_back(f.point);
        }
        for (auto& v : lines_of_point_) std::sort(v.begin(), v.end());
        for (auto& v : points_of_line_) std::sort(v.begin(), v.end());
        if (point_labels_.empty())
            for (int p = 0; p < n_points; ++p) point_labels_.push_back("p" + std::to_string(p));
        if (line_labels_.empty())
            for (int l = 0; l < n_lines; ++l) line_labels_.push_back("l" + std::to_string(l));
    }

    int order() const { return q_; }
    int n_points() const { return static_cast<int>(lines_of_point_.size()); }
    int n_lines() const { return static_cast<int>(points_of_line_.size()); }

    const std::vector<int>& lines_of(int p) const {
        return lines_of_point_[static_cast<std::size_t>(p)];
    }
    const std::vector<int>& points_of(int l) const {
        return points_of_line_[static_cast<std::size_t>(l)];
    }

    const std::string& point_label(int p) const { return point_labels_[static_cast<std::size_t>(p)]; }
    const std::string& line_label(int l) const { return line_labels_[static_cast<std::size_t>(l)]; }

    bool incident(int p, int l) const {
        const auto& v = lines_of_point_[static_cast<std::size_t>(p)];
        return std::binary_search(v.begin(), v.end(), l);
    }

    // common lines of two points / common points of two lines
    std::vector<int> joining_lines(int p1, int p2) const {
        return intersect_sorted(lines_of(p1), lines_of(p2));
    }
    std::vector<int> meeting_points(int l1, int l2) const {
        return intersect_sorted(points_of(l1), points_of(l2));
    }

    // the flags through a vertex, in the canonical (point id, line id) order
    std::vector<Flag> pencil(PVertex v) const {
        std::vector<Flag> fs;
        if (v.is_line) {
            for (int p : points_of(v.idx)) fs.push_back({p, v.idx});
        } else {
            for (int l : lines_of(v.idx)) fs.push_back({v.idx, l});
        }
        std::sort(fs.begin(), fs.end());
        return fs;
    }

    // opposite = maximal distance in the incidence graph: one point and one
    // non-incident line
    bool opposite(PVertex a, PVertex b) const {
        if (a.is_line == b.is_line) return false;
        int p = a.is_line ? b.idx : a.idx;
        int l = a.is_line ? a.idx : b.idx;
        return !incident(p, l);
    }

    std::vector<PVertex> vertices() const {
        std::vector<PVertex> vs;
        for (int p = 0; p < n_points(); ++p) vs.push_back({false, p});
        for (int l = 0; l < n_lines(); ++l) vs.push_back({true, l});
        return vs;
    }

  private:
    static std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
        return r;
    }

    int q_ = 0;
    std::vector<std::vector<int>> lines_of_point_;
    std::vector<std::vector<int>> points_of_line_;
    std::vector<std::string> point_labels_, line_labels_;
};

struct AxiomReport {
    bool two_lines_unique_point = true;
    bool two_points_unique_line = true;
    bool quadrilateral = true;
    bool regular = true;          // all lines of size q+1, all pencils of size q+1
    bool counts = true;           // |points| == |lines| == q^2+q+1
    std::string witness;          // first failure found, if any

    bool pass() const {
        return two_lines_unique_point && two_points_unique_line && quadrilateral && regular &&
               counts;
    }
};

inline AxiomReport check_axioms(const IncidencePlane& P) {
    AxiomReport r;
    const int q = P.order();
    for (int l1 = 0; l1 < P.n_lines() && r.two_lines_unique_point; ++l1)
        for (int l2 = l1 + 1; l2 < P.n_lines(); ++l2) {
            auto common = P.meeting_points(l1, l2);
            if (common.size() != 1) {
                r.two_lines_unique_point = false;
                r.witness = "lines " + P.line_label(l1) + ", " + P.line_label(l2) + " meet in " +
                            std::to_string(common.size()) + " points";
                break;
            }
        }
    for (int p1 = 0; p1 < P.n_points() && r.two_points_unique_line; ++p1)
        for (int p2 = p1 + 1; p2 < P.n_points(); ++p2) {
            auto common = P.joining_lines(p1, p2);
            if (common.size() != 1) {
                r.two_points_unique_line = false;
                if (r.witness.empty())
                    r.witness = "points " + P.point_label(p1) + ", " + P.point_label(p2) +
                                " lie on " + std::to_string(common.size()) + " lines";
                break;
            }
        }

    // four points, no three on a common line
    r.quadrilateral = false;
    auto collinear = [&](int a, int b, int c) {
        for (int l : P.joining_lines(a, b))
            if (P.incident(c, l)) return true;
        return false;
    };
    for (int p1 = 0; p1 < P.n_points() && !r.quadrilateral; ++p1)
        for (int p2 = p1 + 1; p2 < P.n_points() && !r.quadrilateral; ++p2)
            for (int p3 = p2 + 1; p3 < P.n_points() && !r.quadrilateral; ++p3) {
                if (collinear(p1, p2, p3)) continue;
                for (int p4 = p3 + 1; p4 < P.n_points(); ++p4) {
                    if (!collinear(p1, p2, p4) && !collinear(p1, p3, p4) && !collinear(p2, p3, p4)) {
                        r.quadrilateral = true;
                        break;
                    }
                }
            }

    for (int l = 0; l < P.n_lines(); ++l)
        if (static_cast<int>(P.points_of(l).size()) != q + 1) {
            r.regular = false;
            if (r.witness.empty())
                r.witness = "line " + P.line_label(l) + " has " +
                            std::to_string(P.points_of(l).size()) + " points, expected " +
                            std::to_string(q + 1);
            break;
        }
    for (int p = 0; p < P.n_points() && r.regular; ++p)
        if (static_cast<int>(P.lines_of(p).size()) != q + 1) {
            r.regular = false;
            if (r.witness.empty())
                r.witness = "point " + P.point_label(p) + " lies on " +
                            std::to_string(P.lines_of(p).size()) + " lines";
            break;
        }

    int expect = q * q + q + 1;
    r.counts = (P.n_points() == expect && P.n_lines() == expect);
    if (!r.counts && r.witness.empty()) r.witness = "point/line counts differ from q^2+q+1";
    return r;
}

// homogeneous coordinates of a Desarguesian plane, index-aligned with the
// plane returned by pg2
struct ProjectiveCoords {
    std::vector<std::array<felt, 3>> points, lines;
    std::unordered_map<std::uint64_t, int> point_index, line_index;

    static std::uint64_t key(const std::array<felt, 3>& t) {
        return (static_cast<std::uint64_t>(t[0]) << 42) | (static_cast<std::uint64_t>(t[1]) << 21) |
               t[2];
    }
};

namespace detail {

inline std::array<felt, 3> normalize_triple(const FieldSpec& F, std::array<felt, 3> t) {
    for (int i = 0; i < 3; ++i) {
        if (t[static_cast<std::size_t>(i)] != 0) {
            felt inv = F.inv(t[static_cast<std::size_t>(i)]);
            for (int j = 0; j < 3; ++j)
                t[static_cast<std::size_t>(j)] = F.mul(t[static_cast<std::size_t>(j)], inv);
            return t;
        }
    }
    fail(errc::bad_argument, "cannot normalize the zero triple");
}

inline std::array<felt, 3> cross(const FieldSpec& F, const std::array<felt, 3>& a,
                                 const std::array<felt, 3>& b) {
    return {F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])),
            F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
            F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]))};
}

inline std::string triple_label(const std::array<felt, 3>& t) {
    return std::to_string(t[0]) + ":" + std::to_string(t[1]) + ":" + std::to_string(t[2]);
}

}  // namespace detail

// backtracking incidence-graph isomorphism between planes of equal order;
// line images are forced once two of their points are mapped
inline bool planes_isomorphic(const IncidencePlane& A, const IncidencePlane& B) {
    if (A.n_points() != B.n_points() || A.n_lines() != B.n_lines()) return false;
    int np = A.n_points(), nl = A.n_lines();
    std::vector<int> pmap(static_cast<std::size_t>(np), -1), lmap(static_cast<std::size_t>(nl), -1);
    std::vector<char> pused(static_cast<std::size_t>(np), 0), lused(static_cast<std::size_t>(nl), 0);

    std::function<bool(int)> rec = [&](int p) -> bool {
        if (p == np) {
            for (int l = 0; l < nl; ++l)
                if (lmap[static_cast<std::size_t>(l)] < 0) return false;
            return true;
        }
        for (int q = 0; q < np; ++q) {
            if (pused[static_cast<std::size_t>(q)]) continue;
            bool ok = true;
            for (int l : A.lines_of(p)) {
                int lm = lmap[static_cast<std::size_t>(l)];
                if (lm >= 0 && !B.incident(q, lm)) { ok = false; break; }
            }
            if (ok) {
                for (int l = 0; l < nl && ok; ++l) {
                    int lm = lmap[static_cast<std::size_t>(l)];
                    if (lm >= 0 && !A.incident(p, l) && B.incident(q, lm)) ok = false;
                }
            }
            if (!ok) continue;
            pused[static_cast<std::size_t>(q)] = 1;
            pmap[static_cast<std::size_t>(p)] = q;
            std::vector<std::pair<int, int>> forced;
            bool consistent = true;
            for (int l = 0; l < nl && consistent; ++l) {
                if (lmap[static_cast<std::size_t>(l)] >= 0) continue;
                std::vector<int> mapped;
                for (int pt : A.points_of(l))
                    if (pmap[static_cast<std::size_t>(pt)] >= 0)
                        mapped.push_back(pmap[static_cast<std::size_t>(pt)]);
                if (mapped.size() < 2) continue;
                auto ls = B.joining_lines(mapped[0], mapped[1]);
                if (ls.size() != 1 || lused[static_cast<std::size_t>(ls[0])]) { consistent = false; break; }
                for (int mp : mapped)
                    if (!B.incident(mp, ls[0])) { consistent = false; break; }
                if (consistent) {
                    lmap[static_cast<std::size_t>(l)] = ls[0];
                    lused[static_cast<std::size_t>(ls[0])] = 1;
                    forced.push_back({l, ls[0]});
                }
            }
            if (consistent && rec(p + 1)) return true;
            for (auto [l, lm] : forced) {
                lmap[static_cast<std::size_t>(l)] = -1;
                lused[static_cast<std::size_t>(lm)] = 0;
            }
            pused[static_cast<std::size_t>(q)] = 0;
            pmap[static_cast<std::size_t>(p)] = -1;
        }
        return false;
    };
    return rec(0);
}

// The Desarguesian plane PG(2, F_q): points are the normalized nonzero
// homogeneous triples (first nonzero coordinate 1) in lexicographic order,
// lines the same on the dual side, incidence is vanishing of the dot product.
inline IncidencePlane pg2(const FieldSpec& F, ProjectiveCoords* coords = nullptr) {
    require(F.size() <= 64, errc::field_too_large, "pg2 requires q <= 64");
    const felt q = F.size();
    ProjectiveCoords local;
    ProjectiveCoords& C = coords ? *coords : local;

    for (felt a = 0; a < q; ++a)
        for (felt b = 0; b < q; ++b)
            for (felt c = 0; c < q; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                std::array<felt, 3> t{a, b, c};
                if (detail::normalize_triple(F, t) != t) continue;  // keep normalized reps only
                C.point_index.emplace(ProjectiveCoords::key(t), static_cast<int>(C.points.size()));
                C.points.push_back(t);
            }
    C.lines = C.points;
    for (std::size_t i = 0; i < C.lines.size(); ++i)
        C.line_index.emplace(ProjectiveCoords::key(C.lines[i]), static_cast<int>(i));

    std::vector<Flag> inc;
    std::vector<std::string> plabels, llabels;
    for (std::size_t p = 0; p < C.points.size(); ++p) plabels.push_back(detail::triple_label(C.points[p]));
    for (std::size_t l = 0; l < C.lines.size(); ++l) llabels.push_back("[" + detail::triple_label(C.lines[l]) + "]");
    for (std::size_t p = 0; p < C.points.size(); ++p)
        for (std::size_t l = 0; l < C.lines.size(); ++l) {
            felt dot = 0;
            for (int i = 0; i < 3; ++i)
                dot = F.add(dot, F.mul(C.points[p][static_cast<std::size_t>(i)],
                                       C.lines[l][static_cast<std::size_t>(i)]));
            if (dot == 0) inc.push_back({static_cast<int>(p), static_cast<int>(l)});
        }
    return IncidencePlane(static_cast<int>(q), static_cast<int>(C.points.size()),
                          static_cast<int>(C.lines.size()), inc, std::move(plabels),
                          std::move(llabels));
}

}  // namespace abt
