#pragma once

// An explicit finite ball of the building of SL_3 over F_q((t)).
//
// Vertices are homothety classes of rank-3 lattices over F_q[[t]],
// represented by canonical column Hermite forms: lower triangular with
// monomial diagonal t^a_i, subdiagonal entries reduced modulo the diagonal
// of their row, and the class normalized so the minimal entry valuation is
// zero. The ball of radius r holds every class L with
// t^r L0 <= L <= t^-r L0, equivalently distance sum i+j <= 2r from the base
// class; x ~ y iff representatives satisfy tL < L' < L.
//
// All distance computations reduce to the t-adic valuations of the
// determinantal divisors of adj(X) * Y, which are exact polynomial data.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <string>
#include <unordered_map>
#include <vector>

#include "abt/apartment.hpp"
#include "abt/error.hpp"
#include "abt/field.hpp"
#include "abt/laurent.hpp"
#include "abt/plane.hpp"

namespace abt {

namespace bt {

constexpr int kPolyCap = 44;
constexpr int kValInf = 1 << 20;

// dense truncated polynomial over F_p, p prime, coefficients below `len`
struct TPoly {
    std::uint8_t len = 0;
    std::array<std::uint8_t, kPolyCap> c{};

    bool zero() const {
        for (int i = 0; i < len; ++i)
            if (c[static_cast<std::size_t>(i)]) return false;
        return true;
    }
    int val() const {
        for (int i = 0; i < len; ++i)
            if (c[static_cast<std::size_t>(i)]) return i;
        return kValInf;
    }
    void trim() {
        while (len > 0 && c[static_cast<std::size_t>(len - 1)] == 0) --len;
    }
};

inline TPoly tp_monomial(int e, std::uint8_t coef = 1) {
    TPoly r;
    r.len = static_cast<std::uint8_t>(e + 1);
    r.c[static_cast<std::size_t>(e)] = coef;
    return r;
}

inline TPoly tp_add(const TPoly& a, const TPoly& b, std::uint32_t p) {
    TPoly r;
    r.len = std::max(a.len, b.len);
    for (int i = 0; i < r.len; ++i)
        r.c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
            (a.c[static_cast<std::size_t>(i)] + b.c[static_cast<std::size_t>(i)]) % p);
    r.trim();
    return r;
}

inline TPoly tp_sub(const TPoly& a, const TPoly& b, std::uint32_t p) {
    TPoly r;
    r.len = std::max(a.len, b.len);
    for (int i = 0; i < r.len; ++i)
        r.c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
            (a.c[static_cast<std::size_t>(i)] + p - b.c[static_cast<std::size_t>(i)]) % p);
    r.trim();
    return r;
}

inline TPoly tp_mul(const TPoly& a, const TPoly& b, std::uint32_t p, int cap) {
    TPoly r;
    if (a.len == 0 || b.len == 0) return r;
    int n = std::min(cap, a.len + b.len - 1);
    r.len = static_cast<std::uint8_t>(n);
    for (int i = 0; i < a.len; ++i) {
        std::uint8_t ai = a.c[static_cast<std::size_t>(i)];
        if (!ai) continue;
        int jmax = std::min<int>(b.len, n - i);
        for (int j = 0; j < jmax; ++j) {
            std::uint8_t& dst = r.c[static_cast<std::size_t>(i + j)];
            dst = static_cast<std::uint8_t>((dst + ai * b.c[static_cast<std::size_t>(j)]) % p);
        }
    }
    r.trim();
    return r;
}

inline TPoly tp_scale(const TPoly& a, std::uint8_t s, std::uint32_t p) {
    TPoly r = a;
    for (int i = 0; i < r.len; ++i)
        r.c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
            (r.c[static_cast<std::size_t>(i)] * s) % p);
    r.trim();
    return r;
}

// multiply by t^-e (exact division by a monomial)
inline TPoly tp_shift_down(const TPoly& a, int e) {
    TPoly r;
    if (a.len <= e) return r;
    r.len = static_cast<std::uint8_t>(a.len - e);
    for (int i = 0; i < r.len; ++i) r.c[static_cast<std::size_t>(i)] = a.c[static_cast<std::size_t>(i + e)];
    return r;
}

inline TPoly tp_truncate(const TPoly& a, int cap) {
    TPoly r = a;
    if (r.len > cap) r.len = static_cast<std::uint8_t>(cap);
    r.trim();
    return r;
}

// inverse of a unit (val 0) modulo t^cap
inline TPoly tp_unit_inverse(const TPoly& a, std::uint32_t p, int cap) {
    TPoly r;
    r.len = static_cast<std::uint8_t>(cap);
    // inverse of a.c[0] mod p
    std::uint8_t inv0 = 1;
    for (std::uint8_t x = 1; x < p; ++x)
        if (x * a.c[0] % p == 1) inv0 = x;
    r.c[0] = inv0;
    for (int n = 1; n < cap; ++n) {
        std::uint32_t s = 0;
        for (int k = 1; k <= n && k < a.len; ++k)
            s += static_cast<std::uint32_t>(a.c[static_cast<std::size_t>(k)]) *
                 r.c[static_cast<std::size_t>(n - k)];
        r.c[static_cast<std::size_t>(n)] = static_cast<std::uint8_t>((p - s % p) % p * inv0 % p);
    }
    r.trim();
    return r;
}

using Col = std::array<TPoly, 3>;   // one column of a lattice basis
using Mat = std::array<TPoly, 9>;   // row-major 3x3

struct LatticeRep {
    Mat m;        // canonical lower-triangular basis, columns generate
    int a[3];     // diagonal valuations
    int sum() const { return a[0] + a[1] + a[2]; }
};

inline std::string rep_key(const LatticeRep& r) {
    std::string s;
    for (const TPoly& e : r.m) {
        s.push_back(static_cast<char>(e.len));
        s.append(reinterpret_cast<const char*>(e.c.data()), e.len);
    }
    return s;
}

}  // namespace bt

class BuildingBall {
  public:
    // All homothety classes L with t^r L0 <= L <= t^-r L0.
    static BuildingBall build(std::uint32_t q, int r) {
        require(q == 2 || q == 3, errc::size_guard_exceeded, "ball supports q in {2,3}");
        require(r >= 1 && r <= 4, errc::size_guard_exceeded, "ball supports radius <= 4");
        return BuildingBall(q, r);
    }

    std::uint32_t q() const { return q_; }
    int radius() const { return r_; }
    int ltop() const { return 2 * r_; }  // max distance sum from the base vertex
    int base_vertex() const { return 0; }
    int n_vertices() const { return static_cast<int>(verts_.size()); }
    int vertex_type(int v) const { return type_[static_cast<std::size_t>(v)]; }
    int layer(int v) const { return ell0_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    const bt::LatticeRep& rep(int v) const { return verts_[static_cast<std::size_t>(v)]; }

    int full_degree() const { return static_cast<int>(2 * (q_ * q_ + q_ + 1)); }

    // vector distance: the dominant shape (i, j) of the pair (x, y),
    // normalized so the smallest invariant-factor valuation is zero
    Vec vector_distance(int x, int y) const {
        if (x == y) return {0, 0};
        const bt::Mat& A = adjugate_[static_cast<std::size_t>(x)];
        const bt::Mat& Y = verts_[static_cast<std::size_t>(y)].m;
        bt::Mat M;
        int v1 = bt::kValInf;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                bt::TPoly s;
                for (int k = 0; k < 3; ++k)
                    s = bt::tp_add(s,
                                   bt::tp_mul(A[static_cast<std::size_t>(3 * i + k)],
                                              Y[static_cast<std::size_t>(3 * k + j)], p_, ntrunc_),
                                   p_);
                v1 = std::min(v1, s.val());
                M[static_cast<std::size_t>(3 * i + j)] = s;
            }
        int v12 = bt::kValInf;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
                bt::TPoly minor = bt::tp_sub(
                    bt::tp_mul(M[static_cast<std::size_t>(3 * i1 + j1)],
                               M[static_cast<std::size_t>(3 * i2 + j2)], p_, ntrunc_),
                    bt::tp_mul(M[static_cast<std::size_t>(3 * i1 + j2)],
                               M[static_cast<std::size_t>(3 * i2 + j1)], p_, ntrunc_),
                    p_);
                v12 = std::min(v12, minor.val());
            }
        int v123 = 2 * verts_[static_cast<std::size_t>(x)].sum() + verts_[static_cast<std::size_t>(y)].sum();
        require(v1 < ntrunc_ && v12 < ntrunc_, errc::insufficient_precision,
                "divisor valuations exceed the working precision");
        int w1 = v1, w2 = v12 - v1, w3 = v123 - v12;
        require(w1 <= w2 && w2 <= w3, errc::insufficient_precision, "divisors out of order");
        return {w3 - w2, w2 - w1};
    }

    // fast test vector_distance(x, y) == target with early exits; used by
    // quadratic pair scans
    bool at_shape(int x, int y, Vec target) const {
        if (x == y) return target == Vec{0, 0};
        int total = 2 * verts_[static_cast<std::size_t>(x)].sum() + verts_[static_cast<std::size_t>(y)].sum();
        int w1x3 = total - target.i - 2 * target.j;
        if (w1x3 < 0 || w1x3 % 3) return false;
        int w1 = w1x3 / 3;
        int w12 = 2 * w1 + target.j;
        const bt::Mat& A = adjugate_[static_cast<std::size_t>(x)];
        const bt::Mat& Y = verts_[static_cast<std::size_t>(y)].m;
        bt::Mat M;
        int v1 = bt::kValInf;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                bt::TPoly s;
                for (int k = 0; k < 3; ++k)
                    s = bt::tp_add(s,
                                   bt::tp_mul(A[static_cast<std::size_t>(3 * i + k)],
                                              Y[static_cast<std::size_t>(3 * k + j)], p_, ntrunc_),
                                   p_);
                int v = s.val();
                if (v < w1) return false;
                v1 = std::min(v1, v);
                M[static_cast<std::size_t>(3 * i + j)] = s;
            }
        if (v1 != w1) return false;
        int v12 = bt::kValInf;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
                bt::TPoly minor = bt::tp_sub(
                    bt::tp_mul(M[static_cast<std::size_t>(3 * i1 + j1)],
                               M[static_cast<std::size_t>(3 * i2 + j2)], p_, ntrunc_),
                    bt::tp_mul(M[static_cast<std::size_t>(3 * i1 + j2)],
                               M[static_cast<std::size_t>(3 * i2 + j1)], p_, ntrunc_),
                    p_);
                int v = minor.val();
                if (v < w12) return false;
                v12 = std::min(v12, v);
            }
        return v12 == w12;
    }

    // graph distance to the nearest vertex with missing neighbors; vertices
    // with depth >= d have complete spheres up to distance sum d
    int depth(int v) const { return depth_[static_cast<std::size_t>(v)]; }

    bool sphere_complete(int x, Vec lambda) const {
        return length(lambda) <= depth(x);
    }

    // the sphere V_lambda(x); SphereTruncated unless provably complete
    std::vector<int> sphere(int x, Vec lambda) const {
        require(is_dominant(lambda), errc::bad_argument, "sphere shape must be dominant");
        require(sphere_complete(x, lambda), errc::sphere_truncated,
                "sphere of radius " + std::to_string(length(lambda)) + " at a vertex of depth " +
                    std::to_string(depth(x)));
        std::vector<int> out;
        for (int v = 0; v < n_vertices(); ++v)
            if (vector_distance(x, v) == lambda) out.push_back(v);
        return out;
    }

    // x lies between y' and y in the vector sense: shapes add exactly
    bool geodesic_between(int x, int y, int yp) const {
        Vec a = vector_distance(yp, x), b = vector_distance(x, y), c = vector_distance(yp, y);
        return c == a + b;
    }

    bool adjacent(int u, int v) const {
        if (u == v) return false;
        Vec d = vector_distance(u, v);
        return d == Vec{1, 0} || d == Vec{0, 1};
    }

    // link of an interior vertex as a projective plane: points are the
    // (1,0)-neighbors, lines the (0,1)-neighbors, incidence is adjacency.
    // Stored neighbor lists are complete only at depth >= 1, and incidence
    // inside the link is decided by vector distance, never by stored edges.
    IncidencePlane link(int v) const {
        require(depth(v) >= 1, errc::sphere_truncated, "link of a boundary vertex is incomplete");
        std::vector<int> pts, lns;
        for (int u : neighbors(v)) {
            Vec d = vector_distance(v, u);
            if (d == Vec{1, 0})
                pts.push_back(u);
            else
                lns.push_back(u);
        }
        std::vector<Flag> inc;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = 0; j < lns.size(); ++j)
                if (adjacent(pts[i], lns[j])) inc.push_back({static_cast<int>(i), static_cast<int>(j)});
        return IncidencePlane(static_cast<int>(q_), static_cast<int>(pts.size()),
                              static_cast<int>(lns.size()), inc);
    }

    // chambers (triangles with a vertex of each type) through a vertex
    std::size_t chambers_through(int v) const {
        require(depth(v) >= 1, errc::sphere_truncated, "chamber count at a boundary vertex");
        const auto& nb = neighbors(v);
        std::size_t c = 0;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (vertex_type(nb[i]) != vertex_type(nb[j]) && adjacent(nb[i], nb[j])) ++c;
        return c;
    }

    // candidate set containing all u two steps from z along an interior
    // intermediate; complete whenever the relevant intermediates are interior
    std::vector<int> two_step_candidates(int z) const { return candidates_at_two_steps(z); }

    // the vertex of V_{(m,m)}(x) between x and z, unique when z lies at
    // (m+1,m+1) or deeper on a common sector diagonal; -1 if none
    int diagonal_predecessor(int x, int z) const {
        Vec d = vector_distance(x, z);
        require(d.i == d.j && d.i >= 1, errc::bad_argument, "needs a diagonal pair");
        if (d.i == 1) return x;
        int found = -1;
        for (int u : candidates_at_two_steps(z)) {
            if (vector_distance(x, u) != Vec{d.i - 1, d.j - 1}) continue;
            if (vector_distance(u, z) != Vec{1, 1}) continue;
            require(found < 0, errc::bad_argument, "diagonal predecessor not unique");
            found = u;
        }
        return found;
    }

    // export of the DVR matrix of a vertex for the public laurent interface
    DVRMatrix to_dvr(int v, const FieldSpec& F) const {
        DVRMatrix m;
        m.field = &F;
        m.precision = inf_prec;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const bt::TPoly& e = verts_[static_cast<std::size_t>(v)].m[static_cast<std::size_t>(3 * i + j)];
                std::vector<felt> cs;
                for (int k = 0; k < e.len; ++k) cs.push_back(e.c[static_cast<std::size_t>(k)]);
                m(i, j) = Laurent(F, 0, std::move(cs));
            }
        return m;
    }

  private:
    BuildingBall(std::uint32_t q, int r) : q_(q), p_(q), r_(r) {
        nhnf_ = 4 * r + 8;
        ntrunc_ = 8 * r + 6;
        require(ntrunc_ < bt::kPolyCap, errc::size_guard_exceeded, "polynomial capacity");
        build_subspaces();
        bfs();
        compute_depth();
    }

    // ---- linear algebra over F_q for link subspaces ----------------------
    void build_subspaces() {
        // normalized nonzero triples (first nonzero coordinate 1)
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b)
                for (std::uint32_t c = 0; c < q_; ++c) {
                    if (!a && !b && !c) continue;
                    std::array<std::uint32_t, 3> t{a, b, c};
                    int first = t[0] ? 0 : (t[1] ? 1 : 2);
                    if (t[static_cast<std::size_t>(first)] != 1) continue;
                    dim1_.push_back(t);
                }
        // 2-dim subspaces: kernel bases of normalized covectors
        for (const auto& w : dim1_) {
            int k = w[0] ? 0 : (w[1] ? 1 : 2);
            std::array<std::array<std::uint32_t, 3>, 2> basis{};
            int bi = 0;
            for (int i = 0; i < 3; ++i) {
                if (i == k) continue;
                std::array<std::uint32_t, 3> u{};
                u[static_cast<std::size_t>(i)] = 1;
                // u - w_i * e_k (w_k = 1)
                u[static_cast<std::size_t>(k)] = (q_ - w[static_cast<std::size_t>(i)] % q_) % q_;
                basis[static_cast<std::size_t>(bi++)] = u;
            }
            dim2_.push_back(basis);
        }
    }

    // ---- canonical Hermite form -------------------------------------------
    bt::LatticeRep canonicalize(std::vector<bt::Col> cols) const {
        const std::uint32_t p = p_;
        const int N = nhnf_;
        std::array<bt::Col, 3> piv{};
        std::vector<bt::Col> act = std::move(cols);
        for (int row = 0; row < 3; ++row) {
            int best = -1, bestv = bt::kValInf;
            for (std::size_t c = 0; c < act.size(); ++c) {
                int v = act[c][static_cast<std::size_t>(row)].val();
                if (v < bestv) {
                    bestv = v;
                    best = static_cast<int>(c);
                }
            }
            require(best >= 0 && bestv < N, errc::insufficient_precision,
                    "rank deficiency in lattice canonicalization");
            bt::Col pc = act[static_cast<std::size_t>(best)];
            act.erase(act.begin() + best);
            // normalize: multiply the column by the inverse of the unit part
            bt::TPoly unit = bt::tp_shift_down(pc[static_cast<std::size_t>(row)], bestv);
            bt::TPoly uinv = bt::tp_unit_inverse(unit, p, N);
            for (auto& e : pc) e = bt::tp_mul(e, uinv, p, N);
            pc[static_cast<std::size_t>(row)] = bt::tp_monomial(bestv);
            // clear this row in the remaining columns
            for (auto& c : act) {
                bt::TPoly& e = c[static_cast<std::size_t>(row)];
                if (e.zero()) continue;
                bt::TPoly f = bt::tp_shift_down(e, bestv);
                for (int i = 0; i < 3; ++i) {
                    bt::TPoly sub = bt::tp_mul(f, pc[static_cast<std::size_t>(i)], p, N);
                    // re-shift: f * pc has the t^bestv of the pivot inside
                    c[static_cast<std::size_t>(i)] = bt::tp_sub(c[static_cast<std::size_t>(i)], sub, p);
                }
                require(c[static_cast<std::size_t>(row)].zero(), errc::insufficient_precision,
                        "row clearing failed");
            }
            piv[static_cast<std::size_t>(row)] = pc;
        }
        // reduce subdiagonal entries modulo the diagonal of their row
        auto reduce_with = [&](bt::Col& target, const bt::Col& pivot, int row) {
            int a = pivot[static_cast<std::size_t>(row)].val();
            bt::TPoly& e = target[static_cast<std::size_t>(row)];
            if (e.len <= a) return;
            bt::TPoly f = bt::tp_shift_down(e, a);
            for (int i = 0; i < 3; ++i)
                target[static_cast<std::size_t>(i)] = bt::tp_sub(
                    target[static_cast<std::size_t>(i)],
                    bt::tp_mul(f, pivot[static_cast<std::size_t>(i)], p, N), p);
        };
        reduce_with(piv[0], piv[1], 1);
        reduce_with(piv[0], piv[2], 2);
        reduce_with(piv[1], piv[2], 2);

        // homothety normalization: divide by the minimal entry valuation
        int vmin = bt::kValInf;
        for (const auto& c : piv)
            for (const auto& e : c) vmin = std::min(vmin, e.val());
        if (vmin > 0 && vmin < bt::kValInf)
            for (auto& c : piv)
                for (auto& e : c) e = bt::tp_shift_down(e, vmin);

        bt::LatticeRep rep;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                rep.m[static_cast<std::size_t>(3 * i + j)] = piv[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        for (int j = 0; j < 3; ++j) {
            rep.a[j] = rep.m[static_cast<std::size_t>(3 * j + j)].val();
            require(rep.a[j] < bt::kValInf, errc::insufficient_precision, "degenerate diagonal");
        }
        return rep;
    }

    bt::Mat adjugate_of(const bt::Mat& m) const {
        bt::Mat r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int i1 = (j + 1) % 3, i2 = (j + 2) % 3;  // transposed cofactor
                int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
                r[static_cast<std::size_t>(3 * i + j)] = bt::tp_sub(
                    bt::tp_mul(m[static_cast<std::size_t>(3 * i1 + j1)],
                               m[static_cast<std::size_t>(3 * i2 + j2)], p_, ntrunc_),
                    bt::tp_mul(m[static_cast<std::size_t>(3 * i1 + j2)],
                               m[static_cast<std::size_t>(3 * i2 + j1)], p_, ntrunc_),
                    p_);
            }
        return r;
    }

    // columns of H times a vector over F_q
    bt::Col apply(const bt::Mat& m, const std::array<std::uint32_t, 3>& u) const {
        bt::Col out{};
        for (int i = 0; i < 3; ++i) {
            bt::TPoly s;
            for (int j = 0; j < 3; ++j)
                if (u[static_cast<std::size_t>(j)])
                    s = bt::tp_add(s,
                                   bt::tp_scale(m[static_cast<std::size_t>(3 * i + j)],
                                                static_cast<std::uint8_t>(u[static_cast<std::size_t>(j)]), p_),
                                   p_);
            out[static_cast<std::size_t>(i)] = s;
        }
        return out;
    }

    bt::Col times_t(const bt::Mat& m, int col) const {
        bt::Col out{};
        for (int i = 0; i < 3; ++i) {
            const bt::TPoly& e = m[static_cast<std::size_t>(3 * i + col)];
            bt::TPoly s;
            if (e.len) {
                s.len = static_cast<std::uint8_t>(std::min<int>(e.len + 1, bt::kPolyCap));
                for (int k = 0; k < e.len && k + 1 < bt::kPolyCap; ++k)
                    s.c[static_cast<std::size_t>(k + 1)] = e.c[static_cast<std::size_t>(k)];
            }
            out[static_cast<std::size_t>(i)] = s;
        }
        return out;
    }

    void bfs() {
        bt::LatticeRep base;
        for (int i = 0; i < 3; ++i) {
            base.m[static_cast<std::size_t>(3 * i + i)] = bt::tp_monomial(0);
            base.a[i] = 0;
        }
        auto push = [&](const bt::LatticeRep& rep, int ell) {
            std::string key = bt::rep_key(rep);
            auto it = index_.find(key);
            if (it != index_.end()) return it->second;
            int id = static_cast<int>(verts_.size());
            index_.emplace(std::move(key), id);
            verts_.push_back(rep);
            adjugate_.push_back(adjugate_of(rep.m));
            ell0_.push_back(ell);
            type_.push_back(rep.sum() % 3);
            adj_.emplace_back();
            return id;
        };
        push(base, 0);

        for (int v = 0; v < static_cast<int>(verts_.size()); ++v) {
            if (ell0_[static_cast<std::size_t>(v)] >= ltop()) continue;  // frontier stays unexpanded
            const bt::Mat H = verts_[static_cast<std::size_t>(v)].m;
            std::vector<bt::LatticeRep> nbrs;
            for (const auto& u : dim1_) {
                std::vector<bt::Col> gens{apply(H, u), times_t(H, 0), times_t(H, 1), times_t(H, 2)};
                nbrs.push_back(canonicalize(std::move(gens)));
            }
            for (const auto& basis : dim2_) {
                std::vector<bt::Col> gens{apply(H, basis[0]), apply(H, basis[1]), times_t(H, 0),
                                          times_t(H, 1), times_t(H, 2)};
                nbrs.push_back(canonicalize(std::move(gens)));
            }
            for (const auto& nb : nbrs) {
                int id = push(nb, ell0_[static_cast<std::size_t>(v)] + 1);
                // the true layer may be smaller when the neighbor was found
                // earlier; BFS order guarantees it is never larger
                adj_[static_cast<std::size_t>(v)].push_back(id);
            }
        }
        // symmetrize and sort adjacency (edges were generated from the
        // expanded endpoint only)
        std::vector<std::vector<int>> sym(verts_.size());
        for (std::size_t v = 0; v < verts_.size(); ++v)
            for (int u : adj_[v]) {
                sym[v].push_back(u);
                sym[static_cast<std::size_t>(u)].push_back(static_cast<int>(v));
            }
        for (std::size_t v = 0; v < verts_.size(); ++v) {
            auto& a = sym[v];
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
            adj_[v] = std::move(a);
        }
        // recompute layers exactly (BFS layer can overshoot when a vertex is
        // reachable by a shorter path discovered later in the same layer)
        for (std::size_t v = 0; v < verts_.size(); ++v)
            ell0_[v] = length(vector_distance(0, static_cast<int>(v)));
        // handshake certificate: interior vertices have full degree
        for (std::size_t v = 0; v < verts_.size(); ++v)
            if (ell0_[v] <= ltop() - 1)
                require(static_cast<int>(adj_[v].size()) == full_degree(), errc::size_guard_exceeded,
                        "ball construction incomplete: an interior vertex lacks neighbors");
    }

    void compute_depth() {
        depth_.assign(verts_.size(), -1);
        std::vector<int> frontier;
        for (std::size_t v = 0; v < verts_.size(); ++v)
            if (static_cast<int>(adj_[v].size()) < full_degree()) {
                depth_[v] = 0;
                frontier.push_back(static_cast<int>(v));
            }
        int d = 0;
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int v : frontier)
                for (int u : adj_[static_cast<std::size_t>(v)])
                    if (depth_[static_cast<std::size_t>(u)] < 0) {
                        depth_[static_cast<std::size_t>(u)] = d + 1;
                        next.push_back(u);
                    }
            frontier = std::move(next);
            ++d;
        }
        for (std::size_t v = 0; v < verts_.size(); ++v)
            if (depth_[v] < 0) depth_[v] = d;  // no deficient vertex reachable
    }

    // candidate set containing all u two steps from z along an interior
    // intermediate; the hull intermediates of guarded calls are interior
    std::vector<int> candidates_at_two_steps(int z) const {
        std::vector<int> out;
        for (int u1 : neighbors(z)) {
            if (depth(u1) < 1) continue;  // incomplete neighbor list
            for (int u2 : neighbors(u1)) out.push_back(u2);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::uint32_t q_, p_;
    int r_, nhnf_ = 0, ntrunc_ = 0;
    std::vector<std::array<std::uint32_t, 3>> dim1_;
    std::vector<std::array<std::array<std::uint32_t, 3>, 2>> dim2_;
    std::vector<bt::LatticeRep> verts_;
    std::vector<bt::Mat> adjugate_;
    std::vector<int> ell0_, type_, depth_;
    std::vector<std::vector<int>> adj_;
    std::unordered_map<std::string, int> index_;
};

inline BuildingBall build_ball(std::uint32_t q, int r) { return BuildingBall::build(q, r); }

}  // namespace abt
