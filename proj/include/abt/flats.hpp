#pragma once

// Sector germs, flat enumeration and the counting lemmas on a building
// ball: partial flats are enumerated as isometric, type-compatible images
// of position sets in the model apartment, anchored at a basepoint and a
// sector germ, with every placement certified by pairwise vector distances.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "abt/apartment.hpp"
#include "abt/ball.hpp"
#include "abt/error.hpp"

namespace abt {

struct DistCache {
    const BuildingBall* ball;
    std::unordered_map<std::uint64_t, Vec> memo;

    explicit DistCache(const BuildingBall& b) : ball(&b) {}

    Vec d(int x, int y) {
        if (x == y) return {0, 0};
        bool sw = x > y;
        int a = sw ? y : x, b = sw ? x : y;
        std::uint64_t k = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
        auto it = memo.find(k);
        Vec v;
        if (it == memo.end()) {
            v = ball->vector_distance(a, b);
            memo.emplace(k, v);
        } else {
            v = it->second;
        }
        return sw ? Vec{v.j, v.i} : v;
    }
};

// x = z_0, z_1, ..., z_k along the diagonal of a sector based at x:
// vector_distance(x, z_m) = (m, m), consecutive distances (1,1)
struct SectorGerm {
    int base = -1;
    std::vector<int> diag;  // z_1 .. z_k
    int depth() const { return static_cast<int>(diag.size()); }
    int tip() const { return diag.empty() ? base : diag.back(); }
    int at(int m) const { return m == 0 ? base : diag[static_cast<std::size_t>(m - 1)]; }
};

// the unique germ from x through a vertex z with vector_distance (k,k):
// successive diagonal predecessors
inline SectorGerm germ_through(const BuildingBall& B, int x, int z) {
    Vec d = B.vector_distance(x, z);
    require(d.i == d.j && d.i >= 1, errc::bad_argument, "germ_through needs a diagonal pair");
    SectorGerm g;
    g.base = x;
    g.diag.assign(static_cast<std::size_t>(d.i), -1);
    int cur = z;
    for (int m = d.i; m >= 1; --m) {
        g.diag[static_cast<std::size_t>(m - 1)] = cur;
        if (m > 1) {
            cur = B.diagonal_predecessor(x, cur);
            require(cur >= 0, errc::germ_too_shallow, "diagonal predecessor missing");
        }
    }
    return g;
}

// all one-step extensions of a germ (deterministic order)
inline std::vector<int> germ_extensions(const BuildingBall& B, const SectorGerm& g) {
    int k = g.depth();
    std::vector<int> out;
    for (int w : B.two_step_candidates(g.tip())) {
        if (B.vector_distance(g.base, w) != Vec{k + 1, k + 1}) continue;
        if (B.vector_distance(g.tip(), w) != Vec{1, 1}) continue;
        out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// positions of the model apartment ball of radius rho, ordered by
// (distance, i, j); the first entry is the origin
inline std::vector<Vec> sigma_ball_positions(int rho) {
    std::vector<Vec> out;
    for (int i = -2 * rho; i <= 2 * rho; ++i)
        for (int j = -2 * rho; j <= 2 * rho; ++j)
            if (sigma_dist(Vec{i, j}) <= rho) out.push_back({i, j});
    std::sort(out.begin(), out.end(), [](Vec a, Vec b) {
        int da = sigma_dist(a), db = sigma_dist(b);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

// sector cone positions {a, b >= 0, a + b <= rho}, plus an optional boundary
// ray continued to depth ray_rho: axis = 0 extends (m, 0), axis = 1 extends
// (0, m)
inline std::vector<Vec> sector_positions(int rho, int axis = -1, int ray_rho = 0) {
    std::vector<Vec> out;
    for (int i = 0; i <= rho; ++i)
        for (int j = 0; i + j <= rho; ++j) out.push_back({i, j});
    for (int m = rho + 1; m <= ray_rho; ++m) out.push_back(axis == 0 ? Vec{m, 0} : Vec{0, m});
    std::sort(out.begin(), out.end(), [](Vec a, Vec b) {
        int da = sigma_dist(a), db = sigma_dist(b);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

// Depth-first enumeration of isometric images of a position list.
// anchors: position -> vertex for positions inside the list; constraints:
// (position, vertex) pairs outside the list (for example deep germ points).
class FlatEnumerator {
  public:
    FlatEnumerator(const BuildingBall& ball, DistCache& cache, std::vector<Vec> positions)
        : B_(ball), cache_(cache), pos_(std::move(positions)) {
        images_.assign(pos_.size(), -1);
        // support: the first earlier position at sigma-distance one
        support_.assign(pos_.size(), -1);
        for (std::size_t k = 1; k < pos_.size(); ++k) {
            for (std::size_t i = 0; i < k; ++i)
                if (sigma_dist(pos_[k] - pos_[i]) == 1 &&
                    sigma_dist(pos_[i]) < sigma_dist(pos_[k])) {
                    support_[k] = static_cast<int>(i);
                    break;
                }
            require(support_[k] >= 0, errc::bad_argument, "position list is not layered");
        }
    }

    const std::vector<Vec>& positions() const { return pos_; }

    void set_anchor(Vec p, int vertex) {
        auto it = std::find(pos_.begin(), pos_.end(), p);
        if (it != pos_.end()) {
            anchors_[static_cast<std::size_t>(it - pos_.begin())] = vertex;
        } else {
            constraints_.push_back({p, vertex});
        }
    }

    // enumerate all completions; the visitor receives the image vector
    template <class Visitor>
    void run(Visitor&& visit) {
        for (auto& [k, v] : anchors_) {
            // anchors must satisfy the constraints among themselves
            images_[k] = v;
        }
        for (auto& [k, v] : anchors_)
            require(consistent(k, v), errc::invalid_configuration,
                    "anchor assignment is not isometric");
        dfs(0, visit);
    }

  private:
    bool consistent(std::size_t k, int v) {
        // constraints and anchors first: the germ pins the direction and
        // rejects most candidates after one or two distance checks
        for (const auto& [p, u] : constraints_)
            if (cache_.d(u, v) != dominant(pos_[k] - p)) return false;
        for (const auto& [i, u] : anchors_) {
            if (i == k) continue;
            if (cache_.d(u, v) != dominant(pos_[k] - pos_[i])) return false;
        }
        for (std::size_t i = 0; i < pos_.size(); ++i) {
            if (i == k || images_[i] < 0 || anchors_.count(i)) continue;
            if (cache_.d(images_[i], v) != dominant(pos_[k] - pos_[i])) return false;
        }
        return true;
    }

    template <class Visitor>
    void dfs(std::size_t k, Visitor&& visit) {
        if (k == pos_.size()) {
            visit(images_);
            return;
        }
        if (anchors_.count(k)) {
            dfs(k + 1, visit);
            return;
        }
        int s = images_[static_cast<std::size_t>(support_[k])];
        require(B_.depth(s) >= 1, errc::sphere_truncated,
                "flat enumeration reached an incomplete neighbor list");
        Vec step = dominant(pos_[k] - pos_[static_cast<std::size_t>(support_[k])]);
        for (int v : B_.neighbors(s)) {
            if (cache_.d(s, v) != step) continue;
            if (!consistent(k, v)) continue;
            images_[k] = v;
            dfs(k + 1, visit);
            images_[k] = -1;
        }
    }

    const BuildingBall& B_;
    DistCache& cache_;
    std::vector<Vec> pos_;
    std::vector<int> images_;
    std::vector<int> support_;
    std::map<std::size_t, int> anchors_;
    std::vector<std::pair<Vec, int>> constraints_;
};

}  // namespace detail

struct FlatMaps {
    std::vector<Vec> positions;
    std::vector<std::vector<int>> maps;  // image vectors aligned with positions

    int image_at(std::size_t flat, Vec p) const {
        for (std::size_t i = 0; i < positions.size(); ++i)
            if (positions[i] == p) return maps[flat][i];
        fail(errc::bad_argument, "position outside the flat ball");
    }
};

// All flat balls of radius rho containing x (at the center) and the sector
// germ: marked by the type-preserving identification sending the origin to
// x and the positive diagonal to the germ. Germ vertices beyond the radius
// act as constraints.
inline FlatMaps flats_through(const BuildingBall& B, int x, const SectorGerm& germ, int rho) {
    require(germ.base == x, errc::bad_argument, "germ must be based at x");
    int need = std::max(rho, 2 * germ.depth());
    require(B.depth(x) >= need, errc::sphere_truncated,
            "flat radius plus germ depth exceeds the complete region");
    DistCache cache(B);
    detail::FlatEnumerator e(B, cache, detail::sigma_ball_positions(rho));
    e.set_anchor({0, 0}, x);
    for (int m = 1; m <= germ.depth(); ++m) e.set_anchor({m, m}, germ.at(m));
    FlatMaps out;
    out.positions = e.positions();
    e.run([&](const std::vector<int>& images) { out.maps.push_back(images); });
    return out;
}

struct YwCounts {
    std::array<std::size_t, 6> at_depth{};        // indexed like weyl_elements
    std::array<std::size_t, 6> at_shallower{};    // germ one step shorter
    bool stabilized = false;
    std::size_t flats = 0;
};

// |Y_w^lambda|: distinct vertices at the marked position w(lambda) over all
// flats through (x, germ); computed at the germ's depth and at depth-1, with
// a stabilization flag
inline YwCounts count_Yw(const BuildingBall& B, int x, const SectorGerm& germ, Vec lambda) {
    require(is_dominant(lambda), errc::bad_argument, "lambda must be dominant");
    require(germ.depth() >= 2, errc::germ_too_shallow, "stabilization needs germ depth >= 2");
    int rho = length(lambda);
    YwCounts out;
    for (int pass = 0; pass < 2; ++pass) {
        SectorGerm g = germ;
        if (pass == 1) g.diag.pop_back();
        FlatMaps fm = flats_through(B, x, g, rho);
        if (pass == 0) out.flats = fm.maps.size();
        for (std::size_t wi = 0; wi < 6; ++wi) {
            Vec p = weyl_apply(weyl_elements[wi], lambda);
            std::vector<int> imgs;
            for (std::size_t f = 0; f < fm.maps.size(); ++f) imgs.push_back(fm.image_at(f, p));
            std::sort(imgs.begin(), imgs.end());
            imgs.erase(std::unique(imgs.begin(), imgs.end()), imgs.end());
            (pass == 0 ? out.at_depth : out.at_shallower)[wi] = imgs.size();
        }
    }
    out.stabilized = out.at_depth == out.at_shallower;
    return out;
}

// Z_epsilon(y): the vertices y' in V_lambda(x) whose cylinders contain a
// chamber sharing a fixed type-epsilon boundary vertex with a chamber over
// y. Finite reading: fix one boundary ray (to depth ray_rho) of a sector
// through x and y on the epsilon side, and collect the position-lambda
// vertices of all sectors through x containing that ray. The count does not
// depend on the chosen ray; this uniformity is verified on a sample of rays
// and enforced.
struct ZCounts {
    std::size_t plus = 0, minus = 0;                      // per-boundary-vertex counts
    std::size_t plus_rays = 0, minus_rays = 0;            // rays through (x, y) per side
    std::size_t plus_shallower = 0, minus_shallower = 0;  // ray one step shorter
    bool stabilized = false;
    bool uniform = true;
};

namespace detail {

struct ZSide {
    std::size_t per_ray = 0;
    std::size_t rays = 0;
    std::size_t per_ray_shallower = 0;
    bool uniform = true;
};

inline std::size_t z_set_for_ray(const BuildingBall& B, DistCache& cache,
                                 const std::vector<Vec>& positions, int x, Vec lambda, int axis,
                                 const std::vector<int>& ray, std::size_t ray_len) {
    FlatEnumerator e(B, cache, positions);
    e.set_anchor({0, 0}, x);
    std::size_t ri = 0;
    for (const Vec& p : positions) {
        bool on_ray = (axis == 0) ? (p.j == 0 && p.i >= 1) : (p.i == 0 && p.j >= 1);
        if (!on_ray) continue;
        if (ri < ray_len) e.set_anchor(p, ray[ri]);
        ++ri;
    }
    std::size_t lam_idx = 0;
    for (std::size_t i = 0; i < positions.size(); ++i)
        if (positions[i] == lambda) lam_idx = i;
    std::vector<int> zs;
    e.run([&](const std::vector<int>& images) { zs.push_back(images[lam_idx]); });
    std::sort(zs.begin(), zs.end());
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
    return zs.size();
}

inline ZSide count_Z_side(const BuildingBall& B, DistCache& cache, int x, int y, Vec lambda,
                          int axis, int ray_rho, std::size_t ray_samples) {
    int rho = length(lambda);
    auto positions = sector_positions(rho, axis, ray_rho);
    // rays on the chosen side over sectors through x and y
    std::vector<std::vector<int>> rays;
    {
        FlatEnumerator e(B, cache, positions);
        e.set_anchor({0, 0}, x);
        e.set_anchor(lambda, y);
        std::vector<int> ray_idx;
        for (std::size_t i = 0; i < positions.size(); ++i) {
            Vec p = positions[i];
            bool on_ray = (axis == 0) ? (p.j == 0 && p.i >= 1) : (p.i == 0 && p.j >= 1);
            if (on_ray) ray_idx.push_back(static_cast<int>(i));
        }
        e.run([&](const std::vector<int>& images) {
            std::vector<int> ray;
            for (int i : ray_idx) ray.push_back(images[static_cast<std::size_t>(i)]);
            rays.push_back(std::move(ray));
        });
        std::sort(rays.begin(), rays.end());
        rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    }
    ZSide out;
    out.rays = rays.size();
    require(!rays.empty(), errc::sphere_truncated, "no boundary ray through the pair");
    std::size_t full_len = static_cast<std::size_t>(ray_rho);
    out.per_ray = z_set_for_ray(B, cache, positions, x, lambda, axis, rays[0], full_len);
    out.per_ray_shallower =
        z_set_for_ray(B, cache, positions, x, lambda, axis, rays[0], full_len - 1);
    std::size_t step = std::max<std::size_t>(1, rays.size() / std::max<std::size_t>(1, ray_samples));
    for (std::size_t r = step; r < rays.size(); r += step)
        if (z_set_for_ray(B, cache, positions, x, lambda, axis, rays[r], full_len) != out.per_ray)
            out.uniform = false;
    return out;
}

}  // namespace detail

inline ZCounts count_Z(const BuildingBall& B, int x, int y, int ray_rho = -1,
                       std::size_t ray_samples = 3) {
    Vec lambda = B.vector_distance(x, y);
    require(is_regular(lambda), errc::bad_argument, "count_Z needs a regular shape");
    if (ray_rho < 0) ray_rho = length(lambda) + 1;
    require(ray_rho > length(lambda), errc::bad_argument, "ray must outrun the sector radius");
    require(B.depth(x) >= ray_rho, errc::sphere_truncated, "ray depth exceeds the complete region");
    DistCache cache(B);
    detail::ZSide p = detail::count_Z_side(B, cache, x, y, lambda, 0, ray_rho, ray_samples);
    detail::ZSide m = detail::count_Z_side(B, cache, x, y, lambda, 1, ray_rho, ray_samples);
    ZCounts out;
    out.plus = p.per_ray;
    out.minus = m.per_ray;
    out.plus_rays = p.rays;
    out.minus_rays = m.rays;
    out.plus_shallower = p.per_ray_shallower;
    out.minus_shallower = m.per_ray_shallower;
    out.stabilized = out.plus == out.plus_shallower && out.minus == out.minus_shallower;
    out.uniform = p.uniform && m.uniform;
    require(out.uniform, errc::sphere_truncated,
            "per-ray counts disagree across boundary rays");
    return out;
}

namespace detail {

// h_C(x, y) with an explicit margin: among germ points usable as witnesses
// (those provably between y and the germ tip), the two deepest must agree
inline Vec horofunction_impl(const BuildingBall& B, int x, int y, const SectorGerm& germ,
                             int min_usable) {
    require(germ.base == x, errc::bad_argument, "germ must be based at x");
    int k = germ.depth();
    std::vector<Vec> h;
    for (int m = 1; m <= k; ++m) {
        int z = germ.at(m);
        // z between y and the tip, and the segment y..z extends straight to
        // the tip: shapes add
        Vec yz = B.vector_distance(y, z);
        Vec zt = B.vector_distance(z, germ.at(k));
        Vec yt = B.vector_distance(y, germ.at(k));
        if (yt != yz + zt) continue;
        h.push_back(Vec{m, m} - yz);
    }
    require(static_cast<int>(h.size()) >= min_usable, errc::germ_too_shallow,
            "no usable witness on the germ");
    require(h.size() >= 2, errc::germ_too_shallow, "need two witnesses for the stability check");
    require(h[h.size() - 1] == h[h.size() - 2], errc::germ_too_shallow,
            "deepest witnesses disagree; germ too shallow");
    return h.back();
}

}  // namespace detail

// The horofunction h_C(x, y) = lambda - mu for the deepest germ point z with
// z in V_lambda(x) and V_mu(y); the depth contract (germ reach in the
// 1-skeleton metric, 2k for a depth-k germ) is d(x, y) + 2.
inline Vec horofunction(const BuildingBall& B, int x, int y, const SectorGerm& germ) {
    int dxy = length(B.vector_distance(x, y));
    require(2 * germ.depth() >= dxy + 2, errc::germ_too_shallow,
            "germ reach must be at least d(x,y) + 2");
    return detail::horofunction_impl(B, x, y, germ, 1);
}

// The opposite-side horofunction expressed in the frame of the first germ:
// values are composed with the coordinate swap so that on a common flat
// h*_{C'}(z', z) = -h_C(z', z) exactly.
inline Vec horofunction_opposite_frame(const BuildingBall& B, int x, int y,
                                       const SectorGerm& germ_opp) {
    Vec h = detail::horofunction_impl(B, x, y, germ_opp, 1);
    return {h.j, h.i};
}

// beta_x(C, C') = h_C(x, z) + h*_{C'}(x, z) for z on a common flat of the
// germ pair; independence of z is verified on two choices. The germs must
// be opposite through x (each diagonal pair straightens across x).
inline Vec beta_value(const BuildingBall& B, int x, const SectorGerm& toward,
                      const SectorGerm& opposite) {
    require(toward.base == x && opposite.base == x, errc::bad_argument,
            "germs must be based at x");
    int m = std::min(toward.depth(), opposite.depth());
    require(m >= 1, errc::germ_too_shallow, "empty germ");
    for (int i = 1; i <= m; ++i)
        require(B.geodesic_between(x, toward.at(i), opposite.at(i)), errc::no_common_flat,
                "germ pair does not straighten across the basepoint");
    auto beta_at = [&](int z) {
        Vec a = detail::horofunction_impl(B, x, z, toward, 1);
        Vec b = horofunction_opposite_frame(B, x, z, opposite);
        return a + b;
    };
    Vec b1 = beta_at(toward.at(1));
    Vec b2 = beta_at(opposite.at(1));
    require(b1 == b2, errc::germ_too_shallow, "beta depends on the witness: germs too shallow");
    return b1;
}

// beta at a caller-chosen flat point
inline Vec beta_value_at(const BuildingBall& B, int x, const SectorGerm& toward,
                         const SectorGerm& opposite, int z) {
    Vec a = detail::horofunction_impl(B, x, z, toward, 1);
    Vec b = horofunction_opposite_frame(B, x, z, opposite);
    return a + b;
}

// re-express a germ at another basepoint: the depth-m diagonal vertex of
// Q(y, C) is the unique u in V_(m,m)(y) aligned with the deep tip
inline SectorGerm rebase_germ(const BuildingBall& B, const SectorGerm& germ, int y, int depth) {
    int tip = germ.tip();
    SectorGerm out;
    out.base = y;
    for (int m = 1; m <= depth; ++m) {
        int found = -1;
        for (int u = 0; u < B.n_vertices(); ++u) {
            if (B.vector_distance(y, u) != Vec{m, m}) continue;
            Vec ut = B.vector_distance(u, tip);
            if (B.vector_distance(y, tip) != Vec{m, m} + ut) continue;
            require(found < 0, errc::germ_too_shallow,
                    "rebased germ not unique; deepen the source germ");
            found = u;
        }
        require(found >= 0, errc::germ_too_shallow, "no rebased germ vertex found");
        out.diag.push_back(found);
    }
    return out;
}

}  // namespace abt
