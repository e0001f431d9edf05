#pragma once

// Small permutations (degree <= 16, nibble-packed) and enough permutation
// group machinery for projectivity groups: closure, orbits on tuples,
// stabilizers, conjugacy classes and normal subgroups.

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "abt/error.hpp"

namespace abt {

class Perm {
  public:
    Perm() : n_(0), d_(0) {}

    static Perm identity(int n) {
        require(n >= 0 && n <= 16, errc::degree_too_large, "permutation degree > 16");
        Perm p;
        p.n_ = n;
        for (int i = 0; i < n; ++i) p.set(i, i);
        return p;
    }

    static Perm from_images(const std::vector<int>& img) {
        Perm p = identity(static_cast<int>(img.size()));
        for (int i = 0; i < p.n_; ++i) p.set(i, img[static_cast<std::size_t>(i)]);
        return p;
    }

    int degree() const { return n_; }
    int operator()(int x) const { return static_cast<int>((d_ >> (4 * x)) & 0xF); }

    // (a*b)(x) = a(b(x))
    friend Perm operator*(const Perm& a, const Perm& b) {
        Perm r;
        r.n_ = a.n_;
        for (int i = 0; i < a.n_; ++i) r.set(i, a(b(i)));
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.n_ = n_;
        for (int i = 0; i < n_; ++i) r.set((*this)(i), i);
        return r;
    }

    bool is_identity() const { return *this == identity(n_); }

    std::uint64_t key() const { return d_; }

    friend bool operator==(const Perm& a, const Perm& b) { return a.n_ == b.n_ && a.d_ == b.d_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.d_ < b.d_; }

    std::vector<int> images() const {
        std::vector<int> v(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(i)] = (*this)(i);
        return v;
    }

  private:
    void set(int i, int v) {
        d_ &= ~(0xFULL << (4 * i));
        d_ |= static_cast<std::uint64_t>(v) << (4 * i);
    }

    int n_;
    std::uint64_t d_;
};

// closure of a generating set under composition; the certificate of
// completeness is that the breadth-first product sweep stabilizes
inline std::vector<Perm> group_closure(int degree, std::vector<Perm> gens,
                                       std::size_t limit = 50'000'000) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<Perm> elems{Perm::identity(degree)};
    seen.insert(elems[0].key());
    for (const Perm& g : gens)
        if (seen.insert(g.key()).second) elems.push_back(g);
    std::size_t head = 0;
    while (head < elems.size()) {
        Perm f = elems[head++];
        for (const Perm& g : gens) {
            Perm h = f * g;
            if (seen.insert(h.key()).second) {
                require(elems.size() < limit, errc::size_guard_exceeded, "group closure too large");
                elems.push_back(h);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

// number of orbits of the (full) element set acting on injective k-tuples
inline bool is_k_transitive(const std::vector<Perm>& elems, int degree, int k) {
    if (k > degree) return false;
    std::vector<int> base;
    for (int i = 0; i < k; ++i) base.push_back(i);
    std::unordered_set<std::uint64_t> images;
    for (const Perm& g : elems) {
        std::uint64_t key = 0;
        for (int i = 0; i < k; ++i) key = key << 4 | static_cast<std::uint64_t>(g(base[static_cast<std::size_t>(i)]));
        images.insert(key);
    }
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(degree - i);
    return images.size() == total;
}

inline int max_transitivity(const std::vector<Perm>& elems, int degree) {
    int k = 0;
    while (k < degree && is_k_transitive(elems, degree, k + 1)) ++k;
    return k;
}

inline std::vector<Perm> point_stabilizer(const std::vector<Perm>& elems, int x) {
    std::vector<Perm> s;
    for (const Perm& g : elems)
        if (g(x) == x) s.push_back(g);
    return s;
}

inline std::vector<std::vector<Perm>> conjugacy_classes(const std::vector<Perm>& elems) {
    std::unordered_set<std::uint64_t> done;
    std::vector<std::vector<Perm>> classes;
    for (const Perm& g : elems) {
        if (done.count(g.key())) continue;
        std::vector<Perm> cls;
        std::unordered_set<std::uint64_t> in_cls;
        for (const Perm& h : elems) {
            Perm c = h * g * h.inverse();
            if (in_cls.insert(c.key()).second) cls.push_back(c);
        }
        for (const Perm& c : cls) done.insert(c.key());
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

// all normal subgroups, as sorted element vectors: iterated joins of
// conjugacy classes (subgroups generated by class unions are normal, and
// every normal subgroup is the closure of the union of its classes)
inline std::vector<std::vector<Perm>> normal_subgroups(const std::vector<Perm>& elems) {
    int degree = elems.empty() ? 0 : elems[0].degree();
    auto classes = conjugacy_classes(elems);
    std::vector<std::vector<Perm>> found{{Perm::identity(degree)}};
    std::vector<std::vector<Perm>> queue = found;
    auto subgroup_key = [](const std::vector<Perm>& s) {
        std::uint64_t h = 1469598103934665603ULL;
        for (const Perm& p : s) {
            h ^= p.key();
            h *= 1099511628211ULL;
        }
        return h ^ (static_cast<std::uint64_t>(s.size()) << 32);
    };
    std::unordered_set<std::uint64_t> seen{subgroup_key(found[0])};
    while (!queue.empty()) {
        std::vector<Perm> base = std::move(queue.back());
        queue.pop_back();
        for (const auto& cls : classes) {
            if (std::binary_search(base.begin(), base.end(), cls[0])) continue;
            std::vector<Perm> gens = base;
            gens.insert(gens.end(), cls.begin(), cls.end());
            std::vector<Perm> sub = group_closure(degree, gens, elems.size() + 1);
            if (sub.size() > elems.size()) continue;  // guard, should not happen
            std::uint64_t k = subgroup_key(sub);
            if (seen.insert(k).second) {
                found.push_back(sub);
                queue.push_back(std::move(sub));
            }
        }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return found;
}

}  // namespace abt
