#pragma once

// Finite field arithmetic on canonically indexed elements.
//
// An element of F_{p^k} is a uint32 index in [0, p^k); its base-p digits,
// least significant first, are the coefficients of the residue polynomial.
// The defining polynomial is the lexicographically smallest monic
// irreducible of its degree with nonzero constant term, coefficients
// compared low-degree-first, so fields are reproducible without external
// tables. The contract is the isomorphism class, not a specific embedding.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "abt/error.hpp"

namespace abt {

using felt = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// q = p^k with p prime, k >= 1; returns {0,0} if q is not a prime power.
inline std::pair<std::uint32_t, std::uint32_t> prime_power_split(std::uint64_t q) {
    if (q < 2) return {0, 0};
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        std::uint32_t k = 0;
        std::uint64_t m = q;
        while (m % p == 0) { m /= p; ++k; }
        if (m != 1) return {0, 0};
        return {static_cast<std::uint32_t>(p), k};
    }
    return {static_cast<std::uint32_t>(q), 1};  // q itself prime
}

namespace detail {

// dense poly over F_p, coefficients low-degree-first, no trailing zeros
using PPoly = std::vector<std::uint32_t>;

inline PPoly ppoly_trim(PPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline PPoly ppoly_mod(PPoly a, const PPoly& m, std::uint32_t p) {
    a = ppoly_trim(std::move(a));
    const std::size_t dm = m.size() - 1;
    std::uint64_t lead_inv = 1;  // m monic in all our uses
    (void)lead_inv;
    while (a.size() > dm) {
        std::uint64_t c = a.back();
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t v = a[shift + i] + static_cast<std::uint64_t>(p) * p - c * m[i] % p;
            a[shift + i] = static_cast<std::uint32_t>(v % p);
        }
        a = ppoly_trim(std::move(a));
        if (a.size() > dm && a.back() == 0) a.pop_back();
    }
    return a;
}

inline PPoly ppoly_mulmod(const PPoly& a, const PPoly& b, const PPoly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>((c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    return ppoly_mod(std::move(c), m, p);
}

inline PPoly ppoly_powmod(PPoly a, std::uint64_t e, const PPoly& m, std::uint32_t p) {
    PPoly r{1};
    a = ppoly_mod(std::move(a), m, p);
    while (e) {
        if (e & 1) r = ppoly_mulmod(r, a, m, p);
        a = ppoly_mulmod(a, a, m, p);
        e >>= 1;
    }
    return r;
}

inline std::vector<std::uint64_t> factor_distinct(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace detail

class FieldSpec {
  public:
    // Builds F_{p^k}. Preconditions: p prime, k >= 1, p^k <= 2^20.
    static FieldSpec build(std::uint32_t p, std::uint32_t k) {
        require(is_prime(p), errc::non_prime_characteristic,
                "characteristic " + std::to_string(p) + " is not prime");
        require(k >= 1, errc::bad_argument, "degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
            q *= p;
            require(q <= (1u << 20), errc::degree_too_large,
                    "p^k exceeds 2^20 for p=" + std::to_string(p) + ", k=" + std::to_string(k));
        }
        return FieldSpec(p, k, static_cast<std::uint32_t>(q));
    }

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return k_; }
    std::uint32_t size() const { return q_; }

    // coefficients c_0..c_{k-1} of the defining polynomial x^k + sum c_i x^i
    const std::vector<std::uint32_t>& modulus_tail() const { return mod_tail_; }

    std::uint32_t digit(felt a, std::uint32_t i) const {
        for (std::uint32_t j = 0; j < i; ++j) a /= p_;
        return a % p_;
    }

    felt add(felt a, felt b) const {
        if (k_ == 1) return (a + b) % p_;
        felt r = 0, mul = 1;
        for (std::uint32_t i = 0; i < k_; ++i) {
            r += ((a % p_ + b % p_) % p_) * mul;
            a /= p_;
            b /= p_;
            mul *= p_;
        }
        return r;
    }

    felt neg(felt a) const {
        if (k_ == 1) return a ? p_ - a : 0;
        felt r = 0, mul = 1;
        for (std::uint32_t i = 0; i < k_; ++i) {
            std::uint32_t d = a % p_;
            r += (d ? p_ - d : 0) * mul;
            a /= p_;
            mul *= p_;
        }
        return r;
    }

    felt sub(felt a, felt b) const { return add(a, neg(b)); }

    felt mul(felt a, felt b) const {
        if (k_ == 1) return static_cast<felt>(static_cast<std::uint64_t>(a) * b % p_);
        if (have_tables_) {
            if (a == 0 || b == 0) return 0;
            return exp_[(log_[a] + log_[b]) % (q_ - 1)];
        }
        return mul_slow(a, b);
    }

    felt inv(felt a) const {
        require(a != 0, errc::bad_argument, "inverse of zero");
        if (have_tables_ && k_ > 1) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
        return pow(a, q_ - 2);
    }

    felt pow(felt a, std::uint64_t e) const {
        felt r = one(), x = a;
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    felt zero() const { return 0; }
    felt one() const { return 1; }

    std::uint32_t elt_order(felt a) const {
        require(a != 0, errc::bad_argument, "order of zero");
        std::uint32_t n = q_ - 1;
        for (std::uint64_t f : detail::factor_distinct(n))
            while (n % f == 0 && pow(a, n / f) == one()) n = static_cast<std::uint32_t>(n / f);
        return n;
    }

    // smallest generator of the multiplicative group in the canonical
    // element order
    felt primitive_element() const {
        if (prim_) return prim_;
        for (felt a = 1; a < q_; ++a) {
            if (elt_order(a) == q_ - 1) {
                prim_ = a;
                return a;
            }
        }
        fail(errc::bad_argument, "no primitive element found");  // unreachable
    }

  private:
    FieldSpec(std::uint32_t p, std::uint32_t k, std::uint32_t q) : p_(p), k_(k), q_(q) {
        if (k_ > 1) {
            mod_tail_ = find_modulus();
            if (q_ <= (1u << 16)) build_tables();
        } else {
            mod_tail_ = {1u};  // x + 1
        }
    }

    felt from_digits(const detail::PPoly& d) const {
        felt r = 0, mul = 1;
        for (std::uint32_t i = 0; i < k_; ++i) {
            r += (i < d.size() ? d[i] : 0) * mul;
            mul *= p_;
        }
        return r;
    }

    detail::PPoly to_digits(felt a) const {
        detail::PPoly d(k_);
        for (std::uint32_t i = 0; i < k_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return detail::ppoly_trim(std::move(d));
    }

    felt mul_slow(felt a, felt b) const {
        detail::PPoly m = modulus_full();
        detail::PPoly r = detail::ppoly_mulmod(to_digits(a), to_digits(b), m, p_);
        return from_digits(r);
    }

    detail::PPoly modulus_full() const {
        detail::PPoly m(mod_tail_);
        m.resize(k_ + 1, 0);
        m[k_] = 1;
        return m;
    }

    // Lexicographically smallest monic irreducible of degree k with nonzero
    // constant term; coefficient sequences (c_0, ..., c_{k-1}) are compared
    // low-degree-first, so the enumeration runs c_0-major.
    std::vector<std::uint32_t> find_modulus() const {
        for (std::uint32_t idx = 0; idx < q_; ++idx) {
            detail::PPoly tail(k_);
            std::uint32_t t = idx;
            for (std::uint32_t i = k_; i-- > 0;) {
                tail[i] = t % p_;
                t /= p_;
            }
            if (tail[0] == 0) continue;
            detail::PPoly m(tail);
            m.resize(k_ + 1, 0);
            m[k_] = 1;
            if (irreducible(m)) return tail;
        }
        fail(errc::bad_argument, "no irreducible polynomial found");  // unreachable
    }

    // x^(p^k) == x mod m, and x^(p^(k/f)) != x for prime divisors f of k
    bool irreducible(const detail::PPoly& m) const {
        detail::PPoly x{0, 1};
        detail::PPoly xp = x;
        std::vector<detail::PPoly> frob;  // x^(p^i) for i = 1..k
        for (std::uint32_t i = 0; i < k_; ++i) {
            xp = detail::ppoly_powmod(xp, p_, m, p_);
            frob.push_back(xp);
        }
        if (detail::ppoly_trim(frob[k_ - 1]) != detail::ppoly_trim(x)) return false;
        for (std::uint64_t f : detail::factor_distinct(k_))
            if (detail::ppoly_trim(frob[k_ / f - 1]) == detail::ppoly_trim(x)) return false;
        return true;
    }

    void build_tables() {
        // exp/log over any multiplicative generator; only used internally.
        // have_tables_ is still false here, so pow() runs on mul_slow.
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        auto fs = detail::factor_distinct(q_ - 1);
        felt g = 0;
        for (felt a = 2; a < q_ && !g; ++a) {
            bool ok = true;
            for (std::uint64_t f : fs)
                if (pow(a, (q_ - 1) / f) == one()) { ok = false; break; }
            if (ok) g = a;
        }
        felt x = one();
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x = mul_slow(x, g);
        }
        have_tables_ = true;
    }

    std::uint32_t p_, k_, q_;
    std::vector<std::uint32_t> mod_tail_;
    std::vector<felt> exp_, log_;
    bool have_tables_ = false;
    mutable felt prim_ = 0;
};

// field_build(p, k): see FieldSpec::build.
inline FieldSpec field_build(std::uint32_t p, std::uint32_t k) { return FieldSpec::build(p, k); }

// Degree-3 extension K = F_q[x]/(cubic) over a given base field, the carrier
// for Singer cycles: elements are uint32 indices whose base-q digits are
// coordinate triples over F_q. The cubic is the lexicographically smallest
// monic irreducible one (no root in F_q) with nonzero constant term.
class CubicExt {
  public:
    explicit CubicExt(const FieldSpec& base) : base_(&base), q_(base.size()) {
        require(static_cast<std::uint64_t>(q_) * q_ * q_ <= (1u << 20), errc::field_too_large,
                "q^3 too large for cubic extension");
        size_ = q_ * q_ * q_;
        find_modulus();
        if (size_ <= (1u << 16)) build_tables();
    }

    const FieldSpec& base() const { return *base_; }
    std::uint32_t base_size() const { return q_; }
    std::uint32_t size() const { return size_; }
    std::array<felt, 3> modulus_tail() const { return mod_; }

    std::array<felt, 3> digits(std::uint32_t a) const {
        return {static_cast<felt>(a % q_), static_cast<felt>(a / q_ % q_),
                static_cast<felt>(a / q_ / q_)};
    }

    std::uint32_t from_digits(felt c0, felt c1, felt c2) const { return c0 + q_ * (c1 + q_ * c2); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (have_tables_) {
            if (a == 0 || b == 0) return 0;
            return exp_[(log_[a] + log_[b]) % (size_ - 1)];
        }
        return mul_slow(a, b);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        if (have_tables_ && a != 0) {
            std::uint64_t l = log_[a] % (size_ - 1);
            return exp_[static_cast<std::uint32_t>(l * (e % (size_ - 1)) % (size_ - 1))];
        }
        std::uint32_t r = 1, x = a;
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    std::uint32_t elt_order(std::uint32_t a) const {
        require(a != 0, errc::bad_argument, "order of zero");
        std::uint32_t n = size_ - 1;
        for (std::uint64_t f : detail::factor_distinct(n))
            while (n % f == 0 && pow(a, n / f) == 1) n = static_cast<std::uint32_t>(n / f);
        return n;
    }

    // smallest primitive element in the canonical index order
    std::uint32_t primitive_element() const {
        for (std::uint32_t a = 2; a < size_; ++a)
            if (elt_order(a) == size_ - 1) return a;
        fail(errc::bad_argument, "no primitive element in cubic extension");
    }

  private:
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
        const FieldSpec& F = *base_;
        auto da = digits(a), db = digits(b);
        std::array<felt, 5> c{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) c[i + j] = F.add(c[i + j], F.mul(da[i], db[j]));
        // reduce: x^3 = -(m2 x^2 + m1 x + m0)
        for (int d = 4; d >= 3; --d) {
            felt top = c[d];
            if (!top) continue;
            c[d] = 0;
            for (int i = 0; i < 3; ++i) c[d - 3 + i] = F.sub(c[d - 3 + i], F.mul(top, mod_[i]));
        }
        return from_digits(c[0], c[1], c[2]);
    }

    void find_modulus() {
        const FieldSpec& F = *base_;
        for (std::uint32_t idx = 0; idx < size_; ++idx) {
            // low-degree-first lexicographic order: c0-major enumeration
            std::array<felt, 3> m{static_cast<felt>(idx / (q_ * q_)),
                                  static_cast<felt>(idx / q_ % q_),
                                  static_cast<felt>(idx % q_)};
            if (m[0] == 0) continue;
            bool has_root = false;
            for (felt x = 0; x < q_ && !has_root; ++x) {
                felt v = F.add(F.mul(F.mul(x, x), x), F.add(F.mul(m[2], F.mul(x, x)), F.add(F.mul(m[1], x), m[0])));
                has_root = (v == 0);
            }
            if (!has_root) {
                mod_ = m;
                return;
            }
        }
        fail(errc::bad_argument, "no irreducible cubic found");  // unreachable
    }

    void build_tables() {
        exp_.assign(size_ - 1, 0);
        log_.assign(size_, 0);
        auto fs = detail::factor_distinct(size_ - 1);
        std::uint32_t g = 0;
        for (std::uint32_t a = 2; a < size_ && !g; ++a) {
            bool ok = true;
            for (std::uint64_t f : fs) {
                std::uint32_t r = 1, x = a;
                std::uint64_t e = (size_ - 1) / f;
                while (e) {
                    if (e & 1) r = mul_slow(r, x);
                    x = mul_slow(x, x);
                    e >>= 1;
                }
                if (r == 1) { ok = false; break; }
            }
            if (ok) g = a;
        }
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < size_ - 1; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x = mul_slow(x, g);
        }
        have_tables_ = true;
    }

    const FieldSpec* base_;
    std::uint32_t q_, size_ = 0;
    std::array<felt, 3> mod_{};
    std::vector<std::uint32_t> exp_, log_;
    bool have_tables_ = false;
};

}  // namespace abt
