#pragma once

// Truncated Laurent series over a finite field and 3x3 matrices of them.
// A series stores a coefficient window [lo, prec): everything below lo is
// zero, everything at or above prec is unknown. Exact polynomials carry
// prec = inf_prec. Valuations are reported only when the window proves them;
// otherwise operations raise InsufficientPrecision instead of returning
// truncation-dependent answers.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "abt/error.hpp"
#include "abt/field.hpp"

namespace abt {

constexpr int inf_prec = std::numeric_limits<int>::max() / 4;

class Laurent {
  public:
    Laurent() : F_(nullptr), lo_(0), prec_(inf_prec) {}

    // exact polynomial-type series: coefficients c for t^lo, t^(lo+1), ...
    Laurent(const FieldSpec& F, int lo, std::vector<felt> c, int prec = inf_prec)
        : F_(&F), lo_(lo), c_(std::move(c)), prec_(prec) {
        normalize();
    }

    static Laurent zero(const FieldSpec& F) { return Laurent(F, 0, {}, inf_prec); }
    static Laurent one(const FieldSpec& F) { return Laurent(F, 0, {1}, inf_prec); }
    static Laurent monomial(const FieldSpec& F, int e, felt coef = 1) {
        return Laurent(F, e, {coef}, inf_prec);
    }

    const FieldSpec& field() const { return *F_; }
    int prec() const { return prec_; }
    bool exact() const { return prec_ >= inf_prec; }

    // exactly the zero series (possible only at infinite precision)
    bool is_exact_zero() const { return exact() && first_nonzero() < 0; }

    // first exponent at which the series can be nonzero
    int nonzero_lower_bound() const {
        int f = first_nonzero();
        if (f >= 0) return lo_ + f;
        return prec_;  // inf_prec when exactly zero
    }

    bool val_known() const { return first_nonzero() >= 0 || is_exact_zero(); }

    // valuation; requires a provably nonzero series
    int val() const {
        int f = first_nonzero();
        require(f >= 0, errc::insufficient_precision,
                is_exact_zero() ? "valuation of zero series" : "valuation hidden by truncation");
        return lo_ + f;
    }

    felt coeff(int e) const {
        if (e < lo_) return 0;
        std::size_t i = static_cast<std::size_t>(e - lo_);
        if (i < c_.size()) return c_[i];
        require(e < prec_, errc::insufficient_precision, "coefficient beyond precision");
        return 0;
    }

    Laurent truncated(int prec) const {
        Laurent r(*this);
        if (prec < r.prec_) {
            r.prec_ = prec;
            if (r.lo_ + static_cast<int>(r.c_.size()) > prec)
                r.c_.resize(std::max(0, prec - r.lo_));
            r.normalize();
        }
        return r;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        const FieldSpec& F = a.fld(b);
        if (a.is_exact_zero()) return b;
        if (b.is_exact_zero()) return a;
        int prec = std::min(a.prec_, b.prec_);
        int lo = std::min(a.lo_, b.lo_);
        int hi = prec >= inf_prec
                     ? std::max(a.lo_ + static_cast<int>(a.c_.size()),
                                b.lo_ + static_cast<int>(b.c_.size()))
                     : prec;
        std::vector<felt> c(std::max(0, hi - lo), 0);
        for (int e = lo; e < hi; ++e) c[e - lo] = F.add(a.known_coeff(e), b.known_coeff(e));
        return Laurent(F, lo, std::move(c), prec);
    }

    friend Laurent operator-(const Laurent& a) {
        if (!a.F_) return a;
        Laurent r(a);
        for (auto& x : r.c_) x = a.F_->neg(x);
        return r;
    }

    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        const FieldSpec& F = a.fld(b);
        if (a.is_exact_zero() || b.is_exact_zero()) return zero(F);
        int va = a.nonzero_lower_bound(), vb = b.nonzero_lower_bound();
        long prec_l = std::min<long>(static_cast<long>(a.prec_) + vb,
                                     static_cast<long>(b.prec_) + va);
        int prec = prec_l >= inf_prec ? inf_prec : static_cast<int>(prec_l);
        int lo = va + vb;
        int hi = prec >= inf_prec ? a.lo_ + static_cast<int>(a.c_.size()) + b.lo_ +
                                        static_cast<int>(b.c_.size()) - 1
                                  : prec;
        if (hi < lo) hi = lo;
        std::vector<felt> c(static_cast<std::size_t>(hi - lo), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (!a.c_[i]) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (!b.c_[j]) continue;
                int e = a.lo_ + static_cast<int>(i) + b.lo_ + static_cast<int>(j);
                if (e >= lo && e < hi) c[e - lo] = F.add(c[e - lo], F.mul(a.c_[i], b.c_[j]));
            }
        }
        return Laurent(F, lo, std::move(c), prec);
    }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        if (a.is_exact_zero() && b.is_exact_zero()) return true;
        if (!a.F_ || !b.F_) return false;
        int hi = std::min(a.prec_, b.prec_);
        require(hi >= inf_prec, errc::insufficient_precision,
                "equality of truncated series is not decidable");
        int lo = std::min(a.lo_, b.lo_);
        int he = std::max(a.lo_ + static_cast<int>(a.c_.size()),
                          b.lo_ + static_cast<int>(b.c_.size()));
        for (int e = lo; e < he; ++e)
            if (a.known_coeff(e) != b.known_coeff(e)) return false;
        return true;
    }

    // multiplicative inverse with `terms` computed coefficients; the result
    // has valuation -val() and carries an honest precision bound
    Laurent unit_inverse(int terms) const {
        int v = val();
        const FieldSpec& F = *F_;
        felt inv0 = F.inv(coeff(v));
        std::vector<felt> r(static_cast<std::size_t>(terms), 0);
        r[0] = inv0;
        for (int n = 1; n < terms; ++n) {
            felt s = 0;
            for (int k = 1; k <= n; ++k) s = F.add(s, F.mul(coeff_at_or_zero(v + k), r[n - k]));
            r[n] = F.neg(F.mul(inv0, s));
        }
        int p = exact() ? terms - v : std::min(terms - v, prec_ - 2 * v);
        return Laurent(F, -v, std::move(r), p);
    }

  private:
    felt known_coeff(int e) const {
        if (e < lo_) return 0;
        std::size_t i = static_cast<std::size_t>(e - lo_);
        return i < c_.size() ? c_[i] : 0;
    }
    felt coeff_at_or_zero(int e) const {
        if (e >= prec_) return 0;
        return known_coeff(e);
    }

    const FieldSpec& fld(const Laurent& other) const {
        const FieldSpec* f = F_ ? F_ : other.F_;
        require(f != nullptr, errc::bad_argument, "series without a field");
        return *f;
    }

    int first_nonzero() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i]) return static_cast<int>(i);
        return -1;
    }

    void normalize() {
        // strip leading zeros into lo, trailing zeros at exact precision
        std::size_t s = 0;
        while (s < c_.size() && c_[s] == 0) ++s;
        if (s) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(s));
            lo_ += static_cast<int>(s);
        }
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
        if (c_.empty()) lo_ = 0;
        if (prec_ < inf_prec && lo_ + static_cast<int>(c_.size()) > prec_)
            c_.resize(static_cast<std::size_t>(std::max(0, prec_ - lo_)));
    }

    const FieldSpec* F_;
    int lo_;
    std::vector<felt> c_;
    int prec_;
};

// 3x3 matrix over F_q((t)) with a working precision; entries are finite
// Laurent expansions known modulo t^N.
struct DVRMatrix {
    const FieldSpec* field = nullptr;
    int precision = inf_prec;
    std::array<Laurent, 9> e;

    Laurent& operator()(int i, int j) { return e[static_cast<std::size_t>(3 * i + j)]; }
    const Laurent& operator()(int i, int j) const { return e[static_cast<std::size_t>(3 * i + j)]; }

    static DVRMatrix identity(const FieldSpec& F, int precision = inf_prec) {
        DVRMatrix m;
        m.field = &F;
        m.precision = precision;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = i == j ? Laurent::one(F) : Laurent::zero(F);
        m.clip();
        return m;
    }

    static DVRMatrix diag(const FieldSpec& F, int a, int b, int c, int precision = inf_prec) {
        DVRMatrix m = identity(F, precision);
        m(0, 0) = Laurent::monomial(F, a);
        m(1, 1) = Laurent::monomial(F, b);
        m(2, 2) = Laurent::monomial(F, c);
        m.clip();
        return m;
    }

    void clip() {
        for (auto& x : e) x = x.truncated(precision);
    }

    friend DVRMatrix operator*(const DVRMatrix& a, const DVRMatrix& b) {
        DVRMatrix r;
        r.field = a.field ? a.field : b.field;
        r.precision = std::min(a.precision, b.precision);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Laurent s = Laurent::zero(*r.field);
                for (int k = 0; k < 3; ++k) s = s + a(i, k) * b(k, j);
                r(i, j) = s;
            }
        return r;
    }
};

namespace detail {

struct ValInfo {
    bool exact = false;
    bool zero = false;  // exactly-zero series
    int v = 0;          // valuation when exact, else lower bound
};

inline ValInfo val_info(const Laurent& x) {
    if (x.is_exact_zero()) return {false, true, inf_prec};
    if (x.val_known()) return {true, false, x.val()};
    return {false, false, x.nonzero_lower_bound()};
}

// exact minimum valuation over a family, or throw InsufficientPrecision;
// all_zero set if every member is exactly zero
inline int exact_min_val(const std::vector<ValInfo>& infos, bool& all_zero, const char* what) {
    all_zero = true;
    int best = inf_prec;
    bool have = false;
    int unknown_lb = inf_prec;
    for (const auto& vi : infos) {
        if (vi.zero) continue;
        all_zero = false;
        if (vi.exact) {
            have = true;
            best = std::min(best, vi.v);
        } else {
            unknown_lb = std::min(unknown_lb, vi.v);
        }
    }
    if (all_zero) return inf_prec;
    require(have && best <= unknown_lb, errc::insufficient_precision, what);
    return best;
}

}  // namespace detail

// t-adic valuations of the three invariant factors over the valuation ring,
// sorted descending. Computed from determinantal divisors: min entry
// valuation, min 2x2 minor valuation, and the determinant valuation.
inline std::array<int, 3> dvr_elementary_divisors(const DVRMatrix& m) {
    require(m.field != nullptr, errc::bad_argument, "matrix without a field");
    std::vector<detail::ValInfo> entry_infos;
    for (const auto& x : m.e) entry_infos.push_back(detail::val_info(x));
    bool all_zero = false;
    int d1 = detail::exact_min_val(entry_infos, all_zero,
                                   "minimal entry valuation hidden by truncation");
    require(!all_zero, errc::singular_matrix, "zero matrix");

    std::vector<detail::ValInfo> minor_infos;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            if (i1 > i2) std::swap(i1, i2);
            if (j1 > j2) std::swap(j1, j2);
            Laurent mi = m(i1, j1) * m(i2, j2) - m(i1, j2) * m(i2, j1);
            minor_infos.push_back(detail::val_info(mi));
        }
    int d12 = detail::exact_min_val(minor_infos, all_zero,
                                    "minimal 2x2 minor valuation hidden by truncation");
    require(!all_zero, errc::singular_matrix, "matrix of rank <= 1");

    Laurent det = Laurent::zero(*m.field);
    for (int j = 0; j < 3; ++j) {
        Laurent c = m(1, (j + 1) % 3) * m(2, (j + 2) % 3) - m(1, (j + 2) % 3) * m(2, (j + 1) % 3);
        det = det + m(0, j) * c;
    }
    auto dv = detail::val_info(det);
    require(!dv.zero, errc::singular_matrix, "determinant is zero");
    require(dv.exact, errc::insufficient_precision, "determinant valuation hidden by truncation");

    int a = dv.v - d12, b = d12 - d1, c = d1;
    require(a >= b && b >= c, errc::insufficient_precision,
            "determinantal divisors out of order; input not within precision contract");
    return {a, b, c};
}

}  // namespace abt
