#pragma once

// Truncated formal power series in t whose coefficients are polynomials in
// the marker x, plus the builders for the library's generating functions.
//
// A series of order N stores c_0..c_N exactly; arithmetic never looks past
// the truncation order.  All the built series have unit constant term after
// the common (1-x) factor of the match-marker quotient is divided out, so
// reciprocal only ever needs to invert a nonzero rational.  The general
// divide() additionally accepts denominators whose constant term is a
// polynomial, performing exact polynomial division coefficientwise; that
// route exists so quotients can also be computed in their raw printed form.

#include <stdexcept>
#include <string>
#include <vector>

#include "rectfill/numeric.hpp"
#include "rectfill/polynomial.hpp"

namespace rectfill {

class TXSeries {
public:
    explicit TXSeries(int order) : c_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("TXSeries: negative order");
    }

    static TXSeries constant(int order, const XPoly& c0) {
        TXSeries s(order);
        s.c_[0] = c0;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const XPoly& operator[](int n) const { return c_[check(n)]; }
    XPoly& operator[](int n) { return c_[check(n)]; }

    friend TXSeries operator+(const TXSeries& a, const TXSeries& b) {
        TXSeries r(common_order(a, b));
        for (int n = 0; n <= r.order(); ++n) r[n] = a[n] + b[n];
        return r;
    }

    friend TXSeries operator-(const TXSeries& a, const TXSeries& b) {
        TXSeries r(common_order(a, b));
        for (int n = 0; n <= r.order(); ++n) r[n] = a[n] - b[n];
        return r;
    }

    friend TXSeries operator*(const TXSeries& a, const TXSeries& b) {
        TXSeries r(common_order(a, b));
        for (int n = 0; n <= r.order(); ++n)
            for (int i = 0; i <= n; ++i) r[n] += a[i] * b[n - i];
        return r;
    }

    friend TXSeries operator*(const TXSeries& a, const XPoly& p) {
        TXSeries r = a;
        for (int n = 0; n <= r.order(); ++n) r[n] = a[n] * p;
        return r;
    }

    // Multiplication by t^e (drops the top e coefficients).
    TXSeries shift(int e) const {
        if (e < 0) throw std::invalid_argument("TXSeries: negative shift");
        TXSeries r(order());
        for (int n = e; n <= order(); ++n) r[n] = c_[static_cast<size_t>(n - e)];
        return r;
    }

    // 1/this; requires the constant term to be a nonzero rational.
    TXSeries reciprocal() const {
        if (!c_[0].is_constant() || c_[0].is_zero())
            throw std::invalid_argument(
                "TXSeries: reciprocal needs a nonzero constant t^0 coefficient");
        const Rat inv0 = Rat(1) / c_[0].at(0);
        TXSeries r(order());
        r[0] = XPoly(inv0);
        for (int n = 1; n <= order(); ++n) {
            XPoly acc;
            for (int i = 1; i <= n; ++i) acc += c_[static_cast<size_t>(i)] * r[n - i];
            r[n] = -acc * inv0;
        }
        return r;
    }

    // this/den by long division; every step must divide exactly in Rat[x].
    TXSeries divide(const TXSeries& den) const {
        if (den[0].is_zero())
            throw std::invalid_argument("TXSeries: divisor has zero constant term");
        TXSeries q(common_order(*this, den));
        for (int n = 0; n <= q.order(); ++n) {
            XPoly acc = c_[static_cast<size_t>(n)];
            for (int i = 1; i <= n; ++i) acc -= den[i] * q[n - i];
            q[n] = acc.div_exact(den[0]);
        }
        return q;
    }

    bool operator==(const TXSeries& o) const { return c_ == o.c_; }
    bool operator!=(const TXSeries& o) const { return c_ != o.c_; }

private:
    static int common_order(const TXSeries& a, const TXSeries& b) {
        if (a.order() != b.order())
            throw std::invalid_argument("TXSeries: mixed truncation orders");
        return a.order();
    }

    size_t check(int n) const {
        if (n < 0 || n > order())
            throw std::out_of_range("TXSeries: coefficient index out of range");
        return static_cast<size_t>(n);
    }

    std::vector<XPoly> c_;
};

inline TXSeries series_add(const TXSeries& a, const TXSeries& b) { return a + b; }
inline TXSeries series_mul(const TXSeries& a, const TXSeries& b) { return a * b; }
inline TXSeries series_reciprocal(const TXSeries& a) { return a.reciprocal(); }

inline XPoly coeff(const TXSeries& s, int n) { return s[n]; }

// (kn)! * [t^n], recovering a distribution polynomial from an EGF.
inline XPoly scaled_coeff(const TXSeries& s, int n, int k) {
    return s[n] * Rat(factorial(static_cast<long>(k) * n));
}

inline const Int& full_at(const std::vector<Int>& full, int n) {
    if (n < 1 || n >= static_cast<int>(full.size()))
        throw std::invalid_argument("fullSeq must cover 1..order (index 0 unused)");
    return full[static_cast<size_t>(n)];
}

// EGF of the match-count marker over all fillings:
//   (1-x) / (1-x + sum_{n>=1} ((x-1)t)^n full_n/(kn)!).
// Dividing numerator and denominator by (1-x) leaves a unit constant term:
//   1 / (1 - sum_{n>=1} (x-1)^{n-1} t^n full_n/(kn)!).
inline TXSeries build_D(int k, const std::vector<Int>& full, int order) {
    TXSeries den = TXSeries::constant(order, XPoly(1));
    for (int n = 1; n <= order; ++n)
        den[n] = -(XPoly::x_minus_one_pow(n - 1) *
                   Rat(full_at(full, n), factorial(static_cast<long>(k) * n)));
    return den.reciprocal();
}

// EGF of the no-match counts: 1 / (1 + sum_{n>=1} (-t)^n full_n/(kn)!).
inline TXSeries build_A(int k, const std::vector<Int>& full, int order) {
    TXSeries den = TXSeries::constant(order, XPoly(1));
    for (int n = 1; n <= order; ++n) {
        Rat c(full_at(full, n), factorial(static_cast<long>(k) * n));
        den[n] = XPoly(n % 2 == 0 ? c : -c);
    }
    return den.reciprocal();
}

struct NlapSeries {
    TXSeries nlap;       // A / (1 - x B)
    TXSeries end_match;  // B = 1 + (t/k! - 1) A; (kn)! [t^n] counts the
                         // fillings whose only match sits at the last position
};

// EGF of the nonoverlapping-match marker, via the cut decomposition.
inline NlapSeries build_N(int k, const TXSeries& a_series, int order) {
    if (a_series.order() != order)
        throw std::invalid_argument("build_N: order mismatch with A series");
    TXSeries t_over_kf(order);
    if (order >= 1) t_over_kf[1] = XPoly(Rat(1, factorial(k)));
    TXSeries b = TXSeries::constant(order, XPoly(1)) +
                 (t_over_kf - TXSeries::constant(order, XPoly(1))) * a_series;
    TXSeries one_minus_xb = TXSeries::constant(order, XPoly(1)) - b * XPoly::variable();
    return {a_series * one_minus_xb.reciprocal(), std::move(b)};
}

namespace detail {

// 1 - sum_{n>=1} (x-1)^{n-1} t^{2n} full_{2n}/(2kn)!, shared by the two
// odd-position-constrained builders.
inline TXSeries even_window_denominator(int k, const std::vector<Int>& full, int order) {
    TXSeries den = TXSeries::constant(order, XPoly(1));
    for (int n = 1; 2 * n <= order; ++n)
        den[2 * n] = -(XPoly::x_minus_one_pow(n - 1) *
                       Rat(full_at(full, 2 * n), factorial(2L * k * n)));
    return den;
}

}  // namespace detail

// EGF (even lengths) of the even-position match marker over fillings that
// match at every odd position.
inline TXSeries build_even(int k, const std::vector<Int>& full, int order) {
    return detail::even_window_denominator(k, full, order).reciprocal();
}

// Odd-length companion of build_even.
inline TXSeries build_odd(int k, const std::vector<Int>& full, int order) {
    TXSeries num(order);
    for (int n = 1; 2 * n - 1 <= order; ++n)
        num[2 * n - 1] = XPoly::x_minus_one_pow(n - 1) *
                         Rat(full_at(full, 2 * n - 1),
                             factorial(static_cast<long>(k) * (2 * n - 1)));
    return num * detail::even_window_denominator(k, full, order).reciprocal();
}

inline std::vector<std::vector<std::string>> series_to_strings(const TXSeries& s) {
    std::vector<std::vector<std::string>> out;
    out.reserve(static_cast<size_t>(s.order()) + 1);
    for (int n = 0; n <= s.order(); ++n) out.push_back(s[n].fraction_strings());
    return out;
}

inline TXSeries series_from_strings(const std::vector<std::vector<std::string>>& ss) {
    if (ss.empty()) throw std::invalid_argument("series_from_strings: empty input");
    TXSeries s(static_cast<int>(ss.size()) - 1);
    for (int n = 0; n <= s.order(); ++n)
        s[n] = XPoly::from_fraction_strings(ss[static_cast<size_t>(n)]);
    return s;
}

}  // namespace rectfill
