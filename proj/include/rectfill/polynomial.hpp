#pragma once

// Polynomials in the marker variable x with exact rational coefficients.
// The zero polynomial stores no coefficients; otherwise the top coefficient
// is nonzero.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rectfill/numeric.hpp"

namespace rectfill {

class XPoly {
public:
    XPoly() = default;
    XPoly(const Rat& c) { if (c != 0) c_.push_back(c); }
    XPoly(int c) : XPoly(Rat(c)) {}
    explicit XPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

    static XPoly variable() { return XPoly(std::vector<Rat>{0, 1}); }

    static XPoly x_minus_one_pow(int e) {
        if (e < 0) throw std::invalid_argument("x_minus_one_pow: negative exponent");
        XPoly p(1);
        XPoly base(std::vector<Rat>{-1, 1});
        for (int i = 0; i < e; ++i) p = p * base;
        return p;
    }

    static XPoly from_counts(const std::vector<Int>& counts) {
        std::vector<Rat> c;
        c.reserve(counts.size());
        for (const Int& v : counts) c.emplace_back(v);
        return XPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rat at(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const {
        Rat v = 0;
        for (size_t i = c_.size(); i > 0; --i) v = v * x + c_[i - 1];
        return v;
    }

    XPoly operator-() const {
        XPoly r = *this;
        for (Rat& c : r.c_) c = -c;
        return r;
    }

    friend XPoly operator+(const XPoly& a, const XPoly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.at(i) + b.at(i);
        return XPoly(std::move(c));
    }
    friend XPoly operator-(const XPoly& a, const XPoly& b) { return a + (-b); }

    friend XPoly operator*(const XPoly& a, const XPoly& b) {
        if (a.is_zero() || b.is_zero()) return XPoly();
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return XPoly(std::move(c));
    }

    friend XPoly operator*(const XPoly& a, const Rat& s) {
        XPoly r = a;
        for (Rat& c : r.c_) c *= s;
        r.trim();
        return r;
    }
    friend XPoly operator*(const Rat& s, const XPoly& a) { return a * s; }

    friend XPoly operator/(const XPoly& a, const Rat& s) {
        if (s == 0) throw std::invalid_argument("XPoly: division by zero scalar");
        XPoly r = a;
        for (Rat& c : r.c_) c /= s;
        return r;
    }

    XPoly& operator+=(const XPoly& o) { return *this = *this + o; }
    XPoly& operator-=(const XPoly& o) { return *this = *this - o; }
    XPoly& operator*=(const XPoly& o) { return *this = *this * o; }

    // Quotient and remainder of division by a nonzero polynomial.
    std::pair<XPoly, XPoly> divmod(const XPoly& den) const {
        if (den.is_zero()) throw std::invalid_argument("XPoly: division by zero");
        XPoly rem = *this;
        std::vector<Rat> q;
        const int dd = den.degree();
        const Rat lead = den.c_.back();
        while (!rem.is_zero() && rem.degree() >= dd) {
            const int shift = rem.degree() - dd;
            const Rat f = rem.c_.back() / lead;
            if (static_cast<int>(q.size()) < shift + 1) q.resize(static_cast<size_t>(shift) + 1, Rat(0));
            q[static_cast<size_t>(shift)] += f;
            std::vector<Rat> sub(static_cast<size_t>(shift), Rat(0));
            sub.insert(sub.end(), den.c_.begin(), den.c_.end());
            for (Rat& c : sub) c *= f;
            rem = rem - XPoly(std::move(sub));
        }
        return {XPoly(std::move(q)), rem};
    }

    // Division known to be exact in Rat[x]; throws if a remainder appears.
    XPoly div_exact(const XPoly& den) const {
        auto [q, r] = divmod(den);
        if (!r.is_zero())
            throw std::invalid_argument("XPoly: division left a remainder");
        return q;
    }

    bool operator==(const XPoly& o) const { return c_ == o.c_; }
    bool operator!=(const XPoly& o) const { return c_ != o.c_; }

    // "num/den" strings ascending in x-power; the zero polynomial prints one
    // "0/1" entry so serialized coefficients are never empty arrays.
    std::vector<std::string> fraction_strings() const {
        if (c_.empty()) return {"0/1"};
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const Rat& c : c_) out.push_back(to_fraction(c));
        return out;
    }

    static XPoly from_fraction_strings(const std::vector<std::string>& ss) {
        std::vector<Rat> c;
        c.reserve(ss.size());
        for (const std::string& s : ss) c.push_back(parse_fraction(s));
        return XPoly(std::move(c));
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += to_fraction(c_[i]);
            if (i == 1) s += "*x";
            if (i > 1) s += "*x^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

}  // namespace rectfill
