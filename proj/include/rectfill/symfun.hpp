#pragma once

// Homomorphic images of symmetric functions.  The ring itself is never
// modeled: a homomorphism is known by the finite list of its values on the
// elementary generators e_0..e_N (polynomials in the marker x), and the
// images of h_n and of the weighted sums p_{n,v} are derived from those.
// Two independent derivations are kept for each: a generating-function
// reciprocal/recurrence, and an explicit signed sum over brick compositions.

#include <map>
#include <stdexcept>
#include <vector>

#include "rectfill/enumerate.hpp"
#include "rectfill/numeric.hpp"
#include "rectfill/polynomial.hpp"
#include "rectfill/series.hpp"

namespace rectfill {

// Ordered parts summing to n; models one brick covering of a single row.
using BrickComposition = std::vector<int>;

inline std::vector<BrickComposition> compositions(int n) {
    if (n < 1) throw std::invalid_argument("compositions: n must be positive");
    std::vector<BrickComposition> out;
    BrickComposition cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = 1; part <= rest; ++part) {
            cur.push_back(part);
            self(self, rest - part);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

// Number of compositions of n whose part multiset equals the given partition:
// the multinomial of the part multiplicities.
inline Int brick_count(const std::vector<int>& partition, int n) {
    int sum = 0;
    std::map<int, int> mult;
    for (int part : partition) {
        if (part < 1) throw std::invalid_argument("brick_count: parts must be positive");
        sum += part;
        ++mult[part];
    }
    if (sum != n) throw std::invalid_argument("brick_count: parts must sum to n");
    Int count = factorial(static_cast<long>(partition.size()));
    for (auto [part, m] : mult) count /= factorial(m);
    return count;
}

// Values of a homomorphism on e_0..e_N; e[0] must be 1.
struct HomImage {
    std::vector<XPoly> e;

    int order() const { return static_cast<int>(e.size()) - 1; }
    const XPoly& at(int n) const {
        if (n < 0 || n > order())
            throw std::out_of_range("HomImage: index out of range");
        return e[static_cast<size_t>(n)];
    }
    void validate() const {
        if (e.empty() || e[0] != XPoly(1))
            throw std::invalid_argument("HomImage: image of e_0 must be 1");
    }
};

// e_n -> (-1)^{n-1} full_n (x-1)^{n-1} / (kn)!.
inline HomImage gamma_e(const std::vector<Int>& full, int k, int N) {
    HomImage img;
    img.e.assign(static_cast<size_t>(N) + 1, XPoly());
    img.e[0] = XPoly(1);
    for (int n = 1; n <= N; ++n) {
        XPoly v = XPoly::x_minus_one_pow(n - 1) *
                  Rat(full_at(full, n), factorial(static_cast<long>(k) * n));
        img.e[static_cast<size_t>(n)] = (n % 2 == 0) ? -v : v;
    }
    return img;
}

// Odd-length images vanish; e_{2n} -> -full_{2n} (x-1)^{n-1} / (2kn)!.
inline HomImage gamma2_e(const std::vector<Int>& full, int k, int N) {
    HomImage img;
    img.e.assign(static_cast<size_t>(N) + 1, XPoly());
    img.e[0] = XPoly(1);
    for (int n = 1; 2 * n <= N; ++n)
        img.e[static_cast<size_t>(2 * n)] =
            -(XPoly::x_minus_one_pow(n - 1) *
              Rat(full_at(full, 2 * n), factorial(2L * k * n)));
    return img;
}

// full_n for n = 1..N by the enumeration oracle; index 0 unused.
inline std::vector<Int> full_sequence(const PatternSet& y, int N,
                                      long long budget = kDefaultEnumerationBudget) {
    std::vector<Int> full(static_cast<size_t>(N) + 1);
    for (int n = 1; n <= N; ++n) full[static_cast<size_t>(n)] = full_bruteforce(y, n, budget);
    return full;
}

inline HomImage gamma_e(const PatternSet& y, int N,
                        long long budget = kDefaultEnumerationBudget) {
    return gamma_e(full_sequence(y, N, budget), y.rows(), N);
}

inline HomImage gamma2_e(const PatternSet& y, int N,
                         long long budget = kDefaultEnumerationBudget) {
    return gamma2_e(full_sequence(y, N, budget), y.rows(), N);
}

// Images of h_0..h_N from H(t) = 1/E(-t).
inline std::vector<XPoly> h_images(const HomImage& e, int N) {
    e.validate();
    if (e.order() < N) throw std::invalid_argument("h_images: e images stop before N");
    TXSeries em(N);
    for (int n = 0; n <= N; ++n)
        em[n] = (n % 2 == 0) ? e.at(n) : -e.at(n);
    TXSeries h = em.reciprocal();
    std::vector<XPoly> out;
    out.reserve(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) out.push_back(h[n]);
    return out;
}

// Same images through the expansion of h_n over brick compositions:
//   h_n = sum over (b_1..b_l) |= n of (-1)^{n-l} e_{b_1} ... e_{b_l}.
inline std::vector<XPoly> h_images_brick(const HomImage& e, int N) {
    e.validate();
    if (e.order() < N) throw std::invalid_argument("h_images_brick: e images stop before N");
    std::vector<XPoly> out(static_cast<size_t>(N) + 1);
    out[0] = XPoly(1);
    for (int n = 1; n <= N; ++n) {
        XPoly acc;
        for (const BrickComposition& c : compositions(n)) {
            XPoly term(1);
            for (int part : c) term *= e.at(part);
            if ((n - static_cast<int>(c.size())) % 2 == 1) term = -term;
            acc += term;
        }
        out[static_cast<size_t>(n)] = acc;
    }
    return out;
}

inline const Rat& weight_at(const std::vector<Rat>& nu, int n) {
    if (n < 1 || n >= static_cast<int>(nu.size()))
        throw std::invalid_argument("weight sequence must cover 1..N (index 0 unused)");
    return nu[static_cast<size_t>(n)];
}

// Images of the weighted sums p_{n,v} by the defining recurrence
//   p_{n,v} = (-1)^{n-1} v(n) e_n + sum_{k=1}^{n-1} (-1)^{k-1} e_k p_{n-k,v}.
inline std::vector<XPoly> p_nu_images(const HomImage& e, const std::vector<Rat>& nu, int N) {
    e.validate();
    if (e.order() < N) throw std::invalid_argument("p_nu_images: e images stop before N");
    std::vector<XPoly> p(static_cast<size_t>(N) + 1);
    p[0] = XPoly(1);
    for (int n = 1; n <= N; ++n) {
        XPoly acc = e.at(n) * weight_at(nu, n);
        if (n % 2 == 0) acc = -acc;
        for (int k = 1; k <= n - 1; ++k) {
            XPoly term = e.at(k) * p[static_cast<size_t>(n - k)];
            if (k % 2 == 0) term = -term;
            acc += term;
        }
        p[static_cast<size_t>(n)] = acc;
    }
    return p;
}

// The same images as a weighted composition sum, the weight taken on the
// final brick:
//   p_{n,v} = sum over (b_1..b_l) |= n of (-1)^{n-l} v(b_l) e_{b_1} ... e_{b_l}.
inline std::vector<XPoly> p_nu_images_brick(const HomImage& e, const std::vector<Rat>& nu,
                                            int N) {
    e.validate();
    if (e.order() < N)
        throw std::invalid_argument("p_nu_images_brick: e images stop before N");
    std::vector<XPoly> p(static_cast<size_t>(N) + 1);
    p[0] = XPoly(1);
    for (int n = 1; n <= N; ++n) {
        XPoly acc;
        for (const BrickComposition& c : compositions(n)) {
            XPoly term(weight_at(nu, c.back()));
            for (int part : c) term *= e.at(part);
            if ((n - static_cast<int>(c.size())) % 2 == 1) term = -term;
            acc += term;
        }
        p[static_cast<size_t>(n)] = acc;
    }
    return p;
}

// Weight sequence pairing with gamma2_e for odd-length constrained counts:
// zero at odd indices, and at even indices
//   v(2n) = full_{2n-1} (2kn)! / (full_{2n} (k(2n-1))!).
inline std::vector<Rat> odd_length_weights(const std::vector<Int>& full, int k, int N) {
    std::vector<Rat> nu(static_cast<size_t>(N) + 1, Rat(0));
    for (int n = 1; 2 * n <= N; ++n) {
        if (full_at(full, 2 * n) == 0)
            throw std::domain_error("odd_length_weights: full count vanishes at an even index");
        Rat num(full_at(full, 2 * n - 1) * factorial(2L * k * n));
        Rat den(full_at(full, 2 * n) * factorial(static_cast<long>(k) * (2 * n - 1)));
        nu[static_cast<size_t>(2 * n)] = num / den;
    }
    return nu;
}

}  // namespace rectfill
