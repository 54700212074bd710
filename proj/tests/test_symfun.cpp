#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "rectfill/enumerate.hpp"
#include "rectfill/poset.hpp"
#include "rectfill/symfun.hpp"

using namespace rectfill;

namespace {

const Pattern kP1 = Pattern::from_columns({{1, 2}, {3, 4}});
const Pattern kP2 = Pattern::from_columns({{1, 3}, {2, 4}});
const PatternSet kP1Only({kP1});
const PatternSet kP2Only({kP2});
const PatternSet kSt22({kP1, kP2});
const PatternSet kRise({Pattern::from_columns({{1}, {2}})});

XPoly dist_poly(const DistPoly& d) { return XPoly::from_counts(d.coef); }

// Full counts established by the enumeration and poset suites; index 0 unused.
std::vector<Int> full_p1() { return {0, 1, 1, 1, 1, 1, 1}; }
std::vector<Int> full_p2() { return {0, 1, 1, 2, 5, 14, 42}; }
std::vector<Int> full_st22() { return {0, 1, 2, 5, 14, 42, 132}; }
std::vector<Int> full_rise(int upto) {
    return std::vector<Int>(static_cast<size_t>(upto) + 1, Int(1));
}

HomImage random_image(std::mt19937& gen, int order) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::uniform_int_distribution<int> deg(0, 2);
    HomImage img;
    img.e.assign(static_cast<size_t>(order) + 1, XPoly());
    img.e[0] = XPoly(1);
    for (int n = 1; n <= order; ++n) {
        std::vector<Rat> coef(static_cast<size_t>(deg(gen)) + 1);
        for (Rat& c : coef) c = Rat(num(gen), den(gen));
        img.e[static_cast<size_t>(n)] = XPoly(coef);
    }
    return img;
}

std::vector<Rat> random_weights(std::mt19937& gen, int order) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::vector<Rat> nu(static_cast<size_t>(order) + 1, Rat(0));
    for (int n = 1; n <= order; ++n) nu[static_cast<size_t>(n)] = Rat(num(gen), den(gen));
    return nu;
}

}  // namespace

TEST_CASE("compositions and brick counts") {
    auto c3 = compositions(3);
    REQUIRE(c3.size() == 4);
    CHECK(c3[0] == BrickComposition{1, 1, 1});
    CHECK(std::count(c3.begin(), c3.end(), BrickComposition{1, 2}) == 1);
    CHECK(std::count(c3.begin(), c3.end(), BrickComposition{2, 1}) == 1);
    CHECK(c3.back() == BrickComposition{3});

    CHECK(brick_count({1, 1, 2}, 4) == 3);
    CHECK(brick_count({5}, 5) == 1);
    CHECK(brick_count({2, 2, 1}, 5) == 3);

    CHECK_THROWS_AS(compositions(0), std::invalid_argument);
    CHECK_THROWS_AS(brick_count({1, 2}, 4), std::invalid_argument);
    CHECK_THROWS_AS(brick_count({0, 4}, 4), std::invalid_argument);
}

TEST_CASE("brick_count counts the compositions with a given part multiset") {
    for (int n = 1; n <= 7; ++n) {
        auto all = compositions(n);
        CHECK(all.size() == (size_t{1} << (n - 1)));
        std::map<std::vector<int>, long> groups;
        for (auto c : all) {
            std::sort(c.begin(), c.end());
            ++groups[c];
        }
        for (const auto& [partition, count] : groups)
            CHECK(brick_count(partition, n) == count);
    }
}

TEST_CASE("elementary images carry the stated data") {
    HomImage g = gamma_e(full_st22(), 2, 4);
    CHECK(g.at(0) == XPoly(1));
    CHECK(g.at(1) == XPoly(Rat(1, 2)));  // full_1/(k)! = 1/k!
    CHECK(g.at(2) == XPoly::x_minus_one_pow(1) * Rat(-2, 24));
    CHECK(g.at(3) == XPoly::x_minus_one_pow(2) * Rat(5, 720));

    HomImage g2 = gamma2_e(full_st22(), 2, 5);
    CHECK(g2.at(0) == XPoly(1));
    CHECK(g2.at(1).is_zero());
    CHECK(g2.at(3).is_zero());
    CHECK(g2.at(5).is_zero());
    CHECK(g2.at(2) == XPoly(Rat(-2, 24)));
    CHECK(g2.at(4) == XPoly::x_minus_one_pow(1) * Rat(-14, 40320));

    // The convenience overload recomputes the same full values by enumeration.
    HomImage live = gamma_e(kSt22, 4);
    for (int n = 0; n <= 4; ++n) CHECK(live.at(n) == g.at(n));

    CHECK_THROWS_AS(g.at(5), std::out_of_range);
    HomImage bad;
    bad.e = {XPoly(2)};
    CHECK_THROWS_AS(h_images(bad, 0), std::invalid_argument);
}

TEST_CASE("h images at n = 2, 3 match the hand expansions") {
    XPoly x = XPoly::variable();
    XPoly g1 = x + XPoly(2);
    XPoly g2 = XPoly(1) - x;
    XPoly g3 = Rat(3) * x * x;
    HomImage img;
    img.e = {XPoly(1), g1, g2, g3};

    auto h = h_images(img, 3);
    CHECK(h[0] == XPoly(1));
    CHECK(h[1] == g1);
    CHECK(h[2] == g1 * g1 - g2);
    CHECK(h[3] == g1 * g1 * g1 - Rat(2) * g1 * g2 + g3);

    auto hb = h_images_brick(img, 3);
    for (int n = 0; n <= 3; ++n) CHECK(hb[static_cast<size_t>(n)] == h[static_cast<size_t>(n)]);

    // Weighted version at the same order, hand-expanded.
    std::vector<Rat> nu = {Rat(0), Rat(5), Rat(-2), Rat(7)};
    auto p = p_nu_images(img, nu, 3);
    CHECK(p[1] == Rat(5) * g1);
    CHECK(p[2] == Rat(5) * g1 * g1 + Rat(2) * g2);
    CHECK(p[3] == Rat(5) * g1 * g1 * g1 - Rat(3) * g1 * g2 + Rat(7) * g3);
    auto pb = p_nu_images_brick(img, nu, 3);
    for (int n = 0; n <= 3; ++n) CHECK(pb[static_cast<size_t>(n)] == p[static_cast<size_t>(n)]);
}

TEST_CASE("series route and brick route agree on random images") {
    std::mt19937 gen(20250819);
    for (int trial = 0; trial < 100; ++trial) {
        HomImage img = random_image(gen, 8);
        auto h = h_images(img, 8);
        auto hb = h_images_brick(img, 8);
        REQUIRE(h.size() == hb.size());
        for (size_t n = 0; n < h.size(); ++n) CHECK(h[n] == hb[n]);

        std::vector<Rat> nu = random_weights(gen, 8);
        auto p = p_nu_images(img, nu, 8);
        auto pb = p_nu_images_brick(img, nu, 8);
        for (size_t n = 0; n < p.size(); ++n) CHECK(p[n] == pb[n]);
    }
}

TEST_CASE("brick-route h images invert the signed e series") {
    std::mt19937 gen(7);
    HomImage img = random_image(gen, 7);
    auto hb = h_images_brick(img, 7);
    TXSeries em(7), h(7);
    for (int n = 0; n <= 7; ++n) {
        em[n] = (n % 2 == 0) ? img.at(n) : -img.at(n);
        h[n] = hb[static_cast<size_t>(n)];
    }
    CHECK(em * h == TXSeries::constant(7, XPoly(1)));
}

TEST_CASE("weight one recovers the h images") {
    std::mt19937 gen(11);
    HomImage img = random_image(gen, 7);
    std::vector<Rat> one(8, Rat(1));
    one[0] = Rat(0);
    auto p = p_nu_images(img, one, 7);
    auto h = h_images(img, 7);
    for (size_t n = 0; n < p.size(); ++n) CHECK(p[n] == h[n]);
}

TEST_CASE("weight n on genuine elementary values gives Newton power sums") {
    // Four variables; e_n vanishes beyond the fourth, the identity still holds.
    std::vector<Rat> vars = {Rat(2), Rat(-1, 2), Rat(1, 3), Rat(5)};
    const int N = 6;
    std::vector<Rat> elem(static_cast<size_t>(N) + 1, Rat(0));
    elem[0] = Rat(1);
    for (Rat v : vars)  // incremental expansion of prod (1 + v t)
        for (int n = N; n >= 1; --n)
            elem[static_cast<size_t>(n)] += v * elem[static_cast<size_t>(n) - 1];

    HomImage img;
    img.e.reserve(static_cast<size_t>(N) + 1);
    for (const Rat& c : elem) img.e.emplace_back(c);

    std::vector<Rat> nu(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) nu[static_cast<size_t>(n)] = Rat(n);

    auto p = p_nu_images(img, nu, N);
    for (int n = 1; n <= N; ++n) {
        Rat power(0);
        for (Rat v : vars) {
            Rat t(1);
            for (int i = 0; i < n; ++i) t *= v;
            power += t;
        }
        CHECK(p[static_cast<size_t>(n)] == XPoly(power));
    }
}

TEST_CASE("scaled h images are the match distributions") {
    // (kn)! h_n for the gamma image equals the match-count distribution.
    struct Case {
        const PatternSet* y;
        std::vector<Int> full;
    };
    const Case cases[] = {
        {&kP1Only, full_p1()},
        {&kP2Only, full_p2()},
        {&kSt22, full_st22()},
    };
    for (const auto& [y, full] : cases) {
        HomImage g = gamma_e(full, 2, 5);
        auto h = h_images(g, 5);
        for (int n = 1; n <= 5; ++n) {
            XPoly want = dist_poly(distribution(*y, n, Stat::Mch));
            CHECK(h[static_cast<size_t>(n)] * Rat(factorial(2L * n)) == want);
        }
    }

    // Single-row rises: n = 3 gives the classical 1 + 4x + x^2.
    HomImage g1 = gamma_e(full_rise(4), 1, 4);
    auto h1 = h_images(g1, 4);
    XPoly x = XPoly::variable();
    CHECK(h1[3] * Rat(factorial(3)) == XPoly(1) + Rat(4) * x + x * x);
}

TEST_CASE("squared images: odd h images vanish, even ones scale to distributions") {
    struct Case {
        const PatternSet* y;
        std::vector<Int> full;
        int k;
        int max_even;
    };
    const Case cases[] = {
        {&kRise, full_rise(6), 1, 6},
        {&kP2Only, full_p2(), 2, 4},
        {&kSt22, full_st22(), 2, 4},
    };
    for (const auto& [y, full, k, max_even] : cases) {
        HomImage g2 = gamma2_e(full, k, max_even);
        auto h = h_images(g2, max_even);
        for (int n = 1; n <= max_even; n += 2) CHECK(h[static_cast<size_t>(n)].is_zero());
        for (int n = 2; n <= max_even; n += 2) {
            XPoly want = dist_poly(even_given_odd_distribution(*y, n));
            CHECK(h[static_cast<size_t>(n)] * Rat(factorial(static_cast<long>(k) * n)) == want);
        }
    }
}

TEST_CASE("weights tying the even images to the shorter full counts") {
    // nu(2n) * image(e_2n) telescopes to the odd-index full data exactly.
    struct Case {
        std::vector<Int> full;
        int k;
    };
    const Case cases[] = {
        {full_p1(), 2},
        {full_p2(), 2},
        {full_st22(), 2},
        {full_rise(6), 1},
    };
    for (const auto& [full, k] : cases) {
        const int N = 6;
        HomImage g2 = gamma2_e(full, k, N);
        auto nu = odd_length_weights(full, k, N);
        for (int n = 1; 2 * n <= N; ++n) {
            XPoly lhs = g2.at(2 * n) * nu[static_cast<size_t>(2 * n)];
            XPoly rhs = -(XPoly::x_minus_one_pow(n - 1) *
                          Rat(full[static_cast<size_t>(2 * n - 1)],
                              factorial(static_cast<long>(k) * (2 * n - 1))));
            CHECK(lhs == rhs);
        }
        for (int n = 1; n <= N; n += 2) CHECK(nu[static_cast<size_t>(n)] == 0);
    }
}

TEST_CASE("odd-length distributions via the weighted sums") {
    // (k(2n+1))! p_{2n+2,nu} under the squared image equals the distribution
    // over odd-length fillings required to match at every odd position.
    struct Case {
        const PatternSet* y;
        std::vector<Int> full;
        int k;
        int max_len;  // odd
    };
    const Case cases[] = {
        {&kRise, full_rise(6), 1, 5},
        {&kP2Only, full_p2(), 2, 3},
        {&kSt22, full_st22(), 2, 5},
    };
    for (const auto& [y, full, k, max_len] : cases) {
        const int N = max_len + 1;
        HomImage g2 = gamma2_e(full, k, N);
        auto nu = odd_length_weights(full, k, N);
        auto p = p_nu_images(g2, nu, N);
        for (int len = 1; len <= max_len; len += 2) {
            XPoly want = dist_poly(even_given_odd_distribution(*y, len));
            XPoly got = p[static_cast<size_t>(len) + 1] *
                        Rat(factorial(static_cast<long>(k) * len));
            CHECK(got == want);
        }
    }
}

TEST_CASE("degenerate e images collapse the h images") {
    HomImage img;
    img.e.assign(5, XPoly());
    img.e[0] = XPoly(1);
    auto h = h_images(img, 4);
    CHECK(h[0] == XPoly(1));
    for (int n = 1; n <= 4; ++n) CHECK(h[static_cast<size_t>(n)].is_zero());
}

TEST_CASE("weight sequences must cover the requested range") {
    std::mt19937 gen(3);
    HomImage img = random_image(gen, 4);
    std::vector<Rat> nu(3, Rat(1));  // covers 1..2 only
    CHECK_THROWS_AS(p_nu_images(img, nu, 4), std::invalid_argument);
    CHECK_THROWS_AS(h_images(img, 6), std::invalid_argument);
}
