#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <set>

#include "rectfill/enumerate.hpp"

using namespace rectfill;

namespace {

Filling cols(const std::vector<std::vector<int>>& c) { return Filling::from_columns(c); }

const Pattern kP1 = Pattern::from_columns({{1, 2}, {3, 4}});
const Pattern kP2 = Pattern::from_columns({{1, 3}, {2, 4}});
const PatternSet kSt22({kP1, kP2});
const PatternSet kRise({Pattern::from_columns({{1}, {2}})});

DistPoly poly(std::vector<Int> c) { return DistPoly{std::move(c)}; }

// Slow reference: full filter over the unpruned walk via match_profile.
Int full_by_filter(const PatternSet& y, int n) {
    Int count = 0;
    for_each_filling(y.rows(), n, [&](const Filling& f) {
        if (match_profile(f, y).mch == n - y.cols() + 1) ++count;
    });
    return count;
}

Int alternating_by_filter(const PatternSet& y, int n) {
    Int count = 0;
    for_each_filling(y.rows(), n, [&](const Filling& f) {
        if (is_alternating(f, y)) ++count;
    });
    return count;
}

}  // namespace

TEST_CASE("population counts") {
    CHECK(count_fillings(1, 4) == 24);
    CHECK(count_fillings(2, 2) == 6);
    CHECK(count_fillings(3, 2) == 20);
    CHECK(count_fillings(2, 3) == 90);
    CHECK(count_fillings(4, 1) == 1);
    CHECK(count_fillings(2, 5) == 113400);
}

TEST_CASE("canonical enumeration order and completeness") {
    std::vector<Filling> fs = all_fillings(2, 2);
    REQUIRE(fs.size() == 6);
    CHECK(fs.front() == cols({{1, 2}, {3, 4}}));
    CHECK(fs[1] == cols({{1, 3}, {2, 4}}));
    CHECK(fs.back() == cols({{3, 4}, {1, 2}}));

    std::set<Filling> seen;
    for_each_filling(2, 3, [&](const Filling& f) {
        CHECK(f.is_ground());
        seen.insert(f);
    });
    CHECK(Int(seen.size()) == count_fillings(2, 3));
}

TEST_CASE("enumeration refuses oversized populations up front") {
    CHECK_THROWS_AS(all_fillings(2, 6, 1000), BudgetError);
    long long steps_budget = 10;
    CHECK_THROWS_AS(full_bruteforce(kSt22, 4, steps_budget), BudgetError);
}

TEST_CASE("budget environment override parsing") {
    unsetenv("RECTFILL_MAX_FILLINGS");
    CHECK(enumeration_budget_from_env() == kDefaultEnumerationBudget);
    setenv("RECTFILL_MAX_FILLINGS", "12345", 1);
    CHECK(enumeration_budget_from_env() == 12345);
    setenv("RECTFILL_MAX_FILLINGS", "bogus", 1);
    CHECK_THROWS_AS(enumeration_budget_from_env(), std::invalid_argument);
    unsetenv("RECTFILL_MAX_FILLINGS");
}

TEST_CASE("match count distributions") {
    CHECK(distribution(kSt22, 2, Stat::Mch) == poly({4, 2}));
    CHECK(distribution(kRise, 3, Stat::Mch) == poly({1, 4, 1}));
    CHECK(distribution(kRise, 3, Stat::Nlap) == poly({1, 5}));
    // Single pattern, n = 2: every pattern matches exactly once.
    CHECK(distribution(PatternSet({kP2}), 2, Stat::Mch) == poly({5, 1}));
    // n = 1 has no match positions.
    CHECK(distribution(kSt22, 1, Stat::Mch) == poly({1}));
    // mch and nlap agree through n = 2 and diverge at n = 3.
    DistPoly mch3 = distribution(kSt22, 3, Stat::Mch);
    DistPoly nlap3 = distribution(kSt22, 3, Stat::Nlap);
    CHECK(mch3.total() == 90);
    CHECK(nlap3.total() == 90);
    CHECK(mch3.at(2) > 0);
    CHECK(nlap3.at(2) == 0);
}

TEST_CASE("distribution totals match the population") {
    for (int n = 1; n <= 4; ++n)
        CHECK(distribution(kSt22, n, Stat::Mch).total() == count_fillings(2, n));
    for (int n = 1; n <= 5; ++n)
        CHECK(distribution(kRise, n, Stat::Mch).total() == count_fillings(1, n));
}

TEST_CASE("no-match and end-match counts") {
    CHECK(no_match_count(kSt22, 1) == 1);
    CHECK(no_match_count(kSt22, 2) == 4);
    CHECK(no_match_count(kRise, 4) == 1);  // only the decreasing word
    CHECK(end_match_count(kSt22, 1) == 0);
    CHECK(end_match_count(kSt22, 2) == 2);
    // Consistency with the full distribution.
    for (int n = 1; n <= 4; ++n)
        CHECK(no_match_count(kSt22, n) == distribution(kSt22, n, Stat::Mch).at(0));
}

TEST_CASE("full counts: pruned walk equals unpruned filter") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(full_bruteforce(PatternSet({kP1}), n) == full_by_filter(PatternSet({kP1}), n));
        CHECK(full_bruteforce(PatternSet({kP2}), n) == full_by_filter(PatternSet({kP2}), n));
        CHECK(full_bruteforce(kSt22, n) == full_by_filter(kSt22, n));
    }
}

TEST_CASE("full counts against known sequences") {
    // Column-consecutive tableau forces a unique filling.
    for (int n = 1; n <= 5; ++n) CHECK(full_bruteforce(PatternSet({kP1}), n) == 1);
    // Row-consecutive tableau counts shifted Catalan.
    std::vector<Int> expect{1, 1, 2, 5, 14};
    for (int n = 1; n <= 5; ++n)
        CHECK(full_bruteforce(PatternSet({kP2}), n) == expect[static_cast<size_t>(n - 1)]);
    // All standard tableaux: counts standard tableaux of shape n^k.
    std::vector<Int> cat{1, 2, 5, 14, 42};
    for (int n = 1; n <= 5; ++n)
        CHECK(full_bruteforce(kSt22, n) == cat[static_cast<size_t>(n - 1)]);
    PatternSet st23(standard_tableaux_2cols(3));
    CHECK(full_bruteforce(st23, 2) == 5);
    CHECK(full_bruteforce(st23, 3) == 42);
    for (int n = 1; n <= 6; ++n) CHECK(full_bruteforce(kRise, n) == 1);
}

TEST_CASE("full fillings are exactly the matching ones") {
    std::vector<Filling> fs = full_fillings(PatternSet({kP2}), 4);
    CHECK(Int(fs.size()) == full_bruteforce(PatternSet({kP2}), 4));
    for (const Filling& f : fs)
        CHECK(match_profile(f, PatternSet({kP2})).mch == 3);
}

TEST_CASE("alternating counts: classical up-down numbers at k = 1") {
    std::vector<Int> euler{1, 1, 2, 5, 16, 61};
    for (int n = 1; n <= 6; ++n) {
        CHECK(alternating_count(kRise, n) == euler[static_cast<size_t>(n - 1)]);
        CHECK(alternating_count(kRise, n) == alternating_by_filter(kRise, n));
    }
    for (int n = 1; n <= 4; ++n)
        CHECK(alternating_count(kSt22, n) == alternating_by_filter(kSt22, n));
}

TEST_CASE("even-given-odd marker distribution") {
    CHECK(even_given_odd_distribution(kRise, 1) == poly({1}));
    CHECK(even_given_odd_distribution(kRise, 2) == poly({1}));
    CHECK(even_given_odd_distribution(kRise, 3) == poly({2, 1}));
    // Constant term is the alternating count.
    for (int n = 1; n <= 6; ++n) {
        CHECK(even_given_odd_distribution(kRise, n).at(0) == alternating_count(kRise, n));
        if (n <= 5)
            CHECK(even_given_odd_distribution(kSt22, n).at(0) ==
                  alternating_count(kSt22, n));
    }
    // Slow cross-check of the whole distribution at small sizes.
    for (int n = 2; n <= 5; ++n) {
        DistPoly ref;
        for_each_filling(2, n, [&](const Filling& f) {
            MatchProfile mp = match_profile(f, kSt22);
            bool odd_ok = true;
            for (int i = 1; i <= n - 1; i += 2)
                odd_ok &= std::binary_search(mp.match_set.begin(), mp.match_set.end(), i);
            if (odd_ok) ref.bump(static_cast<size_t>(mp.even_mch));
        });
        ref.trim();
        CHECK(even_given_odd_distribution(kSt22, n) == ref);
    }
}

TEST_CASE("complement preserves the match distribution") {
    for (const Pattern& p : standard_tableaux_2cols(2)) {
        PatternSet y({p});
        PatternSet yc({generalized_complement(p)});
        for (int n = 2; n <= 4; ++n) {
            CHECK(distribution(y, n, Stat::Mch) == distribution(yc, n, Stat::Mch));
            CHECK(full_bruteforce(y, n) == full_bruteforce(yc, n));
        }
    }
    // A 3-row pair that is not self-complementary.
    Pattern q = Pattern::from_columns({{1, 3, 4}, {2, 5, 6}});
    Pattern qc = generalized_complement(q);
    REQUIRE(qc != q);
    for (int n = 2; n <= 3; ++n)
        CHECK(full_bruteforce(PatternSet({q}), n) == full_bruteforce(PatternSet({qc}), n));
}
