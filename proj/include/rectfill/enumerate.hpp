#pragma once

// Exhaustive enumeration of fillings and the brute-force counting quantities
// built on it.  These routines are the ground truth the generating-function
// and poset modules are tested against, so they stay deliberately direct:
// walk every filling (optionally pruning on forced match/non-match positions)
// and tally.
//
// Canonical enumeration order: columns are filled left to right, each column
// receiving a k-subset of the still-unused values (listed bottom to top in
// increasing order); subsets are taken in lexicographic order.
//
// Budget: every routine counts enumeration steps (candidate column
// placements) and refuses by throwing BudgetError once the cap is passed.
// Unpruned walks additionally pre-check the exact population count so the
// refusal is immediate.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rectfill/filling.hpp"
#include "rectfill/numeric.hpp"

namespace rectfill {

inline constexpr long long kDefaultEnumerationBudget = 100'000'000;

// Environment override consulted by the CLI (not by library calls).
inline long long enumeration_budget_from_env() {
    if (const char* s = std::getenv("RECTFILL_MAX_FILLINGS")) {
        char* end = nullptr;
        long long v = std::strtoll(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("RECTFILL_MAX_FILLINGS: not a positive integer");
    }
    return kDefaultEnumerationBudget;
}

// |F_{n,k}| = (kn)! / (k!)^n.
inline Int count_fillings(int k, int n) {
    if (k < 1 || n < 1)
        throw std::invalid_argument("count_fillings: dimensions must be positive");
    Int r = factorial(static_cast<long>(k) * n);
    Int kfact = factorial(k);
    for (int j = 0; j < n; ++j) r /= kfact;
    return r;
}

// Distribution polynomial: coef[m] = number of fillings with statistic m.
struct DistPoly {
    std::vector<Int> coef;

    Int at(size_t m) const { return m < coef.size() ? coef[m] : Int(0); }
    int degree() const {
        for (size_t m = coef.size(); m > 0; --m)
            if (coef[m - 1] != 0) return static_cast<int>(m) - 1;
        return -1;
    }
    Int total() const {
        Int s = 0;
        for (const Int& c : coef) s += c;
        return s;
    }
    void bump(size_t m) {
        if (coef.size() <= m) coef.resize(m + 1);
        ++coef[m];
    }
    void trim() {
        while (!coef.empty() && coef.back() == 0) coef.pop_back();
    }
    bool operator==(const DistPoly& o) const {
        size_t n = std::max(coef.size(), o.coef.size());
        for (size_t m = 0; m < n; ++m)
            if (at(m) != o.at(m)) return false;
        return true;
    }
};

enum class Stat { Mch, Nlap };

enum class PosRule { Free, Required, Forbidden };

namespace detail {

// Shared walker for all brute-force quantities.  Patterns are pre-ranked into
// packed keys when the window (j*k values) fits 16 ranks of 4 bits each; the
// window at position p is checked as soon as column p+j-1 is placed.
class FillingWalker {
public:
    FillingWalker(int k, int n, const PatternSet* y, std::vector<PosRule> rules,
                  long long budget)
        : k_(k), n_(n), kn_(k * n), y_(y), rules_(std::move(rules)), budget_(budget) {
        if (y_) {
            j_ = y_->cols();
            if (y_->rows() != k_)
                throw std::invalid_argument("enumeration: pattern row count mismatch");
            window_ = j_ * k_;
            packed_ = window_ <= 16;
            for (const Pattern& p : y_->patterns()) {
                if (packed_)
                    keys_.push_back(pack(p.filling().cells().data()));
                else
                    raw_.push_back(p.filling().cells());
            }
        }
        const int npos = y_ ? n_ - j_ + 1 : 0;
        if (static_cast<int>(rules_.size()) != std::max(npos, 0))
            throw std::invalid_argument("enumeration: one rule per match position expected");
        colvals_.assign(static_cast<size_t>(kn_), 0);
        used_.assign(static_cast<size_t>(kn_), 0);
        flags_.assign(rules_.size(), 0);
    }

    // visit(colvals, flags): colvals is column-major bottom-to-top, flags has
    // one byte per match position.
    template <class Visitor>
    void run(Visitor&& visit) {
        place_column(1, std::forward<Visitor>(visit));
    }

    long long steps() const { return steps_; }

private:
    template <class Visitor>
    void place_column(int c, Visitor&& visit) {
        if (c > n_) {
            visit(colvals_, flags_);
            return;
        }
        pick(c, 0, 0, std::forward<Visitor>(visit));
    }

    // Choose the remaining k - slot values of column c, each strictly above
    // the previously chosen value index.
    template <class Visitor>
    void pick(int c, int slot, int from, Visitor&& visit) {
        if (slot == k_) {
            if (++steps_ > budget_)
                throw BudgetError("enumeration budget of " + std::to_string(budget_) +
                                  " steps exceeded");
            const int p = y_ ? c - j_ + 1 : 0;
            if (y_ && p >= 1) {
                const bool m = window_matches(p);
                flags_[static_cast<size_t>(p - 1)] = m ? 1 : 0;
                const PosRule r = rules_[static_cast<size_t>(p - 1)];
                if ((r == PosRule::Required && !m) || (r == PosRule::Forbidden && m))
                    return;
            }
            place_column(c + 1, std::forward<Visitor>(visit));
            return;
        }
        for (int v = from; v < kn_; ++v) {
            if (used_[static_cast<size_t>(v)]) continue;
            used_[static_cast<size_t>(v)] = 1;
            colvals_[static_cast<size_t>(c - 1) * k_ + slot] = v + 1;
            pick(c, slot + 1, v + 1, std::forward<Visitor>(visit));
            used_[static_cast<size_t>(v)] = 0;
        }
    }

    uint64_t pack(const int* cells) const {
        uint64_t key = 0;
        for (int t = 0; t < window_; ++t)
            key |= static_cast<uint64_t>(cells[t] - 1) << (4 * t);
        return key;
    }

    bool window_matches(int p) {
        const int* w = colvals_.data() + static_cast<size_t>(p - 1) * k_;
        if (packed_) {
            uint64_t key = 0;
            for (int t = 0; t < window_; ++t) {
                int r = 0;
                for (int u = 0; u < window_; ++u) r += (w[u] < w[t]);
                key |= static_cast<uint64_t>(r) << (4 * t);
            }
            for (uint64_t pk : keys_)
                if (pk == key) return true;
            return false;
        }
        scratch_.resize(static_cast<size_t>(window_));
        for (int t = 0; t < window_; ++t) {
            int r = 1;
            for (int u = 0; u < window_; ++u) r += (w[u] < w[t]);
            scratch_[static_cast<size_t>(t)] = r;
        }
        for (const auto& cells : raw_)
            if (cells == scratch_) return true;
        return false;
    }

    int k_, n_, kn_;
    const PatternSet* y_;
    int j_ = 0, window_ = 0;
    bool packed_ = false;
    std::vector<uint64_t> keys_;
    std::vector<std::vector<int>> raw_;
    std::vector<PosRule> rules_;
    std::vector<int> colvals_;
    std::vector<char> used_;
    std::vector<char> flags_;
    std::vector<int> scratch_;
    long long steps_ = 0;
    long long budget_;
};

inline void precheck_population(int k, int n, long long budget) {
    Int pop = count_fillings(k, n);
    if (pop > budget)
        throw BudgetError("population " + pop.str() + " exceeds enumeration budget of " +
                          std::to_string(budget));
}

inline std::vector<PosRule> uniform_rules(int npos, PosRule r) {
    return std::vector<PosRule>(static_cast<size_t>(std::max(npos, 0)), r);
}

// Odd positions required; even positions get `even_rule`.
inline std::vector<PosRule> odd_required_rules(int npos, PosRule even_rule) {
    std::vector<PosRule> rules(static_cast<size_t>(std::max(npos, 0)), even_rule);
    for (int p = 1; p <= npos; p += 2) rules[static_cast<size_t>(p - 1)] = PosRule::Required;
    return rules;
}

}  // namespace detail

// Every filling of the k x n rectangle, canonical order.
template <class Visitor>
void for_each_filling(int k, int n, Visitor&& visit,
                      long long budget = kDefaultEnumerationBudget) {
    detail::precheck_population(k, n, budget);
    detail::FillingWalker walker(k, n, nullptr, {}, budget);
    walker.run([&](const std::vector<int>& colvals, const std::vector<char>&) {
        visit(Filling(k, n, colvals));
    });
}

inline std::vector<Filling> all_fillings(int k, int n,
                                         long long budget = kDefaultEnumerationBudget) {
    std::vector<Filling> out;
    for_each_filling(k, n, [&](const Filling& f) { out.push_back(f); }, budget);
    return out;
}

// Marker distribution of mch or nlap over all fillings of k x n, k from y.
inline DistPoly distribution(const PatternSet& y, int n, Stat stat,
                             long long budget = kDefaultEnumerationBudget) {
    const int k = y.rows(), j = y.cols();
    detail::precheck_population(k, n, budget);
    detail::FillingWalker walker(k, n, &y, detail::uniform_rules(n - j + 1, PosRule::Free),
                                 budget);
    DistPoly d;
    walker.run([&](const std::vector<int>&, const std::vector<char>& flags) {
        int m = 0;
        if (stat == Stat::Mch) {
            for (char f : flags) m += f;
        } else {
            int next = 0;
            for (size_t p = 0; p < flags.size(); ++p)
                if (flags[p] && static_cast<int>(p) >= next) {
                    ++m;
                    next = static_cast<int>(p) + j;
                }
        }
        d.bump(static_cast<size_t>(m));
    });
    d.trim();
    return d;
}

// Fillings with no match anywhere (the series A coefficients).
inline Int no_match_count(const PatternSet& y, int n,
                          long long budget = kDefaultEnumerationBudget) {
    const int k = y.rows(), j = y.cols();
    detail::FillingWalker walker(k, n, &y,
                                 detail::uniform_rules(n - j + 1, PosRule::Forbidden), budget);
    Int count = 0;
    walker.run([&](const std::vector<int>&, const std::vector<char>&) { ++count; });
    return count;
}

// Fillings whose only match sits at the last possible position.
inline Int end_match_count(const PatternSet& y, int n,
                           long long budget = kDefaultEnumerationBudget) {
    const int k = y.rows(), j = y.cols();
    const int npos = n - j + 1;
    if (npos < 1) return 0;
    auto rules = detail::uniform_rules(npos, PosRule::Forbidden);
    rules.back() = PosRule::Required;
    detail::FillingWalker walker(k, n, &y, std::move(rules), budget);
    Int count = 0;
    walker.run([&](const std::vector<int>&, const std::vector<char>&) { ++count; });
    return count;
}

// Fillings matching at every position (n = 1 has none to check).
inline Int full_bruteforce(const PatternSet& y, int n,
                           long long budget = kDefaultEnumerationBudget) {
    const int k = y.rows(), j = y.cols();
    detail::FillingWalker walker(k, n, &y,
                                 detail::uniform_rules(n - j + 1, PosRule::Required), budget);
    Int count = 0;
    walker.run([&](const std::vector<int>&, const std::vector<char>&) { ++count; });
    return count;
}

// The fillings counted by full_bruteforce, materialized.
inline std::vector<Filling> full_fillings(const PatternSet& y, int n,
                                          long long budget = kDefaultEnumerationBudget) {
    const int k = y.rows(), j = y.cols();
    detail::FillingWalker walker(k, n, &y,
                                 detail::uniform_rules(n - j + 1, PosRule::Required), budget);
    std::vector<Filling> out;
    walker.run([&](const std::vector<int>& colvals, const std::vector<char>&) {
        out.emplace_back(k, n, colvals);
    });
    return out;
}

// Matches exactly at the odd positions of 1..n-1 (2-column pattern sets).
inline Int alternating_count(const PatternSet& y, int n,
                             long long budget = kDefaultEnumerationBudget) {
    if (y.cols() != 2)
        throw std::invalid_argument("alternating_count: pattern set must have 2 columns");
    const int k = y.rows();
    detail::FillingWalker walker(
        k, n, &y, detail::odd_required_rules(n - 1, PosRule::Forbidden), budget);
    Int count = 0;
    walker.run([&](const std::vector<int>&, const std::vector<char>&) { ++count; });
    return count;
}

// Marker distribution of the even-position match count over the fillings that
// match at every odd position (2-column pattern sets).
inline DistPoly even_given_odd_distribution(const PatternSet& y, int n,
                                            long long budget = kDefaultEnumerationBudget) {
    if (y.cols() != 2)
        throw std::invalid_argument(
            "even_given_odd_distribution: pattern set must have 2 columns");
    const int k = y.rows();
    detail::FillingWalker walker(k, n, &y,
                                 detail::odd_required_rules(n - 1, PosRule::Free), budget);
    DistPoly d;
    walker.run([&](const std::vector<int>&, const std::vector<char>& flags) {
        int m = 0;
        for (size_t p = 1; p < flags.size(); p += 2) m += flags[p];
        d.bump(static_cast<size_t>(m));
    });
    d.trim();
    return d;
}

}  // namespace rectfill
