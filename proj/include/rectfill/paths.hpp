#pragma once

// Lattice paths and the two bijections attached to them: theta between
// free up/down paths and two-row fillings (restricting Dyck paths onto the
// fillings that match the crossing two-row pattern everywhere), and
// gamma_bij between two-column standard tableaux and 2-colored Motzkin
// paths.  Path literals use one character per step: U, D, H, and h for the
// second horizontal color.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rectfill/enumerate.hpp"
#include "rectfill/filling.hpp"
#include "rectfill/numeric.hpp"

namespace rectfill {

enum class Step : unsigned char { U, D, H, Ht };

using StepSeq = std::vector<Step>;

inline char step_char(Step s) {
    switch (s) {
        case Step::U: return 'U';
        case Step::D: return 'D';
        case Step::H: return 'H';
        case Step::Ht: return 'h';
    }
    throw std::logic_error("step_char: bad step");
}

inline Step step_from_char(char c) {
    switch (c) {
        case 'U': return Step::U;
        case 'D': return Step::D;
        case 'H': return Step::H;
        case 'h': return Step::Ht;
        default: break;
    }
    throw std::invalid_argument(std::string("unknown step character '") + c + "'");
}

inline std::string path_string(const StepSeq& steps) {
    std::string out;
    out.reserve(steps.size());
    for (Step s : steps) out.push_back(step_char(s));
    return out;
}

inline StepSeq parse_steps(const std::string& text) {
    StepSeq out;
    out.reserve(text.size());
    for (char c : text) out.push_back(step_from_char(c));
    return out;
}

namespace detail {

inline void require_updown(const StepSeq& steps, const char* who) {
    for (Step s : steps)
        if (s != Step::U && s != Step::D)
            throw std::invalid_argument(std::string(who) + ": only U and D steps allowed");
}

}  // namespace detail

// Nonnegative up/down path returning to height 0.
class DyckPath {
public:
    explicit DyckPath(StepSeq steps) : steps_(std::move(steps)) {
        detail::require_updown(steps_, "DyckPath");
        int h = 0;
        for (Step s : steps_) {
            h += (s == Step::U) ? 1 : -1;
            if (h < 0) throw std::invalid_argument("DyckPath: prefix dips below the axis");
        }
        if (h != 0) throw std::invalid_argument("DyckPath: must end at height 0");
    }
    static DyckPath from_string(const std::string& text) { return DyckPath(parse_steps(text)); }

    const StepSeq& steps() const { return steps_; }
    int size() const { return static_cast<int>(steps_.size()); }
    std::string str() const { return path_string(steps_); }
    bool operator==(const DyckPath& o) const { return steps_ == o.steps_; }

private:
    StepSeq steps_;
};

// Balanced up/down path, first step up and last step down, with free
// prefix heights.  Every Dyck path qualifies.
class EPath {
public:
    explicit EPath(StepSeq steps) : steps_(std::move(steps)) {
        detail::require_updown(steps_, "EPath");
        if (steps_.size() % 2 != 0) throw std::invalid_argument("EPath: length must be even");
        long ups = 0;
        for (Step s : steps_) ups += (s == Step::U);
        if (2 * ups != static_cast<long>(steps_.size()))
            throw std::invalid_argument("EPath: needs equally many rises and falls");
        if (!steps_.empty() && (steps_.front() != Step::U || steps_.back() != Step::D))
            throw std::invalid_argument("EPath: must start with U and end with D");
    }
    EPath(const DyckPath& d) : steps_(d.steps()) {}  // NOLINT: value-preserving widening
    static EPath from_string(const std::string& text) { return EPath(parse_steps(text)); }

    const StepSeq& steps() const { return steps_; }
    int size() const { return static_cast<int>(steps_.size()); }
    std::string str() const { return path_string(steps_); }
    bool is_dyck() const {
        int h = 0;
        for (Step s : steps_) {
            h += (s == Step::U) ? 1 : -1;
            if (h < 0) return false;
        }
        return true;
    }
    bool operator==(const EPath& o) const { return steps_ == o.steps_; }

private:
    StepSeq steps_;
};

// Motzkin path whose horizontal steps carry one of two colors (H or h).
class Motzkin2Path {
public:
    explicit Motzkin2Path(StepSeq steps) : steps_(std::move(steps)) {
        int h = 0;
        for (Step s : steps_) {
            if (s == Step::U) ++h;
            if (s == Step::D) --h;
            if (h < 0) throw std::invalid_argument("Motzkin2Path: prefix dips below the axis");
        }
        if (h != 0) throw std::invalid_argument("Motzkin2Path: must end at height 0");
    }
    static Motzkin2Path from_string(const std::string& text) {
        return Motzkin2Path(parse_steps(text));
    }

    const StepSeq& steps() const { return steps_; }
    int size() const { return static_cast<int>(steps_.size()); }
    std::string str() const { return path_string(steps_); }
    bool has_second_color() const {
        for (Step s : steps_)
            if (s == Step::Ht) return true;
        return false;
    }
    bool operator==(const Motzkin2Path& o) const { return steps_ == o.steps_; }
    bool operator<(const Motzkin2Path& o) const { return steps_ < o.steps_; }

private:
    StepSeq steps_;
};

namespace detail {

template <typename Emit>
void walk_motzkin(int left, int height, bool two_colors, StepSeq& cur, Emit&& emit) {
    if (left == 0) {
        if (height == 0) emit(cur);
        return;
    }
    if (height + left < 0 || height > left) return;  // cannot return to 0 in time
    cur.push_back(Step::U);
    walk_motzkin(left - 1, height + 1, two_colors, cur, emit);
    cur.back() = Step::H;
    walk_motzkin(left - 1, height, two_colors, cur, emit);
    if (two_colors) {
        cur.back() = Step::Ht;
        walk_motzkin(left - 1, height, two_colors, cur, emit);
    }
    if (height > 0) {
        cur.back() = Step::D;
        walk_motzkin(left - 1, height - 1, two_colors, cur, emit);
    }
    cur.pop_back();
}

}  // namespace detail

// All Dyck paths of length 2m in lexicographic step order (U before D).
inline std::vector<DyckPath> enumerate_dyck(int m,
                                            long long budget = kDefaultEnumerationBudget) {
    if (m < 0) throw std::invalid_argument("enumerate_dyck: negative length");
    if (catalan_number(m) > budget)
        throw BudgetError("enumerate_dyck: " + to_decimal(catalan_number(m)) +
                          " paths exceed the budget");
    std::vector<DyckPath> out;
    StepSeq cur;
    auto rec = [&](auto&& self, int ups, int downs, int height) -> void {
        if (ups == 0 && downs == 0) {
            out.emplace_back(cur);
            return;
        }
        if (ups > 0) {
            cur.push_back(Step::U);
            self(self, ups - 1, downs, height + 1);
            cur.pop_back();
        }
        if (downs > 0 && height > 0) {
            cur.push_back(Step::D);
            self(self, ups, downs - 1, height - 1);
            cur.pop_back();
        }
    };
    rec(rec, m, m, 0);
    return out;
}

// All balanced first-up/last-down paths of length 2m; prefixes are free.
inline std::vector<EPath> enumerate_epaths(int m,
                                           long long budget = kDefaultEnumerationBudget) {
    if (m < 0) throw std::invalid_argument("enumerate_epaths: negative length");
    if (m == 0) return {EPath(StepSeq{})};
    if (binomial(2 * m - 2, m - 1) > budget)
        throw BudgetError("enumerate_epaths: " + to_decimal(binomial(2 * m - 2, m - 1)) +
                          " paths exceed the budget");
    std::vector<EPath> out;
    StepSeq cur{Step::U};
    auto rec = [&](auto&& self, int ups, int downs) -> void {
        if (ups == 0 && downs == 0) {
            cur.push_back(Step::D);
            out.emplace_back(cur);
            cur.pop_back();
            return;
        }
        if (ups > 0) {
            cur.push_back(Step::U);
            self(self, ups - 1, downs);
            cur.pop_back();
        }
        if (downs > 0) {
            cur.push_back(Step::D);
            self(self, ups, downs - 1);
            cur.pop_back();
        }
    };
    rec(rec, m - 1, m - 1);
    return out;
}

inline std::vector<Motzkin2Path> enumerate_motzkin2(int m,
                                                    long long budget = kDefaultEnumerationBudget) {
    if (m < 0) throw std::invalid_argument("enumerate_motzkin2: negative length");
    if (catalan_number(m + 1) > budget)
        throw BudgetError("enumerate_motzkin2: " + to_decimal(catalan_number(m + 1)) +
                          " paths exceed the budget");
    std::vector<Motzkin2Path> out;
    StepSeq cur;
    detail::walk_motzkin(m, 0, true, cur, [&](const StepSeq& s) { out.emplace_back(s); });
    return out;
}

// Single-color Motzkin paths, emitted as Motzkin2Path values without h steps.
inline std::vector<Motzkin2Path> enumerate_motzkin(int m,
                                                   long long budget = kDefaultEnumerationBudget) {
    if (m < 0) throw std::invalid_argument("enumerate_motzkin: negative length");
    if (motzkin_number(m) > budget)
        throw BudgetError("enumerate_motzkin: " + to_decimal(motzkin_number(m)) +
                          " paths exceed the budget");
    std::vector<Motzkin2Path> out;
    StepSeq cur;
    detail::walk_motzkin(m, 0, false, cur, [&](const StepSeq& s) { out.emplace_back(s); });
    return out;
}

// Two-row filling with increasing rows, 1 and 2 opening the bottom row and
// 2n-1, 2n closing the top row.  Columns need not increase, so this is not
// a Filling; to_filling() converts when they do.
class RowFilling {
public:
    RowFilling(std::vector<int> bottom, std::vector<int> top)
        : bottom_(std::move(bottom)), top_(std::move(top)) {
        const int n = static_cast<int>(bottom_.size());
        if (n < 1 || top_.size() != bottom_.size())
            throw std::invalid_argument("RowFilling: rows must be nonempty and equally long");
        std::vector<char> seen(static_cast<size_t>(2 * n) + 1, 0);
        auto mark = [&](int v) {
            if (v < 1 || v > 2 * n || seen[static_cast<size_t>(v)])
                throw std::invalid_argument("RowFilling: values must be 1..2n, each once");
            seen[static_cast<size_t>(v)] = 1;
        };
        for (int v : bottom_) mark(v);
        for (int v : top_) mark(v);
        for (int j = 1; j < n; ++j)
            if (bottom_[static_cast<size_t>(j) - 1] >= bottom_[static_cast<size_t>(j)] ||
                top_[static_cast<size_t>(j) - 1] >= top_[static_cast<size_t>(j)])
                throw std::invalid_argument("RowFilling: rows must increase");
        bool ok = bottom_[0] == 1 && top_[static_cast<size_t>(n) - 1] == 2 * n;
        if (n >= 2)
            ok = ok && bottom_[1] == 2 && top_[static_cast<size_t>(n) - 2] == 2 * n - 1;
        if (!ok) throw std::invalid_argument("RowFilling: boundary values are forced");
    }

    int cols() const { return static_cast<int>(bottom_.size()); }
    const std::vector<int>& bottom() const { return bottom_; }
    const std::vector<int>& top() const { return top_; }

    bool column_increasing() const {
        for (size_t j = 0; j < bottom_.size(); ++j)
            if (bottom_[j] > top_[j]) return false;
        return true;
    }
    Filling to_filling() const {
        std::vector<std::vector<int>> columns(bottom_.size());
        for (size_t j = 0; j < bottom_.size(); ++j)
            columns[j] = {bottom_[j], top_[j]};
        return Filling::from_columns(columns);  // rejects decreasing columns
    }

    bool operator==(const RowFilling& o) const {
        return bottom_ == o.bottom_ && top_ == o.top_;
    }

private:
    std::vector<int> bottom_, top_;
};

// theta: label the interior steps with 3..2n-2 and route each value to the
// bottom row under an up-step, to the top row under a down-step.
inline RowFilling theta(const EPath& p) {
    const int n = p.size() / 2 + 1;
    if (n == 1) return RowFilling({1}, {2});
    std::vector<int> bottom{1, 2}, top;
    bottom.reserve(static_cast<size_t>(n));
    top.reserve(static_cast<size_t>(n));
    for (int v = 3; v <= 2 * n - 2; ++v) {
        if (p.steps()[static_cast<size_t>(v) - 2] == Step::U)
            bottom.push_back(v);
        else
            top.push_back(v);
    }
    top.push_back(2 * n - 1);
    top.push_back(2 * n);
    return RowFilling(std::move(bottom), std::move(top));
}

inline EPath theta_inv(const RowFilling& f) {
    const int n = f.cols();
    if (n == 1) return EPath(StepSeq{});
    StepSeq steps(static_cast<size_t>(2 * n) - 2, Step::D);
    steps[0] = Step::U;
    for (int j = 2; j < n; ++j)  // interior bottom-row values came from up-steps
        steps[static_cast<size_t>(f.bottom()[static_cast<size_t>(j)]) - 2] = Step::U;
    return EPath(std::move(steps));
}

// gamma_bij: read off, for each row i < n, whether the successor of each of
// the two row-i entries stays in its column (one row up) or crosses.
//   stay/cross -> U, cross/stay -> D, stay/stay -> H, cross/cross -> h.
inline Motzkin2Path gamma_bij(const Pattern& p) {
    if (p.cols() != 2 || !p.standard())
        throw std::invalid_argument("gamma_bij: need a two-column standard tableau");
    const int n = p.rows();
    const Filling& f = p.filling();
    std::vector<std::pair<int, int>> pos(static_cast<size_t>(2 * n) + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= 2; ++j) pos[static_cast<size_t>(f(i, j))] = {i, j};
    StepSeq steps;
    steps.reserve(static_cast<size_t>(n) - 1);
    for (int i = 1; i < n; ++i) {
        auto s1 = pos[static_cast<size_t>(f(i, 1)) + 1];
        auto s2 = pos[static_cast<size_t>(f(i, 2)) + 1];
        bool stay1 = s1.second == 1;  // else the successor sits at (g,2), g <= i
        bool stay2 = s2.second == 2;  // else it sits at (j,1), j > i
        if (!stay1 && stay2 && s1.first == i)
            throw std::logic_error("gamma_bij: impossible fall configuration");
        steps.push_back(stay1 ? (stay2 ? Step::H : Step::U)
                              : (stay2 ? Step::D : Step::Ht));
    }
    return Motzkin2Path(std::move(steps));
}

// Inverse by replaying the consecutive-value walk: each value is placed in
// the lowest open cell of the column its predecessor's step dictates.
inline Pattern gamma_bij_inv(const Motzkin2Path& m) {
    const int n = m.size() + 1;
    std::vector<int> col1(static_cast<size_t>(n) + 1), col2(static_cast<size_t>(n) + 1);
    int next1 = 1, next2 = 1;
    int row = 1, col = 1;
    col1[1] = 1;
    next1 = 2;
    for (int v = 1; v < 2 * n; ++v) {
        bool cross;
        if (col == 1)
            cross = row == n || m.steps()[static_cast<size_t>(row) - 1] == Step::D ||
                    m.steps()[static_cast<size_t>(row) - 1] == Step::Ht;
        else {
            if (row == n) throw std::logic_error("gamma_bij_inv: walk stuck at the top");
            cross = m.steps()[static_cast<size_t>(row) - 1] == Step::U ||
                    m.steps()[static_cast<size_t>(row) - 1] == Step::Ht;
        }
        int tocol = cross ? 3 - col : col;
        int torow = cross ? (tocol == 1 ? next1 : next2) : row + 1;
        if (torow > n) throw std::logic_error("gamma_bij_inv: walk overruns a column");
        (tocol == 1 ? col1 : col2)[static_cast<size_t>(torow)] = v + 1;
        (tocol == 1 ? next1 : next2) = torow + 1;
        row = torow;
        col = tocol;
    }
    if (next1 != n + 1 || next2 != n + 1)
        throw std::logic_error("gamma_bij_inv: walk left gaps");
    Pattern out = Pattern::from_columns(
        {std::vector<int>(col1.begin() + 1, col1.end()),
         std::vector<int>(col2.begin() + 1, col2.end())});
    if (!out.standard()) throw std::logic_error("gamma_bij_inv: reconstruction not standard");
    return out;
}

}  // namespace rectfill
