#pragma once

// Column-increasing fillings of a k x n rectangle and consecutive pattern
// matching on them.
//
// Conventions used across the library:
//   * cell (i, j) means row i counted from the bottom, column j from the left,
//     both 1-based;
//   * a filling holds distinct positive integers, each column strictly
//     increasing bottom to top;
//   * a filling is "ground" when its value set is exactly {1, ..., rows*cols}.
//
// The text format puts the TOP row first, which is how these arrays are
// usually drawn; parsing converts to the bottom-up indexing above.

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rectfill {

class Filling {
public:
    // cells are column-major, each column listed bottom to top.
    Filling(int rows, int cols, std::vector<int> cells)
        : rows_(rows), cols_(cols), cells_(std::move(cells)) {
        validate();
    }

    static Filling from_columns(const std::vector<std::vector<int>>& columns) {
        if (columns.empty()) throw std::invalid_argument("Filling: no columns");
        const int rows = static_cast<int>(columns.front().size());
        std::vector<int> cells;
        cells.reserve(columns.size() * static_cast<size_t>(rows));
        for (const auto& col : columns) {
            if (static_cast<int>(col.size()) != rows)
                throw std::invalid_argument("Filling: ragged columns");
            cells.insert(cells.end(), col.begin(), col.end());
        }
        return Filling(rows, static_cast<int>(columns.size()), std::move(cells));
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // Value at row i (from the bottom), column j; 1-based.
    int operator()(int i, int j) const {
        return cells_[static_cast<size_t>(j - 1) * rows_ + (i - 1)];
    }

    const std::vector<int>& cells() const { return cells_; }

    std::vector<int> column(int j) const {
        auto first = cells_.begin() + static_cast<size_t>(j - 1) * rows_;
        return std::vector<int>(first, first + rows_);
    }

    bool is_ground() const {
        std::vector<int> v = cells_;
        std::sort(v.begin(), v.end());
        for (size_t t = 0; t < v.size(); ++t)
            if (v[t] != static_cast<int>(t) + 1) return false;
        return true;
    }

    // True when every row increases left to right.
    bool rows_increase() const {
        for (int i = 1; i <= rows_; ++i)
            for (int j = 1; j < cols_; ++j)
                if ((*this)(i, j) >= (*this)(i, j + 1)) return false;
        return true;
    }

    bool operator==(const Filling& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && cells_ == o.cells_;
    }
    bool operator!=(const Filling& o) const { return !(*this == o); }
    bool operator<(const Filling& o) const {
        if (rows_ != o.rows_) return rows_ < o.rows_;
        if (cols_ != o.cols_) return cols_ < o.cols_;
        return cells_ < o.cells_;
    }

private:
    void validate() const {
        if (rows_ < 1 || cols_ < 1)
            throw std::invalid_argument("Filling: dimensions must be positive");
        if (cells_.size() != static_cast<size_t>(rows_) * cols_)
            throw std::invalid_argument("Filling: cell count does not match shape");
        for (int v : cells_)
            if (v < 1) throw std::invalid_argument("Filling: values must be positive");
        std::vector<int> v = cells_;
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end())
            throw std::invalid_argument("Filling: values must be distinct");
        for (int j = 1; j <= cols_; ++j)
            for (int i = 1; i < rows_; ++i)
                if ((*this)(i, j) >= (*this)(i + 1, j))
                    throw std::invalid_argument(
                        "Filling: columns must increase bottom to top");
    }

    int rows_;
    int cols_;
    std::vector<int> cells_;
};

// Order-preserving relabeling onto {1, ..., rows*cols}.
inline Filling reduce(const Filling& f) {
    std::vector<int> sorted = f.cells();
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> cells(f.cells().size());
    for (size_t t = 0; t < cells.size(); ++t) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), f.cells()[t]);
        cells[t] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return Filling(f.rows(), f.cols(), std::move(cells));
}

// Sub-filling on the given strictly increasing 1-based column indices.
inline Filling select_columns(const Filling& f, const std::vector<int>& idx) {
    if (idx.empty()) throw std::invalid_argument("select_columns: empty selection");
    std::vector<int> cells;
    cells.reserve(idx.size() * static_cast<size_t>(f.rows()));
    int prev = 0;
    for (int j : idx) {
        if (j <= prev || j > f.cols())
            throw std::invalid_argument("select_columns: indices must be increasing and in range");
        prev = j;
        for (int i = 1; i <= f.rows(); ++i) cells.push_back(f(i, j));
    }
    return Filling(f.rows(), static_cast<int>(idx.size()), std::move(cells));
}

// A pattern is a ground filling; it is standard when its rows also increase.
class Pattern {
public:
    explicit Pattern(Filling f) : f_(std::move(f)) {
        if (!f_.is_ground())
            throw std::invalid_argument("Pattern: filling must use values 1..rows*cols");
    }

    static Pattern from_columns(const std::vector<std::vector<int>>& columns) {
        return Pattern(Filling::from_columns(columns));
    }

    const Filling& filling() const { return f_; }
    int rows() const { return f_.rows(); }
    int cols() const { return f_.cols(); }
    bool standard() const { return f_.rows_increase(); }

    bool operator==(const Pattern& o) const { return f_ == o.f_; }
    bool operator!=(const Pattern& o) const { return f_ != o.f_; }
    bool operator<(const Pattern& o) const { return f_ < o.f_; }

private:
    Filling f_;
};

// Nonempty set of patterns of one common shape.
class PatternSet {
public:
    explicit PatternSet(std::vector<Pattern> patterns) : ps_(std::move(patterns)) {
        if (ps_.empty()) throw std::invalid_argument("PatternSet: empty set");
        for (const Pattern& p : ps_)
            if (p.rows() != ps_.front().rows() || p.cols() != ps_.front().cols())
                throw std::invalid_argument("PatternSet: mixed pattern shapes");
        std::sort(ps_.begin(), ps_.end());
        ps_.erase(std::unique(ps_.begin(), ps_.end()), ps_.end());
    }

    PatternSet(std::initializer_list<Pattern> patterns)
        : PatternSet(std::vector<Pattern>(patterns)) {}

    int rows() const { return ps_.front().rows(); }
    int cols() const { return ps_.front().cols(); }
    size_t size() const { return ps_.size(); }
    const std::vector<Pattern>& patterns() const { return ps_; }

    bool contains(const Filling& ground) const {
        return std::binary_search(ps_.begin(), ps_.end(), Pattern(ground));
    }

private:
    std::vector<Pattern> ps_;
};

struct MatchProfile {
    std::vector<int> match_set;  // ascending start positions
    int mch = 0;                 // |match_set|
    int nlap = 0;                // greedy maximal non-overlapping count
    int even_mch = 0;            // matches at even start positions
};

// True when the j consecutive columns of f starting at i reduce to a member
// of y.  Positions run 1..cols-j+1.
inline bool match_at(const Filling& f, const PatternSet& y, int i) {
    if (f.rows() != y.rows())
        throw std::invalid_argument("match_at: row count mismatch");
    const int j = y.cols();
    if (i < 1 || i + j - 1 > f.cols())
        throw std::invalid_argument("match_at: start position out of range");
    std::vector<int> idx(static_cast<size_t>(j));
    for (int t = 0; t < j; ++t) idx[static_cast<size_t>(t)] = i + t;
    return y.contains(reduce(select_columns(f, idx)));
}

inline MatchProfile match_profile(const Filling& f, const PatternSet& y) {
    if (f.rows() != y.rows())
        throw std::invalid_argument("match_profile: row count mismatch");
    const int j = y.cols();
    MatchProfile mp;
    int next_free = 1;  // earliest start not overlapping the matches taken so far
    for (int i = 1; i + j - 1 <= f.cols(); ++i) {
        if (!match_at(f, y, i)) continue;
        mp.match_set.push_back(i);
        ++mp.mch;
        if (i % 2 == 0) ++mp.even_mch;
        if (i >= next_free) {
            ++mp.nlap;
            next_free = i + j;
        }
    }
    return mp;
}

// Occurrence: some increasing selection of p.cols() columns reduces to p.
inline bool occurs(const Filling& f, const Pattern& p) {
    if (f.rows() != p.rows())
        throw std::invalid_argument("occurs: row count mismatch");
    const int n = f.cols(), j = p.cols();
    if (j > n) return false;
    std::vector<int> idx(static_cast<size_t>(j));
    for (int t = 0; t < j; ++t) idx[static_cast<size_t>(t)] = t + 1;
    while (true) {
        if (reduce(select_columns(f, idx)) == p.filling()) return true;
        // next combination in lexicographic order
        int t = j - 1;
        while (t >= 0 && idx[static_cast<size_t>(t)] == n - (j - 1 - t)) --t;
        if (t < 0) return false;
        ++idx[static_cast<size_t>(t)];
        for (int u = t + 1; u < j; ++u)
            idx[static_cast<size_t>(u)] = idx[static_cast<size_t>(u - 1)] + 1;
    }
}

// Matches exactly at the odd start positions of 1..cols-1.  Defined for
// 2-column pattern sets; a single column (cols == 1) is alternating.
inline bool is_alternating(const Filling& f, const PatternSet& y) {
    if (y.cols() != 2)
        throw std::invalid_argument("is_alternating: pattern set must have 2 columns");
    MatchProfile mp = match_profile(f, y);
    std::vector<int> odd;
    for (int i = 1; i <= f.cols() - 1; i += 2) odd.push_back(i);
    return mp.match_set == odd;
}

// The involution F(i, j) -> rows*cols + 1 - F(rows+1-i, cols+1-j).
// Defined on ground fillings.
inline Filling generalized_complement(const Filling& f) {
    if (!f.is_ground())
        throw std::invalid_argument("generalized_complement: filling must be ground");
    const int k = f.rows(), n = f.cols(), kn = k * n;
    std::vector<int> cells(static_cast<size_t>(kn));
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= k; ++i)
            cells[static_cast<size_t>(j - 1) * k + (i - 1)] =
                kn + 1 - f(k + 1 - i, n + 1 - j);
    return Filling(k, n, std::move(cells));
}

inline Pattern generalized_complement(const Pattern& p) {
    return Pattern(generalized_complement(p.filling()));
}

// All standard fillings of a k x 2 rectangle (2-column standard tableaux),
// ordered lexicographically by first-column content.
inline std::vector<Pattern> standard_tableaux_2cols(int k) {
    if (k < 1) throw std::invalid_argument("standard_tableaux_2cols: k must be positive");
    std::vector<Pattern> out;
    std::vector<int> col1, col2;
    // Values 1..2k placed in increasing order; each goes on top of column 1 or
    // column 2, never letting column 2 grow past column 1 (rows must increase).
    auto rec = [&](auto&& self, int v) -> void {
        if (v > 2 * k) {
            std::vector<int> cells(col1);
            cells.insert(cells.end(), col2.begin(), col2.end());
            out.emplace_back(Filling(k, 2, std::move(cells)));
            return;
        }
        if (static_cast<int>(col1.size()) < k) {
            col1.push_back(v);
            self(self, v + 1);
            col1.pop_back();
        }
        if (col2.size() < col1.size()) {
            col2.push_back(v);
            self(self, v + 1);
            col2.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- text format -----------------------------------------------------------
//
// First line: "<rows> <cols>".  Then rows lines of cols integers, top row
// first.

inline Filling parse_filling(std::istream& in) {
    int k = 0, n = 0;
    if (!(in >> k >> n))
        throw std::invalid_argument("parse_filling: expected \"rows cols\" header");
    if (k < 1 || n < 1)
        throw std::invalid_argument("parse_filling: dimensions must be positive");
    std::vector<int> cells(static_cast<size_t>(k) * n);
    for (int r = 0; r < k; ++r) {
        const int i = k - r;  // text rows arrive top first
        for (int j = 1; j <= n; ++j) {
            int v = 0;
            if (!(in >> v))
                throw std::invalid_argument("parse_filling: too few values");
            cells[static_cast<size_t>(j - 1) * k + (i - 1)] = v;
        }
    }
    return Filling(k, n, std::move(cells));
}

inline Filling parse_filling(const std::string& text) {
    std::istringstream in(text);
    return parse_filling(in);
}

inline void print_filling(std::ostream& out, const Filling& f) {
    out << f.rows() << ' ' << f.cols() << '\n';
    for (int i = f.rows(); i >= 1; --i) {
        for (int j = 1; j <= f.cols(); ++j) {
            if (j > 1) out << ' ';
            out << f(i, j);
        }
        out << '\n';
    }
}

inline std::string format_filling(const Filling& f) {
    std::ostringstream out;
    print_filling(out, f);
    return out.str();
}

}  // namespace rectfill
