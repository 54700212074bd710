#pragma once

// The order-theoretic route to full-match counts for a single 2-column
// pattern P.  Consecutive values of P trace a path over its 2k cells; laying
// that path over every adjacent column pair of a k x n rectangle yields a DAG
// whose reachability order is respected by exactly the fillings that match P
// everywhere, and full counts become linear-extension counts.
//
// Also houses the degeneracy classification of standard 2-column tableaux
// (degenerate <=> one full filling per length) and the closed-form count
// formulas the CLI exposes.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rectfill/filling.hpp"
#include "rectfill/numeric.hpp"

namespace rectfill {

class OrderDag {
public:
    OrderDag(int rows, int cols)
        : rows_(rows), cols_(cols), size_(rows * cols),
          adj_(static_cast<size_t>(size_), std::vector<char>(static_cast<size_t>(size_), 0)) {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("OrderDag: dimensions must be positive");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int size() const { return size_; }

    int vertex(int i, int j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_)
            throw std::invalid_argument("OrderDag: cell out of range");
        return (j - 1) * rows_ + (i - 1);
    }
    std::pair<int, int> cell(int v) const { return {v % rows_ + 1, v / rows_ + 1}; }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("OrderDag: self loop");
        adj_[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
    }
    void remove_edge(int u, int v) { adj_[static_cast<size_t>(u)][static_cast<size_t>(v)] = 0; }
    bool has_edge(int u, int v) const { return adj_[static_cast<size_t>(u)][static_cast<size_t>(v)] != 0; }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < size_; ++u)
            for (int v = 0; v < size_; ++v)
                if (has_edge(u, v)) es.emplace_back(u, v);
        return es;
    }

    int out_degree(int u) const {
        int d = 0;
        for (int v = 0; v < size_; ++v) d += has_edge(u, v);
        return d;
    }

    // Kahn's algorithm; throws if the graph has a cycle.
    std::vector<int> topological_order() const {
        std::vector<int> indeg(static_cast<size_t>(size_), 0);
        for (int u = 0; u < size_; ++u)
            for (int v = 0; v < size_; ++v)
                if (has_edge(u, v)) ++indeg[static_cast<size_t>(v)];
        std::vector<int> queue, order;
        for (int v = 0; v < size_; ++v)
            if (indeg[static_cast<size_t>(v)] == 0) queue.push_back(v);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            order.push_back(u);
            for (int v = 0; v < size_; ++v)
                if (has_edge(u, v) && --indeg[static_cast<size_t>(v)] == 0) queue.push_back(v);
        }
        if (static_cast<int>(order.size()) != size_)
            throw std::invalid_argument("OrderDag: graph is cyclic");
        return order;
    }

    // Strict reachability matrix (no reflexive entries).
    std::vector<std::vector<char>> closure() const {
        std::vector<int> order = topological_order();
        std::vector<std::vector<char>> reach(
            static_cast<size_t>(size_), std::vector<char>(static_cast<size_t>(size_), 0));
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const int u = *it;
            for (int v = 0; v < size_; ++v) {
                if (!has_edge(u, v)) continue;
                reach[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
                for (int w = 0; w < size_; ++w)
                    if (reach[static_cast<size_t>(v)][static_cast<size_t>(w)])
                        reach[static_cast<size_t>(u)][static_cast<size_t>(w)] = 1;
            }
        }
        return reach;
    }

    // DOT digraph with cells named "row,col"; edges sorted for stable output.
    std::string dot() const {
        std::ostringstream out;
        out << "digraph {\n";
        for (auto [u, v] : edges()) {
            auto [ui, uj] = cell(u);
            auto [vi, vj] = cell(v);
            out << "  \"" << ui << ',' << uj << "\" -> \"" << vi << ',' << vj << "\";\n";
        }
        out << "}\n";
        return out.str();
    }

private:
    int rows_, cols_, size_;
    std::vector<std::vector<char>> adj_;
};

// Path through the 2k cells of P in value order.
inline OrderDag build_GP(const Pattern& p) {
    if (p.cols() != 2) throw std::invalid_argument("build_GP: pattern must have 2 columns");
    const int k = p.rows();
    std::vector<int> pos(static_cast<size_t>(2 * k) + 1, -1);
    OrderDag g(k, 2);
    for (int j = 1; j <= 2; ++j)
        for (int i = 1; i <= k; ++i) pos[static_cast<size_t>(p.filling()(i, j))] = g.vertex(i, j);
    for (int v = 1; v < 2 * k; ++v)
        g.add_edge(pos[static_cast<size_t>(v)], pos[static_cast<size_t>(v + 1)]);
    return g;
}

// The value-order path of P laid over every adjacent column pair of k x n.
inline OrderDag build_GPn(const Pattern& p, int n) {
    if (n < 2) throw std::invalid_argument("build_GPn: need at least 2 columns");
    OrderDag gp = build_GP(p);
    const int k = p.rows();
    OrderDag g(k, n);
    for (int i = 1; i <= n - 1; ++i)
        for (auto [u, v] : gp.edges()) {
            auto [ur, uc] = gp.cell(u);
            auto [vr, vc] = gp.cell(v);
            g.add_edge(g.vertex(ur, i + uc - 1), g.vertex(vr, i + vc - 1));
        }
    return g;
}

// Drop every edge whose endpoints stay connected without it (the transitive
// reduction); reachability is unchanged.
inline OrderDag prune(const OrderDag& g) {
    auto reach = g.closure();
    OrderDag h = g;
    for (auto [u, v] : g.edges()) {
        bool redundant = false;
        for (int w = 0; w < g.size() && !redundant; ++w)
            if (w != v && g.has_edge(u, w) && reach[static_cast<size_t>(w)][static_cast<size_t>(v)])
                redundant = true;
        if (redundant) h.remove_edge(u, v);
    }
    return h;
}

struct CellPoset {
    int size = 0;
    std::vector<std::vector<char>> lt;  // lt[u][v]: u strictly below v

    bool less(int u, int v) const { return lt[static_cast<size_t>(u)][static_cast<size_t>(v)] != 0; }
};

inline CellPoset reachability_poset(const OrderDag& g) {
    return CellPoset{g.size(), g.closure()};
}

inline constexpr long long kDefaultStateBudget = 1LL << 24;

// Number of linear extensions by dynamic programming over order ideals
// (downsets), memoized per ideal.
inline Int linear_extension_count(const CellPoset& w,
                                  long long max_states = kDefaultStateBudget) {
    const int m = w.size;
    if (m == 0) return 1;
    if (m > 64)
        throw BudgetError("linear_extension_count: " + std::to_string(m) +
                          " elements exceed the 64-element downset representation");
    std::vector<uint64_t> pred(static_cast<size_t>(m), 0);
    for (int v = 0; v < m; ++v)
        for (int u = 0; u < m; ++u)
            if (w.less(u, v)) pred[static_cast<size_t>(v)] |= uint64_t{1} << u;
    const uint64_t all = (m == 64) ? ~uint64_t{0} : (uint64_t{1} << m) - 1;
    std::unordered_map<uint64_t, Int> memo;
    auto count = [&](auto&& self, uint64_t ideal) -> Int {
        if (ideal == all) return 1;
        if (auto it = memo.find(ideal); it != memo.end()) return it->second;
        if (static_cast<long long>(memo.size()) >= max_states)
            throw BudgetError("linear_extension_count: state budget of " +
                              std::to_string(max_states) + " ideals exceeded");
        Int total = 0;
        for (int v = 0; v < m; ++v) {
            const uint64_t bit = uint64_t{1} << v;
            if ((ideal & bit) == 0 && (pred[static_cast<size_t>(v)] & ~ideal) == 0)
                total += self(self, ideal | bit);
        }
        return memo.emplace(ideal, std::move(total)).first->second;
    };
    return count(count, 0);
}

// full count of a single 2-column pattern via the poset route.
inline Int full_count(const Pattern& p, int n,
                      long long max_states = kDefaultStateBudget) {
    if (p.cols() != 2) throw std::invalid_argument("full_count: pattern must have 2 columns");
    if (n < 1) throw std::invalid_argument("full_count: n must be positive");
    if (n == 1) return 1;
    return linear_extension_count(reachability_poset(prune(build_GPn(p, n))), max_states);
}

// Degenerate: between every pair of adjacent rows, one column climbs by
// exactly 1.  Defined for standard tableaux.
inline bool is_degenerate(const Pattern& p) {
    if (p.cols() != 2) throw std::invalid_argument("is_degenerate: pattern must have 2 columns");
    if (!p.standard())
        throw std::invalid_argument("is_degenerate: pattern must be standard");
    const Filling& f = p.filling();
    for (int i = 1; i < p.rows(); ++i)
        if (f(i, 1) + 1 != f(i + 1, 1) && f(i, 2) + 1 != f(i + 1, 2)) return false;
    return true;
}

// All degenerate standard tableaux of k rows; their number is the Motzkin
// number M_{k-1}.
inline std::vector<Pattern> degenerate_census(int k) {
    std::vector<Pattern> out;
    for (const Pattern& p : standard_tableaux_2cols(k))
        if (is_degenerate(p)) out.push_back(p);
    return out;
}

enum class ClosedFormKind { StHook, Catalan, CatalanShifted, TernaryCatalanShifted };

// Counting formulas for the recognizable full sequences.
//   StHook:               standard tableaux of shape n^k (hook-length form)
//   Catalan:              C_n
//   CatalanShifted:       C_{n-1}
//   TernaryCatalanShifted binom(3m, m)/(2m+1) at m = n-1
inline Int closed_form(ClosedFormKind kind, int n, int k = 0) {
    if (n < 1) throw std::invalid_argument("closed_form: n must be positive");
    switch (kind) {
        case ClosedFormKind::StHook: {
            if (k < 1) throw std::invalid_argument("closed_form: st_hook needs k");
            Int den = 1;
            for (int i = 0; i < k; ++i) den *= falling_factorial(i + n, n);
            return factorial(static_cast<long>(k) * n) / den;
        }
        case ClosedFormKind::Catalan:
            return catalan_number(n);
        case ClosedFormKind::CatalanShifted:
            return catalan_number(n - 1);
        case ClosedFormKind::TernaryCatalanShifted: {
            const long m = n - 1;
            return binomial(3 * m, m) / (2 * m + 1);
        }
    }
    throw std::invalid_argument("closed_form: unknown kind");
}

}  // namespace rectfill
