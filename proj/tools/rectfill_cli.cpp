// Command-line front end for the rectfill library.  Every number in JSON
// output is a decimal string so arbitrary-precision values survive any
// JSON parser; series coefficients are "num/den" fraction strings.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rectfill/rectfill.hpp"

using namespace rectfill;
using nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- patterns

// T<col1>_<col2>[_<col3>...] with single-digit cell values, e.g. T134_256.
std::optional<Pattern> try_alias(const std::string& name) {
    if (name == "P1_22") return Pattern::from_columns({{1, 2}, {3, 4}});
    if (name == "P2_22") return Pattern::from_columns({{1, 3}, {2, 4}});
    if (name.size() < 2 || name[0] != 'T') return std::nullopt;
    std::vector<std::vector<int>> columns(1);
    for (size_t i = 1; i < name.size(); ++i) {
        if (name[i] == '_') {
            columns.emplace_back();
        } else if (name[i] >= '1' && name[i] <= '9') {
            columns.back().push_back(name[i] - '0');
        } else {
            return std::nullopt;
        }
    }
    for (const auto& col : columns)
        if (col.empty()) return std::nullopt;
    return Pattern::from_columns(columns);
}

Pattern load_pattern(const std::string& spec) {
    if (auto p = try_alias(spec)) return *p;
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open pattern file: " + spec);
    return Pattern(parse_filling(in));
}

PatternSet load_set(const std::vector<std::string>& specs) {
    std::vector<Pattern> ps;
    ps.reserve(specs.size());
    for (const auto& s : specs) ps.push_back(load_pattern(s));
    return PatternSet(std::move(ps));
}

void require_k(const PatternSet& y, int k) {
    if (k != 0 && k != y.rows())
        throw std::invalid_argument("--k " + std::to_string(k) + " does not match the " +
                                    std::to_string(y.rows()) + "-row patterns");
}

std::string pattern_label(const Pattern& p) {
    if (p.rows() * p.cols() > 9) return "pattern[" + std::to_string(p.rows()) + "x" +
                                        std::to_string(p.cols()) + "]";
    std::string s = "T";
    for (int j = 1; j <= p.cols(); ++j) {
        if (j > 1) s += '_';
        for (int i = 1; i <= p.rows(); ++i) s += static_cast<char>('0' + p.filling()(i, j));
    }
    return s;
}

// ------------------------------------------------------------------- JSON

ordered_json int_strings(const std::vector<int>& vals) {
    ordered_json a = ordered_json::array();
    for (int v : vals) a.push_back(std::to_string(v));
    return a;
}

ordered_json dist_json(const DistPoly& d) {
    ordered_json a = ordered_json::array();
    for (const Int& c : d.coef) a.push_back(to_decimal(c));
    return a;
}

ordered_json column_json(const Filling& f, int j) {
    std::vector<int> col;
    col.reserve(static_cast<size_t>(f.rows()));
    for (int i = 1; i <= f.rows(); ++i) col.push_back(f(i, j));
    return int_strings(col);
}

// --------------------------------------------------------------- full data

std::vector<Int> full_seq(const PatternSet& y, int upto, long long budget) {
    std::vector<Int> f(static_cast<size_t>(upto) + 1);
    const bool poset_route = y.size() == 1 && y.cols() == 2;
    for (int n = 1; n <= upto; ++n)
        f[static_cast<size_t>(n)] = poset_route ? full_count(y.patterns().front(), n)
                                                : full_bruteforce(y, n, budget);
    return f;
}

// Singleton family for each two-column standard tableau with k rows, plus
// the whole set when it has more than one member.
std::vector<std::pair<std::string, PatternSet>> default_families(int k) {
    std::vector<std::pair<std::string, PatternSet>> out;
    auto tabs = standard_tableaux_2cols(k);
    for (const Pattern& p : tabs) out.emplace_back(pattern_label(p), PatternSet({p}));
    if (tabs.size() > 1) out.emplace_back("St2^" + std::to_string(k), PatternSet(tabs));
    return out;
}

// ------------------------------------------------------------- subcommands

int run_dist(const PatternSet& y, int n, const std::string& stat, long long budget) {
    DistPoly d = stat == "mch"    ? distribution(y, n, Stat::Mch, budget)
                 : stat == "nlap" ? distribution(y, n, Stat::Nlap, budget)
                                  : even_given_odd_distribution(y, n, budget);
    ordered_json out;
    out["stat"] = stat;
    out["k"] = std::to_string(y.rows());
    out["n"] = std::to_string(n);
    out["total"] = to_decimal(d.total());
    out["coefficients"] = dist_json(d);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_gf(const PatternSet& y, const std::string& which, int order, long long budget) {
    const int k = y.rows();
    std::vector<Int> full = full_seq(y, order, budget);
    TXSeries s = [&] {
        if (which == "D") return build_D(k, full, order);
        if (which == "A") return build_A(k, full, order);
        if (which == "N") return build_N(k, build_A(k, full, order), order).nlap;
        if (which == "even") return build_even(k, full, order);
        return build_odd(k, full, order);
    }();
    std::cout << ordered_json(series_to_strings(s)).dump() << "\n";
    return 0;
}

int run_full(const Pattern& p, int n, const std::string& method, const std::string& dot,
             long long budget) {
    if (!dot.empty()) {
        OrderDag g = build_GPn(p, n);
        std::cout << (dot == "pruned" ? prune(g).dot() : g.dot());
        return 0;
    }
    Int value;
    if (method == "poset") {
        if (p.cols() != 2)
            throw std::invalid_argument("poset method needs a two-column pattern");
        value = full_count(p, n);
    } else if (method == "brute") {
        value = full_bruteforce(PatternSet({p}), n, budget);
    } else {
        const Pattern p2 = *try_alias("P2_22");
        const Pattern q = *try_alias("T134_256");
        if (is_degenerate(p))
            value = 1;
        else if (p == p2)
            value = closed_form(ClosedFormKind::CatalanShifted, n);
        else if (p == q || p == generalized_complement(q))
            value = closed_form(ClosedFormKind::TernaryCatalanShifted, n);
        else
            throw std::invalid_argument("no closed form on record for " + pattern_label(p));
    }
    std::cout << to_decimal(value) << "\n";
    return 0;
}

int run_alt(const PatternSet& y, int nmax, long long budget) {
    for (int n = 1; n <= nmax; ++n)
        std::cout << n << " " << to_decimal(alternating_count(y, n, budget)) << "\n";
    return 0;
}

int run_classify(int k) {
    ordered_json out;
    out["k"] = std::to_string(k);
    auto tabs = standard_tableaux_2cols(k);
    out["count"] = to_decimal(Int(tabs.size()));
    Int deg = 0;
    ordered_json rows = ordered_json::array();
    for (const Pattern& p : tabs) {
        bool d = is_degenerate(p);
        if (d) ++deg;
        ordered_json row;
        row["name"] = pattern_label(p);
        row["col1"] = column_json(p.filling(), 1);
        row["col2"] = column_json(p.filling(), 2);
        row["word"] = gamma_bij(p).str();
        row["degenerate"] = d;
        rows.push_back(std::move(row));
    }
    out["degenerate_count"] = to_decimal(deg);
    out["motzkin"] = to_decimal(motzkin_number(k - 1));
    out["tableaux"] = std::move(rows);
    std::cout << out.dump(2) << "\n";
    return 0;
}

// For inverse directions the input may be inline text (contains whitespace)
// or a file path.
std::string slurp_input(const std::string& input) {
    if (input.find_first_of(" \t\n") != std::string::npos) return input;
    std::ifstream in(input);
    if (!in) throw std::invalid_argument("cannot open input file: " + input);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RowFilling parse_row_filling(const std::string& text) {
    std::istringstream in(text);
    int rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows != 2 || cols < 1)
        throw std::invalid_argument("row filling input needs a \"2 n\" header");
    std::vector<int> top(static_cast<size_t>(cols)), bottom(static_cast<size_t>(cols));
    for (auto* row : {&top, &bottom})  // printed top row first
        for (int& v : *row)
            if (!(in >> v)) throw std::invalid_argument("row filling input: too few values");
    return RowFilling(std::move(bottom), std::move(top));
}

int run_bijection(const std::string& which, const std::string& dir, const std::string& input) {
    ordered_json out;
    out["which"] = which;
    out["dir"] = dir;
    if (which == "theta") {
        if (dir == "fwd") {
            RowFilling f = theta(EPath::from_string(input));
            out["path"] = input;
            out["bottom"] = int_strings(f.bottom());
            out["top"] = int_strings(f.top());
            out["column_increasing"] = f.column_increasing();
        } else {
            RowFilling f = parse_row_filling(slurp_input(input));
            out["bottom"] = int_strings(f.bottom());
            out["top"] = int_strings(f.top());
            out["path"] = theta_inv(f).str();
        }
    } else {
        if (dir == "fwd") {
            Pattern p = load_pattern(input);
            out["col1"] = column_json(p.filling(), 1);
            out["col2"] = column_json(p.filling(), 2);
            out["path"] = gamma_bij(p).str();
            out["degenerate"] = is_degenerate(p);
        } else {
            Pattern p = gamma_bij_inv(Motzkin2Path::from_string(input));
            out["path"] = input;
            out["col1"] = column_json(p.filling(), 1);
            out["col2"] = column_json(p.filling(), 2);
            out["degenerate"] = is_degenerate(p);
        }
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

// ----------------------------------------------------------------- verify

struct VerifyCtx {
    int k;
    int nmax;
    long long budget;
};

bool fail(const std::string& suite, const std::string& detail) {
    std::cout << "FAIL " << suite << ": " << detail << "\n";
    return false;
}

bool verify_thmD(const VerifyCtx& c) {
    for (const auto& [label, y] : default_families(c.k)) {
        auto full = full_seq(y, c.nmax, c.budget);
        TXSeries d = build_D(c.k, full, c.nmax);
        for (int n = 1; n <= c.nmax; ++n) {
            XPoly want = XPoly::from_counts(distribution(y, n, Stat::Mch, c.budget).coef);
            XPoly got = scaled_coeff(d, n, c.k);
            if (got != want)
                return fail("thmD", "upsilon=" + label + " n=" + std::to_string(n) +
                                        " series=" + got.to_string() +
                                        " bruteforce=" + want.to_string());
        }
    }
    return true;
}

bool verify_thmN(const VerifyCtx& c) {
    for (const auto& [label, y] : default_families(c.k)) {
        auto full = full_seq(y, c.nmax, c.budget);
        NlapSeries ns = build_N(c.k, build_A(c.k, full, c.nmax), c.nmax);
        for (int n = 1; n <= c.nmax; ++n) {
            XPoly want = XPoly::from_counts(distribution(y, n, Stat::Nlap, c.budget).coef);
            XPoly got = scaled_coeff(ns.nlap, n, c.k);
            if (got != want)
                return fail("thmN", "upsilon=" + label + " n=" + std::to_string(n) +
                                        " series=" + got.to_string() +
                                        " bruteforce=" + want.to_string());
            XPoly gotE = scaled_coeff(ns.end_match, n, c.k);
            XPoly wantE(Rat(end_match_count(y, n, c.budget)));
            if (gotE != wantE)
                return fail("thmN", "end-match upsilon=" + label + " n=" + std::to_string(n) +
                                        " series=" + gotE.to_string() +
                                        " bruteforce=" + wantE.to_string());
        }
    }
    return true;
}

bool verify_parity_series(const VerifyCtx& c, bool odd) {
    const char* suite = odd ? "thmO" : "thmE";
    for (const auto& [label, y] : default_families(c.k)) {
        auto full = full_seq(y, c.nmax, c.budget);
        TXSeries s = odd ? build_odd(c.k, full, c.nmax) : build_even(c.k, full, c.nmax);
        for (int len = 1; len <= c.nmax; ++len) {
            if (len % 2 == (odd ? 0 : 1)) {
                if (!s[len].is_zero())
                    return fail(suite, "upsilon=" + label + " stray coefficient at t^" +
                                           std::to_string(len));
                continue;
            }
            XPoly want = XPoly::from_counts(even_given_odd_distribution(y, len, c.budget).coef);
            XPoly got = scaled_coeff(s, len, c.k);
            if (got != want)
                return fail(suite, "upsilon=" + label + " length=" + std::to_string(len) +
                                       " series=" + got.to_string() +
                                       " bruteforce=" + want.to_string());
            Rat alt0 = got.eval(Rat(0));
            if (alt0 != Rat(alternating_count(y, len, c.budget)))
                return fail(suite, "upsilon=" + label + " length=" + std::to_string(len) +
                                       " alternating mismatch at x=0");
        }
    }
    return true;
}

bool verify_htoe(const VerifyCtx& c) {
    std::mt19937 gen(20250819);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9), deg(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        HomImage img;
        img.e.assign(9, XPoly());
        img.e[0] = XPoly(1);
        for (int n = 1; n <= 8; ++n) {
            std::vector<Rat> coef(static_cast<size_t>(deg(gen)) + 1);
            for (Rat& co : coef) co = Rat(num(gen), den(gen));
            img.e[static_cast<size_t>(n)] = XPoly(coef);
        }
        auto a = h_images(img, 8);
        auto b = h_images_brick(img, 8);
        for (int n = 0; n <= 8; ++n)
            if (a[static_cast<size_t>(n)] != b[static_cast<size_t>(n)])
                return fail("htoe", "random trial " + std::to_string(trial) + " splits at n=" +
                                        std::to_string(n));
    }
    for (const auto& [label, y] : default_families(c.k)) {
        auto full = full_seq(y, c.nmax, c.budget);
        auto h = h_images(gamma_e(full, c.k, c.nmax), c.nmax);
        for (int n = 1; n <= c.nmax; ++n) {
            XPoly want = XPoly::from_counts(distribution(y, n, Stat::Mch, c.budget).coef);
            XPoly got = h[static_cast<size_t>(n)] * Rat(factorial(static_cast<long>(c.k) * n));
            if (got != want)
                return fail("htoe", "upsilon=" + label + " n=" + std::to_string(n) +
                                        " h-image=" + got.to_string() +
                                        " bruteforce=" + want.to_string());
        }
    }
    return true;
}

bool verify_lemma7(const VerifyCtx& c) {
    for (const auto& [label, y] : default_families(c.k)) {
        auto full = full_seq(y, c.nmax, c.budget);
        TXSeries a = build_A(c.k, full, c.nmax);
        for (int n = 0; n < c.nmax; ++n) {
            Rat an = scaled_coeff(a, n, c.k).at(0);
            Rat an1 = scaled_coeff(a, n + 1, c.k).at(0);
            Rat en1(end_match_count(y, n + 1, c.budget));
            if (Rat(binomial(static_cast<long>(c.k) * (n + 1), c.k)) * an != an1 + en1)
                return fail("lemma7", "upsilon=" + label + " n=" + std::to_string(n));
        }
    }
    return true;
}

bool verify_hook(const VerifyCtx& c) {
    for (int n = 1; n <= c.nmax; ++n) {
        Int brute = 0;
        for (const Filling& f : all_fillings(c.k, n, c.budget))
            if (f.rows_increase()) ++brute;
        Int hook = closed_form(ClosedFormKind::StHook, n, c.k);
        if (brute != hook)
            return fail("hook", "n=" + std::to_string(n) + " bruteforce=" + to_decimal(brute) +
                                    " formula=" + to_decimal(hook));
    }
    return true;
}

int run_verify(const std::string& suite, const VerifyCtx& c) {
    bool ok = suite == "thmD"     ? verify_thmD(c)
              : suite == "thmN"   ? verify_thmN(c)
              : suite == "thmE"   ? verify_parity_series(c, false)
              : suite == "thmO"   ? verify_parity_series(c, true)
              : suite == "htoe"   ? verify_htoe(c)
              : suite == "lemma7" ? verify_lemma7(c)
                                  : verify_hook(c);
    if (ok)
        std::cout << "PASS " << suite << " k=" << c.k << " nmax=" << c.nmax << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pattern statistics for column-increasing rectangle fillings"};
    app.require_subcommand(1);
    app.fallthrough();

    long long budget_flag = 0;
    auto* budget_opt =
        app.add_option("--budget", budget_flag, "enumeration step budget (overrides env)")
            ->check(CLI::PositiveNumber);

    auto* c_count = app.add_subcommand("count", "number of fillings of a k x n rectangle");
    int count_k = 0, count_n = 0;
    c_count->add_option("--k", count_k, "rows")->required()->check(CLI::PositiveNumber);
    c_count->add_option("--n", count_n, "columns")->required()->check(CLI::PositiveNumber);

    auto* c_dist = app.add_subcommand("dist", "match statistic distribution");
    std::vector<std::string> dist_patterns;
    int dist_k = 0, dist_n = 0;
    std::string dist_stat;
    c_dist->add_option("--pattern", dist_patterns, "pattern alias or file")->required();
    c_dist->add_option("--k", dist_k, "rows (checked against patterns)");
    c_dist->add_option("--n", dist_n, "columns")->required()->check(CLI::PositiveNumber);
    c_dist->add_option("--stat", dist_stat, "statistic")
        ->required()
        ->check(CLI::IsMember({"mch", "nlap", "even2"}));

    auto* c_gf = app.add_subcommand("gf", "generating function coefficients");
    std::vector<std::string> gf_patterns;
    std::string gf_which;
    int gf_order = 0;
    c_gf->add_option("--which", gf_which, "series")
        ->required()
        ->check(CLI::IsMember({"D", "A", "N", "even", "odd"}));
    c_gf->add_option("--pattern", gf_patterns, "pattern alias or file")->required();
    c_gf->add_option("--order", gf_order, "truncation order")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* c_full = app.add_subcommand("full", "count fillings matching at every position");
    std::string full_pattern, full_method = "poset", full_dot;
    int full_n = 0;
    c_full->add_option("--pattern", full_pattern, "pattern alias or file")->required();
    c_full->add_option("--n", full_n, "columns")->required()->check(CLI::PositiveNumber);
    c_full->add_option("--method", full_method, "counting route")
        ->check(CLI::IsMember({"poset", "brute", "closed"}));
    c_full->add_option("--dot", full_dot, "emit the match graph instead of counting")
        ->check(CLI::IsMember({"raw", "pruned"}));

    auto* c_alt = app.add_subcommand("alt", "alternating filling counts");
    std::vector<std::string> alt_patterns;
    int alt_k = 0, alt_nmax = 0;
    c_alt->add_option("--pattern", alt_patterns, "pattern alias or file")->required();
    c_alt->add_option("--k", alt_k, "rows (checked against patterns)");
    c_alt->add_option("--nmax", alt_nmax, "largest length")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* c_classify = app.add_subcommand("classify", "degeneracy census of the tableaux");
    int classify_k = 0;
    c_classify->add_option("--k", classify_k, "tableau rows")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* c_bij = app.add_subcommand("bijection", "apply theta or gamma");
    std::string bij_which, bij_dir, bij_input;
    c_bij->add_option("--which", bij_which, "bijection")
        ->required()
        ->check(CLI::IsMember({"theta", "gamma"}));
    c_bij->add_option("--dir", bij_dir, "direction")
        ->required()
        ->check(CLI::IsMember({"fwd", "inv"}));
    c_bij->add_option("--input", bij_input, "path literal, pattern, or file")->required();

    auto* c_verify = app.add_subcommand("verify", "check a theorem suite, print PASS/FAIL");
    std::string verify_suite;
    int verify_k = 0, verify_nmax = 0;
    c_verify->add_option("--suite", verify_suite, "suite")
        ->required()
        ->check(CLI::IsMember({"thmD", "thmN", "thmE", "thmO", "htoe", "lemma7", "hook"}));
    c_verify->add_option("--k", verify_k, "rows")->required()->check(CLI::PositiveNumber);
    c_verify->add_option("--nmax", verify_nmax, "largest length")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        const long long budget =
            budget_opt->count() > 0 ? budget_flag : enumeration_budget_from_env();
        if (*c_count) {
            std::cout << to_decimal(count_fillings(count_k, count_n)) << "\n";
            return 0;
        }
        if (*c_dist) {
            PatternSet y = load_set(dist_patterns);
            require_k(y, dist_k);
            return run_dist(y, dist_n, dist_stat, budget);
        }
        if (*c_gf) return run_gf(load_set(gf_patterns), gf_which, gf_order, budget);
        if (*c_full) return run_full(load_pattern(full_pattern), full_n, full_method,
                                     full_dot, budget);
        if (*c_alt) {
            PatternSet y = load_set(alt_patterns);
            require_k(y, alt_k);
            return run_alt(y, alt_nmax, budget);
        }
        if (*c_classify) return run_classify(classify_k);
        if (*c_bij) return run_bijection(bij_which, bij_dir, bij_input);
        return run_verify(verify_suite, {verify_k, verify_nmax, budget});
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
