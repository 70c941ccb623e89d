// Command-line front end: one subcommand per module, one table per run,
// CSV or JSON on stdout (or --output).  Exit codes: 0 success, 2 invalid
// usage or arguments, 3 cap/guard violations.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "xnseq/ap.hpp"
#include "xnseq/expair.hpp"
#include "xnseq/fit.hpp"
#include "xnseq/floorseq.hpp"
#include "xnseq/lattice.hpp"
#include "xnseq/sieve.hpp"
#include "xnseq/table.hpp"
#include "xnseq/titchmarsh.hpp"
#include "xnseq/vaaler.hpp"

namespace {

using namespace xnseq;

struct OutputOptions {
    std::string format = "csv";
    std::string path;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", out.path, "Write the table to this file instead of stdout");
}

struct GridOptions {
    std::optional<u64> x;
    std::vector<u64> grid_spec;  // start, stop, points

    std::vector<u64> values() const {
        if (x) return {*x};
        return geometric_grid(grid_spec[0], grid_spec[1], static_cast<std::size_t>(grid_spec[2]));
    }
};

void add_grid_options(CLI::App* cmd, GridOptions& grid, bool required = true) {
    auto* xopt = cmd->add_option("--x", grid.x, "Single x value");
    auto* gopt = cmd->add_option("--x-grid", grid.grid_spec,
                                 "Geometric grid start,stop,points (integers, deduplicated)")
                     ->delimiter(',')
                     ->expected(3);
    xopt->excludes(gopt);
    gopt->excludes(xopt);
    if (required) {
        cmd->callback([&grid, cmd]() {
            if (!grid.x && grid.grid_spec.empty())
                throw CLI::ValidationError(cmd->get_name(), "exactly one of --x / --x-grid is required");
        });
    }
}

int emit(const Table& table, const OutputOptions& out) {
    std::string text = emit_table(table, table_format_from_name(out.format));
    if (out.path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return 0;
    }
    std::ofstream file(out.path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file " << out.path << "\n";
        return 2;
    }
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    return file ? 0 : 2;
}

std::string sieve_cache_dir() {
    const char* dir = std::getenv("XN_SIEVE_CACHE_DIR");
    return dir ? dir : "";
}

std::string rational_str(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------- sx --

int run_sx(const GridOptions& grid, bool members, const OutputOptions& out) {
    Table table;
    if (members) {
        table.columns = {"x", "member"};
        for (u64 x : grid.values())
            for (u64 m : sx_members(x)) table.add_row({x, m});
    } else {
        table.columns = {"x", "cardinality", "two_sqrt_x", "gap"};
        for (u64 x : grid.values()) {
            u64 c = sx_cardinality(x);
            double two_sqrt = 2.0 * std::sqrt(static_cast<double>(x));
            table.add_row({x, c, two_sqrt, static_cast<double>(c) - two_sqrt});
        }
    }
    return emit(table, out);
}

// ---------------------------------------------------------------- ap --

int run_ap(const GridOptions& grid, u64 q, i64 a, bool fit, bool counts_only,
           const OutputOptions& out) {
    Table table;
    if (fit) {
        FitResult r = error_exponent_fit(q, a, grid.values());
        table.columns = {"q", "a", "points_used", "slope", "degenerate"};
        table.add_row({q, a, static_cast<u64>(r.points_used), r.slope,
                       std::string(r.degenerate ? "true" : "false")});
        return emit(table, out);
    }
    if (counts_only) {
        table.columns = {"x", "q", "a", "S", "S_star"};
        for (u64 x : grid.values()) {
            APQuery query(x, q, a);
            table.add_row({x, q, static_cast<u64>(query.a), count_S_fast(query),
                           count_S_star_fast(query)});
        }
        return emit(table, out);
    }
    table.columns = {"x",  "q",  "a",       "S",     "S_star",     "main_term_S", "main_term_S_star",
                     "R1", "R2", "R1_star", "gap_S", "gap_S_star", "within_bound"};
    for (u64 x : grid.values()) {
        APQuery query(x, q, a);
        DecompositionReport s = decomposition_gap_S(query);
        DecompositionReport ss = decomposition_gap_S_star(query);
        bool ok = s.within_bound && ss.within_bound;
        table.add_row({x, q, static_cast<u64>(query.a), s.exact, ss.exact, s.main_term,
                       ss.main_term, s.remainders[0].second, s.remainders[1].second,
                       ss.remainders[0].second, s.gap, ss.gap, std::string(ok ? "true" : "false")});
    }
    return emit(table, out);
}

// ------------------------------------------------------------- pairs --

int run_pairs(const std::string& word, i64 depth, bool frontier, const OutputOptions& out) {
    Table table;
    table.columns = {"word", "k", "l", "objective"};
    if (!word.empty()) {
        ExponentPair p = apply_word(word, trivial_pair());
        table.add_row({p.word, rational_str(p.k), rational_str(p.l), rational_str(objective(p))});
        return emit(table, out);
    }
    SearchResult result = search_min_objective(static_cast<u64>(depth));
    if (frontier) {
        for (const ExponentPair& p : result.frontier)
            table.add_row({p.word, rational_str(p.k), rational_str(p.l), rational_str(objective(p))});
    } else {
        table.add_row({result.best.word, rational_str(result.best.k), rational_str(result.best.l),
                       rational_str(result.objective)});
    }
    return emit(table, out);
}

// ------------------------------------------------------------ vaaler --

int run_vaaler(double H, u64 grid_points, bool coeffs, const OutputOptions& out) {
    VaalerPolynomial poly = vaaler_build(H);
    Table table;
    if (coeffs) {
        table.columns = {"h", "c"};
        for (u64 h = 1; h <= poly.coefficients.size(); ++h)
            table.add_row({h, poly.coefficient(h)});
        return emit(table, out);
    }
    double max_err = 0.0, max_violation = -1.0, max_coeff = 0.0;
    for (double c : poly.coefficients) max_coeff = std::max(max_coeff, std::abs(c));
    for (u64 i = 0; i < grid_points; ++i) {
        double t = static_cast<double>(i) / static_cast<double>(grid_points);
        double err = std::abs(sawtooth(t) - vaaler_eval(poly, t));
        double gap = err - fejer_majorant(H, t);
        max_err = std::max(max_err, err);
        max_violation = std::max(max_violation, gap);
    }
    table.columns = {"H", "h_count", "max_abs_coeff", "max_error", "max_majorant_violation"};
    table.add_row({H, static_cast<u64>(poly.coefficients.size()), max_coeff, max_err, max_violation});
    return emit(table, out);
}

int run_vaaler_et(u64 x, u64 q, i64 a, u64 H, const OutputOptions& out) {
    APQuery query(x, q, a);
    std::vector<double> points;
    u64 n_max = isqrt_ratio(x, q);
    points.reserve(static_cast<std::size_t>(n_max));
    for (u64 n = 1; n <= n_max; ++n)
        points.push_back(static_cast<double>(x) / static_cast<double>(q * n + query.a));
    auto [lhs, rhs] = erdos_turan_ratio(points, H);
    Table table;
    table.columns = {"x", "q", "a", "H", "points", "lhs", "rhs", "ratio"};
    table.add_row({x, q, static_cast<u64>(query.a), H, n_max, lhs, rhs, rhs != 0.0 ? lhs / rhs : 0.0});
    return emit(table, out);
}

// --------------------------------------------------------- primitive --

int run_primitive(const GridOptions& grid, bool multiplicity, bool fit, const OutputOptions& out) {
    Table table;
    if (fit) {
        FitResult r = primitive_error_fit(grid.values());
        table.columns = {"points_used", "slope", "degenerate"};
        table.add_row({static_cast<u64>(r.points_used), r.slope,
                       std::string(r.degenerate ? "true" : "false")});
        return emit(table, out);
    }
    if (multiplicity) {
        table.columns = {"x", "pairs_multiplicity", "frak_S_x2", "error"};
        double fs = frak_S(1e-8);
        for (u64 x : grid.values()) {
            u64 exact = coprime_pairs_multiplicity_moebius(x);
            double main = fs * static_cast<double>(x) * static_cast<double>(x);
            table.add_row({x, exact, main, static_cast<double>(exact) - main});
        }
        return emit(table, out);
    }
    table.columns = {"x", "coprime_pairs", "main_term", "error"};
    for (u64 x : grid.values()) {
        CoprimeCountReport rep = coprime_count_report(x);
        table.add_row({x, rep.exact, rep.main_term, rep.error});
    }
    return emit(table, out);
}

int run_frak_s(double tol, const OutputOptions& out) {
    Table table;
    table.columns = {"tol", "frak_S"};
    table.add_row({tol, frak_S(tol)});
    return emit(table, out);
}

// -------------------------------------------------------- titchmarsh --

int run_titchmarsh(const GridOptions& grid, const std::string& kind_name, const std::string& report,
                   u64 K, u64 limit_opt, u64 u_param, double c_param, const OutputOptions& out) {
    std::vector<u64> xs = grid.values();
    u64 limit = limit_opt;
    if (limit == 0) {
        for (u64 x : xs) limit = std::max(limit, x);
        // The lambda main term sums a(n)/(n(n+1)) out to n ~ 1/tol, which
        // needs table entries past x itself.
        if (report == "sums") limit = std::max<u64>(limit, 1'000'000);
    }
    SieveTables tables = build_sieve_cached(limit, sieve_cache_dir());
    ArithmeticFunctionSpec spec = make_spec(arithmetic_kind_from_name(kind_name));

    Table table;
    if (report == "sums") {
        table.columns = {"x", "kind", "sum_lambda_a", "main_term_lambda", "sum_prime_a"};
        for (u64 x : xs) {
            double sl = sum_lambda_a(tables, x, spec);
            double sp = sum_prime_a(tables, x, spec);
            Cell main{std::string("")};
            if (spec.kind != ArithmeticKind::totient_phi)
                main = main_term_lambda(tables, spec, x, 1e-6).first;
            table.add_row({x, kind_name, sl, main, sp});
        }
    } else if (report == "expansion") {
        table.columns = {"x", "kind", "K", "exact", "expansion", "ratio"};
        for (u64 k = 0; k <= K; ++k) table.columns.push_back("c" + std::to_string(k));
        for (u64 x : xs) {
            TitchmarshReport rep = expansion_prime_a(tables, spec, x, K);
            std::vector<Cell> row{x, kind_name, K, rep.exact, rep.main_term, rep.ratio};
            for (const auto& [name, value] : rep.secondary)
                if (name[0] == 'c') row.push_back(value);
            table.add_row(std::move(row));
        }
    } else if (report == "phi_lambda") {
        table.columns = {"x", "exact", "main_term", "ratio"};
        for (u64 x : xs) {
            TitchmarshReport rep = phi_lambda_report(tables, x);
            table.add_row({x, rep.exact, rep.main_term, rep.ratio});
        }
    } else if (report == "phi_prime") {
        table.columns = {"x",     "exact",         "main_term",
                         "ratio", "bracket_lower", "bracket_upper"};
        for (u64 x : xs) {
            TitchmarshReport rep = phi_prime_report(tables, x);
            table.add_row({x, rep.exact, rep.main_term, rep.ratio, rep.secondary[0].second,
                           rep.secondary[1].second});
        }
    } else if (report == "e_residual") {
        table.columns = {"u", "x", "c", "phi_sum", "quadratic_term", "E", "residual", "bound"};
        for (u64 x : xs) {
            u64 u = u_param ? u_param : x;
            double phi_sum = static_cast<double>(phi_summatory(tables, u));
            double quad = 3.0 * static_cast<double>(u) * static_cast<double>(u) /
                          (std::numbers::pi * std::numbers::pi);
            double e = phi_remainder_E(tables, u, x, c_param);
            double residual = phi_sum - quad - e;
            double bound = kPhiResidualConstant * static_cast<double>(u) *
                           std::exp(-std::sqrt(std::log(static_cast<double>(x))));
            table.add_row({u, x, c_param, phi_sum, quad, e, residual, bound});
        }
    } else {
        throw std::invalid_argument("unknown titchmarsh report: " + report);
    }
    return emit(table, out);
}

// ------------------------------------------------------------- probe --

int run_probe(const std::string& v_name, u64 P, u64 P_hi, u64 Q, double eta, u64 limit_opt,
              const OutputOptions& out) {
    KvwKind kind;
    if (v_name == "mu") kind = KvwKind::mu;
    else if (v_name == "lambda") kind = KvwKind::lambda;
    else if (v_name == "prime") kind = KvwKind::prime_indicator;
    else throw std::invalid_argument("unknown probe function: " + v_name);
    if (P_hi == 0) P_hi = 2 * P;
    u64 limit = limit_opt ? limit_opt : P_hi;
    SieveTables tables = build_sieve_cached(limit, sieve_cache_dir());
    auto [value, reference] = kvw_probe(tables, kind, P, P_hi, Q, eta);
    Table table;
    table.columns = {"v", "P", "P_hi", "Q", "eta", "value", "reference"};
    table.add_row({v_name, P, P_hi, Q, eta, value, reference});
    return emit(table, out);
}

int run_phase(u64 x, u64 q, double delta, double eta, u64 N, u64 N_hi, const std::string& word,
              const OutputOptions& out) {
    PhaseSumQuery query(x, q, delta, eta, N, N_hi ? N_hi : 2 * N);
    Table table;
    if (!word.empty()) {
        ExponentPair pair = apply_word(word, trivial_pair());
        PhaseSumReport rep = phase_sum_report(query, pair);
        table.columns = {"x", "q", "delta", "eta", "N", "N_hi", "value", "pair", "bound"};
        table.add_row({x, q, delta, eta, query.N, query.N_hi, rep.value,
                       rational_str(pair.k) + ";" + rational_str(pair.l), rep.pair_bound});
    } else {
        table.columns = {"x", "q", "delta", "eta", "N", "N_hi", "value"};
        table.add_row({x, q, delta, eta, query.N, query.N_hi, phase_sum(query)});
    }
    return emit(table, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Floor-quotient sequence toolkit: S(x) statistics, progression counts,\n"
                 "exponent pairs, sawtooth approximations and Titchmarsh-type sums."};
    app.require_subcommand(1);

    OutputOptions out;

    // sx
    GridOptions sx_grid;
    bool sx_members_flag = false;
    CLI::App* sx = app.add_subcommand("sx", "Cardinality and members of S(x)");
    add_grid_options(sx, sx_grid);
    sx->add_flag("--members", sx_members_flag, "Emit one row per member of S(x)");
    add_output_options(sx, out);

    // ap
    GridOptions ap_grid;
    u64 ap_q = 1;
    i64 ap_a = 1;
    bool ap_fit = false;
    bool ap_counts_only = false;
    CLI::App* ap = app.add_subcommand("ap", "S(x,q,a), S*(x,q,a) and decompositions");
    add_grid_options(ap, ap_grid);
    ap->add_option("--q", ap_q, "Modulus q >= 1")->required();
    ap->add_option("--a", ap_a, "Residue a (any integer; normalized mod q)");
    ap->add_flag("--fit", ap_fit, "Fit the S* error exponent over the grid");
    ap->add_flag("--counts-only", ap_counts_only,
                 "Emit only the O(sqrt x) counts, no decomposition columns");
    add_output_options(ap, out);

    // pairs
    std::string pairs_word;
    i64 pairs_depth = -1;
    bool pairs_frontier = false;
    CLI::App* pairs = app.add_subcommand("pairs", "Exponent-pair calculus");
    auto* wopt = pairs->add_option("--word", pairs_word, "Apply this A/B word to (0,1)");
    auto* dopt = pairs->add_option("--depth", pairs_depth, "Search words up to this length")
                     ->check(CLI::Range(i64{0}, i64{40}));
    pairs->add_flag("--frontier", pairs_frontier, "List every explored pair (with --depth)");
    wopt->excludes(dopt);
    dopt->excludes(wopt);
    pairs->callback([&]() {
        if (pairs_word.empty() && pairs_depth < 0)
            throw CLI::ValidationError("pairs", "one of --word / --depth is required");
    });
    add_output_options(pairs, out);

    // vaaler
    double va_H = 16.0;
    u64 va_grid_points = 10000;
    bool va_coeffs = false, va_et = false;
    u64 va_x = 0, va_q = 1, va_et_H = 100;
    i64 va_a = 1;
    CLI::App* va = app.add_subcommand("vaaler", "Sawtooth Fourier approximation diagnostics");
    va->add_option("--H", va_H, "Polynomial size parameter (>= 2)");
    va->add_option("--grid-points", va_grid_points, "Evaluation grid size");
    va->add_flag("--coeffs", va_coeffs, "Emit the coefficient table");
    va->add_flag("--et", va_et, "Erdos-Turan diagnostic on the R1 phase points");
    va->add_option("--x", va_x, "x for --et");
    va->add_option("--q", va_q, "q for --et");
    va->add_option("--a", va_a, "a for --et");
    va->add_option("--et-H", va_et_H, "Harmonic cutoff for --et");
    add_output_options(va, out);

    // primitive
    GridOptions pr_grid;
    bool pr_mult = false, pr_fit = false, pr_frak = false;
    double pr_tol = 1e-8;
    CLI::App* pr = app.add_subcommand("primitive", "Coprime pairs with S(x) coordinates");
    add_grid_options(pr, pr_grid, false);
    pr->add_flag("--multiplicity", pr_mult, "Count pairs ([x/m],[x/n]) with multiplicity");
    pr->add_flag("--fit", pr_fit, "Fit the error exponent over the grid");
    pr->add_flag("--frak-s", pr_frak, "Print the constant frak_S only");
    pr->add_option("--tol", pr_tol, "Tolerance for --frak-s");
    pr->callback([&]() {
        if (!pr_frak && !pr_grid.x && pr_grid.grid_spec.empty())
            throw CLI::ValidationError("primitive", "exactly one of --x / --x-grid is required");
    });
    add_output_options(pr, out);

    // titchmarsh
    GridOptions ti_grid;
    std::string ti_kind = "constant_one", ti_report = "sums";
    u64 ti_K = 2, ti_limit = 0, ti_u = 0;
    double ti_c = 1.0;
    CLI::App* ti = app.add_subcommand("titchmarsh", "Sums of a([x/n]) against Lambda and primes");
    add_grid_options(ti, ti_grid);
    ti->add_option("--kind", ti_kind, "Arithmetic function a(n)")
        ->check(CLI::IsMember({"constant_one", "divisor_tau", "moebius_abs", "totient_phi"}));
    ti->add_option("--report", ti_report, "Report type")
        ->check(CLI::IsMember({"sums", "expansion", "phi_lambda", "phi_prime", "e_residual"}));
    ti->add_option("--K", ti_K, "Expansion order (<= 6)");
    ti->add_option("--limit", ti_limit, "Sieve limit (default: max x)");
    ti->add_option("--u", ti_u, "u for e_residual (default: x)");
    ti->add_option("--c", ti_c, "c parameter for e_residual");
    add_output_options(ti, out);

    // probe
    std::string pb_v = "mu";
    u64 pb_P = 0, pb_Phi = 0, pb_Q = 0, pb_N = 0, pb_Nhi = 0, pb_x = 0, pb_q = 1;
    double pb_eta = 0.0, pb_delta = 0.0;
    u64 pb_limit = 0;
    bool pb_phase = false;
    std::string pb_word;
    CLI::App* pb = app.add_subcommand("probe", "Exponential-sum probes (KVW, phase sums)");
    pb->add_option("--v", pb_v, "Weight: mu, lambda or prime")
        ->check(CLI::IsMember({"mu", "lambda", "prime"}));
    pb->add_option("--P", pb_P, "Range start (sum over P < n <= P-hi)");
    pb->add_option("--P-hi", pb_Phi, "Range end (default 2P)");
    pb->add_option("--Q", pb_Q, "Numerator Q of the phase Q/n");
    pb->add_option("--eta", pb_eta, "Phase shift eta");
    pb->add_option("--limit", pb_limit, "Sieve limit (default: P-hi)");
    pb->add_flag("--phase", pb_phase, "Phase sum over psi(x/(qn+delta) - eta) instead");
    pb->add_option("--x", pb_x, "x for --phase");
    pb->add_option("--q", pb_q, "q for --phase");
    pb->add_option("--delta", pb_delta, "delta for --phase");
    pb->add_option("--N", pb_N, "N for --phase");
    pb->add_option("--N-hi", pb_Nhi, "N' for --phase (default 2N)");
    pb->add_option("--pair-word", pb_word, "Attach the phase-sum bound for this exponent-pair word");
    add_output_options(pb, out);

    try {
        app.parse(argc, argv);
        if (sx->parsed()) return run_sx(sx_grid, sx_members_flag, out);
        if (ap->parsed()) return run_ap(ap_grid, ap_q, ap_a, ap_fit, ap_counts_only, out);
        if (pairs->parsed()) return run_pairs(pairs_word, pairs_depth, pairs_frontier, out);
        if (va->parsed()) {
            if (va_et) {
                if (va_x == 0) throw std::invalid_argument("vaaler --et requires --x");
                return run_vaaler_et(va_x, va_q, va_a, va_et_H, out);
            }
            return run_vaaler(va_H, va_grid_points, va_coeffs, out);
        }
        if (pr->parsed()) {
            if (pr_frak) return run_frak_s(pr_tol, out);
            return run_primitive(pr_grid, pr_mult, pr_fit, out);
        }
        if (ti->parsed()) return run_titchmarsh(ti_grid, ti_kind, ti_report, ti_K, ti_limit, ti_u, ti_c, out);
        if (pb->parsed()) {
            if (pb_phase) {
                if (pb_x == 0 || pb_N == 0)
                    throw std::invalid_argument("probe --phase requires --x and --N");
                return run_phase(pb_x, pb_q, pb_delta, pb_eta, pb_N, pb_Nhi, pb_word, out);
            }
            if (pb_P == 0 || pb_Q == 0) throw std::invalid_argument("probe requires --P and --Q");
            return run_probe(pb_v, pb_P, pb_Phi, pb_Q, pb_eta, pb_limit, out);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const guard_error& e) {
        std::cerr << "guard violation: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "out of range: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
