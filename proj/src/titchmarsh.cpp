#include "xnseq/titchmarsh.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "xnseq/floorseq.hpp"

namespace xnseq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSixOverPiSq = 6.0 / (kPi * kPi);  // 1/zeta(2)

void check_limit(const SieveTables& tables, u64 x, const char* who) {
    if (x > tables.limit) throw guard_error(std::string(who) + ": x exceeds sieve limit");
}

}  // namespace

double ArithmeticFunctionSpec::eval(const SieveTables& tables, u64 n) const {
    if (kind == ArithmeticKind::custom_table) {
        if (n < 1 || n > table.size())
            throw std::out_of_range("ArithmeticFunctionSpec: custom table index");
        return table[n - 1];
    }
    return static_cast<double>(eval_integer(tables, n));
}

u64 ArithmeticFunctionSpec::eval_integer(const SieveTables& tables, u64 n) const {
    if (n < 1 || n > tables.limit)
        throw std::out_of_range("ArithmeticFunctionSpec: n outside sieve tables");
    switch (kind) {
        case ArithmeticKind::constant_one: return 1;
        case ArithmeticKind::divisor_tau: return tables.tau(n);
        case ArithmeticKind::moebius_abs: return tables.mu[n] != 0 ? 1 : 0;
        case ArithmeticKind::totient_phi: return tables.phi[n];
        case ArithmeticKind::custom_table: break;
    }
    throw std::logic_error("eval_integer: custom_table is not integer-valued");
}

ArithmeticKind arithmetic_kind_from_name(const std::string& name) {
    if (name == "constant_one") return ArithmeticKind::constant_one;
    if (name == "divisor_tau") return ArithmeticKind::divisor_tau;
    if (name == "moebius_abs") return ArithmeticKind::moebius_abs;
    if (name == "totient_phi") return ArithmeticKind::totient_phi;
    throw std::invalid_argument("unknown arithmetic function kind: " + name);
}

std::string arithmetic_kind_name(ArithmeticKind kind) {
    switch (kind) {
        case ArithmeticKind::constant_one: return "constant_one";
        case ArithmeticKind::divisor_tau: return "divisor_tau";
        case ArithmeticKind::moebius_abs: return "moebius_abs";
        case ArithmeticKind::totient_phi: return "totient_phi";
        case ArithmeticKind::custom_table: return "custom_table";
    }
    return "?";
}

ArithmeticFunctionSpec make_spec(ArithmeticKind kind) {
    switch (kind) {
        case ArithmeticKind::constant_one: return ArithmeticFunctionSpec::constant_one();
        case ArithmeticKind::divisor_tau: return ArithmeticFunctionSpec::divisor_tau();
        case ArithmeticKind::moebius_abs: return ArithmeticFunctionSpec::moebius_abs();
        case ArithmeticKind::totient_phi: return ArithmeticFunctionSpec::totient_phi();
        case ArithmeticKind::custom_table: break;
    }
    throw std::invalid_argument("make_spec: custom_table needs an explicit table");
}

namespace {

// Block-grouped sum of a([x/n]) against an integer prefix table
// (pi_prefix), exact in integer arithmetic for integer-valued a.
double block_sum_integer_weight(const SieveTables& tables, u64 x,
                                const ArithmeticFunctionSpec& spec,
                                const std::vector<u32>& prefix) {
    if (spec.integer_valued()) {
        i128 total = 0;
        for_each_quotient_block(x, [&](const QuotientBlock& b) {
            u64 weight = prefix[b.n_hi] - prefix[b.n_lo - 1];
            if (weight) total += (i128)spec.eval_integer(tables, b.value) * weight;
        });
        return static_cast<double>(total);
    }
    KahanSum sum;
    for_each_quotient_block(x, [&](const QuotientBlock& b) {
        u64 weight = prefix[b.n_hi] - prefix[b.n_lo - 1];
        if (weight) sum.add(spec.eval(tables, b.value) * static_cast<double>(weight));
    });
    return sum.value();
}

}  // namespace

double sum_lambda_a(const SieveTables& tables, u64 x, const ArithmeticFunctionSpec& spec) {
    check_limit(tables, x, "sum_lambda_a");
    if (spec.integer_valued()) {
        i128 total = 0;
        for_each_quotient_block(x, [&](const QuotientBlock& b) {
            i64 weight = tables.cheb_fixed[b.n_hi] - tables.cheb_fixed[b.n_lo - 1];
            if (weight) total += (i128)spec.eval_integer(tables, b.value) * weight;
        });
        return static_cast<double>(total) / kChebFixedScale;
    }
    KahanSum sum;
    for_each_quotient_block(x, [&](const QuotientBlock& b) {
        i64 weight = tables.cheb_fixed[b.n_hi] - tables.cheb_fixed[b.n_lo - 1];
        if (weight)
            sum.add(spec.eval(tables, b.value) * (static_cast<double>(weight) / kChebFixedScale));
    });
    return sum.value();
}

double sum_lambda_a_direct(const SieveTables& tables, u64 x, const ArithmeticFunctionSpec& spec) {
    check_limit(tables, x, "sum_lambda_a_direct");
    KahanSum sum;
    for (u64 n = 2; n <= x; ++n)
        if (tables.lambda[n] != 0.0) sum.add(tables.lambda[n] * spec.eval(tables, x / n));
    return sum.value();
}

double sum_prime_a(const SieveTables& tables, u64 x, const ArithmeticFunctionSpec& spec) {
    check_limit(tables, x, "sum_prime_a");
    return block_sum_integer_weight(tables, x, spec, tables.pi_prefix);
}

double sum_prime_a_direct(const SieveTables& tables, u64 x, const ArithmeticFunctionSpec& spec) {
    check_limit(tables, x, "sum_prime_a_direct");
    KahanSum sum;
    for (u64 n = 2; n <= x; ++n)
        if (tables.is_prime(n)) sum.add(spec.eval(tables, x / n));
    return sum.value();
}

std::pair<double, SeriesTruncation> main_term_lambda(const SieveTables& tables,
                                                     const ArithmeticFunctionSpec& spec, u64 x,
                                                     double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("main_term_lambda: tol must be positive");
    if (spec.kind == ArithmeticKind::totient_phi)
        throw std::invalid_argument("main_term_lambda: series diverges for totient_phi");
    if (x == 0) return {0.0, SeriesTruncation{}};
    KahanSum series;
    SeriesTruncation trunc;
    u64 n_limit = spec.kind == ArithmeticKind::custom_table ? spec.table.size() : tables.limit;
    double tail = std::numeric_limits<double>::infinity();
    for (u64 n = 1; n <= n_limit; ++n) {
        double nd = static_cast<double>(n);
        series.add(spec.eval(tables, n) / (nd * (nd + 1.0)));
        ++trunc.terms_used;
        // sum_{m>n} m^{theta-2} <= n^{theta-1}/(1-theta)
        tail = spec.B * std::pow(nd, spec.theta - 1.0) / (1.0 - spec.theta);
        if (tail <= tol) break;
    }
    if (tail > tol)
        throw guard_error("main_term_lambda: sieve limit too small for requested tol");
    trunc.tail_bound = tail;
    return {static_cast<double>(x) * series.value(), trunc};
}

double log_power_antiderivative(u64 k, double u) {
    // F_k(u) = -(1/u) sum_{j<=k} (k!/j!) (log u)^j, with F_k' = (log u)^k/u^2.
    double lu = std::log(u);
    double kfact = 1.0;
    for (u64 j = 2; j <= k; ++j) kfact *= static_cast<double>(j);
    double term = kfact;  // (k!/j!) lu^j, starting at j = 0
    double sum = term;
    for (u64 j = 1; j <= k; ++j) {
        term *= lu / static_cast<double>(j);
        sum += term;
    }
    return -sum / u;
}

TitchmarshReport expansion_prime_a(const SieveTables& tables, const ArithmeticFunctionSpec& spec,
                                   u64 x, u64 K) {
    if (K > kMaxExpansionOrder) throw guard_error("expansion_prime_a: K exceeds 6");
    if (x < 2) throw std::invalid_argument("expansion_prime_a: need x >= 2");
    check_limit(tables, x, "expansion_prime_a");
    if (spec.kind == ArithmeticKind::totient_phi)
        throw std::invalid_argument("expansion_prime_a: integral diverges for totient_phi");

    // Truncation of the coefficient integrals; the omitted tail is
    // O(B (log N)^K N^{theta-1}), far below the expansion's own error.
    u64 N = std::min<u64>(tables.limit, 1'000'000);
    if (spec.kind == ArithmeticKind::custom_table) N = std::min<u64>(N, spec.table.size());

    std::vector<KahanSum> coeff(K + 1);
    for (u64 n = 1; n <= N; ++n) {
        double a = spec.eval(tables, n);
        if (a == 0.0) continue;
        for (u64 k = 0; k <= K; ++k) {
            double ik = log_power_antiderivative(k, static_cast<double>(n + 1)) -
                        log_power_antiderivative(k, static_cast<double>(n));
            coeff[k].add(a * ik);
        }
    }

    TitchmarshReport rep;
    rep.x = x;
    rep.exact = sum_prime_a(tables, x, spec);
    double lx = std::log(static_cast<double>(x));
    KahanSum main;
    for (u64 k = 0; k <= K; ++k) {
        double c = coeff[k].value();
        double term = static_cast<double>(x) / lx * std::pow(1.0 / lx, static_cast<double>(k)) * c;
        main.add(term);
        rep.secondary.emplace_back("c" + std::to_string(k), c);
        rep.secondary.emplace_back("term" + std::to_string(k), term);
    }
    rep.main_term = main.value();
    rep.ratio = rep.main_term != 0.0 ? rep.exact / rep.main_term : 0.0;
    return rep;
}

TitchmarshReport phi_lambda_report(const SieveTables& tables, u64 x) {
    check_limit(tables, x, "phi_lambda_report");
    TitchmarshReport rep;
    rep.x = x;
    rep.exact = sum_lambda_a(tables, x, ArithmeticFunctionSpec::totient_phi());
    rep.main_term = kSixOverPiSq * static_cast<double>(x) * std::log(static_cast<double>(x));
    rep.ratio = rep.main_term != 0.0 ? rep.exact / rep.main_term : 0.0;
    return rep;
}

TitchmarshReport phi_prime_report(const SieveTables& tables, u64 x) {
    check_limit(tables, x, "phi_prime_report");
    TitchmarshReport rep;
    rep.x = x;
    rep.exact = sum_prime_a(tables, x, ArithmeticFunctionSpec::totient_phi());
    rep.main_term =
        kSixOverPiSq * static_cast<double>(x) * std::log(std::log(static_cast<double>(x)));
    rep.ratio = rep.main_term != 0.0 ? rep.exact / rep.main_term : 0.0;
    auto [lo, hi] = thm19_bounds();
    rep.secondary.emplace_back("bracket_lower_coeff", lo);
    rep.secondary.emplace_back("bracket_upper_coeff", hi);
    return rep;
}

std::pair<double, double> thm19_bounds() {
    double z = kSixOverPiSq;  // 1/zeta(2)
    return {z / 3.0, z + (2.0 / 3.0) * (1.0 - z)};
}

u64 phi_summatory(const SieveTables& tables, u64 u) {
    if (u < 1) throw std::invalid_argument("phi_summatory: need u >= 1");
    check_limit(tables, u, "phi_summatory");
    return tables.phi_prefix[u];
}

double phi_remainder_E(const SieveTables& tables, u64 u, u64 x, double c_param) {
    if (!(c_param > 0.0)) throw std::invalid_argument("phi_remainder_E: c_param must be positive");
    check_limit(tables, u, "phi_remainder_E");
    if (u > x || (u128)u * u * u * u < x)
        throw guard_error("phi_remainder_E: need u in [x^(1/4), x]");
    double y = std::exp(c_param * std::sqrt(std::log(static_cast<double>(x))));
    u64 d_max = static_cast<u64>(static_cast<double>(u) / y);
    KahanSum sum;
    const double ud = static_cast<double>(u);
    for (u64 d = 1; d <= d_max; ++d) {
        if (tables.mu[d] == 0) continue;
        // psi(u/d) with the argument reduced mod 1 in integer arithmetic
        double psi = static_cast<double>(u % d) / static_cast<double>(d) - 0.5;
        sum.add(static_cast<double>(tables.mu[d]) / static_cast<double>(d) * psi);
    }
    return -ud * sum.value();
}

std::pair<double, double> kvw_probe(const SieveTables& tables, KvwKind v_kind, u64 P, u64 P_hi,
                                    u64 Q, double eta) {
    if (P < 4 || P_hi < P || P_hi > 2 * P) throw guard_error("kvw_probe: need 4 <= P <= P_hi <= 2P");
    if (Q < 4) throw guard_error("kvw_probe: need Q >= 4");
    check_limit(tables, P_hi, "kvw_probe");
    KahanSum sum;
    const double Qd = static_cast<double>(Q);
    for (u64 n = P + 1; n <= P_hi; ++n) {
        double v = 0.0;
        switch (v_kind) {
            case KvwKind::mu: v = static_cast<double>(tables.mu[n]); break;
            case KvwKind::lambda: v = tables.lambda[n]; break;
            case KvwKind::prime_indicator: v = tables.is_prime(n) ? 1.0 : 0.0; break;
        }
        if (v != 0.0) sum.add(v * sawtooth(Qd / static_cast<double>(n) + eta));
    }
    double reference = static_cast<double>(P) / std::log(Qd);
    return {sum.value(), reference};
}

}  // namespace xnseq
