#pragma once

#include <string>
#include <utility>
#include <vector>

#include "xnseq/ap.hpp"
#include "xnseq/common.hpp"
#include "xnseq/sieve.hpp"

namespace xnseq {

// Arithmetic functions a(n) admitted by the Titchmarsh-type sums.  The
// growth parameters (theta, A, B) describe the conditions
//   (a)  sum_{n<=x} |a(n)|/n  <<  (log x)^A
//   (b)  |a(n)| <= B n^theta  with theta in [0, 1/2)
// under which the main terms below converge; totient_phi violates (b)
// and is handled only by the dedicated phi_* reports.
enum class ArithmeticKind { constant_one, divisor_tau, moebius_abs, totient_phi, custom_table };

struct ArithmeticFunctionSpec {
    ArithmeticKind kind = ArithmeticKind::constant_one;
    double theta = 0.0;
    double A = 1.0;
    double B = 1.0;
    std::vector<double> table;  // custom_table only; table[n-1] = a(n)

    static ArithmeticFunctionSpec constant_one() { return {ArithmeticKind::constant_one, 0.0, 1.0, 1.0, {}}; }
    static ArithmeticFunctionSpec divisor_tau() { return {ArithmeticKind::divisor_tau, 0.4, 2.0, 8.0, {}}; }
    static ArithmeticFunctionSpec moebius_abs() { return {ArithmeticKind::moebius_abs, 0.0, 1.0, 1.0, {}}; }
    static ArithmeticFunctionSpec totient_phi() { return {ArithmeticKind::totient_phi, 1.0, 2.0, 1.0, {}}; }
    static ArithmeticFunctionSpec custom(std::vector<double> values, double theta, double A, double B) {
        return {ArithmeticKind::custom_table, theta, A, B, std::move(values)};
    }

    bool integer_valued() const { return kind != ArithmeticKind::custom_table; }
    double eval(const SieveTables& tables, u64 n) const;
    u64 eval_integer(const SieveTables& tables, u64 n) const;  // non-custom kinds
};

ArithmeticKind arithmetic_kind_from_name(const std::string& name);
std::string arithmetic_kind_name(ArithmeticKind kind);
ArithmeticFunctionSpec make_spec(ArithmeticKind kind);

struct TitchmarshReport {
    u64 x = 0;
    double exact = 0.0;
    double main_term = 0.0;
    double ratio = 0.0;  // exact / main_term when main_term != 0
    std::vector<std::pair<std::string, double>> secondary;
};

// sum_{n<=x} Lambda(n) a([x/n]).  Grouped over quotient blocks as
// sum_v a(v) (Psi(n_hi) - Psi(n_lo - 1)); for integer-valued a the
// accumulation is exact in fixed point, so constant_one reproduces the
// Psi table lookup identically.
double sum_lambda_a(const SieveTables& tables, u64 x, const ArithmeticFunctionSpec& spec);
double sum_lambda_a_direct(const SieveTables& tables, u64 x, const ArithmeticFunctionSpec& spec);

// sum_{p<=x} a([x/p]); same block grouping against the pi table.
double sum_prime_a(const SieveTables& tables, u64 x, const ArithmeticFunctionSpec& spec);
double sum_prime_a_direct(const SieveTables& tables, u64 x, const ArithmeticFunctionSpec& spec);

// Main term x sum_{n>=1} a(n)/(n(n+1)), truncated so the rigorous tail
// bound B sum_{n>N} n^{theta-2} <= (B/(1-theta)) N^{theta-1} is <= tol.
std::pair<double, SeriesTruncation> main_term_lambda(const SieveTables& tables,
                                                     const ArithmeticFunctionSpec& spec, u64 x,
                                                     double tol);

inline constexpr u64 kMaxExpansionOrder = 6;

// K-term expansion (x/log x) sum_{k<=K} (1/log x)^k c_k with
// c_k = int_1^inf a([u]) (log u)^k / u^2 du, evaluated per unit interval
// by the closed-form antiderivative
//   int (log u)^k u^{-2} du = -(1/u) sum_{j<=k} (k!/j!) (log u)^j.
// secondary lists the individual expansion terms and coefficients.
TitchmarshReport expansion_prime_a(const SieveTables& tables, const ArithmeticFunctionSpec& spec,
                                   u64 x, u64 K);

// Closed-form antiderivative evaluated at u (for the oracle quadrature
// check): F_k(u) with F_k'(u) = (log u)^k / u^2.
double log_power_antiderivative(u64 k, double u);

// sum_{n<=x} Lambda(n) phi([x/n]) against (6/pi^2) x log x.
TitchmarshReport phi_lambda_report(const SieveTables& tables, u64 x);

// sum_{p<=x} phi([x/p]) against the conjectural (6/pi^2) x log log x;
// secondary carries the bracket coefficients of the proved bounds.
TitchmarshReport phi_prime_report(const SieveTables& tables, u64 x);

// Proved bracket coefficients for sum_{p<=x} phi([x/p]) / (x log log x):
// lower (1/3)(6/pi^2), upper 6/pi^2 + (2/3)(1 - 6/pi^2).
std::pair<double, double> thm19_bounds();

// sum_{n<=u} phi(n), exact.
u64 phi_summatory(const SieveTables& tables, u64 u);

// E(u) = -u sum_{d <= u/y} (mu(d)/d) psi(u/d) with y = exp(c sqrt(log x));
// valid for u in [x^{1/4}, x].
double phi_remainder_E(const SieveTables& tables, u64 u, u64 x, double c_param = 1.0);

// Empirical constant standing in for the unspecified one in the residual
// |sum phi - u^2/(2 zeta(2)) - E(u)| <= 50 u exp(-sqrt(log x)).
inline constexpr double kPhiResidualConstant = 50.0;

enum class KvwKind { mu, lambda, prime_indicator };

// Diagnostic probe of sum_{P<n<=P_hi} v(n) psi(Q/n + eta) against the
// reference magnitude P / log Q.  No pass/fail is attached.
std::pair<double, double> kvw_probe(const SieveTables& tables, KvwKind v_kind, u64 P, u64 P_hi,
                                    u64 Q, double eta);

}  // namespace xnseq
