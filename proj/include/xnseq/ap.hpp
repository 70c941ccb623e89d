#pragma once

#include <string>
#include <utility>
#include <vector>

#include "xnseq/common.hpp"
#include "xnseq/fit.hpp"

namespace xnseq {

// Query for the progression counts S(x,q,a) and S*(x,q,a).  The residue
// is normalized to 1 <= a <= q at construction (the counts are invariant
// under a -> a + q, and the remainder sums below require 1 <= a <= q);
// a == 0 (mod q) is stored as a = q.
struct APQuery {
    u64 x;
    u64 q;
    u64 a;

    APQuery(u64 x_, u64 q_, i64 a_);
};

// Truncation record for an infinite-series main term: number of summed
// terms and a rigorous upper bound on the omitted tail.
struct SeriesTruncation {
    u64 terms_used = 0;
    double tail_bound = 0.0;
};

// Empirical stand-in for the O(1) in the decomposition identities.
inline constexpr double kGapBound = 10.0;

struct DecompositionReport {
    u64 exact = 0;
    double main_term = 0.0;
    std::vector<std::pair<std::string, double>> remainders;
    double gap = 0.0;              // exact - main - sum(remainders)
    bool within_bound = false;     // |gap| <= kGapBound
};

// Brute-force guard for the O(x) / O(x/q) reference paths.
inline constexpr u64 kBruteCap = 10'000'000;

// S(x,q,a) = #{n <= x : [x/n] == a (mod q)}, counted with multiplicity.
u64 count_S_brute(const APQuery& query);   // direct loop, x <= kBruteCap
u64 count_S_fast(const APQuery& query);    // quotient blocks, O(sqrt x)

// S*(x,q,a) = #{v in S(x) : v == a (mod q)}.
u64 count_S_star_brute(const APQuery& query);  // membership scan, x <= kBruteCap
u64 count_S_star_fast(const APQuery& query);   // block values, O(sqrt x)

// Main term x * sum_{n == a (mod q)} 1/(n(n+1)), truncated so that the
// rigorous tail bound is <= tol (the returned value is within tol*x of
// the full series times x).
std::pair<double, SeriesTruncation> main_term_S(const APQuery& query, double tol);

// Sawtooth remainder sums, evaluated directly in compensated double
// precision:
//   R1  = -sum_{n <= sqrt(x/q)} (psi(x/(qn+a)) - psi(x/(qn+a+1)))
//   R2  = -sum_{n <= sqrt(x/q)} (psi(x/(qn) - a/q) - psi(x/(qn) - (a+1)/q))
//   R1* = -sum_{sqrt(x)/q < n <= sqrt(x/q)} (psi(x/(qn+a)) - psi(x/(qn+a+1)))
double remainder_R1(const APQuery& query);
double remainder_R2(const APQuery& query);
double remainder_R1_star(const APQuery& query);

// Decomposition diagnostics:
//   S(x,q,a)  = x*sum_{n==a(q)} 1/(n(n+1)) + R1 + R2 + gap
//   S*(x,q,a) = 2*sqrt(x)/q + R1* + R2 + gap
DecompositionReport decomposition_gap_S(const APQuery& query);
DecompositionReport decomposition_gap_S_star(const APQuery& query);

// Least-squares slope of log|S*(x,q,a) - 2 sqrt(x)/q| against log(x/q)
// over a geometric grid (length >= 5).  Zero-error points are skipped;
// an all-zero grid is reported as degenerate ("exact").
FitResult error_exponent_fit(u64 q, i64 a, const std::vector<u64>& x_grid);

}  // namespace xnseq
