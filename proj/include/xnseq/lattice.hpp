#pragma once

#include <vector>

#include "xnseq/common.hpp"
#include "xnseq/fit.hpp"

namespace xnseq {

enum class CoprimeMethod { brute, moebius };

struct CoprimeCountReport {
    u64 x = 0;
    u64 exact = 0;
    double main_term = 0.0;  // 4x/zeta(2) = 24x/pi^2
    double error = 0.0;      // exact - main_term
    CoprimeMethod method = CoprimeMethod::moebius;
};

// Caps for the pairwise-gcd reference path over S(x)^2.
inline constexpr u64 kCoprimeBruteDefaultCap = 1'000'000;
inline constexpr u64 kCoprimeBruteHardCap = 100'000'000;
inline constexpr u64 kCoprimeMoebiusCap = 1'000'000'000;
inline constexpr u64 kMultiplicityBruteCap = 1'000'000;

// Ordered pairs (m, n) in S(x)^2 with gcd(m, n) = 1, by pairwise gcd.
u64 coprime_pairs_S_brute(u64 x, u64 cap = kCoprimeBruteDefaultCap);

// Same count via sum_d mu(d) * (#{v in S(x) : d | v})^2, with the
// divisible counts accumulated from the squarefree divisors of the
// materialized member list.
u64 coprime_pairs_S_moebius(u64 x);

// #{v in S(x) : d | v}; equals count_S_star_fast(x, d, 0).
u64 sx_members_divisible(u64 x, u64 d);

// Ordered pairs 1 <= m, n <= x with gcd([x/m], [x/n]) = 1.  The brute
// path runs pairwise gcd over the value/weight pairs of the quotient
// blocks; the Moebius path accumulates sum_d mu(d) S(x,d,0)^2 from the
// squarefree divisors of the block values.
u64 coprime_pairs_multiplicity_brute(u64 x);
u64 coprime_pairs_multiplicity_moebius(u64 x);

CoprimeCountReport coprime_count_report(u64 x, CoprimeMethod method = CoprimeMethod::moebius);

// The constant frak_S = sum_{(m,n)=1} 1/(m n (m+1)(n+1)), via the
// Moebius series sum_d mu(d) A_d^2 with A_d = sum_j 1/(dj(dj+1)),
// truncated with rigorous tail bounds so the result is within tol.
double frak_S(double tol);

// Least-squares slope of log|coprime_pairs_S(x) - 4x/zeta(2)| vs log x
// over a geometric grid (length >= 5).
FitResult primitive_error_fit(const std::vector<u64>& x_grid);

}  // namespace xnseq
