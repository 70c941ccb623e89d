#pragma once

#include <utility>
#include <vector>

#include "xnseq/common.hpp"
#include "xnseq/expair.hpp"

namespace xnseq {

// Trigonometric approximation psi_H of the sawtooth:
//   psi_H(t) = -sum_{1<=|h|<H} c_H(h)/(2 pi i h) e(ht)
// with even real coefficients c_H(h) (so psi_H is real-valued) and the
// Fejer-kernel error majorant
//   |psi(t) - psi_H(t)| <= (1/2H) sum_{|h|<H} (1 - |h|/H) e(ht).
// Both properties are contracts checked by tests, not assumptions.
struct VaalerPolynomial {
    double H;
    std::vector<double> coefficients;  // coefficients[h-1] = c_H(h), 1 <= h < H

    double coefficient(u64 h) const { return coefficients.at(h - 1); }
};

// Builds the coefficient table for H >= 2 (rejects smaller H).
VaalerPolynomial vaaler_build(double H);

// psi_H(t); real by construction, period 1.
double vaaler_eval(const VaalerPolynomial& p, double t);

// The majorant (1/2H) sum_{|h|<H} (1 - |h|/H) e(ht), evaluated as the
// (nonnegative) real value.
double fejer_majorant(double H, double t);

// Erdos-Turan diagnostic for a finite point sequence:
//   lhs = |sum_n psi(x_n)|
//   rhs = sum_{1<=h<=H} (1/h) |sum_n e(h x_n)| + N/H
// The caller inspects lhs/rhs; the inequality lhs << rhs carries an
// absolute constant the toolkit instantiates empirically as 4.
std::pair<double, double> erdos_turan_ratio(const std::vector<double>& points, u64 H);

inline constexpr double kErdosTuranEmpiricalConstant = 4.0;

// Phase-sum query for sum_{N < n <= N_hi} psi(x/(qn+delta) - eta),
// with 0 <= delta <= q+1 and N <= N_hi <= 2N.
struct PhaseSumQuery {
    u64 x;
    u64 q;
    double delta;
    double eta;
    u64 N;
    u64 N_hi;

    PhaseSumQuery(u64 x_, u64 q_, double delta_, double eta_, u64 N_, u64 N_hi_);
};

// Direct evaluation of the phase sum; empty range (N_hi <= N) gives 0.
double phase_sum(const PhaseSumQuery& query);

struct PhaseSumReport {
    double value = 0.0;
    // (x/q)^{k/(k+1)} N^{(l-k)/(k+1)} + (x/q)^{-1} N^2 for the supplied pair.
    double pair_bound = 0.0;
};

PhaseSumReport phase_sum_report(const PhaseSumQuery& query, const ExponentPair& pair);

}  // namespace xnseq
