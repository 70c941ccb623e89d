#include "xnseq/ap.hpp"

#include <cmath>

#include "xnseq/floorseq.hpp"

namespace xnseq {

APQuery::APQuery(u64 x_, u64 q_, i64 a_) : x(x_), q(q_) {
    if (x < 1) throw std::invalid_argument("APQuery: x must be >= 1");
    if (x > kMaxX) throw guard_error("APQuery: x exceeds the 2^40 cap");
    if (q < 1) throw std::invalid_argument("APQuery: q must be >= 1");
    i64 qq = static_cast<i64>(q);
    i64 r = a_ % qq;
    if (r < 0) r += qq;
    a = (r == 0) ? q : static_cast<u64>(r);
}

u64 count_S_brute(const APQuery& query) {
    if (query.x > kBruteCap) throw guard_error("count_S_brute: x exceeds brute cap");
    const u64 want = query.a % query.q;
    u64 count = 0;
    for (u64 n = 1; n <= query.x; ++n)
        if ((query.x / n) % query.q == want) ++count;
    return count;
}

u64 count_S_fast(const APQuery& query) {
    const u64 want = query.a % query.q;
    u64 count = 0;
    for_each_quotient_block(query.x, [&](const QuotientBlock& b) {
        if (b.value % query.q == want) count += b.length();
    });
    return count;
}

u64 count_S_star_brute(const APQuery& query) {
    if (query.x > kBruteCap) throw guard_error("count_S_star_brute: x exceeds brute cap");
    u64 count = 0;
    for (u64 n = query.a; n <= query.x; n += query.q)
        if (query.x / n - query.x / (n + 1) > 0) ++count;
    return count;
}

u64 count_S_star_fast(const APQuery& query) {
    const u64 want = query.a % query.q;
    u64 count = 0;
    for_each_quotient_block(query.x, [&](const QuotientBlock& b) {
        if (b.value % query.q == want) ++count;
    });
    return count;
}

std::pair<double, SeriesTruncation> main_term_S(const APQuery& query, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("main_term_S: tol must be positive");
    if (query.q == 1) {
        // sum 1/(n(n+1)) telescopes to exactly 1
        return {static_cast<double>(query.x), SeriesTruncation{1, 0.0}};
    }
    const double q = static_cast<double>(query.q);
    KahanSum series;
    SeriesTruncation trunc;
    double tail = 1.0;
    u64 n = query.a;
    // Tail over n' > n, n' == a (mod q): the next candidate is n0 = n + q and
    //   sum_{j>=0} 1/((n0+jq)(n0+jq+1)) <= 1/n0^2 + 1/(q*n0),
    // which is itself <= the full-series tail 1/(n+1).
    while (true) {
        double nd = static_cast<double>(n);
        series.add(1.0 / (nd * (nd + 1.0)));
        ++trunc.terms_used;
        double n0 = nd + q;
        tail = std::min(1.0 / (nd + 1.0), 1.0 / (n0 * n0) + 1.0 / (q * n0));
        if (tail <= tol) break;
        if (trunc.terms_used >= (u64{1} << 31))
            throw guard_error("main_term_S: truncation did not converge at this tol");
        n += query.q;
    }
    trunc.tail_bound = tail;
    return {static_cast<double>(query.x) * series.value(), trunc};
}

namespace {

// psi(num/den) for integers with den >= 1.  Reducing the argument mod 1
// in integer arithmetic first keeps terms whose argument sits exactly on
// an integer from straddling the jump of {t} under rounding.
double psi_fraction(i64 num, u64 den) {
    i64 m = num % static_cast<i64>(den);
    if (m < 0) m += static_cast<i64>(den);
    return static_cast<double>(m) / static_cast<double>(den) - 0.5;
}

// Shared kernel of R1 and R1*: -sum over n in (n_from, n_to] of
// psi(x/(qn+a)) - psi(x/(qn+a+1)).
double r1_kernel(const APQuery& query, u64 n_from, u64 n_to) {
    KahanSum sum;
    for (u64 n = n_from + 1; n <= n_to; ++n) {
        u64 lo = query.q * n + query.a;
        sum.add(psi_fraction(static_cast<i64>(query.x), lo) -
                psi_fraction(static_cast<i64>(query.x), lo + 1));
    }
    return -sum.value();
}

}  // namespace

double remainder_R1(const APQuery& query) {
    return r1_kernel(query, 0, isqrt_ratio(query.x, query.q));
}

double remainder_R1_star(const APQuery& query) {
    // sqrt(x)/q < n  <=>  (nq)^2 > x
    u64 n_from = isqrt(query.x) / query.q;
    return r1_kernel(query, n_from, isqrt_ratio(query.x, query.q));
}

double remainder_R2(const APQuery& query) {
    const u64 n_max = isqrt_ratio(query.x, query.q);
    KahanSum sum;
    for (u64 n = 1; n <= n_max; ++n) {
        // x/(qn) - a/q = (x - an)/(qn)
        i64 num_a = static_cast<i64>(query.x) - static_cast<i64>(query.a * n);
        sum.add(psi_fraction(num_a, query.q * n) - psi_fraction(num_a - static_cast<i64>(n), query.q * n));
    }
    return -sum.value();
}

DecompositionReport decomposition_gap_S(const APQuery& query) {
    DecompositionReport rep;
    rep.exact = count_S_fast(query);
    // Absolute truncation error of the main term <= 0.05, negligible
    // against the gap bound.
    double tol = 0.05 / static_cast<double>(query.x);
    rep.main_term = main_term_S(query, tol).first;
    double r1 = remainder_R1(query);
    double r2 = remainder_R2(query);
    rep.remainders = {{"R1", r1}, {"R2", r2}};
    rep.gap = static_cast<double>(rep.exact) - rep.main_term - r1 - r2;
    rep.within_bound = std::abs(rep.gap) <= kGapBound;
    return rep;
}

DecompositionReport decomposition_gap_S_star(const APQuery& query) {
    DecompositionReport rep;
    rep.exact = count_S_star_fast(query);
    rep.main_term = 2.0 * std::sqrt(static_cast<double>(query.x)) / static_cast<double>(query.q);
    double r1s = remainder_R1_star(query);
    double r2 = remainder_R2(query);
    rep.remainders = {{"R1_star", r1s}, {"R2", r2}};
    rep.gap = static_cast<double>(rep.exact) - rep.main_term - r1s - r2;
    rep.within_bound = std::abs(rep.gap) <= kGapBound;
    return rep;
}

FitResult error_exponent_fit(u64 q, i64 a, const std::vector<u64>& x_grid) {
    if (x_grid.size() < 5) throw std::invalid_argument("error_exponent_fit: need at least 5 grid points");
    std::vector<FitPoint> points;
    points.reserve(x_grid.size());
    for (u64 x : x_grid) {
        APQuery query(x, q, a);
        double exact = static_cast<double>(count_S_star_fast(query));
        double main = 2.0 * std::sqrt(static_cast<double>(x)) / static_cast<double>(q);
        points.push_back({static_cast<double>(x) / static_cast<double>(q), std::abs(exact - main)});
    }
    return fit_log_slope(points);
}

}  // namespace xnseq
