// Test-only reference computations, independent of the library's fast
// paths.  Everything here is deliberately the slow, obvious version.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "xnseq/common.hpp"

namespace xnseq::oracle {

// S(x) by scanning all of [x/1], ..., [x/x].
inline std::vector<u64> sx_members_scan(u64 x) {
    std::vector<u64> values;
    values.reserve(static_cast<std::size_t>(x));
    for (u64 n = 1; n <= x; ++n) values.push_back(x / n);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

// Membership by scanning for a witness nu with [x/nu] == n.
inline bool sx_member_scan(u64 x, u64 n) {
    for (u64 nu = 1; nu <= x; ++nu)
        if (x / nu == n) return true;
    return false;
}

inline u64 count_S_scan(u64 x, u64 q, u64 a_norm) {
    u64 count = 0;
    for (u64 n = 1; n <= x; ++n)
        if ((x / n) % q == a_norm % q) ++count;
    return count;
}

inline u64 count_S_star_scan(u64 x, u64 q, u64 a_norm) {
    u64 count = 0;
    for (u64 v : sx_members_scan(x))
        if (v % q == a_norm % q) ++count;
    return count;
}

// Ordered coprime pairs over an explicit member list.
inline u64 coprime_pairs_gcd(const std::vector<u64>& members) {
    u64 count = 0;
    for (u64 m : members)
        for (u64 n : members)
            if (std::gcd(m, n) == 1) ++count;
    return count;
}

// Literal double loop over (m, n) <= x for the multiplicity count.
inline u64 coprime_pairs_multiplicity_literal(u64 x) {
    u64 count = 0;
    for (u64 m = 1; m <= x; ++m)
        for (u64 n = 1; n <= x; ++n)
            if (std::gcd(x / m, x / n) == 1) ++count;
    return count;
}

// Partial sums of sum_{n == a (mod q)} 1/(n(n+1)) with N terms, plain
// long-double accumulation.
inline long double progression_series_partial(u64 q, u64 a, u64 terms) {
    long double sum = 0.0L;
    u64 n = a;
    for (u64 i = 0; i < terms; ++i, n += q) {
        long double nd = static_cast<long double>(n);
        sum += 1.0L / (nd * (nd + 1.0L));
    }
    return sum;
}

// Adaptive Simpson quadrature (for checking closed-form integrals).
template <typename F>
double simpson_adaptive(F f, double a, double b, double eps, int depth = 24) {
    double m = 0.5 * (a + b);
    double fa = f(a), fb = f(b), fm = f(m);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    struct Rec {
        double a, b, fa, fm, fb, whole;
        int depth;
    };
    std::vector<Rec> stack{{a, b, fa, fm, fb, whole, depth}};
    double total = 0.0;
    while (!stack.empty()) {
        Rec r = stack.back();
        stack.pop_back();
        double mid = 0.5 * (r.a + r.b);
        double lm = 0.5 * (r.a + mid), rm = 0.5 * (mid + r.b);
        double flm = f(lm), frm = f(rm);
        double left = (mid - r.a) / 6.0 * (r.fa + 4.0 * flm + r.fm);
        double right = (r.b - mid) / 6.0 * (r.fm + 4.0 * frm + r.fb);
        if (r.depth <= 0 || std::abs(left + right - r.whole) < 15.0 * eps) {
            total += left + right + (left + right - r.whole) / 15.0;
        } else {
            stack.push_back({r.a, mid, r.fa, flm, r.fm, left, r.depth - 1});
            stack.push_back({mid, r.b, r.fm, frm, r.fb, right, r.depth - 1});
        }
    }
    return total;
}

// frak_S by direct summation: a gcd double loop over the box
// [1, box]^2 plus the m-major tail sum_{box < m <= far} 2 f(m) B_m with
// B_m = sum_{(n,m)=1} f(n) by inclusion-exclusion over m's prime
// divisors, f(n) = 1/(n(n+1)).  Rigorous residual enclosure:
//   pairs with both coordinates > box:    [0, (1/(box+1))^2]
//   pairs with max coordinate  > far:     [1/(far+1), 2/(far+1)]
// The returned value uses the midpoints; half_width bounds the residual.
struct FrakSDirect {
    double value = 0.0;
    double half_width = 0.0;
};

FrakSDirect frak_S_direct(u64 box, u64 far);

}  // namespace xnseq::oracle
