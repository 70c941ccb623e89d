#include "oracles.hpp"

#include <cmath>
#include <limits>

namespace xnseq::oracle {

namespace {

// A_d = sum_{j>=1} 1/(dj(dj+1)): J explicit terms plus the midpoint
// integral (1/d) log(1 + 1/(d(J+1/2))) for the tail, which is off by at
// most 1/(2 (d(J+1/2))^2).
double a_eval(u64 d, u64 J) {
    const double dd = static_cast<double>(d);
    KahanSum sum;
    for (u64 j = 1; j <= J; ++j) {
        double u = dd * static_cast<double>(j);
        sum.add(1.0 / (u * (u + 1.0)));
    }
    double t = 1.0 / (dd * (static_cast<double>(J) + 0.5));
    double tail = (t < 1e-3) ? t * (1.0 - t * (0.5 - t / 3.0)) : std::log1p(t);
    sum.add(tail / dd);
    return sum.value();
}

constexpr u64 kACacheMax = 100000;

}  // namespace

FrakSDirect frak_S_direct(u64 box, u64 far) {
    // Box part: plain gcd double loop (symmetric halves).
    std::vector<double> f(box + 1);
    for (u64 n = 1; n <= box; ++n)
        f[n] = 1.0 / (static_cast<double>(n) * (static_cast<double>(n) + 1.0));
    KahanSum box_sum;
    box_sum.add(f[1] * f[1]);  // (1,1) is the only coprime diagonal pair
    for (u64 m = 1; m <= box; ++m)
        for (u64 n = m + 1; n <= box; ++n)
            if (std::gcd(m, n) == 1) box_sum.add(2.0 * f[m] * f[n]);

    // Tail part: 2 sum_{box < m <= far} f(m) B_m with B_m by
    // inclusion-exclusion over the distinct primes of m.
    std::vector<u32> primes;
    {
        u64 root = static_cast<u64>(std::sqrt(static_cast<double>(far))) + 1;
        std::vector<bool> comp(root + 1, false);
        for (u64 p = 2; p <= root; ++p) {
            if (comp[p]) continue;
            primes.push_back(static_cast<u32>(p));
            for (u64 j = p * p; j <= root; j += p) comp[j] = true;
        }
    }
    std::vector<double> a_cache(kACacheMax + 1, std::numeric_limits<double>::quiet_NaN());
    auto a_of = [&](u64 d) -> double {
        if (d <= kACacheMax) {
            double& slot = a_cache[d];
            if (std::isnan(slot)) slot = a_eval(d, std::max<u64>(64, 20000 / d));
            return slot;
        }
        return a_eval(d, 2);
    };

    const u64 seg_size = 1 << 20;
    std::vector<u64> rem(seg_size);
    std::vector<u32> pfs(seg_size * 10);
    std::vector<u8> pfn(seg_size);
    KahanSum tail_sum;
    for (u64 lo = box + 1; lo <= far; lo += seg_size) {
        u64 hi = std::min(far, lo + seg_size - 1);
        u64 count = hi - lo + 1;
        for (u64 i = 0; i < count; ++i) {
            rem[i] = lo + i;
            pfn[i] = 0;
        }
        for (u32 p : primes) {
            u64 start = ((lo + p - 1) / p) * p;
            if ((u64)p * p > hi) break;
            for (u64 m = start; m <= hi; m += p) {
                u64 i = m - lo;
                if (rem[i] % p == 0) {
                    pfs[i * 10 + pfn[i]++] = p;
                    while (rem[i] % p == 0) rem[i] /= p;
                }
            }
        }
        for (u64 i = 0; i < count; ++i) {
            u64 m = lo + i;
            u32 np = pfn[i];
            u64 leftover = rem[i];
            u64 pr[10];
            for (u32 j = 0; j < np; ++j) pr[j] = pfs[i * 10 + j];
            if (leftover > 1) pr[np++] = leftover;
            // B_m = sum over squarefree divisors d of rad(m) of mu(d) A_d
            double bm = 0.0;
            u64 prods[1 << 10];
            prods[0] = 1;
            for (u32 b = 0; b < np; ++b) {
                u32 bit = u32{1} << b;
                for (u32 mask = 0; mask < bit; ++mask) prods[mask | bit] = prods[mask] * pr[b];
            }
            for (u32 mask = 0; mask < (u32{1} << np); ++mask) {
                double a = a_of(prods[mask]);
                bm += (__builtin_popcount(mask) & 1) ? -a : a;
            }
            double fm = 1.0 / (static_cast<double>(m) * (static_cast<double>(m) + 1.0));
            tail_sum.add(2.0 * fm * bm);
        }
    }

    // Residual enclosures (midpoint +- half width):
    //   max coordinate > far:  in [1/(far+1), 2/(far+1)]
    //   both coordinates > box (overcounted by the tail sum): in [-(1/(box+1))^2, 0]
    double far_mid = 1.5 / (static_cast<double>(far) + 1.0);
    double far_hw = 0.5 / (static_cast<double>(far) + 1.0);
    double corner = 1.0 / (static_cast<double>(box) + 1.0);
    double corner_mid = -0.5 * corner * corner;
    double corner_hw = 0.5 * corner * corner;

    FrakSDirect result;
    result.value = box_sum.value() + tail_sum.value() + far_mid + corner_mid;
    result.half_width = far_hw + corner_hw + 1e-9;
    return result;
}

}  // namespace xnseq::oracle
