#include "xnseq/lattice.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "xnseq/floorseq.hpp"
#include "xnseq/sieve.hpp"

namespace xnseq {

namespace {

constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

// Distinct prime factors by trial division; v <= 1e9 has at most 9.
int distinct_primes(u64 v, u64 out[16]) {
    int np = 0;
    for (u64 p = 2; p * p <= v; p += (p == 2) ? 1 : 2) {
        if (v % p == 0) {
            out[np++] = p;
            while (v % p == 0) v /= p;
        }
    }
    if (v > 1) out[np++] = v;
    return np;
}

struct DivisorStat {
    u64 weight = 0;
    i8 mu = 0;
};

// Accumulates, for every squarefree divisor d of v, weight into stat[d]
// together with mu(d).
void accumulate_squarefree_divisors(u64 v, u64 weight,
                                    std::unordered_map<u64, DivisorStat>& stats) {
    u64 primes[16];
    int np = distinct_primes(v, primes);
    if (np > 9) throw std::logic_error("accumulate_squarefree_divisors: omega > 9");
    u64 prods[1 << 9];
    prods[0] = 1;
    for (int i = 0; i < np; ++i) {
        u32 bit = u32{1} << i;
        for (u32 mask = 0; mask < bit; ++mask) prods[mask | bit] = prods[mask] * primes[i];
    }
    for (u32 mask = 0; mask < (u32{1} << np); ++mask) {
        DivisorStat& s = stats[prods[mask]];
        s.weight += weight;
        s.mu = (__builtin_popcount(mask) % 2 == 0) ? 1 : -1;
    }
}

u64 moebius_square_sum(const std::unordered_map<u64, DivisorStat>& stats) {
    i128 total = 0;
    for (const auto& [d, s] : stats) {
        i128 sq = (i128)s.weight * s.weight;
        total += s.mu > 0 ? sq : -sq;
    }
    if (total < 0) throw std::logic_error("moebius_square_sum: negative count");
    return static_cast<u64>(total);
}

}  // namespace

u64 coprime_pairs_S_brute(u64 x, u64 cap) {
    if (cap > kCoprimeBruteHardCap) throw guard_error("coprime_pairs_S_brute: cap exceeds 10^8");
    if (x > cap) throw guard_error("coprime_pairs_S_brute: x exceeds cap");
    std::vector<u64> members = sx_members(x);
    u64 count = 0;
    for (u64 m : members)
        for (u64 n : members)
            if (std::gcd(m, n) == 1) ++count;
    return count;
}

u64 coprime_pairs_S_moebius(u64 x) {
    if (x > kCoprimeMoebiusCap) throw guard_error("coprime_pairs_S_moebius: x exceeds 10^9");
    std::unordered_map<u64, DivisorStat> stats;
    for (u64 m : sx_members(x)) accumulate_squarefree_divisors(m, 1, stats);
    return moebius_square_sum(stats);
}

u64 sx_members_divisible(u64 x, u64 d) {
    if (d < 1) throw std::invalid_argument("sx_members_divisible: d must be >= 1");
    u64 count = 0;
    for_each_quotient_block(x, [&](const QuotientBlock& b) {
        if (b.value % d == 0) ++count;
    });
    return count;
}

u64 coprime_pairs_multiplicity_brute(u64 x) {
    if (x > kMultiplicityBruteCap) throw guard_error("coprime_pairs_multiplicity_brute: x exceeds 10^6");
    std::vector<QuotientBlock> blocks = quotient_blocks(x);
    i128 count = 0;
    for (const QuotientBlock& a : blocks)
        for (const QuotientBlock& b : blocks)
            if (std::gcd(a.value, b.value) == 1) count += (i128)a.length() * b.length();
    return static_cast<u64>(count);
}

u64 coprime_pairs_multiplicity_moebius(u64 x) {
    if (x > kCoprimeMoebiusCap) throw guard_error("coprime_pairs_multiplicity_moebius: x exceeds 10^9");
    std::unordered_map<u64, DivisorStat> stats;
    for_each_quotient_block(
        x, [&](const QuotientBlock& b) { accumulate_squarefree_divisors(b.value, b.length(), stats); });
    return moebius_square_sum(stats);
}

CoprimeCountReport coprime_count_report(u64 x, CoprimeMethod method) {
    CoprimeCountReport rep;
    rep.x = x;
    rep.method = method;
    rep.exact = method == CoprimeMethod::brute ? coprime_pairs_S_brute(x) : coprime_pairs_S_moebius(x);
    rep.main_term = 4.0 * static_cast<double>(x) / kZeta2;
    rep.error = static_cast<double>(rep.exact) - rep.main_term;
    return rep;
}

double frak_S(double tol) {
    if (!(tol >= 1e-12)) throw std::invalid_argument("frak_S: need tol >= 1e-12");

    // Tail over d > D: |sum mu(d) A_d^2| <= zeta(2)^2 sum_{d>D} d^-4
    //                                    <= zeta(2)^2 / (3 D^3)   (A_d <= zeta(2)/d^2).
    u64 D = static_cast<u64>(std::ceil(std::cbrt(2.0 * kZeta2 * kZeta2 / (3.0 * tol)))) + 1;
    SieveTables small = build_sieve(D);

    KahanSum total;
    for (u64 d = 1; d <= D; ++d) {
        if (small.mu[d] == 0) continue;
        // A_d to absolute accuracy eps_d, budgeted so that
        // sum_d 2 A_d eps_d <= tol/2.
        double eps_d = tol * static_cast<double>(d) * static_cast<double>(d) /
                       (4.0 * kZeta2 * static_cast<double>(D));
        u64 J = static_cast<u64>(std::ceil(1.0 / (static_cast<double>(d) * std::sqrt(eps_d))));
        if (J < 8) J = 8;
        KahanSum a;
        const double dd = static_cast<double>(d);
        for (u64 j = 1; j <= J; ++j) {
            double u = dd * static_cast<double>(j);
            a.add(1.0 / (u * (u + 1.0)));
        }
        // Midpoint integral for the tail: sum_{j>J} f(j) ~ int_{J+1/2}^inf f,
        // off by at most f(J+1/2)/2 <= eps_d/2.
        a.add(std::log1p(1.0 / (dd * (static_cast<double>(J) + 0.5))) / dd);
        double ad = a.value();
        total.add(small.mu[d] > 0 ? ad * ad : -ad * ad);
    }
    return total.value();
}

FitResult primitive_error_fit(const std::vector<u64>& x_grid) {
    if (x_grid.size() < 5) throw std::invalid_argument("primitive_error_fit: need at least 5 grid points");
    std::vector<FitPoint> points;
    points.reserve(x_grid.size());
    for (u64 x : x_grid) {
        double exact = static_cast<double>(coprime_pairs_S_moebius(x));
        double main = 4.0 * static_cast<double>(x) / kZeta2;
        points.push_back({static_cast<double>(x), std::abs(exact - main)});
    }
    return fit_log_slope(points);
}

}  // namespace xnseq
