#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xnseq/common.hpp"

namespace xnseq {

inline constexpr u64 kSieveLimitCap = 100'000'000;

// Chebyshev prefix sums are kept in fixed point (scale 2^30) so that
// block-grouped sums are integer-exact and reproduce the table lookups
// bit for bit regardless of how the blocks are grouped.
inline constexpr int kChebFixedBits = 30;
inline constexpr double kChebFixedScale = static_cast<double>(u64{1} << kChebFixedBits);

// Precomputed multiplicative-function tables up to `limit` (linear sieve,
// O(limit) time and memory).  Index 0 is unused.
struct SieveTables {
    u64 limit = 0;
    std::vector<double> lambda;    // von Mangoldt: log p at prime powers p^j, else 0
    std::vector<u32> phi;          // Euler totient
    std::vector<u64> phi_prefix;   // sum_{m<=n} phi(m)
    std::vector<i8> mu;            // Moebius, in {-1, 0, 1}
    std::vector<u32> spf;          // smallest prime factor (spf[p] == p)
    std::vector<i64> cheb_fixed;   // Psi(n) = sum_{m<=n} Lambda(m), fixed point
    std::vector<u32> pi_prefix;    // pi(n)

    bool is_prime(u64 n) const { return n >= 2 && spf[n] == n; }
    u64 pi(u64 n) const { return pi_prefix[n]; }
    double chebyshev(u64 n) const {
        return static_cast<double>(cheb_fixed[n]) / kChebFixedScale;
    }
    i64 chebyshev_fixed(u64 n) const { return cheb_fixed[n]; }
    u64 phi_summatory(u64 n) const { return phi_prefix[n]; }

    // Divisor count via the spf chain.
    u64 tau(u64 n) const;
};

SieveTables build_sieve(u64 limit);

// Flat binary cache (optimization only; results are identical with and
// without it).  Layout: magic "XNS1", u32 version, u64 limit, then the
// raw arrays, all little-endian.
bool save_sieve(const SieveTables& tables, const std::string& path);
std::optional<SieveTables> load_sieve(const std::string& path);

// Builds or loads from `cache_dir` (empty dir means no caching).
SieveTables build_sieve_cached(u64 limit, const std::string& cache_dir);

}  // namespace xnseq
