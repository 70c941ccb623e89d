#include "xnseq/sieve.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

namespace xnseq {

u64 SieveTables::tau(u64 n) const {
    if (n == 0) throw std::invalid_argument("tau: n must be >= 1");
    u64 count = 1;
    while (n > 1) {
        u64 p = spf[n];
        u64 e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        count *= e + 1;
    }
    return count;
}

SieveTables build_sieve(u64 limit) {
    if (limit < 1) throw std::invalid_argument("build_sieve: limit must be >= 1");
    if (limit > kSieveLimitCap) throw guard_error("build_sieve: limit exceeds 10^8 memory guard");

    SieveTables t;
    t.limit = limit;
    t.lambda.assign(limit + 1, 0.0);
    t.phi.assign(limit + 1, 0);
    t.phi_prefix.assign(limit + 1, 0);
    t.mu.assign(limit + 1, 0);
    t.spf.assign(limit + 1, 0);
    t.cheb_fixed.assign(limit + 1, 0);
    t.pi_prefix.assign(limit + 1, 0);

    if (limit >= 1) {
        t.phi[1] = 1;
        t.mu[1] = 1;
        t.spf[1] = 1;
    }

    std::vector<u32> primes;
    for (u64 i = 2; i <= limit; ++i) {
        if (t.spf[i] == 0) {
            t.spf[i] = static_cast<u32>(i);
            t.phi[i] = static_cast<u32>(i - 1);
            t.mu[i] = -1;
            primes.push_back(static_cast<u32>(i));
        }
        for (u32 p : primes) {
            if (p > t.spf[i] || i * p > limit) break;
            u64 ip = i * p;
            t.spf[ip] = p;
            if (p == t.spf[i]) {
                t.phi[ip] = static_cast<u32>(static_cast<u64>(t.phi[i]) * p);
                t.mu[ip] = 0;
            } else {
                t.phi[ip] = static_cast<u32>(static_cast<u64>(t.phi[i]) * (p - 1));
                t.mu[ip] = static_cast<i8>(-t.mu[i]);
            }
        }
    }

    // Lambda touches prime powers only.
    for (u32 p : primes) {
        double lp = std::log(static_cast<double>(p));
        for (u128 pk = p; pk <= limit; pk *= p) t.lambda[static_cast<u64>(pk)] = lp;
    }

    for (u64 n = 1; n <= limit; ++n) {
        t.phi_prefix[n] = t.phi_prefix[n - 1] + t.phi[n];
        t.cheb_fixed[n] = t.cheb_fixed[n - 1] +
                          static_cast<i64>(std::llround(t.lambda[n] * kChebFixedScale));
        t.pi_prefix[n] = t.pi_prefix[n - 1] + (t.is_prime(n) ? 1 : 0);
    }
    return t;
}

namespace {

constexpr char kCacheMagic[4] = {'X', 'N', 'S', '1'};
constexpr u32 kCacheVersion = 1;

template <typename T>
bool write_vec(std::FILE* f, const std::vector<T>& v) {
    return std::fwrite(v.data(), sizeof(T), v.size(), f) == v.size();
}

template <typename T>
bool read_vec(std::FILE* f, std::vector<T>& v, u64 count) {
    v.resize(count);
    return std::fread(v.data(), sizeof(T), count, f) == count;
}

}  // namespace

bool save_sieve(const SieveTables& t, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) return false;
    bool ok = std::fwrite(kCacheMagic, 1, 4, f) == 4;
    ok = ok && std::fwrite(&kCacheVersion, sizeof(kCacheVersion), 1, f) == 1;
    ok = ok && std::fwrite(&t.limit, sizeof(t.limit), 1, f) == 1;
    ok = ok && write_vec(f, t.lambda) && write_vec(f, t.phi) && write_vec(f, t.phi_prefix) &&
         write_vec(f, t.mu) && write_vec(f, t.spf) && write_vec(f, t.cheb_fixed) &&
         write_vec(f, t.pi_prefix);
    ok = std::fclose(f) == 0 && ok;
    return ok;
}

std::optional<SieveTables> load_sieve(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return std::nullopt;
    char magic[4];
    u32 version = 0;
    SieveTables t;
    bool ok = std::fread(magic, 1, 4, f) == 4 && std::memcmp(magic, kCacheMagic, 4) == 0;
    ok = ok && std::fread(&version, sizeof(version), 1, f) == 1 && version == kCacheVersion;
    ok = ok && std::fread(&t.limit, sizeof(t.limit), 1, f) == 1 && t.limit >= 1 &&
         t.limit <= kSieveLimitCap;
    if (ok) {
        u64 n = t.limit + 1;
        ok = read_vec(f, t.lambda, n) && read_vec(f, t.phi, n) && read_vec(f, t.phi_prefix, n) &&
             read_vec(f, t.mu, n) && read_vec(f, t.spf, n) && read_vec(f, t.cheb_fixed, n) &&
             read_vec(f, t.pi_prefix, n);
    }
    std::fclose(f);
    if (!ok) return std::nullopt;
    return t;
}

SieveTables build_sieve_cached(u64 limit, const std::string& cache_dir) {
    if (cache_dir.empty()) return build_sieve(limit);
    std::string path = cache_dir + "/xnseq_sieve_" + std::to_string(limit) + ".xns";
    if (auto cached = load_sieve(path); cached && cached->limit == limit) return std::move(*cached);
    SieveTables t = build_sieve(limit);
    save_sieve(t, path);  // best effort; cache is an optimization only
    return t;
}

}  // namespace xnseq
