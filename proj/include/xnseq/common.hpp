#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace xnseq {

using u8 = std::uint8_t;
using i8 = std::int8_t;
using u32 = std::uint32_t;
using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Hard cap on x: keeps x*(x/n)-style intermediates comfortably inside
// 128-bit scratch and all counts inside 64 bits.
inline constexpr u64 kMaxX = u64{1} << 40;

// Thrown when a documented cap (brute-force limit, sieve memory,
// search depth, parameter range) is exceeded.  CLI maps this to exit 3.
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

inline u64 floor_div(u64 x, u64 n) {
    if (n == 0) throw std::invalid_argument("floor_div: n must be >= 1");
    return x / n;
}

// Exact integer square root: largest r with r*r <= n.
inline u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && (u128)r * r > n) --r;
    while ((u128)(r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Largest n with q*n^2 <= x (i.e. n <= sqrt(x/q) as reals); 0 if none.
inline u64 isqrt_ratio(u64 x, u64 q) {
    if (q == 0) throw std::invalid_argument("isqrt_ratio: q must be >= 1");
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(x) / static_cast<double>(q)));
    while (r > 0 && (u128)q * r * r > x) --r;
    while ((u128)q * (r + 1) * (r + 1) <= x) ++r;
    return r;
}

// Sawtooth psi(t) = {t} - 1/2.  Output in [-1/2, 1/2).
inline double sawtooth(double t) {
    return t - std::floor(t) - 0.5;
}

// Function-object form for callers that want to pass psi around.
struct Sawtooth {
    double operator()(double t) const { return sawtooth(t); }
};

// Neumaier-compensated accumulator.  Deterministic for a fixed order of
// add() calls, which is what the byte-identical-output contract needs.
class KahanSum {
public:
    void add(double v) {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace xnseq
