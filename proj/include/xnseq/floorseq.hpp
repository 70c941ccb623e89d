#pragma once

#include <vector>

#include "xnseq/common.hpp"

namespace xnseq {

// Maximal interval [n_lo, n_hi] on which [x/n] is constant.  The block
// lists produced below partition [1, x] and have at most 2*sqrt(x) + 2
// entries, which is what makes every downstream sum O(sqrt x).
struct QuotientBlock {
    u64 n_lo;
    u64 n_hi;
    u64 value;  // = [x/n] for all n in [n_lo, n_hi]

    u64 length() const { return n_hi - n_lo + 1; }
};

// All quotient blocks of x, ordered by n_lo ascending (values strictly
// decreasing).  The iteration uses the integer jump n <- [x/[x/n]] + 1;
// no floating point is involved.
std::vector<QuotientBlock> quotient_blocks(u64 x);

// Visits each block in ascending n_lo order without materializing the list.
template <typename F>
void for_each_quotient_block(u64 x, F&& visit) {
    if (x < 1) throw std::invalid_argument("quotient blocks: x must be >= 1");
    if (x > kMaxX) throw guard_error("quotient blocks: x exceeds the 2^40 cap");
    u64 n = 1;
    while (n <= x) {
        u64 v = x / n;
        u64 hi = x / v;
        visit(QuotientBlock{n, hi, v});
        n = hi + 1;
    }
}

// Membership test n in S(x) = {[x/m] : 1 <= m <= x}.  Uses the criterion
// [x/n] - [x/(n+1)] > 0, valid precisely for 1 <= n <= x.
bool sx_member(u64 x, u64 n);

// The distinct values of [x/n], sorted ascending.  O(sqrt x).
std::vector<u64> sx_members(u64 x);

// #S(x) without materializing the set (block count).  O(sqrt x).
u64 sx_cardinality(u64 x);

}  // namespace xnseq
