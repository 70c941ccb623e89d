#include "xnseq/floorseq.hpp"

#include <algorithm>

namespace xnseq {

std::vector<QuotientBlock> quotient_blocks(u64 x) {
    std::vector<QuotientBlock> blocks;
    blocks.reserve(2 * isqrt(x) + 2);
    for_each_quotient_block(x, [&](const QuotientBlock& b) { blocks.push_back(b); });
    return blocks;
}

bool sx_member(u64 x, u64 n) {
    if (n < 1 || n > x) throw std::out_of_range("sx_member: need 1 <= n <= x");
    return x / n - x / (n + 1) > 0;
}

std::vector<u64> sx_members(u64 x) {
    std::vector<u64> members;
    members.reserve(2 * isqrt(x) + 2);
    for_each_quotient_block(x, [&](const QuotientBlock& b) { members.push_back(b.value); });
    std::reverse(members.begin(), members.end());
    return members;
}

u64 sx_cardinality(u64 x) {
    u64 count = 0;
    for_each_quotient_block(x, [&](const QuotientBlock&) { ++count; });
    return count;
}

}  // namespace xnseq
