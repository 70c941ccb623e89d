#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "xnseq/common.hpp"

namespace xnseq {

using Rational = mpq_class;

// Exponent pair (k, l) with 0 <= k <= 1/2 <= l <= 1, kept in exact
// (always reduced) rational arithmetic, together with the A/B word that
// produced it from the seed (0, 1).  The most recently applied process
// is the leftmost letter, so apply_word reads its word right to left.
struct ExponentPair {
    Rational k;
    Rational l;
    std::string word;

    ExponentPair(Rational k_, Rational l_, std::string word_ = "");

    bool same_pair(const ExponentPair& other) const { return k == other.k && l == other.l; }
};

// The trivial pair (0, 1): the seed of the A/B semigroup.
ExponentPair trivial_pair();

// A(k, l) = (k/(2k+2), (k+l+1)/(2k+2))
ExponentPair process_A(const ExponentPair& p);

// B(k, l) = (l - 1/2, k + 1/2); an involution on pairs.
ExponentPair process_B(const ExponentPair& p);

// Applies `word` (over {A, B}) to `seed`, rightmost letter first, so
// that e.g. "BAAAB" realizes BA^3B(seed).
ExponentPair apply_word(const std::string& word, const ExponentPair& seed);

// The error exponent (k + l)/(2k + 2), exact.
Rational objective(const ExponentPair& p);

// Decimal barrier under which no A/B-generated objective can fall.
inline const Rational& objective_lower_barrier() {
    static const Rational barrier(3290213568L, 10000000000L);
    return barrier;
}

struct SearchResult {
    ExponentPair best;
    Rational objective;
    std::vector<ExponentPair> frontier;  // all distinct pairs explored
};

inline constexpr u64 kMaxSearchDepth = 40;

// The deduplicated state space still grows like phi^depth (about 0.5M
// distinct pairs at depth 28); past this many explored pairs the search
// aborts rather than exhausting memory.
inline constexpr u64 kMaxSearchStates = 4'000'000;

// Breadth-first minimization of the objective over all words of length
// <= max_depth, deduplicating identical (k, l) pairs.  Ties are broken
// by shortest word, then lexicographically.  Deterministic.
SearchResult search_min_objective(u64 max_depth);

}  // namespace xnseq
