#include "xnseq/expair.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace xnseq {

namespace {

const Rational kHalf(1, 2);
const Rational kOne(1);
const Rational kZero(0);

std::string pair_key(const Rational& k, const Rational& l) {
    return k.get_str() + "," + l.get_str();
}

}  // namespace

ExponentPair::ExponentPair(Rational k_, Rational l_, std::string word_)
    : k(std::move(k_)), l(std::move(l_)), word(std::move(word_)) {
    k.canonicalize();
    l.canonicalize();
    if (k < kZero || k > kHalf || l < kHalf || l > kOne)
        throw std::invalid_argument("ExponentPair: need 0 <= k <= 1/2 <= l <= 1");
}

ExponentPair trivial_pair() { return ExponentPair(kZero, kOne, ""); }

ExponentPair process_A(const ExponentPair& p) {
    Rational den = 2 * p.k + 2;
    return ExponentPair(p.k / den, (p.k + p.l + 1) / den, "A" + p.word);
}

ExponentPair process_B(const ExponentPair& p) {
    return ExponentPair(p.l - kHalf, p.k + kHalf, "B" + p.word);
}

ExponentPair apply_word(const std::string& word, const ExponentPair& seed) {
    ExponentPair current = seed;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        switch (*it) {
            case 'A': current = process_A(current); break;
            case 'B': current = process_B(current); break;
            default: throw std::invalid_argument("apply_word: word must be over {A, B}");
        }
    }
    return current;
}

Rational objective(const ExponentPair& p) {
    Rational value = (p.k + p.l) / (2 * p.k + 2);
    value.canonicalize();
    return value;
}

SearchResult search_min_objective(u64 max_depth) {
    if (max_depth > kMaxSearchDepth) throw guard_error("search_min_objective: depth exceeds 40");

    ExponentPair seed = trivial_pair();
    std::unordered_set<std::string> seen{pair_key(seed.k, seed.l)};

    SearchResult result{seed, objective(seed), {seed}};
    std::vector<ExponentPair> level{seed};

    auto consider = [&](const ExponentPair& p) {
        Rational obj = objective(p);
        // Levels are visited shortest-word first and kept lexicographically
        // sorted (A pass before B pass below), so strict improvement is the
        // whole tie-break rule.
        if (obj < result.objective) {
            result.best = p;
            result.objective = obj;
        }
    };

    for (u64 depth = 1; depth <= max_depth && !level.empty(); ++depth) {
        std::vector<ExponentPair> next;
        next.reserve(2 * level.size());
        for (char step : {'A', 'B'}) {
            for (const ExponentPair& p : level) {
                ExponentPair child = (step == 'A') ? process_A(p) : process_B(p);
                if (!seen.insert(pair_key(child.k, child.l)).second) continue;
                if (seen.size() > kMaxSearchStates)
                    throw guard_error("search_min_objective: state space exceeds memory guard");
                consider(child);
                result.frontier.push_back(child);
                next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }
    return result;
}

}  // namespace xnseq
