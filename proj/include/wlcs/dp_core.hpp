#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wlcs/model.hpp"
#include "wlcs/rational.hpp"

namespace wlcs {

/// Best embedding of a fixed string into a weighted sequence.
/// positions are 1-based and strictly increasing; empty when prob = 0
/// (no embedding with positive probability exists) or the string is empty.
struct EmbedResult {
    Rational prob;
    std::vector<std::size_t> positions;
};

/// Maximum probability of embedding s (letter indices) into S, by the
/// row-by-row recurrence opt(i, j) = max{opt(i-1, j), opt(i-1, j-1)·p_i(s_j)}
/// with opt(i, 0) = 1 and opt(0, j) = 0 for j > 0. Value only.
Rational embed_prob(const WeightedSequence& S, const std::vector<std::size_t>& s);

/// embed_prob plus a realizing embedding. Tie-break: scanning left to right,
/// a position is skipped whenever skipping still attains the optimum, so each
/// matched position is as late as possible (the lexicographically largest
/// position tuple).
EmbedResult embed_dp(const WeightedSequence& S, const std::vector<std::size_t>& s);

/// Name-based convenience overloads; unknown letters rejected.
Rational embed_prob(const WeightedSequence& S, const std::vector<std::string>& s);
EmbedResult embed_dp(const WeightedSequence& S, const std::vector<std::string>& s);

struct SolveResult {
    std::size_t opt;
    Witness witness;
};

/// Exact optimum by string enumeration: for lengths descending from
/// min(|X|, |Y|, len_cap), try every string in alphabet order and stop at the
/// first feasible length (sound by feasibility monotonicity). The witness
/// string is the lexicographically smallest feasible one at that length;
/// its embeddings come from embed_dp.
///
/// Refuses with ResourceLimitError before starting once the projected number
/// of string checks (sum of K^len over attempted lengths) would exceed
/// 10^7. The projection, and hence refusal, is independent of `threads`;
/// worker partitioning by first letter merges to a bit-identical result.
SolveResult brute_force_opt(const Instance& inst, std::optional<std::size_t> len_cap = std::nullopt,
                            unsigned threads = 1);

/// Exact optimum by depth-first search over (X-prefix, Y-prefix, running
/// products), branching on skip-X, skip-Y, and match-with-letter; branches
/// whose products fall below the thresholds are cut. Value only.
/// Requires |X| + |Y| <= size_cap (default 16), else ResourceLimitError.
std::size_t dfs_oracle(const Instance& inst, std::size_t size_cap = 16);

/// Exact optimum by a bicriteria DP over prefix pairs (i, j), keeping every
/// non-dominated (len, px, py) triple with px >= a1 and py >= a2 (discarding
/// below-threshold states is sound: all factors are <= 1, products only
/// shrink). Dominance is >= on all three with one strict; one representative
/// is kept per equal value triple. Answer: the max-len entry at (|X|, |Y|),
/// ties broken by max px then max py.
///
/// Refuses with ResourceLimitError when more than 10^6 frontier entries
/// would be created in total.
SolveResult pareto_opt(const Instance& inst);

}  // namespace wlcs
