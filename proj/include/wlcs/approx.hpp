#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wlcs/model.hpp"
#include "wlcs/rational.hpp"

namespace wlcs {

/// Minimal c in {0..N} with y^N >= a2^c, found by binary search with exact
/// integer powering (the predicate is monotone in c since a2 <= 1); nullopt
/// ("unusable") when no such c exists, which happens exactly when y < a2.
/// Requires y in [0, 1], a2 in (0, 1], N >= 1.
std::optional<std::size_t> quantize_cost(const Rational& y, const Rational& a2, std::size_t N);

/// Quantized cost of every (Y position, letter) pair at resolution N.
class CostTable {
public:
    CostTable(const WeightedSequence& Y, const Rational& a2, std::size_t N);

    std::size_t resolution() const { return N_; }

    /// nullopt = unusable (that probability is below a2).
    std::optional<std::size_t> cost(std::size_t pos1, std::size_t letter) const {
        return table_[pos1 - 1][letter];
    }

private:
    std::size_t N_;
    std::vector<std::vector<std::optional<std::size_t>>> table_;
};

struct PtasResult {
    std::size_t d;
    Witness witness;
};

/// Feasible solution of length d with OPT <= d + 1.
///
/// Let n0 = min(|X|, |Y|) and N = n0². The DP tracks, per state
/// (i, j, len, C), the maximum exact X-product over common strings of the
/// prefixes with total quantized Y-cost at most C; a match contributes its
/// exact X-probability and its CostTable cost. d is the largest len with
/// V(|X|, |Y|, len, N) >= a1.
///
/// Soundness: C <= N certifies P_Y >= a2^{C/N} >= a2, and P_X is tracked
/// exactly. Completeness (d >= OPT - 1): write each Y-factor of an optimal
/// length-L string as a2^g, g in [0, 1] summing to <= 1; its costs
/// c = ceil(N·g) total below N + L. If that is <= N the DP finds length L;
/// otherwise dropping the letter with the largest cost (> N/L >= n0 >= L)
/// brings the rest under N, so the DP finds length L - 1.
PtasResult ptas_core(const Instance& inst);

struct ApproxResult {
    std::size_t length;
    Witness witness;
    bool exact;               // true when length = OPT is proven
    std::uint64_t enumerated; // strings tried by the exhaustive branch
};

/// (1 - eps)-approximation: run ptas_core for d; if d + 1 >= 1/eps (decided
/// exactly as (d+1)·num_eps >= den_eps) the d/(d+1) contract already gives
/// the ratio, return d with exact=false. Otherwise settle OPT by trying all
/// strings of length d+1 (at most |Sigma|^{d+1} <= |Sigma|^{ceil(1/eps)});
/// exact=true either way. Requires eps in (0, 1].
ApproxResult eptas(const Instance& inst, const Rational& eps, unsigned threads = 1);

}  // namespace wlcs
