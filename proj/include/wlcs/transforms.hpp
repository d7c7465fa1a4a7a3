#pragma once

#include <cstddef>

#include "wlcs/model.hpp"
#include "wlcs/rational.hpp"

namespace wlcs {

/// A two-threshold instance rewritten to a single threshold, with enough
/// provenance to map witnesses back.
///
/// For a1 < a2 and a target length k: with m = a1/2 and a = m^k·a1, the
/// alphabet grows by '#', '$', '%'; X' scales X by m and gives '#' the
/// remainder, Y' scales Y by m and gives '$' the remainder; one position is
/// appended to each: X' puts probability 1 on '%', Y' splits a1/a2 on '%'
/// and the rest on '$'. The original instance has a length-k common
/// subsequence at (a1, a2) iff the rewritten one has a length-(k+1) common
/// subsequence at threshold a (both thresholds of inst_prime equal a).
struct UnifiedInstance {
    Instance inst_prime;
    std::size_t k_prime;   // k + 1, or k when the transform is the identity

    // provenance
    std::size_t original_k;
    Rational original_a1;
    Rational original_a2;
    Rational m;            // a1/2 after any swap; unused for the identity case
    bool swapped;          // X and Y traded places before transforming (a1 > a2)
    bool identity;         // a1 = a2: instance returned unchanged
};

/// Core construction; requires 0 < a1 < a2 <= 1 and k <= min(|X|, |Y|).
UnifiedInstance unify_thresholds(const Instance& inst, std::size_t k);

/// Total wrapper: swaps the roles of X and Y first when a1 > a2, returns the
/// instance unchanged (k' = k) when a1 = a2.
UnifiedInstance unify(const Instance& inst, std::size_t k);

/// The forward direction of the equivalence, made executable: a length-k
/// witness on the original instance becomes a length-(k+1) witness on
/// inst_prime by appending '%' at both final positions.
Witness forward_map_witness(const UnifiedInstance& uni, const Witness& w);

/// Drops the trailing '%' from a witness on inst_prime and undoes any swap,
/// yielding a witness on the original instance. The last letter must be '%'
/// (every feasible length-(k+1) witness ends there); anything else is a
/// contract violation.
Witness map_witness_back(const UnifiedInstance& uni, const Witness& w_prime);

/// The 4-position rounding-sensitivity fixture over {a, b} with thresholds
/// (1/8, 1/4): X rows (a:1)×3 then (a:1/8, b:7/8); Y rows (a:x, b:1-x),
/// (a:1/2, b:1/2)×2, (a:1). Its optimum is 4 exactly when x = 1 and 3 for
/// every x < 1, which is what breaks any solver that rounds. Requires
/// x in [0, 1].
Instance appendix_counterexample(const Rational& x);

}  // namespace wlcs
