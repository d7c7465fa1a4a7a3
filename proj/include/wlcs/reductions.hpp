#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wlcs/model.hpp"
#include "wlcs/rational.hpp"

namespace wlcs {

/// Choose a subset of L (of size exactly k when k is set) whose product is P.
struct SubsetProductInstance {
    std::vector<BigInt> L;
    BigInt P;
    std::optional<std::size_t> k;
};

/// Simple undirected graph on vertices 1..n.
struct Graph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Throws ValidationError listing self-loops, duplicate edges, and
/// out-of-range endpoints.
void validate(const Graph& g);

/// Three literals per clause; positive index = variable, negative = negation.
/// Sparse by construction: a variable may occur in at most max_occurrences
/// clauses (checked by validate below; occurrences count multiplicity).
struct Sat13Formula {
    std::size_t num_vars = 0;
    std::vector<std::array<int, 3>> clauses;
};

void validate(const Sat13Formula& f, std::size_t max_occurrences = 3);

/// First n primes, by a sieve of Eratosthenes. The initial sieve bound
/// over-approximates n(ln n + ln ln n) using bit lengths (10·ln x < 7·bitlen(x) + 10)
/// and doubles on shortfall, so no real arithmetic is involved.
std::vector<std::uint64_t> sieve_primes(std::size_t n);

/// Subset Product -> WLCS over {A, B}, decision target n+2.
///
/// Per element: X gives A probability L_i/(1+L_i) and B the rest; Y gives A
/// probability 1/(1+L_i) and B the rest. Appended position n+1 forces A in X
/// (probability 1) while Y gives A only prod 1/L_i; position n+2 mirrors that
/// with X giving A probability 1/P². Both thresholds are prod 1/(1+L_i) / P.
/// A length-(n+2) common subsequence exists iff a subset of L (the positions
/// where the string says A) multiplies to exactly P.
Instance subset_product_to_wlcs(const SubsetProductInstance& sp);

/// Perfect Code -> k-sized Subset Product: vertex v gets the product of the
/// primes of its closed neighborhood N[v]; the target is the product of all
/// n vertex primes. A k-subset multiplies to P iff the matching k vertices
/// dominate every vertex exactly once.
SubsetProductInstance perfect_code_to_ksubset(const Graph& g, std::size_t k);

/// k-sized Subset Product -> WLCS, decision target k+1, via a diagonal
/// instance over letters 1..n+3: letter i is the only proper letter with
/// positive probability at position i (X: L_i/M, Y: 1/(M·L_i), with
/// M = m^{k+1} for m = max L); letters n+2 and n+3 absorb the X and Y row
/// remainders; appended position n+1 forces letter n+1 (X: 1/P², Y: 1).
/// Both thresholds are 1/(P·M^k).
///
/// Requires m^k >= P: when m^k < P no k-subset can reach P (even the k
/// largest numbers fall short), so there is nothing to encode and the
/// construction's probability bookkeeping breaks; such inputs are rejected.
Instance ksubset_to_wlcs(const SubsetProductInstance& sp);

/// Sparse 1-in-3 SAT -> k-sized Subset Product. Variables are split into k
/// blocks of ceil(num_vars/k); every (block b, assignment of its variables)
/// yields the identifier p_b · prod_i p_{k+i}^{j_i}, where j_i counts the
/// literals of clause i over block-b variables that the assignment makes
/// true. The target prod_{i=1}^{k+M} p_i forces one assignment per block,
/// jointly making exactly one literal true in every clause.
/// Caps: num_vars <= 24 and 2^{ceil(num_vars/k)} <= 4096.
SubsetProductInstance sat13_to_ksubset(const Sat13Formula& f, std::size_t k);

/// Brute-force source-problem oracles (test equipment; exponential search
/// behind hard caps).
bool subset_product_exists(const SubsetProductInstance& sp);  // n <= 20
bool perfect_code_exists(const Graph& g, std::size_t k);      // n <= 12
bool sat13_exists(const Sat13Formula& f);                     // num_vars <= 20

}  // namespace wlcs
