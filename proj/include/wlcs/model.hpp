#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wlcs/rational.hpp"

namespace wlcs {

/// Ordered set of distinct letter names. Names are non-empty tokens without
/// whitespace; row order everywhere follows this order.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> letters);

    std::size_t size() const { return letters_.size(); }
    const std::string& letter(std::size_t index) const { return letters_[index]; }
    const std::vector<std::string>& letters() const { return letters_; }

    std::optional<std::size_t> index_of(const std::string& name) const;

    bool operator==(const Alphabet& other) const { return letters_ == other.letters_; }

private:
    std::vector<std::string> letters_;
};

/// A sequence of probability rows: row i assigns each letter an exact
/// probability, summing to 1. Rows are stored in alphabet order.
struct WeightedSequence {
    Alphabet alphabet;
    std::vector<std::vector<Rational>> rows;

    std::size_t length() const { return rows.size(); }

    /// p_i(letter), 1-based position.
    const Rational& prob(std::size_t pos1, std::size_t letter_index) const {
        return rows[pos1 - 1][letter_index];
    }
};

struct Instance {
    WeightedSequence X;
    WeightedSequence Y;
    Rational a1;
    Rational a2;
    std::optional<std::size_t> k;  // decision target, if the file carries one
};

/// A common string with its two embeddings. Positions are 1-based and
/// strictly increasing, matching the file format.
struct Witness {
    std::vector<std::string> s;
    std::vector<std::size_t> pi;
    std::vector<std::size_t> rho;

    std::size_t length() const { return s.size(); }
};

struct VerifyResult {
    Rational px;
    Rational py;
    bool feasible;
};

/// Every violated row constraint (sum != 1 or a negative entry), by 1-based
/// row index. Empty means valid.
std::vector<std::string> validate(const WeightedSequence& seq);

/// All violations across both sequences, the thresholds (must lie in (0, 1]),
/// and the shared-alphabet requirement.
std::vector<std::string> validate(const Instance& inst);

/// Throws ValidationError when validate(inst) is non-empty.
void require_valid(const Instance& inst);

/// Product of p_{pos_k}(s_k) over the embedding, via mul_many.
/// Positions are 1-based, strictly increasing, in range; |s| = |pos|.
Rational embedding_probability(const WeightedSequence& S, const std::vector<std::string>& s,
                               const std::vector<std::size_t>& pos);

/// Shape violations of w against inst (lengths, ranges, monotonicity,
/// unknown letters). Empty means shape-valid.
std::vector<std::string> witness_shape_violations(const Instance& inst, const Witness& w);

/// Exact certificate check. Throws WitnessShapeError on shape violations;
/// feasible iff px >= a1 and py >= a2.
VerifyResult verify_witness(const Instance& inst, const Witness& w);

/// s in SUBS(S, a): some embedding of s into S has probability >= a.
/// Requires a in (0, 1]; unknown letters rejected.
bool subs_membership(const WeightedSequence& S, const Rational& a, const std::vector<std::string>& s);

/// Bit-exact structural equality (stored numerators/denominators, not just
/// values); what the parse/serialize round-trip preserves.
bool structurally_equal(const Rational& a, const Rational& b);
bool structurally_equal(const WeightedSequence& a, const WeightedSequence& b);
bool structurally_equal(const Instance& a, const Instance& b);

}  // namespace wlcs
