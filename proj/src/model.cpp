#include "wlcs/model.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_map>

#include "wlcs/dp_core.hpp"
#include "wlcs/errors.hpp"

namespace wlcs {

namespace {

bool valid_letter_name(const std::string& name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw std::invalid_argument("alphabet must contain at least one letter");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (!valid_letter_name(letters_[i])) {
            throw std::invalid_argument("letter name " + std::to_string(i + 1) +
                                        " is empty or contains whitespace");
        }
        for (std::size_t j = i + 1; j < letters_.size(); ++j) {
            if (letters_[i] == letters_[j]) {
                throw std::invalid_argument("duplicate letter name '" + letters_[i] + "'");
            }
        }
    }
}

std::optional<std::size_t> Alphabet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] == name) return i;
    }
    return std::nullopt;
}

std::vector<std::string> validate(const WeightedSequence& seq) {
    std::vector<std::string> violations;
    const std::size_t K = seq.alphabet.size();
    for (std::size_t i = 0; i < seq.rows.size(); ++i) {
        const auto& row = seq.rows[i];
        if (row.size() != K) {
            violations.push_back("row " + std::to_string(i + 1) + " has " +
                                 std::to_string(row.size()) + " entries, expected " + std::to_string(K));
            continue;
        }
        // Entries are nonnegative by Rational's own invariant; check the sum.
        Rational sum = Rational::zero();
        for (const auto& p : row) sum = sum.add(p);
        if (!(sum == Rational::one())) {
            violations.push_back("row " + std::to_string(i + 1) + " sums to " +
                                 sum.canonical().str() + ", expected 1");
        }
    }
    return violations;
}

std::vector<std::string> validate(const Instance& inst) {
    std::vector<std::string> violations;
    if (!(inst.X.alphabet == inst.Y.alphabet)) violations.push_back("X and Y use different alphabets");
    for (const auto& v : validate(inst.X)) violations.push_back("X: " + v);
    for (const auto& v : validate(inst.Y)) violations.push_back("Y: " + v);
    for (const auto* t : {&inst.a1, &inst.a2}) {
        const char* name = t == &inst.a1 ? "a1" : "a2";
        if (t->is_zero() || Rational::one() < *t) {
            violations.push_back(std::string(name) + " = " + t->str() + " is outside (0, 1]");
        }
    }
    return violations;
}

void require_valid(const Instance& inst) {
    auto violations = validate(inst);
    if (!violations.empty()) throw ValidationError(std::move(violations));
}

Rational embedding_probability(const WeightedSequence& S, const std::vector<std::string>& s,
                               const std::vector<std::size_t>& pos) {
    if (s.size() != pos.size()) throw std::invalid_argument("string/position length mismatch");
    std::vector<Rational> factors;
    factors.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (pos[i] < 1 || pos[i] > S.length()) {
            throw std::invalid_argument("position " + std::to_string(pos[i]) + " out of range");
        }
        if (i > 0 && pos[i] <= pos[i - 1]) {
            throw std::invalid_argument("positions must be strictly increasing");
        }
        const auto letter = S.alphabet.index_of(s[i]);
        if (!letter) throw std::invalid_argument("unknown letter '" + s[i] + "'");
        factors.push_back(S.prob(pos[i], *letter));
    }
    return mul_many(factors);
}

std::vector<std::string> witness_shape_violations(const Instance& inst, const Witness& w) {
    std::vector<std::string> violations;
    if (w.s.size() != w.pi.size() || w.s.size() != w.rho.size()) {
        violations.push_back("lengths differ: |s| = " + std::to_string(w.s.size()) + ", |pi| = " +
                             std::to_string(w.pi.size()) + ", |rho| = " + std::to_string(w.rho.size()));
    }
    for (std::size_t i = 0; i < w.s.size(); ++i) {
        if (!inst.X.alphabet.index_of(w.s[i])) {
            violations.push_back("letter " + std::to_string(i + 1) + " ('" + w.s[i] +
                                 "') is not in the alphabet");
        }
    }
    auto check_positions = [&](const std::vector<std::size_t>& pos, std::size_t limit, const char* name) {
        for (std::size_t i = 0; i < pos.size(); ++i) {
            if (pos[i] < 1 || pos[i] > limit) {
                violations.push_back(std::string(name) + "[" + std::to_string(i + 1) + "] = " +
                                     std::to_string(pos[i]) + " out of range 1.." + std::to_string(limit));
            }
            if (i > 0 && pos[i] <= pos[i - 1]) {
                violations.push_back(std::string(name) + " is not strictly increasing at entry " +
                                     std::to_string(i + 1));
            }
        }
    };
    check_positions(w.pi, inst.X.length(), "pi");
    check_positions(w.rho, inst.Y.length(), "rho");
    return violations;
}

VerifyResult verify_witness(const Instance& inst, const Witness& w) {
    auto violations = witness_shape_violations(inst, w);
    if (!violations.empty()) throw WitnessShapeError(std::move(violations));
    Rational px = embedding_probability(inst.X, w.s, w.pi);
    Rational py = embedding_probability(inst.Y, w.s, w.rho);
    const bool feasible = inst.a1 <= px && inst.a2 <= py;
    return {std::move(px), std::move(py), feasible};
}

bool subs_membership(const WeightedSequence& S, const Rational& a, const std::vector<std::string>& s) {
    if (a.is_zero() || Rational::one() < a) {
        throw std::invalid_argument("threshold must lie in (0, 1]");
    }
    std::vector<std::size_t> indices;
    indices.reserve(s.size());
    for (const auto& name : s) {
        const auto idx = S.alphabet.index_of(name);
        if (!idx) throw std::invalid_argument("unknown letter '" + name + "'");
        indices.push_back(*idx);
    }
    return a <= embed_prob(S, indices);
}

bool structurally_equal(const Rational& a, const Rational& b) {
    return a.num() == b.num() && a.den() == b.den();
}

bool structurally_equal(const WeightedSequence& a, const WeightedSequence& b) {
    if (!(a.alphabet == b.alphabet) || a.rows.size() != b.rows.size()) return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        if (a.rows[i].size() != b.rows[i].size()) return false;
        for (std::size_t j = 0; j < a.rows[i].size(); ++j) {
            if (!structurally_equal(a.rows[i][j], b.rows[i][j])) return false;
        }
    }
    return true;
}

bool structurally_equal(const Instance& a, const Instance& b) {
    return structurally_equal(a.X, b.X) && structurally_equal(a.Y, b.Y) &&
           structurally_equal(a.a1, b.a1) && structurally_equal(a.a2, b.a2) && a.k == b.k;
}

}  // namespace wlcs
