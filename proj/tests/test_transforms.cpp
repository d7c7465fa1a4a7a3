#include <doctest.h>

#include <vector>

#include "corpus.hpp"
#include "wlcs/dp_core.hpp"
#include "wlcs/errors.hpp"
#include "wlcs/model.hpp"
#include "wlcs/prng.hpp"
#include "wlcs/transforms.hpp"

using wlcs::Instance;
using wlcs::Rational;
using wlcs::Witness;

namespace {

Rational R(unsigned long num, unsigned long den) { return Rational(num, den); }

// Restrict a witness to its first k letters; monotonicity keeps it feasible.
Witness truncate(const Witness& w, std::size_t k) {
    Witness out;
    out.s.assign(w.s.begin(), w.s.begin() + static_cast<std::ptrdiff_t>(k));
    out.pi.assign(w.pi.begin(), w.pi.begin() + static_cast<std::ptrdiff_t>(k));
    out.rho.assign(w.rho.begin(), w.rho.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
}

}  // namespace

TEST_SUITE("transforms") {

TEST_CASE("fixture family structure") {
    const Instance inst = wlcs::appendix_counterexample(R(81, 100));
    CHECK(inst.X.length() == 4);
    CHECK(inst.Y.length() == 4);
    CHECK(inst.a1 == R(1, 8));
    CHECK(inst.a2 == R(1, 4));
    CHECK(inst.Y.rows[0][0] == R(81, 100));
    CHECK(inst.Y.rows[0][1] == R(19, 100));
    CHECK(wlcs::validate(inst).empty());
    CHECK_THROWS_AS(wlcs::appendix_counterexample(R(101, 100)), std::invalid_argument);
}

TEST_CASE("fixture optima at the three pinned points") {
    CHECK(wlcs::pareto_opt(wlcs::appendix_counterexample(Rational::one())).opt == 4);
    CHECK(wlcs::pareto_opt(wlcs::appendix_counterexample(R(81, 100))).opt == 3);
    CHECK(wlcs::pareto_opt(wlcs::appendix_counterexample(Rational())).opt == 3);
}

TEST_CASE("unify_thresholds builds the documented shape") {
    const Instance inst = wlcs::appendix_counterexample(Rational::one());
    const auto uni = wlcs::unify_thresholds(inst, 4);

    CHECK(uni.m == R(1, 16));
    CHECK(uni.k_prime == 5);
    CHECK(uni.original_k == 4);
    // a = m^k * a1 = (1/16)^4 / 8
    CHECK(uni.inst_prime.a1 == R(1, 16).pow(4).mul(R(1, 8)));
    CHECK(uni.inst_prime.a1 == uni.inst_prime.a2);
    CHECK(uni.inst_prime.k == 5);

    const auto& xp = uni.inst_prime.X;
    const auto& yp = uni.inst_prime.Y;
    CHECK(xp.length() == 5);
    CHECK(yp.length() == 5);
    CHECK(xp.alphabet.size() == 5);  // a b # $ %
    CHECK(wlcs::validate(uni.inst_prime).empty());

    const auto idx = [&](const char* name) { return *xp.alphabet.index_of(name); };
    // Scaled originals: X'[1](a) = 1 * 1/16.
    CHECK(xp.prob(1, idx("a")) == Rational::one().mul(R(1, 16)));
    // '#' never positive in Y', '$' never positive in X', '%' only at the end.
    for (std::size_t p = 1; p <= 5; ++p) {
        CHECK(yp.prob(p, idx("#")).is_zero());
        CHECK(xp.prob(p, idx("$")).is_zero());
        if (p < 5) {
            CHECK(xp.prob(p, idx("%")).is_zero());
            CHECK(yp.prob(p, idx("%")).is_zero());
        }
    }
    CHECK(xp.prob(5, idx("%")) == Rational::one());
    // p_Y'[end]('%') = a1/a2 = 1/2 by value.
    CHECK(yp.prob(5, idx("%")) == R(1, 2));
}

TEST_CASE("unify rejects out-of-contract inputs") {
    const Instance inst = wlcs::appendix_counterexample(Rational::one());
    CHECK_THROWS_AS(wlcs::unify_thresholds(inst, 5), std::invalid_argument);  // k > min length
    Instance swapped = inst;
    std::swap(swapped.a1, swapped.a2);
    CHECK_THROWS_AS(wlcs::unify_thresholds(swapped, 2), std::invalid_argument);  // a1 > a2
}

TEST_CASE("fixture equivalence at k = 4 tracks x") {
    // x = 1: original has a length-4 solution, so the unified instance has a
    // length-5 one. x = 81/100: neither.
    for (const bool solvable : {true, false}) {
        const Instance inst =
            wlcs::appendix_counterexample(solvable ? Rational::one() : R(81, 100));
        const auto uni = wlcs::unify_thresholds(inst, 4);
        const auto opt_prime = wlcs::pareto_opt(uni.inst_prime).opt;
        CHECK((wlcs::pareto_opt(inst).opt >= 4) == solvable);
        CHECK((opt_prime >= 5) == solvable);
    }
}

TEST_CASE("k = 0 unification is always solvable at length 1") {
    wlcs::SplitMix64 rng(0x90b1);
    for (int round = 0; round < 20; ++round) {
        auto inst = corpus::random_instance(rng, {.max_len = 4, .max_letters = 2});
        if (!(inst.a1 < inst.a2)) continue;
        const auto uni = wlcs::unify_thresholds(inst, 0);
        CHECK(uni.k_prime == 1);
        CHECK(wlcs::pareto_opt(uni.inst_prime).opt >= 1);
    }
}

TEST_CASE("decision equivalence on a random corpus, all k") {
    wlcs::SplitMix64 rng(0xe801);
    int tested = 0;
    for (int round = 0; tested < 40 && round < 200; ++round) {
        auto inst = corpus::random_instance(rng, {.max_len = 5, .max_letters = 3});
        if (!(inst.a1 < inst.a2)) std::swap(inst.a1, inst.a2);
        if (!(inst.a1 < inst.a2)) continue;  // equal draws
        const std::size_t opt = wlcs::pareto_opt(inst).opt;
        const std::size_t kmax = std::min(inst.X.length(), inst.Y.length());
        for (std::size_t k = 0; k <= kmax; ++k) {
            const auto uni = wlcs::unify_thresholds(inst, k);
            const bool original_yes = opt >= k;
            const bool unified_yes = wlcs::pareto_opt(uni.inst_prime).opt >= uni.k_prime;
            CHECK(original_yes == unified_yes);
        }
        ++tested;
    }
    CHECK(tested == 40);
}

TEST_CASE("witness forward and back mapping round-trips") {
    wlcs::SplitMix64 rng(0x3a9d);
    int tested = 0;
    for (int round = 0; tested < 30 && round < 200; ++round) {
        auto inst = corpus::random_instance(rng, {.max_len = 5, .max_letters = 3});
        if (!(inst.a1 < inst.a2)) std::swap(inst.a1, inst.a2);
        if (!(inst.a1 < inst.a2)) continue;
        const auto solved = wlcs::pareto_opt(inst);
        if (solved.opt == 0) continue;
        const std::size_t k = 1 + rng.below(solved.opt);
        const auto w = truncate(solved.witness, k);
        REQUIRE(wlcs::verify_witness(inst, w).feasible);

        const auto uni = wlcs::unify_thresholds(inst, k);
        const auto w_prime = wlcs::forward_map_witness(uni, w);
        CHECK(w_prime.length() == k + 1);
        CHECK(w_prime.s.back() == "%");
        CHECK(wlcs::verify_witness(uni.inst_prime, w_prime).feasible);

        const auto back = wlcs::map_witness_back(uni, w_prime);
        CHECK(back.length() == k);
        CHECK(back.s == w.s);
        CHECK(back.pi == w.pi);
        CHECK(back.rho == w.rho);
        CHECK(wlcs::verify_witness(inst, back).feasible);
        ++tested;
    }
    CHECK(tested == 30);
}

TEST_CASE("map_witness_back rejects a witness not ending in the marker") {
    const Instance inst = wlcs::appendix_counterexample(Rational::one());
    const auto uni = wlcs::unify_thresholds(inst, 2);
    const Witness w_prime{{"a", "a"}, {1, 2}, {1, 2}};
    CHECK_THROWS_AS(wlcs::map_witness_back(uni, w_prime), std::invalid_argument);
}

TEST_CASE("total wrapper handles every threshold ordering") {
    const Instance base = wlcs::appendix_counterexample(Rational::one());

    SUBCASE("identity when thresholds match") {
        Instance same = base;
        same.a2 = same.a1;
        const auto uni = wlcs::unify(same, 3);
        CHECK(uni.identity);
        CHECK(uni.k_prime == 3);
        CHECK(wlcs::structurally_equal(uni.inst_prime.X, same.X));
        CHECK(uni.inst_prime.k == 3);
    }

    SUBCASE("swap when a1 > a2") {
        Instance flipped = base;
        std::swap(flipped.a1, flipped.a2);  // now a1 = 1/4 > a2 = 1/8
        std::swap(flipped.X, flipped.Y);    // keep the same underlying problem
        const auto uni = wlcs::unify(flipped, 4);
        CHECK(uni.swapped);
        // Same unified problem as the unswapped instance.
        const auto direct = wlcs::unify_thresholds(base, 4);
        CHECK(wlcs::structurally_equal(uni.inst_prime, direct.inst_prime));

        // Witnesses map back with pi/rho restored to the caller's orientation.
        const Witness w{{"a", "a", "a", "a"}, {1, 2, 3, 4}, {1, 2, 3, 4}};
        const auto w_prime = wlcs::forward_map_witness(uni, w);
        const auto back = wlcs::map_witness_back(uni, w_prime);
        CHECK(wlcs::verify_witness(flipped, back).feasible);
    }

    SUBCASE("plain delegation when a1 < a2") {
        const auto uni = wlcs::unify(base, 4);
        CHECK(!uni.swapped);
        CHECK(!uni.identity);
        CHECK(uni.k_prime == 5);
    }
}

}  // TEST_SUITE
