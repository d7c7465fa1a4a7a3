#include "wlcs/transforms.hpp"

#include <stdexcept>
#include <utility>

namespace wlcs {

namespace {

const std::string kHash = "#";
const std::string kDollar = "$";
const std::string kPercent = "%";

Rational div_leq(const Rational& num, const Rational& den) {
    // num/den for num <= den, so the result stays a probability.
    return Rational(num.num() * den.den(), num.den() * den.num());
}

}  // namespace

UnifiedInstance unify_thresholds(const Instance& inst, std::size_t k) {
    if (!(inst.a1 < inst.a2)) throw std::invalid_argument("unify_thresholds requires a1 < a2");
    if (inst.a1.is_zero() || Rational::one() < inst.a2) {
        throw std::invalid_argument("thresholds must lie in (0, 1]");
    }
    if (k > std::min(inst.X.length(), inst.Y.length())) {
        throw std::invalid_argument("k exceeds min(|X|, |Y|)");
    }

    const Rational m(inst.a1.num(), inst.a1.den() * 2);
    const Rational a = m.pow(static_cast<std::uint64_t>(k)).mul(inst.a1);

    std::vector<std::string> letters = inst.X.alphabet.letters();
    const std::size_t K = letters.size();
    letters.push_back(kHash);
    letters.push_back(kDollar);
    letters.push_back(kPercent);
    Alphabet ext(std::move(letters));

    // indexes into the extended alphabet
    const std::size_t hash = K, dollar = K + 1, percent = K + 2;

    auto scale_rows = [&](const WeightedSequence& S, std::size_t filler) {
        std::vector<std::vector<Rational>> rows;
        rows.reserve(S.length() + 1);
        for (const auto& row : S.rows) {
            std::vector<Rational> r(K + 3, Rational::zero());
            for (std::size_t t = 0; t < K; ++t) r[t] = m.mul(row[t]);
            r[filler] = m.one_minus();  // rescaled rows sum to m, the filler tops up to 1
            rows.push_back(std::move(r));
        }
        return rows;
    };

    auto x_rows = scale_rows(inst.X, hash);
    {
        std::vector<Rational> last(K + 3, Rational::zero());
        last[percent] = Rational::one();
        x_rows.push_back(std::move(last));
    }

    auto y_rows = scale_rows(inst.Y, dollar);
    {
        const Rational ratio = div_leq(inst.a1, inst.a2);
        std::vector<Rational> last(K + 3, Rational::zero());
        last[dollar] = ratio.one_minus();
        last[percent] = ratio;
        y_rows.push_back(std::move(last));
    }

    Instance prime{WeightedSequence{ext, std::move(x_rows)}, WeightedSequence{ext, std::move(y_rows)},
                   a, a, k + 1};
    return {std::move(prime), k + 1, k, inst.a1, inst.a2, m, false, false};
}

UnifiedInstance unify(const Instance& inst, std::size_t k) {
    if (inst.a1 == inst.a2) {
        Instance same = inst;
        same.k = k;
        return {std::move(same), k, k, inst.a1, inst.a2, Rational::zero(), false, true};
    }
    if (inst.a2 < inst.a1) {
        Instance flipped{inst.Y, inst.X, inst.a2, inst.a1, inst.k};
        UnifiedInstance uni = unify_thresholds(flipped, k);
        uni.swapped = true;
        uni.original_a1 = inst.a1;
        uni.original_a2 = inst.a2;
        return uni;
    }
    return unify_thresholds(inst, k);
}

Witness forward_map_witness(const UnifiedInstance& uni, const Witness& w) {
    if (uni.identity) return w;
    Witness out = uni.swapped ? Witness{w.s, w.rho, w.pi} : w;
    out.s.push_back(kPercent);
    out.pi.push_back(uni.inst_prime.X.length());
    out.rho.push_back(uni.inst_prime.Y.length());
    return out;
}

Witness map_witness_back(const UnifiedInstance& uni, const Witness& w_prime) {
    if (uni.identity) return w_prime;
    if (w_prime.s.empty() || w_prime.s.back() != kPercent) {
        throw std::invalid_argument("unified witness must end in '%'");
    }
    Witness out = w_prime;
    out.s.pop_back();
    out.pi.pop_back();
    out.rho.pop_back();
    if (uni.swapped) std::swap(out.pi, out.rho);
    return out;
}

Instance appendix_counterexample(const Rational& x) {
    if (Rational::one() < x) throw std::invalid_argument("x must lie in [0, 1]");
    Alphabet ab({"a", "b"});
    std::vector<std::vector<Rational>> x_rows{
        {Rational::one(), Rational::zero()},
        {Rational::one(), Rational::zero()},
        {Rational::one(), Rational::zero()},
        {Rational(1ul, 8ul), Rational(7ul, 8ul)},
    };
    std::vector<std::vector<Rational>> y_rows{
        {x, x.one_minus()},
        {Rational(1ul, 2ul), Rational(1ul, 2ul)},
        {Rational(1ul, 2ul), Rational(1ul, 2ul)},
        {Rational::one(), Rational::zero()},
    };
    return {WeightedSequence{ab, std::move(x_rows)}, WeightedSequence{ab, std::move(y_rows)},
            Rational(1ul, 8ul), Rational(1ul, 4ul), std::nullopt};
}

}  // namespace wlcs
