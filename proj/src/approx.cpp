#include "wlcs/approx.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "wlcs/dp_core.hpp"
#include "wlcs/errors.hpp"

namespace wlcs {

namespace {

// Minimal c in [0, N] with yN >= powers[c], where powers[c] = a2^c. The
// predicate is monotone in c because a2 <= 1. Requires y >= a2 so that c = N
// qualifies and the search is well defined.
std::size_t min_cost(const Rational& yN, const std::vector<Rational>& powers, std::size_t N) {
    std::size_t lo = 0, hi = N;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (powers[mid] <= yN) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

std::vector<Rational> a2_powers(const Rational& a2, std::size_t N) {
    std::vector<Rational> powers;
    powers.reserve(N + 1);
    for (std::size_t c = 0; c <= N; ++c) powers.push_back(a2.pow(c));
    return powers;
}

void check_quantizer_domain(const Rational& y, const Rational& a2, std::size_t N) {
    if (Rational::one() < y) throw std::invalid_argument("probability above 1");
    if (a2.is_zero() || Rational::one() < a2) throw std::invalid_argument("threshold outside (0, 1]");
    if (N < 1) throw std::invalid_argument("resolution must be positive");
}

}  // namespace

std::optional<std::size_t> quantize_cost(const Rational& y, const Rational& a2, std::size_t N) {
    check_quantizer_domain(y, a2, N);
    if (y < a2) return std::nullopt;
    return min_cost(y.pow(N), a2_powers(a2, N), N);
}

CostTable::CostTable(const WeightedSequence& Y, const Rational& a2, std::size_t N) : N_(N) {
    check_quantizer_domain(Rational::zero(), a2, N);
    const auto powers = a2_powers(a2, N);
    table_.reserve(Y.length());
    for (std::size_t j = 1; j <= Y.length(); ++j) {
        std::vector<std::optional<std::size_t>> row;
        row.reserve(Y.alphabet.size());
        for (std::size_t letter = 0; letter < Y.alphabet.size(); ++letter) {
            const Rational& y = Y.prob(j, letter);
            if (y < a2) row.push_back(std::nullopt);
            else row.push_back(min_cost(y.pow(N), powers, N));
        }
        table_.push_back(std::move(row));
    }
}

PtasResult ptas_core(const Instance& inst) {
    const std::size_t n = inst.X.length(), m = inst.Y.length(), K = inst.X.alphabet.size();
    const std::size_t n0 = std::min(n, m);
    if (n0 == 0) return {0, {}};
    const std::size_t N = n0 * n0;

    const CostTable ct(inst.Y, inst.a2, N);

    // V(i, j, len, C): maximum exact X-product over common strings of length
    // `len` in the prefixes (X[1..i], Y[1..j]) whose quantized Y-cost totals
    // at most C. Zero doubles as "no such string": matches require a positive
    // X-probability, so every tracked product is positive.
    const std::size_t dim_l = n0 + 1, dim_c = N + 1;
    auto at = [&](std::size_t i, std::size_t j, std::size_t l, std::size_t C) -> std::size_t {
        return ((i * (m + 1) + j) * dim_l + l) * dim_c + C;
    };
    std::vector<Rational> V((n + 1) * (m + 1) * dim_l * dim_c, Rational::zero());
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= m; ++j)
            for (std::size_t C = 0; C <= N; ++C) V[at(i, j, 0, C)] = Rational::one();

    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            const std::size_t lmax = std::min({i, j, n0});
            for (std::size_t l = 1; l <= lmax; ++l) {
                for (std::size_t C = 0; C <= N; ++C) {
                    Rational best = V[at(i - 1, j, l, C)];
                    {
                        const Rational& skip_y = V[at(i, j - 1, l, C)];
                        if (best < skip_y) best = skip_y;
                    }
                    for (std::size_t letter = 0; letter < K; ++letter) {
                        const Rational& px = inst.X.prob(i, letter);
                        if (px.is_zero()) continue;
                        const auto c = ct.cost(j, letter);
                        if (!c || *c > C) continue;
                        const Rational& base = V[at(i - 1, j - 1, l - 1, C - *c)];
                        if (base.is_zero()) continue;
                        const Rational matched = base.mul(px);
                        if (best < matched) best = matched;
                    }
                    V[at(i, j, l, C)] = std::move(best);
                }
            }
        }
    }

    std::size_t d = 0;
    for (std::size_t l = n0; l >= 1; --l) {
        if (inst.a1 <= V[at(n, m, l, N)]) {
            d = l;
            break;
        }
    }

    // Traceback mirrors the dp_core tie-break: prefer skipping (X first,
    // then Y) whenever it preserves the value, else match the smallest letter
    // that reproduces it exactly.
    Witness w;
    std::size_t i = n, j = m, l = d, C = N;
    while (l > 0) {
        const Rational& cur = V[at(i, j, l, C)];
        if (i > 0 && V[at(i - 1, j, l, C)] == cur) {
            --i;
            continue;
        }
        if (j > 0 && V[at(i, j - 1, l, C)] == cur) {
            --j;
            continue;
        }
        bool stepped = false;
        for (std::size_t letter = 0; letter < K && !stepped; ++letter) {
            const Rational& px = inst.X.prob(i, letter);
            if (px.is_zero()) continue;
            const auto c = ct.cost(j, letter);
            if (!c || *c > C) continue;
            const Rational& base = V[at(i - 1, j - 1, l - 1, C - *c)];
            if (base.is_zero()) continue;
            if (base.mul(px) == cur) {
                w.s.push_back(inst.X.alphabet.letter(letter));
                w.pi.push_back(i);
                w.rho.push_back(j);
                --i, --j, --l;
                C -= *c;
                stepped = true;
            }
        }
        if (!stepped) throw std::logic_error("quantized DP traceback found no producing transition");
    }
    std::reverse(w.s.begin(), w.s.end());
    std::reverse(w.pi.begin(), w.pi.end());
    std::reverse(w.rho.begin(), w.rho.end());
    return {d, std::move(w)};
}

namespace {

// Lex rank of the first feasible string of this length whose leading letter
// is ≡ shard (mod shards), together with the string; nullopt if none.
struct EnumFound {
    std::uint64_t rank;
    std::vector<std::size_t> s;
};

std::optional<EnumFound> enumerate_shard(const Instance& inst, std::size_t length, unsigned shard,
                                         unsigned shards) {
    const std::size_t K = inst.X.alphabet.size();
    std::uint64_t suffix_count = 1;
    for (std::size_t t = 1; t < length; ++t) suffix_count *= K;

    std::vector<std::size_t> s(length, 0);
    for (std::size_t first = shard; first < K; first += shards) {
        s.assign(length, 0);
        s[0] = first;
        for (std::uint64_t r = 0;; ++r) {
            if (inst.a1 <= embed_prob(inst.X, s) && inst.a2 <= embed_prob(inst.Y, s)) {
                return EnumFound{first * suffix_count + r, s};
            }
            // odometer over s[1..], most significant digit leftmost
            std::size_t pos = length;
            while (pos > 1 && s[pos - 1] == K - 1) s[--pos] = 0;
            if (pos == 1) break;
            ++s[pos - 1];
        }
    }
    return std::nullopt;
}

}  // namespace

ApproxResult eptas(const Instance& inst, const Rational& eps, unsigned threads) {
    if (eps.is_zero() || Rational::one() < eps) {
        throw std::invalid_argument("eps must lie in (0, 1]");
    }
    PtasResult base = ptas_core(inst);
    const std::size_t d = base.d;

    // d + 1 >= 1/eps, decided exactly: (d+1)·num >= den.
    if (BigInt(static_cast<unsigned long>(d + 1)) * eps.num() >= eps.den()) {
        return {d, std::move(base.witness), false, 0};
    }

    const std::size_t K = inst.X.alphabet.size();
    const std::size_t target = d + 1;
    std::uint64_t total = 1;
    for (std::size_t t = 0; t < target; ++t) total *= K;

    if (target > std::min(inst.X.length(), inst.Y.length())) {
        // No string of length d+1 can embed at all; OPT = d without enumeration.
        return {d, std::move(base.witness), true, 0};
    }

    std::optional<EnumFound> found;
    if (threads <= 1 || K == 1) {
        found = enumerate_shard(inst, target, 0, 1);
    } else {
        const unsigned shards = static_cast<unsigned>(std::min<std::size_t>(threads, K));
        std::vector<std::optional<EnumFound>> results(shards);
        std::vector<std::thread> workers;
        for (unsigned wk = 0; wk < shards; ++wk) {
            workers.emplace_back([&, wk] { results[wk] = enumerate_shard(inst, target, wk, shards); });
        }
        for (auto& t : workers) t.join();
        for (auto& r : results) {
            if (r && (!found || r->rank < found->rank)) found = std::move(r);
        }
    }

    if (found) {
        std::vector<std::string> names;
        names.reserve(found->s.size());
        for (auto idx : found->s) names.push_back(inst.X.alphabet.letter(idx));
        Witness w{names, embed_dp(inst.X, found->s).positions, embed_dp(inst.Y, found->s).positions};
        return {target, std::move(w), true, found->rank + 1};
    }
    return {d, std::move(base.witness), true, total};
}

}  // namespace wlcs
