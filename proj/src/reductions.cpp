#include "wlcs/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "wlcs/errors.hpp"

namespace wlcs {

void validate(const Graph& g) {
    std::vector<std::string> problems;
    std::map<std::pair<std::size_t, std::size_t>, bool> seen;
    for (const auto& [u, v] : g.edges) {
        if (u < 1 || u > g.n || v < 1 || v > g.n) {
            problems.push_back("edge endpoint outside 1.." + std::to_string(g.n));
            continue;
        }
        if (u == v) {
            problems.push_back("self-loop at vertex " + std::to_string(u));
            continue;
        }
        const std::pair<std::size_t, std::size_t> key{std::min(u, v), std::max(u, v)};
        if (seen[key]) {
            problems.push_back("duplicate edge " + std::to_string(key.first) + "-" +
                               std::to_string(key.second));
        }
        seen[key] = true;
    }
    if (!problems.empty()) throw ValidationError(std::move(problems));
}

void validate(const Sat13Formula& f, std::size_t max_occurrences) {
    std::vector<std::string> problems;
    std::vector<std::size_t> occurrences(f.num_vars + 1, 0);
    for (const auto& clause : f.clauses) {
        for (int lit : clause) {
            if (lit == 0) {
                problems.push_back("literal 0 is not allowed");
                continue;
            }
            const std::size_t var = static_cast<std::size_t>(std::abs(lit));
            if (var > f.num_vars) {
                problems.push_back("variable " + std::to_string(var) + " outside 1.." +
                                   std::to_string(f.num_vars));
                continue;
            }
            if (++occurrences[var] == max_occurrences + 1) {
                problems.push_back("variable " + std::to_string(var) + " occurs more than " +
                                   std::to_string(max_occurrences) + " times");
            }
        }
    }
    if (!problems.empty()) throw ValidationError(std::move(problems));
}

std::vector<std::uint64_t> sieve_primes(std::size_t n) {
    static constexpr std::uint64_t kSmall[5] = {2, 3, 5, 7, 11};
    if (n <= 5) return {kSmall, kSmall + n};

    // p_n < n(ln n + ln ln n) for n >= 6; over-approximate both logs through
    // bit lengths (ln x < 0.7·bitlen(x)) and let the doubling loop absorb any
    // remaining slack.
    const std::uint64_t bl = std::bit_width(static_cast<std::uint64_t>(n));
    const std::uint64_t blbl = std::bit_width(bl);
    std::uint64_t bound = n * (7 * (bl + blbl) + 10) / 10 + 13;

    std::vector<std::uint64_t> primes;
    for (;; bound *= 2) {
        primes.clear();
        std::vector<bool> composite(bound + 1, false);
        for (std::uint64_t p = 2; p <= bound; ++p) {
            if (composite[p]) continue;
            primes.push_back(p);
            if (primes.size() == n) return primes;
            for (std::uint64_t q = p * p; q <= bound; q += p) composite[q] = true;
        }
    }
}

namespace {

Rational inverse_of(const BigInt& v) { return Rational(BigInt(1), v); }

void require_positive(const SubsetProductInstance& sp) {
    for (const auto& l : sp.L) {
        if (l < 1) throw std::invalid_argument("subset-product numbers must be positive");
    }
    if (sp.P < 1) throw std::invalid_argument("subset-product target must be positive");
}

}  // namespace

Instance subset_product_to_wlcs(const SubsetProductInstance& sp) {
    require_positive(sp);
    if (sp.k) {
        throw std::invalid_argument("sized subset-product instances go through the diagonal construction");
    }
    const std::size_t n = sp.L.size();
    Alphabet ab({"A", "B"});

    BigInt prod_l(1), prod_l1(1);
    for (const auto& l : sp.L) {
        prod_l *= l;
        prod_l1 *= l + 1;
    }

    std::vector<std::vector<Rational>> x_rows, y_rows;
    x_rows.reserve(n + 2);
    y_rows.reserve(n + 2);
    for (const auto& l : sp.L) {
        x_rows.push_back({Rational(l, l + 1), Rational(BigInt(1), l + 1)});
        y_rows.push_back({Rational(BigInt(1), l + 1), Rational(l, l + 1)});
    }
    // Position n+1: X forces A, Y makes A costly (prod 1/L_i).
    x_rows.push_back({Rational::one(), Rational::zero()});
    y_rows.push_back({inverse_of(prod_l), inverse_of(prod_l).one_minus()});
    // Position n+2: the mirror image, with X's A worth 1/P².
    x_rows.push_back({inverse_of(sp.P * sp.P), inverse_of(sp.P * sp.P).one_minus()});
    y_rows.push_back({Rational::one(), Rational::zero()});

    const Rational a(BigInt(1), sp.P * prod_l1);
    return {WeightedSequence{ab, std::move(x_rows)}, WeightedSequence{ab, std::move(y_rows)}, a, a,
            n + 2};
}

SubsetProductInstance perfect_code_to_ksubset(const Graph& g, std::size_t k) {
    validate(g);
    if (k < 1 || k > g.n) throw std::invalid_argument("k must lie in 1..n");
    const auto primes = sieve_primes(g.n);

    std::vector<BigInt> L;
    L.reserve(g.n);
    BigInt P(1);
    for (std::size_t v = 1; v <= g.n; ++v) {
        BigInt l(static_cast<unsigned long>(primes[v - 1]));  // closed neighborhood includes v
        for (const auto& [a, b] : g.edges) {
            if (a == v) l *= static_cast<unsigned long>(primes[b - 1]);
            else if (b == v) l *= static_cast<unsigned long>(primes[a - 1]);
        }
        L.push_back(std::move(l));
        P *= static_cast<unsigned long>(primes[v - 1]);
    }
    return {std::move(L), std::move(P), k};
}

Instance ksubset_to_wlcs(const SubsetProductInstance& sp) {
    require_positive(sp);
    if (!sp.k || *sp.k < 1) throw std::invalid_argument("the diagonal construction needs a size k >= 1");
    const std::size_t n = sp.L.size(), k = *sp.k;
    if (n == 0) throw std::invalid_argument("empty number list");

    const BigInt m = *std::max_element(sp.L.begin(), sp.L.end());
    BigInt mk;
    mpz_pow_ui(mk.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(k));
    if (mk < sp.P) {
        throw std::invalid_argument(
            "m^k < P: even the k largest numbers cannot reach the target, so the instance is "
            "decided by inspection and has no encoding");
    }
    const BigInt M = mk * m;  // m^(k+1)

    std::vector<std::string> letters;
    letters.reserve(n + 3);
    for (std::size_t i = 1; i <= n + 3; ++i) letters.push_back(std::to_string(i));
    Alphabet sigma(std::move(letters));

    const std::size_t x_filler = n + 1, y_filler = n + 2;  // 0-based: letters n+2, n+3
    std::vector<std::vector<Rational>> x_rows, y_rows;
    x_rows.reserve(n + 1);
    y_rows.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> xr(n + 3, Rational::zero());
        xr[i] = Rational(sp.L[i], M);
        xr[x_filler] = xr[i].one_minus();
        x_rows.push_back(std::move(xr));

        std::vector<Rational> yr(n + 3, Rational::zero());
        yr[i] = Rational(BigInt(1), M * sp.L[i]);
        yr[y_filler] = yr[i].one_minus();
        y_rows.push_back(std::move(yr));
    }
    {
        std::vector<Rational> xr(n + 3, Rational::zero());
        xr[n] = Rational(BigInt(1), sp.P * sp.P);
        xr[x_filler] = xr[n].one_minus();
        x_rows.push_back(std::move(xr));

        std::vector<Rational> yr(n + 3, Rational::zero());
        yr[n] = Rational::one();
        y_rows.push_back(std::move(yr));
    }

    BigInt Mk;
    mpz_pow_ui(Mk.get_mpz_t(), M.get_mpz_t(), static_cast<unsigned long>(k));
    const Rational a(BigInt(1), sp.P * Mk);
    return {WeightedSequence{sigma, std::move(x_rows)}, WeightedSequence{sigma, std::move(y_rows)}, a,
            a, k + 1};
}

SubsetProductInstance sat13_to_ksubset(const Sat13Formula& f, std::size_t k) {
    validate(f);
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (f.num_vars > 24) throw ResourceLimitError("sat13 construction capped at 24 variables");
    const std::size_t block_size = (f.num_vars + k - 1) / k;
    if (block_size > 12) throw ResourceLimitError("sat13 construction capped at 2^12 block assignments");

    const std::size_t M = f.clauses.size();
    const auto primes = sieve_primes(k + M);

    std::vector<BigInt> L;
    for (std::size_t b = 0; b < k; ++b) {
        const std::size_t lo = b * block_size + 1;
        const std::size_t hi = std::min((b + 1) * block_size, f.num_vars);
        std::vector<std::size_t> vars;
        for (std::size_t v = lo; v <= hi; ++v) vars.push_back(v);

        for (std::uint64_t assignment = 0; assignment < (1ull << vars.size()); ++assignment) {
            BigInt id(static_cast<unsigned long>(primes[b]));
            for (std::size_t i = 0; i < M; ++i) {
                unsigned long j = 0;
                for (int lit : f.clauses[i]) {
                    const std::size_t var = static_cast<std::size_t>(std::abs(lit));
                    const auto it = std::find(vars.begin(), vars.end(), var);
                    if (it == vars.end()) continue;
                    const bool value = (assignment >> (it - vars.begin())) & 1;
                    if (value == (lit > 0)) ++j;
                }
                if (j > 0) {
                    BigInt factor;
                    mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(primes[k + i]), j);
                    id *= factor;
                }
            }
            L.push_back(std::move(id));
        }
    }

    BigInt P(1);
    for (std::size_t i = 0; i < k + M; ++i) P *= static_cast<unsigned long>(primes[i]);
    return {std::move(L), std::move(P), k};
}

bool subset_product_exists(const SubsetProductInstance& sp) {
    require_positive(sp);
    const std::size_t n = sp.L.size();
    if (n > 20) throw ResourceLimitError("subset-product oracle capped at 20 numbers");

    std::function<bool(std::size_t, std::size_t, const BigInt&)> choose =
        [&](std::size_t idx, std::size_t count, const BigInt& prod) -> bool {
        if (prod > sp.P) return false;  // factors are >= 1, the product cannot come back down
        if (sp.k && count > *sp.k) return false;
        if (idx == n) return prod == sp.P && (!sp.k || count == *sp.k);
        if (sp.k && count + (n - idx) < *sp.k) return false;
        return choose(idx + 1, count + 1, prod * sp.L[idx]) || choose(idx + 1, count, prod);
    };
    return choose(0, 0, BigInt(1));
}

bool perfect_code_exists(const Graph& g, std::size_t k) {
    validate(g);
    if (g.n > 12) throw ResourceLimitError("perfect-code oracle capped at 12 vertices");
    std::vector<std::uint32_t> closed(g.n + 1, 0);
    for (std::size_t v = 1; v <= g.n; ++v) closed[v] = 1u << (v - 1);
    for (const auto& [u, v] : g.edges) {
        closed[u] |= 1u << (v - 1);
        closed[v] |= 1u << (u - 1);
    }
    for (std::uint32_t code = 0; code < (1u << g.n); ++code) {
        if (std::popcount(code) != static_cast<int>(k)) continue;
        bool ok = true;
        for (std::size_t v = 1; v <= g.n && ok; ++v) {
            ok = std::popcount(closed[v] & code) == 1;
        }
        if (ok) return true;
    }
    return false;
}

bool sat13_exists(const Sat13Formula& f) {
    validate(f);
    if (f.num_vars > 20) throw ResourceLimitError("1-in-3 oracle capped at 20 variables");
    for (std::uint32_t assignment = 0; assignment < (1u << f.num_vars); ++assignment) {
        bool ok = true;
        for (const auto& clause : f.clauses) {
            int true_literals = 0;
            for (int lit : clause) {
                const std::size_t var = static_cast<std::size_t>(std::abs(lit));
                const bool value = (assignment >> (var - 1)) & 1;
                if (value == (lit > 0)) ++true_literals;
            }
            if (true_literals != 1) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace wlcs
