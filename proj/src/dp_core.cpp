#include "wlcs/dp_core.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

#include "wlcs/errors.hpp"

namespace wlcs {

namespace {

std::vector<std::size_t> to_indices(const Alphabet& alphabet, const std::vector<std::string>& s) {
    std::vector<std::size_t> out;
    out.reserve(s.size());
    for (const auto& name : s) {
        const auto idx = alphabet.index_of(name);
        if (!idx) throw std::invalid_argument("unknown letter '" + name + "'");
        out.push_back(*idx);
    }
    return out;
}

std::vector<std::string> to_names(const Alphabet& alphabet, const std::vector<std::size_t>& s) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (auto idx : s) out.push_back(alphabet.letter(idx));
    return out;
}

}  // namespace

Rational embed_prob(const WeightedSequence& S, const std::vector<std::size_t>& s) {
    const std::size_t n = S.length();
    const std::size_t d = s.size();
    if (d > n) return Rational::zero();
    // opt over string prefixes, updated row by row; j runs backwards so each
    // entry still holds the previous row's value when read.
    std::vector<Rational> opt(d + 1, Rational::zero());
    opt[0] = Rational::one();
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = std::min(d, i); j >= 1; --j) {
            const Rational matched = opt[j - 1].mul(S.prob(i, s[j - 1]));
            if (opt[j] < matched) opt[j] = matched;
        }
    }
    return opt[d];
}

EmbedResult embed_dp(const WeightedSequence& S, const std::vector<std::size_t>& s) {
    Rational best = embed_prob(S, s);
    const std::size_t n = S.length();
    const std::size_t d = s.size();
    if (d == 0 || best.is_zero()) return {std::move(best), {}};

    // Suffix table suf[i][j]: best probability of embedding s[j..] into
    // positions i..n. Greedy left-to-right traceback over it skips a position
    // whenever skipping still attains the optimum, making every matched
    // position as late as possible.
    std::vector<std::vector<Rational>> suf(n + 2, std::vector<Rational>(d + 1, Rational::zero()));
    for (std::size_t i = 1; i <= n + 1; ++i) suf[i][d] = Rational::one();
    for (std::size_t i = n; i >= 1; --i) {
        for (std::size_t j = 0; j < d; ++j) {
            Rational v = suf[i + 1][j];
            const Rational matched = S.prob(i, s[j]).mul(suf[i + 1][j + 1]);
            if (v < matched) v = matched;
            suf[i][j] = std::move(v);
        }
    }

    std::vector<std::size_t> positions;
    positions.reserve(d);
    std::size_t j = 0;
    for (std::size_t i = 1; j < d; ++i) {
        if (i > n) throw std::logic_error("embedding traceback ran past the sequence");
        if (suf[i][j] == suf[i + 1][j]) continue;  // skipping i keeps the optimum
        positions.push_back(i);
        ++j;
    }
    return {std::move(best), std::move(positions)};
}

Rational embed_prob(const WeightedSequence& S, const std::vector<std::string>& s) {
    return embed_prob(S, to_indices(S.alphabet, s));
}

EmbedResult embed_dp(const WeightedSequence& S, const std::vector<std::string>& s) {
    return embed_dp(S, to_indices(S.alphabet, s));
}

namespace {

// One DFS column per prefix letter: col[i] = best probability of embedding
// the prefix into the first i positions.
std::vector<Rational> extend_column(const WeightedSequence& S, const std::vector<Rational>& parent,
                                    std::size_t letter) {
    const std::size_t n = S.length();
    std::vector<Rational> col(n + 1, Rational::zero());
    for (std::size_t i = 1; i <= n; ++i) {
        col[i] = col[i - 1];
        const Rational matched = parent[i - 1].mul(S.prob(i, letter));
        if (col[i] < matched) col[i] = matched;
    }
    return col;
}

// Lexicographically smallest feasible string of exactly this length whose
// first letter index is ≡ shard (mod shards); nullopt if none.
std::optional<std::vector<std::size_t>> find_feasible_string(const Instance& inst, std::size_t length,
                                                             unsigned shard, unsigned shards) {
    const std::size_t K = inst.X.alphabet.size();
    std::vector<std::vector<Rational>> colX, colY;
    colX.emplace_back(inst.X.length() + 1, Rational::zero());
    colY.emplace_back(inst.Y.length() + 1, Rational::zero());
    for (auto& c : colX[0]) c = Rational::one();
    for (auto& c : colY[0]) c = Rational::one();

    std::vector<std::size_t> prefix;
    std::function<bool()> dfs = [&]() -> bool {
        const auto depth = prefix.size();
        if (depth == length) return true;
        for (std::size_t letter = 0; letter < K; ++letter) {
            if (depth == 0 && shards > 1 && letter % shards != shard) continue;
            auto nx = extend_column(inst.X, colX.back(), letter);
            if (nx.back() < inst.a1) continue;  // no extension can recover: factors are <= 1
            auto ny = extend_column(inst.Y, colY.back(), letter);
            if (ny.back() < inst.a2) continue;
            colX.push_back(std::move(nx));
            colY.push_back(std::move(ny));
            prefix.push_back(letter);
            if (dfs()) return true;
            prefix.pop_back();
            colX.pop_back();
            colY.pop_back();
        }
        return false;
    };
    if (dfs()) return prefix;
    return std::nullopt;
}

}  // namespace

SolveResult brute_force_opt(const Instance& inst, std::optional<std::size_t> len_cap, unsigned threads) {
    constexpr std::uint64_t kBudget = 10'000'000;
    const std::size_t K = inst.X.alphabet.size();
    std::size_t top = std::min(inst.X.length(), inst.Y.length());
    if (len_cap && *len_cap < top) top = *len_cap;

    // Projected work: sum of K^len over the lengths to be tried, counted
    // before starting so refusal never depends on pruning or thread count.
    std::uint64_t projected = 0;
    for (std::size_t len = top; len + 1 >= 1 && len <= top; --len) {
        std::uint64_t per_len = 1;
        for (std::size_t t = 0; t < len; ++t) {
            per_len *= K;
            if (per_len > kBudget) break;
        }
        projected += per_len;
        if (projected > kBudget) {
            throw ResourceLimitError("brute force refused: projected string checks exceed 10^7");
        }
        if (len == 0) break;
    }

    for (std::size_t len = top;; --len) {
        std::optional<std::vector<std::size_t>> found;
        if (threads <= 1 || len == 0 || K == 1) {
            found = find_feasible_string(inst, len, 0, 1);
        } else {
            const unsigned shards = static_cast<unsigned>(std::min<std::size_t>(threads, K));
            std::vector<std::optional<std::vector<std::size_t>>> results(shards);
            std::vector<std::thread> workers;
            workers.reserve(shards);
            for (unsigned w = 0; w < shards; ++w) {
                workers.emplace_back(
                    [&, w] { results[w] = find_feasible_string(inst, len, w, shards); });
            }
            for (auto& t : workers) t.join();
            for (const auto& r : results) {
                if (r && (!found || *r < *found)) found = r;
            }
        }
        if (found) {
            const auto names = to_names(inst.X.alphabet, *found);
            Witness w{names, embed_dp(inst.X, *found).positions, embed_dp(inst.Y, *found).positions};
            return {len, std::move(w)};
        }
        if (len == 0) break;
    }
    // len 0 is always feasible for valid thresholds (<= 1), so this is
    // reachable only with a degenerate caller-constructed instance.
    throw std::logic_error("no feasible length, thresholds above 1");
}

namespace {

struct DfsState {
    const Instance& inst;
    std::size_t best = 0;
};

// Canonical move order between matches: X skips first, then Y skips. Once a
// Y position is skipped, X may not advance until the next match, so every
// embedding pair is visited exactly once.
void dfs_search(DfsState& st, std::size_t i, std::size_t j, bool y_skipped, std::size_t len,
                const Rational& px, const Rational& py) {
    if (st.best < len) st.best = len;
    const std::size_t n = st.inst.X.length(), m = st.inst.Y.length();
    if (len + std::min(n - i, m - j) <= st.best) return;  // cannot improve
    if (i < n && !y_skipped) dfs_search(st, i + 1, j, false, len, px, py);
    if (j < m) dfs_search(st, i, j + 1, true, len, px, py);
    if (i < n && j < m) {
        const std::size_t K = st.inst.X.alphabet.size();
        for (std::size_t letter = 0; letter < K; ++letter) {
            const Rational npx = px.mul(st.inst.X.prob(i + 1, letter));
            if (npx < st.inst.a1) continue;
            const Rational npy = py.mul(st.inst.Y.prob(j + 1, letter));
            if (npy < st.inst.a2) continue;
            dfs_search(st, i + 1, j + 1, false, len + 1, npx, npy);
        }
    }
}

}  // namespace

std::size_t dfs_oracle(const Instance& inst, std::size_t size_cap) {
    if (inst.X.length() + inst.Y.length() > size_cap) {
        throw ResourceLimitError("dfs oracle refused: |X| + |Y| exceeds cap " + std::to_string(size_cap));
    }
    DfsState st{inst};
    dfs_search(st, 0, 0, false, 0, Rational::one(), Rational::one());
    return st.best;
}

namespace {

struct ParetoEntry {
    std::size_t len;
    Rational px;
    Rational py;
    std::int64_t parent;  // arena index, -1 for the root
    std::size_t match_i = 0, match_j = 0, letter = 0;
    bool matched = false;
};

// candidate value triple plus how to materialize it
struct Candidate {
    std::size_t len;
    Rational px;
    Rational py;
    std::int64_t arena_index;  // >= 0: existing entry; -1: new match entry
    std::int64_t parent = -1;
    std::size_t match_i = 0, match_j = 0, letter = 0;
};

// Pareto-filter `cands` (keep the non-dominated, one representative per value
// triple, first-seen winning ties) in O(E log E) comparisons: bucket by length,
// sweep buckets from long to short against a (px, py) staircase accumulated
// over the longer buckets. Inside a bucket, sorting by px descending reduces
// dominance to "py must strictly exceed everything seen".
std::vector<std::size_t> pareto_filter(const std::vector<Candidate>& cands) {
    std::size_t max_len = 0;
    for (const auto& c : cands) max_len = std::max(max_len, c.len);
    std::vector<std::vector<std::size_t>> buckets(max_len + 1);
    for (std::size_t idx = 0; idx < cands.size(); ++idx) buckets[cands[idx].len].push_back(idx);

    std::vector<std::size_t> stair;  // kept indices, px ascending, py strictly descending
    std::vector<std::size_t> kept;
    for (std::size_t len = max_len + 1; len-- > 0;) {
        auto& bucket = buckets[len];
        if (bucket.empty()) continue;
        std::stable_sort(bucket.begin(), bucket.end(), [&](std::size_t a, std::size_t b) {
            const auto px = cands[a].px.cmp(cands[b].px);
            if (px != 0) return px > 0;
            return cands[a].py.cmp(cands[b].py) > 0;
        });
        std::vector<std::size_t> survivors;
        const Rational* best_py = nullptr;
        for (const auto idx : bucket) {
            const Candidate& c = cands[idx];
            if (best_py && c.py <= *best_py) continue;
            const auto it = std::lower_bound(
                stair.begin(), stair.end(), c.px,
                [&](std::size_t si, const Rational& v) { return cands[si].px < v; });
            if (it != stair.end() && cands[*it].py >= c.py) continue;
            survivors.push_back(idx);
            best_py = &c.py;
        }
        // Merge survivors into the staircase: walk the union from high px to
        // low, keeping points whose py strictly exceeds everything kept so far.
        std::vector<std::size_t> merged;
        merged.reserve(stair.size() + survivors.size());
        auto s_it = stair.rbegin();                // px descending
        auto v_it = survivors.begin();             // px descending already
        const Rational* top_py = nullptr;
        auto push = [&](std::size_t idx) {
            if (!top_py || cands[idx].py > *top_py) {
                merged.push_back(idx);
                top_py = &cands[idx].py;
            }
        };
        while (s_it != stair.rend() || v_it != survivors.end()) {
            if (s_it == stair.rend()) {
                push(*v_it++);
            } else if (v_it == survivors.end()) {
                push(*s_it++);
            } else if (cands[*s_it].px >= cands[*v_it].px) {
                push(*s_it++);
            } else {
                push(*v_it++);
            }
        }
        std::reverse(merged.begin(), merged.end());
        stair = std::move(merged);
        kept.insert(kept.end(), survivors.begin(), survivors.end());
    }
    return kept;
}

}  // namespace

SolveResult pareto_opt(const Instance& inst) {
    constexpr std::size_t kEntryBudget = 1'000'000;
    const std::size_t n = inst.X.length(), m = inst.Y.length(), K = inst.X.alphabet.size();

    std::vector<ParetoEntry> arena;
    arena.push_back({0, Rational::one(), Rational::one(), -1});

    using Cell = std::vector<std::int64_t>;  // arena indices
    std::vector<Cell> prev_row(m + 1), cur_row(m + 1);
    std::size_t stored = 0;

    auto fill_cell = [&](std::size_t i, std::size_t j) -> Cell {
        std::vector<Candidate> cands;
        if (i == 0 && j == 0) {
            cands.push_back({0, Rational::one(), Rational::one(), 0});
        } else {
            // Skip transitions first; entries reachable both ways (via the
            // diagonal) are deduplicated by arena index.
            std::vector<std::int64_t> skips;
            if (i > 0) skips.insert(skips.end(), prev_row[j].begin(), prev_row[j].end());
            if (j > 0) skips.insert(skips.end(), cur_row[j - 1].begin(), cur_row[j - 1].end());
            std::sort(skips.begin(), skips.end());
            skips.erase(std::unique(skips.begin(), skips.end()), skips.end());
            cands.reserve(skips.size());
            for (auto idx : skips) {
                cands.push_back({arena[idx].len, arena[idx].px, arena[idx].py, idx});
            }
            if (i > 0 && j > 0) {
                for (auto idx : prev_row[j - 1]) {
                    for (std::size_t letter = 0; letter < K; ++letter) {
                        Rational npx = arena[idx].px.mul(inst.X.prob(i, letter));
                        if (npx < inst.a1) continue;
                        Rational npy = arena[idx].py.mul(inst.Y.prob(j, letter));
                        if (npy < inst.a2) continue;
                        cands.push_back({arena[idx].len + 1, std::move(npx), std::move(npy), -1, idx,
                                         i, j, letter});
                    }
                }
            }
        }

        const std::vector<std::size_t> kept = pareto_filter(cands);

        stored += kept.size();
        if (stored > kEntryBudget) {
            throw ResourceLimitError("pareto solver refused: frontier exceeds 10^6 entries");
        }

        Cell cell;
        cell.reserve(kept.size());
        for (const auto ki : kept) {
            Candidate& k = cands[ki];
            if (k.arena_index >= 0) {
                cell.push_back(k.arena_index);
            } else {
                arena.push_back({k.len, std::move(k.px), std::move(k.py), k.parent, k.match_i,
                                 k.match_j, k.letter, true});
                cell.push_back(static_cast<std::int64_t>(arena.size() - 1));
            }
        }
        return cell;
    };

    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= m; ++j) cur_row[j] = fill_cell(i, j);
        std::swap(prev_row, cur_row);
    }
    const Cell& last = prev_row[m];

    const ParetoEntry* best = nullptr;
    for (auto idx : last) {
        const auto& e = arena[idx];
        if (!best || best->len < e.len ||
            (best->len == e.len &&
             (best->px < e.px || (best->px == e.px && best->py < e.py)))) {
            best = &e;
        }
    }

    Witness w;
    for (const ParetoEntry* e = best; e->parent >= 0; e = &arena[e->parent]) {
        if (e->matched) {
            w.s.push_back(inst.X.alphabet.letter(e->letter));
            w.pi.push_back(e->match_i);
            w.rho.push_back(e->match_j);
        }
    }
    std::reverse(w.s.begin(), w.s.end());
    std::reverse(w.pi.begin(), w.pi.end());
    std::reverse(w.rho.begin(), w.rho.end());
    return {best->len, std::move(w)};
}

}  // namespace wlcs
