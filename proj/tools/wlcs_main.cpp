#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "wlcs/approx.hpp"
#include "wlcs/dp_core.hpp"
#include "wlcs/errors.hpp"
#include "wlcs/formats.hpp"
#include "wlcs/model.hpp"
#include "wlcs/prng.hpp"
#include "wlcs/reductions.hpp"
#include "wlcs/transforms.hpp"

namespace {

// Exit codes: 0 success, 1 infeasible witness / decision NO, 2 syntax
// (files or argv), 3 semantic validation, 4 resource cap.
constexpr int kExitNo = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitResource = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw wlcs::ParseError(1, 1, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << content;
}

wlcs::Rational parse_rational_flag(const std::string& text, const std::string& flag) {
    try {
        return wlcs::Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw wlcs::ParseError(1, 1, flag + ": " + e.what());
    }
}

wlcs::BigInt parse_bigint_flag(const std::string& text, const std::string& flag) {
    if (text.empty()) throw wlcs::ParseError(1, 1, flag + ": empty value");
    for (char c : text) {
        if (c < '0' || c > '9') throw wlcs::ParseError(1, 1, flag + ": expected a decimal integer");
    }
    return wlcs::BigInt(text);
}

void print_witness(const wlcs::Witness& w) { std::cout << wlcs::serialize_witness(w); }

void maybe_write_witness(const std::string& path, const wlcs::Witness& w) {
    if (!path.empty()) write_file(path, wlcs::serialize_witness(w));
}

int decide(const wlcs::Instance& inst, std::size_t opt) {
    if (!inst.k) return 0;
    const bool yes = opt >= *inst.k;
    std::cout << "DECISION " << (yes ? "YES" : "NO") << "\n";
    return yes ? 0 : kExitNo;
}

struct SolveArgs {
    std::string input, method = "auto", witness_out;
    unsigned threads = 1;
};

int run_solve(const SolveArgs& args) {
    const wlcs::Instance inst = wlcs::parse_instance(read_file(args.input));
    std::size_t opt = 0;
    wlcs::Witness w;
    bool have_witness = true;
    std::string used = args.method;
    if (args.method == "pareto") {
        auto r = wlcs::pareto_opt(inst);
        opt = r.opt, w = std::move(r.witness);
    } else if (args.method == "brute") {
        auto r = wlcs::brute_force_opt(inst, std::nullopt, args.threads);
        opt = r.opt, w = std::move(r.witness);
    } else if (args.method == "dfs") {
        opt = wlcs::dfs_oracle(inst);
        have_witness = false;
    } else {  // auto: pareto with brute fallback when the frontier cap trips
        try {
            auto r = wlcs::pareto_opt(inst);
            opt = r.opt, w = std::move(r.witness);
            used = "pareto";
        } catch (const wlcs::ResourceLimitError&) {
            auto r = wlcs::brute_force_opt(inst, std::nullopt, args.threads);
            opt = r.opt, w = std::move(r.witness);
            used = "brute";
        }
    }
    std::cout << "METHOD " << used << "\n";
    std::cout << "OPT " << opt << "\n";
    const int code = decide(inst, opt);
    if (have_witness) {
        print_witness(w);
        maybe_write_witness(args.witness_out, w);
    }
    return code;
}

struct ApproxArgs {
    std::string input, eps, witness_out;
    unsigned threads = 1;
};

int run_approx(const ApproxArgs& args) {
    const wlcs::Instance inst = wlcs::parse_instance(read_file(args.input));
    const wlcs::Rational eps = parse_rational_flag(args.eps, "--eps");
    const wlcs::ApproxResult r = wlcs::eptas(inst, eps, args.threads);
    std::cout << "LEN " << r.length << "\n";
    std::cout << "EXACT " << (r.exact ? "true" : "false") << "\n";
    std::cout << "ENUMERATED " << r.enumerated << "\n";
    print_witness(r.witness);
    maybe_write_witness(args.witness_out, r.witness);
    return 0;
}

int run_ptas(const std::string& input, const std::string& witness_out) {
    const wlcs::Instance inst = wlcs::parse_instance(read_file(input));
    const wlcs::PtasResult r = wlcs::ptas_core(inst);
    std::cout << "D " << r.d << "\n";
    print_witness(r.witness);
    maybe_write_witness(witness_out, r.witness);
    return 0;
}

int run_unify(const std::string& input, std::size_t k, const std::string& output) {
    const wlcs::Instance inst = wlcs::parse_instance(read_file(input));
    const wlcs::UnifiedInstance uni = wlcs::unify(inst, k);
    write_file(output, wlcs::serialize_instance(uni.inst_prime));
    std::cout << "KPRIME " << uni.k_prime << "\n";
    std::cout << "A " << uni.inst_prime.a1.canonical().str() << "\n";
    return 0;
}

int run_verify(const std::string& input, const std::string& witness_path) {
    const wlcs::Instance inst = wlcs::parse_instance(read_file(input));
    const wlcs::Witness w = wlcs::parse_witness(read_file(witness_path));
    const wlcs::VerifyResult r = wlcs::verify_witness(inst, w);
    std::cout << "PX " << r.px.canonical().str() << "\n";
    std::cout << "PY " << r.py.canonical().str() << "\n";
    std::cout << "FEASIBLE " << (r.feasible ? "true" : "false") << "\n";
    return r.feasible ? 0 : kExitNo;
}

std::vector<wlcs::BigInt> numbers_from_flags(const std::vector<std::string>& numbers) {
    std::vector<wlcs::BigInt> out;
    out.reserve(numbers.size());
    for (const auto& t : numbers) out.push_back(parse_bigint_flag(t, "--numbers"));
    return out;
}

// Planted-answer stamp for a generated file, from the source-problem oracle;
// skipped silently when the oracle's own cap would trip.
template <typename Oracle>
std::string planted_line(Oracle&& oracle) {
    try {
        return wlcs::planted_comment(oracle() ? "YES" : "NO");
    } catch (const wlcs::ResourceLimitError&) {
        return "";
    }
}

struct GenCommon {
    std::string output;
    std::uint64_t seed = 0;
};

int run_gen_appendix(const std::string& x_text, const GenCommon& common) {
    const wlcs::Rational x = parse_rational_flag(x_text, "--x");
    const wlcs::Instance inst = wlcs::appendix_counterexample(x);
    const std::string planted =
        wlcs::planted_comment(x == wlcs::Rational::one() ? "OPT 4" : "OPT 3");
    write_file(common.output, planted + wlcs::serialize_instance(inst));
    return 0;
}

int run_gen_subset_product(std::vector<std::string> numbers, const std::string& target,
                           std::size_t random_n, std::uint64_t max_value, const GenCommon& common) {
    wlcs::SubsetProductInstance sp;
    if (random_n > 0) {
        wlcs::SplitMix64 rng(common.seed);
        for (std::size_t i = 0; i < random_n; ++i) {
            sp.L.push_back(wlcs::BigInt(static_cast<unsigned long>(rng.range(1, max_value))));
        }
        wlcs::BigInt prod(1);
        for (const auto& l : sp.L) {
            if (rng.below(2)) prod *= l;
        }
        sp.P = rng.below(2) ? prod : prod + 1;  // aim half at YES, half near-miss
    } else {
        sp.L = numbers_from_flags(numbers);
        sp.P = parse_bigint_flag(target, "--target");
    }
    const wlcs::Instance inst = wlcs::subset_product_to_wlcs(sp);
    const std::string planted = planted_line([&] { return wlcs::subset_product_exists(sp); });
    write_file(common.output, planted + wlcs::serialize_instance(inst));
    return 0;
}

int run_gen_diagonal(std::vector<std::string> numbers, const std::string& target, std::size_t k,
                     const GenCommon& common) {
    wlcs::SubsetProductInstance sp;
    sp.L = numbers_from_flags(numbers);
    sp.P = parse_bigint_flag(target, "--target");
    sp.k = k;
    const wlcs::Instance inst = wlcs::ksubset_to_wlcs(sp);
    const std::string planted = planted_line([&] { return wlcs::subset_product_exists(sp); });
    write_file(common.output, planted + wlcs::serialize_instance(inst));
    return 0;
}

int run_gen_perfect_code(const std::string& graph_path, std::size_t random_n, std::size_t k,
                         const GenCommon& common) {
    wlcs::Graph g;
    if (!graph_path.empty()) {
        g = wlcs::parse_graph(read_file(graph_path));
    } else {
        g.n = random_n;
        wlcs::SplitMix64 rng(common.seed);
        for (std::size_t u = 1; u <= g.n; ++u) {
            for (std::size_t v = u + 1; v <= g.n; ++v) {
                if (rng.below(2)) g.edges.emplace_back(u, v);
            }
        }
    }
    const wlcs::SubsetProductInstance sp = wlcs::perfect_code_to_ksubset(g, k);
    const std::string planted = planted_line([&] { return wlcs::perfect_code_exists(g, k); });
    write_file(common.output, planted + wlcs::serialize_subset_product(sp));
    return 0;
}

int run_gen_sat13(const std::string& cnf_path, std::size_t random_vars, std::size_t random_clauses,
                  std::size_t k, const GenCommon& common) {
    wlcs::Sat13Formula f;
    if (!cnf_path.empty()) {
        f = wlcs::parse_cnf(read_file(cnf_path));
    } else {
        f.num_vars = random_vars;
        wlcs::SplitMix64 rng(common.seed);
        std::vector<std::size_t> occurrences(f.num_vars + 1, 0);
        for (std::size_t c = 0; c < random_clauses; ++c) {
            std::array<int, 3> clause{};
            for (auto& lit : clause) {
                std::vector<std::size_t> open;
                for (std::size_t v = 1; v <= f.num_vars; ++v) {
                    if (occurrences[v] < 3) open.push_back(v);
                }
                if (open.empty()) throw std::invalid_argument("too many clauses for the occurrence cap");
                const std::size_t var = open[rng.below(open.size())];
                ++occurrences[var];
                lit = rng.below(2) ? static_cast<int>(var) : -static_cast<int>(var);
            }
            f.clauses.push_back(clause);
        }
    }
    const wlcs::SubsetProductInstance sp = wlcs::sat13_to_ksubset(f, k);
    const std::string planted = planted_line([&] { return wlcs::sat13_exists(f); });
    write_file(common.output, planted + wlcs::serialize_subset_product(sp));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers, approximation schemes, and instance generators for the weighted LCS "
                 "problem on probability-weighted sequences"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Exact optimum of an instance file");
    solve->add_option("--input", solve_args.input, "WLCS instance file")->required();
    solve->add_option("--method", solve_args.method, "auto|pareto|brute|dfs")
        ->check(CLI::IsMember({"auto", "pareto", "brute", "dfs"}));
    solve->add_option("--witness-out", solve_args.witness_out, "write the witness to this file");
    solve->add_option("--threads", solve_args.threads, "worker count for the brute-force search");

    ApproxArgs approx_args;
    auto* approx = app.add_subcommand("approx", "(1-eps)-approximation with exactness detection");
    approx->add_option("--input", approx_args.input, "WLCS instance file")->required();
    approx->add_option("--eps", approx_args.eps, "accuracy as an exact rational, e.g. 1/4")->required();
    approx->add_option("--witness-out", approx_args.witness_out, "write the witness to this file");
    approx->add_option("--threads", approx_args.threads, "worker count for the exhaustive branch");

    std::string ptas_input, ptas_witness_out;
    auto* ptas = app.add_subcommand("ptas", "Length-d solution with OPT in {d, d+1}");
    ptas->add_option("--input", ptas_input, "WLCS instance file")->required();
    ptas->add_option("--witness-out", ptas_witness_out, "write the witness to this file");

    std::string unify_input, unify_output;
    std::size_t unify_k = 0;
    auto* unify = app.add_subcommand("unify", "Rewrite two thresholds into one");
    unify->add_option("--input", unify_input, "WLCS instance file")->required();
    unify->add_option("-k,--k", unify_k, "decision length on the original instance")->required();
    unify->add_option("--output", unify_output, "where to write the rewritten instance")->required();

    std::string verify_input, verify_witness;
    auto* verify = app.add_subcommand("verify", "Check a witness against an instance");
    verify->add_option("--input", verify_input, "WLCS instance file")->required();
    verify->add_option("--witness", verify_witness, "witness file")->required();

    auto* gen = app.add_subcommand("gen", "Emit instance files, optionally with planted answers");
    gen->require_subcommand(1);

    GenCommon g_appendix, g_subset, g_diagonal, g_pcode, g_sat;
    std::string appendix_x = "1";
    auto* gen_appendix = gen->add_subcommand("appendix", "The rounding-sensitivity fixture");
    gen_appendix->add_option("--x", appendix_x, "top-left Y probability in [0, 1]");
    gen_appendix->add_option("-o,--output", g_appendix.output, "output file")->required();

    std::vector<std::string> sp_numbers;
    std::string sp_target;
    std::size_t sp_random_n = 0;
    std::uint64_t sp_max_value = 50;
    auto* gen_subset = gen->add_subcommand("subset-product", "Subset-product instance as WLCS");
    gen_subset->add_option("--numbers", sp_numbers, "comma-separated positive integers")->delimiter(',');
    gen_subset->add_option("--target", sp_target, "target product");
    gen_subset->add_option("--random-n", sp_random_n, "draw this many numbers instead");
    gen_subset->add_option("--max-value", sp_max_value, "range of random numbers");
    gen_subset->add_option("--seed", g_subset.seed, "random seed");
    gen_subset->add_option("-o,--output", g_subset.output, "output file")->required();

    std::vector<std::string> diag_numbers;
    std::string diag_target;
    std::size_t diag_k = 1;
    auto* gen_diag = gen->add_subcommand("diagonal", "k-sized subset-product instance as WLCS");
    gen_diag->add_option("--numbers", diag_numbers, "comma-separated positive integers")
        ->delimiter(',')
        ->required();
    gen_diag->add_option("--target", diag_target, "target product")->required();
    gen_diag->add_option("-k,--k", diag_k, "subset size")->required();
    gen_diag->add_option("-o,--output", g_diagonal.output, "output file")->required();

    std::string pc_graph;
    std::size_t pc_random_n = 0, pc_k = 1;
    auto* gen_pc = gen->add_subcommand("perfect-code", "Perfect-code instance as sized subset-product");
    gen_pc->add_option("--graph", pc_graph, "graph file");
    gen_pc->add_option("--random-n", pc_random_n, "random graph on this many vertices");
    gen_pc->add_option("-k,--k", pc_k, "code size")->required();
    gen_pc->add_option("--seed", g_pcode.seed, "random seed");
    gen_pc->add_option("-o,--output", g_pcode.output, "output file")->required();

    std::string sat_cnf;
    std::size_t sat_vars = 0, sat_clauses = 0, sat_k = 1;
    auto* gen_sat = gen->add_subcommand("sat13", "Sparse 1-in-3 instance as sized subset-product");
    gen_sat->add_option("--cnf", sat_cnf, "DIMACS-like formula file");
    gen_sat->add_option("--vars", sat_vars, "random formula: variable count");
    gen_sat->add_option("--clauses", sat_clauses, "random formula: clause count");
    gen_sat->add_option("-k,--k", sat_k, "block count")->required();
    gen_sat->add_option("--seed", g_sat.seed, "random seed");
    gen_sat->add_option("-o,--output", g_sat.output, "output file")->required();

    try {
        app.parse(argc, argv);

        if (solve->parsed()) return run_solve(solve_args);
        if (approx->parsed()) return run_approx(approx_args);
        if (ptas->parsed()) return run_ptas(ptas_input, ptas_witness_out);
        if (unify->parsed()) return run_unify(unify_input, unify_k, unify_output);
        if (verify->parsed()) return run_verify(verify_input, verify_witness);
        if (gen->parsed()) {
            if (gen_appendix->parsed()) return run_gen_appendix(appendix_x, g_appendix);
            if (gen_subset->parsed())
                return run_gen_subset_product(sp_numbers, sp_target, sp_random_n, sp_max_value, g_subset);
            if (gen_diag->parsed()) return run_gen_diagonal(diag_numbers, diag_target, diag_k, g_diagonal);
            if (gen_pc->parsed()) return run_gen_perfect_code(pc_graph, pc_random_n, pc_k, g_pcode);
            if (gen_sat->parsed()) return run_gen_sat13(sat_cnf, sat_vars, sat_clauses, sat_k, g_sat);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitParse;
    } catch (const wlcs::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const wlcs::ResourceLimitError& e) {
        std::cerr << e.what() << "\n";
        return kExitResource;
    } catch (const wlcs::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const wlcs::WitnessShapeError& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    }
}
