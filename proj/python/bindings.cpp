#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "wlcs/approx.hpp"
#include "wlcs/dp_core.hpp"
#include "wlcs/errors.hpp"
#include "wlcs/formats.hpp"
#include "wlcs/model.hpp"
#include "wlcs/rational.hpp"
#include "wlcs/reductions.hpp"
#include "wlcs/transforms.hpp"

namespace py = pybind11;
using namespace wlcs;

namespace {

// Python ints are arbitrary precision, so decimal strings are the lossless
// bridge in both directions.
py::object to_pyint(const BigInt& z) {
    return py::module_::import("builtins").attr("int")(z.get_str());
}

BigInt to_bigint(const py::object& v) {
    const std::string s = py::str(v).cast<std::string>();
    if (!s.empty() && s[0] == '-') throw std::invalid_argument("negative integers not supported");
    return BigInt(s);
}

Rational make_rational(const py::object& num, const py::object& den) {
    return Rational(to_bigint(num), to_bigint(den));
}

py::object rational_as_fraction(const Rational& r) {
    auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_pyint(r.num()), to_pyint(r.den()));
}

WeightedSequence make_sequence(const std::vector<std::string>& letters,
                               const std::vector<std::vector<Rational>>& rows) {
    return WeightedSequence{Alphabet(letters), rows};
}

Instance make_instance(const std::vector<std::string>& letters,
                       const std::vector<std::vector<Rational>>& x_rows,
                       const std::vector<std::vector<Rational>>& y_rows, const Rational& a1,
                       const Rational& a2, std::optional<std::size_t> k) {
    Instance inst{make_sequence(letters, x_rows), make_sequence(letters, y_rows), a1, a2, k};
    require_valid(inst);
    return inst;
}

SolveResult solve_dispatch(const Instance& inst, const std::string& method, unsigned threads) {
    if (method == "pareto") return pareto_opt(inst);
    if (method == "brute") return brute_force_opt(inst, std::nullopt, threads);
    if (method == "auto") {
        try {
            return pareto_opt(inst);
        } catch (const ResourceLimitError&) {
            return brute_force_opt(inst, std::nullopt, threads);
        }
    }
    throw std::invalid_argument("unknown method '" + method + "' (expected auto, pareto, or brute)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact solvers, approximation schemes, and hardness-reduction generators "
              "for weighted LCS over probability-weighted sequences.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<WitnessShapeError>(m, "WitnessShapeError", PyExc_ValueError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

    py::class_<Rational>(m, "Rational")
        .def(py::init([](const py::object& num, const py::object& den) {
                 return make_rational(num, den);
             }),
             py::arg("num"), py::arg("den") = py::int_(1))
        .def_static("parse", &Rational::parse, py::arg("text"),
                    "Parse 'NUM/DEN' or 'NUM'; stored exactly as written, unreduced.")
        .def_property_readonly("num", [](const Rational& r) { return to_pyint(r.num()); })
        .def_property_readonly("den", [](const Rational& r) { return to_pyint(r.den()); })
        .def("mul", &Rational::mul)
        .def("pow", &Rational::pow, py::arg("e"))
        .def("one_minus", &Rational::one_minus)
        .def("canonical", &Rational::canonical)
        .def("is_zero", &Rational::is_zero)
        .def("as_fraction", &rational_as_fraction,
             "The value as a fractions.Fraction (reduced; representation is lost).")
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__mul__", &Rational::mul)
        .def("__str__",
             [](const Rational& r) { return r.num().get_str() + "/" + r.den().get_str(); })
        .def("__repr__", [](const Rational& r) {
            return "Rational(" + r.num().get_str() + ", " + r.den().get_str() + ")";
        });

    m.def("mul_many", &mul_many, py::arg("factors"),
          "Exact product of a list of Rationals via a balanced tree; canonical result.");
    m.def("structurally_equal",
          py::overload_cast<const Rational&, const Rational&>(&structurally_equal));

    py::class_<Alphabet>(m, "Alphabet")
        .def(py::init<std::vector<std::string>>(), py::arg("letters"))
        .def_property_readonly("letters", &Alphabet::letters)
        .def("__len__", &Alphabet::size)
        .def("index_of", &Alphabet::index_of, py::arg("name"))
        .def(py::self == py::self);

    py::class_<WeightedSequence>(m, "WeightedSequence")
        .def(py::init(&make_sequence), py::arg("letters"), py::arg("rows"))
        .def_readonly("alphabet", &WeightedSequence::alphabet)
        .def_readonly("rows", &WeightedSequence::rows)
        .def("__len__", &WeightedSequence::length)
        .def("prob", &WeightedSequence::prob, py::arg("pos"), py::arg("letter_index"),
             "p_pos(letter); pos is 1-based.");

    py::class_<Instance>(m, "Instance")
        .def(py::init(&make_instance), py::arg("letters"), py::arg("x_rows"), py::arg("y_rows"),
             py::arg("a1"), py::arg("a2"), py::arg("k") = std::nullopt)
        .def_readonly("X", &Instance::X)
        .def_readonly("Y", &Instance::Y)
        .def_readonly("a1", &Instance::a1)
        .def_readonly("a2", &Instance::a2)
        .def_readonly("k", &Instance::k)
        .def("serialize", [](const Instance& inst) { return serialize_instance(inst); })
        .def("__repr__", [](const Instance& inst) {
            return "<Instance |X|=" + std::to_string(inst.X.length()) +
                   " |Y|=" + std::to_string(inst.Y.length()) +
                   " K=" + std::to_string(inst.X.alphabet.size()) + ">";
        });

    py::class_<Witness>(m, "Witness")
        .def(py::init<>())
        .def(py::init([](std::vector<std::string> s, std::vector<std::size_t> pi,
                         std::vector<std::size_t> rho) {
                 return Witness{std::move(s), std::move(pi), std::move(rho)};
             }),
             py::arg("s"), py::arg("pi"), py::arg("rho"))
        .def_readwrite("s", &Witness::s)
        .def_readwrite("pi", &Witness::pi)
        .def_readwrite("rho", &Witness::rho)
        .def("__len__", &Witness::length);

    py::class_<VerifyResult>(m, "VerifyResult")
        .def_readonly("px", &VerifyResult::px)
        .def_readonly("py", &VerifyResult::py)
        .def_readonly("feasible", &VerifyResult::feasible);

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("opt", &SolveResult::opt)
        .def_readonly("witness", &SolveResult::witness);

    py::class_<EmbedResult>(m, "EmbedResult")
        .def_readonly("prob", &EmbedResult::prob)
        .def_readonly("positions", &EmbedResult::positions);

    py::class_<PtasResult>(m, "PtasResult")
        .def_readonly("d", &PtasResult::d)
        .def_readonly("witness", &PtasResult::witness);

    py::class_<ApproxResult>(m, "ApproxResult")
        .def_readonly("length", &ApproxResult::length)
        .def_readonly("witness", &ApproxResult::witness)
        .def_readonly("exact", &ApproxResult::exact)
        .def_readonly("enumerated", &ApproxResult::enumerated);

    m.def("parse_instance", &parse_instance, py::arg("text"));
    m.def("serialize_instance", &serialize_instance, py::arg("instance"));
    m.def("parse_witness", &parse_witness, py::arg("text"));
    m.def("serialize_witness", &serialize_witness, py::arg("witness"));
    m.def("planted_answer", &planted_answer, py::arg("text"),
          "The '# planted: ...' payload of a generated file, if present.");
    m.def("validate", py::overload_cast<const Instance&>(&validate), py::arg("instance"),
          "All violated structural constraints, empty when valid.");
    m.def("verify_witness", &verify_witness, py::arg("instance"), py::arg("witness"));
    m.def("embedding_probability", &embedding_probability, py::arg("sequence"), py::arg("s"),
          py::arg("positions"));
    m.def("subs_membership", &subs_membership, py::arg("sequence"), py::arg("a"), py::arg("s"));
    m.def("embed_dp",
          py::overload_cast<const WeightedSequence&, const std::vector<std::string>&>(&embed_dp),
          py::arg("sequence"), py::arg("s"),
          "Best embedding of s into the sequence: probability and positions.");

    m.def("solve", &solve_dispatch, py::arg("instance"), py::arg("method") = "auto",
          py::arg("threads") = 1,
          "Exact optimum with witness; 'auto' falls back to brute when the pareto "
          "frontier overruns its budget.");
    m.def("pareto_opt", &pareto_opt, py::arg("instance"));
    m.def("brute_force_opt", &brute_force_opt, py::arg("instance"),
          py::arg("len_cap") = std::nullopt, py::arg("threads") = 1);
    m.def("dfs_oracle", &dfs_oracle, py::arg("instance"), py::arg("size_cap") = 16);

    m.def("ptas_core", &ptas_core, py::arg("instance"),
          "Feasible length d with OPT-1 <= d <= OPT.");
    m.def("eptas", &eptas, py::arg("instance"), py::arg("eps"), py::arg("threads") = 1,
          "Length >= (1-eps)*OPT; exact=True when the optimum is certified.");
    m.def("quantize_cost", &quantize_cost, py::arg("y"), py::arg("a2"), py::arg("n"),
          "Least c in [0, n] with y^n >= a2^c, or None when y < a2.");

    py::class_<UnifiedInstance>(m, "UnifiedInstance")
        .def_readonly("inst_prime", &UnifiedInstance::inst_prime)
        .def_readonly("k_prime", &UnifiedInstance::k_prime)
        .def_readonly("original_k", &UnifiedInstance::original_k)
        .def_readonly("original_a1", &UnifiedInstance::original_a1)
        .def_readonly("original_a2", &UnifiedInstance::original_a2)
        .def_readonly("m", &UnifiedInstance::m)
        .def_readonly("swapped", &UnifiedInstance::swapped)
        .def_readonly("identity", &UnifiedInstance::identity);

    m.def("unify_thresholds", &unify_thresholds, py::arg("instance"), py::arg("k"),
          "Rewrite a two-threshold instance to a single threshold; requires a1 < a2.");
    m.def("unify", &unify, py::arg("instance"), py::arg("k"),
          "Total wrapper: swaps X and Y when a1 > a2, identity when a1 = a2.");
    m.def("forward_map_witness", &forward_map_witness, py::arg("unified"), py::arg("witness"));
    m.def("map_witness_back", &map_witness_back, py::arg("unified"), py::arg("witness"));
    m.def("appendix_counterexample", &appendix_counterexample, py::arg("x"),
          "The 4-position rounding-sensitivity fixture; optimum 4 iff x = 1, else 3.");

    py::class_<SubsetProductInstance>(m, "SubsetProductInstance")
        .def(py::init([](const std::vector<py::object>& numbers, const py::object& target,
                         std::optional<std::size_t> k) {
                 SubsetProductInstance sp;
                 for (const auto& v : numbers) sp.L.push_back(to_bigint(v));
                 sp.P = to_bigint(target);
                 sp.k = k;
                 return sp;
             }),
             py::arg("numbers"), py::arg("target"), py::arg("k") = std::nullopt)
        .def_property_readonly("numbers",
                               [](const SubsetProductInstance& sp) {
                                   py::list out;
                                   for (const auto& l : sp.L) out.append(to_pyint(l));
                                   return out;
                               })
        .def_property_readonly(
            "target", [](const SubsetProductInstance& sp) { return to_pyint(sp.P); })
        .def_readonly("k", &SubsetProductInstance::k);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n,
                         const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
                 Graph g{n, edges};
                 validate(g);
                 return g;
             }),
             py::arg("n"), py::arg("edges"))
        .def_readonly("n", &Graph::n)
        .def_readonly("edges", &Graph::edges);

    py::class_<Sat13Formula>(m, "Sat13Formula")
        .def(py::init([](std::size_t num_vars, const std::vector<std::array<int, 3>>& clauses) {
                 Sat13Formula f{num_vars, clauses};
                 validate(f);
                 return f;
             }),
             py::arg("num_vars"), py::arg("clauses"))
        .def_readonly("num_vars", &Sat13Formula::num_vars)
        .def_readonly("clauses", &Sat13Formula::clauses);

    m.def("sieve_primes", &sieve_primes, py::arg("n"), "The first n primes.");
    m.def("subset_product_to_wlcs", &subset_product_to_wlcs, py::arg("sp"));
    m.def("perfect_code_to_ksubset", &perfect_code_to_ksubset, py::arg("graph"), py::arg("k"));
    m.def("ksubset_to_wlcs", &ksubset_to_wlcs, py::arg("sp"));
    m.def("sat13_to_ksubset", &sat13_to_ksubset, py::arg("formula"), py::arg("k"));
    m.def("subset_product_exists", &subset_product_exists, py::arg("sp"));
    m.def("perfect_code_exists", &perfect_code_exists, py::arg("graph"), py::arg("k"));
    m.def("sat13_exists", &sat13_exists, py::arg("formula"));
}
