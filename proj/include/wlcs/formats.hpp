#pragma once

#include <optional>
#include <string>

#include "wlcs/model.hpp"
#include "wlcs/reductions.hpp"

namespace wlcs {

/// Line-oriented text formats. All parsers ignore blank lines and comment
/// lines ('#' as the first non-space character; 'c' in the DIMACS-like CNF
/// format), and report syntax problems as ParseError with 1-based line and
/// column. parse_instance additionally runs semantic validation, surfaced
/// separately as ValidationError.
///
/// Instance:                    Witness:
///   WLCS 1                       s: a a b
///   alphabet: a b                pi: 1 2 4
///   a1: 1/8                      rho: 2 3 5
///   a2: 1/4
///   k: 4          (optional)
///   X 2
///   1 0
///   1/2 1/2
///   Y 1
///   1/4 3/4
///
/// Subset product:              Graph:               CNF (DIMACS-like):
///   SUBSETPROD 1                 GRAPH 1              p cnf 3 1
///   k: 2        (optional)       n: 3                 1 -2 3 0
///   numbers: 2 3 5               1 2
///   target: 6                    2 3

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

Witness parse_witness(const std::string& text);
std::string serialize_witness(const Witness& w);

SubsetProductInstance parse_subset_product(const std::string& text);
std::string serialize_subset_product(const SubsetProductInstance& sp);

Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

Sat13Formula parse_cnf(const std::string& text);
std::string serialize_cnf(const Sat13Formula& f);

/// Generators stamp the known answer of an emitted instance into a comment
/// ("# planted: ..." or "c planted: ..." in CNF); parsers skip it, test
/// harnesses read it back with this.
std::optional<std::string> planted_answer(const std::string& text);
std::string planted_comment(const std::string& answer, bool cnf_style = false);

}  // namespace wlcs
