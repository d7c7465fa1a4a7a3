#include "wlcs/formats.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "wlcs/errors.hpp"

namespace wlcs {

namespace {

struct Token {
    std::string text;
    std::size_t col;  // 1-based
};

struct LogicalLine {
    std::size_t number;  // 1-based
    std::vector<Token> tokens;
};

bool is_comment_or_blank(const std::string& line, bool cnf_style) {
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (c == ' ' || c == '\t') continue;
        if (c == '#') return true;
        if (cnf_style && c == 'c' && (i + 1 == line.size() || line[i + 1] == ' ' || line[i + 1] == '\t'))
            return true;
        return false;
    }
    return true;  // blank
}

std::vector<LogicalLine> tokenize(const std::string& text, bool cnf_style = false) {
    std::vector<LogicalLine> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ++line_no;
        if (!is_comment_or_blank(line, cnf_style)) {
            LogicalLine ll{line_no, {}};
            std::size_t i = 0;
            while (i < line.size()) {
                if (line[i] == ' ' || line[i] == '\t') {
                    ++i;
                    continue;
                }
                const std::size_t tok_start = i;
                while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
                ll.tokens.push_back({line.substr(tok_start, i - tok_start), tok_start + 1});
            }
            out.push_back(std::move(ll));
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

class LineCursor {
public:
    explicit LineCursor(std::vector<LogicalLine> lines) : lines_(std::move(lines)) {}

    bool done() const { return pos_ >= lines_.size(); }

    const LogicalLine& peek() const {
        if (done()) throw ParseError(last_line() + 1, 1, "unexpected end of input");
        return lines_[pos_];
    }

    const LogicalLine& take() {
        const auto& l = peek();
        ++pos_;
        return l;
    }

    void expect_done() const {
        if (!done()) throw ParseError(lines_[pos_].number, lines_[pos_].tokens[0].col, "trailing content");
    }

    std::size_t last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

private:
    std::vector<LogicalLine> lines_;
    std::size_t pos_ = 0;
};

[[noreturn]] void fail(const LogicalLine& line, std::size_t col, const std::string& msg) {
    throw ParseError(line.number, col, msg);
}

void expect_token_count(const LogicalLine& line, std::size_t count, const std::string& what) {
    if (line.tokens.size() != count) {
        fail(line, line.tokens.empty() ? 1 : line.tokens[0].col,
             "expected " + what + " (" + std::to_string(count) + " tokens, found " +
                 std::to_string(line.tokens.size()) + ")");
    }
}

void expect_header(LineCursor& cur, const std::string& name) {
    const auto& line = cur.take();
    expect_token_count(line, 2, "header '" + name + " 1'");
    if (line.tokens[0].text != name) fail(line, line.tokens[0].col, "expected '" + name + "' header");
    if (line.tokens[1].text != "1") fail(line, line.tokens[1].col, "unsupported format version");
}

const LogicalLine& expect_keyword_line(LineCursor& cur, const std::string& keyword) {
    const auto& line = cur.take();
    if (line.tokens.empty() || line.tokens[0].text != keyword) {
        fail(line, line.tokens.empty() ? 1 : line.tokens[0].col, "expected '" + keyword + "' line");
    }
    return line;
}

Rational parse_rational_token(const LogicalLine& line, const Token& tok) {
    try {
        return Rational::parse(tok.text);
    } catch (const std::invalid_argument& e) {
        fail(line, tok.col, e.what());
    }
}

std::uint64_t parse_uint_token(const LogicalLine& line, const Token& tok, const std::string& what) {
    if (tok.text.empty() || tok.text.size() > 18) fail(line, tok.col, "malformed " + what);
    std::uint64_t value = 0;
    for (char c : tok.text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail(line, tok.col, "malformed " + what);
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return value;
}

BigInt parse_bigint_token(const LogicalLine& line, const Token& tok, const std::string& what) {
    if (tok.text.empty()) fail(line, tok.col, "malformed " + what);
    for (char c : tok.text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail(line, tok.col, "malformed " + what);
    }
    return BigInt(tok.text);
}

std::vector<std::vector<Rational>> parse_rows(LineCursor& cur, std::size_t count, std::size_t width) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(count);
    for (std::size_t r = 0; r < count; ++r) {
        const auto& line = cur.take();
        expect_token_count(line, width, "a probability row");
        std::vector<Rational> row;
        row.reserve(width);
        for (const auto& tok : line.tokens) row.push_back(parse_rational_token(line, tok));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    LineCursor cur(tokenize(text));
    expect_header(cur, "WLCS");

    const auto& alpha_line = expect_keyword_line(cur, "alphabet:");
    if (alpha_line.tokens.size() < 2) fail(alpha_line, alpha_line.tokens[0].col, "empty alphabet");
    std::vector<std::string> letters;
    for (std::size_t t = 1; t < alpha_line.tokens.size(); ++t) letters.push_back(alpha_line.tokens[t].text);
    std::optional<Alphabet> alphabet;
    try {
        alphabet.emplace(std::move(letters));
    } catch (const std::invalid_argument& e) {
        fail(alpha_line, alpha_line.tokens[1].col, e.what());
    }

    auto threshold = [&](const char* key) {
        const auto& line = expect_keyword_line(cur, key);
        expect_token_count(line, 2, std::string("'") + key + " NUM/DEN'");
        return parse_rational_token(line, line.tokens[1]);
    };
    const Rational a1 = threshold("a1:");
    const Rational a2 = threshold("a2:");

    std::optional<std::size_t> k;
    if (!cur.done() && !cur.peek().tokens.empty() && cur.peek().tokens[0].text == "k:") {
        const auto& line = cur.take();
        expect_token_count(line, 2, "'k: INT'");
        k = parse_uint_token(line, line.tokens[1], "decision target");
    }

    auto sequence = [&](const char* name) {
        const auto& line = expect_keyword_line(cur, name);
        expect_token_count(line, 2, std::string("'") + name + " <length>'");
        const auto len = parse_uint_token(line, line.tokens[1], "sequence length");
        return WeightedSequence{*alphabet, parse_rows(cur, len, alphabet->size())};
    };
    WeightedSequence X = sequence("X");
    WeightedSequence Y = sequence("Y");
    cur.expect_done();

    Instance inst{std::move(X), std::move(Y), a1, a2, k};
    require_valid(inst);  // ValidationError, distinct from syntax problems
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << "WLCS 1\n";
    out << "alphabet:";
    for (const auto& l : inst.X.alphabet.letters()) out << ' ' << l;
    out << "\n";
    out << "a1: " << inst.a1.str() << "\n";
    out << "a2: " << inst.a2.str() << "\n";
    if (inst.k) out << "k: " << *inst.k << "\n";
    for (const auto* seq : {&inst.X, &inst.Y}) {
        out << (seq == &inst.X ? "X " : "Y ") << seq->length() << "\n";
        for (const auto& row : seq->rows) {
            for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j].str();
            out << "\n";
        }
    }
    return out.str();
}

Witness parse_witness(const std::string& text) {
    LineCursor cur(tokenize(text));
    Witness w;
    {
        const auto& line = expect_keyword_line(cur, "s:");
        for (std::size_t t = 1; t < line.tokens.size(); ++t) w.s.push_back(line.tokens[t].text);
    }
    auto positions = [&](const char* key, std::vector<std::size_t>& out) {
        const auto& line = expect_keyword_line(cur, key);
        for (std::size_t t = 1; t < line.tokens.size(); ++t) {
            out.push_back(parse_uint_token(line, line.tokens[t], "position"));
        }
        if (out.size() != w.s.size()) {
            fail(line, line.tokens[0].col,
                 std::string(key) + " lists " + std::to_string(out.size()) +
                     " positions for " + std::to_string(w.s.size()) + " letters");
        }
    };
    positions("pi:", w.pi);
    positions("rho:", w.rho);
    cur.expect_done();
    return w;
}

std::string serialize_witness(const Witness& w) {
    std::ostringstream out;
    out << "s:";
    for (const auto& l : w.s) out << ' ' << l;
    out << "\npi:";
    for (auto p : w.pi) out << ' ' << p;
    out << "\nrho:";
    for (auto p : w.rho) out << ' ' << p;
    out << "\n";
    return out.str();
}

SubsetProductInstance parse_subset_product(const std::string& text) {
    LineCursor cur(tokenize(text));
    expect_header(cur, "SUBSETPROD");
    SubsetProductInstance sp;
    if (!cur.done() && !cur.peek().tokens.empty() && cur.peek().tokens[0].text == "k:") {
        const auto& line = cur.take();
        expect_token_count(line, 2, "'k: INT'");
        sp.k = parse_uint_token(line, line.tokens[1], "subset size");
    }
    {
        const auto& line = expect_keyword_line(cur, "numbers:");
        for (std::size_t t = 1; t < line.tokens.size(); ++t) {
            sp.L.push_back(parse_bigint_token(line, line.tokens[t], "number"));
        }
    }
    {
        const auto& line = expect_keyword_line(cur, "target:");
        expect_token_count(line, 2, "'target: INT'");
        sp.P = parse_bigint_token(line, line.tokens[1], "target");
    }
    cur.expect_done();
    std::vector<std::string> problems;
    for (std::size_t i = 0; i < sp.L.size(); ++i) {
        if (sp.L[i] == 0) {
            problems.push_back("number " + std::to_string(i + 1) + " is zero; values must be positive");
        }
    }
    if (sp.P == 0) problems.push_back("target is zero; it must be positive");
    if (!problems.empty()) throw ValidationError(std::move(problems));
    return sp;
}

std::string serialize_subset_product(const SubsetProductInstance& sp) {
    std::ostringstream out;
    out << "SUBSETPROD 1\n";
    if (sp.k) out << "k: " << *sp.k << "\n";
    out << "numbers:";
    for (const auto& l : sp.L) out << ' ' << l.get_str();
    out << "\ntarget: " << sp.P.get_str() << "\n";
    return out.str();
}

Graph parse_graph(const std::string& text) {
    LineCursor cur(tokenize(text));
    expect_header(cur, "GRAPH");
    Graph g;
    {
        const auto& line = expect_keyword_line(cur, "n:");
        expect_token_count(line, 2, "'n: INT'");
        g.n = parse_uint_token(line, line.tokens[1], "vertex count");
    }
    while (!cur.done()) {
        const auto& line = cur.take();
        expect_token_count(line, 2, "an edge 'u v'");
        const auto u = parse_uint_token(line, line.tokens[0], "vertex");
        const auto v = parse_uint_token(line, line.tokens[1], "vertex");
        g.edges.emplace_back(u, v);
    }
    validate(g);
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "GRAPH 1\nn: " << g.n << "\n";
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << "\n";
    return out.str();
}

Sat13Formula parse_cnf(const std::string& text) {
    LineCursor cur(tokenize(text, /*cnf_style=*/true));
    Sat13Formula f;
    std::size_t declared_clauses = 0;
    {
        const auto& line = cur.take();
        expect_token_count(line, 4, "'p cnf VARS CLAUSES'");
        if (line.tokens[0].text != "p" || line.tokens[1].text != "cnf") {
            fail(line, line.tokens[0].col, "expected 'p cnf' header");
        }
        f.num_vars = parse_uint_token(line, line.tokens[2], "variable count");
        declared_clauses = parse_uint_token(line, line.tokens[3], "clause count");
    }
    while (!cur.done()) {
        const auto& line = cur.take();
        expect_token_count(line, 4, "a clause 'l1 l2 l3 0'");
        std::array<int, 3> clause{};
        for (std::size_t t = 0; t < 3; ++t) {
            const auto& tok = line.tokens[t];
            bool neg = !tok.text.empty() && tok.text[0] == '-';
            const std::string digits = neg ? tok.text.substr(1) : tok.text;
            const auto var = parse_uint_token(line, {digits, tok.col}, "literal");
            if (var > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
                fail(line, tok.col, "literal does not fit the variable index type");
            }
            // Range and occurrence rules semantic beyond that; validate() owns them.
            clause[t] = neg ? -static_cast<int>(var) : static_cast<int>(var);
        }
        if (line.tokens[3].text != "0") fail(line, line.tokens[3].col, "clause must end with 0");
        f.clauses.push_back(clause);
    }
    if (f.clauses.size() != declared_clauses) {
        throw ParseError(cur.last_line(), 1,
                         "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                             std::to_string(f.clauses.size()));
    }
    validate(f);
    return f;
}

std::string serialize_cnf(const Sat13Formula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << "\n";
    for (const auto& clause : f.clauses) {
        out << clause[0] << ' ' << clause[1] << ' ' << clause[2] << " 0\n";
    }
    return out.str();
}

std::optional<std::string> planted_answer(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t i = 0;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size() || (line[i] != '#' && line[i] != 'c')) continue;
        std::istringstream tokens(line.substr(i + 1));
        std::string word;
        if (!(tokens >> word) || word != "planted:") continue;
        std::string answer, rest;
        if (!(tokens >> answer)) continue;
        while (tokens >> rest) answer += " " + rest;
        return answer;
    }
    return std::nullopt;
}

std::string planted_comment(const std::string& answer, bool cnf_style) {
    return (cnf_style ? "c planted: " : "# planted: ") + answer + "\n";
}

}  // namespace wlcs
