#include "sgc/io.hpp"

#include <sstream>

namespace sgc {

namespace {

int parse_int(const std::string& tok, int line) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::logic_error&) {
        throw ParseError(line, "expected integer, got '" + tok + "'");
    }
}

int parse_sign(const std::string& tok, int line) {
    if (tok == "+") return +1;
    if (tok == "-") return -1;
    throw ParseError(line, "expected sign '+' or '-', got '" + tok + "'");
}

} // namespace

ParsedInput parse_input(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool have_n = false;
    int n = 0;
    std::vector<EdgeRecord> edges;
    std::optional<SignedPermutation> perm;

    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        const std::string& directive = tok[0];
        auto want = [&](std::size_t count) {
            if (tok.size() != count + 1)
                throw ParseError(line_no, "'" + directive + "' takes " + std::to_string(count) +
                                              " argument(s)");
        };
        if (!have_n && directive != "n")
            throw ParseError(line_no, "first directive must be 'n <int>'");

        auto endpoint = [&](const std::string& t) {
            int v = parse_int(t, line_no);
            if (v < 1 || v > n)
                throw ValidationError("line " + std::to_string(line_no) +
                                      ": endpoint out of range 1.." + std::to_string(n));
            return v;
        };

        if (directive == "n") {
            if (have_n) throw ParseError(line_no, "duplicate 'n' directive");
            want(1);
            n = parse_int(tok[1], line_no);
            if (n < 0) throw ParseError(line_no, "vertex count must be nonnegative");
            have_n = true;
        } else if (directive == "link") {
            want(3);
            int u = endpoint(tok[1]), v = endpoint(tok[2]);
            if (u == v)
                throw ValidationError("line " + std::to_string(line_no) +
                                      ": link endpoints must be distinct");
            edges.push_back(link_edge(u, v, parse_sign(tok[3], line_no)));
        } else if (directive == "loop") {
            want(2);
            edges.push_back(loop_edge(endpoint(tok[1]), parse_sign(tok[2], line_no)));
        } else if (directive == "half") {
            want(2);
            edges.push_back(half_edge(endpoint(tok[1]), parse_sign(tok[2], line_no)));
        } else if (directive == "free") {
            if (tok.size() != 1)
                throw ParseError(line_no, "'free' takes no arguments (free loops carry no sign)");
            edges.push_back(free_loop_edge());
        } else if (directive == "perm") {
            if (perm.has_value()) throw ParseError(line_no, "duplicate 'perm' directive");
            if (tok.size() != static_cast<std::size_t>(n) + 1)
                throw ParseError(line_no, "'perm' needs exactly n = " + std::to_string(n) +
                                              " entries");
            std::vector<int> word;
            for (std::size_t t = 1; t < tok.size(); ++t) word.push_back(parse_int(tok[t], line_no));
            try {
                perm = SignedPermutation::from_word(word);
            } catch (const ValidationError& err) {
                throw ParseError(line_no, err.what());
            }
        } else {
            throw ParseError(line_no, "unknown directive '" + directive + "'");
        }
    }
    if (!have_n) throw ParseError(line_no, "missing 'n' directive");
    return ParsedInput{SignedGraph(n, std::move(edges)), std::move(perm)};
}

SignedGraph parse_graph(const std::string& text) { return parse_input(text).graph; }

std::string print_graph(const SignedGraph& g) {
    std::ostringstream out;
    out << "n " << g.n() << "\n";
    for (const auto& e : g.edges()) {
        switch (e.kind) {
            case EdgeKind::link:
                out << "link " << e.u << " " << e.v << " " << (e.sign > 0 ? "+" : "-") << "\n";
                break;
            case EdgeKind::loop:
                out << "loop " << e.u << " " << (e.sign > 0 ? "+" : "-") << "\n";
                break;
            case EdgeKind::half_edge:
                out << "half " << e.u << " " << (e.sign > 0 ? "+" : "-") << "\n";
                break;
            case EdgeKind::free_loop:
                out << "free\n";
                break;
        }
    }
    return out.str();
}

std::string print_perm(const SignedPermutation& p) {
    std::ostringstream out;
    out << "perm";
    for (int a : p.to_word()) out << " " << a;
    return out.str();
}

SignedPermutation parse_perm_word(const std::string& word, int n) {
    std::istringstream in(word);
    std::string first;
    in >> first;
    if (first != "perm") throw ValidationError("permutation word must start with 'perm'");
    std::vector<int> entries;
    for (int v; in >> v;) entries.push_back(v);
    if (static_cast<int>(entries.size()) != n)
        throw ValidationError("permutation word needs exactly " + std::to_string(n) + " entries");
    return SignedPermutation::from_word(entries);
}

nlohmann::ordered_json flat_to_json(const SignedFlat& f) {
    nlohmann::ordered_json out;
    out["zero"] = f.zero_set;
    auto blocks = nlohmann::ordered_json::array();
    for (const auto& block : f.blocks) {
        nlohmann::ordered_json b;
        b["elems"] = block;
        std::vector<int> signs;
        for (int i : block) signs.push_back(f.sign(i));
        b["signs"] = signs;
        blocks.push_back(std::move(b));
    }
    out["blocks"] = std::move(blocks);
    return out;
}

nlohmann::ordered_json polynomial_to_json(const ExactPolynomial& p) {
    return nlohmann::ordered_json(p.coefficient_strings());
}

} // namespace sgc
