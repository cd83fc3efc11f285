#ifndef SGC_IO_HPP
#define SGC_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "sgc/graph.hpp"
#include "sgc/lattice.hpp"
#include "sgc/perm.hpp"
#include "sgc/polynomial.hpp"

namespace sgc {

// Graph text format, one directive per line, `#` starts a comment:
//   n <int>            required first directive
//   link <i> <j> <+|->
//   loop <i> <+|->
//   half <i> <+|->
//   free
//   perm <a_1> ... <a_n>   optional; a_i = +-b(i), negative iff b(i) in delta
struct ParsedInput {
    SignedGraph graph;
    std::optional<SignedPermutation> perm;
};

ParsedInput parse_input(const std::string& text);
SignedGraph parse_graph(const std::string& text);

std::string print_graph(const SignedGraph& g);
std::string print_perm(const SignedPermutation& p);
SignedPermutation parse_perm_word(const std::string& word, int n);

nlohmann::ordered_json flat_to_json(const SignedFlat& f);
nlohmann::ordered_json polynomial_to_json(const ExactPolynomial& p);

} // namespace sgc

#endif
