#ifndef MAPCONE_IO_HPP
#define MAPCONE_IO_HPP

#include <json.hpp>
#include <string>

#include "mapcone/dg.hpp"

namespace mapcone {

using Json = nlohmann::ordered_json;

// Line-oriented monomial grammar: monomial := term ('*' term)*,
// term := 'x' INT ('^' INT)?, '#' comments, '@minimalize' directive, and
// the literal '1' for the constant monomial.  Generator order is line
// order and n_vars is the largest variable index in the file.
struct ParsedIdeal {
  OrderedIdeal ideal;
  bool minimalized = false;  // the @minimalize directive was applied
};
ParsedIdeal parse_ideal(const std::string& text);

// Same grammar without the minimality requirement: a plain sequence.
std::vector<Monomial> parse_monomial_sequence(const std::string& text);

// Lines of space-separated ground-set elements; the exchange axiom is
// verified and generators come out in descending degrevlex order.
OrderedIdeal parse_matroid(const std::string& text);

// Extended grammar with integer coefficients and '+'/'-', in lines
// "f: <poly>", "g: <poly>", "a: <poly>, <poly>, ...".
AciInput parse_aci(const std::string& text);

// Polynomials over a fixed ambient count (used for koszulseq input).
std::vector<Polynomial> parse_poly_lines(const std::string& text, char tag);

std::string print_ideal(const OrderedIdeal& ideal);

struct CommandOptions {
  OrderStrategy order = OrderStrategy::given;
  uint64_t seed = 0;
  bool matroid = false;
  KoszulSeqMode mode = KoszulSeqMode::regular;
};

Json run_analyze(const std::string& input, const CommandOptions& opt);
Json run_resolve(const std::string& input, const CommandOptions& opt);
Json run_betti(const std::string& input, const CommandOptions& opt);
Json run_verify(const std::string& input, const CommandOptions& opt);
Json run_taylor(const std::string& input, const CommandOptions& opt);
Json run_dgcheck(const std::string& input, const CommandOptions& opt);
Json run_aci(const std::string& input, const CommandOptions& opt);
Json run_koszulseq(const std::string& input, const CommandOptions& opt);

Json error_json(const Error& e);
std::string render_text(const Json& report);

Json resolution_json(const FreeComplex& F);
Json verify_json(const VerifyReport& rep);
Json betti_json(const BettiTable& t);

// Product table as triples (label_a, label_b, result terms), in the same
// envelope style as the differential entries.
Json dg_table_json(const DGAlgebra& A);

}  // namespace mapcone

#endif
