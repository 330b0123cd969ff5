#include "mapcone/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mapcone {

namespace {

constexpr const char* kSchema = "mapcone-v1";

struct RawTerm {
  std::vector<std::pair<int, int>> powers;  // (variable, exponent)
  long coeff = 1;
};

// One monomial per line, tokenized without an ambient count.
struct RawLine {
  int line_no = 0;
  std::vector<std::pair<int, int>> powers;
};

[[noreturn]] void parse_fail(int line, size_t col, const std::string& msg) {
  throw Error::input("ParseError", "line " + std::to_string(line) + ", column " +
                                       std::to_string(col + 1) + ": " + msg);
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

long read_int(const std::string& s, size_t& i, int line) {
  size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) parse_fail(line, i, "expected an integer");
  return std::stol(s.substr(start, i - start));
}

void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

std::vector<std::pair<int, int>> parse_monomial_powers(const std::string& s, int line) {
  std::vector<std::pair<int, int>> powers;
  size_t i = 0;
  skip_ws(s, i);
  if (i < s.size() && s[i] == '1') {
    ++i;
    skip_ws(s, i);
    if (i != s.size()) parse_fail(line, i, "unexpected input after '1'");
    return powers;
  }
  bool expect_term = true;
  while (i < s.size()) {
    skip_ws(s, i);
    if (i == s.size()) break;
    if (!expect_term) {
      if (s[i] != '*') parse_fail(line, i, "expected '*' between terms");
      ++i;
      skip_ws(s, i);
    }
    if (i == s.size() || s[i] != 'x') parse_fail(line, i, "expected a term 'x<index>'");
    ++i;
    int var = static_cast<int>(read_int(s, i, line));
    if (var < 1) parse_fail(line, i, "variable index must be >= 1");
    int exp = 1;
    skip_ws(s, i);
    if (i < s.size() && s[i] == '^') {
      ++i;
      skip_ws(s, i);
      exp = static_cast<int>(read_int(s, i, line));
      if (exp < 0) parse_fail(line, i, "exponent must be >= 0");
    }
    powers.emplace_back(var, exp);
    expect_term = false;
    skip_ws(s, i);
  }
  if (expect_term) parse_fail(line, 0, "empty monomial");
  return powers;
}

Monomial materialize(const std::vector<std::pair<int, int>>& powers, int n_vars) {
  std::vector<int> e(static_cast<size_t>(n_vars), 0);
  for (auto [v, p] : powers) e[static_cast<size_t>(v - 1)] += p;
  return Monomial(std::move(e));
}

std::pair<std::vector<RawLine>, bool> tokenize_monomial_lines(const std::string& text) {
  std::vector<RawLine> lines;
  bool minimalize_directive = false;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    size_t i = 0;
    skip_ws(body, i);
    if (body[i] == '@') {
      std::string directive = body.substr(i);
      while (!directive.empty() && std::isspace(static_cast<unsigned char>(directive.back())))
        directive.pop_back();
      if (directive == "@minimalize")
        minimalize_directive = true;
      else
        parse_fail(line_no, i, "unknown directive " + directive);
      continue;
    }
    lines.push_back({line_no, parse_monomial_powers(body, line_no)});
  }
  return {lines, minimalize_directive};
}

int ambient_of(const std::vector<RawLine>& lines) {
  int n = 0;
  for (const auto& l : lines)
    for (auto [v, p] : l.powers) n = std::max(n, v);
  return n;
}

}  // namespace

std::vector<Monomial> parse_monomial_sequence(const std::string& text) {
  auto [lines, mindir] = tokenize_monomial_lines(text);
  (void)mindir;
  if (lines.empty()) throw Error::math("EmptyInput", "no monomials in the input");
  int n = std::max(ambient_of(lines), 1);
  std::vector<Monomial> out;
  for (const auto& l : lines) out.push_back(materialize(l.powers, n));
  return out;
}

ParsedIdeal parse_ideal(const std::string& text) {
  auto [lines, minimalize_directive] = tokenize_monomial_lines(text);
  if (lines.empty()) throw Error::math("EmptyInput", "no monomials in the input");
  int n = std::max(ambient_of(lines), 1);
  std::vector<Monomial> monomials;
  for (const auto& l : lines) monomials.push_back(materialize(l.powers, n));

  ParsedIdeal out;
  if (minimalize_directive) {
    out.ideal = minimalize(monomials);
    out.minimalized = true;
    return out;
  }
  for (size_t i = 0; i < monomials.size(); ++i)
    for (size_t j = 0; j < monomials.size(); ++j) {
      if (i == j) continue;
      if (divides(monomials[i], monomials[j]) && (monomials[i] != monomials[j] || i < j))
        throw Error::math("NonMinimal",
                          "generator on line " + std::to_string(lines[i].line_no) +
                              " divides the generator on line " + std::to_string(lines[j].line_no));
    }
  out.ideal = make_ideal(monomials);
  return out;
}

OrderedIdeal parse_matroid(const std::string& text) {
  std::vector<std::vector<int>> bases;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::istringstream ls(body);
    std::vector<int> basis;
    long v;
    while (ls >> v) {
      if (v < 1) parse_fail(line_no, 0, "ground-set elements must be >= 1");
      basis.push_back(static_cast<int>(v));
    }
    if (!ls.eof()) parse_fail(line_no, 0, "expected space-separated integers");
    if (!basis.empty()) bases.push_back(std::move(basis));
  }
  if (bases.empty()) throw Error::math("EmptyInput", "no bases in the input");
  return matroid_ideal(bases);
}

namespace {

std::vector<RawTerm> parse_poly_terms(const std::string& s, int line) {
  std::vector<RawTerm> terms;
  size_t i = 0;
  skip_ws(s, i);
  if (i == s.size()) parse_fail(line, i, "empty polynomial");
  bool first = true;
  while (i < s.size()) {
    long sign = 1;
    skip_ws(s, i);
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      parse_fail(line, i, "expected '+' or '-' between terms");
    }
    skip_ws(s, i);
    RawTerm t;
    t.coeff = sign;
    bool saw_factor = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      t.coeff *= read_int(s, i, line);
      saw_factor = true;
      skip_ws(s, i);
      if (i < s.size() && s[i] == '*') {
        ++i;
        saw_factor = false;
      }
    }
    while (true) {
      skip_ws(s, i);
      if (i >= s.size() || s[i] != 'x') break;
      ++i;
      int var = static_cast<int>(read_int(s, i, line));
      if (var < 1) parse_fail(line, i, "variable index must be >= 1");
      int exp = 1;
      skip_ws(s, i);
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip_ws(s, i);
        exp = static_cast<int>(read_int(s, i, line));
      }
      t.powers.emplace_back(var, exp);
      saw_factor = true;
      skip_ws(s, i);
      if (i < s.size() && s[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!saw_factor) parse_fail(line, i, "expected a coefficient or a variable");
    terms.push_back(std::move(t));
    first = false;
    skip_ws(s, i);
  }
  return terms;
}

Polynomial materialize_poly(const std::vector<RawTerm>& terms, int n_vars) {
  Polynomial p(n_vars);
  for (const auto& t : terms) p.add_term(materialize(t.powers, n_vars), t.coeff);
  return p;
}

int ambient_of_terms(const std::vector<std::vector<RawTerm>>& polys) {
  int n = 0;
  for (const auto& terms : polys)
    for (const auto& t : terms)
      for (auto [v, p] : t.powers) n = std::max(n, v);
  return n;
}

}  // namespace

AciInput parse_aci(const std::string& text) {
  std::vector<std::vector<RawTerm>> f_raw, g_raw;
  std::vector<std::vector<std::vector<RawTerm>>> a_raw;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    size_t i = 0;
    skip_ws(body, i);
    char tag = body[i];
    if ((tag != 'f' && tag != 'g' && tag != 'a') || i + 1 >= body.size() || body[i + 1] != ':')
      parse_fail(line_no, i, "expected 'f:', 'g:' or 'a:'");
    std::string rest = body.substr(i + 2);
    if (tag == 'a') {
      std::vector<std::vector<RawTerm>> row;
      size_t start = 0;
      while (true) {
        size_t comma = rest.find(',', start);
        std::string cell = rest.substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start);
        row.push_back(parse_poly_terms(cell, line_no));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      a_raw.push_back(std::move(row));
    } else if (tag == 'f') {
      f_raw.push_back(parse_poly_terms(rest, line_no));
    } else {
      g_raw.push_back(parse_poly_terms(rest, line_no));
    }
  }
  if (f_raw.empty()) throw Error::math("EmptyInput", "no f lines in the input");
  int n = 0;
  n = std::max(n, ambient_of_terms(f_raw));
  n = std::max(n, ambient_of_terms(g_raw));
  for (const auto& row : a_raw) n = std::max(n, ambient_of_terms(row));
  n = std::max(n, 1);
  AciInput out;
  for (const auto& t : f_raw) out.f_seq.push_back(materialize_poly(t, n));
  for (const auto& t : g_raw) out.g_seq.push_back(materialize_poly(t, n));
  for (const auto& row : a_raw) {
    std::vector<Polynomial> r;
    for (const auto& cell : row) r.push_back(materialize_poly(cell, n));
    out.a_matrix.push_back(std::move(r));
  }
  return out;
}

std::vector<Polynomial> parse_poly_lines(const std::string& text, char tag) {
  std::vector<std::vector<RawTerm>> raw;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    size_t i = 0;
    skip_ws(body, i);
    if (body[i] == tag && i + 1 < body.size() && body[i + 1] == ':')
      raw.push_back(parse_poly_terms(body.substr(i + 2), line_no));
  }
  if (raw.empty()) throw Error::math("EmptyInput", std::string("no '") + tag + ":' lines");
  int n = std::max(ambient_of_terms(raw), 1);
  std::vector<Polynomial> out;
  for (const auto& t : raw) out.push_back(materialize_poly(t, n));
  return out;
}

std::string print_ideal(const OrderedIdeal& ideal) {
  std::string out;
  for (const auto& u : ideal.gens) out += u.str() + "\n";
  return out;
}

namespace {

Json input_json(const OrderedIdeal& ideal, const CommandOptions& opt) {
  Json j;
  j["n_vars"] = ideal.n_vars;
  Json gens = Json::array();
  for (const auto& u : ideal.gens) gens.push_back(u.str());
  j["generators"] = gens;
  j["order_strategy"] = opt.order == OrderStrategy::given      ? "given"
                        : opt.order == OrderStrategy::degrevlex ? "degrevlex"
                                                                : "search";
  return j;
}

Json sets_json(const OrderedIdeal& ideal) {
  Json sets = Json::array();
  for (int j = 1; j <= ideal.size(); ++j) sets.push_back(ideal.set_of(j));
  return sets;
}

Json coeff_json(const mpq_class& q, bool numerator) {
  mpz_class z = numerator ? q.get_num() : q.get_den();
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

OrderedIdeal select_order(const OrderedIdeal& raw, OrderStrategy strategy) {
  switch (strategy) {
    case OrderStrategy::given:
      return raw;
    case OrderStrategy::degrevlex: {
      OrderedIdeal out = raw;
      std::sort(out.gens.begin(), out.gens.end(), degrevlex_greater);
      return out;
    }
    case OrderStrategy::exhaustive: {
      if (auto found = find_lq_order(raw, OrderStrategy::degrevlex)) return *found;
      if (auto found = find_lq_order(raw, OrderStrategy::exhaustive)) return *found;
      return raw;
    }
  }
  return raw;
}

OrderedIdeal parse_input_ideal(const std::string& input, const CommandOptions& opt) {
  OrderedIdeal raw = opt.matroid ? parse_matroid(input) : parse_ideal(input).ideal;
  return select_order(raw, opt.order);
}

Json header(const char* command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

}  // namespace

Json betti_json(const BettiTable& t) {
  Json arr = Json::array();
  for (const auto& [key, v] : t.entries) {
    Json e;
    e["i"] = key.first;
    e["d"] = key.second;
    e["value"] = v;
    arr.push_back(e);
  }
  return arr;
}

Json verify_json(const VerifyReport& rep) {
  Json j;
  j["dsq_zero"] = rep.dsq_zero;
  j["minimal"] = rep.minimal;
  j["multigraded"] = rep.multigraded;
  j["exact"] = rep.exact;
  if (!rep.failure.empty()) j["failure"] = rep.failure;
  if (rep.failing_multidegree) j["failing_multidegree"] = *rep.failing_multidegree;
  return j;
}

Json resolution_json(const FreeComplex& F) {
  Json j;
  j["ranks"] = F.ranks();
  Json modules = Json::array();
  for (int i = 0; i <= F.length(); ++i) {
    Json level = Json::array();
    for (int k = 0; k < F.rank(i); ++k) {
      const auto& sym = F.bases[static_cast<size_t>(i)][static_cast<size_t>(k)];
      Json b;
      b["sigma"] = sym.sigma;
      if (sym.generator > 0)
        b["generator"] = sym.generator;
      else
        b["generator"] = nullptr;
      if (F.has_multidegrees)
        b["multidegree"] = F.multidegrees[static_cast<size_t>(i)][static_cast<size_t>(k)].exponents();
      level.push_back(b);
    }
    modules.push_back(level);
  }
  j["modules"] = modules;
  Json diffs = Json::array();
  for (int i = 1; i <= F.length(); ++i) {
    Json entries = Json::array();
    for (const auto& [cr, p] : F.diff[static_cast<size_t>(i)].entries()) {
      for (const auto& [mono, c] : p.terms()) {
        Json e;
        e["row"] = cr.second;
        e["col"] = cr.first;
        e["coeff_numerator"] = coeff_json(c, true);
        e["coeff_denominator"] = coeff_json(c, false);
        e["exponent_vector"] = mono.exponents();
        entries.push_back(e);
      }
    }
    diffs.push_back(entries);
  }
  j["differentials"] = diffs;
  return j;
}

Json dg_table_json(const DGAlgebra& A) {
  Json arr = Json::array();
  for (const auto& [key, elem] : A.table) {
    const auto& [a, b] = key;
    Json e;
    e["a"] = Json{{"degree", a.first},
                  {"index", a.second},
                  {"label", A.cx.bases[static_cast<size_t>(a.first)][static_cast<size_t>(a.second)].str()}};
    e["b"] = Json{{"degree", b.first},
                  {"index", b.second},
                  {"label", A.cx.bases[static_cast<size_t>(b.first)][static_cast<size_t>(b.second)].str()}};
    Json terms = Json::array();
    for (const auto& [idx, p] : elem.coeffs) {
      for (const auto& [mono, c] : p.terms()) {
        terms.push_back(Json{{"index", idx},
                             {"coeff_numerator", coeff_json(c, true)},
                             {"coeff_denominator", coeff_json(c, false)},
                             {"exponent_vector", mono.exponents()}});
      }
    }
    e["degree"] = elem.deg;
    e["terms"] = terms;
    arr.push_back(e);
  }
  return arr;
}

Json run_analyze(const std::string& input, const CommandOptions& opt) {
  OrderedIdeal ideal = parse_input_ideal(input, opt);
  Json j = header("analyze");
  j["input"] = input_json(ideal, opt);
  ClassReport rep = classify(ideal);
  Json cr;
  cr["linear_quotients"] = rep.linear_quotients;
  cr["degree_nondecreasing"] = rep.degree_nondecreasing;
  cr["stable"] = rep.stable;
  cr["squarefree_stable"] = rep.squarefree_stable;
  cr["exchange_property"] = rep.exchange_property;
  cr["matroidal"] = rep.matroidal;
  if (rep.failure_witness) {
    cr["failure_witness"] =
        Json{{"step", rep.failure_witness->first}, {"monomial", rep.failure_witness->second.str()}};
  }
  j["class_report"] = cr;
  if (rep.linear_quotients) {
    OrderedIdeal with = with_sets(ideal);
    j["sets"] = sets_json(with);
    RegularityReport reg = is_regular(with);
    j["regular"] = reg.regular;
    if (!reg.regular) {
      j["regular_witness"] = Json{{"u", reg.witness_u.str()},
                                  {"s", reg.witness_s},
                                  {"set_g", reg.witness_set}};
    }
    ExchangeIdentityReport ex = exchange_identity_check(with);
    j["exchange_identity_sampled"] = ex.holds;
    if (!ex.holds)
      j["exchange_identity_witness"] =
          Json{{"u", ex.witness_u.str()}, {"s", ex.witness_s}, {"t", ex.witness_t}};
  } else {
    j["sets"] = nullptr;
    j["regular"] = nullptr;
    j["exchange_identity_sampled"] = nullptr;
  }
  return j;
}

Json run_resolve(const std::string& input, const CommandOptions& opt) {
  OrderedIdeal ideal = parse_input_ideal(input, opt);
  Json j = header("resolve");
  j["input"] = input_json(ideal, opt);
  FreeComplex F = lq_resolution(ideal);
  j["resolution"] = resolution_json(F);
  return j;
}

Json run_betti(const std::string& input, const CommandOptions& opt) {
  OrderedIdeal ideal = parse_input_ideal(input, opt);
  Json j = header("betti");
  j["input"] = input_json(ideal, opt);
  OrderedIdeal with = with_sets(ideal);
  bool monotone = true;
  for (int k = 2; k <= with.size(); ++k)
    if (with.gen(k).degree() < with.gen(k - 1).degree()) monotone = false;
  j["possibly_non_minimal"] = !monotone;
  BettiTable formula = betti_from_sets(with);
  BettiTable oracle = betti_oracle(with);
  j["betti_formula"] = betti_json(formula);
  j["betti_oracle"] = betti_json(oracle);
  j["match"] = formula == oracle;
  return j;
}

Json run_verify(const std::string& input, const CommandOptions& opt) {
  OrderedIdeal ideal = parse_input_ideal(input, opt);
  Json j = header("verify");
  j["input"] = input_json(ideal, opt);
  FreeComplex F = lq_resolution(ideal);
  j["ranks"] = F.ranks();
  j["verify"] = verify_json(verify_complex(F));
  return j;
}

Json run_taylor(const std::string& input, const CommandOptions& opt) {
  std::vector<Monomial> seq = parse_monomial_sequence(input);
  Json j = header("taylor");
  Json in;
  in["n_vars"] = seq.front().n_vars();
  Json gens = Json::array();
  for (const auto& u : seq) gens.push_back(u.str());
  in["monomials"] = gens;
  j["input"] = in;
  FreeComplex T = taylor_complex(seq);
  j["ranks"] = T.ranks();
  j["verify"] = verify_json(verify_complex(T));
  DgCheckReport dg = dg_check(taylor_dg(seq));
  j["dg"] = Json{{"unital", dg.unital},
                 {"graded_commutative", dg.graded_commutative},
                 {"leibniz", dg.leibniz},
                 {"associative", dg.associative}};
  if (!dg.ok()) j["dg"]["first_violation"] = dg.first_violation;
  (void)opt;
  return j;
}

Json run_dgcheck(const std::string& input, const CommandOptions& opt) {
  std::vector<Monomial> seq = parse_monomial_sequence(input);
  Json j = header("dgcheck");
  Json in;
  in["n_vars"] = seq.front().n_vars();
  Json gens = Json::array();
  for (const auto& u : seq) gens.push_back(u.str());
  in["monomials"] = gens;
  j["input"] = in;
  DGAlgebra T = taylor_dg(seq);
  DgCheckReport dg = dg_check(T);
  j["dg"] = Json{{"unital", dg.unital},
                 {"graded_commutative", dg.graded_commutative},
                 {"leibniz", dg.leibniz},
                 {"associative", dg.associative}};
  if (!dg.ok()) j["dg"]["first_violation"] = dg.first_violation;
  j["product_table"] = dg_table_json(T);
  if (seq.size() >= 2) {
    TaylorStarResult star = taylor_via_star(seq);
    DgCheckReport sdg = dg_check(star.star);
    j["star"] = Json{{"iso_chain", star.iso_chain},
                     {"iso_product", star.iso_product},
                     {"delta", star.delta.str()},
                     {"dg_ok", sdg.ok()}};
  }
  (void)opt;
  return j;
}

Json run_aci(const std::string& input, const CommandOptions& opt) {
  AciInput aci = parse_aci(input);
  Json j = header("aci");
  Json in;
  auto polys = [](const std::vector<Polynomial>& v) {
    Json arr = Json::array();
    for (const auto& p : v) arr.push_back(p.str());
    return arr;
  };
  in["f"] = polys(aci.f_seq);
  in["g"] = polys(aci.g_seq);
  Json amat = Json::array();
  for (const auto& row : aci.a_matrix) amat.push_back(polys(row));
  in["a"] = amat;
  j["input"] = in;

  AciResult res = aci_resolution(aci);
  int n = static_cast<int>(aci.f_seq.size());
  j["delta"] = res.delta.str();
  j["composite_identities"] = true;  // verified inside tilde_phi
  DGAlgebra A = koszul_dg(aci.f_seq);
  DGAlgebra M = koszul_dg(aci.g_seq);
  j["koszul_type"] = Json{{"A", koszul_type_check(A, n, opt.seed).ok()},
                          {"M", koszul_type_check(M, n, opt.seed).ok()},
                          {"cone", koszul_type_check(res.algebra, n + 1, opt.seed).ok()}};
  j["ranks"] = res.algebra.cx.ranks();
  j["verify"] = verify_json(verify_complex(res.algebra.cx));
  DgCheckReport dg = dg_check(res.algebra);
  j["dg_ok"] = dg.ok();
  if (res.algebra.cx.has_multidegrees) j["betti"] = betti_json(betti_from_complex(res.algebra.cx));
  return j;
}

Json run_koszulseq(const std::string& input, const CommandOptions& opt) {
  Json j = header("koszulseq");
  std::optional<AciInput> aci;
  std::vector<Polynomial> f;
  if (opt.mode == KoszulSeqMode::aci) {
    aci = parse_aci(input);
    f = aci->f_seq;
  } else {
    f = parse_poly_lines(input, 'f');
  }
  Json in;
  Json farr = Json::array();
  for (const auto& p : f) farr.push_back(p.str());
  in["f"] = farr;
  in["mode"] = opt.mode == KoszulSeqMode::regular    ? "regular"
               : opt.mode == KoszulSeqMode::monomial ? "monomial"
                                                     : "aci";
  j["input"] = in;
  KoszulSeqReport rep = koszul_sequence_check(f, opt.mode, aci, opt.seed);
  Json steps = Json::array();
  for (const auto& s : rep.steps) {
    steps.push_back(Json{{"step", s.step},
                         {"a_koszul_type", s.a_koszul_type},
                         {"m_koszul_type", s.m_koszul_type},
                         {"star_built", s.star_built},
                         {"cone_koszul_type", s.cone_koszul_type},
                         {"resolves", s.resolves}});
  }
  j["steps"] = steps;
  j["ok"] = rep.ok;
  return j;
}

Json error_json(const Error& e) {
  Json j;
  j["schema"] = kSchema;
  j["error"] = Json{{"kind", e.kind()}, {"message", e.what()}};
  return j;
}

namespace {

void render(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || v.is_array())
        render(v, prefix.empty() ? k : prefix + "." + k, out);
      else
        out += (prefix.empty() ? k : prefix + "." + k) + " = " + v.dump() + "\n";
    }
  } else if (j.is_array()) {
    int idx = 0;
    for (const auto& v : j) {
      render(v, prefix + "[" + std::to_string(idx++) + "]", out);
    }
    if (j.empty()) out += prefix + " = []\n";
  } else {
    out += prefix + " = " + j.dump() + "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::string out;
  render(report, "", out);
  return out;
}

}  // namespace mapcone
