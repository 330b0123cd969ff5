#ifndef MAPCONE_DECOMPOSITION_HPP
#define MAPCONE_DECOMPOSITION_HPP

#include <optional>
#include <vector>

#include "mapcone/ideal.hpp"

namespace mapcone {

// g(u) = u_j with j minimal such that u in (u_1,...,u_j), plus the
// complementary factor c(u) = u / g(u).
struct Decomposition {
  int generator_index = 0;  // 1-based
  Monomial complement;
};

struct RegularityReport {
  bool regular = false;
  // Witness on failure: u in G(I), s in set(u), and set(g(x_s u)).
  Monomial witness_u;
  int witness_s = 0;
  std::vector<int> witness_set;
};

struct ExchangeIdentityReport {
  bool holds = false;
  bool sampled = true;  // the check is over a finite sample of M(I)
  Monomial witness_u;
  int witness_s = 0, witness_t = 0;
};

// Requires ideal.sets (linear quotients established) and u in I.
Decomposition decompose(const OrderedIdeal& ideal, const Monomial& u);

// Index of g(u) in the generator sequence, 1-based.
int g_index(const OrderedIdeal& ideal, const Monomial& u);

// set(g(x_s u)) subset of set(u) for all u in G(I), s in set(u).
RegularityReport is_regular(const OrderedIdeal& ideal);

// g(x_s g(x_t u)) = g(x_t g(x_s u)) over the sample, for s,t in set(g(u)).
// Default sample: G(I) together with every x_k u_j lying in I.
ExchangeIdentityReport exchange_identity_check(const OrderedIdeal& ideal,
                                               const std::vector<Monomial>& sample = {});

std::vector<Monomial> default_exchange_sample(const OrderedIdeal& ideal);

// Returns g(uv) == g(u) and asserts the biconditional of the locality law
// (g(uv) = g(u) iff set(g(u)) and supp(v) are disjoint).
bool locality_check(const OrderedIdeal& ideal, const Monomial& u, const Monomial& v);

}  // namespace mapcone

#endif
