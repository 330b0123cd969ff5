#ifndef MAPCONE_IDEAL_HPP
#define MAPCONE_IDEAL_HPP

#include <optional>
#include <vector>

#include "mapcone/monomial.hpp"

namespace mapcone {

// A monomial ideal presented by a minimal generating sequence u_1,...,u_m.
// When linear quotients have been established, `sets` holds set(u_j) for
// every j as sorted 1-based variable indices.
struct OrderedIdeal {
  int n_vars = 0;
  std::vector<Monomial> gens;
  std::optional<std::vector<std::vector<int>>> sets;

  int size() const { return static_cast<int>(gens.size()); }
  const Monomial& gen(int j) const;  // 1-based
  const std::vector<int>& set_of(int j) const;
  OrderedIdeal prefix(int j) const;  // first j generators (with sets if present)
};

struct ClassReport {
  bool linear_quotients = false;
  bool degree_nondecreasing = false;
  bool stable = false;
  bool squarefree_stable = false;
  bool exchange_property = false;
  bool matroidal = false;
  bool squarefree = false;
  bool equigenerated = false;
  // When linear_quotients is false: the failing step and offending colon
  // generator.
  std::optional<std::pair<int, Monomial>> failure_witness;
};

struct LqResult {
  bool ok = false;
  std::vector<std::vector<int>> sets;
  int failure_step = 0;       // 1-based, valid when !ok
  Monomial failure_witness;   // colon generator of degree > 1
};

enum class OrderStrategy { given, degrevlex, exhaustive };
enum class IdealClass { stable, sqfree_stable, matroid };

// Divisibility-minimal sublist, preserving first-occurrence order.
OrderedIdeal minimalize(const std::vector<Monomial>& monomials);

// Validates minimality; throws NonMinimal naming the offending pair
// (1-based positions).
OrderedIdeal make_ideal(const std::vector<Monomial>& monomials);

// Minimal generators of (u_1,...,u_{j-1}) : u_j, for 2 <= j <= m.
std::vector<Monomial> colon_step(const OrderedIdeal& ideal, int j);

LqResult linear_quotients_check(const OrderedIdeal& ideal);

// Copy of `ideal` with sets filled in; throws NotLinearQuotients.
OrderedIdeal with_sets(const OrderedIdeal& ideal);

// A reordering whose linear_quotients_check succeeds, or nullopt.  The
// degrevlex strategy sorts descending (u_1 > u_2 > ...); exhaustive search
// is capped at `exhaustive_bound` generators.
std::optional<OrderedIdeal> find_lq_order(const OrderedIdeal& ideal, OrderStrategy strategy,
                                          int exhaustive_bound = 8);

ClassReport classify(const OrderedIdeal& ideal);

// Closed-form set(u_j) for the named class; cross-check only.
std::vector<int> set_via_formula(const OrderedIdeal& ideal, IdealClass cls, int j);

// Smallest j <= prefix with u in I_j = (u_1,...,u_j), or nullopt.
std::optional<int> membership(const Monomial& u, const OrderedIdeal& ideal, int prefix);

// Basis-exchange axiom for a family of equal-size subsets of [n].
// Returns a violating (basis, basis, element) triple or nullopt.
struct ExchangeViolation {
  std::vector<int> from, to;
  int element = 0;
};
std::optional<ExchangeViolation> check_basis_exchange(const std::vector<std::vector<int>>& bases);

// Bases -> squarefree monomial ideal, descending degrevlex order.
// Throws NotAMatroid with a witness.
OrderedIdeal matroid_ideal(const std::vector<std::vector<int>>& bases, int n_vars = 0);

}  // namespace mapcone

#endif
