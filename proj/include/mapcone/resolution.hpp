#ifndef MAPCONE_RESOLUTION_HPP
#define MAPCONE_RESOLUTION_HPP

#include "mapcone/complex.hpp"
#include "mapcone/decomposition.hpp"

namespace mapcone {

// Koszul complex on a nonempty list of ring elements: rank (l choose k)
// exterior basis e_sigma, d(e_sigma) = sum (-1)^{alpha} f_i e_{sigma \ i}.
// Multidegrees are attached when every element is a monomial.
FreeComplex koszul_complex(const std::vector<Polynomial>& elements);

// Taylor complex on a nonempty monomial sequence: basis all subsets,
// d(e_sigma) = sum (-1)^{alpha} (f_sigma / f_{sigma \ i}) e_{sigma \ i}.
FreeComplex taylor_complex(const std::vector<Monomial>& monomials);

// The explicit minimal resolution of R/I for an ideal with linear
// quotients, nondecreasing generator degrees, and a regular decomposition
// function.  Bases f(sigma; u) with sigma subset of set(u), in canonical
// (|sigma|, sigma, generator) order per homological degree.
FreeComplex lq_resolution(const OrderedIdeal& ideal);

// The comparison map psi^{(j)}: K^{(j)} -> F^{(j)} lifting multiplication
// by u_{j+1}, where K^{(j)} is the Koszul complex on the variables of
// set(u_{j+1}) relabeled f(sigma; u_{j+1}), and F^{(j)} = lq_resolution of
// the length-j prefix.  1 <= j <= m-1.
ComplexMap comparison_map(const OrderedIdeal& ideal, int j);

// Runs the mapping-cone iteration j = 1..m-1 and returns the final
// (canonicalized) complex; equals lq_resolution(ideal) entry for entry.
FreeComplex iterated_cone_resolution(const OrderedIdeal& ideal);

struct VerifyReport {
  bool dsq_zero = false;
  bool minimal = false;
  bool multigraded = false;
  bool exact = false;
  std::string failure;  // first failure, empty when everything passed
  std::optional<std::vector<int>> failing_multidegree;

  bool all() const { return dsq_zero && minimal && multigraded && exact; }
};

// d^2 = 0, minimality (no unit entries), homogeneity of every entry with
// respect to the label multidegrees, and box-certified exactness: for each
// multidegree a in prod [0, c_i] the strand of ... -> F_1 -> R has
// vanishing homology in positive degrees and the degree-0 cokernel of the
// quotient by the d_1 labels.
VerifyReport verify_complex(const FreeComplex& F);

// Lemma-"basis" ranks: entry(i, d) = #{u : deg u = d - (i-1)} weighted by
// (|set(u)| choose i-1) for i >= 1; entry(0,0) = 1.
BettiTable betti_from_sets(const OrderedIdeal& ideal);

// Graded Betti numbers of the module resolved by a multigraded complex:
// homology of the complex with entries evaluated at x = 0, split by total
// degree.  Exact rational ranks.
BettiTable betti_from_complex(const FreeComplex& F);

// Independent oracle for any monomial ideal: Taylor complex of G(I)
// tensored with the residue field.
BettiTable betti_oracle(const OrderedIdeal& ideal);

}  // namespace mapcone

#endif
