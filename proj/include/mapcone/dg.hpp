#ifndef MAPCONE_DG_HPP
#define MAPCONE_DG_HPP

#include <cstdint>

#include "mapcone/resolution.hpp"

namespace mapcone {

// (homological degree, basis index) address into a FreeComplex basis.
using Addr = std::pair<int, int>;

// Homogeneous element of a complex: polynomial coefficients on the basis
// of one homological degree.
struct DgElement {
  int deg = 0;
  std::map<int, Polynomial> coeffs;

  bool is_zero() const { return coeffs.empty(); }
};

bool dg_equal(const DgElement& x, const DgElement& y);
DgElement dg_add(const DgElement& x, const DgElement& y);
DgElement dg_scale(const mpq_class& c, const DgElement& x);

// Complex with a stored multiplication table on its basis.  The table
// keeps products of positive-degree basis pairs only; degree 0 is the
// scalar ring acting by its coefficient.
struct DGAlgebra {
  FreeComplex cx;
  std::map<std::pair<Addr, Addr>, DgElement> table;

  DgElement basis_elem(Addr a) const;
  DgElement basis_product(Addr a, Addr b) const;
  DgElement mul(const DgElement& x, const DgElement& y) const;
  DgElement differential(const DgElement& x) const;
  Addr unit() const { return {0, 0}; }
};

struct DgCheckReport {
  bool unital = true;
  bool graded_commutative = true;
  bool leibniz = true;
  bool associative = true;
  std::string first_violation;

  bool ok() const { return unital && graded_commutative && leibniz && associative; }
};

// Exterior algebra structure on koszul_complex(elements).
DGAlgebra koszul_dg(const std::vector<Polynomial>& elements);

// Taylor complex with e_sigma e_tau = (f_sigma f_tau / f_{sigma u tau})
// e_sigma ^ e_tau.
DGAlgebra taylor_dg(const std::vector<Monomial>& monomials);

// Exhaustive Leibniz / graded-commutativity on basis pairs, associativity
// on basis triples, unit law.
DgCheckReport dg_check(const DGAlgebra& A);

// Trivial-extension product (a, m)(b, n) = (ab, (-1)^{|a|} a n + m b) on
// the mapping cone of psi: M -> A, with A acting on M through phi.
// Preconditions (all checked, NotDGHomomorphism on failure): phi is a DG
// algebra homomorphism, phi o psi = f_next id_M, and psi(m) n = m psi(n).
DGAlgebra nagata_star(const DGAlgebra& A, const DGAlgebra& M, const ComplexMap& phi,
                      const ComplexMap& psi, const Polynomial& f_next);

struct TaylorStarResult {
  DGAlgebra star;
  DGAlgebra full;  // taylor_dg on the whole sequence
  bool iso_chain = false;
  bool iso_product = false;
  Polynomial delta;

  bool iso_ok() const { return iso_chain && iso_product; }
};

// Builds T(f_1..f_{m-1}) * T(g_1..g_{m-1}) with g_i = f_i / [f_i, f_m] and
// verifies the relabeling onto taylor_dg(f_1..f_m) is a DG isomorphism.
TaylorStarResult taylor_via_star(const std::vector<Monomial>& monomials);

struct KoszulTypeReport {
  bool rank_ok = false;
  bool pairing_injective = false;
  int first_bad_degree = -1;
  bool used_exact_fallback = false;

  bool ok() const { return rank_ok && pairing_injective; }
};

// Definition of Koszul type: rank A_i = (n choose i) and the pairing
// A_i x A_{n-i} -> A_n is nondegenerate on the left.  Injectivity is
// decided by rank at random integer points (3 tries, any full rank
// certifies) with an exact fraction-free fallback.
KoszulTypeReport koszul_type_check(const DGAlgebra& A, int n, uint64_t seed);

// The adjoint-style lift: the unique map with tilde_phi(m) a = m phi(a) in
// the top degree; entries are required to be polynomial.  Verifies
// tilde_phi o phi = delta id and phi o tilde_phi = delta id.
ComplexMap tilde_phi(const DGAlgebra& A, const DGAlgebra& M, const ComplexMap& phi, int n);

struct AciInput {
  std::vector<Polynomial> f_seq, g_seq;
  std::vector<std::vector<Polynomial>> a_matrix;
};

struct AciResult {
  DGAlgebra algebra;  // algebra.cx resolves R/(f_1..f_n, delta)
  Polynomial delta;
};

// Koszul(f) * Koszul(g) with phi(e_i) = sum_j a_ij h_j and psi = tilde_phi;
// requires f_i = sum_j a_ij g_j exactly (RelationViolation otherwise).
AciResult aci_resolution(const AciInput& input);

enum class KoszulSeqMode { regular, monomial, aci };

struct KoszulSeqStep {
  int step = 0;
  bool a_koszul_type = false;
  bool m_koszul_type = false;
  bool star_built = false;
  bool cone_koszul_type = false;
  bool resolves = false;

  bool ok() const {
    return a_koszul_type && m_koszul_type && star_built && cone_koszul_type && resolves;
  }
};

struct KoszulSeqReport {
  std::vector<KoszulSeqStep> steps;
  bool ok = false;
};

// Per-step star construction and Koszul-type checks along the sequence.
// regular: M^(i-1) = A^(i-1), psi = f_i id.  monomial: Taylor star.
// aci: regular steps for f, then the linked step with the given g and a.
KoszulSeqReport koszul_sequence_check(const std::vector<Polynomial>& f_seq, KoszulSeqMode mode,
                                      const std::optional<AciInput>& aci, uint64_t seed);

}  // namespace mapcone

#endif
