#ifndef MAPCONE_POLYNOMIAL_HPP
#define MAPCONE_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "mapcone/monomial.hpp"

namespace mapcone {

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no zero coefficients are stored.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(int n_vars) : nv_(n_vars) {}

  static Polynomial zero(int n_vars) { return Polynomial(n_vars); }
  static Polynomial constant(int n_vars, const mpq_class& c);
  static Polynomial term(const Monomial& m, const mpq_class& c);
  static Polynomial from_monomial(const Monomial& m) { return term(m, 1); }

  int n_vars() const { return nv_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_single_term() const { return terms_.size() == 1; }
  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  mpq_class coeff(const Monomial& m) const;
  mpq_class constant_coeff() const { return coeff(Monomial::one(nv_)); }
  // Max total degree over terms; -1 for the zero polynomial.
  int total_degree() const;
  // True when every term has the same multidegree (i.e. at most one term).
  const std::pair<const Monomial, mpq_class>& only_term() const;

  Polynomial& add_term(const Monomial& m, const mpq_class& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const mpq_class& c, const Polynomial& p);
  friend Polynomial operator*(const Monomial& m, const Polynomial& p);
  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.nv_ == q.nv_ && p.terms_ == q.terms_;
  }

  mpq_class evaluate(const std::vector<mpq_class>& point) const;

  // Leading term under degrevlex; polynomial must be nonzero.
  const std::pair<const Monomial, mpq_class>& leading_term_degrevlex() const;

  std::string str() const;

private:
  int nv_ = 0;
  std::map<Monomial, mpq_class> terms_;
};

// Exact division in the polynomial ring: returns p / q when q divides p,
// std::nullopt otherwise.  q must be nonzero.
std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& q);

}  // namespace mapcone

#endif
