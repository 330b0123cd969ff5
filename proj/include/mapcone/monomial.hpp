#ifndef MAPCONE_MONOMIAL_HPP
#define MAPCONE_MONOMIAL_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "mapcone/errors.hpp"

namespace mapcone {

// Exponent vector in a fixed number of variables.  Variable indices are
// 1-based in every public interface; storage is 0-based.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(int n_vars) : e_(static_cast<size_t>(n_vars), 0) {}
  Monomial(std::initializer_list<int> exps) : e_(exps) { validate(); }
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) { validate(); }

  static Monomial one(int n_vars) { return Monomial(n_vars); }
  static Monomial variable(int n_vars, int i);

  int n_vars() const { return static_cast<int>(e_.size()); }
  int degree() const;
  // nu_i(u): exponent of x_i, 1-based.
  int exponent(int i) const;
  bool is_one() const;
  // supp(u) as sorted 1-based indices.
  std::vector<int> support() const;
  // m(u) = max of supp(u); 0 for the constant monomial.
  int max_var() const;
  const std::vector<int>& exponents() const { return e_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Container order only (lexicographic on exponent vectors); the monomial
  // order of the library is degrevlex_greater below.
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.e_ <=> b.e_;
  }

  std::string str() const;

private:
  void validate() const;
  std::vector<int> e_;
};

void require_same_ambient(const Monomial& u, const Monomial& v);

// lcm: componentwise max.
Monomial lcm(const Monomial& u, const Monomial& v);
// [u,v]: componentwise min.
Monomial gcd(const Monomial& u, const Monomial& v);
// v | u componentwise.
bool divides(const Monomial& v, const Monomial& u);
// u / v; throws NotDivisible unless v | u.
Monomial divide_exact(const Monomial& u, const Monomial& v);
Monomial operator*(const Monomial& u, const Monomial& v);

// Reverse degree lexicographic with x1 > x2 > ... > xn: u > v iff
// deg u > deg v, or degrees tie and the rightmost nonzero entry of
// exponents(u) - exponents(v) is negative.
bool degrevlex_greater(const Monomial& u, const Monomial& v);

}  // namespace mapcone

#endif
