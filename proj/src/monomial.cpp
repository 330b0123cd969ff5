#include "mapcone/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace mapcone {

void Monomial::validate() const {
  for (int a : e_)
    if (a < 0)
      throw Error::internal("NegativeExponent", "monomial exponents must be >= 0");
}

Monomial Monomial::variable(int n_vars, int i) {
  if (i < 1 || i > n_vars)
    throw Error::internal("IndexOutOfRange", "variable index " + std::to_string(i) +
                                                 " outside 1.." + std::to_string(n_vars));
  Monomial m(n_vars);
  m.e_[static_cast<size_t>(i - 1)] = 1;
  return m;
}

int Monomial::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

int Monomial::exponent(int i) const {
  if (i < 1 || i > n_vars())
    throw Error::internal("IndexOutOfRange", "variable index out of range");
  return e_[static_cast<size_t>(i - 1)];
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](int a) { return a == 0; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < n_vars(); ++i)
    if (e_[static_cast<size_t>(i)] > 0) s.push_back(i + 1);
  return s;
}

int Monomial::max_var() const {
  for (int i = n_vars(); i >= 1; --i)
    if (e_[static_cast<size_t>(i - 1)] > 0) return i;
  return 0;
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::string out;
  for (int i = 1; i <= n_vars(); ++i) {
    int a = exponent(i);
    if (a == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i);
    if (a > 1) {
      out += '^';
      out += std::to_string(a);
    }
  }
  return out;
}

void require_same_ambient(const Monomial& u, const Monomial& v) {
  if (u.n_vars() != v.n_vars())
    throw Error::internal("DimensionMismatch",
                          "ambient variable counts differ: " + std::to_string(u.n_vars()) +
                              " vs " + std::to_string(v.n_vars()));
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v);
  std::vector<int> e(u.exponents());
  for (int i = 0; i < u.n_vars(); ++i)
    e[static_cast<size_t>(i)] = std::max(e[static_cast<size_t>(i)], v.exponents()[static_cast<size_t>(i)]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v);
  std::vector<int> e(u.exponents());
  for (int i = 0; i < u.n_vars(); ++i)
    e[static_cast<size_t>(i)] = std::min(e[static_cast<size_t>(i)], v.exponents()[static_cast<size_t>(i)]);
  return Monomial(std::move(e));
}

bool divides(const Monomial& v, const Monomial& u) {
  require_same_ambient(u, v);
  for (int i = 0; i < u.n_vars(); ++i)
    if (v.exponents()[static_cast<size_t>(i)] > u.exponents()[static_cast<size_t>(i)]) return false;
  return true;
}

Monomial divide_exact(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v);
  std::vector<int> e(u.exponents());
  for (int i = 0; i < u.n_vars(); ++i) {
    e[static_cast<size_t>(i)] -= v.exponents()[static_cast<size_t>(i)];
    if (e[static_cast<size_t>(i)] < 0)
      throw Error::math("NotDivisible", v.str() + " does not divide " + u.str());
  }
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v);
  std::vector<int> e(u.exponents());
  for (int i = 0; i < u.n_vars(); ++i) e[static_cast<size_t>(i)] += v.exponents()[static_cast<size_t>(i)];
  return Monomial(std::move(e));
}

bool degrevlex_greater(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v);
  int du = u.degree(), dv = v.degree();
  if (du != dv) return du > dv;
  for (int i = u.n_vars() - 1; i >= 0; --i) {
    int d = u.exponents()[static_cast<size_t>(i)] - v.exponents()[static_cast<size_t>(i)];
    if (d != 0) return d < 0;
  }
  return false;
}

}  // namespace mapcone
