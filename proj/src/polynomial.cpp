#include "mapcone/polynomial.hpp"

#include <algorithm>

namespace mapcone {

Polynomial Polynomial::constant(int n_vars, const mpq_class& c) {
  return term(Monomial::one(n_vars), c);
}

Polynomial Polynomial::term(const Monomial& m, const mpq_class& c) {
  Polynomial p(m.n_vars());
  p.add_term(m, c);
  return p;
}

mpq_class Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

const std::pair<const Monomial, mpq_class>& Polynomial::only_term() const {
  if (terms_.size() != 1)
    throw Error::internal("NotSingleTerm", "polynomial is not a single term: " + str());
  return *terms_.begin();
}

Polynomial& Polynomial::add_term(const Monomial& m, const mpq_class& c) {
  if (m.n_vars() != nv_)
    throw Error::internal("DimensionMismatch", "term ambient mismatch");
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(nv_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  if (nv_ != q.nv_) {
    if (terms_.empty() && nv_ == 0)
      nv_ = q.nv_;  // a default-constructed accumulator adopts the ambient
    else
      throw Error::internal("DimensionMismatch", "polynomial ambient mismatch");
  }
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  if (nv_ != q.nv_) {
    if (terms_.empty() && nv_ == 0)
      nv_ = q.nv_;
    else
      throw Error::internal("DimensionMismatch", "polynomial ambient mismatch");
  }
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.nv_ != q.nv_) throw Error::internal("DimensionMismatch", "polynomial ambient mismatch");
  Polynomial out(p.nv_);
  for (const auto& [mp, cp] : p.terms_)
    for (const auto& [mq, cq] : q.terms_) out.add_term(mp * mq, cp * cq);
  return out;
}

Polynomial operator*(const mpq_class& c, const Polynomial& p) {
  Polynomial out(p.nv_);
  if (c == 0) return out;
  for (const auto& [m, k] : p.terms_) out.terms_.emplace(m, c * k);
  return out;
}

Polynomial operator*(const Monomial& m, const Polynomial& p) {
  Polynomial out(p.nv_);
  for (const auto& [t, c] : p.terms_) out.terms_.emplace(m * t, c);
  return out;
}

mpq_class Polynomial::evaluate(const std::vector<mpq_class>& point) const {
  if (static_cast<int>(point.size()) != nv_)
    throw Error::internal("DimensionMismatch", "evaluation point has wrong arity");
  mpq_class acc = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class v = c;
    for (int i = 0; i < nv_; ++i) {
      int e = m.exponents()[static_cast<size_t>(i)];
      for (int k = 0; k < e; ++k) v *= point[static_cast<size_t>(i)];
    }
    acc += v;
  }
  return acc;
}

const std::pair<const Monomial, mpq_class>& Polynomial::leading_term_degrevlex() const {
  if (terms_.empty())
    throw Error::internal("ZeroPolynomial", "the zero polynomial has no leading term");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (degrevlex_greater(it->first, best->first)) best = it;
  return *best;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    mpq_class a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (a != 1 || m.is_one()) {
      out += a.get_str();
      if (!m.is_one()) out += "*";
    }
    if (!m.is_one()) out += m.str();
  }
  return out;
}

std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw Error::internal("DivisionByZero", "division by the zero polynomial");
  Polynomial rem = p;
  Polynomial quot(p.n_vars());
  const auto& [lq, cq] = q.leading_term_degrevlex();
  while (!rem.is_zero()) {
    const auto& [lr, cr] = rem.leading_term_degrevlex();
    if (!divides(lq, lr)) return std::nullopt;
    Monomial m = divide_exact(lr, lq);
    mpq_class c = cr / cq;
    quot.add_term(m, c);
    rem -= Polynomial::term(m, c) * q;
  }
  return quot;
}

}  // namespace mapcone
