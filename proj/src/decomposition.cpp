#include "mapcone/decomposition.hpp"

#include <algorithm>

namespace mapcone {

int g_index(const OrderedIdeal& ideal, const Monomial& u) {
  auto j = membership(u, ideal, ideal.size());
  if (!j) throw Error::math("NotInIdeal", u.str() + " is not in the ideal");
  return *j;
}

Decomposition decompose(const OrderedIdeal& ideal, const Monomial& u) {
  int j = g_index(ideal, u);
  Decomposition d;
  d.generator_index = j;
  d.complement = divide_exact(u, ideal.gen(j));
  for (int s : ideal.set_of(j))
    if (d.complement.exponent(s) > 0)
      throw Error::internal("InvariantViolation",
                            "set(g(u)) meets supp(c(u)) for u = " + u.str());
  return d;
}

RegularityReport is_regular(const OrderedIdeal& ideal) {
  RegularityReport rep;
  for (int j = 1; j <= ideal.size(); ++j) {
    const Monomial& u = ideal.gen(j);
    for (int s : ideal.set_of(j)) {
      int gj = g_index(ideal, Monomial::variable(ideal.n_vars, s) * u);
      const std::vector<int>& target = ideal.set_of(gj);
      const std::vector<int>& bound = ideal.set_of(j);
      bool contained = std::includes(bound.begin(), bound.end(), target.begin(), target.end());
      if (!contained) {
        rep.regular = false;
        rep.witness_u = u;
        rep.witness_s = s;
        rep.witness_set = target;
        return rep;
      }
    }
  }
  rep.regular = true;
  return rep;
}

std::vector<Monomial> default_exchange_sample(const OrderedIdeal& ideal) {
  std::vector<Monomial> sample = ideal.gens;
  for (const Monomial& u : ideal.gens)
    for (int k = 1; k <= ideal.n_vars; ++k) sample.push_back(Monomial::variable(ideal.n_vars, k) * u);
  return sample;
}

ExchangeIdentityReport exchange_identity_check(const OrderedIdeal& ideal,
                                               const std::vector<Monomial>& sample) {
  ExchangeIdentityReport rep;
  std::vector<Monomial> mono = sample.empty() ? default_exchange_sample(ideal) : sample;
  auto g_of = [&](const Monomial& w) { return ideal.gen(g_index(ideal, w)); };
  for (const Monomial& u : mono) {
    if (!membership(u, ideal, ideal.size())) continue;
    // set(u) for a monomial of M(I) is read as set(g(u)).
    const std::vector<int>& su = ideal.set_of(g_index(ideal, u));
    for (int s : su) {
      for (int t : su) {
        Monomial xs = Monomial::variable(ideal.n_vars, s);
        Monomial xt = Monomial::variable(ideal.n_vars, t);
        if (g_of(xs * g_of(xt * u)) != g_of(xt * g_of(xs * u))) {
          rep.holds = false;
          rep.witness_u = u;
          rep.witness_s = s;
          rep.witness_t = t;
          return rep;
        }
      }
    }
  }
  rep.holds = true;
  return rep;
}

bool locality_check(const OrderedIdeal& ideal, const Monomial& u, const Monomial& v) {
  int gu = g_index(ideal, u);
  int guv = g_index(ideal, u * v);
  bool same = (gu == guv);
  bool disjoint = true;
  for (int s : ideal.set_of(gu))
    if (v.exponent(s) > 0) disjoint = false;
  if (same != disjoint)
    throw Error::internal("InvariantViolation", "locality law fails for u = " + u.str() +
                                                    ", v = " + v.str());
  return same;
}

}  // namespace mapcone
