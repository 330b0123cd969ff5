#include "mapcone/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mapcone {

const Monomial& OrderedIdeal::gen(int j) const {
  if (j < 1 || j > size())
    throw Error::internal("IndexOutOfRange", "generator index " + std::to_string(j));
  return gens[static_cast<size_t>(j - 1)];
}

const std::vector<int>& OrderedIdeal::set_of(int j) const {
  if (!sets)
    throw Error::internal("MissingSets", "set(u_j) not computed for this ideal");
  if (j < 1 || j > size())
    throw Error::internal("IndexOutOfRange", "generator index " + std::to_string(j));
  return (*sets)[static_cast<size_t>(j - 1)];
}

OrderedIdeal OrderedIdeal::prefix(int j) const {
  if (j < 1 || j > size())
    throw Error::internal("IndexOutOfRange", "prefix length " + std::to_string(j));
  OrderedIdeal out;
  out.n_vars = n_vars;
  out.gens.assign(gens.begin(), gens.begin() + j);
  if (sets) out.sets = std::vector<std::vector<int>>(sets->begin(), sets->begin() + j);
  return out;
}

namespace {

void require_uniform(const std::vector<Monomial>& ms) {
  if (ms.empty()) throw Error::math("EmptyInput", "no monomials given");
  for (const auto& m : ms) require_same_ambient(ms.front(), m);
}

}  // namespace

OrderedIdeal minimalize(const std::vector<Monomial>& monomials) {
  require_uniform(monomials);
  OrderedIdeal out;
  out.n_vars = monomials.front().n_vars();
  for (size_t i = 0; i < monomials.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < monomials.size() && keep; ++j) {
      if (i == j) continue;
      if (divides(monomials[j], monomials[i]) && (monomials[j] != monomials[i] || j < i))
        keep = false;
    }
    if (keep) out.gens.push_back(monomials[i]);
  }
  return out;
}

OrderedIdeal make_ideal(const std::vector<Monomial>& monomials) {
  require_uniform(monomials);
  for (size_t i = 0; i < monomials.size(); ++i)
    for (size_t j = 0; j < monomials.size(); ++j) {
      if (i == j) continue;
      if (divides(monomials[i], monomials[j]) && (monomials[i] != monomials[j] || i < j))
        throw Error::math("NonMinimal", "generator " + std::to_string(i + 1) + " divides generator " +
                                            std::to_string(j + 1));
    }
  OrderedIdeal out;
  out.n_vars = monomials.front().n_vars();
  out.gens = monomials;
  return out;
}

std::vector<Monomial> colon_step(const OrderedIdeal& ideal, int j) {
  if (j < 2 || j > ideal.size())
    throw Error::math("IndexOutOfRange", "colon_step needs 2 <= j <= m, got " + std::to_string(j));
  std::vector<Monomial> quotients;
  const Monomial& uj = ideal.gen(j);
  for (int i = 1; i < j; ++i)
    quotients.push_back(divide_exact(ideal.gen(i), gcd(ideal.gen(i), uj)));
  return minimalize(quotients).gens;
}

LqResult linear_quotients_check(const OrderedIdeal& ideal) {
  LqResult res;
  res.sets.assign(static_cast<size_t>(ideal.size()), {});
  for (int j = 2; j <= ideal.size(); ++j) {
    std::vector<int> vars;
    for (const Monomial& q : colon_step(ideal, j)) {
      if (q.degree() != 1) {
        res.ok = false;
        res.failure_step = j;
        res.failure_witness = q;
        return res;
      }
      vars.push_back(q.max_var());
    }
    std::sort(vars.begin(), vars.end());
    res.sets[static_cast<size_t>(j - 1)] = vars;
  }
  res.ok = true;
  return res;
}

OrderedIdeal with_sets(const OrderedIdeal& ideal) {
  LqResult r = linear_quotients_check(ideal);
  if (!r.ok)
    throw Error::math("NotLinearQuotients",
                      "colon ideal at step " + std::to_string(r.failure_step) +
                          " has non-linear generator " + r.failure_witness.str());
  OrderedIdeal out = ideal;
  out.sets = r.sets;
  return out;
}

std::optional<OrderedIdeal> find_lq_order(const OrderedIdeal& ideal, OrderStrategy strategy,
                                          int exhaustive_bound) {
  auto try_order = [&](const std::vector<Monomial>& gens) -> std::optional<OrderedIdeal> {
    OrderedIdeal cand;
    cand.n_vars = ideal.n_vars;
    cand.gens = gens;
    LqResult r = linear_quotients_check(cand);
    if (!r.ok) return std::nullopt;
    cand.sets = r.sets;
    return cand;
  };
  switch (strategy) {
    case OrderStrategy::given:
      return try_order(ideal.gens);
    case OrderStrategy::degrevlex: {
      std::vector<Monomial> sorted = ideal.gens;
      std::sort(sorted.begin(), sorted.end(), degrevlex_greater);
      return try_order(sorted);
    }
    case OrderStrategy::exhaustive: {
      if (ideal.size() > exhaustive_bound)
        throw Error::math("BoundExceeded", "exhaustive order search capped at " +
                                               std::to_string(exhaustive_bound) + " generators");
      std::vector<int> perm(static_cast<size_t>(ideal.size()));
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<Monomial> gens;
        for (int i : perm) gens.push_back(ideal.gens[static_cast<size_t>(i)]);
        if (auto found = try_order(gens)) return found;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<int> membership(const Monomial& u, const OrderedIdeal& ideal, int prefix) {
  if (prefix < 0 || prefix > ideal.size())
    throw Error::internal("IndexOutOfRange", "membership prefix " + std::to_string(prefix));
  for (int j = 1; j <= prefix; ++j)
    if (divides(ideal.gen(j), u)) return j;
  return std::nullopt;
}

namespace {

bool in_ideal(const Monomial& u, const OrderedIdeal& ideal) {
  return membership(u, ideal, ideal.size()).has_value();
}

bool in_gens(const Monomial& u, const OrderedIdeal& ideal) {
  return std::find(ideal.gens.begin(), ideal.gens.end(), u) != ideal.gens.end();
}

}  // namespace

ClassReport classify(const OrderedIdeal& ideal) {
  ClassReport rep;
  LqResult lq = linear_quotients_check(ideal);
  rep.linear_quotients = lq.ok;
  if (!lq.ok) rep.failure_witness = {lq.failure_step, lq.failure_witness};

  rep.degree_nondecreasing = true;
  for (int j = 2; j <= ideal.size(); ++j)
    if (ideal.gen(j).degree() < ideal.gen(j - 1).degree()) rep.degree_nondecreasing = false;

  rep.squarefree = true;
  for (const auto& u : ideal.gens)
    for (int e : u.exponents())
      if (e > 1) rep.squarefree = false;

  rep.equigenerated = true;
  for (const auto& u : ideal.gens)
    if (u.degree() != ideal.gens.front().degree()) rep.equigenerated = false;

  // stable: x_i (u / x_{m(u)}) in I for all u in G(I) and i <= m(u).
  rep.stable = true;
  for (const auto& u : ideal.gens) {
    int mu = u.max_var();
    if (mu == 0) continue;
    Monomial base = divide_exact(u, Monomial::variable(ideal.n_vars, mu));
    for (int i = 1; i < mu && rep.stable; ++i)
      if (!in_ideal(Monomial::variable(ideal.n_vars, i) * base, ideal)) rep.stable = false;
    if (!rep.stable) break;
  }

  // squarefree stable: same swap restricted to i < m(u), i not in supp(u).
  rep.squarefree_stable = rep.squarefree;
  if (rep.squarefree_stable) {
    for (const auto& u : ideal.gens) {
      int mu = u.max_var();
      if (mu == 0) continue;
      Monomial base = divide_exact(u, Monomial::variable(ideal.n_vars, mu));
      for (int i = 1; i < mu && rep.squarefree_stable; ++i) {
        if (u.exponent(i) > 0) continue;
        if (!in_ideal(Monomial::variable(ideal.n_vars, i) * base, ideal))
          rep.squarefree_stable = false;
      }
      if (!rep.squarefree_stable) break;
    }
  }

  // Exchange property: for u, v in G(I) and nu_i(u) > nu_i(v) there is j
  // with nu_j(v) > nu_j(u) and x_j (u / x_i) in G(I).
  rep.exchange_property = true;
  for (const auto& u : ideal.gens) {
    for (const auto& v : ideal.gens) {
      for (int i = 1; i <= ideal.n_vars && rep.exchange_property; ++i) {
        if (u.exponent(i) <= v.exponent(i)) continue;
        Monomial base = divide_exact(u, Monomial::variable(ideal.n_vars, i));
        bool found = false;
        for (int j = 1; j <= ideal.n_vars && !found; ++j) {
          if (v.exponent(j) <= u.exponent(j)) continue;
          if (in_gens(Monomial::variable(ideal.n_vars, j) * base, ideal)) found = true;
        }
        if (!found) rep.exchange_property = false;
      }
      if (!rep.exchange_property) break;
    }
    if (!rep.exchange_property) break;
  }

  rep.matroidal = rep.squarefree && rep.equigenerated && rep.exchange_property;
  return rep;
}

std::vector<int> set_via_formula(const OrderedIdeal& ideal, IdealClass cls, int j) {
  ClassReport rep = classify(ideal);
  const Monomial& u = ideal.gen(j);
  std::vector<int> out;
  switch (cls) {
    case IdealClass::stable: {
      if (!rep.stable) throw Error::math("WrongClass", "ideal is not stable");
      for (int i = 1; i < u.max_var(); ++i) out.push_back(i);
      return out;
    }
    case IdealClass::sqfree_stable: {
      if (!rep.squarefree_stable) throw Error::math("WrongClass", "ideal is not squarefree stable");
      for (int i = 1; i < u.max_var(); ++i)
        if (u.exponent(i) == 0) out.push_back(i);
      return out;
    }
    case IdealClass::matroid: {
      if (!rep.matroidal) throw Error::math("WrongClass", "ideal is not matroidal");
      std::set<int> acc;
      auto supp_u = u.support();
      for (const auto& v : ideal.gens) {
        if (!degrevlex_greater(v, u)) continue;
        std::vector<int> diff;
        for (int i : v.support())
          if (u.exponent(i) == 0) diff.push_back(i);
        if (diff.size() == 1) acc.insert(diff.front());
      }
      out.assign(acc.begin(), acc.end());
      return out;
    }
  }
  throw Error::internal("Unreachable", "unknown ideal class");
}

std::optional<ExchangeViolation> check_basis_exchange(const std::vector<std::vector<int>>& bases) {
  std::set<std::set<int>> family;
  for (const auto& b : bases) family.insert(std::set<int>(b.begin(), b.end()));
  for (const auto& a : family) {
    for (const auto& c : family) {
      for (int x : a) {
        if (c.count(x)) continue;
        bool found = false;
        for (int y : c) {
          if (a.count(y)) continue;
          std::set<int> swapped = a;
          swapped.erase(x);
          swapped.insert(y);
          if (family.count(swapped)) {
            found = true;
            break;
          }
        }
        if (!found) {
          ExchangeViolation v;
          v.from.assign(a.begin(), a.end());
          v.to.assign(c.begin(), c.end());
          v.element = x;
          return v;
        }
      }
    }
  }
  return std::nullopt;
}

OrderedIdeal matroid_ideal(const std::vector<std::vector<int>>& bases, int n_vars) {
  if (bases.empty()) throw Error::math("EmptyInput", "no bases given");
  size_t card = 0;
  int max_elem = 0;
  std::set<std::set<int>> family;
  for (const auto& b : bases) {
    std::set<int> s(b.begin(), b.end());
    if (s.empty() || s.size() != b.size())
      throw Error::math("NotAMatroid", "bases must be nonempty sets without repeats");
    for (int x : s) {
      if (x < 1) throw Error::math("NotAMatroid", "ground-set elements must be >= 1");
      max_elem = std::max(max_elem, x);
    }
    if (family.empty())
      card = s.size();
    else if (s.size() != card)
      throw Error::math("NotAMatroid", "bases have different cardinalities");
    family.insert(s);
  }
  std::vector<std::vector<int>> flat;
  for (const auto& s : family) flat.emplace_back(s.begin(), s.end());
  if (auto viol = check_basis_exchange(flat)) {
    std::string from, to;
    for (int x : viol->from) from += std::to_string(x) + " ";
    for (int x : viol->to) to += std::to_string(x) + " ";
    throw Error::math("NotAMatroid", "exchange fails for bases {" + from + "} and {" + to +
                                         "} at element " + std::to_string(viol->element));
  }
  int nv = n_vars > 0 ? n_vars : max_elem;
  if (nv < max_elem)
    throw Error::math("NotAMatroid", "ground-set element exceeds ambient variable count");
  std::vector<Monomial> gens;
  for (const auto& s : family) {
    Monomial m = Monomial::one(nv);
    for (int x : s) m = m * Monomial::variable(nv, x);
    gens.push_back(m);
  }
  std::sort(gens.begin(), gens.end(), degrevlex_greater);
  OrderedIdeal out;
  out.n_vars = nv;
  out.gens = gens;
  return out;
}

}  // namespace mapcone
