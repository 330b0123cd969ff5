#include "mapcone/resolution.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mapcone {

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void k_subsets(const std::vector<int>& elems, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, size_t start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i < elems.size(); ++i) {
      cur.push_back(elems[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

int alpha_sign_count(const std::vector<int>& sigma, int t) {
  int a = 0;
  for (int s : sigma)
    if (s < t) ++a;
  return a;
}

std::vector<int> erase_elem(const std::vector<int>& sigma, int t) {
  std::vector<int> out;
  for (int s : sigma)
    if (s != t) out.push_back(s);
  return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

using Index = std::map<BasisSymbol, int>;

std::vector<Index> index_bases(const FreeComplex& F) {
  std::vector<Index> idx(F.bases.size());
  for (size_t i = 0; i < F.bases.size(); ++i)
    for (size_t k = 0; k < F.bases[i].size(); ++k) idx[i][F.bases[i][k]] = static_cast<int>(k);
  return idx;
}

}  // namespace

FreeComplex koszul_complex(const std::vector<Polynomial>& elements) {
  if (elements.empty()) throw Error::math("EmptyInput", "Koszul complex of an empty sequence");
  int nv = elements.front().n_vars();
  for (const auto& f : elements)
    if (f.n_vars() != nv) throw Error::internal("DimensionMismatch", "mixed ambient counts");
  int l = static_cast<int>(elements.size());

  bool monomial_data = true;
  std::vector<Monomial> mdeg_of;
  for (const auto& f : elements) {
    if (f.is_single_term())
      mdeg_of.push_back(f.only_term().first);
    else
      monomial_data = false;
  }

  FreeComplex F;
  F.n_vars = nv;
  F.bases.resize(static_cast<size_t>(l) + 1);
  F.has_multidegrees = monomial_data;
  if (monomial_data) F.multidegrees.resize(static_cast<size_t>(l) + 1);
  std::vector<int> ground(static_cast<size_t>(l));
  std::iota(ground.begin(), ground.end(), 1);
  for (int k = 0; k <= l; ++k) {
    std::vector<std::vector<int>> subs;
    k_subsets(ground, k, subs);
    for (auto& s : subs) {
      F.bases[static_cast<size_t>(k)].push_back({s, 0});
      if (monomial_data) {
        Monomial m = Monomial::one(nv);
        for (int i : s) m = m * mdeg_of[static_cast<size_t>(i - 1)];
        F.multidegrees[static_cast<size_t>(k)].push_back(m);
      }
    }
  }
  auto idx = index_bases(F);
  F.diff.resize(static_cast<size_t>(l) + 1);
  for (int k = 1; k <= l; ++k) {
    PolyMat d(F.rank(k - 1), F.rank(k), nv);
    for (size_t c = 0; c < F.bases[static_cast<size_t>(k)].size(); ++c) {
      const auto& sigma = F.bases[static_cast<size_t>(k)][c].sigma;
      for (int t : sigma) {
        int sgn = alpha_sign_count(sigma, t) % 2 == 0 ? 1 : -1;
        int row = idx[static_cast<size_t>(k - 1)].at({erase_elem(sigma, t), 0});
        d.add(row, static_cast<int>(c), mpq_class(sgn) * elements[static_cast<size_t>(t - 1)]);
      }
    }
    F.diff[static_cast<size_t>(k)] = std::move(d);
  }
  return F;
}

FreeComplex taylor_complex(const std::vector<Monomial>& monomials) {
  if (monomials.empty()) throw Error::math("EmptyInput", "Taylor complex of an empty sequence");
  int nv = monomials.front().n_vars();
  for (const auto& m : monomials) require_same_ambient(monomials.front(), m);
  int l = static_cast<int>(monomials.size());

  auto lcm_of = [&](const std::vector<int>& sigma) {
    Monomial m = Monomial::one(nv);
    for (int i : sigma) m = lcm(m, monomials[static_cast<size_t>(i - 1)]);
    return m;
  };

  FreeComplex F;
  F.n_vars = nv;
  F.bases.resize(static_cast<size_t>(l) + 1);
  F.has_multidegrees = true;
  F.multidegrees.resize(static_cast<size_t>(l) + 1);
  std::vector<int> ground(static_cast<size_t>(l));
  std::iota(ground.begin(), ground.end(), 1);
  for (int k = 0; k <= l; ++k) {
    std::vector<std::vector<int>> subs;
    k_subsets(ground, k, subs);
    for (auto& s : subs) {
      F.bases[static_cast<size_t>(k)].push_back({s, 0});
      F.multidegrees[static_cast<size_t>(k)].push_back(lcm_of(s));
    }
  }
  auto idx = index_bases(F);
  F.diff.resize(static_cast<size_t>(l) + 1);
  for (int k = 1; k <= l; ++k) {
    PolyMat d(F.rank(k - 1), F.rank(k), nv);
    for (size_t c = 0; c < F.bases[static_cast<size_t>(k)].size(); ++c) {
      const auto& sigma = F.bases[static_cast<size_t>(k)][c].sigma;
      Monomial fs = F.multidegrees[static_cast<size_t>(k)][c];
      for (int t : sigma) {
        int sgn = alpha_sign_count(sigma, t) % 2 == 0 ? 1 : -1;
        auto rest = erase_elem(sigma, t);
        int row = idx[static_cast<size_t>(k - 1)].at({rest, 0});
        Monomial cof = divide_exact(fs, lcm_of(rest));
        d.add(row, static_cast<int>(c), Polynomial::term(cof, sgn));
      }
    }
    F.diff[static_cast<size_t>(k)] = std::move(d);
  }
  return F;
}

namespace {

OrderedIdeal prepare_lq_ideal(const OrderedIdeal& ideal) {
  OrderedIdeal I = ideal.sets ? ideal : with_sets(ideal);
  for (int j = 2; j <= I.size(); ++j)
    if (I.gen(j).degree() < I.gen(j - 1).degree())
      throw Error::math("DegreeOrderViolation",
                        "generator degrees are not nondecreasing (step " + std::to_string(j) +
                            "); minimality of the resolution is not guaranteed");
  RegularityReport reg = is_regular(I);
  if (!reg.regular) {
    std::string set_str;
    for (int s : reg.witness_set) set_str += std::to_string(s) + " ";
    throw Error::math("NotRegular", "decomposition function is not regular: set(g(x" +
                                        std::to_string(reg.witness_s) + "*" + reg.witness_u.str() +
                                        ")) = {" + set_str + "} is not inside set(" +
                                        reg.witness_u.str() + ")");
  }
  return I;
}

}  // namespace

FreeComplex lq_resolution(const OrderedIdeal& ideal) {
  OrderedIdeal I = prepare_lq_ideal(ideal);
  int nv = I.n_vars;
  int max_set = 0;
  for (int j = 1; j <= I.size(); ++j)
    max_set = std::max(max_set, static_cast<int>(I.set_of(j).size()));
  int len = max_set + 1;

  FreeComplex F;
  F.n_vars = nv;
  F.bases.resize(static_cast<size_t>(len) + 1);
  F.has_multidegrees = true;
  F.multidegrees.resize(static_cast<size_t>(len) + 1);
  F.bases[0] = {BasisSymbol{{}, 0}};
  F.multidegrees[0] = {Monomial::one(nv)};
  for (int i = 1; i <= len; ++i) {
    std::vector<BasisSymbol> symbols;
    for (int j = 1; j <= I.size(); ++j) {
      std::vector<std::vector<int>> subs;
      k_subsets(I.set_of(j), i - 1, subs);
      for (auto& s : subs) symbols.push_back({s, j});
    }
    std::sort(symbols.begin(), symbols.end());
    for (const auto& sym : symbols) {
      Monomial m = I.gen(sym.generator);
      for (int t : sym.sigma) m = m * Monomial::variable(nv, t);
      F.multidegrees[static_cast<size_t>(i)].push_back(m);
    }
    F.bases[static_cast<size_t>(i)] = std::move(symbols);
  }

  auto idx = index_bases(F);
  F.diff.resize(static_cast<size_t>(len) + 1);
  for (int i = 1; i <= len; ++i) {
    PolyMat d(F.rank(i - 1), F.rank(i), nv);
    for (size_t c = 0; c < F.bases[static_cast<size_t>(i)].size(); ++c) {
      const auto& [sigma, j] = F.bases[static_cast<size_t>(i)][c];
      const Monomial& u = I.gen(j);
      if (sigma.empty()) {
        d.add(0, static_cast<int>(c), Polynomial::from_monomial(u));
        continue;
      }
      for (int t : sigma) {
        mpq_class sgn = alpha_sign_count(sigma, t) % 2 == 0 ? 1 : -1;
        auto rest = erase_elem(sigma, t);
        d.add(idx[static_cast<size_t>(i - 1)].at({rest, j}), static_cast<int>(c),
              Polynomial::term(Monomial::variable(nv, t), -sgn));
        Monomial w = Monomial::variable(nv, t) * u;
        int gj = g_index(I, w);
        if (!subset_of(rest, I.set_of(gj))) continue;  // f(sigma \ t; g) = 0
        Monomial cof = divide_exact(w, I.gen(gj));
        d.add(idx[static_cast<size_t>(i - 1)].at({rest, gj}), static_cast<int>(c),
              Polynomial::term(cof, sgn));
      }
    }
    F.diff[static_cast<size_t>(i)] = std::move(d);
  }
  return F;
}

ComplexMap comparison_map(const OrderedIdeal& ideal, int j) {
  OrderedIdeal I = prepare_lq_ideal(ideal);
  if (j < 1 || j >= I.size())
    throw Error::math("IndexOutOfRange", "comparison_map needs 1 <= j <= m-1");
  FreeComplex target = lq_resolution(I.prefix(j));

  const Monomial& u = I.gen(j + 1);
  const std::vector<int>& su = I.set_of(j + 1);
  int nv = I.n_vars;
  int l = static_cast<int>(su.size());

  // Koszul complex on the variables of set(u_{j+1}), relabeled
  // f(sigma; u_{j+1}) and shifted so multidegrees are u x^sigma.
  FreeComplex K;
  K.n_vars = nv;
  K.bases.resize(static_cast<size_t>(l) + 1);
  K.has_multidegrees = true;
  K.multidegrees.resize(static_cast<size_t>(l) + 1);
  for (int k = 0; k <= l; ++k) {
    std::vector<std::vector<int>> subs;
    k_subsets(su, k, subs);
    for (auto& s : subs) {
      K.bases[static_cast<size_t>(k)].push_back({s, j + 1});
      Monomial m = u;
      for (int t : s) m = m * Monomial::variable(nv, t);
      K.multidegrees[static_cast<size_t>(k)].push_back(m);
    }
  }
  auto kidx = index_bases(K);
  K.diff.resize(static_cast<size_t>(l) + 1);
  for (int k = 1; k <= l; ++k) {
    PolyMat d(K.rank(k - 1), K.rank(k), nv);
    for (size_t c = 0; c < K.bases[static_cast<size_t>(k)].size(); ++c) {
      const auto& sigma = K.bases[static_cast<size_t>(k)][c].sigma;
      for (int t : sigma) {
        int sgn = alpha_sign_count(sigma, t) % 2 == 0 ? 1 : -1;
        d.add(kidx[static_cast<size_t>(k - 1)].at({erase_elem(sigma, t), j + 1}),
              static_cast<int>(c), Polynomial::term(Monomial::variable(nv, t), sgn));
      }
    }
    K.diff[static_cast<size_t>(k)] = std::move(d);
  }

  auto tidx = index_bases(target);
  std::vector<PolyMat> mats;
  for (int k = 0; k <= l; ++k) {
    PolyMat psi(target.rank(k), K.rank(k), nv);
    for (size_t c = 0; c < K.bases[static_cast<size_t>(k)].size(); ++c) {
      const auto& sigma = K.bases[static_cast<size_t>(k)][c].sigma;
      if (sigma.empty()) {
        psi.add(0, static_cast<int>(c), Polynomial::from_monomial(u));
        continue;
      }
      for (int t : sigma) {
        mpq_class sgn = alpha_sign_count(sigma, t) % 2 == 0 ? 1 : -1;
        auto rest = erase_elem(sigma, t);
        Monomial w = Monomial::variable(nv, t) * u;
        int gj = g_index(I, w);
        if (gj > j)
          throw Error::internal("InvariantViolation", "g(x_t u_{j+1}) outside the prefix");
        if (!subset_of(rest, I.set_of(gj))) continue;
        Monomial cof = divide_exact(w, I.gen(gj));
        psi.add(tidx[static_cast<size_t>(k)].at({rest, gj}), static_cast<int>(c),
                Polynomial::term(cof, sgn));
      }
    }
    mats.push_back(std::move(psi));
  }
  return ComplexMap::checked(std::move(K), std::move(target), std::move(mats));
}

FreeComplex iterated_cone_resolution(const OrderedIdeal& ideal) {
  OrderedIdeal I = prepare_lq_ideal(ideal);
  FreeComplex F = lq_resolution(I.prefix(1));
  for (int j = 1; j < I.size(); ++j) {
    ComplexMap psi = comparison_map(I, j);
    if (!(psi.target == F))
      throw Error::internal("InvariantViolation",
                            "iterated cone drifted from the prefix resolution at step " +
                                std::to_string(j));
    F = canonicalize(mapping_cone(psi));
  }
  return F;
}

BettiTable betti_from_sets(const OrderedIdeal& ideal) {
  OrderedIdeal I = ideal.sets ? ideal : with_sets(ideal);
  BettiTable t;
  t.entries[{0, 0}] = 1;
  for (int j = 1; j <= I.size(); ++j) {
    int s = static_cast<int>(I.set_of(j).size());
    int du = I.gen(j).degree();
    for (int i = 1; i <= s + 1; ++i) {
      long b = binom(s, i - 1);
      if (b) t.entries[{i, du + i - 1}] += b;
    }
  }
  return t;
}

BettiTable betti_from_complex(const FreeComplex& F) {
  if (!F.has_multidegrees)
    throw Error::internal("MissingMultidegrees", "Betti numbers need a multigraded complex");
  int len = F.length();
  auto deg_of = [&](int i, int k) {
    return F.multidegrees[static_cast<size_t>(i)][static_cast<size_t>(k)].degree();
  };
  // rank of diff[i] evaluated at x = 0, restricted to total degree d
  std::map<std::pair<int, int>, int> rank_block;
  for (int i = 1; i <= len; ++i) {
    std::map<int, std::vector<std::pair<std::pair<int, int>, mpq_class>>> by_degree;
    for (const auto& [cr, p] : F.diff[static_cast<size_t>(i)].entries()) {
      mpq_class c0 = p.constant_coeff();
      if (c0 == 0) continue;
      int d = deg_of(i, cr.first);
      if (deg_of(i - 1, cr.second) != d)
        throw Error::internal("InvariantViolation", "constant entry between different degrees");
      by_degree[d].push_back({{cr.second, cr.first}, c0});
    }
    for (auto& [d, ents] : by_degree) {
      std::map<int, int> row_l, col_l;
      for (auto& [rc, c] : ents) {
        row_l.emplace(rc.first, static_cast<int>(row_l.size()));
        col_l.emplace(rc.second, static_cast<int>(col_l.size()));
      }
      std::vector<std::vector<mpq_class>> m(row_l.size(),
                                            std::vector<mpq_class>(col_l.size(), mpq_class(0)));
      for (auto& [rc, c] : ents)
        m[static_cast<size_t>(row_l[rc.first])][static_cast<size_t>(col_l[rc.second])] = c;
      rank_block[{i, d}] = rank_exact(std::move(m));
    }
  }
  auto rank_at = [&](int i, int d) {
    auto it = rank_block.find({i, d});
    return it == rank_block.end() ? 0 : it->second;
  };
  BettiTable t;
  for (int i = 0; i <= len; ++i) {
    std::map<int, long> dims;
    for (size_t k = 0; k < F.bases[static_cast<size_t>(i)].size(); ++k)
      dims[deg_of(i, static_cast<int>(k))] += 1;
    for (const auto& [d, n] : dims) {
      long h = n - rank_at(i, d) - rank_at(i + 1, d);
      if (h < 0)
        throw Error::internal("InvariantViolation", "negative homology dimension");
      if (h) t.entries[{i, d}] += h;
    }
  }
  return t;
}

BettiTable betti_oracle(const OrderedIdeal& ideal) {
  return betti_from_complex(taylor_complex(ideal.gens));
}

VerifyReport verify_complex(const FreeComplex& F) {
  VerifyReport rep;
  int len = F.length();
  int nv = F.n_vars;

  rep.dsq_zero = true;
  for (int i = 2; i <= len && rep.dsq_zero; ++i) {
    PolyMat prod = F.diff[static_cast<size_t>(i - 1)] * F.diff[static_cast<size_t>(i)];
    if (!prod.is_zero()) {
      rep.dsq_zero = false;
      rep.failure = "d o d != 0 into degree " + std::to_string(i - 2);
    }
  }

  rep.minimal = true;
  for (int i = 1; i <= len && rep.minimal; ++i)
    for (const auto& [cr, p] : F.diff[static_cast<size_t>(i)].entries())
      if (p.constant_coeff() != 0) {
        rep.minimal = false;
        if (rep.failure.empty())
          rep.failure = "unit entry in the differential at degree " + std::to_string(i);
        break;
      }

  rep.multigraded = F.has_multidegrees;
  for (int i = 1; i <= len && rep.multigraded; ++i) {
    for (const auto& [cr, p] : F.diff[static_cast<size_t>(i)].entries()) {
      const Monomial& col_m = F.multidegrees[static_cast<size_t>(i)][static_cast<size_t>(cr.first)];
      const Monomial& row_m =
          F.multidegrees[static_cast<size_t>(i - 1)][static_cast<size_t>(cr.second)];
      if (!p.is_single_term() || !divides(row_m, col_m) ||
          p.only_term().first != divide_exact(col_m, row_m)) {
        rep.multigraded = false;
        if (rep.failure.empty())
          rep.failure = "entry not homogeneous for its labels at degree " + std::to_string(i);
        break;
      }
    }
  }

  if (!rep.multigraded || !rep.dsq_zero || F.rank(0) != 1 ||
      !F.multidegrees[0][0].is_one()) {
    rep.exact = false;
    if (rep.failure.empty()) rep.failure = "exactness checked only for multigraded complexes over R";
    return rep;
  }

  // Box bound: componentwise max of all basis multidegrees.
  std::vector<int> box(static_cast<size_t>(nv), 0);
  for (const auto& level : F.multidegrees)
    for (const auto& m : level)
      for (int i = 0; i < nv; ++i)
        box[static_cast<size_t>(i)] = std::max(box[static_cast<size_t>(i)], m.exponents()[static_cast<size_t>(i)]);

  // Scalarized differentials: (row, col, coefficient) with mod-p images.
  struct Entry {
    int row, col;
    mpq_class c;
    int64_t cp;
  };
  bool fast_path = true;
  std::vector<std::vector<Entry>> scalar(static_cast<size_t>(len) + 1);
  for (int i = 1; i <= len; ++i)
    for (const auto& [cr, p] : F.diff[static_cast<size_t>(i)].entries()) {
      Entry e{cr.second, cr.first, p.only_term().second, 0};
      try {
        e.cp = mod_p(e.c);
      } catch (const Error&) {
        fast_path = false;
      }
      scalar[static_cast<size_t>(i)].push_back(e);
    }

  std::vector<bool> d1_nonzero(static_cast<size_t>(F.rank(1)), false);
  for (const auto& e : scalar[1]) d1_nonzero[static_cast<size_t>(e.col)] = true;

  std::map<std::vector<int>, std::pair<bool, std::string>> memo;

  auto strand_check = [&](const std::vector<int>& a) -> std::pair<bool, std::string> {
    // Visible basis positions per homological degree.
    Monomial am{std::vector<int>(a)};
    std::vector<std::vector<int>> vis(static_cast<size_t>(len) + 1);
    std::vector<int> key;
    for (int i = 1; i <= len; ++i) {
      const auto& mds = F.multidegrees[static_cast<size_t>(i)];
      for (size_t k = 0; k < mds.size(); ++k)
        if (divides(mds[k], am)) vis[static_cast<size_t>(i)].push_back(static_cast<int>(k));
      for (int v : vis[static_cast<size_t>(i)]) key.push_back(v);
      key.push_back(-1);
    }
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    auto result = [&](bool ok, std::string why) {
      auto r = std::make_pair(ok, std::move(why));
      memo.emplace(std::move(key), r);
      return r;
    };

    bool expected_h0_zero = false;
    for (int v : vis[1])
      if (d1_nonzero[static_cast<size_t>(v)]) expected_h0_zero = true;

    // Local column index maps.
    std::vector<std::vector<int>> local(static_cast<size_t>(len) + 1);
    local[0] = {0};
    std::vector<int> dim(static_cast<size_t>(len) + 2, 0);
    dim[0] = 1;
    for (int i = 1; i <= len; ++i) {
      local[static_cast<size_t>(i)].assign(F.bases[static_cast<size_t>(i)].size(), -1);
      for (size_t k = 0; k < vis[static_cast<size_t>(i)].size(); ++k)
        local[static_cast<size_t>(i)][static_cast<size_t>(vis[static_cast<size_t>(i)][k])] =
            static_cast<int>(k);
      dim[static_cast<size_t>(i)] = static_cast<int>(vis[static_cast<size_t>(i)].size());
    }

    auto check_with_ranks = [&](const std::vector<int>& r) -> std::optional<std::string> {
      int h0 = dim[0] - r[1];
      if (h0 != (expected_h0_zero ? 0 : 1))
        return "degree-0 cokernel wrong in the strand";
      for (int i = 1; i <= len; ++i) {
        int h = dim[static_cast<size_t>(i)] - r[static_cast<size_t>(i)] - r[static_cast<size_t>(i) + 1];
        if (h != 0) return "nonzero homology at position " + std::to_string(i);
      }
      return std::nullopt;
    };

    if (fast_path) {
      std::vector<int> r(static_cast<size_t>(len) + 2, 0);
      for (int i = 1; i <= len; ++i) {
        if (dim[static_cast<size_t>(i)] == 0) continue;
        int rows = (i == 1) ? 1 : dim[static_cast<size_t>(i - 1)];
        if (rows == 0) continue;
        std::vector<std::vector<int64_t>> m(static_cast<size_t>(rows),
                                            std::vector<int64_t>(static_cast<size_t>(dim[static_cast<size_t>(i)]), 0));
        for (const auto& e : scalar[static_cast<size_t>(i)]) {
          int lc = local[static_cast<size_t>(i)][static_cast<size_t>(e.col)];
          if (lc < 0) continue;
          int lr = (i == 1) ? 0 : local[static_cast<size_t>(i - 1)][static_cast<size_t>(e.row)];
          m[static_cast<size_t>(lr)][static_cast<size_t>(lc)] = e.cp;
        }
        r[static_cast<size_t>(i)] = rank_mod_p(std::move(m));
      }
      if (!check_with_ranks(r)) return result(true, "");
    }

    // Exact ranks decide.
    std::vector<int> r(static_cast<size_t>(len) + 2, 0);
    for (int i = 1; i <= len; ++i) {
      if (dim[static_cast<size_t>(i)] == 0) continue;
      int rows = (i == 1) ? 1 : dim[static_cast<size_t>(i - 1)];
      if (rows == 0) continue;
      std::vector<std::vector<mpq_class>> m(static_cast<size_t>(rows),
                                            std::vector<mpq_class>(static_cast<size_t>(dim[static_cast<size_t>(i)]), mpq_class(0)));
      for (const auto& e : scalar[static_cast<size_t>(i)]) {
        int lc = local[static_cast<size_t>(i)][static_cast<size_t>(e.col)];
        if (lc < 0) continue;
        int lr = (i == 1) ? 0 : local[static_cast<size_t>(i - 1)][static_cast<size_t>(e.row)];
        m[static_cast<size_t>(lr)][static_cast<size_t>(lc)] = e.c;
      }
      r[static_cast<size_t>(i)] = rank_exact(std::move(m));
    }
    if (auto why = check_with_ranks(r)) return result(false, *why);
    return result(true, "");
  };

  rep.exact = true;
  std::vector<int> a(static_cast<size_t>(nv), 0);
  while (true) {
    auto [ok, why] = strand_check(a);
    if (!ok) {
      rep.exact = false;
      rep.failing_multidegree = a;
      if (rep.failure.empty()) rep.failure = why + " at a strand";
      break;
    }
    int i = 0;
    while (i < nv && a[static_cast<size_t>(i)] == box[static_cast<size_t>(i)]) {
      a[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == nv) break;
    ++a[static_cast<size_t>(i)];
  }
  return rep;
}

}  // namespace mapcone
