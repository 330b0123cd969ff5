#include "mapcone/dg.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace mapcone {

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// (-1)^{#{(s,t) in sigma x tau : s > t}}, the sign sorting the
// concatenation sigma tau.
int shuffle_sign(const std::vector<int>& sigma, const std::vector<int>& tau) {
  int inv = 0;
  for (int s : sigma)
    for (int t : tau)
      if (s > t) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (int s : a)
    for (int t : b)
      if (s == t) return false;
  return true;
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> u;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

std::map<BasisSymbol, int> level_index(const FreeComplex& F, int i) {
  std::map<BasisSymbol, int> idx;
  for (size_t k = 0; k < F.bases[static_cast<size_t>(i)].size(); ++k)
    idx[F.bases[static_cast<size_t>(i)][k]] = static_cast<int>(k);
  return idx;
}

DgElement apply_map(const ComplexMap& f, const DgElement& x) {
  DgElement out;
  out.deg = x.deg;
  if (x.deg < 0 || x.deg > f.source.length()) return out;
  const PolyMat& m = f.mats[static_cast<size_t>(x.deg)];
  for (const auto& [idx, c] : x.coeffs) {
    auto it = m.entries().lower_bound({idx, 0});
    for (; it != m.entries().end() && it->first.first == idx; ++it) {
      auto jt = out.coeffs.find(it->first.second);
      Polynomial add = c * it->second;
      if (jt == out.coeffs.end())
        out.coeffs.emplace(it->first.second, std::move(add));
      else {
        jt->second += add;
        if (jt->second.is_zero()) out.coeffs.erase(jt);
      }
    }
  }
  return out;
}

}  // namespace

bool dg_equal(const DgElement& x, const DgElement& y) {
  if (x.coeffs.empty() && y.coeffs.empty()) return true;
  return x.deg == y.deg && x.coeffs == y.coeffs;
}

DgElement dg_add(const DgElement& x, const DgElement& y) {
  if (x.coeffs.empty()) return y;
  if (y.coeffs.empty()) return x;
  if (x.deg != y.deg) throw Error::internal("DimensionMismatch", "adding mixed degrees");
  DgElement out = x;
  for (const auto& [idx, c] : y.coeffs) {
    auto it = out.coeffs.find(idx);
    if (it == out.coeffs.end())
      out.coeffs.emplace(idx, c);
    else {
      it->second += c;
      if (it->second.is_zero()) out.coeffs.erase(it);
    }
  }
  return out;
}

DgElement dg_scale(const mpq_class& c, const DgElement& x) {
  DgElement out;
  out.deg = x.deg;
  if (c == 0) return out;
  for (const auto& [idx, p] : x.coeffs) out.coeffs.emplace(idx, c * p);
  return out;
}

DgElement DGAlgebra::basis_elem(Addr a) const {
  DgElement e;
  e.deg = a.first;
  e.coeffs.emplace(a.second, Polynomial::constant(cx.n_vars, 1));
  return e;
}

DgElement DGAlgebra::basis_product(Addr a, Addr b) const {
  if (a.first == 0) {
    if (a.second != 0) throw Error::internal("IndexOutOfRange", "degree-0 basis index");
    return basis_elem(b);
  }
  if (b.first == 0) return basis_elem(a);
  auto it = table.find({a, b});
  DgElement out;
  out.deg = a.first + b.first;
  if (it != table.end()) return it->second;
  return out;
}

DgElement DGAlgebra::mul(const DgElement& x, const DgElement& y) const {
  DgElement out;
  out.deg = x.deg + y.deg;
  if (x.is_zero() || y.is_zero()) return out;
  for (const auto& [ix, cx_] : x.coeffs) {
    for (const auto& [iy, cy] : y.coeffs) {
      DgElement prod = basis_product({x.deg, ix}, {y.deg, iy});
      for (const auto& [iz, cz] : prod.coeffs) {
        auto it = out.coeffs.find(iz);
        Polynomial add = cx_ * cy * cz;
        if (add.is_zero()) continue;
        if (it == out.coeffs.end())
          out.coeffs.emplace(iz, std::move(add));
        else {
          it->second += add;
          if (it->second.is_zero()) out.coeffs.erase(it);
        }
      }
    }
  }
  return out;
}

DgElement DGAlgebra::differential(const DgElement& x) const {
  DgElement out;
  out.deg = x.deg - 1;
  if (x.deg < 1 || x.deg > cx.length()) return out;
  const PolyMat& d = cx.diff[static_cast<size_t>(x.deg)];
  for (const auto& [idx, c] : x.coeffs) {
    auto it = d.entries().lower_bound({idx, 0});
    for (; it != d.entries().end() && it->first.first == idx; ++it) {
      auto jt = out.coeffs.find(it->first.second);
      Polynomial add = c * it->second;
      if (jt == out.coeffs.end())
        out.coeffs.emplace(it->first.second, std::move(add));
      else {
        jt->second += add;
        if (jt->second.is_zero()) out.coeffs.erase(jt);
      }
    }
  }
  return out;
}

namespace {

// Shared construction for the Koszul and Taylor algebras: wedge products
// with an extra monomial factor in the Taylor case.
DGAlgebra wedge_algebra(FreeComplex cx, const std::vector<Monomial>* taylor_lcms) {
  DGAlgebra A;
  A.cx = std::move(cx);
  int nv = A.cx.n_vars;
  std::vector<std::map<BasisSymbol, int>> idx;
  for (int i = 0; i <= A.cx.length(); ++i) idx.push_back(level_index(A.cx, i));

  auto lcm_of = [&](const std::vector<int>& sigma) {
    Monomial m = Monomial::one(nv);
    for (int i : sigma) m = lcm(m, (*taylor_lcms)[static_cast<size_t>(i - 1)]);
    return m;
  };

  for (int i = 1; i <= A.cx.length(); ++i) {
    for (size_t a = 0; a < A.cx.bases[static_cast<size_t>(i)].size(); ++a) {
      const auto& sa = A.cx.bases[static_cast<size_t>(i)][a].sigma;
      for (int j = 1; i + j <= A.cx.length(); ++j) {
        for (size_t b = 0; b < A.cx.bases[static_cast<size_t>(j)].size(); ++b) {
          const auto& sb = A.cx.bases[static_cast<size_t>(j)][b].sigma;
          if (!disjoint(sa, sb)) continue;
          auto su = sorted_union(sa, sb);
          int sgn = shuffle_sign(sa, sb);
          DgElement prod;
          prod.deg = i + j;
          Polynomial coeff = Polynomial::constant(nv, sgn);
          if (taylor_lcms) {
            Monomial num = lcm_of(sa) * lcm_of(sb);
            Monomial cof = divide_exact(num, lcm_of(su));
            coeff = Polynomial::term(cof, sgn);
          }
          prod.coeffs.emplace(idx[static_cast<size_t>(i + j)].at({su, 0}), coeff);
          A.table[{{i, static_cast<int>(a)}, {j, static_cast<int>(b)}}] = std::move(prod);
        }
      }
    }
  }
  return A;
}

}  // namespace

DGAlgebra koszul_dg(const std::vector<Polynomial>& elements) {
  return wedge_algebra(koszul_complex(elements), nullptr);
}

DGAlgebra taylor_dg(const std::vector<Monomial>& monomials) {
  FreeComplex cx = taylor_complex(monomials);
  return wedge_algebra(std::move(cx), &monomials);
}

DgCheckReport dg_check(const DGAlgebra& A) {
  DgCheckReport rep;
  std::vector<Addr> basis;
  for (int i = 0; i <= A.cx.length(); ++i)
    for (int k = 0; k < A.cx.rank(i); ++k) basis.push_back({i, k});

  auto fail = [&](bool& flag, const std::string& what, Addr a, Addr b) {
    flag = false;
    if (rep.first_violation.empty())
      rep.first_violation = what + " fails for (" + std::to_string(a.first) + "," +
                            std::to_string(a.second) + ")x(" + std::to_string(b.first) + "," +
                            std::to_string(b.second) + ")";
  };

  for (Addr a : basis) {
    if (!dg_equal(A.basis_product(A.unit(), a), A.basis_elem(a)) ||
        !dg_equal(A.basis_product(a, A.unit()), A.basis_elem(a)))
      fail(rep.unital, "unit law", a, a);
  }

  for (Addr a : basis) {
    for (Addr b : basis) {
      DgElement ab = A.basis_product(a, b);
      DgElement ba = A.basis_product(b, a);
      int sgn = (a.first * b.first) % 2 == 0 ? 1 : -1;
      if (!dg_equal(ab, dg_scale(sgn, ba))) fail(rep.graded_commutative, "graded commutativity", a, b);
      DgElement lhs = A.differential(ab);
      DgElement rhs = dg_add(A.mul(A.differential(A.basis_elem(a)), A.basis_elem(b)),
                             dg_scale(a.first % 2 == 0 ? 1 : -1,
                                      A.mul(A.basis_elem(a), A.differential(A.basis_elem(b)))));
      if (!dg_equal(lhs, rhs)) fail(rep.leibniz, "Leibniz rule", a, b);
    }
  }

  for (Addr a : basis) {
    for (Addr b : basis) {
      DgElement ab = A.basis_product(a, b);
      for (Addr c : basis) {
        DgElement lhs = A.mul(ab, A.basis_elem(c));
        DgElement rhs = A.mul(A.basis_elem(a), A.basis_product(b, c));
        if (!dg_equal(lhs, rhs)) {
          fail(rep.associative, "associativity", a, b);
          break;
        }
      }
    }
  }
  return rep;
}

DGAlgebra nagata_star(const DGAlgebra& A, const DGAlgebra& M, const ComplexMap& phi,
                      const ComplexMap& psi, const Polynomial& f_next) {
  if (!(phi.source == A.cx) || !(phi.target == M.cx))
    throw Error::internal("DimensionMismatch", "phi must map A to M");
  if (!(psi.source == M.cx) || !(psi.target == A.cx))
    throw Error::internal("DimensionMismatch", "psi must map M to A");
  if (A.cx.rank(0) != 1 || M.cx.rank(0) != 1)
    throw Error::internal("DimensionMismatch", "star products need rank-1 degree 0");
  int nv = A.cx.n_vars;

  if (!(phi.mats[0].get(0, 0) == Polynomial::constant(nv, 1)))
    throw Error::math("NotDGHomomorphism", "phi does not fix the unit");

  // phi multiplicative on basis pairs.
  for (int i = 1; i <= A.cx.length(); ++i)
    for (int a = 0; a < A.cx.rank(i); ++a)
      for (int j = 1; j <= A.cx.length(); ++j)
        for (int b = 0; b < A.cx.rank(j); ++b) {
          DgElement lhs = apply_map(phi, A.basis_product({i, a}, {j, b}));
          DgElement rhs = M.mul(apply_map(phi, A.basis_elem({i, a})),
                                apply_map(phi, A.basis_elem({j, b})));
          if (!dg_equal(lhs, rhs))
            throw Error::math("NotDGHomomorphism",
                              "phi(ab) != phi(a)phi(b) at degrees " + std::to_string(i) + "," +
                                  std::to_string(j));
        }

  // phi o psi = f_next id_M.
  for (int i = 0; i <= M.cx.length(); ++i) {
    PolyMat comp = phi.mats[static_cast<size_t>(i)] * psi.mats[static_cast<size_t>(i)];
    if (!(comp == PolyMat::scalar(M.cx.rank(i), f_next)))
      throw Error::math("NotDGHomomorphism",
                        "phi o psi is not multiplication by f at degree " + std::to_string(i));
  }

  // psi(m) n = m psi(n), both sides read in M through phi.
  for (int i = 0; i <= M.cx.length(); ++i)
    for (int a = 0; a < M.cx.rank(i); ++a)
      for (int j = 0; j <= M.cx.length(); ++j)
        for (int b = 0; b < M.cx.rank(j); ++b) {
          DgElement lhs = M.mul(apply_map(phi, apply_map(psi, M.basis_elem({i, a}))),
                                M.basis_elem({j, b}));
          DgElement rhs = M.mul(M.basis_elem({i, a}),
                                apply_map(phi, apply_map(psi, M.basis_elem({j, b}))));
          if (!dg_equal(lhs, rhs))
            throw Error::math("NotDGHomomorphism", "psi(m)n != m psi(n) at degrees " +
                                                       std::to_string(i) + "," + std::to_string(j));
        }

  DGAlgebra C;
  C.cx = mapping_cone(psi);

  auto rank_a = [&](int i) { return A.cx.rank(i); };
  auto decode = [&](Addr addr) -> std::pair<bool, Addr> {
    auto [i, k] = addr;
    if (k < rank_a(i)) return {true, {i, k}};
    return {false, {i - 1, k - rank_a(i)}};
  };
  auto embed_a = [&](const DgElement& x) {
    DgElement out;
    out.deg = x.deg;
    out.coeffs = x.coeffs;
    return out;
  };
  auto embed_m = [&](const DgElement& x) {
    DgElement out;
    out.deg = x.deg + 1;
    for (const auto& [idx, c] : x.coeffs) out.coeffs.emplace(idx + rank_a(x.deg + 1), c);
    return out;
  };

  for (int i = 1; i <= C.cx.length(); ++i)
    for (int a = 0; a < C.cx.rank(i); ++a)
      for (int j = 1; j <= C.cx.length(); ++j)
        for (int b = 0; b < C.cx.rank(j); ++b) {
          auto [a_in_A, pa] = decode({i, a});
          auto [b_in_A, pb] = decode({j, b});
          DgElement prod;
          prod.deg = i + j;
          if (a_in_A && b_in_A) {
            prod = embed_a(A.basis_product(pa, pb));
            prod.deg = i + j;
          } else if (a_in_A && !b_in_A) {
            DgElement v = M.mul(apply_map(phi, A.basis_elem(pa)), M.basis_elem(pb));
            prod = embed_m(dg_scale(i % 2 == 0 ? 1 : -1, v));
            prod.deg = i + j;
          } else if (!a_in_A && b_in_A) {
            DgElement v = M.mul(M.basis_elem(pa), apply_map(phi, A.basis_elem(pb)));
            prod = embed_m(v);
            prod.deg = i + j;
          }
          if (!prod.coeffs.empty()) C.table[{{i, a}, {j, b}}] = std::move(prod);
        }
  return C;
}

TaylorStarResult taylor_via_star(const std::vector<Monomial>& monomials) {
  if (monomials.size() < 2)
    throw Error::math("EmptyInput", "star construction needs at least two monomials");
  int m = static_cast<int>(monomials.size());
  int nv = monomials.front().n_vars();
  const Monomial& fm = monomials.back();

  std::vector<Monomial> head(monomials.begin(), monomials.end() - 1);
  std::vector<Monomial> quot;
  for (const auto& f : head) quot.push_back(divide_exact(f, gcd(f, fm)));

  TaylorStarResult res;
  DGAlgebra A = taylor_dg(head);
  DGAlgebra M = taylor_dg(quot);
  // In the cone, M resolves R/((f_1..f_{m-1}) : f_m) mapped in by
  // multiplication with f_m, so its labels sit at shifted multidegrees
  // (g_sigma f_m = f_{sigma u m}).
  M.cx = shift_multidegrees(std::move(M.cx), fm);
  res.full = taylor_dg(monomials);

  auto lcm_f = [&](const std::vector<int>& sigma) {
    Monomial w = Monomial::one(nv);
    for (int i : sigma) w = lcm(w, monomials[static_cast<size_t>(i - 1)]);
    return w;
  };

  // phi(e_sigma) = (f_sigma f_m / f_{sigma u m}) e-bar_sigma,
  // psi(e-bar_sigma) = (f_{sigma u m} / f_sigma) e_sigma.
  std::vector<PolyMat> phi_mats, psi_mats;
  for (int i = 0; i <= A.cx.length(); ++i) {
    PolyMat pm(M.cx.rank(i), A.cx.rank(i), nv);
    PolyMat qm(A.cx.rank(i), M.cx.rank(i), nv);
    for (int k = 0; k < A.cx.rank(i); ++k) {
      const auto& sigma = A.cx.bases[static_cast<size_t>(i)][static_cast<size_t>(k)].sigma;
      std::vector<int> with_m = sigma;
      with_m.push_back(m);
      Monomial f_sigma = lcm_f(sigma);
      Monomial f_with = lcm_f(with_m);
      pm.set(k, k, Polynomial::from_monomial(divide_exact(f_sigma * fm, f_with)));
      qm.set(k, k, Polynomial::from_monomial(divide_exact(f_with, f_sigma)));
    }
    phi_mats.push_back(std::move(pm));
    psi_mats.push_back(std::move(qm));
  }

  ComplexMap phi, psi;
  try {
    phi = ComplexMap::checked(A.cx, M.cx, std::move(phi_mats));
    psi = ComplexMap::checked(M.cx, A.cx, std::move(psi_mats));
  } catch (const Error& e) {
    throw Error::math("NotDGHomomorphism", std::string("Taylor star maps fail: ") + e.what());
  }

  res.star = nagata_star(A, M, phi, psi, Polynomial::from_monomial(fm));

  std::vector<int> all(static_cast<size_t>(m));
  std::iota(all.begin(), all.end(), 1);
  std::vector<int> head_idx(static_cast<size_t>(m - 1));
  std::iota(head_idx.begin(), head_idx.end(), 1);
  res.delta = Polynomial::from_monomial(
      divide_exact(lcm_f(head_idx) * fm, lcm_f(all)));

  // alpha(e_sigma) = (e_sigma, 0) when m is not in sigma, and
  // (-1)^{|sigma|-1} (0, e-bar_{sigma minus m}) otherwise.
  std::vector<std::map<BasisSymbol, int>> aidx, midx;
  for (int i = 0; i <= A.cx.length(); ++i) aidx.push_back(level_index(A.cx, i));
  for (int i = 0; i <= M.cx.length(); ++i) midx.push_back(level_index(M.cx, i));
  std::vector<PolyMat> alpha;
  for (int i = 0; i <= res.full.cx.length(); ++i) {
    PolyMat am(res.star.cx.rank(i), res.full.cx.rank(i), nv);
    for (int k = 0; k < res.full.cx.rank(i); ++k) {
      const auto& sigma = res.full.cx.bases[static_cast<size_t>(i)][static_cast<size_t>(k)].sigma;
      bool has_m = std::find(sigma.begin(), sigma.end(), m) != sigma.end();
      if (!has_m) {
        am.set(aidx[static_cast<size_t>(i)].at({sigma, 0}), k, Polynomial::constant(nv, 1));
      } else {
        std::vector<int> rest;
        for (int s : sigma)
          if (s != m) rest.push_back(s);
        int row = A.cx.rank(i) + midx[static_cast<size_t>(i - 1)].at({rest, 0});
        int sgn = (static_cast<int>(sigma.size()) - 1) % 2 == 0 ? 1 : -1;
        am.set(row, k, Polynomial::constant(nv, sgn));
      }
    }
    alpha.push_back(std::move(am));
  }

  res.iso_chain = true;
  for (int i = 1; i <= res.full.cx.length(); ++i) {
    PolyMat lhs = alpha[static_cast<size_t>(i - 1)] * res.full.cx.diff[static_cast<size_t>(i)];
    PolyMat rhs = res.star.cx.diff[static_cast<size_t>(i)] * alpha[static_cast<size_t>(i)];
    if (!(lhs == rhs)) res.iso_chain = false;
  }

  ComplexMap alpha_map;
  alpha_map.source = res.full.cx;
  alpha_map.target = res.star.cx;
  alpha_map.mats = alpha;

  res.iso_product = true;
  for (int i = 1; i <= res.full.cx.length() && res.iso_product; ++i)
    for (int a = 0; a < res.full.cx.rank(i) && res.iso_product; ++a)
      for (int j = 1; j <= res.full.cx.length() && res.iso_product; ++j)
        for (int b = 0; b < res.full.cx.rank(j); ++b) {
          DgElement lhs = apply_map(alpha_map, res.full.basis_product({i, a}, {j, b}));
          DgElement rhs = res.star.mul(apply_map(alpha_map, res.full.basis_elem({i, a})),
                                       apply_map(alpha_map, res.full.basis_elem({j, b})));
          if (!dg_equal(lhs, rhs)) {
            res.iso_product = false;
            break;
          }
        }
  return res;
}

KoszulTypeReport koszul_type_check(const DGAlgebra& A, int n, uint64_t seed) {
  KoszulTypeReport rep;
  rep.rank_ok = A.cx.length() <= n;
  for (int i = 0; i <= n && rep.rank_ok; ++i)
    if (A.cx.rank(i) != binom(n, i)) {
      rep.rank_ok = false;
      rep.first_bad_degree = i;
    }
  if (!rep.rank_ok) return rep;

  int nv = A.cx.n_vars;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(1, 97);

  rep.pairing_injective = true;
  for (int i = 0; i <= n; ++i) {
    int r = A.cx.rank(i);
    int c = A.cx.rank(n - i);
    PolyMat pairing(r, c, nv);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < c; ++b) {
        DgElement prod = A.basis_product({i, a}, {n - i, b});
        auto it = prod.coeffs.find(0);
        if (it != prod.coeffs.end()) pairing.set(a, b, it->second);
      }
    bool injective = false;
    for (int attempt = 0; attempt < 3 && !injective; ++attempt) {
      std::vector<mpq_class> pt;
      for (int v = 0; v < nv; ++v) pt.emplace_back(dist(rng));
      std::vector<std::vector<mpq_class>> m(static_cast<size_t>(r),
                                            std::vector<mpq_class>(static_cast<size_t>(c), mpq_class(0)));
      for (const auto& [cr, p] : pairing.entries())
        m[static_cast<size_t>(cr.second)][static_cast<size_t>(cr.first)] = p.evaluate(pt);
      if (rank_exact(std::move(m)) == r) injective = true;
    }
    if (!injective) {
      rep.used_exact_fallback = true;
      injective = rank_poly(pairing) == r;
    }
    if (!injective) {
      rep.pairing_injective = false;
      rep.first_bad_degree = i;
      return rep;
    }
  }
  return rep;
}

ComplexMap tilde_phi(const DGAlgebra& A, const DGAlgebra& M, const ComplexMap& phi, int n) {
  if (!(phi.source == A.cx) || !(phi.target == M.cx))
    throw Error::internal("DimensionMismatch", "phi must map A to M");
  if (A.cx.rank(n) != 1 || M.cx.rank(n) != 1)
    throw Error::math("SingularPairing", "top degree is not rank 1");
  int nv = A.cx.n_vars;
  Polynomial delta = phi.mats[static_cast<size_t>(n)].get(0, 0);
  if (delta.is_zero()) throw Error::math("SingularPairing", "phi vanishes in the top degree");

  std::vector<PolyMat> mats;
  for (int i = 0; i <= n; ++i) {
    int r = A.cx.rank(i);
    int c = A.cx.rank(n - i);
    // Pairing system: sum_k x_k <a_k, a_l> = <m phi(a_l)> for every l.
    PolyMat sys(c, r, nv);
    for (int k = 0; k < r; ++k)
      for (int l = 0; l < c; ++l) {
        DgElement prod = A.basis_product({i, k}, {n - i, l});
        auto it = prod.coeffs.find(0);
        if (it != prod.coeffs.end()) sys.set(l, k, it->second);
      }
    Polynomial d = det(sys);
    if (d.is_zero()) throw Error::math("SingularPairing", "pairing matrix is singular at degree " +
                                                              std::to_string(i));
    PolyMat out(r, M.cx.rank(i), nv);
    for (int mb = 0; mb < M.cx.rank(i); ++mb) {
      std::vector<Polynomial> rhs;
      for (int l = 0; l < c; ++l) {
        DgElement v = M.mul(M.basis_elem({i, mb}), apply_map(phi, A.basis_elem({n - i, l})));
        auto it = v.coeffs.find(0);
        rhs.push_back(it == v.coeffs.end() ? Polynomial::zero(nv) : it->second);
      }
      for (int k = 0; k < r; ++k) {
        PolyMat repl = sys;
        for (int l = 0; l < c; ++l) repl.set(l, k, rhs[static_cast<size_t>(l)]);
        Polynomial num = det(repl);
        if (num.is_zero()) continue;
        auto q = try_divide(num, d);
        if (!q)
          throw Error::math("DivisibilityFailure",
                            "tilde_phi entry is not polynomial at degree " + std::to_string(i));
        out.set(k, mb, *q);
      }
    }
    mats.push_back(std::move(out));
  }

  ComplexMap tp = ComplexMap::checked(M.cx, A.cx, std::move(mats));

  // Composite identities: tilde_phi o phi = delta id_A, phi o tilde_phi =
  // delta id_M.
  for (int i = 0; i <= n; ++i) {
    PolyMat ta = tp.mats[static_cast<size_t>(i)] * phi.mats[static_cast<size_t>(i)];
    PolyMat tm = phi.mats[static_cast<size_t>(i)] * tp.mats[static_cast<size_t>(i)];
    if (!(ta == PolyMat::scalar(A.cx.rank(i), delta)) ||
        !(tm == PolyMat::scalar(M.cx.rank(i), delta)))
      throw Error::math("SingularPairing",
                        "composite identity fails at degree " + std::to_string(i));
  }
  return tp;
}

AciResult aci_resolution(const AciInput& input) {
  size_t n = input.f_seq.size();
  if (n == 0) throw Error::math("EmptyInput", "empty sequences");
  if (input.g_seq.size() != n || input.a_matrix.size() != n)
    throw Error::input("ParseError", "f, g and the matrix must have matching sizes");
  for (const auto& row : input.a_matrix)
    if (row.size() != n) throw Error::input("ParseError", "a_matrix must be square");
  int nv = input.f_seq.front().n_vars();

  for (size_t i = 0; i < n; ++i) {
    Polynomial acc(nv);
    for (size_t j = 0; j < n; ++j) acc += input.a_matrix[i][j] * input.g_seq[j];
    if (!(acc == input.f_seq[i]))
      throw Error::math("RelationViolation",
                        "f_" + std::to_string(i + 1) + " != sum_j a_ij g_j");
  }

  DGAlgebra A = koszul_dg(input.f_seq);
  DGAlgebra M = koszul_dg(input.g_seq);

  PolyMat amat(static_cast<int>(n), static_cast<int>(n), nv);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) amat.set(static_cast<int>(i), static_cast<int>(j), input.a_matrix[i][j]);
  Polynomial delta = det(amat);
  if (delta.is_zero()) throw Error::math("SingularPairing", "det(a) = 0");
  // M enters the cone as the resolution of R/((f):delta) mapped in by
  // multiplication with delta.
  if (delta.is_single_term())
    M.cx = shift_multidegrees(std::move(M.cx), delta.only_term().first);

  // phi(e_i) = sum_j a_ij h_j, extended multiplicatively.
  std::vector<DgElement> images;
  for (size_t i = 0; i < n; ++i) {
    DgElement img;
    img.deg = 1;
    for (size_t j = 0; j < n; ++j)
      if (!input.a_matrix[i][j].is_zero()) img.coeffs.emplace(static_cast<int>(j), input.a_matrix[i][j]);
    images.push_back(std::move(img));
  }
  std::vector<PolyMat> mats;
  for (int k = 0; k <= A.cx.length(); ++k) {
    PolyMat mk(M.cx.rank(k), A.cx.rank(k), nv);
    for (int c = 0; c < A.cx.rank(k); ++c) {
      const auto& sigma = A.cx.bases[static_cast<size_t>(k)][static_cast<size_t>(c)].sigma;
      DgElement acc;
      acc.deg = 0;
      acc.coeffs.emplace(0, Polynomial::constant(nv, 1));
      for (int i : sigma) acc = M.mul(acc, images[static_cast<size_t>(i - 1)]);
      for (const auto& [idx, p] : acc.coeffs) mk.set(idx, c, p);
    }
    mats.push_back(std::move(mk));
  }
  ComplexMap phi = ComplexMap::checked(A.cx, M.cx, std::move(mats));
  if (!(phi.mats[n].get(0, 0) == delta))
    throw Error::internal("InvariantViolation", "phi in the top degree disagrees with det(a)");

  ComplexMap psi = tilde_phi(A, M, phi, static_cast<int>(n));
  AciResult res;
  res.algebra = nagata_star(A, M, phi, psi, delta);
  res.delta = delta;
  return res;
}

namespace {

ComplexMap identity_map(const FreeComplex& F) {
  std::vector<PolyMat> mats;
  for (int i = 0; i <= F.length(); ++i) mats.push_back(PolyMat::identity(F.rank(i), F.n_vars));
  return ComplexMap::checked(F, F, std::move(mats));
}

ComplexMap scalar_map(const FreeComplex& F, const Polynomial& c) {
  std::vector<PolyMat> mats;
  for (int i = 0; i <= F.length(); ++i) mats.push_back(PolyMat::scalar(F.rank(i), c));
  return ComplexMap::checked(F, F, std::move(mats));
}

}  // namespace

KoszulSeqReport koszul_sequence_check(const std::vector<Polynomial>& f_seq, KoszulSeqMode mode,
                                      const std::optional<AciInput>& aci, uint64_t seed) {
  KoszulSeqReport rep;
  if (f_seq.empty()) throw Error::math("EmptyInput", "empty sequence");
  int n = static_cast<int>(f_seq.size());

  auto base_step = [&](const DGAlgebra& A1) {
    KoszulSeqStep s;
    s.step = 1;
    s.a_koszul_type = s.m_koszul_type = true;  // no previous step
    s.star_built = true;
    s.cone_koszul_type = koszul_type_check(A1, 1, seed).ok();
    VerifyReport v = verify_complex(A1.cx);
    s.resolves = v.dsq_zero && v.multigraded && v.exact;
    rep.steps.push_back(s);
  };

  switch (mode) {
    case KoszulSeqMode::regular: {
      DGAlgebra A = koszul_dg({f_seq.front()});
      base_step(A);
      for (int i = 2; i <= n; ++i) {
        KoszulSeqStep s;
        s.step = i;
        const Polynomial& fi = f_seq[static_cast<size_t>(i - 1)];
        s.a_koszul_type = koszul_type_check(A, i - 1, seed).ok();
        s.m_koszul_type = s.a_koszul_type;  // M^(i-1) = A^(i-1)
        DGAlgebra M = A;
        if (fi.is_single_term())
          M.cx = shift_multidegrees(std::move(M.cx), fi.only_term().first);
        ComplexMap phi = ComplexMap::checked(A.cx, M.cx, identity_map(A.cx).mats);
        ComplexMap psi = ComplexMap::checked(M.cx, A.cx, scalar_map(A.cx, fi).mats);
        DGAlgebra star = nagata_star(A, M, phi, psi, fi);
        s.star_built = true;
        s.cone_koszul_type = koszul_type_check(star, i, seed).ok();
        VerifyReport v = verify_complex(star.cx);
        s.resolves = v.dsq_zero && v.multigraded && v.exact;
        rep.steps.push_back(s);
        A = std::move(star);
      }
      break;
    }
    case KoszulSeqMode::monomial: {
      std::vector<Monomial> monos;
      for (const auto& f : f_seq) {
        if (!f.is_single_term() || f.only_term().second != 1)
          throw Error::math("NotMonomial", "monomial mode needs monic monomials");
        monos.push_back(f.only_term().first);
      }
      base_step(taylor_dg({monos.front()}));
      for (int i = 2; i <= n; ++i) {
        KoszulSeqStep s;
        s.step = i;
        std::vector<Monomial> prefix(monos.begin(), monos.begin() + i);
        TaylorStarResult star = taylor_via_star(prefix);
        std::vector<Monomial> head(prefix.begin(), prefix.end() - 1);
        std::vector<Monomial> quot;
        for (const auto& f : head) quot.push_back(divide_exact(f, gcd(f, prefix.back())));
        s.a_koszul_type = koszul_type_check(taylor_dg(head), i - 1, seed).ok();
        s.m_koszul_type = koszul_type_check(taylor_dg(quot), i - 1, seed).ok();
        s.star_built = star.iso_ok();
        s.cone_koszul_type = koszul_type_check(star.star, i, seed).ok();
        VerifyReport v = verify_complex(star.star.cx);
        s.resolves = v.dsq_zero && v.multigraded && v.exact;
        rep.steps.push_back(s);
      }
      break;
    }
    case KoszulSeqMode::aci: {
      if (!aci) throw Error::input("ParseError", "aci mode needs g and the matrix");
      if (aci->f_seq != f_seq)
        throw Error::input("ParseError", "aci data must share the f sequence");
      KoszulSeqReport head =
          koszul_sequence_check(f_seq, KoszulSeqMode::regular, std::nullopt, seed);
      rep.steps = head.steps;
      KoszulSeqStep s;
      s.step = n + 1;
      DGAlgebra A = koszul_dg(aci->f_seq);
      DGAlgebra M = koszul_dg(aci->g_seq);
      s.a_koszul_type = koszul_type_check(A, n, seed).ok();
      s.m_koszul_type = koszul_type_check(M, n, seed).ok();
      AciResult res = aci_resolution(*aci);
      s.star_built = true;
      s.cone_koszul_type = koszul_type_check(res.algebra, n + 1, seed).ok();
      VerifyReport v = verify_complex(res.algebra.cx);
      s.resolves = v.dsq_zero && v.multigraded && v.exact;
      rep.steps.push_back(s);
      break;
    }
  }
  rep.ok = std::all_of(rep.steps.begin(), rep.steps.end(),
                       [](const KoszulSeqStep& s) { return s.ok(); });
  return rep;
}

}  // namespace mapcone
