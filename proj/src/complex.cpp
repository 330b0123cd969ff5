#include "mapcone/complex.hpp"

#include <algorithm>
#include <numeric>

namespace mapcone {

std::string BasisSymbol::str() const {
  std::string s = generator > 0 ? "f({" : "e({";
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(sigma[i]);
  }
  s += "}";
  if (generator > 0) s += ";u" + std::to_string(generator);
  s += ")";
  return s;
}

std::vector<int> FreeComplex::ranks() const {
  std::vector<int> r;
  for (const auto& b : bases) r.push_back(static_cast<int>(b.size()));
  return r;
}

ComplexMap ComplexMap::checked(FreeComplex source, FreeComplex target, std::vector<PolyMat> mats) {
  ComplexMap f;
  f.source = std::move(source);
  f.target = std::move(target);
  f.mats = std::move(mats);
  if (static_cast<int>(f.mats.size()) != f.source.length() + 1)
    throw Error::internal("DimensionMismatch", "one matrix per source degree required");
  for (int i = 0; i <= f.source.length(); ++i) {
    const PolyMat& m = f.mats[static_cast<size_t>(i)];
    if (m.rows() != f.target.rank(i) || m.cols() != f.source.rank(i))
      throw Error::internal("DimensionMismatch",
                            "chain map matrix shape at degree " + std::to_string(i));
  }
  for (int i = 1; i <= f.source.length(); ++i) {
    // target.diff[i] o mats[i] == mats[i-1] o source.diff[i]
    PolyMat lhs = (i <= f.target.length())
                      ? f.target.diff[static_cast<size_t>(i)] * f.mats[static_cast<size_t>(i)]
                      : PolyMat(f.target.rank(i - 1), f.source.rank(i), f.source.n_vars);
    PolyMat rhs = f.mats[static_cast<size_t>(i - 1)] * f.source.diff[static_cast<size_t>(i)];
    if (!(lhs == rhs))
      throw Error::internal("NonCommuting",
                            "chain map does not commute at degree " + std::to_string(i));
  }
  return f;
}

FreeComplex mapping_cone(const ComplexMap& psi) {
  const FreeComplex& A = psi.source;
  const FreeComplex& B = psi.target;
  if (A.n_vars != B.n_vars)
    throw Error::internal("DimensionMismatch", "cone of a map between different rings");
  FreeComplex C;
  C.n_vars = B.n_vars;
  int len = std::max(B.length(), A.length() + 1);
  C.bases.resize(static_cast<size_t>(len) + 1);
  C.has_multidegrees = A.has_multidegrees && B.has_multidegrees;
  if (C.has_multidegrees) C.multidegrees.resize(static_cast<size_t>(len) + 1);
  for (int i = 0; i <= len; ++i) {
    auto& basis = C.bases[static_cast<size_t>(i)];
    if (i <= B.length())
      basis.insert(basis.end(), B.bases[static_cast<size_t>(i)].begin(),
                   B.bases[static_cast<size_t>(i)].end());
    if (i - 1 >= 0 && i - 1 <= A.length())
      basis.insert(basis.end(), A.bases[static_cast<size_t>(i - 1)].begin(),
                   A.bases[static_cast<size_t>(i - 1)].end());
    if (C.has_multidegrees) {
      auto& md = C.multidegrees[static_cast<size_t>(i)];
      if (i <= B.length())
        md.insert(md.end(), B.multidegrees[static_cast<size_t>(i)].begin(),
                  B.multidegrees[static_cast<size_t>(i)].end());
      if (i - 1 >= 0 && i - 1 <= A.length())
        md.insert(md.end(), A.multidegrees[static_cast<size_t>(i - 1)].begin(),
                  A.multidegrees[static_cast<size_t>(i - 1)].end());
    }
  }
  C.diff.resize(static_cast<size_t>(len) + 1);
  for (int i = 1; i <= len; ++i) {
    PolyMat d(C.rank(i - 1), C.rank(i), C.n_vars);
    int b_rows = (i - 1 <= B.length()) ? B.rank(i - 1) : 0;
    int b_cols = (i <= B.length()) ? B.rank(i) : 0;
    if (i <= B.length())
      for (const auto& [cr, p] : B.diff[static_cast<size_t>(i)].entries())
        d.set(cr.second, cr.first, p);
    if (i - 1 >= 1 && i - 1 <= A.length()) {
      for (const auto& [cr, p] : psi.mats[static_cast<size_t>(i - 1)].entries())
        d.set(cr.second, b_cols + cr.first, p);
      for (const auto& [cr, p] : A.diff[static_cast<size_t>(i - 1)].entries())
        d.set(b_rows + cr.second, b_cols + cr.first, -p);
    } else if (i - 1 == 0) {
      for (const auto& [cr, p] : psi.mats[0].entries()) d.set(cr.second, b_cols + cr.first, p);
    }
    C.diff[static_cast<size_t>(i)] = std::move(d);
  }
  return C;
}

FreeComplex canonicalize(const FreeComplex& F) {
  FreeComplex out = F;
  std::vector<std::vector<int>> perm(F.bases.size());  // new position -> old position
  for (size_t i = 0; i < F.bases.size(); ++i) {
    std::vector<int> idx(F.bases[i].size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return F.bases[i][static_cast<size_t>(a)] < F.bases[i][static_cast<size_t>(b)];
    });
    perm[i] = idx;
    for (size_t k = 0; k < idx.size(); ++k) {
      out.bases[i][k] = F.bases[i][static_cast<size_t>(idx[k])];
      if (F.has_multidegrees) out.multidegrees[i][k] = F.multidegrees[i][static_cast<size_t>(idx[k])];
    }
  }
  for (int i = 1; i <= F.length(); ++i) {
    std::vector<int> row_inv(F.bases[static_cast<size_t>(i - 1)].size());
    std::vector<int> col_inv(F.bases[static_cast<size_t>(i)].size());
    for (size_t k = 0; k < row_inv.size(); ++k)
      row_inv[static_cast<size_t>(perm[static_cast<size_t>(i - 1)][k])] = static_cast<int>(k);
    for (size_t k = 0; k < col_inv.size(); ++k)
      col_inv[static_cast<size_t>(perm[static_cast<size_t>(i)][k])] = static_cast<int>(k);
    PolyMat d(F.rank(i - 1), F.rank(i), F.n_vars);
    for (const auto& [cr, p] : F.diff[static_cast<size_t>(i)].entries())
      d.set(row_inv[static_cast<size_t>(cr.second)], col_inv[static_cast<size_t>(cr.first)], p);
    out.diff[static_cast<size_t>(i)] = std::move(d);
  }
  return out;
}

FreeComplex shift_multidegrees(FreeComplex F, const Monomial& m) {
  if (!F.has_multidegrees) return F;
  for (auto& level : F.multidegrees)
    for (auto& md : level) md = md * m;
  return F;
}

long BettiTable::total(int i) const {
  long t = 0;
  for (const auto& [key, v] : entries)
    if (key.first == i) t += v;
  return t;
}

int BettiTable::max_homological() const {
  int d = 0;
  for (const auto& [key, v] : entries) d = std::max(d, key.first);
  return d;
}

std::string BettiTable::str() const {
  std::string s;
  for (const auto& [key, v] : entries) {
    s += "beta(" + std::to_string(key.first) + "," + std::to_string(key.second) +
         ") = " + std::to_string(v) + "\n";
  }
  return s;
}

}  // namespace mapcone
