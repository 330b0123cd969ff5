#include "mapcone/linalg.hpp"

#include <algorithm>

namespace mapcone {

int rank_exact(std::vector<std::vector<mpq_class>> a) {
  if (a.empty() || a[0].empty()) return 0;
  size_t rows = a.size(), cols = a[0].size();
  // Clear denominators rowwise.
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a[i][j].get_den().get_mpz_t());
    for (size_t j = 0; j < cols; ++j) {
      mpq_class v = a[i][j] * l;
      m[i][j] = v.get_num();
    }
  }
  // Bareiss fraction-free elimination with full pivot search by position.
  mpz_class prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

int64_t mod_p(const mpq_class& x) {
  mpz_class num = x.get_num() % kRankPrime;
  mpz_class den = x.get_den() % kRankPrime;
  int64_t n = num.get_si();
  int64_t d = den.get_si();
  if (n < 0) n += kRankPrime;
  if (d == 0) throw Error::internal("BadReduction", "denominator divisible by the rank prime");
  // Fermat inverse.
  int64_t inv = 1, base = d, e = kRankPrime - 2;
  while (e > 0) {
    if (e & 1) inv = static_cast<int64_t>((__int128)inv * base % kRankPrime);
    base = static_cast<int64_t>((__int128)base * base % kRankPrime);
    e >>= 1;
  }
  return static_cast<int64_t>((__int128)n * inv % kRankPrime);
}

int rank_mod_p(std::vector<std::vector<int64_t>> a) {
  if (a.empty() || a[0].empty()) return 0;
  const int64_t p = kRankPrime;
  size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    // Normalize pivot row.
    int64_t inv = 1, base = ((a[r][c] % p) + p) % p, e = p - 2;
    while (e > 0) {
      if (e & 1) inv = static_cast<int64_t>((__int128)inv * base % p);
      base = static_cast<int64_t>((__int128)base * base % p);
      e >>= 1;
    }
    for (size_t j = c; j < cols; ++j) a[r][j] = static_cast<int64_t>((__int128)(((a[r][j] % p) + p) % p) * inv % p);
    for (size_t i = r + 1; i < rows; ++i) {
      int64_t f = ((a[i][c] % p) + p) % p;
      if (f == 0) continue;
      for (size_t j = c; j < cols; ++j) {
        a[i][j] = static_cast<int64_t>(((a[i][j] - (__int128)f * a[r][j]) % p + p) % p);
      }
    }
    ++r;
  }
  return static_cast<int>(r);
}

void PolyMat::set(int r, int c, const Polynomial& p) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw Error::internal("IndexOutOfRange", "matrix entry out of range");
  if (p.is_zero())
    entries_.erase({c, r});
  else
    entries_[{c, r}] = p;
}

void PolyMat::add(int r, int c, const Polynomial& p) {
  if (p.is_zero()) return;
  Polynomial q = get(r, c);
  q += p;
  set(r, c, q);
}

Polynomial PolyMat::get(int r, int c) const {
  auto it = entries_.find({c, r});
  return it == entries_.end() ? Polynomial::zero(nv_) : it->second;
}

PolyMat PolyMat::identity(int n, int n_vars) {
  return scalar(n, Polynomial::constant(n_vars, 1));
}

PolyMat PolyMat::scalar(int n, const Polynomial& p) {
  PolyMat m(n, n, p.n_vars());
  for (int i = 0; i < n; ++i) m.set(i, i, p);
  return m;
}

PolyMat operator*(const PolyMat& a, const PolyMat& b) {
  if (a.cols() != b.rows())
    throw Error::internal("DimensionMismatch", "matrix product shape mismatch");
  PolyMat out(a.rows(), b.cols(), a.nv_ ? a.nv_ : b.nv_);
  // (col-major) for each column c of b, combine columns of a.
  for (const auto& [cb_rb, p] : b.entries_) {
    auto [cb, rb] = cb_rb;
    // a's column rb contributes p * a(:,rb) to out(:,cb).
    auto it = a.entries_.lower_bound({rb, 0});
    for (; it != a.entries_.end() && it->first.first == rb; ++it) {
      out.add(it->first.second, cb, it->second * p);
    }
  }
  return out;
}

bool operator==(const PolyMat& a, const PolyMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

namespace {

std::vector<std::vector<Polynomial>> densify(const PolyMat& a) {
  std::vector<std::vector<Polynomial>> m(
      static_cast<size_t>(a.rows()),
      std::vector<Polynomial>(static_cast<size_t>(a.cols()), Polynomial::zero(a.n_vars())));
  for (const auto& [cr, p] : a.entries()) m[static_cast<size_t>(cr.second)][static_cast<size_t>(cr.first)] = p;
  return m;
}

// Fraction-free elimination over the polynomial ring; returns the pivots'
// count and, when square and fully eliminated, the determinant.
int bareiss(std::vector<std::vector<Polynomial>>& m, int n_vars, Polynomial* det_out, int* sign_out) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  Polynomial prev = Polynomial::constant(n_vars, 1);
  int sign = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      sign = -sign;
    }
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        Polynomial t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        auto q = try_divide(t, prev);
        if (!q)
          throw Error::internal("BareissDivision", "exact division failed in elimination");
        m[i][j] = *q;
      }
      m[i][c] = Polynomial::zero(n_vars);
    }
    prev = m[r][c];
    ++r;
  }
  if (det_out) *det_out = prev;
  if (sign_out) *sign_out = sign;
  return static_cast<int>(r);
}

}  // namespace

Polynomial det(const PolyMat& a) {
  if (a.rows() != a.cols())
    throw Error::internal("DimensionMismatch", "determinant of a non-square matrix");
  if (a.rows() == 0) return Polynomial::constant(a.n_vars(), 1);
  auto m = densify(a);
  Polynomial d;
  int sign = 1;
  int r = bareiss(m, a.n_vars(), &d, &sign);
  if (r < a.rows()) return Polynomial::zero(a.n_vars());
  return sign == 1 ? d : -d;
}

int rank_poly(const PolyMat& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  auto m = densify(a);
  return bareiss(m, a.n_vars(), nullptr, nullptr);
}

}  // namespace mapcone
