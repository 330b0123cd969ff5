#ifndef MAPCONE_LINALG_HPP
#define MAPCONE_LINALG_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "mapcone/polynomial.hpp"

namespace mapcone {

// Exact rank of a dense rational matrix: rows are scaled to integers, then
// fraction-free (Bareiss) elimination over mpz.
int rank_exact(std::vector<std::vector<mpq_class>> a);

// Rank over the prime field F_p, p = 2^31 - 1.  Always a lower bound for
// the rank over Q; equality is generic.  Entries are given mod p.
inline constexpr int64_t kRankPrime = 2147483647;
int rank_mod_p(std::vector<std::vector<int64_t>> a);
int64_t mod_p(const mpq_class& x);

// Sparse matrix with polynomial entries, stored column-major.
class PolyMat {
public:
  PolyMat() = default;
  PolyMat(int rows, int cols, int n_vars) : rows_(rows), cols_(cols), nv_(n_vars) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int n_vars() const { return nv_; }

  void set(int r, int c, const Polynomial& p);
  void add(int r, int c, const Polynomial& p);
  Polynomial get(int r, int c) const;
  bool is_zero() const { return entries_.empty(); }
  // (col, row) -> entry, in column-major order.
  const std::map<std::pair<int, int>, Polynomial>& entries() const { return entries_; }

  static PolyMat identity(int n, int n_vars);
  static PolyMat scalar(int n, const Polynomial& p);

  friend PolyMat operator*(const PolyMat& a, const PolyMat& b);
  friend bool operator==(const PolyMat& a, const PolyMat& b);

private:
  int rows_ = 0, cols_ = 0, nv_ = 0;
  std::map<std::pair<int, int>, Polynomial> entries_;
};

// Determinant of a square polynomial matrix by Bareiss elimination
// (divisions are exact in the polynomial ring).
Polynomial det(const PolyMat& a);

// Rank over the fraction field of the polynomial ring, by fraction-free
// elimination.
int rank_poly(const PolyMat& a);

}  // namespace mapcone

#endif
