#ifndef MAPCONE_COMPLEX_HPP
#define MAPCONE_COMPLEX_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mapcone/linalg.hpp"

namespace mapcone {

// f(sigma; u_j) when generator >= 1 (1-based index into the generator
// sequence), or a bare e_sigma label when generator == 0.
struct BasisSymbol {
  std::vector<int> sigma;  // sorted 1-based indices
  int generator = 0;

  friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
  friend auto operator<=>(const BasisSymbol& a, const BasisSymbol& b) {
    if (auto c = a.sigma.size() <=> b.sigma.size(); c != 0) return c;
    if (auto c = a.sigma <=> b.sigma; c != 0) return c;
    return a.generator <=> b.generator;
  }
  std::string str() const;
};

// Complex of labeled free modules F_len -> ... -> F_1 -> F_0 with sparse
// polynomial differentials.  diff[i] maps F_i to F_{i-1}; diff[1] is the
// augmentation row when F_0 = R.  Multidegrees are stored when the complex
// is built from monomial data.
struct FreeComplex {
  int n_vars = 0;
  std::vector<std::vector<BasisSymbol>> bases;
  std::vector<PolyMat> diff;  // diff[0] unused
  bool has_multidegrees = false;
  std::vector<std::vector<Monomial>> multidegrees;

  int length() const { return static_cast<int>(bases.size()) - 1; }
  int rank(int i) const {
    return (i < 0 || i > length()) ? 0 : static_cast<int>(bases[static_cast<size_t>(i)].size());
  }
  std::vector<int> ranks() const;

  friend bool operator==(const FreeComplex&, const FreeComplex&) = default;
};

// Degree-zero chain map; commutation with the differentials is checked at
// construction (throws NonCommuting).
struct ComplexMap {
  FreeComplex source, target;
  std::vector<PolyMat> mats;  // mats[i]: source_i -> target_i

  static ComplexMap checked(FreeComplex source, FreeComplex target, std::vector<PolyMat> mats);
};

// C(psi)_i = target_i (+) source_{i-1}, d(b, a) = (psi(a) + d(b), -d(a)).
FreeComplex mapping_cone(const ComplexMap& psi);

// Sorts every homological degree by (|sigma|, sigma, generator) and
// permutes the differentials accordingly.
FreeComplex canonicalize(const FreeComplex& F);

// Multiplies every stored multidegree by m.  Used when a complex enters a
// mapping cone as the resolution of a shifted module.
FreeComplex shift_multidegrees(FreeComplex F, const Monomial& m);

struct BettiTable {
  // (homological degree, total degree) -> rank
  std::map<std::pair<int, int>, long> entries;

  long total(int i) const;
  int max_homological() const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
  std::string str() const;
};

}  // namespace mapcone

#endif
