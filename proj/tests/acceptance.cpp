// Acceptance suite: one criterion per section, a PASS/FAIL line each, all
// with exact (tolerance-zero) arithmetic.  Exit status is the number of
// failed criteria.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "mapcone/dg.hpp"
#include "mapcone/io.hpp"

using namespace mapcone;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail << "\n";
  if (!ok) ++failures;
}

OrderedIdeal ideal_of(std::initializer_list<Monomial> gens, int n_vars) {
  OrderedIdeal I;
  I.n_vars = n_vars;
  I.gens = gens;
  return I;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// (a) I=(x2x4,x1x2,x1x3): lq, sets [{},{4},{2}], not regular with witness
//     set(g(x2 x1x3)) = {4}.
// (b) I=(x1x3,x2x3,x1x5,x3x4,x4x5): exchange identity on the default
//     sample, not regular, set(x4x5)={1,3}, set(g(x3 x4x5))={1,2}.
// (c) I=(x1x2,x2x3x4,x1x3): lq in the given order despite degrees 2,3,2.
void criterion1() {
  bool ok = true;
  std::ostringstream why;

  OrderedIdeal a = ideal_of({Monomial{0, 1, 0, 1}, Monomial{1, 1, 0, 0}, Monomial{1, 0, 1, 0}}, 4);
  LqResult lqa = linear_quotients_check(a);
  ok &= lqa.ok;
  ok &= lqa.sets == std::vector<std::vector<int>>{{}, {4}, {2}};
  OrderedIdeal aw = with_sets(a);
  RegularityReport ra = is_regular(aw);
  ok &= !ra.regular && ra.witness_u == Monomial{1, 0, 1, 0} && ra.witness_s == 2 &&
        ra.witness_set == std::vector<int>{4};
  if (!ok) why << " [a failed]";

  OrderedIdeal b =
      ideal_of({Monomial{1, 0, 1, 0, 0}, Monomial{0, 1, 1, 0, 0}, Monomial{1, 0, 0, 0, 1},
                Monomial{0, 0, 1, 1, 0}, Monomial{0, 0, 0, 1, 1}},
               5);
  OrderedIdeal bw = with_sets(b);
  bool okb = exchange_identity_check(bw).holds;
  okb &= bw.set_of(5) == std::vector<int>{1, 3};
  RegularityReport rb = is_regular(bw);
  okb &= !rb.regular && rb.witness_u == Monomial{0, 0, 0, 1, 1} && rb.witness_s == 3 &&
         rb.witness_set == std::vector<int>{1, 2};
  if (!okb) why << " [b failed]";
  ok &= okb;

  OrderedIdeal c = ideal_of({Monomial{1, 1, 0, 0}, Monomial{0, 1, 1, 1}, Monomial{1, 0, 1, 0}}, 4);
  bool okc = linear_quotients_check(c).ok;
  try {
    lq_resolution(c);
    okc = false;  // must refuse: degrees 2,3,2
  } catch (const Error& e) {
    okc &= e.kind() == "DegreeOrderViolation";
  }
  if (!okc) why << " [c failed]";
  ok &= okc;

  report(1, ok, "paper counterexample fixtures (exact)" + why.str());
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  corpus::Corpus corpus = corpus::build_corpus(20240711);
  std::vector<const OrderedIdeal*> all = corpus.all();
  std::cout << "corpus: " << corpus.stable.size() << " stable + " << corpus.sqfree_stable.size()
            << " squarefree stable + " << corpus.matroids.size() << " matroids (<=5) + "
            << corpus.matroids6.size() << " transversal matroids on [6] = " << corpus.size()
            << " ideals (" << seconds_since(t0) << " s)\n";

  criterion1();

  // Criterion 2: lq_resolution passes verify_complex on the whole corpus.
  {
    auto t = std::chrono::steady_clock::now();
    bool ok = all.size() >= 200;
    std::string why = ok ? "" : " [corpus too small]";
    size_t checked = 0;
    for (const OrderedIdeal* I : all) {
      FreeComplex F;
      try {
        F = lq_resolution(*I);
      } catch (const Error& e) {
        ok = false;
        why = " [lq_resolution refused " + print_ideal(*I) + ": " + e.what() + "]";
        break;
      }
      VerifyReport v = verify_complex(F);
      if (!(v.dsq_zero && v.minimal && v.multigraded && v.exact)) {
        ok = false;
        why = " [verify failed on " + print_ideal(*I) + ": " + v.failure + "]";
        break;
      }
      ++checked;
    }
    std::ostringstream d;
    d << "Theorem-main executable content: d^2=0, minimal, box-exact on " << checked << "/"
      << all.size() << " ideals (" << seconds_since(t) << " s)" << why;
    report(2, ok, d.str());
  }

  // Criterion 3: betti_from_sets == betti_oracle entrywise; spot value.
  {
    auto t = std::chrono::steady_clock::now();
    bool ok = true;
    std::string why;
    for (const OrderedIdeal* I : all) {
      OrderedIdeal w = with_sets(*I);
      if (!(betti_from_sets(w) == betti_oracle(w))) {
        ok = false;
        why = " [mismatch on " + print_ideal(*I) + "]";
        break;
      }
    }
    std::vector<Monomial> sq;
    for (int i = 1; i <= 3; ++i)
      for (int j = i; j <= 3; ++j)
        sq.push_back(Monomial::variable(3, i) * Monomial::variable(3, j));
    corpus::ek_order(sq);
    OrderedIdeal msq;
    msq.n_vars = 3;
    msq.gens = sq;
    OrderedIdeal msqw = with_sets(msq);
    BettiTable formula = betti_from_sets(msqw);
    BettiTable oracle = betti_oracle(msqw);
    bool spot = formula.total(0) == 1 && formula.total(1) == 6 && formula.total(2) == 8 &&
                formula.total(3) == 3 && formula == oracle;
    if (!spot) why += " [(x1,x2,x3)^2 spot value failed]";
    ok &= spot;
    std::ostringstream d;
    d << "Corollary-betti formula equals the Taylor-fiber oracle on the corpus, spot "
         "(x1,x2,x3)^2 = 1,6,8,3 ("
      << seconds_since(t) << " s)" << why;
    report(3, ok, d.str());
  }

  // Criterion 4: every matroidal corpus ideal has a regular decomposition
  // function (descending degrevlex order).
  {
    bool ok = true;
    std::string why;
    size_t n = 0;
    for (const auto* group : {&corpus.matroids, &corpus.matroids6}) {
      for (const OrderedIdeal& I : *group) {
        OrderedIdeal w = with_sets(I);
        if (!is_regular(w).regular) {
          ok = false;
          why = " [not regular: " + print_ideal(I) + "]";
          break;
        }
        ++n;
      }
      if (!ok) break;
    }
    report(4, ok,
           "Theorem-matroid property: is_regular on " + std::to_string(n) + " matroidal ideals" +
               why);
  }

  // Criterion 5: equigenerated + exchange property => linear quotients
  // under descending degrevlex.
  {
    bool ok = true;
    std::string why;
    size_t n = 0;
    for (const OrderedIdeal* I : all) {
      ClassReport rep = classify(*I);
      if (!(rep.equigenerated && rep.exchange_property)) continue;
      OrderedIdeal sorted = *I;
      std::sort(sorted.gens.begin(), sorted.gens.end(), degrevlex_greater);
      if (!linear_quotients_check(sorted).ok) {
        ok = false;
        why = " [fails: " + print_ideal(sorted) + "]";
        break;
      }
      ++n;
    }
    report(5, ok,
           "Lemma-moregeneral property: " + std::to_string(n) +
               " equigenerated exchange ideals pass the linear-quotient check" + why);
  }

  // Criterion 6: iterated mapping cones reproduce lq_resolution exactly.
  {
    auto t = std::chrono::steady_clock::now();
    bool ok = true;
    std::string why;
    std::vector<const OrderedIdeal*> picks;
    size_t stride = std::max<size_t>(1, all.size() / 40);
    for (size_t i = 0; i < all.size() && picks.size() < 20; i += stride)
      if (all[i]->size() >= 2) picks.push_back(all[i]);
    for (const OrderedIdeal* I : picks) {
      FreeComplex direct = lq_resolution(*I);
      FreeComplex cone = iterated_cone_resolution(*I);
      if (!(direct == cone)) {
        ok = false;
        why = " [differs on " + print_ideal(*I) + "]";
        break;
      }
    }
    std::ostringstream d;
    d << "iterated comparison-map cones equal the explicit resolution on " << picks.size()
      << " ideals, labels and matrices (" << seconds_since(t) << " s)" << why;
    report(6, ok && picks.size() == 20, d.str());
  }

  // Criterion 7: taylor_dg passes dg_check and taylor_via_star is a DG
  // isomorphism on >= 100 monomial sequences (m <= 4, exponents <= 2,
  // 3 variables).
  {
    auto t = std::chrono::steady_clock::now();
    bool ok = true;
    std::string why;
    std::vector<Monomial> pool;
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c)
          if (a + b + c > 0) pool.push_back(Monomial{a, b, c});
    std::mt19937_64 rng(4242);
    std::vector<std::vector<Monomial>> instances;
    for (size_t i = 0; i < pool.size(); i += 3)
      for (size_t j = i + 1; j < pool.size(); j += 4) instances.push_back({pool[i], pool[j]});
    while (instances.size() < 150) {
      size_t m = 3 + rng() % 2;
      std::vector<Monomial> seq;
      for (size_t k = 0; k < m; ++k) seq.push_back(pool[rng() % pool.size()]);
      instances.push_back(std::move(seq));
    }
    size_t n_star = 0;
    for (const auto& seq : instances) {
      DgCheckReport rep = dg_check(taylor_dg(seq));
      if (!rep.ok()) {
        ok = false;
        why = " [dg_check: " + rep.first_violation + "]";
        break;
      }
      if (seq.size() >= 2) {
        TaylorStarResult star = taylor_via_star(seq);
        if (!star.iso_ok() || !dg_check(star.star).ok()) {
          ok = false;
          why = " [star iso failed]";
          break;
        }
        ++n_star;
      }
    }
    std::ostringstream d;
    d << "DG layer: dg_check on " << instances.size() << " Taylor algebras, star isomorphism on "
      << n_star << " (" << seconds_since(t) << " s)" << why;
    report(7, ok && instances.size() >= 100, d.str());
  }

  // Criterion 8: the two almost-complete-intersection instances.
  {
    bool ok = true;
    std::string why;
    try {
      AciInput in1;
      in1.f_seq = {Polynomial::from_monomial(Monomial{2, 0}),
                   Polynomial::from_monomial(Monomial{0, 2})};
      in1.g_seq = {Polynomial::from_monomial(Monomial{1, 0}),
                   Polynomial::from_monomial(Monomial{0, 1})};
      in1.a_matrix = {{Polynomial::from_monomial(Monomial{1, 0}), Polynomial::zero(2)},
                      {Polynomial::zero(2), Polynomial::from_monomial(Monomial{0, 1})}};
      AciResult r1 = aci_resolution(in1);
      ok &= r1.delta == Polynomial::from_monomial(Monomial{1, 1});
      VerifyReport v1 = verify_complex(r1.algebra.cx);
      ok &= v1.dsq_zero && v1.multigraded && v1.exact;
      BettiTable b1 = betti_from_complex(r1.algebra.cx);
      ok &= b1.total(0) == 1 && b1.total(1) == 3 && b1.total(2) == 2 && b1.total(3) == 0;
      ok &= koszul_type_check(r1.algebra, 3, 7).ok();
      ok &= dg_check(r1.algebra).ok();
      if (!ok) why = " [first instance failed]";

      AciInput in2;
      in2.f_seq = {Polynomial::from_monomial(Monomial{3, 0}),
                   Polynomial::from_monomial(Monomial{0, 2})};
      in2.g_seq = {Polynomial::from_monomial(Monomial{1, 0}),
                   Polynomial::from_monomial(Monomial{0, 2})};
      in2.a_matrix = {{Polynomial::from_monomial(Monomial{2, 0}), Polynomial::zero(2)},
                      {Polynomial::zero(2), Polynomial::constant(2, 1)}};
      AciResult r2 = aci_resolution(in2);
      bool ok2 = r2.delta == Polynomial::from_monomial(Monomial{2, 0});
      VerifyReport v2 = verify_complex(r2.algebra.cx);
      ok2 &= v2.dsq_zero && v2.multigraded && v2.exact;
      // resolves (x^3, y^2, x^2) = (x^2, y^2): Betti 1,2,1
      BettiTable b2 = betti_from_complex(r2.algebra.cx);
      ok2 &= b2.total(0) == 1 && b2.total(1) == 2 && b2.total(2) == 1;
      ok2 &= koszul_type_check(r2.algebra, 3, 7).ok();
      if (!ok2) why += " [second instance failed]";
      ok &= ok2;
    } catch (const Error& e) {
      ok = false;
      why = std::string(" [") + e.what() + "]";
    }
    report(8, ok,
           "Example-almost: Koszul(f) * Koszul(g) resolves the almost complete intersection, "
           "composite identities and Koszul-type checks hold" +
               why);
  }

  // Criterion 9: Koszul sequences (regular, monomial, linked ACI).
  {
    bool ok = true;
    std::string why;
    try {
      std::vector<Polynomial> xyz = {Polynomial::from_monomial(Monomial{1, 0, 0}),
                                     Polynomial::from_monomial(Monomial{0, 1, 0}),
                                     Polynomial::from_monomial(Monomial{0, 0, 1})};
      ok &= koszul_sequence_check(xyz, KoszulSeqMode::regular, std::nullopt, 7).ok;
      if (!ok) why = " [regular (x,y,z) failed]";

      std::vector<Polynomial> mono = {Polynomial::from_monomial(Monomial{2, 0}),
                                      Polynomial::from_monomial(Monomial{1, 1}),
                                      Polynomial::from_monomial(Monomial{0, 3})};
      bool okm = koszul_sequence_check(mono, KoszulSeqMode::monomial, std::nullopt, 7).ok;
      if (!okm) why += " [monomial (x^2,xy,y^3) failed]";
      ok &= okm;

      AciInput in;
      in.f_seq = {Polynomial::from_monomial(Monomial{2, 0}),
                  Polynomial::from_monomial(Monomial{0, 2})};
      in.g_seq = {Polynomial::from_monomial(Monomial{1, 0}),
                  Polynomial::from_monomial(Monomial{0, 1})};
      in.a_matrix = {{Polynomial::from_monomial(Monomial{1, 0}), Polynomial::zero(2)},
                     {Polynomial::zero(2), Polynomial::from_monomial(Monomial{0, 1})}};
      bool oka = koszul_sequence_check(in.f_seq, KoszulSeqMode::aci, in, 7).ok;
      if (!oka) why += " [ACI (x^2,y^2,xy) failed]";
      ok &= oka;
    } catch (const Error& e) {
      ok = false;
      why = std::string(" [") + e.what() + "]";
    }
    report(9, ok,
           "Koszul sequences: regular (x,y,z), monomial (x^2,xy,y^3), ACI (x^2,y^2,xy)" + why);
  }

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
            << " (total " << seconds_since(t0) << " s)\n";
  return failures;
}
