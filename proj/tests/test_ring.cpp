#include <doctest.h>

#include <random>

#include "mapcone/polynomial.hpp"

using namespace mapcone;

namespace {

Monomial random_monomial(std::mt19937_64& rng, int n_vars, int max_exp) {
  std::vector<int> e(static_cast<size_t>(n_vars));
  for (auto& a : e) a = static_cast<int>(rng() % (max_exp + 1));
  return Monomial(std::move(e));
}

Polynomial random_poly(std::mt19937_64& rng, int n_vars) {
  Polynomial p(n_vars);
  int terms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    long num = static_cast<long>(rng() % 11) - 5;
    long den = 1 + static_cast<long>(rng() % 4);
    mpq_class c(num, den);
    c.canonicalize();
    p.add_term(random_monomial(rng, n_vars, 2), c);
  }
  return p;
}

}  // namespace

TEST_CASE("lcm and gcd on exponent vectors") {
  Monomial u{2, 1, 0};  // x1^2 x2
  Monomial v{1, 0, 1};  // x1 x3
  CHECK(lcm(u, v) == Monomial{2, 1, 1});
  CHECK(gcd(u, v) == Monomial{1, 0, 0});
  Monomial one = Monomial::one(3);
  CHECK(lcm(u, one) == u);
  CHECK(lcm(u, u) == u);
  CHECK(gcd(u, one) == one);
  CHECK_THROWS_AS(lcm(u, Monomial{1, 1}), Error);
}

TEST_CASE("divide_exact") {
  CHECK(divide_exact(Monomial{1, 1, 1}, Monomial{1, 1, 0}) == Monomial{0, 0, 1});
  Monomial u{2, 1};
  CHECK(divide_exact(u, Monomial::one(2)) == u);
  CHECK(divide_exact(u, u) == Monomial::one(2));
  CHECK_THROWS_AS(divide_exact(Monomial{1, 0}, Monomial{0, 1}), Error);
}

TEST_CASE("degrevlex order") {
  // difference (1,-1,0): rightmost nonzero entry negative, so x1x3 > x2x3
  CHECK(degrevlex_greater(Monomial{1, 0, 1}, Monomial{0, 1, 1}));
  CHECK_FALSE(degrevlex_greater(Monomial{1, 0, 1}, Monomial{1, 0, 1}));
  CHECK(degrevlex_greater(Monomial{1, 1, 0}, Monomial{0, 0, 1}));  // degree wins
  CHECK(degrevlex_greater(Monomial{2, 0}, Monomial{1, 1}));
}

TEST_CASE("degrevlex is a strict total order on random triples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Monomial a = random_monomial(rng, 4, 3);
    Monomial b = random_monomial(rng, 4, 3);
    Monomial c = random_monomial(rng, 4, 3);
    int rel = (a == b ? 1 : 0) + (degrevlex_greater(a, b) ? 1 : 0) +
              (degrevlex_greater(b, a) ? 1 : 0);
    CHECK(rel == 1);  // trichotomy
    if (degrevlex_greater(a, b) && degrevlex_greater(b, c)) CHECK(degrevlex_greater(a, c));
  }
}

TEST_CASE("lcm dominates both arguments") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    Monomial u = random_monomial(rng, 5, 3);
    Monomial v = random_monomial(rng, 5, 3);
    CHECK(divides(u, lcm(u, v)));
    CHECK_NOTHROW(divide_exact(lcm(u, v), u));
    CHECK(lcm(u, v) * gcd(u, v) == u * v);
  }
}

TEST_CASE("polynomial arithmetic is exact and prunes zeros") {
  // the d^2 cancellation for f({2}; x1x3) in I = (x1x2, x1x3, x2x3)
  Polynomial p =
      Polynomial::term(Monomial{0, 1, 0}, -1) * Polynomial::from_monomial(Monomial{1, 0, 1});
  Polynomial q =
      Polynomial::term(Monomial{0, 0, 1}, 1) * Polynomial::from_monomial(Monomial{1, 1, 0});
  CHECK((p + q).is_zero());

  std::mt19937_64 rng(13);
  Polynomial r = random_poly(rng, 3);
  CHECK(r + Polynomial::zero(3) == r);
  CHECK((r - r).is_zero());
}

TEST_CASE("polynomial ring laws on random triples") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial a = random_poly(rng, 3);
    Polynomial b = random_poly(rng, 3);
    Polynomial c = random_poly(rng, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("exact multivariate division") {
  Polynomial x = Polynomial::from_monomial(Monomial{1, 0});
  Polynomial y = Polynomial::from_monomial(Monomial{0, 1});
  Polynomial p = (x + y) * (x - y);
  auto q = try_divide(p, x - y);
  REQUIRE(q.has_value());
  CHECK(*q == x + y);
  CHECK_FALSE(try_divide(x * x + y, x).has_value());

  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial a = random_poly(rng, 2);
    Polynomial b = random_poly(rng, 2);
    if (b.is_zero()) continue;
    auto d = try_divide(a * b, b);
    REQUIRE(d.has_value());
    CHECK(*d == a);
  }
}

TEST_CASE("monomial accessors") {
  Monomial u{1, 0, 2, 0};
  CHECK(u.degree() == 3);
  CHECK(u.support() == std::vector<int>{1, 3});
  CHECK(u.max_var() == 3);
  CHECK(u.exponent(3) == 2);
  CHECK(u.str() == "x1*x3^2");
  CHECK(Monomial::one(2).str() == "1");
  CHECK(Monomial::one(2).max_var() == 0);
}
