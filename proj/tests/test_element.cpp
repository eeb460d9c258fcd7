#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cstar/element.hpp"
#include "cstar/errors.hpp"

using namespace cstar;

namespace {

CuntzElement s(int n, int k) { return CuntzElement::generator(n, k); }

// Deterministic random elements for the property checks: up to two terms,
// words of length <= 2, coefficients from a small pool.
CuntzElement random_element(std::mt19937_64 &rng, int n) {
  auto pick = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  const ExactScalar pool[6] = {ExactScalar(1),
                               ExactScalar(-1),
                               ExactScalar::rational(1, 2),
                               ExactScalar::rational(-1, 2),
                               ExactScalar::rational(1, 2) * ExactScalar::i(),
                               ExactScalar(0)};
  CuntzElement x = CuntzElement::zero(n);
  const long terms = pick(1, 2);
  for (long t = 0; t < terms; ++t) {
    Word mu(static_cast<std::size_t>(pick(0, 2)));
    Word nu(static_cast<std::size_t>(pick(0, 2)));
    for (int &l : mu)
      l = static_cast<int>(pick(1, n));
    for (int &l : nu)
      l = static_cast<int>(pick(1, n));
    x = x + CuntzElement::monomial(n, mu, nu, pool[pick(0, 5)]);
  }
  return x;
}

} // namespace

TEST_CASE("monomial multiplication follows the word collapse rule") {
  const int n = 3;
  // (s1 s2*)(s2 s3*) = s1 s3*
  CHECK(equals(CuntzElement::matrix_unit(n, 1, 2) * CuntzElement::matrix_unit(n, 2, 3),
               CuntzElement::matrix_unit(n, 1, 3)));
  // s1* s2 = 0
  CHECK(equals(s(n, 1).adjoint() * s(n, 2), CuntzElement::zero(n)));
  // s1* s1 = 1
  CHECK(equals(s(n, 1).adjoint() * s(n, 1), CuntzElement::unit(n)));
}

TEST_CASE("mixed alphabets are rejected") {
  CHECK_THROWS_AS(s(2, 1) * s(3, 1), AlphabetMismatch);
  CHECK_THROWS_AS(s(2, 1) + s(3, 1), AlphabetMismatch);
  CHECK_THROWS_AS(equals(s(2, 1), s(3, 1)), AlphabetMismatch);
}

TEST_CASE("adjoint swaps words and conjugates coefficients") {
  const int n = 2;
  CHECK(equals(CuntzElement::matrix_unit(n, 1, 2).adjoint(),
               CuntzElement::matrix_unit(n, 2, 1)));
  CHECK(equals(CuntzElement::unit(n).adjoint(), CuntzElement::unit(n)));
  // (i s1)* = -i s1*
  const CuntzElement lhs = (ExactScalar::i() * s(n, 1)).adjoint();
  const CuntzElement rhs = (-ExactScalar::i()) * s(n, 1).adjoint();
  CHECK(equals(lhs, rhs));
}

TEST_CASE("sum of range projections is the unit") {
  for (int n = 2; n <= 5; ++n) {
    CuntzElement total = CuntzElement::zero(n);
    for (int k = 1; k <= n; ++k)
      total = total + CuntzElement::matrix_unit(n, k, k);
    CHECK(equals(total, CuntzElement::unit(n)));
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        const CuntzElement prod = s(n, a).adjoint() * s(n, b);
        if (a == b)
          CHECK(equals(prod, CuntzElement::unit(n)));
        else
          CHECK(equals(prod, CuntzElement::zero(n)));
      }
  }
}

TEST_CASE("normalization cancels and expands as expected") {
  const int n = 2;
  const CuntzElement e11 = CuntzElement::matrix_unit(n, 1, 1);
  CHECK((e11 - e11).normalized().is_syntactic_zero());

  // A degree-0 class holding both the unit and a level-1 term expands the
  // unit to level 1.
  const CuntzElement mixed = CuntzElement::unit(n) + e11;
  const CuntzElement nf = mixed.normalized();
  for (const auto &[m, c] : nf.terms()) {
    CHECK(m.mu.size() == 1);
    CHECK(m.nu.size() == 1);
  }
  CHECK(equals(nf, mixed));
}

TEST_CASE("normalize is idempotent") {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 3; ++n)
    for (int trial = 0; trial < 50; ++trial) {
      const CuntzElement x = random_element(rng, n);
      const CuntzElement nf = x.normalized();
      CHECK(nf.terms() == nf.normalized().terms());
    }
}

TEST_CASE("equality is a congruence for the defining relation") {
  const int n = 2;
  CuntzElement sum = CuntzElement::zero(n);
  for (int k = 1; k <= n; ++k)
    sum = sum + CuntzElement::matrix_unit(n, k, k);
  CHECK(equals(sum, CuntzElement::unit(n)));
  CHECK_FALSE(equals(s(n, 1), s(n, 2)));
  CHECK(equals(CuntzElement::matrix_unit(n, 1, 2) * CuntzElement::matrix_unit(n, 2, 1),
               CuntzElement::matrix_unit(n, 1, 1)));
}

TEST_CASE("multiplication is associative and distributive on samples") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 3; ++n)
    for (int trial = 0; trial < 30; ++trial) {
      const CuntzElement x = random_element(rng, n);
      const CuntzElement y = random_element(rng, n);
      const CuntzElement z = random_element(rng, n);
      CHECK(equals((x * y) * z, x * (y * z)));
      CHECK(equals(x * (y + z), x * y + x * z));
      CHECK(equals((x * y).adjoint(), y.adjoint() * x.adjoint()));
    }
}

TEST_CASE("classify recognizes the basic shapes") {
  const int n = 2;
  const CuntzElement e11 = CuntzElement::matrix_unit(n, 1, 1);

  const ClassifyFlags proj = e11.classify();
  CHECK(proj.projection);
  CHECK(proj.self_adjoint);
  CHECK_FALSE(proj.unitary);

  const ClassifyFlags inv = (CuntzElement::unit(n) - ExactScalar(2) * e11).classify();
  CHECK(inv.involution);
  CHECK(inv.unitary);
  CHECK(inv.self_adjoint);

  const ClassifyFlags isom = s(n, 1).classify();
  CHECK(isom.isometry);
  CHECK_FALSE(isom.co_isometry);
  CHECK_FALSE(isom.unitary);
  CHECK_FALSE(isom.projection);
}

TEST_CASE("involution builder round-trips the projection") {
  const int n = 2;
  for (const CuntzElement &p :
       {CuntzElement::zero(n), CuntzElement::unit(n),
        CuntzElement::matrix_unit(n, 1, 1)}) {
    const CuntzElement z = involution_from_projection(p);
    CHECK(z.classify().involution);
    const CuntzElement recovered =
        ExactScalar::half() * (CuntzElement::unit(n) - z);
    CHECK(equals(recovered, p));
  }
  CHECK_THROWS_AS(involution_from_projection(s(n, 1)), NotAProjection);
}

TEST_CASE("scalar extraction sees through the defining relation") {
  const int n = 2;
  CuntzElement expanded = CuntzElement::zero(n);
  for (int k = 1; k <= n; ++k)
    expanded = expanded + CuntzElement::matrix_unit(n, k, k);
  const auto lambda = as_scalar(ExactScalar::rational(3, 2) * expanded);
  REQUIRE(lambda.has_value());
  CHECK(*lambda == ExactScalar::rational(3, 2));
  CHECK_FALSE(as_scalar(s(n, 1)).has_value());
  CHECK(as_scalar(CuntzElement::zero(n)) == ExactScalar(0));
}

TEST_CASE("expansion budget is enforced") {
  const int n = 4;
  // One unit plus one deep term forces the unit to expand to n^6 terms.
  Word deep(6, 1);
  const CuntzElement x =
      CuntzElement::unit(n) + CuntzElement::monomial(n, deep, deep);
  ExpansionBudgetGuard guard(1000);
  CHECK_THROWS_AS(x.normalized(), ExpansionBudgetExceeded);
}

TEST_CASE("letters outside the alphabet are rejected") {
  CHECK_THROWS_AS(CuntzElement::generator(2, 3), IndexOutOfRange);
  CHECK_THROWS_AS(CuntzElement::generator(2, 0), IndexOutOfRange);
  CHECK_THROWS_AS(CuntzElement::monomial(2, {1, 3}, {}), IndexOutOfRange);
}
