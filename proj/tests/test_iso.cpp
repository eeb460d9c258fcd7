#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cstar/iso.hpp"

using namespace cstar;

namespace {

using Mat = StarMatrix<CuntzElement>;

CuntzElement random_element(std::mt19937_64 &rng, int n) {
  auto pick = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  const ExactScalar pool[5] = {ExactScalar(1), ExactScalar(-1),
                               ExactScalar::rational(1, 2),
                               ExactScalar::rational(-1, 2),
                               ExactScalar::rational(1, 2) * ExactScalar::i()};
  CuntzElement x = CuntzElement::zero(n);
  const long terms = pick(1, 2);
  for (long t = 0; t < terms; ++t) {
    Word mu(static_cast<std::size_t>(pick(0, 2)));
    Word nu(static_cast<std::size_t>(pick(0, 2)));
    for (int &l : mu)
      l = static_cast<int>(pick(1, n));
    for (int &l : nu)
      l = static_cast<int>(pick(1, n));
    x = x + CuntzElement::monomial(n, mu, nu, pool[pick(0, 4)]);
  }
  return x;
}

Mat random_matrix(std::mt19937_64 &rng, int n, int dim) {
  Mat m(dim, CuntzElement::zero(n));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      m.at(i, j) = random_element(rng, n);
  return m;
}

} // namespace

TEST_CASE("eta maps the identity to 1 and units to word units") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(equals(eta(Mat::identity(n, CuntzElement::unit(n))),
                 CuntzElement::unit(n)));
    CHECK(equals(eta(Mat::unit_matrix(n, 1, 2, CuntzElement::unit(n))),
                 CuntzElement::matrix_unit(n, 1, 2)));
  }
}

TEST_CASE("eta of a Dye matrix matches the four-term expansion") {
  const int n = 3;
  const CuntzElement alpha =
      CuntzElement::matrix_unit(n, 1, 2) + CuntzElement::matrix_unit(n, 2, 1) +
      CuntzElement::matrix_unit(n, 3, 3);
  REQUIRE(alpha.classify().unitary);
  const CuntzElement image = eta(dye(1, 2, -alpha, 3));
  const ExactScalar half = ExactScalar::half();
  const CuntzElement s1 = CuntzElement::generator(n, 1);
  const CuntzElement s2 = CuntzElement::generator(n, 2);
  const CuntzElement expected =
      half * (s1 * s1.adjoint()) - half * (s1 * alpha * s2.adjoint()) -
      half * (s2 * alpha.adjoint() * s1.adjoint()) +
      half * (s2 * alpha.adjoint() * alpha * s2.adjoint());
  CHECK(equals(image, expected));
}

TEST_CASE("eta rejects dimension mismatches") {
  const int n = 3;
  CHECK_THROWS_AS(eta(Mat::identity(2, CuntzElement::unit(n))),
                  DimensionMismatch);
}

TEST_CASE("eta_inv inverts eta exactly") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 4; ++n) {
    CHECK(ring_equal(eta_inv(CuntzElement::unit(n)),
                     Mat::identity(n, CuntzElement::unit(n))));
    CHECK(ring_equal(eta_inv(CuntzElement::matrix_unit(n, 1, 2)),
                     Mat::unit_matrix(n, 1, 2, CuntzElement::unit(n))));
    for (int trial = 0; trial < 20; ++trial) {
      const Mat m = random_matrix(rng, n, n);
      CHECK(ring_equal(eta_inv(eta(m)), m));
      CHECK(equals(eta(eta_inv(eta(m))), eta(m)));
    }
  }
}

TEST_CASE("eta is a star-homomorphism on samples") {
  std::mt19937_64 rng(6);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      const Mat m = random_matrix(rng, n, n);
      const Mat k = random_matrix(rng, n, n);
      CHECK(equals(eta(m * k), eta(m) * eta(k)));
      CHECK(equals(eta(m.adjoint()), eta(m).adjoint()));
    }
}

TEST_CASE("eta1 embeds corner matrices and zeta inverts it") {
  std::mt19937_64 rng(9);
  const int n = 3;
  const CuntzElement e11 = CuntzElement::matrix_unit(n, 1, 1);

  // diag(e11, e11, e11) maps to the sum of the first three diagonal units.
  Mat diag(3, CuntzElement::zero(n));
  for (int k = 0; k < 3; ++k)
    diag.at(k, k) = e11;
  CuntzElement r1 = CuntzElement::zero(n);
  for (int k = 1; k <= 3; ++k)
    r1 = r1 + CuntzElement::matrix_unit(n, k, k);
  CHECK(equals(eta1(diag), r1));

  // zeta(e11) concentrates in the (1,1) slot.
  const Mat z = zeta(e11, 3);
  CHECK(equals(z.at(0, 0), e11));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i || j)
        CHECK(z.at(i, j).normalized().is_syntactic_zero());

  // zeta(eta1(M)) = M for random corner matrices.
  for (int trial = 0; trial < 15; ++trial) {
    Mat m(3, CuntzElement::zero(n));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        m.at(i, j) = (e11 * random_element(rng, n) * e11).normalized();
    CHECK(ring_equal(zeta(eta1(m), 3), m));
  }
}

TEST_CASE("eta1 rejects entries outside the corner") {
  const int n = 3;
  Mat m(2, CuntzElement::zero(n));
  m.at(0, 0) = CuntzElement::unit(n); // 1 is not in the e11 corner
  CHECK_THROWS_AS(eta1(m), NotInCorner);
}

TEST_CASE("zeta rejects elements outside the reduced algebra") {
  const int n = 3;
  // e_{1,1} + e_{3,3} is not inside r1 A r1 for k = 2.
  const CuntzElement x = CuntzElement::matrix_unit(n, 1, 1) +
                         CuntzElement::matrix_unit(n, 3, 3);
  CHECK_THROWS_AS(zeta(x, 2), NotInReducedAlgebra);
}

TEST_CASE("corner isomorphism through s1^*") {
  const int n = 2;
  const CuntzElement v = CuntzElement::generator(n, 1).adjoint();
  const CuntzElement e11 = CuntzElement::matrix_unit(n, 1, 1);
  CHECK(equals(corner_iso(v, CuntzElement::unit(n)), e11));

  const CuntzElement e22 = CuntzElement::matrix_unit(n, 2, 2);
  const CuntzElement s1 = CuntzElement::generator(n, 1);
  CHECK(equals(corner_iso(v, e22), s1 * e22 * s1.adjoint()));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const CuntzElement x = random_element(rng, n);
    const CuntzElement y = random_element(rng, n);
    CHECK(equals(corner_iso(v, x) * corner_iso(v, y), corner_iso(v, x * y)));
  }

  CHECK_THROWS_AS(corner_iso(CuntzElement::generator(n, 1), e11),
                  NotCoIsometry);
}

TEST_CASE("projection decomposition for v = 1 and v = s_k^*") {
  for (int n = 2; n <= 3; ++n) {
    const auto parts_unit = decompose_projection(CuntzElement::unit(n));
    REQUIRE(static_cast<int>(parts_unit.size()) == n);
    for (int k = 0; k < n; ++k)
      CHECK(equals(parts_unit[static_cast<std::size_t>(k)],
                   CuntzElement::matrix_unit(n, k + 1, k + 1)));
  }

  const int n = 2;
  const CuntzElement v = CuntzElement::generator(n, 1).adjoint();
  const auto parts = decompose_projection(v);
  REQUIRE(parts.size() == 2);
  const CuntzElement s1 = CuntzElement::generator(n, 1);
  const CuntzElement s2 = CuntzElement::generator(n, 2);
  CHECK(equals(parts[0], s1 * s1 * s1.adjoint() * s1.adjoint()));
  CHECK(equals(parts[1], s1 * s2 * s2.adjoint() * s1.adjoint()));
  CuntzElement total = parts[0] + parts[1];
  CHECK(equals(total, CuntzElement::matrix_unit(n, 1, 1)));
  CHECK(equals(parts[0] * parts[1], CuntzElement::zero(n)));

  CHECK_THROWS_AS(decompose_projection(CuntzElement::generator(n, 1)),
                  NotCoIsometry);
}
