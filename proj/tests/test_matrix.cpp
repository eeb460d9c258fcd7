#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cstar/matrix.hpp"

using namespace cstar;

namespace {

using Mat = StarMatrix<CuntzElement>;

Mat unit_mat(int dim, int i, int j, int n) {
  return Mat::unit_matrix(dim, i, j, CuntzElement::unit(n));
}

} // namespace

TEST_CASE("matrix units multiply like matrix units") {
  const int n = 2;
  CHECK(ring_equal(unit_mat(3, 1, 2, n) * unit_mat(3, 2, 3, n),
                   unit_mat(3, 1, 3, n)));
  CHECK(ring_equal(unit_mat(3, 1, 2, n).adjoint(), unit_mat(3, 2, 1, n)));
  CHECK(ring_equal(unit_mat(3, 1, 2, n) * unit_mat(3, 3, 1, n),
                   Mat(3, CuntzElement::zero(n))));
}

TEST_CASE("identity is a two-sided unit on random matrices") {
  std::mt19937_64 rng(3);
  const int n = 2;
  const Mat id = Mat::identity(3, CuntzElement::unit(n));
  for (int trial = 0; trial < 10; ++trial) {
    Mat x(3, CuntzElement::zero(n));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const int which = static_cast<int>(rng() % 4);
        if (which == 0)
          x.at(i, j) = CuntzElement::generator(n, 1);
        else if (which == 1)
          x.at(i, j) = CuntzElement::matrix_unit(n, 1, 2);
        else if (which == 2)
          x.at(i, j) = ExactScalar::half() * CuntzElement::unit(n);
      }
    CHECK(ring_equal(id * x, x));
    CHECK(ring_equal(x * id, x));
  }
}

TEST_CASE("dye at a = 0 is the diagonal matrix unit") {
  const int n = 2;
  const auto p = dye(1, 2, CuntzElement::zero(n), 3);
  CHECK(ring_equal(p, unit_mat(3, 1, 1, n)));
}

TEST_CASE("dye at a = -1 matches the hand computation") {
  const int n = 2;
  const auto p = dye(1, 2, -CuntzElement::unit(n), 3);
  Mat expected(3, CuntzElement::zero(n));
  const CuntzElement half = CuntzElement::scalar(n, ExactScalar::half());
  expected.at(0, 0) = half;
  expected.at(0, 1) = -half;
  expected.at(1, 0) = -half;
  expected.at(1, 1) = half;
  CHECK(ring_equal(p, expected));
}

TEST_CASE("dye at a unitary has kernel 1/2 on the diagonal") {
  const int n = 2;
  const CuntzElement swap = CuntzElement::matrix_unit(n, 1, 2) +
                            CuntzElement::matrix_unit(n, 2, 1);
  REQUIRE(swap.classify().unitary);
  const auto p = dye(1, 2, swap, 3);
  const CuntzElement half = CuntzElement::scalar(n, ExactScalar::half());
  CHECK(equals(p.at(0, 0), half));
  CHECK(equals(p.at(1, 1), half));
  CHECK(classify(p).projection);
}

TEST_CASE("dye rejects non-scalar kernels and bad indices") {
  const int n = 2;
  // s1 has s1 s1* = e11, not a scalar.
  CHECK_THROWS_AS(dye(1, 2, CuntzElement::generator(n, 1), 3),
                  NonScalarKernel);
  CHECK_THROWS_AS(dye(1, 1, CuntzElement::zero(n), 3), IndexOutOfRange);
  CHECK_THROWS_AS(dye(1, 4, CuntzElement::zero(n), 3), IndexOutOfRange);
}

TEST_CASE("dye projections are idempotent, self-adjoint and supported on {i,j}") {
  const int n = 3;
  const CuntzElement a = ExactScalar::i() * CuntzElement::unit(n);
  for (int dim = 2; dim <= 4; ++dim)
    for (int i = 1; i <= dim; ++i)
      for (int j = 1; j <= dim; ++j) {
        if (i == j)
          continue;
        const auto p = dye(i, j, a, dim);
        const auto flags = classify(p);
        CHECK(flags.projection);
        CHECK(flags.self_adjoint);
        for (int r = 1; r <= dim; ++r)
          for (int c = 1; c <= dim; ++c) {
            if ((r == i || r == j) && (c == i || c == j))
              continue;
            CHECK(p.at(r - 1, c - 1).normalized().is_syntactic_zero());
          }
      }
}

TEST_CASE("matrix involution builder") {
  const int n = 2;
  const CuntzElement one = CuntzElement::unit(n);
  const CuntzElement zero = CuntzElement::zero(n);

  // p = 0 -> 1, p = I -> -I, p = E_11 in M_2 -> diag(-1, 1)
  CHECK(ring_equal(involution_from_projection(Mat(2, zero)),
                   Mat::identity(2, one)));
  const Mat id = Mat::identity(2, one);
  CHECK(ring_equal(involution_from_projection(id),
                   (-ExactScalar(1)) * id));
  Mat expected(2, zero);
  expected.at(0, 0) = -one;
  expected.at(1, 1) = one;
  CHECK(ring_equal(involution_from_projection(unit_mat(2, 1, 1, n)), expected));

  CHECK_THROWS_AS(involution_from_projection(unit_mat(2, 1, 2, n)),
                  NotAProjection);

  // Recovering the projection from the involution.
  const Mat p = unit_mat(2, 1, 1, n);
  const Mat z = involution_from_projection(p);
  const Mat recovered = ExactScalar::half() * (id - z);
  CHECK(ring_equal(recovered, p));
}

TEST_CASE("word units satisfy the matrix-unit axioms for n in 2..5") {
  for (int n = 2; n <= 5; ++n) {
    const auto sys = cuntz_matrix_units(n);
    const auto report = validate_matrix_units(sys);
    CHECK(report.all_pass());
  }
}

TEST_CASE("level-2 word units also form a matrix-unit system") {
  const auto sys = cuntz_matrix_units(2, 2);
  CHECK(sys.size == 4);
  CHECK(validate_matrix_units(sys).all_pass());
}

TEST_CASE("a broken family fails the product axiom with a witness") {
  const int n = 3;
  auto sys = cuntz_matrix_units(n);
  // Zero out e_{1,2}.
  sys.units[1] = CuntzElement::zero(n);
  const auto report = validate_matrix_units(sys);
  CHECK_FALSE(report.all_pass());
  bool product_failed = false;
  for (const auto &axiom : report.axioms)
    if (axiom.axiom == "product" && !axiom.pass) {
      product_failed = true;
      CHECK(axiom.witness.find("(1,2)") != std::string::npos);
    }
  CHECK(product_failed);
}

TEST_CASE("standard scalar matrix units validate") {
  for (int dim = 2; dim <= 4; ++dim) {
    const auto sys = standard_matrix_units(dim);
    CHECK(validate_matrix_units(sys).all_pass());
  }
}
