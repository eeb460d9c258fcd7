#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cstar/numeric.hpp"

using namespace cstar;

namespace {

ComplexMatrix projection_from_vector(Complex v0, Complex v1, double tol) {
  const double inv = 1.0 / (std::norm(v0) + std::norm(v1));
  ComplexMatrix p(2, tol);
  p.at(0, 0) = std::norm(v0) * inv;
  p.at(0, 1) = v0 * std::conj(v1) * inv;
  p.at(1, 0) = v1 * std::conj(v0) * inv;
  p.at(1, 1) = std::norm(v1) * inv;
  return p;
}

} // namespace

TEST_CASE("decompose2 on the constant 1/2 projection gives a = 1") {
  ComplexMatrix p(2);
  p.at(0, 0) = p.at(0, 1) = p.at(1, 0) = p.at(1, 1) = 0.5;
  const auto d = decompose2(p);
  CHECK(d.i == 1);
  CHECK(d.j == 2);
  CHECK(std::abs(d.canonical - Complex(1.0, 0.0)) < 1e-12);
  // |b| = 1/2: branches coincide, reported once.
  CHECK_FALSE(d.alternate.has_value());
}

TEST_CASE("decompose2 canonical branch 1/2 with alternate 2") {
  ComplexMatrix p(2);
  p.at(0, 0) = 0.8;
  p.at(0, 1) = 0.4;
  p.at(1, 0) = 0.4;
  p.at(1, 1) = 0.2;
  const auto d = decompose2(p);
  CHECK(d.i == 1);
  CHECK(d.j == 2);
  CHECK(std::abs(d.canonical - Complex(0.5, 0.0)) < 1e-12);
  REQUIRE(d.alternate.has_value());
  CHECK(std::abs(*d.alternate - Complex(2.0, 0.0)) < 1e-12);
  CHECK(max_entry_diff(dye_numeric(d.i, d.j, d.canonical, 2), p) < 1e-12);
}

TEST_CASE("decompose2 diagonal cases pick the dominant index") {
  ComplexMatrix e11(2);
  e11.at(0, 0) = 1.0;
  const auto d1 = decompose2(e11);
  CHECK(d1.i == 1);
  CHECK(d1.j == 2);
  CHECK(std::abs(d1.canonical) < 1e-12);

  ComplexMatrix e22(2);
  e22.at(1, 1) = 1.0;
  const auto d2 = decompose2(e22);
  CHECK(d2.i == 2);
  CHECK(d2.j == 1);
  CHECK(std::abs(d2.canonical) < 1e-12);
}

TEST_CASE("decompose2 rejects trivial projections and non-projections") {
  CHECK_THROWS_AS(decompose2(ComplexMatrix(2)), TrivialProjection);
  CHECK_THROWS_AS(decompose2(ComplexMatrix::identity(2)), TrivialProjection);
  ComplexMatrix not_p(2);
  not_p.at(0, 1) = 1.0;
  CHECK_THROWS_AS(decompose2(not_p), NotAProjection);
}

TEST_CASE("roundtrip through dye on random rank-one projections") {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 200; ++trial) {
    const Complex v0(normal(rng), normal(rng));
    const Complex v1(normal(rng), normal(rng));
    const ComplexMatrix p = projection_from_vector(v0, v1, 1e-12);
    const auto d = decompose2(p);
    CHECK(std::abs(d.canonical) <= 1.0 + 1e-9);
    CHECK(max_entry_diff(dye_numeric(d.i, d.j, d.canonical, 2), p) <= 1e-12);
    CHECK(std::abs(p.trace() - Complex(1.0, 0.0)) <= 1e-12);
    const double b_abs = std::abs(p.at(0, 1));
    if (b_abs > 1e-9 && b_abs < 0.5 - 1e-6) {
      REQUIRE(d.alternate.has_value());
      CHECK(std::abs(d.canonical * std::conj(*d.alternate) - Complex(1.0, 0.0)) <=
            1e-10);
    }
  }
}

TEST_CASE("the full-support rank-one projection is obstructed") {
  ComplexMatrix p(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      p.at(i, j) = 1.0 / 3.0;
  const auto res = rank1_obstruction3(p);
  CHECK_FALSE(res.representable);
  CHECK_FALSE(res.witness.has_value());
}

TEST_CASE("constructed Dye images are detected with a reconstructing witness") {
  const Complex a(2.0, 1.0);
  const ComplexMatrix p = dye_numeric(1, 3, a, 3);
  const auto res = rank1_obstruction3(p);
  REQUIRE(res.representable);
  REQUIRE(res.witness.has_value());
  const ComplexMatrix rebuilt =
      dye_numeric(res.witness->i, res.witness->j, res.witness->a, 3);
  CHECK(max_entry_diff(rebuilt, p) < 1e-12);
}

TEST_CASE("diagonal matrix units are representable with a = 0") {
  ComplexMatrix e22(3);
  e22.at(1, 1) = 1.0;
  const auto res = rank1_obstruction3(e22);
  REQUIRE(res.representable);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->i == 2);
  CHECK(std::abs(res.witness->a) < 1e-12);
}

TEST_CASE("rank-two projections are not in the Dye family") {
  ComplexMatrix p(3);
  p.at(0, 0) = 1.0;
  p.at(1, 1) = 1.0;
  const auto res = rank1_obstruction3(p);
  CHECK_FALSE(res.representable);
}

TEST_CASE("numeric rank with partial pivoting") {
  ComplexMatrix m(3);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = 2.0;
  CHECK(m.rank() == 2);
  CHECK(ComplexMatrix::identity(3).rank() == 3);
  CHECK(ComplexMatrix(3).rank() == 0);
}

TEST_CASE("numeric predicates respect the tolerance") {
  ComplexMatrix nearly(2, 1e-6);
  nearly.at(0, 0) = 1.0 + 1e-9;
  CHECK(nearly.is_projection());
  nearly.set_tol(1e-12);
  CHECK_FALSE(nearly.is_projection());
}
