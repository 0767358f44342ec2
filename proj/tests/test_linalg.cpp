#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orbicoh/error.hpp"
#include "orbicoh/linalg.hpp"
#include "orbicoh/random_objects.hpp"

using namespace orbicoh;

namespace {

oracle::Mat to_rows(const Matrix& m) {
  oracle::Mat out(m.rows(), oracle::Row(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

}  // namespace

TEST_CASE("prime field rejects composites") {
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_NOTHROW(PrimeField(65521));
  PrimeField f(7);
  for (Scalar a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.reduce(-3) == 4);
}

TEST_CASE("rref of small matrices") {
  auto r = rref(Matrix::identity(3, 2));
  CHECK(r.reduced == Matrix::identity(3, 2));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

  r = rref(Matrix::from_rows({{1, 1}, {1, 1}}, 2));
  CHECK(r.reduced == Matrix::from_rows({{1, 1}, {0, 0}}, 2));
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rank agrees with an independent elimination and with the transpose") {
  Rng rng(kDefaultSeed);
  for (int t = 0; t < 20; ++t) {
    const std::uint32_t p = t % 2 ? 5 : 3;
    Matrix a = random_matrix(rng, 20, 30, p);
    if (t % 3 == 0) a = random_matrix(rng, 20, 4, p) * random_matrix(rng, 4, 30, p);
    CHECK(rank(a) == oracle::rank(to_rows(a), p));
    CHECK(rank(a) == rank(a.transpose()));
  }
}

TEST_CASE("kernel basis") {
  const Matrix k = kernel_basis(Matrix::from_rows({{1, 1}}, 2));
  CHECK(k == Matrix::from_rows({{1}, {1}}, 2));
  CHECK(kernel_basis(Matrix::identity(5, 3)).cols() == 0);

  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = random_matrix(rng, 6, 9, 3) * Matrix::identity(9, 3);
    const Matrix kb = kernel_basis(a);
    CHECK((a * kb).is_zero());
    CHECK(kb.cols() == a.cols() - rank(a));
    CHECK(rank(kb) == kb.cols());
  }
}

TEST_CASE("solve") {
  Rng rng(11);
  const Matrix b = random_matrix(rng, 4, 3, 5);
  CHECK(*solve(Matrix::identity(4, 5), b) == b);

  const Matrix a = Matrix::from_rows({{1, 1}}, 2);
  const auto x = solve(a, Matrix::from_rows({{1}}, 2));
  REQUIRE(x);
  CHECK(a * *x == Matrix::from_rows({{1}}, 2));

  for (int t = 0; t < 20; ++t) {
    const Matrix m = random_matrix(rng, 7, 5, 3);
    const Matrix x0 = random_matrix(rng, 5, 2, 3);
    const auto got = solve(m, m * x0);
    REQUIRE(got);
    CHECK(m * *got == m * x0);

    const Matrix rhs = random_matrix(rng, 7, 1, 3);
    const bool consistent = rank(Matrix::hstack(m, rhs)) == rank(m);
    CHECK(solve(m, rhs).has_value() == consistent);
  }
  CHECK(solve(a, Matrix::zero(1, 1, 2))->is_zero());
  CHECK_THROWS_AS(solve(a, Matrix::zero(2, 1, 2)), Error);
}

TEST_CASE("rank of a product is bounded by both factors") {
  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = random_matrix(rng, 6, 4, 2);
    const Matrix b = random_matrix(rng, 4, 7, 2);
    CHECK(rank(a * b) <= std::min(rank(a), rank(b)));
  }
}

TEST_CASE("empty shapes behave as unique maps") {
  const Matrix a(0, 3, 2), b(3, 0, 2);
  CHECK((b * a).rows() == 3);
  CHECK((b * a).is_zero());
  CHECK((a * b).rows() == 0);
  CHECK(rank(a) == 0);
  CHECK(kernel_basis(a) == Matrix::identity(3, 2));
  CHECK(solve(b, Matrix::zero(3, 1, 2))->rows() == 0);
}

TEST_CASE("echelon span") {
  EchelonSpan s(3, 3);
  const std::vector<Scalar> u{1, 2, 0}, v{2, 1, 0}, w{0, 0, 1};
  CHECK(s.insert(u));
  CHECK(s.contains(std::vector<Scalar>{2, 1, 0}));
  CHECK_FALSE(s.insert(v));
  CHECK(s.insert(w));
  CHECK(s.dim() == 2);
}
