#include <doctest.h>

#include "support.hpp"

using namespace qtilt;

TEST_SUITE("exactlin") {

TEST_CASE("scalar arithmetic is exact over Q") {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<std::int64_t> d(-1000000, 1000000);
  for (int i = 0; i < 200; ++i) {
    Scalar a(d(gen), std::max<std::int64_t>(1, std::abs(d(gen)))), b(d(gen), 97);
    CHECK((a + b) - b == a);
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
  }
  // Overflow into big rationals and back.
  Scalar big(std::int64_t(1) << 62);
  Scalar sq = big * big;
  CHECK(sq / big == big);
  CHECK(sq.str() == "21267647932558653966460912964485513216");
  CHECK(Scalar::parse("-6/4") == Scalar(-3, 2));
}

TEST_CASE("prime field arithmetic") {
  FieldScope fs(Field::prime(7));
  CHECK(Scalar(3) * Scalar(5) == Scalar(1));
  CHECK(Scalar(-1) == Scalar(6));
  for (int a = 1; a < 7; ++a) CHECK(Scalar(a) * Scalar(a).inverse() == Scalar(1));
  CHECK_THROWS(Field::prime(8));
  CHECK_THROWS(Field::parse("Fp:9"));
}

TEST_CASE("rref examples") {
  auto r = rref(Matrix::identity(2));
  CHECK(r.reduced == Matrix::identity(2));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  auto s = rref(Matrix{{1, 2}, {2, 4}});
  CHECK(s.reduced == Matrix{{1, 2}, {0, 0}});
  CHECK(s.pivots == std::vector<std::size_t>{0});
  auto t = rref(Matrix{{0, 1}, {1, 0}});
  CHECK(t.reduced == Matrix::identity(2));
  CHECK(t.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix::identity(3)).empty());
  CHECK(kernel_basis(Matrix(2, 3)).size() == 3);
  auto k = kernel_basis(Matrix{{1, 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(!k[0][0].is_zero());
}

TEST_CASE("solve examples") {
  auto s = solve(Matrix::identity(2), Vector{Scalar(5), Scalar(7)});
  REQUIRE(s);
  CHECK(s->particular == Vector{Scalar(5), Scalar(7)});
  CHECK(s->kernel.empty());
  auto t = solve(Matrix{{1, 1}}, Vector{Scalar(3)});
  REQUIRE(t);
  CHECK(t->particular[0] + t->particular[1] == Scalar(3));
  CHECK(t->kernel.size() == 1);
  CHECK(!solve(Matrix{{1}, {0}}, Vector{Scalar(0), Scalar(1)}));
}

TEST_CASE("rank agrees with fraction-free elimination") {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<int> dim(1, 7), val(-3, 3), zero(0, 3);
  for (int t = 0; t < 300; ++t) {
    int r = dim(gen), c = dim(gen);
    Matrix m(r, c);
    std::vector<std::vector<mpz_class>> z(r, std::vector<mpz_class>(c));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        int x = zero(gen) ? val(gen) : 0;
        m(i, j) = x;
        z[i][j] = x;
      }
    // Force some dependent rows.
    if (r > 2)
      for (int j = 0; j < c; ++j) {
        m(2, j) = m(0, j) + m(1, j).operator-() * Scalar(2);
        z[2][j] = z[0][j] - 2 * z[1][j];
      }
    std::size_t rk = rank(m);
    CHECK(static_cast<int>(rk) == qtest::bareiss_rank(z));
    CHECK(rk <= static_cast<std::size_t>(std::min(r, c)));
    auto ker = kernel_basis(m);
    CHECK(ker.size() + rk == static_cast<std::size_t>(c));
    for (const auto& v : ker) CHECK(is_zero(m * v));
  }
}

TEST_CASE("echelon basis membership") {
  EchelonBasis b(3);
  CHECK(b.add({Scalar(1), Scalar(2), Scalar(3)}));
  CHECK(b.add({Scalar(0), Scalar(1), Scalar(1)}));
  CHECK(!b.add({Scalar(1), Scalar(3), Scalar(4)}));
  CHECK(b.contains({Scalar(2), Scalar(5), Scalar(7)}));
  CHECK(b.dim() == 2);
}

}
