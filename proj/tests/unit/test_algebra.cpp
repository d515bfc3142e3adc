#include <doctest.h>

#include <random>

#include "algebra/field.hpp"
#include "algebra/matrix.hpp"
#include "algebra/mpoly.hpp"
#include "algebra/subspace.hpp"
#include "common/errors.hpp"
#include "support/oracles.hpp"

using namespace hexcol;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, double density = 1.0) {
  Matrix m(f, r, c);
  std::uniform_real_distribution<double> u(0, 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (u(rng) < density) m.set(i, j, static_cast<Elem>(rng() % f.order()));
  return m;
}

}  // namespace

TEST_CASE("field axioms hold on random samples") {
  std::mt19937_64 rng(7);
  for (auto spec : {"2", "3", "5", "7", "2^2", "2^3", "2^8", "3^2", "3^3", "5^2"}) {
    const Field f = Field::parse(spec);
    CAPTURE(std::string(spec));
    for (int trial = 0; trial < 300; ++trial) {
      const Elem a = rng() % f.order(), b = rng() % f.order(), c = rng() % f.order();
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      // Frobenius is additive
      const unsigned p = f.characteristic();
      CHECK(f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p)));
    }
    // every element satisfies x^q = x
    for (Elem a = 0; a < std::min<Elem>(f.order(), 64); ++a) CHECK(f.pow(a, f.order()) == a);
  }
}

TEST_CASE("field parsing and naming") {
  CHECK(Field::parse("2^3").order() == 8);
  CHECK(Field::parse("7").name() == "F_7");
  CHECK(Field::parse("2^3").spec() == "2^3");
  CHECK(Field::make(2, 3).modulus() == std::vector<unsigned>{1, 1, 0, 1});
  CHECK_THROWS_AS(Field::parse("4"), InputError);
  CHECK_THROWS_AS(Field::parse("2^x"), InputError);
  CHECK_THROWS_AS(Field::parse("2^30"), InputError);
  CHECK_THROWS_AS(Field::make(2).inv(0), DomainError);
}

TEST_CASE("row reduction agrees with an independent rank oracle") {
  std::mt19937_64 rng(11);
  for (auto spec : {"2", "3", "5", "2^2", "3^2"}) {
    const Field f = Field::parse(spec);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + rng() % 20, c = 1 + rng() % 90;
      const Matrix m = random_matrix(f, r, c, rng, 0.3);
      CAPTURE(std::string(spec));
      CHECK(rank(m) == oracle::rank(f, oracle::to_dense(m)));
    }
  }
}

TEST_CASE("RREF is canonical and the kernel is exact") {
  std::mt19937_64 rng(3);
  for (auto spec : {"2", "3", "2^2"}) {
    const Field f = Field::parse(spec);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 80;
      const Matrix m = random_matrix(f, r, c, rng, 0.4);
      const auto e = row_reduce(m);
      // invertible recombination of rows gives the same RREF
      Matrix shuffled = m;
      for (std::size_t i = 0; i + 1 < r; ++i) shuffled.axpy_row(i, 1, m, i + 1);
      CHECK(row_reduce(shuffled).basis == e.basis);
      for (std::size_t i = 0; i < e.rank(); ++i) {
        CHECK(e.basis.at(i, e.pivots[i]) == 1);
        for (std::size_t k = 0; k < e.rank(); ++k)
          if (k != i) CHECK(e.basis.at(k, e.pivots[i]) == 0);
      }
      const auto k = kernel_basis(m);
      CHECK(k.rank() + e.rank() == c);
      for (std::size_t i = 0; i < k.rank(); ++i) CHECK(is_zero(m.apply(k.basis.row(i))));
    }
  }
}

TEST_CASE("solve finds solutions exactly when they exist") {
  std::mt19937_64 rng(5);
  const Field f = Field::make(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix m = random_matrix(f, 8, 5, rng, 0.5);
    Vector x(5);
    for (auto& v : x) v = rng() % 3;
    const Vector b = m.apply(x);
    auto s = solve(m, b);
    REQUIRE(s);
    CHECK(m.apply(*s) == b);
  }
  const Matrix z = Matrix::from_rows(f, 2, {{1, 0}, {1, 0}});
  CHECK_FALSE(solve(z, {1, 2}).has_value());
}

TEST_CASE("subspaces and quotients") {
  std::mt19937_64 rng(9);
  for (auto spec : {"2", "5"}) {
    const Field f = Field::parse(spec);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 30;
      const Matrix wrows = random_matrix(f, 8, n, rng, 0.3);
      Subspace w = Subspace::span(wrows);
      Matrix sub_rows(f, 0, n);
      for (std::size_t i = 0; i < 3; ++i) sub_rows.append_row(wrows.row(i));
      Subspace w0 = Subspace::span(sub_rows);
      CHECK(w.contains(w0));
      QuotientSpace q(w, w0);
      CHECK(q.dim() == w.dim() - w0.dim());
      // coordinates of representatives are unit vectors
      for (std::size_t i = 0; i < q.dim(); ++i) {
        Vector e(q.dim(), 0);
        e[i] = 1;
        CHECK(q.coordinates(q.representative(i)) == e);
      }
      // adding elements of W0 does not move a class
      for (std::size_t i = 0; i < q.dim(); ++i) {
        const Vector v = add(f, q.representative(i), scale(f, 2 % f.order(), sub_rows.row(0)));
        Vector e(q.dim(), 0);
        e[i] = 1;
        CHECK(q.coordinates(v) == e);
      }
      // canonical form ignores the spanning set
      Matrix again = wrows;
      again.axpy_row(0, 1, wrows, 1);
      CHECK(Subspace::span(again) == w);
    }
  }
  const Field f = Field::make(2);
  Subspace a = Subspace::span(f, 3, {{1, 0, 0}});
  Subspace b = Subspace::span(f, 3, {{0, 1, 0}});
  CHECK_THROWS(QuotientSpace(a, b));
  QuotientSpace q(a.sum(b), b);
  CHECK_THROWS_AS(q.coordinates({0, 0, 1}), DomainError);
}

TEST_CASE("polynomial arithmetic and substitution") {
  const Field f = Field::make(3);
  auto x = MPoly::variable(f, 3, 0), y = MPoly::variable(f, 3, 1), z = MPoly::variable(f, 3, 2);
  const MPoly p = x * y - z.pow(2) + x.scaled(2);
  CHECK(p.total_degree() == 2);
  CHECK_FALSE(p.is_homogeneous());
  CHECK(p.homogeneous_part(2).is_homogeneous());
  CHECK(p.to_string({"a", "b", "c"}) == "a*b - c^2 - a");
  CHECK((p - p).is_zero());

  // substitution is a ring homomorphism: check on random linear maps
  std::mt19937_64 rng(1);
  const MPoly q = x.pow(2) * z + y * z;
  for (int trial = 0; trial < 20; ++trial) {
    Matrix L(f, 3, 2);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j) L.set(i, j, rng() % 3);
    CHECK((p * q).substitute_linear(L) == p.substitute_linear(L) * q.substitute_linear(L));
    CHECK((p + q).substitute_linear(L) == p.substitute_linear(L) + q.substitute_linear(L));
    // evaluating after substitution equals evaluating at the image point
    const Vector pt{static_cast<Elem>(rng() % 3), static_cast<Elem>(rng() % 3)};
    const Vector img = L.apply(pt);
    CHECK(p.substitute_linear(L).evaluate(pt) == p.evaluate(img));
  }
}

TEST_CASE("formal semantics over F_2 and extension evaluation") {
  const Field f = Field::make(2);
  auto x = MPoly::variable(f, 1, 0);
  CHECK(x != x.pow(2));
  const Field f4 = Field::make(2, 2);
  // x^2 + x vanishes on F_2 but not on F_4
  const MPoly g = x.pow(2) + x;
  for (Elem a = 0; a < 2; ++a) CHECK(g.evaluate_in(f4, std::vector<Elem>{a}) == 0);
  int nonzero = 0;
  for (Elem a = 0; a < 4; ++a) nonzero += g.evaluate_in(f4, std::vector<Elem>{a}) != 0;
  CHECK(nonzero == 2);
}

TEST_CASE("monomials of a fixed degree") {
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(10, 3).size() == 220);
  const auto ms = monomials_of_degree(2, 2);
  for (std::size_t i = 0; i + 1 < ms.size(); ++i) CHECK(GrlexLess{}(ms[i], ms[i + 1]));
}
