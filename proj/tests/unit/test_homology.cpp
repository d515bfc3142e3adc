#include <doctest.h>

#include <random>

#include "common/errors.hpp"
#include "complex/fixtures.hpp"
#include "homology/homology.hpp"

using namespace hexcol;

TEST_CASE("boundary matrices") {
  const Field f = Field::make(3);
  const auto d = Triangulation::standard_simplex(1);
  const Matrix b = boundary_matrix(d, 1, f);
  CHECK(b.at(0, 0) == f.neg(1));  // d(12) = 2 - 1
  CHECK(b.at(1, 0) == 1);
  for (auto name : {"S4", "CP2", "RP2xS2"}) {
    const auto k = fixture(name);
    for (auto spec : {"2", "3"}) {
      const Field g = Field::parse(spec);
      for (int n = 2; n <= 4; ++n) CHECK(boundary_matrix(k, n - 1, g).multiply(boundary_matrix(k, n, g)).is_zero());
    }
  }
  CHECK(rank(boundary_matrix(fixture("S4"), 4, Field::make(2))) == 5);
  CHECK_THROWS_AS(boundary_matrix(fixture("S4"), 5, f), InputError);
}

TEST_CASE("betti numbers match Kuenneth and known values") {
  const Field f2 = Field::make(2), f3 = Field::make(3);
  auto bettis = [](const Triangulation& k, const Field& f) {
    std::vector<std::size_t> out;
    for (int n = 0; n <= k.dim(); ++n) out.push_back(betti(k, n, f));
    return out;
  };
  using V = std::vector<std::size_t>;
  CHECK(bettis(fixture("S4"), f2) == V{1, 0, 0, 0, 1});
  CHECK(bettis(fixture("CP2"), f2) == V{1, 0, 1, 0, 1});
  CHECK(bettis(fixture("RP4"), f2) == V{1, 1, 1, 1, 1});
  CHECK(bettis(fixture("RP4"), f3) == V{1, 0, 0, 0, 0});
  // Kuenneth over a field: b(AxB)_n = sum b(A)_i b(B)_{n-i}
  const V rp2{1, 1, 1}, s2{1, 0, 1};
  V prod(5, 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) prod[i + j] += rp2[i] * s2[j];
  CHECK(bettis(fixture("RP2xS2"), f2) == prod);
}

TEST_CASE("dual bases pair to the identity") {
  const Field f = Field::make(2);
  const auto k = fixture("RP2xS2");
  for (int n = 0; n <= 4; ++n) {
    const auto b = homology_basis(k, n, f);
    CHECK(b.dim() == betti(k, n, f));
    for (std::size_t j = 0; j < b.dim(); ++j) {
      CHECK(is_cocycle(k, n, f, b.cocycles[j]));
      for (std::size_t i = 0; i < b.dim(); ++i) CHECK(dot(f, b.cocycles[j], b.cycles[i]) == (i == j ? 1u : 0u));
    }
  }
  CHECK(homology_basis(k, 3, f).dim() == 1);
  CHECK(homology_basis(fixture("CP2"), 2, f).dim() == 1);
  CHECK(homology_basis(fixture("S4"), 3, f).dim() == 0);
}

TEST_CASE("fundamental cycles") {
  const auto s4 = fixture("S4");
  CHECK(fundamental_cycle(s4, Field::make(2)) == Vector(6, 1));
  const Field f3 = Field::make(3);
  const Vector z = fundamental_cycle(s4, f3);
  CHECK(is_zero(boundary_matrix(s4, 4, f3).apply(z)));
  // facet j of the boundary of 123456 omits vertex 6 - j; sign (-1)^k for omitted vertex k
  for (std::size_t j = 0; j < 6; ++j) CHECK(z[j] == ((6 - j) % 2 == 0 ? 1u : 2u));
  CHECK_THROWS_AS(fundamental_cycle(fixture("RP4"), f3), DomainError);
  CHECK(fundamental_cycle(fixture("RP4"), Field::make(2)) == Vector(360, 1));
}

TEST_CASE("class coordinates") {
  const Field f = Field::make(2);
  const auto k = fixture("RP4");
  const auto b = homology_basis(k, 3, f);
  REQUIRE(b.dim() == 1);
  std::mt19937_64 rng(2);
  Vector c2(k.count(2));
  for (auto& v : c2) v = rng() % 2;
  const Vector cob = simplicial_coboundary(k, 2, f, c2);
  CHECK(class_coordinates(k, b, f, cob) == Vector{0});
  CHECK(class_coordinates(k, b, f, b.cocycles[0]) == Vector{1});
  // round trip: c - sum coords * dual is a coboundary
  const Vector c = add(f, cob, b.cocycles[0]);
  const Vector coords = class_coordinates(k, b, f, c);
  const Vector rest = add(f, c, scale(f, f.neg(coords[0]), b.cocycles[0]));
  const Matrix d3t = boundary_matrix(k, 3, f);  // columns of d3^T rows span coboundaries
  CHECK(solve(d3t.transpose(), rest).has_value());
  Vector bad(k.count(3), 0);
  bad[0] = 1;
  CHECK_THROWS_AS(class_coordinates(k, b, f, bad), DomainError);
}
