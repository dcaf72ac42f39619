#include "cgt/meataxe.hpp"

#include <set>

#include "cgt/errors.hpp"
#include "cgt/fp_linalg.hpp"
#include "doctest.h"

using cgt::FpMatrix;
using cgt::FpPoly;
using cgt::SeedStream;

namespace {

FpMatrix from_rows(unsigned p, std::vector<std::vector<std::uint32_t>> rows) {
  FpMatrix m(p, static_cast<unsigned>(rows.size()),
             static_cast<unsigned>(rows[0].size()));
  for (unsigned i = 0; i < m.rows; ++i) {
    for (unsigned j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool invariant_under(const FpMatrix& basis, const std::vector<FpMatrix>& action) {
  cgt::RowSpace space(basis.p, basis.cols);
  for (unsigned r = 0; r < basis.rows; ++r) space.add(basis.row(r));
  for (const FpMatrix& m : action) {
    for (unsigned r = 0; r < basis.rows; ++r) {
      if (!space.contains(cgt::vec_mat(basis.row(r), m))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("matrix arithmetic basics") {
  FpMatrix a = from_rows(5, {{1, 2}, {3, 4}});
  FpMatrix b = from_rows(5, {{0, 1}, {1, 0}});
  CHECK(a * b == from_rows(5, {{2, 1}, {4, 3}}));
  CHECK(a + a == a.scaled(2));
  CHECK(a.transpose() == from_rows(5, {{1, 3}, {2, 4}}));
  CHECK(FpMatrix::identity(5, 2) * a == a);
}

TEST_CASE("row reduction and nullspace") {
  FpMatrix m = from_rows(5, {{1, 2, 0}, {2, 1, 0}, {0, 0, 0}});
  FpMatrix ns = cgt::left_nullspace(m);
  REQUIRE(ns.rows == 1);
  CHECK(cgt::vec_mat(ns.row(0), m) == std::vector<std::uint32_t>{0, 0, 0});

  FpMatrix full = from_rows(7, {{1, 1}, {1, 2}});
  CHECK(cgt::left_nullspace(full).rows == 0);

  FpMatrix copy = m;
  CHECK(cgt::row_reduce(copy) == 2);

  // Over F_3 the same rows become dependent: 2*(1,2,0) = (2,1,0).
  FpMatrix m3 = from_rows(3, {{1, 2, 0}, {2, 1, 0}, {0, 0, 0}});
  CHECK(cgt::left_nullspace(m3).rows == 2);
}

TEST_CASE("row spaces grow and test membership") {
  cgt::RowSpace s(3, 3);
  CHECK(s.add({1, 1, 0}));
  CHECK(s.add({0, 1, 1}));
  CHECK_FALSE(s.add({1, 2, 1}));
  CHECK(s.dim() == 2);
  CHECK(s.contains({2, 2, 0}));
  CHECK_FALSE(s.contains({1, 0, 1}));
}

TEST_CASE("polynomial arithmetic and gcd") {
  unsigned p = 5;
  FpPoly a(p, {4, 0, 1});  // x^2 + 4
  FpPoly b(p, {1, 1});     // x + 1
  auto [q, r] = cgt::poly_divmod(a, b);
  CHECK(cgt::poly_add(cgt::poly_mul(q, b), r) == a);
  FpPoly g = cgt::poly_gcd(cgt::poly_mul(a, b), b);
  CHECK(g == b.monic());
  // [[0,4],[1,0]] squares to -I over F_5, so x^2 + 1 annihilates it.
  CHECK(cgt::poly_eval(FpPoly(p, {1, 0, 1}), from_rows(p, {{0, 4}, {1, 0}}))
            .is_zero());
}

TEST_CASE("minimal polynomials of companion matrices") {
  unsigned p = 3;
  // Companion matrix of f(x) = x^3 + 2x + 1 (rows act on the right).
  FpPoly f(p, {1, 2, 0, 1});
  FpMatrix c(p, 3, 3);
  c.at(0, 1) = 1;
  c.at(1, 2) = 1;
  c.at(2, 0) = p - 1;  // -1
  c.at(2, 1) = p - 2;  // -2
  FpPoly mu = cgt::min_poly(c);
  CHECK(mu == f.monic());
  CHECK(cgt::poly_eval(mu, c).is_zero());

  CHECK(cgt::min_poly(FpMatrix::identity(7, 4)) == FpPoly(7, {6, 1}));
}

TEST_CASE("factoring recovers known factorizations") {
  SeedStream rng(99);
  unsigned p = 3;
  // x^4 - 1 = (x-1)(x+1)(x^2+1) over F_3.
  FpPoly f(p, {2, 0, 0, 0, 1});
  auto factors = cgt::distinct_irreducible_factors(f, rng);
  REQUIRE(factors.size() == 3);
  CHECK(factors[0] == FpPoly(p, {1, 1}));
  CHECK(factors[1] == FpPoly(p, {2, 1}));
  CHECK(factors[2] == FpPoly(p, {1, 0, 1}));

  // Repeated and p-th power factors collapse to the distinct list.
  FpPoly g = cgt::poly_mul(cgt::poly_mul(f, f), FpPoly(p, {1, 1}));
  auto factors2 = cgt::distinct_irreducible_factors(g, rng);
  CHECK(factors2 == factors);

  // Über F_2: x^6+x^5+x^4+x^3+x^2+x+1 = (x^3+x+1)(x^3+x^2+1).
  FpPoly h(2, {1, 1, 1, 1, 1, 1, 1});
  auto factors3 = cgt::distinct_irreducible_factors(h, rng);
  REQUIRE(factors3.size() == 2);
  CHECK(factors3[0] == FpPoly(2, {1, 0, 1, 1}));
  CHECK(factors3[1] == FpPoly(2, {1, 1, 0, 1}));
}

TEST_CASE("spin closes under the action") {
  unsigned p = 2;
  // Cyclic shift on three coordinates.
  FpMatrix shift = from_rows(p, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  cgt::RowSpace s = cgt::spin({shift}, p, 3, {{1, 0, 0}});
  CHECK(s.dim() == 3);
  cgt::RowSpace diag = cgt::spin({shift}, p, 3, {{1, 1, 1}});
  CHECK(diag.dim() == 1);
}

TEST_CASE("split finds submodules of decomposable actions") {
  SeedStream rng(5);
  // diag(1, 2) over F_3: both coordinate lines invariant.
  FpMatrix d = from_rows(3, {{1, 0}, {0, 2}});
  auto res = cgt::split_module({d}, 3, 2, rng);
  REQUIRE_FALSE(res.irreducible);
  CHECK(res.submodule.rows == 1);
  CHECK(invariant_under(res.submodule, {d}));

  // Swap on F_2^2: the diagonal is the unique proper submodule.
  FpMatrix swap2 = from_rows(2, {{0, 1}, {1, 0}});
  auto res2 = cgt::split_module({swap2}, 2, 2, rng);
  REQUIRE_FALSE(res2.irreducible);
  CHECK(res2.submodule.rows == 1);
  CHECK(res2.submodule.row(0) == std::vector<std::uint32_t>{1, 1});

  // Trivial action in dimension 3.
  auto res3 = cgt::split_module({FpMatrix::identity(5, 3)}, 5, 3, rng);
  REQUIRE_FALSE(res3.irreducible);
  CHECK(res3.submodule.rows < 3);
  CHECK(res3.submodule.rows >= 1);

  // Cyclic shift on F_2^3 = trivial + irreducible 2-dim.
  FpMatrix shift = from_rows(2, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  auto res4 = cgt::split_module({shift}, 2, 3, rng);
  REQUIRE_FALSE(res4.irreducible);
  CHECK(invariant_under(res4.submodule, {shift}));
}

TEST_CASE("split certifies irreducibility") {
  SeedStream rng(6);
  // Companion of x^2+x+1 over F_2: the field F_4 as a module over itself.
  FpMatrix c = from_rows(2, {{0, 1}, {1, 1}});
  CHECK(cgt::split_module({c}, 2, 2, rng).irreducible);

  // Standard 2-dimensional module of Sym(3) over F_5.
  FpMatrix r = from_rows(5, {{0, 1}, {4, 4}});   // rotation of order 3
  FpMatrix s = from_rows(5, {{0, 1}, {1, 0}});   // reflection
  CHECK(cgt::split_module({r, s}, 5, 2, rng).irreducible);

  // One-dimensional modules are always irreducible.
  CHECK(cgt::split_module({FpMatrix::identity(7, 1)}, 7, 1, rng).irreducible);
}

TEST_CASE("exhaustive search agrees with the randomized certificate") {
  SeedStream rng(7);
  FpMatrix c = from_rows(2, {{0, 1}, {1, 1}});
  CHECK_FALSE(cgt::find_submodule_exhaustive({c}, 2, 2).has_value());

  FpMatrix swap2 = from_rows(2, {{0, 1}, {1, 0}});
  auto sub = cgt::find_submodule_exhaustive({swap2}, 2, 2);
  REQUIRE(sub.has_value());
  CHECK(sub->row(0) == std::vector<std::uint32_t>{1, 1});

  FpMatrix r = from_rows(5, {{0, 1}, {4, 4}});
  FpMatrix s = from_rows(5, {{0, 1}, {1, 0}});
  CHECK_FALSE(cgt::find_submodule_exhaustive({r, s}, 5, 2).has_value());
}
