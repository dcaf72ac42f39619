#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cgt/bigint.hpp"
#include "cgt/rng.hpp"

namespace cgt {

// Dense matrix over the prime field F_p.  Vectors are rows and matrices act
// on the right, matching the right action used for permutations.
struct FpMatrix {
  unsigned p = 0;
  unsigned rows = 0;
  unsigned cols = 0;
  std::vector<std::uint32_t> a;  // row-major, entries reduced mod p

  FpMatrix() = default;
  FpMatrix(unsigned p_, unsigned r, unsigned c)
      : p(p_), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  static FpMatrix identity(unsigned p, unsigned n);

  std::uint32_t& at(unsigned r, unsigned c) {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
  std::uint32_t at(unsigned r, unsigned c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator+(const FpMatrix& rhs) const;
  FpMatrix scaled(std::uint32_t k) const;
  FpMatrix transpose() const;
  bool operator==(const FpMatrix& rhs) const = default;
  bool is_zero() const;
  std::vector<std::uint32_t> row(unsigned r) const;
};

std::vector<std::uint32_t> vec_mat(const std::vector<std::uint32_t>& v,
                                   const FpMatrix& m);

// Reduces m in place to row echelon form; returns the rank.
unsigned row_reduce(FpMatrix& m);

// Basis (as matrix rows) of { v : v * m = 0 }.
FpMatrix left_nullspace(const FpMatrix& m);

// Growing subspace of F_p^n with echelonized basis rows.
class RowSpace {
 public:
  RowSpace(unsigned p, unsigned n);
  // Returns true if the vector was independent of the current basis.
  bool add(std::vector<std::uint32_t> v);
  bool contains(std::vector<std::uint32_t> v) const;
  unsigned dim() const { return static_cast<unsigned>(rows_.size()); }
  unsigned ambient_dim() const { return n_; }
  FpMatrix basis() const;

 private:
  void reduce(std::vector<std::uint32_t>& v) const;
  unsigned p_, n_;
  std::vector<std::vector<std::uint32_t>> rows_;  // each with leading 1
  std::vector<unsigned> pivots_;
};

// Closure of the span of the seed rows under the action matrices.
RowSpace spin(const std::vector<FpMatrix>& action, unsigned p, unsigned n,
              const std::vector<std::vector<std::uint32_t>>& seeds);

// Polynomials over F_p, coefficient of x^i at index i, no trailing zeros.
struct FpPoly {
  unsigned p = 0;
  std::vector<std::uint32_t> c;

  FpPoly() = default;
  FpPoly(unsigned p_, std::vector<std::uint32_t> coeffs);
  static FpPoly zero(unsigned p) { return FpPoly(p, {}); }
  static FpPoly one(unsigned p) { return FpPoly(p, {1}); }
  static FpPoly x(unsigned p) { return FpPoly(p, {0, 1}); }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void normalize();
  FpPoly monic() const;
  bool operator==(const FpPoly& rhs) const = default;
};

FpPoly poly_add(const FpPoly& a, const FpPoly& b);
FpPoly poly_sub(const FpPoly& a, const FpPoly& b);
FpPoly poly_mul(const FpPoly& a, const FpPoly& b);
// Quotient and remainder by a nonzero divisor.
std::pair<FpPoly, FpPoly> poly_divmod(const FpPoly& a, const FpPoly& b);
FpPoly poly_mod(const FpPoly& a, const FpPoly& b);
FpPoly poly_gcd(FpPoly a, FpPoly b);  // monic
FpPoly poly_lcm(const FpPoly& a, const FpPoly& b);
FpPoly poly_derivative(const FpPoly& a);
// base^e mod m
FpPoly poly_powmod(FpPoly base, Bigint e, const FpPoly& m);
FpMatrix poly_eval(const FpPoly& f, const FpMatrix& m);

// Minimal polynomial of a square matrix (deterministic, exact).
FpPoly min_poly(const FpMatrix& m);

// Distinct monic irreducible factors, in a deterministic order given the
// seed stream (used only inside equal-degree splitting).
std::vector<FpPoly> distinct_irreducible_factors(FpPoly f, SeedStream& rng);

}  // namespace cgt
