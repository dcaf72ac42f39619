#include "cgt/fp_linalg.hpp"

#include <algorithm>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

std::uint32_t inv_mod(std::uint32_t a, unsigned p) {
  // Fermat; p is prime and a nonzero mod p.
  std::uint64_t base = a % p, acc = 1;
  unsigned e = p - 2;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

FpMatrix FpMatrix::identity(unsigned p, unsigned n) {
  FpMatrix m(p, n, n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  check_invariant(cols == rhs.rows && p == rhs.p, "matrix product shape");
  FpMatrix out(p, rows, rhs.cols);
  for (unsigned i = 0; i < rows; ++i) {
    for (unsigned k = 0; k < cols; ++k) {
      std::uint64_t v = at(i, k);
      if (!v) continue;
      for (unsigned j = 0; j < rhs.cols; ++j) {
        out.at(i, j) =
            static_cast<std::uint32_t>((out.at(i, j) + v * rhs.at(k, j)) % p);
      }
    }
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
  check_invariant(rows == rhs.rows && cols == rhs.cols && p == rhs.p,
                  "matrix sum shape");
  FpMatrix out(p, rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.a[i] = (a[i] + rhs.a[i]) % p;
  }
  return out;
}

FpMatrix FpMatrix::scaled(std::uint32_t k) const {
  FpMatrix out(p, rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.a[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[i]) * k % p);
  }
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(p, cols, rows);
  for (unsigned i = 0; i < rows; ++i) {
    for (unsigned j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

bool FpMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t x) { return !x; });
}

std::vector<std::uint32_t> FpMatrix::row(unsigned r) const {
  return {a.begin() + static_cast<std::size_t>(r) * cols,
          a.begin() + static_cast<std::size_t>(r + 1) * cols};
}

std::vector<std::uint32_t> vec_mat(const std::vector<std::uint32_t>& v,
                                   const FpMatrix& m) {
  check_invariant(v.size() == m.rows, "vector length");
  std::vector<std::uint32_t> out(m.cols, 0);
  for (unsigned k = 0; k < m.rows; ++k) {
    std::uint64_t c = v[k];
    if (!c) continue;
    for (unsigned j = 0; j < m.cols; ++j) {
      out[j] = static_cast<std::uint32_t>((out[j] + c * m.at(k, j)) % m.p);
    }
  }
  return out;
}

unsigned row_reduce(FpMatrix& m) {
  unsigned rank = 0;
  for (unsigned col = 0; col < m.cols && rank < m.rows; ++col) {
    unsigned pivot = rank;
    while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    for (unsigned j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
    std::uint32_t inv = inv_mod(m.at(rank, col), m.p);
    for (unsigned j = 0; j < m.cols; ++j) {
      m.at(rank, j) = static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(m.at(rank, j)) * inv % m.p);
    }
    for (unsigned i = 0; i < m.rows; ++i) {
      if (i == rank || m.at(i, col) == 0) continue;
      std::uint64_t f = m.p - m.at(i, col);
      for (unsigned j = 0; j < m.cols; ++j) {
        m.at(i, j) = static_cast<std::uint32_t>(
            (m.at(i, j) + f * m.at(rank, j)) % m.p);
      }
    }
    ++rank;
  }
  return rank;
}

FpMatrix left_nullspace(const FpMatrix& m) {
  FpMatrix t = m.transpose();
  unsigned rank = row_reduce(t);
  // Columns of t (= rows of m's domain) split into pivot and free.
  std::vector<int> pivot_of_col(t.cols, -1);
  {
    unsigned r = 0;
    for (unsigned c = 0; c < t.cols && r < rank; ++c) {
      if (t.at(r, c) == 1) {
        bool is_pivot = true;
        for (unsigned rr = 0; rr < rank; ++rr) {
          if (rr != r && t.at(rr, c) != 0) is_pivot = false;
        }
        // The first nonzero entry of row r marks its pivot column.
        unsigned lead = 0;
        while (lead < t.cols && t.at(r, lead) == 0) ++lead;
        if (lead == c && is_pivot) {
          pivot_of_col[c] = static_cast<int>(r);
          ++r;
        }
      }
    }
  }
  FpMatrix out(m.p, t.cols - rank, t.cols);
  unsigned idx = 0;
  for (unsigned c = 0; c < t.cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    // Free column c: x_c = 1, pivot columns solve to cancel.
    out.at(idx, c) = 1;
    for (unsigned cc = 0; cc < t.cols; ++cc) {
      if (pivot_of_col[cc] >= 0) {
        std::uint32_t v = t.at(static_cast<unsigned>(pivot_of_col[cc]), c);
        if (v) out.at(idx, cc) = m.p - v;
      }
    }
    ++idx;
  }
  check_invariant(idx == out.rows, "nullspace dimension");
  return out;
}

RowSpace::RowSpace(unsigned p, unsigned n) : p_(p), n_(n) {}

void RowSpace::reduce(std::vector<std::uint32_t>& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint32_t c = v[pivots_[i]];
    if (!c) continue;
    std::uint64_t f = p_ - c;
    const auto& r = rows_[i];
    for (unsigned j = 0; j < n_; ++j) {
      v[j] = static_cast<std::uint32_t>((v[j] + f * r[j]) % p_);
    }
  }
}

bool RowSpace::add(std::vector<std::uint32_t> v) {
  check_invariant(v.size() == n_, "row length");
  for (auto& x : v) x %= p_;
  reduce(v);
  unsigned lead = 0;
  while (lead < n_ && v[lead] == 0) ++lead;
  if (lead == n_) return false;
  std::uint32_t inv = inv_mod(v[lead], p_);
  for (auto& x : v) {
    x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * inv % p_);
  }
  // Back-substitute into existing rows to keep the basis fully reduced.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint32_t c = rows_[i][lead];
    if (!c) continue;
    std::uint64_t f = p_ - c;
    for (unsigned j = 0; j < n_; ++j) {
      rows_[i][j] =
          static_cast<std::uint32_t>((rows_[i][j] + f * v[j]) % p_);
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(lead);
  return true;
}

bool RowSpace::contains(std::vector<std::uint32_t> v) const {
  for (auto& x : v) x %= p_;
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return !x; });
}

FpMatrix RowSpace::basis() const {
  FpMatrix out(p_, dim(), n_);
  // Rows sorted by pivot for a stable echelon presentation.
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (unsigned j = 0; j < n_; ++j) out.at(static_cast<unsigned>(i), j) = rows_[order[i]][j];
  }
  return out;
}

RowSpace spin(const std::vector<FpMatrix>& action, unsigned p, unsigned n,
              const std::vector<std::vector<std::uint32_t>>& seeds) {
  RowSpace space(p, n);
  std::vector<std::vector<std::uint32_t>> work;
  for (const auto& s : seeds) {
    if (space.add(s)) work.push_back(s);
  }
  while (!work.empty()) {
    auto v = std::move(work.back());
    work.pop_back();
    for (const FpMatrix& m : action) {
      auto w = vec_mat(v, m);
      if (space.add(w)) work.push_back(std::move(w));
    }
  }
  return space;
}

FpPoly::FpPoly(unsigned p_, std::vector<std::uint32_t> coeffs)
    : p(p_), c(std::move(coeffs)) {
  for (auto& x : c) x %= p;
  normalize();
}

void FpPoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

FpPoly FpPoly::monic() const {
  if (is_zero() || c.back() == 1) return *this;
  FpPoly out = *this;
  std::uint32_t inv = inv_mod(c.back(), p);
  for (auto& x : out.c) {
    x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * inv % p);
  }
  return out;
}

FpPoly poly_add(const FpPoly& a, const FpPoly& b) {
  FpPoly out(a.p, {});
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] = (out.c[i] + b.c[i]) % a.p;
  out.normalize();
  return out;
}

FpPoly poly_sub(const FpPoly& a, const FpPoly& b) {
  FpPoly out(a.p, {});
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) {
    out.c[i] = (out.c[i] + a.p - b.c[i]) % a.p;
  }
  out.normalize();
  return out;
}

FpPoly poly_mul(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.p);
  FpPoly out(a.p, {});
  out.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      out.c[i + j] = static_cast<std::uint32_t>(
          (out.c[i + j] + static_cast<std::uint64_t>(a.c[i]) * b.c[j]) % a.p);
    }
  }
  out.normalize();
  return out;
}

std::pair<FpPoly, FpPoly> poly_divmod(const FpPoly& a, const FpPoly& b) {
  check_invariant(!b.is_zero(), "polynomial division by zero");
  unsigned p = a.p;
  if (a.degree() < b.degree()) return {FpPoly::zero(p), a};
  std::vector<std::uint32_t> rem = a.c;
  std::vector<std::uint32_t> quot(a.degree() - b.degree() + 1, 0);
  std::uint32_t lead_inv = inv_mod(b.c.back(), p);
  for (int i = a.degree(); i >= b.degree(); --i) {
    std::uint32_t coef = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(rem[i]) * lead_inv % p);
    if (!coef) continue;
    quot[i - b.degree()] = coef;
    for (int j = 0; j <= b.degree(); ++j) {
      auto& r = rem[i - b.degree() + j];
      r = static_cast<std::uint32_t>(
          (r + static_cast<std::uint64_t>(p - coef) * b.c[j]) % p);
    }
  }
  return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

FpPoly poly_mod(const FpPoly& a, const FpPoly& b) {
  return poly_divmod(a, b).second;
}

FpPoly poly_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly poly_lcm(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.p);
  FpPoly g = poly_gcd(a, b);
  return poly_divmod(poly_mul(a, b), g).first.monic();
}

FpPoly poly_derivative(const FpPoly& a) {
  FpPoly out(a.p, {});
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    out.c.push_back(static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a.c[i]) * (i % a.p) % a.p));
  }
  out.normalize();
  return out;
}

FpPoly poly_powmod(FpPoly base, Bigint e, const FpPoly& m) {
  FpPoly acc = FpPoly::one(base.p);
  base = poly_mod(base, m);
  while (e > 0) {
    if ((e & 1) != 0) acc = poly_mod(poly_mul(acc, base), m);
    base = poly_mod(poly_mul(base, base), m);
    e >>= 1;
  }
  return acc;
}

FpMatrix poly_eval(const FpPoly& f, const FpMatrix& m) {
  FpMatrix acc(m.p, m.rows, m.cols);
  for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) {
    acc = acc * m;
    for (unsigned i = 0; i < m.rows; ++i) {
      acc.at(i, i) = (acc.at(i, i) + *it) % m.p;
    }
  }
  return acc;
}

namespace {

// Minimal polynomial of the action of m on the cyclic space generated by v.
FpPoly local_min_poly(const FpMatrix& m, std::vector<std::uint32_t> v) {
  unsigned p = m.p, n = m.rows;
  // Echelon rows augmented with coordinates in the Krylov vectors.
  std::vector<std::vector<std::uint32_t>> ech;      // length n
  std::vector<std::vector<std::uint32_t>> coords;   // length = step count
  std::vector<unsigned> pivots;
  std::vector<std::uint32_t> cur = std::move(v);
  for (unsigned step = 0;; ++step) {
    std::vector<std::uint32_t> red = cur;
    std::vector<std::uint32_t> combo(step + 1, 0);
    combo[step] = 1;
    for (std::size_t i = 0; i < ech.size(); ++i) {
      std::uint32_t c = red[pivots[i]];
      if (!c) continue;
      std::uint64_t f = p - c;
      for (unsigned j = 0; j < n; ++j) {
        red[j] = static_cast<std::uint32_t>((red[j] + f * ech[i][j]) % p);
      }
      for (std::size_t j = 0; j < coords[i].size(); ++j) {
        combo[j] = static_cast<std::uint32_t>((combo[j] + f * coords[i][j]) % p);
      }
    }
    unsigned lead = 0;
    while (lead < n && red[lead] == 0) ++lead;
    if (lead == n) {
      // 0 = k_step + sum_{j<step} combo[j] k_j with k_j = v m^j, so the
      // local minimal polynomial is x^step + sum combo[j] x^j.
      FpPoly out(p, {});
      out.c.assign(step + 1, 0);
      out.c[step] = 1;
      for (unsigned j = 0; j < step; ++j) out.c[j] = combo[j];
      out.normalize();
      return out;
    }
    std::uint32_t inv = inv_mod(red[lead], p);
    for (auto& x : red) {
      x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * inv % p);
    }
    for (auto& x : combo) {
      x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * inv % p);
    }
    ech.push_back(std::move(red));
    coords.push_back(std::move(combo));
    pivots.push_back(lead);
    cur = vec_mat(cur, m);
  }
}

}  // namespace

FpPoly min_poly(const FpMatrix& m) {
  check_invariant(m.rows == m.cols, "min_poly needs a square matrix");
  unsigned n = m.rows;
  FpPoly acc = FpPoly::one(m.p);
  for (unsigned i = 0; i < n; ++i) {
    std::vector<std::uint32_t> e(n, 0);
    e[i] = 1;
    acc = poly_lcm(acc, local_min_poly(m, std::move(e)));
    if (acc.degree() == static_cast<int>(n)) break;  // cannot grow further
  }
  check_invariant(poly_eval(acc, m).is_zero(), "minimal polynomial check");
  return acc;
}

namespace {

void equal_degree_split(const FpPoly& f, unsigned d, SeedStream& rng,
                        std::vector<FpPoly>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f.monic());
    return;
  }
  unsigned p = f.p;
  while (true) {
    // Random polynomial of degree < deg f.
    std::vector<std::uint32_t> rc(f.degree(), 0);
    for (auto& x : rc) x = static_cast<std::uint32_t>(rng.below(p));
    FpPoly a(p, std::move(rc));
    if (a.is_zero()) continue;
    FpPoly t;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      FpPoly acc = a, term = a;
      for (unsigned i = 1; i < d; ++i) {
        term = poly_mod(poly_mul(term, term), f);
        acc = poly_add(acc, term);
      }
      t = acc;
    } else {
      Bigint e = 1;
      for (unsigned i = 0; i < d; ++i) e *= p;
      e = (e - 1) / 2;
      FpPoly b = poly_powmod(a, e, f);
      t = poly_sub(b, FpPoly::one(p));
    }
    FpPoly g = poly_gcd(t, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(poly_divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

namespace {

// Distinct-degree then equal-degree splitting; f must be squarefree.
void squarefree_factor(FpPoly f, SeedStream& rng, std::vector<FpPoly>& out) {
  unsigned p = f.p;
  FpPoly rest = f.monic();
  FpPoly xp = FpPoly::x(p);  // x^(p^d) mod rest, updated per degree
  for (unsigned d = 1; rest.degree() >= 1; ++d) {
    if (rest.degree() < static_cast<int>(2 * d)) {
      out.push_back(rest.monic());
      break;
    }
    xp = poly_powmod(xp, p, rest);
    FpPoly diff = poly_sub(xp, FpPoly::x(p));
    FpPoly g = poly_gcd(diff, rest);
    if (g.degree() > 0) {
      equal_degree_split(g, d, rng, out);
      rest = poly_divmod(rest, g).first;
      xp = poly_mod(xp, rest);
    }
  }
}

// Every irreducible factor of f divides (f / gcd(f, f')) * gcd(f, f'), and
// the first factor there is squarefree, so recursing on the gcd term finds
// everything.  A vanishing derivative means f is a p-th power with the same
// coefficient list spread out by p.
void collect_factors(FpPoly f, SeedStream& rng, std::vector<FpPoly>& out) {
  if (f.degree() <= 0) return;
  unsigned p = f.p;
  f = f.monic();
  FpPoly d = poly_derivative(f);
  if (d.is_zero()) {
    std::vector<std::uint32_t> root;
    for (std::size_t i = 0; i < f.c.size(); i += p) root.push_back(f.c[i]);
    collect_factors(FpPoly(p, std::move(root)), rng, out);
    return;
  }
  FpPoly g = poly_gcd(f, d);
  squarefree_factor(poly_divmod(f, g).first, rng, out);
  collect_factors(std::move(g), rng, out);
}

}  // namespace

std::vector<FpPoly> distinct_irreducible_factors(FpPoly f, SeedStream& rng) {
  check_invariant(!f.is_zero() && f.degree() >= 1, "factoring a constant");
  std::vector<FpPoly> out;
  collect_factors(std::move(f), rng, out);
  std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c < b.c;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cgt
