#include "cgt/meataxe.hpp"

#include "cgt/errors.hpp"

namespace cgt {

namespace {

constexpr int kSplitAttempts = 48;
constexpr std::uint64_t kExhaustiveLimit = 10'000;

FpMatrix random_algebra_element(const std::vector<FpMatrix>& action,
                                unsigned p, unsigned dim, SeedStream& rng) {
  FpMatrix theta(p, dim, dim);
  for (const FpMatrix& m : action) {
    theta = theta + m.scaled(static_cast<std::uint32_t>(rng.below(p)));
  }
  for (int k = 0; k < 2; ++k) {
    const FpMatrix& x = action[rng.below(action.size())];
    const FpMatrix& y = action[rng.below(action.size())];
    theta = theta + (x * y).scaled(static_cast<std::uint32_t>(rng.below(p)));
  }
  return theta;
}

FpMatrix orthogonal_complement(const RowSpace& space) {
  return left_nullspace(space.basis().transpose());
}

}  // namespace

std::optional<FpMatrix> find_submodule_exhaustive(
    const std::vector<FpMatrix>& action, unsigned p, unsigned dim) {
  // Enumerate projective representatives: first nonzero coordinate is 1.
  std::vector<std::uint32_t> v(dim, 0);
  while (true) {
    // Increment as a base-p counter.
    unsigned i = 0;
    while (i < dim && v[i] + 1 == p) v[i++] = 0;
    if (i == dim) return std::nullopt;
    ++v[i];
    unsigned lead = 0;
    while (lead < dim && v[lead] == 0) ++lead;
    if (lead == dim || v[lead] != 1) continue;  // scalar-multiple duplicate
    RowSpace spun = spin(action, p, dim, {v});
    if (spun.dim() < dim) return spun.basis();
  }
}

SplitResult split_module(const std::vector<FpMatrix>& action, unsigned p,
                         unsigned dim, SeedStream& rng) {
  check_invariant(dim >= 1, "zero module");
  if (dim == 1) return {true, {}};

  std::vector<FpMatrix> acting;
  FpMatrix id = FpMatrix::identity(p, dim);
  for (const FpMatrix& m : action) {
    check_invariant(m.rows == dim && m.cols == dim && m.p == p,
                    "action matrix shape");
    if (!(m == id)) acting.push_back(m);
  }
  if (acting.empty()) {
    // Trivial action: any coordinate line is invariant.
    FpMatrix sub(p, 1, dim);
    sub.at(0, 0) = 1;
    return {false, sub};
  }
  std::vector<FpMatrix> acting_t;
  for (const FpMatrix& m : acting) acting_t.push_back(m.transpose());

  for (int attempt = 0; attempt < kSplitAttempts; ++attempt) {
    FpMatrix theta = random_algebra_element(acting, p, dim, rng);
    FpPoly mu = min_poly(theta);
    if (mu.degree() < 1) continue;
    for (const FpPoly& f : distinct_irreducible_factors(mu, rng)) {
      FpMatrix nf = poly_eval(f, theta);
      FpMatrix ker = left_nullspace(nf);
      if (static_cast<int>(ker.rows) != f.degree()) continue;

      RowSpace spun = spin(acting, p, dim, {ker.row(0)});
      if (spun.dim() < dim) return {false, spun.basis()};

      FpMatrix ker_t = left_nullspace(nf.transpose());
      check_invariant(ker_t.rows >= 1, "dual kernel empty");
      RowSpace spun_t = spin(acting_t, p, dim, {ker_t.row(0)});
      if (spun_t.dim() < dim) return {false, orthogonal_complement(spun_t)};

      return {true, {}};
    }
  }

  Bigint size = 1;
  for (unsigned i = 0; i < dim; ++i) {
    size *= p;
    if (size > kExhaustiveLimit) {
      throw bound_error("module splitting budget exhausted");
    }
  }
  auto sub = find_submodule_exhaustive(acting, p, dim);
  if (sub) return {false, *sub};
  return {true, {}};
}

}  // namespace cgt
