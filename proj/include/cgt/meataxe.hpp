#pragma once

#include <optional>
#include <vector>

#include "cgt/fp_linalg.hpp"

namespace cgt {

struct SplitResult {
  bool irreducible = false;
  // When reducible: echelonized basis rows of a proper nonzero invariant
  // subspace.
  FpMatrix submodule;
};

// Decides irreducibility of the module F_p^dim under the right action of the
// given matrices, or exhibits a proper nonzero submodule.  Randomness comes
// only from the seed stream; the certificate logic is deterministic.  Falls
// back to exhaustive vector spinning for tiny modules; throws bound_error if
// the attempt budget runs out on a module too large for that.
SplitResult split_module(const std::vector<FpMatrix>& action, unsigned p,
                         unsigned dim, SeedStream& rng);

// Spins every projective point; usable as an oracle when p^dim is small.
std::optional<FpMatrix> find_submodule_exhaustive(
    const std::vector<FpMatrix>& action, unsigned p, unsigned dim);

}  // namespace cgt
