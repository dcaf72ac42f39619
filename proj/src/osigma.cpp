#include "cgt/centralizer.hpp"
#include "cgt/chief.hpp"
#include "cgt/errors.hpp"
#include "cgt/structure.hpp"

namespace cgt {

namespace {

// Recursion on the quotient X = G/K.  A chief factor M/K with type in sigma
// sits inside the radical, and higher terms of the same series stay chief
// over the enlarged kernel, so one series is walked upward as long as its
// factors match.  Let T/M be the first factor outside sigma.  The radical
// meets the minimal normal subgroup T/M trivially, hence centralizes it,
// and the radical of C_X(T/M) (normal in X, so its radical is too) is the
// answer.  When even the centralizer is all of X, T/M is central of prime
// order outside sigma: the radical misses it, so it embeds into the radical
// over T; if that preimage P is proper, recurse inside it, and if P = X
// then every factor over T lies in sigma, so any second minimal normal
// subgroup over M restarts the walk, while a unique one forces the radical
// down to M.  `through` carries chief terms of G already known above K so
// that climbs along one tower do not re-refine the layers above.
PermGroup o_sigma_impl(const PermGroup& G, const PermGroup& K,
                       const TypePredicate& sigma, SeedStream& rng,
                       const std::vector<PermGroup>& through) {
  if (G.order() == K.order()) return K;
  ChiefSeries cs = chief_series(G, K, through, rng);
  std::size_t i = 0;
  while (i < cs.types.size() && sigma.matches(cs.types[i])) ++i;
  if (i == cs.types.size()) return G;
  const PermGroup& M = cs.terms[i];
  const PermGroup& T = cs.terms[i + 1];
  PermGroup C = centralizer_of_section(G, T, M);
  if (C.order() < G.order()) return o_sigma_impl(C, M, sigma, rng, {});
  std::vector<PermGroup> upper(cs.terms.begin() + i + 2, cs.terms.end() - 1);
  PermGroup P = o_sigma_impl(G, T, sigma, rng, upper);
  if (P.order() < G.order()) return o_sigma_impl(P, M, sigma, rng, {});
  // T = G leaves a single chief factor over M, so T is the only minimal
  // normal subgroup there and the hunt for a second one can be skipped.
  if (T.order() == G.order()) return M;
  for (const PermGroup& N : minimal_normal_subgroups(G, M, rng)) {
    if (N.same_group(T)) continue;
    check_invariant(sigma.matches(identify_type(G, N, M, rng)),
                    "second minimal normal subgroup must satisfy sigma");
    return o_sigma_impl(G, N, sigma, rng, {});
  }
  return M;
}

}  // namespace

PermGroup o_sigma(const PermGroup& G, const PermGroup& K,
                  const TypePredicate& sigma, SeedStream& rng) {
  require_input(K.degree() == G.degree(), "kernel degree mismatch");
  require_input(G.contains_group(K), "kernel outside the group");
  require_input(is_normal_in(K, G), "kernel must be normal");
  return o_sigma_impl(G, K, sigma, rng, {});
}

}  // namespace cgt
