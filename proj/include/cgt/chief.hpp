#pragma once

#include <vector>

#include "cgt/perm_group.hpp"
#include "cgt/rng.hpp"
#include "cgt/simple_type.hpp"

namespace cgt {

// A chief series of `ambient` between terms.front() and terms.back(): every
// term is normal in ambient and no further ambient-normal subgroup fits
// between consecutive terms.  types[i] describes terms[i+1]/terms[i].
struct ChiefSeries {
  PermGroup ambient;
  std::vector<PermGroup> terms;
  std::vector<SimpleType> types;
};

// Isomorphism type of the chief factor B/A of G.
SimpleType identify_type(const PermGroup& G, const PermGroup& B,
                         const PermGroup& A, SeedStream& rng);

// A < result <= B with result/A minimal normal in B/A, found by randomized
// element closures.  Las Vegas: the result is always B-normal over A;
// minimality holds with high probability and callers cross-check where it
// matters.
PermGroup minimal_closure_over(const PermGroup& B, const PermGroup& A,
                               SeedStream& rng);

// All minimal normal subgroups of G/K as preimages.  Candidates come from
// generators, random draws, prime-power parts and pairwise products; the
// list is exhaustive with high probability and exact at oracle scale.
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& G,
                                                const PermGroup& K,
                                                SeedStream& rng);

// Chief series of G from K to G passing through the given subgroups, which
// must be normal in G, totally ordered by inclusion and contain K.
ChiefSeries chief_series(const PermGroup& G, const PermGroup& K,
                         const std::vector<PermGroup>& through,
                         SeedStream& rng);
ChiefSeries chief_series(const PermGroup& G, SeedStream& rng);

// Preimage of the largest normal subgroup of G/K whose composition factors
// all have type in sigma.
PermGroup o_sigma(const PermGroup& G, const PermGroup& K,
                  const TypePredicate& sigma, SeedStream& rng);

}  // namespace cgt
