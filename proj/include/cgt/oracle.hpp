#pragma once

#include <cstddef>
#include <vector>

#include "cgt/chief.hpp"
#include "cgt/formation.hpp"
#include "cgt/perm_group.hpp"
#include "cgt/rng.hpp"

namespace cgt {

// Every normal subgroup of a small group.  Normal subgroups are exactly the
// subgroups generated by unions of conjugacy classes, which keeps the
// enumeration independent of the series machinery being verified.
struct NormalLattice {
  PermGroup group;
  std::vector<PermGroup> subgroups;         // ascending by order
  std::vector<std::vector<bool>> contains;  // contains[i][j]: i-th >= j-th
};

// Order ceiling for oracle enumeration; the environment variable
// CGT_ORACLE_BOUND overrides the default of 5000.
std::size_t oracle_order_bound();

// All normal subgroups by breadth-first closure over conjugacy-class
// unions.  Refuses groups above the order bound and lattices beyond 512
// members.  The result is checked to contain the trivial subgroup and the
// whole group and to be closed under pairwise meets and joins.
NormalLattice normal_subgroups(const PermGroup& G,
                               std::size_t max_order = oracle_order_bound());

// Largest normal subgroup lying in the formation, found by testing every
// lattice member.  Two incomparable maximal members raise an invariant
// error ("class not Fitting on this instance").
PermGroup radical_oracle(const PermGroup& G, const Formation& f,
                         const NormalLattice& lat, SeedStream& rng);

// Largest normal subgroup all of whose composition factors satisfy sigma.
PermGroup esigma_radical_oracle(const PermGroup& G, const TypePredicate& sigma,
                                const NormalLattice& lat);

// Composition factor types by maximal-normal descent, one lattice per
// step.  Nonabelian types are resolved by order lookup, which is
// unambiguous below the oracle bound.
std::vector<SimpleType> composition_factors_oracle(const PermGroup& G);

// True iff the terms are lattice members in increasing order with no
// strictly intermediate member between consecutive ones.
bool verify_chief(const ChiefSeries& series, const NormalLattice& lat);

}  // namespace cgt
