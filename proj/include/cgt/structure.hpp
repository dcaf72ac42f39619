#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cgt/perm_group.hpp"

namespace cgt {

// <seed>^G together with A, where A is already known to be G-invariant.
// Conjugates of A's generators are never enqueued.  If stop_at_order is
// given and the closure provably reaches that order, it returns early; the
// early result is exact when the bound is the order of a group containing
// the closure, and otherwise only its order matters: it reports at least
// the bound, so incumbent-probing callers discard it either way.
PermGroup normal_closure(const PermGroup& G, const PermGroup& A,
                         const std::vector<Perm>& seed,
                         const std::optional<Bigint>& stop_at_order = {});

PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& seed);

PermGroup join(const PermGroup& A, const PermGroup& B);

// [A, B]^ambient; the ambient group must normalize the commutator group,
// which holds whenever it normalizes A and B.
PermGroup commutator_group(const PermGroup& A, const PermGroup& B,
                           const PermGroup& ambient);

PermGroup derived_subgroup(const PermGroup& G);

// G > G' > G'' > ... down to the first repetition (inclusive of the stable
// term, exclusive of the repeat).
std::vector<PermGroup> derived_series(const PermGroup& G);

// Last term of the derived series: trivial iff G is soluble.
PermGroup perfect_residual(const PermGroup& G);

bool is_normal_in(const PermGroup& H, const PermGroup& G);

// H intersect A by aligned-base backtrack search.  Requires A normal in
// <H, A> (which makes the order of the intersection known in advance and
// bounds the search).  Throws bound_error when the node budget is exhausted.
PermGroup intersect_with_normal(const PermGroup& H, const PermGroup& A);

}  // namespace cgt
