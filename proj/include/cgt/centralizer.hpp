#pragma once

#include <cstddef>

#include "cgt/perm_group.hpp"

namespace cgt {

// Default ceiling for any coset/orbit/image materialization performed while
// computing section centralizers.
inline constexpr std::size_t kMaterializeBound = 100000;

// Preimage of C_{G/A}(B/A): all g in G with [g, b] in A for every b in B.
// Requires A <= B <= G with A and B normal in G.
//
// Strategy: trivial section -> G; perfect section -> reduce to C_G(P/M) for
// the perfect residual P of B and the stable term M of [.., P] starting at
// P meet A (equal centralizers), computed via the symmetric-group centralizer
// when M = 1; elementary abelian section -> kernel of the matrix action,
// through the vectors themselves when p^d is small and through the image
// subgroup of GL(d, p) otherwise; remaining sections -> stabilizer of the
// tuple of generator cosets under conjugation.  Every enumeration is capped
// by `bound` and overflows raise bound_error("section too large: ...").
PermGroup centralizer_of_section(const PermGroup& G, const PermGroup& B, const PermGroup& A,
                                 std::size_t bound = kMaterializeBound);

}  // namespace cgt
