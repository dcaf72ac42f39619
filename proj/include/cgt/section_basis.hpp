#pragma once

#include <cstdint>
#include <vector>

#include "cgt/fp_linalg.hpp"
#include "cgt/perm_group.hpp"

namespace cgt {

// True iff all commutators of generators of B land in A, i.e. B/A abelian
// (A normal in B assumed).
bool section_abelian(const PermGroup& B, const PermGroup& A);

// If B/A is elementary abelian of order p^d, returns p; otherwise 0.
uint64_t section_elementary_prime(const PermGroup& B, const PermGroup& A);

// F_p-coordinates for an elementary abelian section B/A: a basis b_1..b_d
// together with the tail subgroups <A, b_{j+1}, ..., b_d> used to read off
// coordinates by membership tests.
struct SectionBasis {
    uint64_t p = 0;
    unsigned dim = 0;
    std::vector<Perm> basis;
    std::vector<PermGroup> tails;  // tails[j] = <A, b_{j+1}..b_d>; tails[dim] = A

    // Coordinates of x modulo A (x must lie in B).
    std::vector<uint32_t> coords(const Perm& x) const;
    // prod b_i^{v[i]}, a representative of the coordinate vector.
    Perm element(const std::vector<uint32_t>& v) const;
    // Conjugation action of g on B/A; row i holds coords(b_i^g).
    FpMatrix action_matrix(const Perm& g) const;
};

SectionBasis section_basis(const PermGroup& B, const PermGroup& A, uint64_t p);

}  // namespace cgt
