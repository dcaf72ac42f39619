#include "cgt/section_basis.hpp"

#include <utility>

#include "cgt/errors.hpp"
#include "cgt/section.hpp"

namespace cgt {

bool section_abelian(const PermGroup& B, const PermGroup& A) {
    const std::vector<Perm>& gens = B.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!A.contains(commutator(gens[i], gens[j]))) return false;
    return true;
}

uint64_t section_elementary_prime(const PermGroup& B, const PermGroup& A) {
    Factored q = factored_div(B.order_factored(), A.order_factored());
    if (q.size() != 1) return 0;
    uint64_t p = q.begin()->first;
    if (!section_abelian(B, A)) return 0;
    for (const Perm& g : B.generators())
        if (!A.contains(g.power(p))) return 0;
    return p;
}

std::vector<uint32_t> SectionBasis::coords(const Perm& x) const {
    std::vector<uint32_t> v(dim, 0);
    Perm rest = x;
    for (unsigned j = 0; j < dim; ++j) {
        const PermGroup& tail = tails[j + 1];
        const Perm binv = basis[j].inverse();
        uint32_t e = 0;
        Perm probe = rest;
        while (e < p && !tail.contains(probe)) {
            probe = probe * binv;
            ++e;
        }
        check_invariant(e < p, "coordinate extraction fell through; element outside the section");
        v[j] = e;
        rest = probe;
    }
    return v;
}

Perm SectionBasis::element(const std::vector<uint32_t>& v) const {
    check_invariant(v.size() == dim, "coordinate vector has the wrong length");
    Perm x(tails.back().degree());
    for (unsigned j = 0; j < dim; ++j) x = x * basis[j].power(v[j]);
    return x;
}

FpMatrix SectionBasis::action_matrix(const Perm& g) const {
    FpMatrix m(static_cast<unsigned>(p), dim, dim);
    for (unsigned i = 0; i < dim; ++i) {
        std::vector<uint32_t> row = coords(basis[i].conjugated_by(g));
        for (unsigned j = 0; j < dim; ++j) m.at(i, j) = row[j];
    }
    return m;
}

SectionBasis section_basis(const PermGroup& B, const PermGroup& A, uint64_t p) {
    const unsigned n = B.degree();
    SectionBasis sb;
    sb.p = p;

    std::vector<Perm> picked;
    std::vector<Perm> span_gens = A.generators();
    PermGroup span = span_gens.empty() ? PermGroup::trivial(n) : PermGroup::generated(n, span_gens);
    for (const Perm& g : B.generators()) {
        if (span.contains(g)) continue;
        picked.push_back(g);
        span_gens.push_back(g);
        span = PermGroup::generated(n, span_gens);
    }
    check_invariant(span.order() == B.order(), "basis span must reach the whole section");
    sb.dim = static_cast<unsigned>(picked.size());
    sb.basis = picked;

    // tails[j] = <A, b_{j+1}, ..., b_d>, built from the bottom up.
    sb.tails.assign(sb.dim + 1, PermGroup());
    sb.tails[sb.dim] = A;
    std::vector<Perm> tail_gens = A.generators();
    for (unsigned j = sb.dim; j-- > 0;) {
        tail_gens.push_back(sb.basis[j]);
        sb.tails[j] = PermGroup::generated(n, tail_gens);
    }

    // Each basis element adds exactly one F_p-dimension.
    Bigint expect = A.order();
    for (unsigned j = sb.dim; j-- > 0;) {
        expect *= p;
        check_invariant(sb.tails[j].order() == expect, "section basis is not independent");
    }
    return sb;
}

}  // namespace cgt
