#include "cgt/centralizer.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cgt/errors.hpp"
#include "cgt/fp_linalg.hpp"
#include "cgt/quotient.hpp"
#include "cgt/section_basis.hpp"
#include "cgt/structure.hpp"

namespace cgt {

namespace {

struct U32VecHash {
    std::size_t operator()(const std::vector<uint32_t>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (uint32_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Stabilizer of point 0 of an action of G given by generator images on m
// points, pulled back to G.  Uses a chain over the combined domain with the
// root action point first in the base.
PermGroup stabilizer_of_root(const PermGroup& G, const std::vector<Perm>& images, unsigned m) {
    const unsigned n = G.degree();
    const std::vector<Perm>& gens = G.generators();
    std::vector<Perm> diag;
    diag.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<uint32_t> img(n + m);
        for (uint32_t pt = 0; pt < n; ++pt) img[pt] = gens[i][pt];
        for (uint32_t pt = 0; pt < m; ++pt) img[n + pt] = n + images[i][pt];
        diag.push_back(Perm::from_images(std::move(img)));
    }
    PermGroup D = PermGroup::generated_with_base(n + m, diag, {n});
    check_invariant(D.order() == G.order(), "action images must define a homomorphism");
    std::vector<Perm> restricted;
    for (const Perm& s : D.prefix_stabilizer_gens(1)) {
        std::vector<uint32_t> img(n);
        for (uint32_t pt = 0; pt < n; ++pt) img[pt] = s[pt];
        restricted.push_back(Perm::from_images(std::move(img)));
    }
    if (restricted.empty()) return PermGroup::trivial(n);
    return PermGroup::generated(n, restricted);
}

// Stabilizer of the tuple of canonical A-cosets of B's generators under
// conjugation: exactly the elements with [g, B] <= A.  The orbit has size
// [G : C], which is what the bound caps.
PermGroup tuple_route(const PermGroup& G, const PermGroup& B, const PermGroup& A,
                      std::size_t bound) {
    const unsigned n = G.degree();
    PermGroup Anat =
        A.generators().empty() ? PermGroup::trivial(n) : PermGroup::generated(n, A.generators());
    const std::vector<Perm>& ggens = G.generators();

    std::vector<Perm> entry_base;
    for (const Perm& b : B.generators())
        if (!A.contains(b)) entry_base.push_back(b);
    check_invariant(!entry_base.empty(), "nontrivial section needs a generator outside the bottom");
    const std::size_t k = entry_base.size();

    std::vector<std::vector<Perm>> reps(k);
    std::vector<std::unordered_map<Perm, uint32_t, PermHash>> dict(k);
    std::vector<std::vector<std::vector<int32_t>>> img_cache(
        k, std::vector<std::vector<int32_t>>(ggens.size()));

    auto intern = [&](std::size_t i, Perm rep) -> uint32_t {
        auto it = dict[i].find(rep);
        if (it != dict[i].end()) return it->second;
        uint32_t id = static_cast<uint32_t>(reps[i].size());
        dict[i].emplace(rep, id);
        reps[i].push_back(std::move(rep));
        return id;
    };
    auto entry_image = [&](std::size_t i, uint32_t id, std::size_t gi) -> uint32_t {
        std::vector<int32_t>& cache = img_cache[i][gi];
        if (cache.size() < reps[i].size()) cache.resize(reps[i].size(), -1);
        if (cache[id] >= 0) return static_cast<uint32_t>(cache[id]);
        Perm moved = canonical_coset_rep(Anat, reps[i][id].conjugated_by(ggens[gi]));
        uint32_t nid = intern(i, std::move(moved));
        if (cache.size() < reps[i].size()) cache.resize(reps[i].size(), -1);
        cache[id] = static_cast<int32_t>(nid);
        return nid;
    };

    std::vector<uint32_t> root(k);
    for (std::size_t i = 0; i < k; ++i) root[i] = intern(i, canonical_coset_rep(Anat, entry_base[i]));

    std::unordered_map<std::vector<uint32_t>, uint32_t, U32VecHash> node_index;
    std::vector<std::vector<uint32_t>> nodes{root};
    node_index.emplace(root, 0);
    std::vector<std::vector<uint32_t>> images(ggens.size());

    for (std::size_t head = 0; head < nodes.size(); ++head) {
        for (std::size_t gi = 0; gi < ggens.size(); ++gi) {
            std::vector<uint32_t> next(k);
            for (std::size_t i = 0; i < k; ++i) next[i] = entry_image(i, nodes[head][i], gi);
            auto [it, fresh] = node_index.try_emplace(next, static_cast<uint32_t>(nodes.size()));
            if (fresh) {
                if (nodes.size() >= bound)
                    throw bound_error(
                        "section too large: conjugation orbit exceeds the materialization bound");
                nodes.push_back(it->first);
            }
            images[gi].push_back(it->second);
        }
    }

    const unsigned N = static_cast<unsigned>(nodes.size());
    std::vector<Perm> action;
    action.reserve(images.size());
    for (std::vector<uint32_t>& v : images) action.push_back(Perm::from_images(std::move(v)));
    PermGroup C = stabilizer_of_root(G, action, N);
    check_invariant(C.order() * N == G.order(),
                    "orbit-stabilizer accounting for the section centralizer");
    return C;
}

// Kernel of the conjugation action on an elementary abelian section, i.e.
// of the matrix representation G -> GL(d, p).
PermGroup matrix_route(const PermGroup& G, const SectionBasis& sb, std::size_t bound) {
    const std::vector<Perm>& ggens = G.generators();
    const unsigned d = sb.dim;
    const unsigned p = static_cast<unsigned>(sb.p);
    std::vector<FpMatrix> gm;
    gm.reserve(ggens.size());
    for (const Perm& g : ggens) gm.push_back(sb.action_matrix(g));

    // Union of the basis-vector orbits under the generator matrices: a
    // matrix fixing every vector here fixes a basis pointwise, so the kernel
    // of this permutation action is already the kernel of the whole
    // representation, at a fraction of the p^d module size.
    {
        std::unordered_map<std::vector<uint32_t>, uint32_t, U32VecHash> vindex;
        std::vector<std::vector<uint32_t>> vecs;
        for (unsigned i = 0; i < d; ++i) {
            std::vector<uint32_t> e(d, 0);
            e[i] = 1;
            if (vindex.try_emplace(e, static_cast<uint32_t>(vecs.size())).second)
                vecs.push_back(std::move(e));
        }
        std::vector<std::vector<uint32_t>> images(gm.size());
        bool fits = true;
        for (std::size_t head = 0; head < vecs.size() && fits; ++head) {
            const std::vector<uint32_t> cur = vecs[head];  // copy: vecs may reallocate
            for (std::size_t gi = 0; gi < gm.size(); ++gi) {
                std::vector<uint32_t> w = vec_mat(cur, gm[gi]);
                auto [it, fresh] = vindex.try_emplace(std::move(w), static_cast<uint32_t>(vecs.size()));
                if (fresh) {
                    if (vecs.size() >= bound) {
                        fits = false;
                        break;
                    }
                    vecs.push_back(it->first);
                }
                images[gi].push_back(it->second);
            }
        }
        if (fits) {
            std::vector<Perm> action;
            action.reserve(images.size());
            for (std::vector<uint32_t>& v : images) action.push_back(Perm::from_images(std::move(v)));
            return kernel_of_homomorphism(G, action, static_cast<unsigned>(vecs.size()));
        }
    }

    // Wild basis orbit: enumerate the image subgroup of GL(d, p) instead; its
    // size equals the index of the centralizer.  The kernel of the right
    // regular action of the image is exactly the centralizer preimage.
    std::unordered_map<std::vector<uint32_t>, uint32_t, U32VecHash> index;
    std::vector<FpMatrix> elems;
    FpMatrix id(p, d, d);
    for (unsigned i = 0; i < d; ++i) id.at(i, i) = 1;
    index.emplace(id.a, 0);
    elems.push_back(std::move(id));
    std::vector<std::vector<uint32_t>> images(gm.size());

    for (std::size_t head = 0; head < elems.size(); ++head) {
        const FpMatrix cur = elems[head];  // copy: elems may reallocate
        for (std::size_t gi = 0; gi < gm.size(); ++gi) {
            FpMatrix prod = cur * gm[gi];
            auto [it, fresh] = index.try_emplace(prod.a, static_cast<uint32_t>(elems.size()));
            if (fresh) {
                if (elems.size() >= bound ||
                    (elems.size() + 1) * static_cast<uint64_t>(d) * d > 50000000ull)
                    throw bound_error(
                        "section too large: matrix image exceeds the materialization bound");
                elems.push_back(std::move(prod));
            }
            images[gi].push_back(it->second);
        }
    }

    std::vector<Perm> action;
    action.reserve(images.size());
    for (std::vector<uint32_t>& v2 : images) action.push_back(Perm::from_images(std::move(v2)));
    return kernel_of_homomorphism(G, action, static_cast<unsigned>(elems.size()));
}

}  // namespace

PermGroup centralizer_of_section(const PermGroup& G, const PermGroup& B, const PermGroup& A,
                                 std::size_t bound) {
    require_input(G.degree() == B.degree() && G.degree() == A.degree(),
                  "section terms must share the ambient domain");
    require_input(B.contains_group(A), "section bottom must lie in the top");
    require_input(G.contains_group(B), "section top must lie in the ambient group");
    require_input(is_normal_in(A, G), "section bottom must be normal in the ambient group");
    require_input(is_normal_in(B, G), "section top must be normal in the ambient group");

    if (B.order() == A.order()) return G;

    if (join(derived_subgroup(B), A).order() == B.order()) {
        // Perfect section.  C_G(B/A) = C_G(P/M) where P is the perfect
        // residual of B and M is the stable term of L, [L,P], [[L,P],P], ...
        // with L = P meet A: modulo M the residue of L is hypercentral in P,
        // hence central (P is perfect), and a homomorphism argument promotes
        // centralizing mod L to centralizing mod M.
        PermGroup P = perfect_residual(B);
        PermGroup L = intersect_with_normal(P, A);
        PermGroup M = L;
        while (true) {
            PermGroup next = commutator_group(M, P, G);
            if (next.order() == M.order()) break;
            M = next;
        }
        if (M.is_trivial()) return intersect_with_normal(G, symmetric_centralizer(P));
        return tuple_route(G, P, M, bound);
    }

    if (uint64_t p = section_elementary_prime(B, A))
        return matrix_route(G, section_basis(B, A, p), bound);

    return tuple_route(G, B, A, bound);
}

}  // namespace cgt
