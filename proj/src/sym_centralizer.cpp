#include <algorithm>
#include <cstdint>
#include <vector>

#include "cgt/errors.hpp"
#include "cgt/perm_group.hpp"

namespace cgt {

namespace {

struct OrbitData {
    std::vector<uint32_t> points;   // BFS order, points[0] is the least point
    std::vector<uint32_t> parent;   // parallel to points; parent BFS index
    std::vector<uint32_t> gen;      // generator index used for the BFS edge
    std::vector<bool> stab_fixed;   // point -> fixed by Stab_P(points[0]) (global size)
};

// s(points[0]) = target, extended along BFS edges so that s commutes with
// every generator on this orbit.  Well defined because target is fixed by the
// stabilizer of the orbit root.
void propagate(const OrbitData& orb, const std::vector<Perm>& gens, uint32_t target,
               std::vector<uint32_t>& image) {
    image[orb.points[0]] = target;
    for (std::size_t i = 1; i < orb.points.size(); ++i) {
        uint32_t w = orb.points[orb.parent[i]];
        image[orb.points[i]] = gens[orb.gen[i]][image[w]];
    }
}

}  // namespace

PermGroup symmetric_centralizer(const PermGroup& P) {
    const unsigned n = P.degree();
    const std::vector<Perm>& gens = P.generators();

    // P-orbit decomposition with BFS spanning trees.
    std::vector<int> orbit_of(n, -1);
    std::vector<OrbitData> orbits;
    for (uint32_t start = 0; start < n; ++start) {
        if (orbit_of[start] >= 0) continue;
        OrbitData orb;
        orb.points.push_back(start);
        orb.parent.push_back(0);
        orb.gen.push_back(0);
        orbit_of[start] = static_cast<int>(orbits.size());
        for (std::size_t head = 0; head < orb.points.size(); ++head) {
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                uint32_t img = gens[gi][orb.points[head]];
                if (orbit_of[img] < 0) {
                    orbit_of[img] = static_cast<int>(orbits.size());
                    orb.points.push_back(img);
                    orb.parent.push_back(static_cast<uint32_t>(head));
                    orb.gen.push_back(static_cast<uint32_t>(gi));
                }
            }
        }
        // Points fixed by the stabilizer of the orbit root.
        PermGroup chain = PermGroup::generated_with_base(n, gens, {start});
        std::vector<Perm> stab = chain.prefix_stabilizer_gens(1);
        orb.stab_fixed.assign(n, true);
        for (const Perm& s : stab)
            for (uint32_t pt = 0; pt < n; ++pt)
                if (s[pt] != pt) orb.stab_fixed[pt] = false;
        orbits.push_back(std::move(orb));
    }

    std::vector<Perm> cgens;
    auto commutes = [&](const Perm& c) {
        for (const Perm& g : gens)
            if (c * g != g * c) return false;
        return true;
    };

    // Per-orbit constituent centralizers: one element per root-stabilizer
    // fixed point inside the orbit.
    for (const OrbitData& orb : orbits) {
        for (uint32_t y : orb.points) {
            if (y == orb.points[0] || !orb.stab_fixed[y]) continue;
            std::vector<uint32_t> image(n);
            for (uint32_t i = 0; i < n; ++i) image[i] = i;
            propagate(orb, gens, y, image);
            Perm c = Perm::from_images(image);
            check_invariant(commutes(c), "constituent centralizer element must commute");
            cgens.push_back(std::move(c));
        }
    }

    // Cross-orbit swaps between P-isomorphic orbits: class representative is
    // the first orbit of each isomorphism class; one swap per other member.
    std::vector<int> class_rep(orbits.size(), -1);
    for (std::size_t j = 0; j < orbits.size(); ++j) {
        for (std::size_t c = 0; c < j; ++c) {
            if (class_rep[c] != static_cast<int>(c)) continue;
            if (orbits[c].points.size() != orbits[j].points.size()) continue;
            // Isomorphic as P-sets iff the rep-stabilizer of one fixes a
            // point of the other.
            uint32_t target = UINT32_MAX;
            for (uint32_t y : orbits[j].points)
                if (orbits[c].stab_fixed[y]) { target = std::min(target, y); }
            if (target == UINT32_MAX) continue;
            class_rep[j] = static_cast<int>(c);
            std::vector<uint32_t> image(n);
            for (uint32_t i = 0; i < n; ++i) image[i] = i;
            propagate(orbits[c], gens, target, image);
            // Invert the O_c -> O_j map to act on O_j as well; the two
            // orbits are disjoint, so the writes never clobber the reads.
            for (uint32_t z : orbits[c].points) image[image[z]] = z;
            Perm s = Perm::from_images(image);
            check_invariant(commutes(s), "orbit swap element must commute");
            cgens.push_back(std::move(s));
            break;
        }
        if (class_rep[j] < 0) class_rep[j] = static_cast<int>(j);
    }

    if (cgens.empty()) return PermGroup::trivial(n);
    return PermGroup::generated(n, cgens);
}

}  // namespace cgt
