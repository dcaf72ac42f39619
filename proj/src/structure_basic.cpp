#include <algorithm>
#include <deque>

#include "cgt/errors.hpp"
#include "cgt/stats.hpp"
#include "cgt/structure.hpp"

namespace cgt {

namespace {
constexpr std::uint64_t kBacktrackBudget = 2'000'000;
}

PermGroup normal_closure(const PermGroup& G, const PermGroup& A,
                         const std::vector<Perm>& seed,
                         const std::optional<Bigint>& stop_at_order) {
  unsigned n = G.degree();
  ChainBuilder b(n);
  for (const Perm& g : A.generators()) b.add(g);
  std::deque<Perm> work;
  for (const Perm& s : seed) {
    require_input(s.degree() == n, "seed degree mismatch");
    if (b.add(s)) work.push_back(s);
  }
  std::vector<Perm> inv;
  for (const Perm& g : G.generators()) inv.push_back(g.inverse());
  while (!work.empty()) {
    // The orbit product never exceeds the closure's order, so reaching the
    // bound makes the completion sweep pointless: the result is exact when
    // the bound is the order of a group containing the closure, and
    // otherwise a witness that the closure has order at least the bound,
    // which is all a caller probing against an incumbent needs.
    if (stop_at_order && b.orbit_product() >= *stop_at_order) {
      return b.finish_partial();
    }
    Perm x = std::move(work.front());
    work.pop_front();
    for (std::size_t i = 0; i < G.generators().size(); ++i) {
      Perm c = inv[i] * x * G.generators()[i];
      if (b.add(c)) work.push_back(std::move(c));
    }
  }
  return b.finish();
}

PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& seed) {
  return normal_closure(G, PermGroup::trivial(G.degree()), seed);
}

PermGroup join(const PermGroup& A, const PermGroup& B) {
  require_input(A.degree() == B.degree(), "join: degree mismatch");
  std::vector<Perm> gens = A.generators();
  gens.insert(gens.end(), B.generators().begin(), B.generators().end());
  return PermGroup::generated(A.degree(), gens);
}

PermGroup commutator_group(const PermGroup& A, const PermGroup& B,
                           const PermGroup& ambient) {
  std::vector<Perm> seed;
  for (const Perm& a : A.generators()) {
    for (const Perm& b : B.generators()) {
      Perm c = commutator(a, b);
      if (!c.is_identity()) seed.push_back(std::move(c));
    }
  }
  return normal_closure(ambient, seed);
}

PermGroup derived_subgroup(const PermGroup& G) {
  return commutator_group(G, G, G);
}

std::vector<PermGroup> derived_series(const PermGroup& G) {
  std::vector<PermGroup> series{G};
  while (true) {
    PermGroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
    if (series.back().is_trivial()) break;
  }
  return series;
}

PermGroup perfect_residual(const PermGroup& G) {
  return derived_series(G).back();
}

bool is_normal_in(const PermGroup& H, const PermGroup& G) {
  for (const Perm& g : G.generators()) {
    for (const Perm& h : H.generators()) {
      if (!H.contains(h.conjugated_by(g))) return false;
    }
  }
  return true;
}

namespace {

// Depth-first search for elements of H that lie in A, with both chains
// aligned on H's full base.  The per-position test is exact: a node at depth
// j survives iff some element of A realizes the chosen base images, so every
// completed leaf lies in H and in A.  Each sweep stops at the first leaf
// that enlarges the found subgroup and restarts; at the root only points
// minimal in their orbit under the found subgroup are explored, which stays
// complete because a missing element can be translated by a found one.
struct MeetSearch {
  const PermGroup& H;
  PermGroup Ab;  // A rebuilt on H's full base
  unsigned n;
  Bigint target;
  ChainBuilder found;
  std::vector<Perm> found_gens;
  std::uint64_t nodes = 0;

  MeetSearch(const PermGroup& h, const PermGroup& a, Bigint t)
      : H(h),
        Ab(PermGroup::generated_with_base(a.degree(), a.generators(),
                                          h.full_base())),
        n(h.degree()),
        target(std::move(t)),
        found(h.degree()) {}

  bool seed(const Perm& g) {
    if (!found.add(g)) return false;
    found_gens.push_back(g);
    return true;
  }

  bool root_minimal(std::uint32_t delta) const {
    std::vector<std::uint32_t> orb{delta};
    for (std::size_t i = 0; i < orb.size(); ++i) {
      for (const Perm& g : found_gens) {
        std::uint32_t q = g[orb[i]];
        if (q < delta) return false;
        if (std::find(orb.begin(), orb.end(), q) == orb.end()) orb.push_back(q);
      }
    }
    return true;
  }

  // T: the partial product; sigma = T * a^{-1} for an A-element realizing
  // the current prefix images.  Returns true once a new element is found.
  bool descend(std::size_t pos, const Perm& T, const Perm& sigma) {
    if (++nodes > kBacktrackBudget) {
      throw bound_error("intersection backtrack budget exhausted");
    }
    stats().backtrack_nodes.fetch_add(1, std::memory_order_relaxed);
    if (pos == n) {
      check_invariant(sigma.is_identity(),
                      "intersection leaf failed to land in the subgroup");
      return seed(T);
    }
    for (std::uint32_t delta : H.orbit_at(pos)) {
      if (pos == 0 && !root_minimal(delta)) continue;
      std::uint32_t eps = sigma[delta];
      if (!Ab.in_orbit_at(pos, eps)) continue;
      Perm uh = H.transversal_at(pos, delta);
      Perm ua_inv = Ab.transversal_at(pos, eps).inverse();
      if (descend(pos + 1, uh * T, uh * sigma * ua_inv)) return true;
    }
    return false;
  }
};

}  // namespace

PermGroup intersect_with_normal(const PermGroup& H, const PermGroup& A) {
  require_input(H.degree() == A.degree(), "intersection: degree mismatch");
  unsigned n = H.degree();
  PermGroup J = join(H, A);
  for (const Perm& j : J.generators()) {
    for (const Perm& a : A.generators()) {
      require_input(A.contains(a.conjugated_by(j)),
                    "intersect_with_normal: second argument is not normal "
                    "in the join");
    }
  }
  Bigint target = H.order() * A.order() / J.order();
  if (target == 1) return PermGroup::trivial(n);
  if (target == H.order()) return H;
  if (target == A.order()) return A;

  MeetSearch ms(H, A, target);
  // When H is normal in the join as well, generator commutators land in the
  // intersection; often they already generate it.
  if (is_normal_in(H, J)) {
    for (const Perm& h : H.generators()) {
      for (const Perm& a : A.generators()) {
        Perm c = commutator(h, a);
        if (!c.is_identity() && H.contains(c) && A.contains(c)) ms.seed(c);
      }
    }
  }
  while (ms.found.orbit_product() != target) {
    if (!ms.descend(0, Perm(n), Perm(n))) break;
  }
  PermGroup I = ms.found.finish();
  check_invariant(I.order() == target, "intersection order mismatch");
  return I;
}

}  // namespace cgt
