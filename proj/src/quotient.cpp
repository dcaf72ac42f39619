#include "cgt/quotient.hpp"

#include <deque>

#include "cgt/errors.hpp"
#include "cgt/structure.hpp"

namespace cgt {

Perm canonical_coset_rep(const PermGroup& N, Perm x) {
  for (std::uint32_t pos : N.nontrivial_positions()) {
    const auto& orb = N.orbit_at(pos);
    std::uint32_t best = orb[0];
    std::uint32_t best_img = x[orb[0]];
    for (std::uint32_t o : orb) {
      if (x[o] < best_img) {
        best = o;
        best_img = x[o];
      }
    }
    if (best != N.base_point(pos)) x = N.transversal_at(pos, best) * x;
  }
  return x;
}

CosetAction::CosetAction(const PermGroup& G, const PermGroup& N,
                         std::size_t max_index) {
  require_input(G.degree() == N.degree(), "coset action: degree mismatch");
  require_input(G.contains_group(N), "coset action: subgroup not contained");
  require_input(is_normal_in(N, G), "coset action: subgroup not normal");
  N_ = N;

  auto push = [&](Perm rep) -> std::uint32_t {
    std::uint32_t idx = static_cast<std::uint32_t>(reps_.size());
    buckets_[rep.hash()].push_back(idx);
    reps_.push_back(std::move(rep));
    return idx;
  };

  push(canonical_coset_rep(N_, Perm(G.degree())));
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    std::uint32_t i = queue.front();
    queue.pop_front();
    for (const Perm& g : G.generators()) {
      Perm moved = canonical_coset_rep(N_, reps_[i] * g);
      if (locate(moved) == UINT32_MAX) {
        if (reps_.size() >= max_index) {
          throw bound_error(
              "coset space larger than the materialization bound");
        }
        queue.push_back(push(std::move(moved)));
      }
    }
  }

  for (const Perm& g : G.generators()) gen_images_.push_back(image_of(g));
  quotient_ = PermGroup::generated(static_cast<unsigned>(reps_.size()),
                                   gen_images_);
}

std::uint32_t CosetAction::locate(const Perm& canonical) const {
  auto it = buckets_.find(canonical.hash());
  if (it == buckets_.end()) return UINT32_MAX;
  for (std::uint32_t idx : it->second) {
    if (reps_[idx] == canonical) return idx;
  }
  return UINT32_MAX;
}

Perm CosetAction::image_of(const Perm& x) const {
  std::vector<std::uint32_t> img(reps_.size());
  for (std::uint32_t i = 0; i < reps_.size(); ++i) {
    std::uint32_t j = locate(canonical_coset_rep(N_, reps_[i] * x));
    check_invariant(j != UINT32_MAX, "image_of: element outside the group");
    img[i] = j;
  }
  return Perm::from_images(std::move(img));
}

PermGroup CosetAction::image_of_group(const PermGroup& H) const {
  std::vector<Perm> gens;
  for (const Perm& h : H.generators()) gens.push_back(image_of(h));
  return PermGroup::generated(static_cast<unsigned>(reps_.size()), gens);
}

}  // namespace cgt
