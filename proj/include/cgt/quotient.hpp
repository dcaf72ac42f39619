#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cgt/perm_group.hpp"

namespace cgt {

// Lexicographically least element of the coset N*x (images of 0,1,...,n-1
// compared in that order).  Two elements get the same result iff they lie in
// the same coset.  N must be built on the natural base, which holds for any
// group constructed without a base prefix.
Perm canonical_coset_rep(const PermGroup& N, Perm x);

// Right-multiplication action of G on the cosets of a normal subgroup N,
// materialized as a permutation group on the coset space.
class CosetAction {
 public:
  // Throws bound_error if the index exceeds max_index.
  CosetAction(const PermGroup& G, const PermGroup& N, std::size_t max_index);

  const PermGroup& quotient() const { return quotient_; }
  // Images of G.generators() in the quotient, in order.
  const std::vector<Perm>& generator_images() const { return gen_images_; }
  std::size_t index() const { return reps_.size(); }
  // Permutation induced on the coset space by an arbitrary element of G.
  Perm image_of(const Perm& x) const;
  // Image of a subgroup H <= G.
  PermGroup image_of_group(const PermGroup& H) const;

 private:
  std::uint32_t locate(const Perm& canonical) const;

  PermGroup N_;
  PermGroup quotient_;
  std::vector<Perm> gen_images_;
  std::vector<Perm> reps_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets_;
};

}  // namespace cgt
