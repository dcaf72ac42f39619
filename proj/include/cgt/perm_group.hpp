#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cgt/bigint.hpp"
#include "cgt/perm.hpp"
#include "cgt/rng.hpp"

namespace cgt {

class PermGroup;

// Incremental stabilizer-chain builder (Schreier-Sims with a prescribed base).
//
// The base is a fixed ordering of all points of the domain; level i stabilizes
// the first i base points.  add() sifts the element and, if a nontrivial
// residue remains, assigns it to the level where it first moves the base,
// growing that level's orbit.  Chain verification (Schreier generator
// closure) is deferred to verify()/finish(), so closure-style loops stay
// cheap; contains() is sound when it answers true and may answer false for
// members until the chain is verified.
class ChainBuilder {
 public:
  ChainBuilder(unsigned degree, std::vector<std::uint32_t> base_prefix = {});

  // Returns true if the element enlarged the chain.
  bool add(const Perm& g);
  bool contains(const Perm& g) const;
  // Product of the fundamental orbit lengths: a lower bound for the order of
  // the group generated so far, exact once verified.
  Bigint orbit_product() const;
  void verify();
  unsigned degree() const { return degree_; }

  PermGroup finish(std::vector<Perm> display_gens = {});
  // Packages the chain without the completion sweep.  The reported order is
  // the orbit product, exact only when the caller holds independent proof
  // that the chain is complete; otherwise the result is just a witness that
  // the group generated so far has at least that order.
  PermGroup finish_partial(std::vector<Perm> display_gens = {});

 private:
  friend class PermGroup;
  struct Edge {
    std::uint32_t parent;
    std::int32_t glevel;  // -1 marks the orbit root
    std::uint32_t gindex;
  };
  struct Level {
    std::uint32_t beta = 0;
    std::vector<Perm> assigned;
    std::vector<Perm> assigned_inv;
    std::vector<std::uint32_t> orbit;  // insertion order, orbit[0] == beta
    std::vector<Edge> edges;           // parallel to orbit
    // point -> orbit index; dense for small degrees, hashed otherwise
    std::vector<std::int32_t> dense;
    std::unordered_map<std::uint32_t, std::int32_t> sparse;
    std::vector<Perm> inv_cache;  // u_p^{-1} per orbit index, optional

    std::int32_t orbit_index(std::uint32_t pt) const;
    void index_put(std::uint32_t pt, std::int32_t idx, unsigned degree);
  };

  void init_orbit(Level& lv);
  void assign(std::size_t j, Perm g);
  void update_orbit(std::size_t level, std::size_t glevel, std::size_t gindex);
  void extend_orbit_from(std::size_t level, std::vector<std::uint32_t> frontier);
  // Sifts g through levels start, start+1, ...; returns the residue and the
  // level where it dropped (degree() when the residue is the identity).
  std::pair<Perm, std::size_t> sift_from(std::size_t start, Perm g) const;
  void strip_level(const Level& lv, Perm& g, std::uint32_t image) const;
  Perm transversal(std::size_t level, std::uint32_t pt) const;
  void build_caches();
  PermGroup package(std::vector<Perm> display_gens);

  unsigned degree_;
  std::vector<std::uint32_t> base_;      // position -> point
  std::vector<std::uint32_t> base_pos_;  // point -> position
  std::vector<Level> levels_;
  std::vector<std::uint32_t> assigned_levels_;  // sorted, unique
  bool verified_ = false;
};

// Finite permutation group with an eagerly built stabilizer chain.
// Immutable; copies share the underlying chain.
class PermGroup {
 public:
  PermGroup() = default;  // empty handle; only assignment is valid

  static PermGroup trivial(unsigned degree);
  static PermGroup generated(unsigned degree, const std::vector<Perm>& gens);
  // Like generated(), but the stabilizer chain uses the given points first.
  static PermGroup generated_with_base(unsigned degree,
                                       const std::vector<Perm>& gens,
                                       std::vector<std::uint32_t> base_prefix);

  unsigned degree() const;
  // Display generators: the (possibly sift-reduced) input generating set.
  const std::vector<Perm>& generators() const;
  std::vector<Perm> strong_generators() const;
  const Bigint& order() const;
  const Factored& order_factored() const;
  bool is_trivial() const;

  bool contains(const Perm& g) const;
  Perm sift(const Perm& g) const;
  bool contains_group(const PermGroup& other) const;
  bool same_group(const PermGroup& other) const;
  bool proper_subgroup_of(const PermGroup& other) const;

  // Exactly uniform: one transversal element per chain level.
  Perm random_element(SeedStream& rng) const;

  // Chain access, indexed by base position (0 <= pos < degree).
  std::uint32_t base_point(std::size_t pos) const;
  const std::vector<std::uint32_t>& orbit_at(std::size_t pos) const;
  bool in_orbit_at(std::size_t pos, std::uint32_t pt) const;
  // u with base_point(pos)^u = pt; pt must lie in the orbit.
  Perm transversal_at(std::size_t pos, std::uint32_t pt) const;
  // Positions whose fundamental orbit is nontrivial, in base order.
  const std::vector<std::uint32_t>& nontrivial_positions() const;
  // Generators of the pointwise stabilizer of the first `count` base points.
  std::vector<Perm> prefix_stabilizer_gens(std::size_t count) const;
  const std::vector<std::uint32_t>& full_base() const;

 private:
  friend class ChainBuilder;
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// Kernel of the homomorphism G -> Sym(image_degree) determined by mapping
// G.generators()[i] to images[i].  Throws input_error if the assignment does
// not extend to a homomorphism.
PermGroup kernel_of_homomorphism(const PermGroup& G,
                                 const std::vector<Perm>& images,
                                 unsigned image_degree);

// Centralizer of P in the full symmetric group on P's domain, assembled from
// P-set isomorphisms between orbits (no search).
PermGroup symmetric_centralizer(const PermGroup& P);

}  // namespace cgt
