#include "cgt/perm_group.hpp"

#include <algorithm>
#include <deque>

#include "cgt/errors.hpp"
#include "cgt/stats.hpp"

namespace cgt {

namespace {
// Dense point->index tables below this degree, hash maps above.
constexpr unsigned kDenseIndexLimit = 2048;
// Cache inverse transversals while orbit length * degree stays below this.
constexpr std::size_t kInvCacheLimit = 2'000'000;
}  // namespace

std::int32_t ChainBuilder::Level::orbit_index(std::uint32_t pt) const {
  if (!dense.empty()) return dense[pt];
  auto it = sparse.find(pt);
  return it == sparse.end() ? -1 : it->second;
}

void ChainBuilder::Level::index_put(std::uint32_t pt, std::int32_t idx,
                                    unsigned degree) {
  if (degree <= kDenseIndexLimit) {
    if (dense.empty()) dense.assign(degree, -1);
    dense[pt] = idx;
  } else {
    sparse[pt] = idx;
  }
}

ChainBuilder::ChainBuilder(unsigned degree,
                           std::vector<std::uint32_t> base_prefix)
    : degree_(degree) {
  require_input(degree >= 1, "degree must be at least 1");
  base_.reserve(degree);
  base_pos_.assign(degree, UINT32_MAX);
  for (std::uint32_t p : base_prefix) {
    require_input(p < degree, "base point out of range");
    if (base_pos_[p] == UINT32_MAX) {
      base_pos_[p] = static_cast<std::uint32_t>(base_.size());
      base_.push_back(p);
    }
  }
  for (std::uint32_t p = 0; p < degree; ++p) {
    if (base_pos_[p] == UINT32_MAX) {
      base_pos_[p] = static_cast<std::uint32_t>(base_.size());
      base_.push_back(p);
    }
  }
  levels_.resize(degree);
  for (std::size_t j = 0; j < degree; ++j) levels_[j].beta = base_[j];
}

void ChainBuilder::init_orbit(Level& lv) {
  if (!lv.orbit.empty()) return;
  lv.orbit.push_back(lv.beta);
  lv.edges.push_back(Edge{lv.beta, -1, 0});
  lv.index_put(lv.beta, 0, degree_);
}

void ChainBuilder::strip_level(const Level& lv, Perm& g,
                               std::uint32_t image) const {
  if (!lv.inv_cache.empty()) {
    g = g * lv.inv_cache[lv.orbit_index(image)];
    return;
  }
  std::uint32_t x = image;
  while (x != lv.beta) {
    const Edge& e = lv.edges[lv.orbit_index(x)];
    g = g * levels_[e.glevel].assigned_inv[e.gindex];
    x = e.parent;
  }
}

std::pair<Perm, std::size_t> ChainBuilder::sift_from(std::size_t start,
                                                     Perm g) const {
  stats().sifts.fetch_add(1, std::memory_order_relaxed);
  for (std::size_t j = start; j < degree_; ++j) {
    const Level& lv = levels_[j];
    std::uint32_t image = g[lv.beta];
    if (image == lv.beta) continue;
    if (lv.orbit.empty() || lv.orbit_index(image) < 0) return {std::move(g), j};
    strip_level(lv, g, image);
  }
  return {std::move(g), degree_};
}

Perm ChainBuilder::transversal(std::size_t level, std::uint32_t pt) const {
  const Level& lv = levels_[level];
  if (pt == lv.beta) return Perm(degree_);
  std::int32_t idx = lv.orbit_index(pt);
  check_invariant(idx >= 0, "transversal: point outside fundamental orbit");
  if (!lv.inv_cache.empty()) return lv.inv_cache[idx].inverse();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> path;
  std::uint32_t x = pt;
  while (x != lv.beta) {
    const Edge& e = lv.edges[lv.orbit_index(x)];
    path.emplace_back(e.glevel, e.gindex);
    x = e.parent;
  }
  Perm u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    u = u * levels_[it->first].assigned[it->second];
  }
  return u;
}

void ChainBuilder::update_orbit(std::size_t level, std::size_t glevel,
                                std::size_t gindex) {
  Level& lv = levels_[level];
  const Perm& g = levels_[glevel].assigned[gindex];
  std::vector<std::uint32_t> fresh;
  std::size_t snap = lv.orbit.size();
  for (std::size_t idx = 0; idx < snap; ++idx) {
    std::uint32_t p = lv.orbit[idx];
    std::uint32_t q = g[p];
    if (lv.orbit_index(q) < 0) {
      lv.orbit.push_back(q);
      lv.edges.push_back(Edge{p, static_cast<std::int32_t>(glevel),
                              static_cast<std::uint32_t>(gindex)});
      lv.index_put(q, static_cast<std::int32_t>(lv.orbit.size() - 1), degree_);
      fresh.push_back(q);
    }
  }
  if (!fresh.empty()) {
    lv.inv_cache.clear();
    extend_orbit_from(level, std::move(fresh));
  }
}

void ChainBuilder::extend_orbit_from(std::size_t level,
                                     std::vector<std::uint32_t> frontier) {
  Level& lv = levels_[level];
  std::deque<std::uint32_t> queue(frontier.begin(), frontier.end());
  auto lo = std::lower_bound(assigned_levels_.begin(), assigned_levels_.end(),
                             static_cast<std::uint32_t>(level));
  while (!queue.empty()) {
    std::uint32_t p = queue.front();
    queue.pop_front();
    for (auto it = lo; it != assigned_levels_.end(); ++it) {
      const Level& gl = levels_[*it];
      for (std::size_t gi = 0; gi < gl.assigned.size(); ++gi) {
        std::uint32_t q = gl.assigned[gi][p];
        if (lv.orbit_index(q) < 0) {
          lv.orbit.push_back(q);
          lv.edges.push_back(Edge{p, static_cast<std::int32_t>(*it),
                                  static_cast<std::uint32_t>(gi)});
          lv.index_put(q, static_cast<std::int32_t>(lv.orbit.size() - 1),
                       degree_);
          queue.push_back(q);
        }
      }
    }
  }
}

void ChainBuilder::assign(std::size_t j, Perm g) {
  Level& lv = levels_[j];
  init_orbit(lv);
  auto it = std::lower_bound(assigned_levels_.begin(), assigned_levels_.end(),
                             static_cast<std::uint32_t>(j));
  if (it == assigned_levels_.end() || *it != j) {
    assigned_levels_.insert(it, static_cast<std::uint32_t>(j));
  }
  lv.assigned_inv.push_back(g.inverse());
  lv.assigned.push_back(std::move(g));
  std::size_t gi = lv.assigned.size() - 1;
  for (std::uint32_t k : assigned_levels_) {
    if (k > j) break;
    update_orbit(k, j, gi);
  }
  verified_ = false;
}

bool ChainBuilder::add(const Perm& g) {
  require_input(g.degree() == degree_, "degree mismatch");
  auto [r, j] = sift_from(0, g);
  if (j == degree_) return false;
  assign(j, std::move(r));
  return true;
}

bool ChainBuilder::contains(const Perm& g) const {
  require_input(g.degree() == degree_, "degree mismatch");
  auto [r, j] = sift_from(0, g);
  (void)r;
  return j == degree_;
}

Bigint ChainBuilder::orbit_product() const {
  Bigint n = 1;
  for (std::uint32_t k : assigned_levels_) n *= levels_[k].orbit.size();
  return n;
}

void ChainBuilder::verify() {
  // A new assignment at level d only disturbs orbits and generator sets of
  // levels <= d, so restarting the sweep at d and descending re-checks
  // exactly the invalidated part.
  if (verified_) return;
  stats().bsgs_builds.fetch_add(1, std::memory_order_relaxed);
  long j = assigned_levels_.empty() ? -1
                                    : static_cast<long>(assigned_levels_.back());
  while (j >= 0) {
    if (!std::binary_search(assigned_levels_.begin(), assigned_levels_.end(),
                            static_cast<std::uint32_t>(j))) {
      --j;
      continue;
    }
    Level& lv = levels_[j];
    std::vector<std::pair<std::uint32_t, std::uint32_t>> grefs;
    for (std::uint32_t k : assigned_levels_) {
      if (k < static_cast<std::uint32_t>(j)) continue;
      for (std::size_t gi = 0; gi < levels_[k].assigned.size(); ++gi) {
        grefs.emplace_back(k, static_cast<std::uint32_t>(gi));
      }
    }
    long restart = -1;
    for (std::size_t oi = 0; oi < lv.orbit.size() && restart < 0; ++oi) {
      Perm u = transversal(j, lv.orbit[oi]);
      for (const auto& [k, gi] : grefs) {
        Perm t = u * levels_[k].assigned[gi];
        auto [r, d] = sift_from(static_cast<std::size_t>(j), std::move(t));
        if (d != degree_) {
          assign(d, std::move(r));
          restart = static_cast<long>(d);
          break;
        }
      }
    }
    j = restart >= 0 ? restart : j - 1;
  }
  verified_ = true;
}

struct PermGroup::Impl {
  ChainBuilder chain;
  std::vector<Perm> gens;
  Bigint order;
  Factored order_f;
  std::vector<std::uint32_t> nontrivial;

  explicit Impl(ChainBuilder&& c) : chain(std::move(c)) {}
};

void ChainBuilder::build_caches() {
  for (std::uint32_t k : assigned_levels_) {
    Level& lv = levels_[k];
    if (!lv.inv_cache.empty()) continue;
    if (lv.orbit.size() * static_cast<std::size_t>(degree_) > kInvCacheLimit) {
      continue;
    }
    lv.inv_cache.reserve(lv.orbit.size());
    lv.inv_cache.emplace_back(degree_);
    for (std::size_t idx = 1; idx < lv.orbit.size(); ++idx) {
      const Edge& e = lv.edges[idx];
      lv.inv_cache.push_back(levels_[e.glevel].assigned_inv[e.gindex] *
                             lv.inv_cache[lv.orbit_index(e.parent)]);
    }
  }
}

PermGroup ChainBuilder::finish(std::vector<Perm> display_gens) {
  verify();
  return package(std::move(display_gens));
}

PermGroup ChainBuilder::finish_partial(std::vector<Perm> display_gens) {
  return package(std::move(display_gens));
}

PermGroup ChainBuilder::package(std::vector<Perm> display_gens) {
  build_caches();
  Bigint order = 1;
  Factored order_f;
  for (std::uint32_t k : assigned_levels_) {
    std::size_t len = levels_[k].orbit.size();
    order *= len;
    factored_mul_int(order_f, len);
  }
  if (display_gens.empty()) {
    for (std::uint32_t k : assigned_levels_) {
      for (const Perm& g : levels_[k].assigned) display_gens.push_back(g);
    }
  }
  std::vector<std::uint32_t> nontrivial = assigned_levels_;
  // Normalize untouched levels so chain accessors see a one-point orbit.
  for (std::size_t j = 0; j < degree_; ++j) init_orbit(levels_[j]);
  auto impl = std::make_shared<PermGroup::Impl>(std::move(*this));
  impl->gens = std::move(display_gens);
  impl->order = std::move(order);
  impl->order_f = std::move(order_f);
  impl->nontrivial = std::move(nontrivial);
  PermGroup g;
  g.impl_ = std::move(impl);
  return g;
}

PermGroup PermGroup::trivial(unsigned degree) {
  ChainBuilder b(degree);
  return b.finish();
}

PermGroup PermGroup::generated(unsigned degree, const std::vector<Perm>& gens) {
  return generated_with_base(degree, gens, {});
}

PermGroup PermGroup::generated_with_base(unsigned degree,
                                         const std::vector<Perm>& gens,
                                         std::vector<std::uint32_t> prefix) {
  ChainBuilder b(degree, std::move(prefix));
  std::vector<Perm> kept;
  bool reduce = gens.size() > static_cast<std::size_t>(degree) * degree;
  for (const Perm& g : gens) {
    require_input(g.degree() == degree, "generator degree mismatch");
    if (g.is_identity()) continue;
    bool grew = b.add(g);
    if (!reduce || grew) kept.push_back(g);
  }
  return b.finish(std::move(kept));
}

unsigned PermGroup::degree() const { return impl_->chain.degree_; }

const std::vector<Perm>& PermGroup::generators() const { return impl_->gens; }

std::vector<Perm> PermGroup::strong_generators() const {
  std::vector<Perm> out;
  for (std::uint32_t k : impl_->chain.assigned_levels_) {
    for (const Perm& g : impl_->chain.levels_[k].assigned) out.push_back(g);
  }
  return out;
}

const Bigint& PermGroup::order() const { return impl_->order; }

const Factored& PermGroup::order_factored() const { return impl_->order_f; }

bool PermGroup::is_trivial() const { return impl_->order == 1; }

bool PermGroup::contains(const Perm& g) const {
  return impl_->chain.contains(g);
}

Perm PermGroup::sift(const Perm& g) const {
  return impl_->chain.sift_from(0, g).first;
}

bool PermGroup::contains_group(const PermGroup& other) const {
  for (const Perm& g : other.generators()) {
    if (!contains(g)) return false;
  }
  return true;
}

bool PermGroup::same_group(const PermGroup& other) const {
  return degree() == other.degree() && order() == other.order() &&
         contains_group(other);
}

bool PermGroup::proper_subgroup_of(const PermGroup& other) const {
  return order() < other.order() && other.contains_group(*this);
}

Perm PermGroup::random_element(SeedStream& rng) const {
  const ChainBuilder& c = impl_->chain;
  Perm acc(degree());
  for (auto it = c.assigned_levels_.rbegin(); it != c.assigned_levels_.rend();
       ++it) {
    const ChainBuilder::Level& lv = c.levels_[*it];
    std::size_t idx = rng.below(lv.orbit.size());
    acc = acc * c.transversal(*it, lv.orbit[idx]);
  }
  return acc;
}

std::uint32_t PermGroup::base_point(std::size_t pos) const {
  return impl_->chain.base_[pos];
}

const std::vector<std::uint32_t>& PermGroup::orbit_at(std::size_t pos) const {
  return impl_->chain.levels_[pos].orbit;
}

bool PermGroup::in_orbit_at(std::size_t pos, std::uint32_t pt) const {
  return impl_->chain.levels_[pos].orbit_index(pt) >= 0;
}

Perm PermGroup::transversal_at(std::size_t pos, std::uint32_t pt) const {
  return impl_->chain.transversal(pos, pt);
}

const std::vector<std::uint32_t>& PermGroup::nontrivial_positions() const {
  return impl_->nontrivial;
}

std::vector<Perm> PermGroup::prefix_stabilizer_gens(std::size_t count) const {
  std::vector<Perm> out;
  for (std::uint32_t k : impl_->chain.assigned_levels_) {
    if (k < count) continue;
    for (const Perm& g : impl_->chain.levels_[k].assigned) out.push_back(g);
  }
  return out;
}

const std::vector<std::uint32_t>& PermGroup::full_base() const {
  return impl_->chain.base_;
}

PermGroup kernel_of_homomorphism(const PermGroup& G,
                                 const std::vector<Perm>& images,
                                 unsigned image_degree) {
  unsigned n = G.degree();
  unsigned m = image_degree;
  require_input(m >= 1, "image degree must be at least 1");
  require_input(images.size() == G.generators().size(),
                "one image per generator required");
  std::vector<std::uint32_t> prefix;
  for (unsigned j = 0; j < m; ++j) prefix.push_back(n + j);
  ChainBuilder b(n + m, std::move(prefix));
  for (std::size_t i = 0; i < images.size(); ++i) {
    require_input(images[i].degree() == m, "image degree mismatch");
    const Perm& g = G.generators()[i];
    std::vector<std::uint32_t> img(n + m);
    for (unsigned p = 0; p < n; ++p) img[p] = g[p];
    for (unsigned p = 0; p < m; ++p) img[n + p] = n + images[i][p];
    b.add(Perm::from_images(std::move(img)));
  }
  PermGroup diag = b.finish();
  require_input(diag.order() == G.order(),
                "generator images do not extend to a homomorphism");
  std::vector<Perm> kgens;
  for (const Perm& d : diag.prefix_stabilizer_gens(m)) {
    std::vector<std::uint32_t> img(n);
    for (unsigned p = 0; p < n; ++p) {
      check_invariant(d[p] < n, "kernel generator leaves the domain");
      img[p] = d[p];
    }
    kgens.push_back(Perm::from_images(std::move(img)));
  }
  return PermGroup::generated(n, kgens);
}

}  // namespace cgt
