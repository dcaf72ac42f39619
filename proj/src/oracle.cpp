#include "cgt/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>

#include "cgt/errors.hpp"
#include "cgt/structure.hpp"

namespace cgt {

namespace {

constexpr std::size_t kDefaultOracleBound = 5000;
constexpr std::size_t kLatticeCap = 512;

using Mask = std::vector<std::uint64_t>;

Mask zero_mask(std::size_t bits) { return Mask((bits + 63) / 64, 0); }

void set_bit(Mask& m, std::size_t i) {
  m[i / 64] |= std::uint64_t(1) << (i % 64);
}

bool subset_of(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

struct ClassData {
  std::vector<Perm> elements;
  std::vector<std::size_t> reps;  // class id -> index into elements
};

// Element list and conjugacy classes by plain closure; the cap was checked
// against the group order before calling.
ClassData conjugacy_classes(const PermGroup& G) {
  ClassData cd;
  std::unordered_map<Perm, std::size_t, PermHash> index;
  cd.elements.push_back(Perm(G.degree()));
  index.emplace(cd.elements[0], 0);
  for (std::size_t at = 0; at < cd.elements.size(); ++at) {
    for (const Perm& g : G.generators()) {
      Perm next = cd.elements[at] * g;
      if (index.emplace(next, cd.elements.size()).second) {
        cd.elements.push_back(std::move(next));
      }
    }
  }
  std::vector<char> classified(cd.elements.size(), 0);
  for (std::size_t i = 0; i < cd.elements.size(); ++i) {
    if (classified[i]) continue;
    cd.reps.push_back(i);
    std::deque<std::size_t> work = {i};
    classified[i] = 1;
    while (!work.empty()) {
      std::size_t at = work.front();
      work.pop_front();
      for (const Perm& g : G.generators()) {
        std::size_t to = index.at(cd.elements[at].conjugated_by(g));
        if (!classified[to]) {
          classified[to] = 1;
          work.push_back(to);
        }
      }
    }
  }
  return cd;
}

Mask mask_of(const PermGroup& H, const ClassData& cd) {
  Mask m = zero_mask(cd.reps.size());
  for (std::size_t c = 0; c < cd.reps.size(); ++c) {
    if (H.contains(cd.elements[cd.reps[c]])) set_bit(m, c);
  }
  return m;
}

std::size_t find_member(const NormalLattice& lat, const PermGroup& H) {
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
    if (lat.subgroups[i].order() == H.order() &&
        lat.subgroups[i].contains_group(H)) {
      return i;
    }
  }
  return lat.subgroups.size();
}

// Unique maximal element of the flagged members under the lattice order.
std::size_t unique_maximal(const NormalLattice& lat,
                           const std::vector<std::size_t>& members,
                           const char* what) {
  std::vector<std::size_t> maximal;
  for (std::size_t i : members) {
    bool top = true;
    for (std::size_t j : members) {
      if (j != i && lat.contains[j][i]) {
        top = false;
        break;
      }
    }
    if (top) maximal.push_back(i);
  }
  check_invariant(maximal.size() == 1, what);
  for (std::size_t i : members) {
    check_invariant(lat.contains[maximal[0]][i],
                    "maximal member misses a smaller one");
  }
  return maximal[0];
}

}  // namespace

std::size_t oracle_order_bound() {
  if (const char* env = std::getenv("CGT_ORACLE_BOUND")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultOracleBound;
}

NormalLattice normal_subgroups(const PermGroup& G, std::size_t max_order) {
  if (G.order() > Bigint(max_order)) {
    throw bound_error("group order " + bigint_str(G.order()) +
                      " exceeds the oracle bound " + std::to_string(max_order));
  }
  ClassData cd = conjugacy_classes(G);

  struct Item {
    PermGroup sub;
    Mask mask;
  };
  std::vector<Item> found;
  std::map<Mask, std::size_t> seen;
  PermGroup triv = PermGroup::trivial(G.degree());
  found.push_back({triv, mask_of(triv, cd)});
  seen.emplace(found[0].mask, 0);
  for (std::size_t at = 0; at < found.size(); ++at) {
    for (std::size_t c = 0; c < cd.reps.size(); ++c) {
      if (found[at].mask[c / 64] >> (c % 64) & 1) continue;
      PermGroup bigger =
          normal_closure(G, found[at].sub, {cd.elements[cd.reps[c]]});
      Mask m = mask_of(bigger, cd);
      if (seen.emplace(m, found.size()).second) {
        found.push_back({std::move(bigger), std::move(m)});
        if (found.size() > kLatticeCap) {
          throw bound_error("normal subgroup lattice exceeds oracle capacity");
        }
      }
    }
  }

  std::sort(found.begin(), found.end(), [](const Item& a, const Item& b) {
    if (a.sub.order() != b.sub.order()) return a.sub.order() < b.sub.order();
    return a.mask < b.mask;
  });

  NormalLattice lat;
  lat.group = G;
  std::vector<Mask> masks;
  for (Item& it : found) {
    lat.subgroups.push_back(std::move(it.sub));
    masks.push_back(std::move(it.mask));
  }
  std::size_t n = lat.subgroups.size();
  lat.contains.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      lat.contains[i][j] = subset_of(masks[j], masks[i]);
    }
  }

  check_invariant(lat.subgroups.front().is_trivial(),
                  "lattice misses the trivial subgroup");
  check_invariant(lat.subgroups.back().order() == G.order(),
                  "lattice misses the whole group");
  std::map<Mask, std::size_t> by_mask;
  for (std::size_t i = 0; i < n; ++i) by_mask.emplace(masks[i], i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Mask meet = masks[i];
      for (std::size_t b = 0; b < meet.size(); ++b) meet[b] &= masks[j][b];
      check_invariant(by_mask.count(meet) != 0,
                      "lattice not closed under intersections");
      Mask prod = mask_of(join(lat.subgroups[i], lat.subgroups[j]), cd);
      check_invariant(by_mask.count(prod) != 0,
                      "lattice not closed under products");
    }
  }
  return lat;
}

PermGroup radical_oracle(const PermGroup& G, const Formation& f,
                         const NormalLattice& lat, SeedStream& rng) {
  require_input(!f.is_empty_class(), "radical undefined for the empty class");
  require_input(G.order() == lat.group.order() && lat.group.contains_group(G),
                "lattice built for a different group");
  PermGroup triv = PermGroup::trivial(G.degree());
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
    if (formation_contains(f, lat.subgroups[i], triv, rng)) members.push_back(i);
  }
  check_invariant(!members.empty(), "no normal member at all");
  return lat.subgroups[unique_maximal(lat, members,
                                      "class not Fitting on this instance")];
}

std::vector<SimpleType> composition_factors_oracle(const PermGroup& G) {
  std::vector<SimpleType> out;
  PermGroup cur = G;
  while (!cur.is_trivial()) {
    NormalLattice lat = normal_subgroups(cur);
    // The proper member of largest order is a maximal normal subgroup.
    const PermGroup& M = lat.subgroups[lat.subgroups.size() - 2];
    Factored q = factored_div(cur.order_factored(), M.order_factored());
    if (M.contains_group(derived_subgroup(cur))) {
      check_invariant(q.size() == 1 && q.begin()->second == 1,
                      "abelian composition factor not of prime order");
      out.push_back(SimpleType::cyclic(q.begin()->first, 1));
    } else {
      Bigint qv = factored_value(q);
      const char* name = nullptr;
      int hits = 0;
      for (const SimpleOrderEntry& e : simple_order_table()) {
        if (Bigint(e.order) == qv) {
          name = e.name;
          ++hits;
        }
      }
      if (hits == 1) {
        out.push_back(SimpleType::nonabelian(name, q, 1));
      } else {
        out.push_back(SimpleType::nonabelian(
            "unknown-simple(" + bigint_str(qv) + ")", q, 1));
      }
    }
    cur = M;
  }
  return out;
}

PermGroup esigma_radical_oracle(const PermGroup& G, const TypePredicate& sigma,
                                const NormalLattice& lat) {
  require_input(G.order() == lat.group.order() && lat.group.contains_group(G),
                "lattice built for a different group");
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
    bool ok = true;
    for (const SimpleType& t : composition_factors_oracle(lat.subgroups[i])) {
      if (!sigma.matches(t)) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(i);
  }
  check_invariant(!members.empty(), "no normal member at all");
  return lat.subgroups[unique_maximal(lat, members,
                                      "class not Fitting on this instance")];
}

bool verify_chief(const ChiefSeries& series, const NormalLattice& lat) {
  require_input(series.ambient.order() == lat.group.order() &&
                    lat.group.contains_group(series.ambient),
                "lattice built for a different group");
  std::vector<std::size_t> idx;
  for (const PermGroup& term : series.terms) {
    std::size_t i = find_member(lat, term);
    if (i == lat.subgroups.size()) return false;
    idx.push_back(i);
  }
  for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
    std::size_t a = idx[k], b = idx[k + 1];
    if (!lat.contains[b][a] || a == b) return false;
    for (std::size_t m = 0; m < lat.subgroups.size(); ++m) {
      if (m != a && m != b && lat.contains[b][m] && lat.contains[m][a]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace cgt
