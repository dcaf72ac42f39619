#include "cgt/chief.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "cgt/errors.hpp"
#include "cgt/meataxe.hpp"
#include "cgt/section.hpp"
#include "cgt/section_basis.hpp"
#include "cgt/structure.hpp"

namespace cgt {

namespace {

constexpr int kClosureStarts = 48;
constexpr int kClosureConfirms = 24;
constexpr int kRandomNormalDraws = 48;
constexpr int kTypeSamples = 200;
constexpr std::uint64_t kOrderTableLimit = 1000000;

std::uint64_t element_order_value(const Perm& x) {
  std::uint64_t ord = 1;
  for (const auto& [q, e] : x.order_factored()) {
    for (int i = 0; i < e; ++i) {
      if (ord > (std::uint64_t(1) << 62) / q) return 0;  // overflow, caller skips
      ord *= q;
    }
  }
  return ord;
}

// Nontrivial prime-power parts x^(ord/q^e), one per prime dividing ord(x).
std::vector<Perm> prime_parts(const Perm& x) {
  std::vector<Perm> out;
  auto factors = x.order_factored();
  if (factors.size() <= 1) return out;
  std::uint64_t ord = element_order_value(x);
  if (ord == 0) return out;
  for (const auto& [q, e] : factors) {
    std::uint64_t m = ord;
    for (int i = 0; i < e; ++i) m /= q;
    out.push_back(x.power(static_cast<long long>(m)));
  }
  return out;
}

// Order of the coset xA inside the section: the least divisor d of ord(x)
// with x^d in A.
std::uint64_t section_element_order(const Perm& x, const PermGroup& A) {
  std::uint64_t d = element_order_value(x);
  check_invariant(d != 0, "element order overflows the sampling range");
  for (const auto& [q, e] : x.order_factored()) {
    (void)e;
    while (d % q == 0 &&
           A.contains(x.power(static_cast<long long>(d / q)))) {
      d /= q;
    }
  }
  return d;
}

// Shrinks a B-normal candidate over A by re-closing random interior
// elements until kClosureConfirms consecutive closure evaluations fail to
// improve it.  Closures, not draws, are the unit of spend: each one costs a
// chain construction, and a draw with a rich element order triggers several.
PermGroup shrink_closure(const PermGroup& B, const PermGroup& A, PermGroup N,
                         SeedStream& rng) {
  int quiet = 0;
  while (quiet < kClosureConfirms && N.order() > A.order()) {
    Perm x = N.random_element(rng);
    auto consider = [&](const Perm& y) {
      if (quiet >= kClosureConfirms || A.contains(y)) return;
      PermGroup cand = normal_closure(B, A, {y}, N.order());
      if (cand.order() < N.order()) {
        N = cand;
        quiet = 0;
      } else {
        ++quiet;
      }
    };
    consider(x);
    for (const Perm& y : prime_parts(x)) consider(y);
  }
  return N;
}

SimpleType resolve_order_20160(const PermGroup& B, const PermGroup& A,
                               const Factored& root, unsigned width,
                               SeedStream& rng);

// Appends the terms strictly between A and B of a chief series of G through
// this layer, in increasing order.
void refine_layer(const PermGroup& G, const PermGroup& A, const PermGroup& B,
                  std::vector<PermGroup>& out, SeedStream& rng);

void split_at(const PermGroup& G, const PermGroup& A, const PermGroup& N,
              const PermGroup& B, std::vector<PermGroup>& out,
              SeedStream& rng) {
  refine_layer(G, A, N, out, rng);
  out.push_back(N);
  refine_layer(G, N, B, out, rng);
}

void refine_layer(const PermGroup& G, const PermGroup& A, const PermGroup& B,
                  std::vector<PermGroup>& out, SeedStream& rng) {
  Section s{B, A};
  check_invariant(!s.trivial_quotient(), "refining an empty layer");
  Factored f = s.order_factored();
  if (f.size() == 1 && f.begin()->second == 1) return;  // prime order: chief

  PermGroup M = join(A, perfect_residual(B));
  if (M.order() > A.order() && M.order() < B.order()) {
    split_at(G, A, M, B, out, rng);
    return;
  }

  if (M.order() == B.order()) {
    // Perfect layer.  Hunt a minimal B-normal subgroup over A; its G-closure
    // either refines the layer or certifies that none exists.
    PermGroup N = minimal_closure_over(B, A, rng);
    if (N.order() == B.order()) return;  // no proper B-normal part: chief
    PermGroup R = normal_closure(G, A, N.generators(), B.order());
    if (R.order() < B.order()) {
      split_at(G, A, R, B, out, rng);
      return;
    }
    // The G-closure of a minimal normal piece is the whole layer: the
    // components form one G-orbit, so the layer is chief.  An abelian piece
    // would lie under the proper radical preimage, contradicting R = B.
    check_invariant(!section_abelian(N, A),
                    "abelian minimal piece cannot close to a perfect layer");
    return;
  }

  // Soluble layer.
  PermGroup D = join(A, derived_subgroup(B));
  if (D.order() > A.order()) {
    check_invariant(D.order() < B.order(), "derived refinement must be proper");
    split_at(G, A, D, B, out, rng);
    return;
  }

  // Abelian layer.
  if (f.size() > 1) {
    // Split off the Hall q'-part: powering each generator by the q-part of
    // its element order projects the section onto its q'-component.
    std::uint64_t q = f.begin()->first;
    std::vector<Perm> seeds;
    for (const Perm& b : B.generators()) {
      std::uint64_t m = 1;
      for (const auto& [r, e] : b.order_factored()) {
        if (r != q) continue;
        for (int i = 0; i < e; ++i) m *= r;
      }
      seeds.push_back(b.power(static_cast<long long>(m)));
    }
    PermGroup N = normal_closure(G, A, seeds);
    check_invariant(N.order() > A.order() && N.order() < B.order(),
                    "Hall refinement of a mixed abelian layer must be proper");
    split_at(G, A, N, B, out, rng);
    return;
  }

  std::uint64_t p = f.begin()->first;
  if (section_elementary_prime(B, A) != p) {
    // Not elementary: the agemo subgroup generated by p-th powers is a
    // proper nontrivial characteristic layer.
    std::vector<Perm> seeds;
    for (const Perm& b : B.generators())
      seeds.push_back(b.power(static_cast<long long>(p)));
    PermGroup N = normal_closure(G, A, seeds);
    check_invariant(N.order() > A.order() && N.order() < B.order(),
                    "agemo refinement of a nonelementary layer must be proper");
    split_at(G, A, N, B, out, rng);
    return;
  }

  // Elementary abelian p^d with d >= 2: treat as an F_p module of G.
  SectionBasis sb = section_basis(B, A, p);
  std::vector<FpMatrix> action;
  for (const Perm& g : G.generators()) action.push_back(sb.action_matrix(g));
  SplitResult r = split_module(action, static_cast<unsigned>(p), sb.dim, rng);
  if (r.irreducible) return;  // chief, certified
  std::vector<Perm> seeds;
  for (unsigned i = 0; i < r.submodule.rows; ++i) {
    std::vector<std::uint32_t> row(r.submodule.a.begin() + i * r.submodule.cols,
                                   r.submodule.a.begin() + (i + 1) * r.submodule.cols);
    seeds.push_back(sb.element(row));
  }
  PermGroup N = join(A, PermGroup::generated(B.degree(), seeds));
  check_invariant(N.order() > A.order() && N.order() < B.order(),
                  "module splitter returned an improper submodule");
  split_at(G, A, N, B, out, rng);
}

SimpleType resolve_order_20160(const PermGroup& B, const PermGroup& A,
                               const Factored& root, unsigned width,
                               SeedStream& rng) {
  // A8 and PSL(3,4) share the order 20160; only A8 contains elements of
  // order 15.  The element test is sound for a single factor, so for wider
  // sections a component is isolated first.
  const PermGroup* top = &B;
  const PermGroup* bot = &A;
  PermGroup component;
  if (width > 1) {
    component = minimal_closure_over(B, A, rng);
    Section cs{component, A};
    if (cs.order() != Bigint(20160)) {
      return SimpleType::nonabelian("unknown-simple(20160)", root, width);
    }
    top = &component;
  }
  bool has15 = false;
  for (int i = 0; i < kTypeSamples && !has15; ++i) {
    Perm y = top->random_element(rng);
    if (bot->contains(y)) continue;
    if (section_element_order(y, *bot) % 15 == 0) has15 = true;
  }
  return SimpleType::nonabelian(has15 ? "A8" : "PSL3_4", root, width);
}

bool listed_order(std::uint64_t val, std::string& name) {
  for (const auto& e : simple_order_table()) {
    if (e.order == val) {
      name = e.name;
      return true;
    }
  }
  return false;
}

}  // namespace

SimpleType identify_type(const PermGroup& G, const PermGroup& B,
                         const PermGroup& A, SeedStream& rng) {
  (void)G;
  Section s{B, A};
  require_input(!s.trivial_quotient(), "type of an empty section");
  Factored f = s.order_factored();
  if (section_abelian(B, A)) {
    check_invariant(f.size() == 1, "abelian chief factor has prime power order");
    std::uint64_t p = f.begin()->first;
    check_invariant(section_elementary_prime(B, A) == p,
                    "abelian chief factor is elementary");
    return SimpleType::cyclic(p, static_cast<unsigned>(f.begin()->second));
  }
  int g = 0;
  for (const auto& [q, e] : f) {
    (void)q;
    g = std::gcd(g, e);
  }
  for (int m = g; m >= 1; --m) {
    if (g % m != 0) continue;
    std::uint64_t val = 1;
    bool fits = true;
    Factored root;
    for (const auto& [q, e] : f) {
      int re = e / m;
      root[q] = re;
      for (int i = 0; i < re && fits; ++i) {
        val *= q;
        if (val > kOrderTableLimit) fits = false;
      }
    }
    if (!fits) continue;
    if (val == 20160)
      return resolve_order_20160(B, A, root, static_cast<unsigned>(m), rng);
    std::string name;
    if (listed_order(val, name))
      return SimpleType::nonabelian(name, root, static_cast<unsigned>(m));
  }
  return SimpleType::nonabelian("unknown-simple(" + bigint_str(s.order()) + ")",
                                f, 1);
}

PermGroup minimal_closure_over(const PermGroup& B, const PermGroup& A,
                               SeedStream& rng) {
  require_input(B.order() > A.order(), "minimal closure over the whole group");
  PermGroup best = B;
  int quiet = 0;
  auto consider = [&](const Perm& y) {
    if (quiet >= kClosureConfirms || A.contains(y)) return;
    PermGroup cand = normal_closure(B, A, {y}, best.order());
    if (cand.order() < best.order()) {
      best = cand;
      quiet = 0;
    } else {
      ++quiet;
    }
  };
  for (const Perm& b : B.generators()) {
    consider(b);
    for (const Perm& y : prime_parts(b)) consider(y);
  }
  for (int i = 0; i < kClosureStarts && quiet < kClosureConfirms; ++i) {
    Perm x = B.random_element(rng);
    consider(x);
    for (const Perm& y : prime_parts(x)) consider(y);
  }
  // A run that never beat B has already spent a full confirmation budget on
  // the same draw distribution shrink_closure would use, so shrinking is
  // only worthwhile once a proper candidate exists.
  if (best.order() == B.order()) return best;
  return shrink_closure(B, A, best, rng);
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& G,
                                                const PermGroup& K,
                                                SeedStream& rng) {
  require_input(G.order() > K.order(),
                "minimal normal subgroups of a trivial quotient");
  std::vector<PermGroup> cands;
  auto consider = [&](const Perm& x) {
    if (K.contains(x)) return;
    cands.push_back(normal_closure(G, K, {x}));
  };
  for (const Perm& g : G.generators()) {
    consider(g);
    for (const Perm& y : prime_parts(g)) consider(y);
  }
  for (int i = 0; i < kRandomNormalDraws; ++i) {
    Perm x = G.random_element(rng);
    consider(x);
    for (const Perm& y : prime_parts(x)) consider(y);
  }

  auto reduce = [&](std::vector<PermGroup> in) {
    std::sort(in.begin(), in.end(), [](const PermGroup& a, const PermGroup& b) {
      return a.order() < b.order();
    });
    std::vector<PermGroup> kept;
    for (PermGroup& n : in) {
      bool covered = false;
      for (const PermGroup& m : kept) {
        if (n.contains_group(m)) {
          covered = true;
          break;
        }
      }
      if (!covered) kept.push_back(std::move(n));
    }
    return kept;
  };

  std::vector<PermGroup> mins = reduce(std::move(cands));
  for (PermGroup& n : mins) n = shrink_closure(G, K, std::move(n), rng);
  mins = reduce(std::move(mins));

  // Products of distinct minimal subgroups can hide further minimal ones
  // (all diagonals of an elementary socle): one pairwise pass covers them.
  std::vector<PermGroup> extra = mins;
  for (std::size_t i = 0; i < mins.size(); ++i) {
    for (std::size_t j = i + 1; j < mins.size(); ++j) {
      Perm x = mins[i].random_element(rng) * mins[j].random_element(rng);
      if (K.contains(x)) continue;
      extra.push_back(
          shrink_closure(G, K, normal_closure(G, K, {x}), rng));
    }
  }
  return reduce(std::move(extra));
}

ChiefSeries chief_series(const PermGroup& G, const PermGroup& K,
                         const std::vector<PermGroup>& through,
                         SeedStream& rng) {
  require_input(K.degree() == G.degree(), "kernel degree mismatch");
  require_input(is_normal_in(K, G), "series bottom must be normal");
  std::vector<PermGroup> backbone = {K};
  std::vector<PermGroup> ordered = through;
  std::sort(ordered.begin(), ordered.end(),
            [](const PermGroup& a, const PermGroup& b) {
              return a.order() < b.order();
            });
  for (const PermGroup& t : ordered) {
    require_input(t.degree() == G.degree(), "through subgroup degree mismatch");
    require_input(is_normal_in(t, G), "through subgroup must be normal");
    require_input(t.contains_group(backbone.back()),
                  "through subgroups must form a chain over the bottom");
    if (t.order() > backbone.back().order()) backbone.push_back(t);
  }
  require_input(G.contains_group(backbone.back()),
                "through subgroup outside the group");
  if (G.order() > backbone.back().order()) backbone.push_back(G);

  ChiefSeries out;
  out.ambient = G;
  out.terms.push_back(backbone.front());
  for (std::size_t i = 0; i + 1 < backbone.size(); ++i) {
    refine_layer(G, backbone[i], backbone[i + 1], out.terms, rng);
    out.terms.push_back(backbone[i + 1]);
  }
  for (std::size_t i = 0; i + 1 < out.terms.size(); ++i)
    out.types.push_back(identify_type(G, out.terms[i + 1], out.terms[i], rng));
  return out;
}

ChiefSeries chief_series(const PermGroup& G, SeedStream& rng) {
  return chief_series(G, PermGroup::trivial(G.degree()), {}, rng);
}

}  // namespace cgt
