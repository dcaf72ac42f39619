#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cgt/chief.hpp"
#include "cgt/formation.hpp"
#include "cgt/perm_group.hpp"
#include "cgt/rng.hpp"
#include "cgt/section.hpp"

namespace cgt {

// Audit record of one radical computation over G/K.  Every subgroup is a
// preimage in G.  subgroup <= intersection <= each centralizer, and the
// sweep climbs from K to subgroup.
struct RadicalReport {
  PermGroup subgroup;                     // the radical itself
  ChiefSeries series;                     // chief series that drove the run
  std::vector<std::size_t> used_factors;  // indices of factors with nonempty value
  std::vector<PermGroup> centralizers;    // generalized centralizers, parallel
  PermGroup intersection;                 // meet of the centralizers (G if none)
  std::vector<PermGroup> sweep;           // extension-closure sweep, K upward
};

// Preimage of the f(type)-radical of G/C_G(B/A) over the plain centralizer,
// for a chief factor B/A of G and the Baer function f of the formation.
// The quasinilpotent class short-circuits to B C_G(B/A).  A formation
// without a Baer function, or an empty value at the type, is rejected.
PermGroup generalized_centralizer(const PermGroup& G, const PermGroup& B,
                                  const PermGroup& A, const SimpleType& type,
                                  const Formation& f, SeedStream& rng);
PermGroup generalized_centralizer(const PermGroup& G, const Section& s,
                                  const Formation& f, SeedStream& rng);

// Preimage of the F-radical of G/K.  Sigma classes go through o_sigma,
// meets through an alternating fixpoint, and classes with a Baer function
// through the centralizer intersection followed by the extension-closure
// sweep.  The empty class is rejected.
PermGroup fradical(const PermGroup& G, const PermGroup& K, const Formation& f,
                   SeedStream& rng);
RadicalReport fradical_report(const PermGroup& G, const PermGroup& K,
                              const Formation& f, SeedStream& rng);

// Generalized Fitting subgroup of G/K as a preimage.
PermGroup fstar_radical(const PermGroup& G, const PermGroup& K,
                        SeedStream& rng);

// p-nilpotent radical O_{p',p} of G/K, cross-checked against the composite
// route O_p over the p'-core.
PermGroup opp_radical(const PermGroup& G, const PermGroup& K, std::uint64_t p,
                      SeedStream& rng);

// G/K soluble: the perfect residual of G lies in K.
bool is_soluble(const PermGroup& G, const PermGroup& K);

// G/K p-soluble: the p-soluble radical of G/K is everything.
bool is_p_soluble(const PermGroup& G, const PermGroup& K, std::uint64_t p,
                  SeedStream& rng);

// A length variant: the per-step radical together with the infinite-length
// guard and the zero-length base case.
//   h        Fitting series; infinite unless soluble; ends at the trivial group
//   l_p      O_{p',p} series; infinite unless p-soluble; ends at a p'-group
//   h_star   generalized Fitting series; always finite; ends at the trivial group
//   lambda_p alternating p-soluble / semisimple series; ends once p-soluble
//   lambda   lambda_p at p = 2
struct LengthKind {
  enum class Base { H, Lp, HStar, LambdaP };
  Base base = Base::H;
  std::uint64_t p = 0;

  static LengthKind h() { return {Base::H, 0}; }
  static LengthKind l_p(std::uint64_t p) { return {Base::Lp, p}; }
  static LengthKind h_star() { return {Base::HStar, 0}; }
  static LengthKind lambda_p(std::uint64_t p) { return {Base::LambdaP, p}; }
  static LengthKind lambda() { return lambda_p(2); }
};

// Length of G/K for the requested kind; an empty optional means infinite.
std::optional<unsigned> flength(const PermGroup& G, const PermGroup& K,
                                const LengthKind& kind, SeedStream& rng);

}  // namespace cgt
