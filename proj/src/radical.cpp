#include "cgt/radical.hpp"

#include <utility>

#include "cgt/centralizer.hpp"
#include "cgt/errors.hpp"
#include "cgt/structure.hpp"

namespace cgt {

namespace {

// EFRADICAL: the largest normal subgroup of G/K built as an iterated
// extension of formation members, by sweeping a chief series of G over K.
// When the factor lies in the formation, the sweep value grows by the
// {J}-radical of the current term over it; extension closure makes that
// radical capture the whole gain at once.
PermGroup ef_sweep(const PermGroup& G, const PermGroup& K, const Formation& f,
                   SeedStream& rng, std::vector<PermGroup>* trace) {
  ChiefSeries cs = chief_series(G, K, {}, rng);
  PermGroup F = K;
  if (trace) trace->push_back(F);
  for (std::size_t i = 0; i + 1 < cs.terms.size(); ++i) {
    if (!chief_factor_in_formation(f, G, cs.terms[i + 1], cs.terms[i], rng))
      continue;
    F = o_sigma(cs.terms[i + 1], F, tp_listed({cs.types[i]}), rng);
    if (trace) trace->push_back(F);
  }
  return F;
}

// FRADICAL for a class with a Baer function: intersect the generalized
// centralizers of the chief factors with nonempty value, then sweep.
PermGroup blf_radical(const PermGroup& G, const PermGroup& K,
                      const Formation& f, SeedStream& rng,
                      RadicalReport* rep) {
  ChiefSeries cs = chief_series(G, K, {}, rng);
  PermGroup T = G;
  for (std::size_t i = 0; i + 1 < cs.terms.size(); ++i) {
    const SimpleType& J = cs.types[i];
    if (f.kind() != Formation::Kind::Quasinilpotent &&
        f.baer_value(J).is_empty_class()) {
      continue;
    }
    PermGroup C =
        generalized_centralizer(G, cs.terms[i + 1], cs.terms[i], J, f, rng);
    T = intersect_with_normal(T, C);
    if (rep) {
      rep->used_factors.push_back(i);
      rep->centralizers.push_back(std::move(C));
    }
  }
  if (rep) rep->intersection = T;
  PermGroup R = ef_sweep(T, K, f, rng, rep ? &rep->sweep : nullptr);
  if (rep) {
    rep->series = std::move(cs);
    rep->subgroup = R;
  }
  return R;
}

// Meet radical by alternating fixpoint: shrink by each member radical in
// turn until a full round is stable.  Every iterate is normal in G, the
// orders strictly decrease between rounds, and the fixpoint lies in every
// member class, so it is the radical of the intersection class.
PermGroup meet_radical(const PermGroup& G, const PermGroup& K,
                       const std::vector<Formation>& parts, SeedStream& rng) {
  PermGroup N = G;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Formation& part : parts) {
      PermGroup next = fradical(N, K, part, rng);
      if (next.order() < N.order()) {
        N = std::move(next);
        changed = true;
      }
    }
  }
  return N;
}

}  // namespace

PermGroup generalized_centralizer(const PermGroup& G, const PermGroup& B,
                                  const PermGroup& A, const SimpleType& type,
                                  const Formation& f, SeedStream& rng) {
  require_input(f.has_baer_function(),
                "generalized centralizer needs a Baer function");
  PermGroup C = centralizer_of_section(G, B, A);
  if (f.kind() == Formation::Kind::Quasinilpotent) {
    // Abelian factor: B <= C, so B C = C is the plain centralizer.
    // Nonabelian factor: G/C has a unique minimal normal subgroup B C / C,
    // which is the value's radical there.  Both cases collapse to B C.
    return join(B, C);
  }
  Formation fv = f.baer_value(type);
  require_input(!fv.is_empty_class(),
                "generalized centralizer needs a nonempty value");
  if (fv.equal(Formation::triv())) return C;
  if (fv.equal(Formation::all())) return G;
  return fradical(G, C, fv, rng);
}

PermGroup generalized_centralizer(const PermGroup& G, const Section& s,
                                  const Formation& f, SeedStream& rng) {
  SimpleType J = identify_type(G, s.top, s.bottom, rng);
  return generalized_centralizer(G, s.top, s.bottom, J, f, rng);
}

bool chief_factor_in_formation(const Formation& f, const PermGroup& G,
                               const PermGroup& B, const PermGroup& A,
                               SeedStream& rng) {
  // Chief factors are direct powers of simple groups, hence quasinilpotent.
  if (f.kind() == Formation::Kind::Quasinilpotent) return true;
  SimpleType J = identify_type(G, B, A, rng);
  Formation fv = f.baer_value(J);
  if (fv.is_empty_class()) return false;
  if (J.abelian) return true;
  // Nonabelian factor: membership means the factor is its own value-radical.
  return fradical(B, A, fv, rng).order() == B.order();
}

PermGroup ef_radical(const PermGroup& G, const PermGroup& K,
                     const Formation& f, SeedStream& rng) {
  return ef_sweep(G, K, f, rng, nullptr);
}

PermGroup fradical(const PermGroup& G, const PermGroup& K, const Formation& f,
                   SeedStream& rng) {
  require_input(!f.is_empty_class(), "radical undefined for the empty class");
  switch (f.kind()) {
    case Formation::Kind::Sigma:
      return o_sigma(G, K, f.sigma(), rng);
    case Formation::Kind::Meet:
      return meet_radical(G, K, f.parts(), rng);
    default:
      return blf_radical(G, K, f, rng, nullptr);
  }
}

RadicalReport fradical_report(const PermGroup& G, const PermGroup& K,
                              const Formation& f, SeedStream& rng) {
  require_input(!f.is_empty_class(), "radical undefined for the empty class");
  RadicalReport rep;
  switch (f.kind()) {
    case Formation::Kind::Sigma:
    case Formation::Kind::Meet:
      // No Baer machinery runs: record the series for audit, an empty
      // centralizer collection (intersection G) and the bare result.
      rep.subgroup = fradical(G, K, f, rng);
      rep.series = chief_series(G, K, {}, rng);
      rep.intersection = G;
      rep.sweep = {K, rep.subgroup};
      break;
    default:
      blf_radical(G, K, f, rng, &rep);
      break;
  }
  check_invariant(rep.intersection.contains_group(rep.subgroup),
                  "radical escapes the centralizer intersection");
  return rep;
}

PermGroup fstar_radical(const PermGroup& G, const PermGroup& K,
                        SeedStream& rng) {
  return fradical(G, K, Formation::quasinilpotent(), rng);
}

PermGroup opp_radical(const PermGroup& G, const PermGroup& K, std::uint64_t p,
                      SeedStream& rng) {
  PermGroup R = fradical(G, K, Formation::p_nilpotent(p), rng);
  // Independent route: the p-core over the p'-core.
  PermGroup core = o_sigma(G, K, tp_coprime_to({p}), rng);
  PermGroup composite = o_sigma(G, core, tp_cyclic_among({p}), rng);
  check_invariant(R.order() == composite.order() && R.contains_group(composite),
                  "p-nilpotent radical routes disagree");
  return R;
}

bool is_soluble(const PermGroup& G, const PermGroup& K) {
  return K.contains_group(perfect_residual(G));
}

bool is_p_soluble(const PermGroup& G, const PermGroup& K, std::uint64_t p,
                  SeedStream& rng) {
  return o_sigma(G, K, tp_p_soluble(p), rng).order() == G.order();
}

namespace {

bool length_base_case(const PermGroup& G, const PermGroup& K,
                      const LengthKind& kind, SeedStream& rng) {
  switch (kind.base) {
    case LengthKind::Base::H:
    case LengthKind::Base::HStar:
      return G.order() == K.order();
    case LengthKind::Base::Lp: {
      Factored quotient = factored_div(G.order_factored(), K.order_factored());
      return quotient.find(kind.p) == quotient.end();
    }
    case LengthKind::Base::LambdaP:
      return is_p_soluble(G, K, kind.p, rng);
  }
  throw invariant_error("unreachable length kind");
}

PermGroup length_step(const PermGroup& G, const PermGroup& K,
                      const LengthKind& kind, SeedStream& rng) {
  switch (kind.base) {
    case LengthKind::Base::H:
      return fradical(G, K, Formation::nilpotent(), rng);
    case LengthKind::Base::HStar:
      return fstar_radical(G, K, rng);
    case LengthKind::Base::Lp:
      return opp_radical(G, K, kind.p, rng);
    case LengthKind::Base::LambdaP: {
      PermGroup R = o_sigma(G, K, tp_p_soluble(kind.p), rng);
      return fstar_radical(G, R, rng);
    }
  }
  throw invariant_error("unreachable length kind");
}

}  // namespace

std::optional<unsigned> flength(const PermGroup& G, const PermGroup& K,
                                const LengthKind& kind, SeedStream& rng) {
  if (kind.base == LengthKind::Base::H && !is_soluble(G, K))
    return std::nullopt;
  if (kind.base == LengthKind::Base::Lp && !is_p_soluble(G, K, kind.p, rng))
    return std::nullopt;
  PermGroup bottom = K;
  unsigned count = 0;
  while (!length_base_case(G, bottom, kind, rng)) {
    PermGroup next = length_step(G, bottom, kind, rng);
    check_invariant(next.order() > bottom.order(), "length recursion stalled");
    bottom = std::move(next);
    ++count;
  }
  return count;
}

}  // namespace cgt
