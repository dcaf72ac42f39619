// Acceptance gates for the radical engine.  A fixed suite of small groups is
// crossed with a fixed list of formation expressions; engine results are
// compared against brute-force oracles, structural intersection identities,
// quotient compatibility, series-length bounds, a table of known lengths,
// determinism reruns and timing ceilings.  One PASS/FAIL line per gate; the
// exit status is nonzero when any gate fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cgt/bigint.hpp"
#include "cgt/catalog.hpp"
#include "cgt/centralizer.hpp"
#include "cgt/chief.hpp"
#include "cgt/errors.hpp"
#include "cgt/formation.hpp"
#include "cgt/oracle.hpp"
#include "cgt/perm_group.hpp"
#include "cgt/quotient.hpp"
#include "cgt/radical.hpp"
#include "cgt/rng.hpp"
#include "cgt/structure.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

struct Gate {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;  // keep the first offender
    pass = false;
  }
};

int emitted = 0;
bool all_pass = true;

void report(int number, const Gate& g, const std::string& summary,
            double elapsed) {
  std::ostringstream line;
  line << "criterion " << number << ": " << (g.pass ? "PASS" : "FAIL") << "  "
       << summary;
  if (!g.pass) line << "  [" << g.detail << "]";
  line.setf(std::ios::fixed);
  line.precision(1);
  line << "  (" << elapsed << " s)";
  std::cout << line.str() << "\n" << std::flush;
  ++emitted;
  all_pass = all_pass && g.pass;
}

// The comparison suite: named catalog expressions, every order at most 5000.
const std::vector<std::string> kSuite = {
    "sym(3)",
    "sym(4)",
    "sym(5)",
    "sym(6)",
    "alt(4)",
    "alt(5)",
    "alt(6)",
    "cyclic(6)",
    "cyclic(12)",
    "cyclic(30)",
    "dihedral(8)",
    "dihedral(12)",
    "dihedral(16)",
    "dihedral(20)",
    "q8",
    "elemab(2,2)",
    "elemab(2,3)",
    "elemab(3,2)",
    "psl2(5)",
    "psl2(7)",
    "psl2(11)",
    "psl2(13)",
    "alt(5) x cyclic(6)",
    "wr(cyclic(2), 3)",
    "wr(sym(3), 2)",
    "wr(cyclic(3), 3)",
    "wr(alt(4), 2)",
    "wr(cyclic(2), 4)",
    "wr(sym(3), 3)",
    "wr(dihedral(8), 2)",
    "sym(4) x cyclic(2)",
    "sym(3) x q8",
    "psl2(5) x cyclic(2)",
    "sym(4) x sym(3)",
    "q8 x cyclic(3)",
};

const std::vector<std::string> kFormations = {
    "triv",    "all",     "sol",     "nil",         "pgrp(2)",
    "pgrp(3)", "pigrp(2,3)", "pnil(2)", "pnil(3)",  "psol(2)",
    "qnil",    "local(*->nil)", "meet(nil,pigrp(2,3))",
};

std::vector<cgt::PermGroup> build_suite() {
  std::vector<cgt::PermGroup> out;
  out.reserve(kSuite.size());
  for (const std::string& expr : kSuite) out.push_back(cgt::parse_catalog(expr));
  return out;
}

cgt::PermGroup triv_of(const cgt::PermGroup& G) {
  return cgt::PermGroup::trivial(G.degree());
}

// Nonsoluble length computed through the soluble radical, independently of
// the engine's 2-soluble route: quotient by the soluble radical, then by the
// generalized Fitting subgroup, until the remainder is soluble.
unsigned nonsoluble_length(const cgt::PermGroup& G, cgt::SeedStream& rng) {
  cgt::PermGroup K = triv_of(G);
  unsigned count = 0;
  while (!cgt::is_soluble(G, K)) {
    cgt::PermGroup R = cgt::fradical(G, K, cgt::Formation::soluble(), rng);
    K = cgt::fstar_radical(G, R, rng);
    ++count;
    cgt::check_invariant(count <= 64, "nonsoluble length failed to converge");
  }
  return count;
}

}  // namespace

// ---- gate 1: engine radicals equal the lattice oracle ----------------------
// ---- gate 2: o_sigma equals the composition-factor oracle ------------------
void gates_oracle(const std::vector<cgt::PermGroup>& suite) {
  Clock::time_point start = Clock::now();
  Gate g1;
  std::size_t comparisons = 0;
  std::vector<cgt::NormalLattice> lats;
  lats.reserve(suite.size());
  std::vector<cgt::Formation> forms;
  for (const std::string& fe : kFormations) forms.push_back(cgt::parse_formation(fe));

  for (std::size_t gi = 0; gi < suite.size(); ++gi) {
    const cgt::PermGroup& G = suite[gi];
    std::cerr << "[trace] lattice " << kSuite[gi] << "\n" << std::flush;
    lats.push_back(cgt::normal_subgroups(G));
    for (std::size_t fi = 0; fi < forms.size(); ++fi) {
      std::cerr << "[trace] " << kSuite[gi] << " / " << kFormations[fi] << "\n"
                << std::flush;
      cgt::SeedStream engine_rng(cgt::kDefaultSeed + fi);
      cgt::SeedStream oracle_rng(cgt::kDefaultSeed + 1000 + fi);
      cgt::PermGroup engine =
          cgt::fradical(G, triv_of(G), forms[fi], engine_rng);
      cgt::PermGroup oracle =
          cgt::radical_oracle(G, forms[fi], lats.back(), oracle_rng);
      ++comparisons;
      if (!engine.same_group(oracle)) {
        g1.fail(kSuite[gi] + " / " + kFormations[fi] + ": engine " +
                cgt::bigint_str(engine.order()) + " vs oracle " +
                cgt::bigint_str(oracle.order()));
      }
    }
  }
  double elapsed = secs_since(start);
  if (elapsed > 600.0) g1.fail("exceeded the 600 s budget");
  report(1, g1,
         "radical vs oracle: " + std::to_string(suite.size()) + " groups x " +
             std::to_string(kFormations.size()) + " formations, " +
             std::to_string(comparisons) + " comparisons",
         elapsed);

  Clock::time_point start2 = Clock::now();
  Gate g2;
  const std::vector<std::pair<std::string, cgt::TypePredicate>> sigmas = {
      {"cyclic{2}", cgt::tp_cyclic_among({2})},
      {"cyclic", cgt::tp_cyclic_any()},
      {"coprime{2}", cgt::tp_coprime_to({2})},
      {"psoluble{2}", cgt::tp_p_soluble(2)},
  };
  std::size_t sigma_comparisons = 0;
  for (std::size_t gi = 0; gi < suite.size(); ++gi) {
    const cgt::PermGroup& G = suite[gi];
    for (const auto& [label, sigma] : sigmas) {
      cgt::SeedStream rng(cgt::kDefaultSeed + 31);
      cgt::PermGroup engine = cgt::o_sigma(G, triv_of(G), sigma, rng);
      cgt::PermGroup oracle = cgt::esigma_radical_oracle(G, sigma, lats[gi]);
      ++sigma_comparisons;
      if (!engine.same_group(oracle)) {
        g2.fail(kSuite[gi] + " / " + label + ": engine " +
                cgt::bigint_str(engine.order()) + " vs oracle " +
                cgt::bigint_str(oracle.order()));
      }
    }
  }
  double elapsed2 = secs_since(start2);
  if (elapsed2 > 120.0) g2.fail("exceeded the 120 s budget");
  report(2, g2,
         "core operator vs oracle: 4 type classes, " +
             std::to_string(sigma_comparisons) + " comparisons",
         elapsed2);
}

// ---- gate 3: radicals equal centralizer/innerizer intersections ------------
void gate_intersections(const std::vector<cgt::PermGroup>& suite) {
  Clock::time_point start = Clock::now();
  Gate g;
  std::size_t checks = 0;
  for (std::size_t gi = 0; gi < suite.size(); ++gi) {
    const cgt::PermGroup& G = suite[gi];
    cgt::SeedStream rng(cgt::kDefaultSeed + 77);
    cgt::ChiefSeries s = cgt::chief_series(G, rng);
    cgt::PermGroup inter_all = G;
    cgt::PermGroup inter_two = G;
    cgt::PermGroup inter_nonab = G;
    cgt::PermGroup inter_star = G;
    for (std::size_t i = 0; i < s.types.size(); ++i) {
      const cgt::PermGroup& A = s.terms[i];
      const cgt::PermGroup& B = s.terms[i + 1];
      cgt::PermGroup C = cgt::centralizer_of_section(G, B, A);
      inter_all = cgt::intersect_with_normal(inter_all, C);
      if (s.types[i].simple_order.count(2) > 0)
        inter_two = cgt::intersect_with_normal(inter_two, C);
      if (!s.types[i].abelian)
        inter_nonab = cgt::intersect_with_normal(inter_nonab, C);
      inter_star = cgt::intersect_with_normal(inter_star, cgt::join(B, C));
    }
    struct Case {
      const char* label;
      cgt::PermGroup engine;
      const cgt::PermGroup* expected;
    };
    cgt::SeedStream er(cgt::kDefaultSeed + 78);
    const Case cases[] = {
        {"fitting", cgt::fradical(G, triv_of(G), cgt::Formation::nilpotent(), er),
         &inter_all},
        {"o_2'2", cgt::opp_radical(G, triv_of(G), 2, er), &inter_two},
        {"soluble", cgt::fradical(G, triv_of(G), cgt::Formation::soluble(), er),
         &inter_nonab},
        {"fstar", cgt::fstar_radical(G, triv_of(G), er), &inter_star},
    };
    for (const Case& c : cases) {
      ++checks;
      if (!c.engine.same_group(*c.expected)) {
        g.fail(kSuite[gi] + " / " + c.label + ": engine " +
               cgt::bigint_str(c.engine.order()) + " vs intersection " +
               cgt::bigint_str(c.expected->order()));
      }
    }
  }
  report(3, g,
         "intersection identities: " + std::to_string(checks) +
             " checks across the suite",
         secs_since(start));
}

// ---- gate 4: generalized centralizers commute with quotients ---------------
void gate_quotients() {
  Clock::time_point start = Clock::now();
  Gate g;
  // (group, kernel builder) pairs; kernels are engine radicals or residuals,
  // all of small index so the quotient action stays tiny.
  struct Pair {
    const char* expr;
    const char* kernel;  // "nil", "pgrp2" or "residual"
  };
  const Pair pairs[] = {
      {"sym(4)", "nil"},          {"sym(4)", "derived"},
      {"sym(5)", "residual"},     {"sym(6)", "residual"},
      {"alt(4)", "nil"},          {"wr(sym(3), 2)", "nil"},
      {"alt(5) x cyclic(6)", "residual"}, {"q8 x cyclic(3)", "pgrp2"},
      {"psl2(7) x cyclic(2)", "residual"}, {"dihedral(16)", "nil"},
  };
  const cgt::Formation fs[] = {cgt::Formation::nilpotent(),
                               cgt::Formation::quasinilpotent()};
  std::size_t samples = 0;
  for (const Pair& pr : pairs) {
    if (samples >= 20) break;
    cgt::PermGroup G = cgt::parse_catalog(pr.expr);
    cgt::SeedStream rng(cgt::kDefaultSeed + 91);
    cgt::PermGroup N = triv_of(G);
    if (std::string(pr.kernel) == "nil")
      N = cgt::fradical(G, triv_of(G), cgt::Formation::nilpotent(), rng);
    else if (std::string(pr.kernel) == "pgrp2")
      N = cgt::fradical(G, triv_of(G), cgt::Formation::p_group(2), rng);
    else if (std::string(pr.kernel) == "derived")
      N = cgt::derived_subgroup(G);
    else
      N = cgt::perfect_residual(G);
    if (N.is_trivial() || N.order() == G.order()) {
      g.fail(std::string(pr.expr) + ": kernel choice degenerated");
      continue;
    }
    cgt::ChiefSeries s = cgt::chief_series(G, N, {}, rng);
    cgt::CosetAction action(G, N, 100);
    const cgt::PermGroup& Q = action.quotient();
    for (std::size_t i = 0; i < s.types.size() && samples < 20; ++i) {
      const cgt::PermGroup& A = s.terms[i];
      const cgt::PermGroup& B = s.terms[i + 1];
      for (const cgt::Formation& f : fs) {
        if (samples >= 20) break;
        cgt::PermGroup gc =
            cgt::generalized_centralizer(G, B, A, s.types[i], f, rng);
        cgt::PermGroup a_img = action.image_of_group(A);
        cgt::PermGroup b_img = action.image_of_group(B);
        cgt::SimpleType qt = cgt::identify_type(Q, b_img, a_img, rng);
        cgt::PermGroup gc_q =
            cgt::generalized_centralizer(Q, b_img, a_img, qt, f, rng);
        ++samples;
        if (!action.image_of_group(gc).same_group(gc_q)) {
          g.fail(std::string(pr.expr) + " factor " + std::to_string(i) +
                 ": image order " +
                 cgt::bigint_str(action.image_of_group(gc).order()) +
                 " vs quotient-side " + cgt::bigint_str(gc_q.order()));
        }
      }
    }
  }
  if (samples < 20) g.fail("only " + std::to_string(samples) + " samples");
  report(4, g,
         "quotient compatibility: " + std::to_string(samples) +
             " sampled generalized centralizers",
         secs_since(start));
}

// ---- gate 5: chief series length is at most 2n-3 ---------------------------
void gate_chain_bound() {
  Clock::time_point start = Clock::now();
  Gate g;
  const std::vector<std::string> exprs = {
      "sym(2)",  "sym(3)",  "sym(4)",  "sym(5)",  "sym(6)",  "sym(7)",
      "sym(8)",  "sym(9)",  "sym(10)", "sym(15)", "sym(20)", "sym(30)",
      "sym(40)", "sym(50)", "alt(5)",  "alt(6)",  "alt(7)",  "alt(8)",
      "alt(9)",  "alt(10)", "alt(13)", "alt(20)", "alt(35)", "alt(50)",
      "cyclic(2)", "cyclic(6)", "cyclic(8)", "cyclic(12)", "cyclic(16)",
      "cyclic(24)", "cyclic(30)", "cyclic(36)", "cyclic(48)", "cyclic(50)",
      "dihedral(6)", "dihedral(8)", "dihedral(12)", "dihedral(16)",
      "dihedral(20)", "dihedral(24)", "dihedral(48)", "dihedral(64)",
      "dihedral(100)", "elemab(2,2)", "elemab(2,3)", "elemab(2,4)",
      "elemab(2,5)", "elemab(3,2)", "elemab(3,3)", "elemab(5,2)",
      "elemab(7,2)", "psl2(5)", "psl2(7)", "psl2(11)", "psl2(13)",
      "psl2(17)", "psl2(19)", "psl2(23)", "psl2(29)", "psl2(31)",
      "psl2(37)", "psl2(41)", "psl2(43)", "psl2(47)", "q8",
      "wr(cyclic(2), 3)", "wr(cyclic(2), 5)", "wr(cyclic(2), 10)",
      "wr(sym(3), 3)", "wr(alt(5), 2)", "wr(alt(5), 5)", "wr(sym(4), 3)",
      "wr(q8, 5)", "wr(dihedral(12), 4)", "wr(cyclic(3), 9)",
      "sym(4) x sym(5)", "alt(5) x alt(5)", "alt(5) x alt(6)",
      "psl2(7) x psl2(7)", "sym(3) x q8",
  };
  std::size_t checked = 0;
  unsigned max_degree = 0;
  for (const std::string& expr : exprs) {
    cgt::PermGroup G = cgt::parse_catalog(expr);
    unsigned n = G.degree();
    if (n < 2) continue;
    max_degree = std::max(max_degree, n);
    cgt::SeedStream rng(cgt::kDefaultSeed + 5);
    cgt::ChiefSeries s = cgt::chief_series(G, rng);
    ++checked;
    std::size_t length = s.types.size();
    if (!(s.terms.front().is_trivial() &&
          s.terms.back().order() == G.order())) {
      g.fail(expr + ": series endpoints are wrong");
    } else if (length + 0 > 2u * n - 3u) {
      g.fail(expr + ": length " + std::to_string(length) + " exceeds " +
             std::to_string(2 * n - 3));
    }
  }
  report(5, g,
         "series bound: " + std::to_string(checked) +
             " catalog groups, degree up to " + std::to_string(max_degree),
         secs_since(start));
}

// ---- gate 6: length table plus the alternating-length identity -------------
void gate_lengths(const std::vector<cgt::PermGroup>& suite) {
  Clock::time_point start = Clock::now();
  Gate g;
  struct Row {
    const char* expr;
    cgt::LengthKind kind;
    std::optional<unsigned> expected;
    const char* label;
  };
  const Row rows[] = {
      {"sym(4)", cgt::LengthKind::h(), 3, "h(sym(4))"},
      {"alt(5)", cgt::LengthKind::h(), std::nullopt, "h(alt(5))"},
      {"sym(4)", cgt::LengthKind::l_p(2), 2, "l_2(sym(4))"},
      {"sym(3)", cgt::LengthKind::l_p(2), 1, "l_2(sym(3))"},
      {"sym(4)", cgt::LengthKind::lambda(), 0, "lambda(sym(4))"},
      {"sym(5)", cgt::LengthKind::lambda(), 1, "lambda(sym(5))"},
      {"alt(5)", cgt::LengthKind::h_star(), 1, "hstar(alt(5))"},
      {"sym(5)", cgt::LengthKind::h_star(), 2, "hstar(sym(5))"},
  };
  std::size_t checks = 0;
  for (const Row& r : rows) {
    cgt::PermGroup G = cgt::parse_catalog(r.expr);
    cgt::SeedStream rng(cgt::kDefaultSeed + 13);
    std::optional<unsigned> got = cgt::flength(G, triv_of(G), r.kind, rng);
    ++checks;
    if (got != r.expected) {
      auto str = [](std::optional<unsigned> v) {
        return v ? std::to_string(*v) : std::string("infinity");
      };
      g.fail(std::string(r.label) + ": got " + str(got) + ", expected " +
             str(r.expected));
    }
  }
  // The 2-soluble route and the soluble-radical route must agree everywhere.
  for (std::size_t gi = 0; gi < suite.size(); ++gi) {
    cgt::SeedStream rng(cgt::kDefaultSeed + 14);
    std::optional<unsigned> viaTwo =
        cgt::flength(suite[gi], triv_of(suite[gi]), cgt::LengthKind::lambda_p(2),
                     rng);
    unsigned viaSoluble = nonsoluble_length(suite[gi], rng);
    ++checks;
    if (!viaTwo || *viaTwo != viaSoluble) {
      g.fail(kSuite[gi] + ": lambda_2 " +
             (viaTwo ? std::to_string(*viaTwo) : std::string("infinity")) +
             " vs nonsoluble length " + std::to_string(viaSoluble));
    }
  }
  report(6, g, "length table and identity: " + std::to_string(checks) + " checks",
         secs_since(start));
}

// ---- gate 7: radicals are independent of generator order and seed ----------
void gate_determinism(const std::vector<cgt::PermGroup>& suite) {
  Clock::time_point start = Clock::now();
  Gate g;
  std::vector<cgt::Formation> forms;
  for (const std::string& fe : kFormations) forms.push_back(cgt::parse_formation(fe));
  std::size_t reruns = 0;
  for (std::size_t gi = 0; gi < suite.size(); ++gi) {
    const cgt::PermGroup& G = suite[gi];
    for (std::size_t fi = 0; fi < forms.size(); ++fi) {
      cgt::SeedStream base_rng(cgt::kDefaultSeed);
      cgt::PermGroup baseline = cgt::fradical(G, triv_of(G), forms[fi], base_rng);
      for (unsigned r = 1; r <= 10; ++r) {
        std::uint64_t seed = cgt::kDefaultSeed + 7919 * (gi + 1) + 97 * fi + r;
        cgt::SeedStream shuffler(seed);
        std::vector<cgt::Perm> gens = G.generators();
        std::shuffle(gens.begin(), gens.end(), shuffler.engine());
        cgt::PermGroup H = cgt::PermGroup::generated(G.degree(), gens);
        cgt::SeedStream rng(seed);
        cgt::PermGroup again = cgt::fradical(H, triv_of(H), forms[fi], rng);
        ++reruns;
        if (!again.same_group(baseline)) {
          g.fail(kSuite[gi] + " / " + kFormations[fi] + " rerun " +
                 std::to_string(r) + ": order " +
                 cgt::bigint_str(again.order()) + " vs " +
                 cgt::bigint_str(baseline.order()));
        }
      }
    }
  }
  report(7, g,
         "determinism: " + std::to_string(reruns) +
             " shuffled-generator reruns",
         secs_since(start));
}

// ---- gate 8: every desk-scale computation stays under five seconds ---------
void gate_performance() {
  Clock::time_point start = Clock::now();
  Gate g;
  std::vector<std::string> exprs;
  for (unsigned n = 2; n <= 30; ++n) exprs.push_back("sym(" + std::to_string(n) + ")");
  for (unsigned n = 3; n <= 30; ++n) exprs.push_back("alt(" + std::to_string(n) + ")");
  const std::vector<std::string> transitive = {
      "cyclic(31)",        "cyclic(48)",       "cyclic(50)",
      "dihedral(50)",      "dihedral(96)",     "dihedral(100)",
      "psl2(17)",          "psl2(23)",         "psl2(31)",
      "psl2(47)",          "q8",               "wr(cyclic(2), 10)",
      "wr(cyclic(2), 25)", "wr(sym(3), 8)",    "wr(sym(4), 10)",
      "wr(alt(5), 10)",    "wr(dihedral(10), 5)", "wr(q8, 6)",
      "wr(cyclic(3), 9)",
  };
  exprs.insert(exprs.end(), transitive.begin(), transitive.end());

  long long worst_ms = 0;
  std::string worst_label;
  std::size_t computations = 0;
  auto timed = [&](const std::string& label, auto&& fn) {
    Clock::time_point t0 = Clock::now();
    fn();
    long long t = ms_since(t0);
    ++computations;
    if (t > worst_ms) {
      worst_ms = t;
      worst_label = label;
    }
    if (t >= 5000) g.fail(label + " took " + std::to_string(t) + " ms");
  };

  for (const std::string& expr : exprs) {
    cgt::PermGroup G = cgt::parse_catalog(expr);
    cgt::PermGroup K = triv_of(G);
    cgt::SeedStream rng(cgt::kDefaultSeed + 3);
    timed(expr + " nil", [&] {
      cgt::fradical(G, K, cgt::Formation::nilpotent(), rng);
    });
    timed(expr + " sol", [&] {
      cgt::fradical(G, K, cgt::Formation::soluble(), rng);
    });
    timed(expr + " qnil", [&] {
      cgt::fradical(G, K, cgt::Formation::quasinilpotent(), rng);
    });
    timed(expr + " h", [&] { cgt::flength(G, K, cgt::LengthKind::h(), rng); });
    timed(expr + " l_2",
          [&] { cgt::flength(G, K, cgt::LengthKind::l_p(2), rng); });
    timed(expr + " hstar",
          [&] { cgt::flength(G, K, cgt::LengthKind::h_star(), rng); });
    timed(expr + " lambda_2",
          [&] { cgt::flength(G, K, cgt::LengthKind::lambda_p(2), rng); });
  }

  // Qualitative scaling: nilpotent-radical times along sym(n) may not jump
  // by more than a factor of 20 between sampled degrees (with a 50 ms floor
  // so that timer noise on tiny cases cannot trip the gate).
  long long prev = -1;
  for (unsigned n = 10; n <= 30; n += 5) {
    cgt::PermGroup G = cgt::parse_catalog("sym(" + std::to_string(n) + ")");
    cgt::SeedStream rng(cgt::kDefaultSeed + 4);
    Clock::time_point t0 = Clock::now();
    cgt::fradical(G, triv_of(G), cgt::Formation::nilpotent(), rng);
    long long t = ms_since(t0);
    if (prev >= 0 && t > 20 * std::max(prev, 50LL)) {
      g.fail("sym(" + std::to_string(n) + ") nil jumped to " +
             std::to_string(t) + " ms from " + std::to_string(prev));
    }
    prev = t;
  }

  report(8, g,
         "performance: " + std::to_string(computations) +
             " computations, worst " + std::to_string(worst_ms) + " ms (" +
             worst_label + ")",
         secs_since(start));
}

int main() {
  Clock::time_point start = Clock::now();
  try {
    std::vector<cgt::PermGroup> suite = build_suite();
    gates_oracle(suite);
    gate_intersections(suite);
    gate_quotients();
    gate_chain_bound();
    gate_lengths(suite);
    gate_determinism(suite);
    gate_performance();
  } catch (const std::exception& e) {
    std::cout << "acceptance aborted: " << e.what() << "\n";
    return 2;
  }
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(1);
  line << "acceptance: " << (all_pass ? "all gates passed" : "FAILURES above")
       << " (" << emitted << " criteria, " << secs_since(start) << " s total)";
  std::cout << line.str() << "\n";
  return all_pass ? 0 : 1;
}
