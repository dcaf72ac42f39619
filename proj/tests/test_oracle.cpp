#include "cgt/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "cgt/errors.hpp"
#include "cgt/radical.hpp"
#include "doctest.h"

using cgt::Formation;
using cgt::NormalLattice;
using cgt::Perm;
using cgt::PermGroup;
using cgt::SeedStream;
using cgt::parse_cycles;
using cgt::parse_formation;

namespace {

PermGroup sym(unsigned n) {
  std::string big = "(";
  for (unsigned i = 1; i <= n; ++i) big += (i > 1 ? " " : "") + std::to_string(i);
  big += ")";
  return PermGroup::generated(n, {parse_cycles("(1 2)", n), parse_cycles(big, n)});
}

PermGroup make(unsigned degree, const std::vector<std::string>& gens) {
  std::vector<Perm> ps;
  for (const std::string& s : gens) ps.push_back(parse_cycles(s, degree));
  return PermGroup::generated(degree, ps);
}

PermGroup q8() {
  return make(8, {"(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)"});
}

PermGroup sl23() {
  return make(8, {"(1 6 2 3)(4 7 8 5)", "(1 4 7)(2 8 5)"});
}

std::vector<std::string> factor_names(const PermGroup& g) {
  std::vector<std::string> out;
  for (const auto& t : cgt::composition_factors_oracle(g)) out.push_back(t.print());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("lattice sizes match the known counts") {
  CHECK(cgt::normal_subgroups(sym(4)).subgroups.size() == 4);
  CHECK(cgt::normal_subgroups(make(5, {"(1 2 3)", "(3 4 5)"})).subgroups.size() == 2);
  CHECK(cgt::normal_subgroups(make(6, {"(1 2 3 4 5 6)"})).subgroups.size() == 4);
  CHECK(cgt::normal_subgroups(q8()).subgroups.size() == 6);
  CHECK(cgt::normal_subgroups(sym(5)).subgroups.size() == 3);
  CHECK(cgt::normal_subgroups(make(4, {"(1 2)(3 4)", "(1 3)(2 4)"})).subgroups.size() == 5);
  CHECK(cgt::normal_subgroups(make(4, {"(1 2 3 4)", "(1 3)"})).subgroups.size() == 6);
}

TEST_CASE("lattice structure for the symmetric group on four points") {
  NormalLattice lat = cgt::normal_subgroups(sym(4));
  REQUIRE(lat.subgroups.size() == 4);
  CHECK(lat.subgroups[0].is_trivial());
  CHECK(lat.subgroups[1].order() == cgt::Bigint(4));
  CHECK(lat.subgroups[2].order() == cgt::Bigint(12));
  CHECK(lat.subgroups[3].order() == cgt::Bigint(24));
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(lat.contains[3][i]);
    CHECK(lat.contains[i][0]);
    // The chain is total here.
    for (std::size_t j = 0; j <= i; ++j) CHECK(lat.contains[i][j]);
  }
}

TEST_CASE("oracle refuses oversized groups") {
  CHECK_THROWS_AS(cgt::normal_subgroups(sym(7)), cgt::bound_error);
  CHECK_THROWS_AS(cgt::normal_subgroups(sym(5), 100), cgt::bound_error);
}

TEST_CASE("oracle bound is configurable through the environment") {
  CHECK(cgt::oracle_order_bound() == 5000);
  setenv("CGT_ORACLE_BOUND", "100", 1);
  CHECK(cgt::oracle_order_bound() == 100);
  unsetenv("CGT_ORACLE_BOUND");
  CHECK(cgt::oracle_order_bound() == 5000);
}

TEST_CASE("radical oracle values") {
  SeedStream rng(cgt::kDefaultSeed);
  PermGroup s4 = sym(4);
  NormalLattice lat4 = cgt::normal_subgroups(s4);
  PermGroup v = make(4, {"(1 2)(3 4)", "(1 3)(2 4)"});

  PermGroup r = cgt::radical_oracle(s4, Formation::nilpotent(), lat4, rng);
  CHECK(r.order() == v.order());
  CHECK(r.contains_group(v));
  CHECK(cgt::radical_oracle(s4, Formation::all(), lat4, rng).order() == s4.order());
  CHECK(cgt::radical_oracle(s4, parse_formation("local(*->nil)"), lat4, rng).order() ==
        cgt::Bigint(12));

  PermGroup s5 = sym(5);
  NormalLattice lat5 = cgt::normal_subgroups(s5);
  CHECK(cgt::radical_oracle(s5, Formation::soluble(), lat5, rng).is_trivial());
  CHECK(cgt::radical_oracle(s5, Formation::quasinilpotent(), lat5, rng).order() ==
        cgt::Bigint(60));

  CHECK_THROWS_AS(cgt::radical_oracle(s4, Formation::empty(), lat4, rng),
                  cgt::input_error);
}

TEST_CASE("engine radicals match the oracle on a spot-check set") {
  SeedStream rng(cgt::kDefaultSeed);
  std::vector<PermGroup> groups = {
      sym(3), sym(4), sym(5),
      make(4, {"(1 2 3)", "(2 3 4)"}),
      make(5, {"(1 2 3)", "(3 4 5)"}),
      make(6, {"(1 2 3 4 5 6)"}),
      make(4, {"(1 2 3 4)", "(1 3)"}),
      q8(),
      sl23(),
  };
  std::vector<Formation> forms = {
      Formation::nilpotent(),       Formation::soluble(),
      Formation::p_group(2),        Formation::quasinilpotent(),
      Formation::p_nilpotent(2),    parse_formation("local(*->nil)"),
      parse_formation("meet(nil,pigrp(2,3))"),
  };
  for (const PermGroup& g : groups) {
    NormalLattice lat = cgt::normal_subgroups(g);
    PermGroup t = PermGroup::trivial(g.degree());
    for (const Formation& f : forms) {
      CAPTURE(f.print());
      PermGroup engine = cgt::fradical(g, t, f, rng);
      PermGroup oracle = cgt::radical_oracle(g, f, lat, rng);
      CHECK(engine.order() == oracle.order());
      CHECK(engine.contains_group(oracle));
    }
  }
}

TEST_CASE("composition factors by maximal-normal descent") {
  CHECK(factor_names(sym(4)) ==
        std::vector<std::string>{"C2", "C2", "C2", "C3"});
  CHECK(factor_names(make(5, {"(1 2 3)", "(3 4 5)"})) ==
        std::vector<std::string>{"A5"});
  CHECK(factor_names(sym(5)) == std::vector<std::string>{"A5", "C2"});
  CHECK(factor_names(q8()) == std::vector<std::string>{"C2", "C2", "C2"});
  CHECK(factor_names(make(8, {"(1 2 3 4 5 6 7 8)", "(2 8)(3 7)(4 6)"})) ==
        std::vector<std::string>{"C2", "C2", "C2", "C2"});
  CHECK(factor_names(PermGroup::trivial(3)).empty());
}

TEST_CASE("sigma radicals against the composition-factor oracle") {
  SeedStream rng(cgt::kDefaultSeed);
  PermGroup a5xc6 = make(11, {"(1 2 3)", "(3 4 5)", "(6 7 8 9 10 11)"});
  std::vector<PermGroup> groups = {sym(3), sym(4), sym(5), q8(), sl23(), a5xc6};
  std::vector<cgt::TypePredicate> sigmas = {
      cgt::tp_cyclic_among({2}),
      cgt::tp_cyclic_any(),
      cgt::tp_coprime_to({2}),
      cgt::tp_p_soluble(2),
  };
  for (const PermGroup& g : groups) {
    NormalLattice lat = cgt::normal_subgroups(g);
    PermGroup t = PermGroup::trivial(g.degree());
    for (const auto& sigma : sigmas) {
      CAPTURE(sigma.print());
      PermGroup engine = cgt::o_sigma(g, t, sigma, rng);
      PermGroup oracle = cgt::esigma_radical_oracle(g, sigma, lat);
      CHECK(engine.order() == oracle.order());
      CHECK(engine.contains_group(oracle));
    }
  }
  // A named check: the odd-order core of A_5 x C_6 is the C_3 part.
  NormalLattice lat = cgt::normal_subgroups(a5xc6);
  CHECK(cgt::esigma_radical_oracle(a5xc6, cgt::tp_coprime_to({2}), lat).order() ==
        cgt::Bigint(3));
}

TEST_CASE("chief series verification against the lattice") {
  SeedStream rng(cgt::kDefaultSeed);
  std::vector<PermGroup> groups = {
      sym(3), sym(4), sym(5),
      make(6, {"(1 2 3 4 5 6)"}),
      make(4, {"(1 2 3 4)", "(1 3)"}),
      q8(),
      sl23(),
      make(4, {"(1 2 3)", "(2 3 4)"}),
  };
  for (const PermGroup& g : groups) {
    NormalLattice lat = cgt::normal_subgroups(g);
    cgt::ChiefSeries cs = cgt::chief_series(g, rng);
    CHECK(cgt::verify_chief(cs, lat));
  }
}

TEST_CASE("verify_chief rejects a coarse series") {
  SeedStream rng(cgt::kDefaultSeed);
  PermGroup s4 = sym(4);
  NormalLattice lat = cgt::normal_subgroups(s4);
  cgt::ChiefSeries coarse;
  coarse.ambient = s4;
  coarse.terms = {PermGroup::trivial(4), make(4, {"(1 2 3)", "(2 3 4)"}), s4};
  CHECK_FALSE(cgt::verify_chief(coarse, lat));

  cgt::ChiefSeries fine;
  fine.ambient = s4;
  fine.terms = {PermGroup::trivial(4), make(4, {"(1 2)(3 4)", "(1 3)(2 4)"}),
                make(4, {"(1 2 3)", "(2 3 4)"}), s4};
  CHECK(cgt::verify_chief(fine, lat));

  // A series through a non-normal subgroup is rejected outright.
  cgt::ChiefSeries bogus;
  bogus.ambient = s4;
  bogus.terms = {PermGroup::trivial(4), make(4, {"(1 2)"}), s4};
  CHECK_FALSE(cgt::verify_chief(bogus, lat));

  // Single-term series of the trivial group.
  PermGroup t = PermGroup::trivial(4);
  NormalLattice tlat = cgt::normal_subgroups(t);
  cgt::ChiefSeries single;
  single.ambient = t;
  single.terms = {t};
  CHECK(cgt::verify_chief(single, tlat));
}
