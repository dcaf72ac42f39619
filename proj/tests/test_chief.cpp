#include "cgt/chief.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "brute.hpp"
#include "cgt/errors.hpp"
#include "cgt/structure.hpp"
#include "doctest.h"

using cgt::Perm;
using cgt::PermGroup;
using cgt::SeedStream;
using cgt::parse_cycles;
using cgt::testutil::brute_elements;

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

// Exhaustive chief check for a layer: the G-closure of every element of
// B outside A must be all of B.  Samples when B is large.
void check_layer_chief(const PermGroup& G, const PermGroup& A,
                       const PermGroup& B, SeedStream& rng,
                       std::size_t cap = 400) {
  std::vector<Perm> pool;
  if (B.order() <= cgt::Bigint(cap)) {
    pool = brute_elements(B.degree(), B.generators());
  } else {
    for (int i = 0; i < 100; ++i) pool.push_back(B.random_element(rng));
  }
  for (const Perm& x : pool) {
    if (A.contains(x)) continue;
    PermGroup n = cgt::normal_closure(G, A, {x}, B.order());
    CHECK(n.order() == B.order());
  }
}

void check_series(const cgt::ChiefSeries& cs, SeedStream& rng) {
  REQUIRE(cs.terms.size() == cs.types.size() + 1);
  CHECK(cs.terms.size() - 1 <= 2 * cs.ambient.degree() - 3);
  for (std::size_t i = 0; i + 1 < cs.terms.size(); ++i) {
    CHECK(cs.terms[i].order() < cs.terms[i + 1].order());
    CHECK(cs.terms[i + 1].contains_group(cs.terms[i]));
    CHECK(cgt::is_normal_in(cs.terms[i], cs.ambient));
    check_layer_chief(cs.ambient, cs.terms[i], cs.terms[i + 1], rng);
  }
}

std::vector<std::string> type_names(const cgt::ChiefSeries& cs) {
  std::vector<std::string> out;
  for (const auto& t : cs.types) out.push_back(t.print());
  return out;
}

// All minimal normal subgroups over K by exhaustive element closures.
std::vector<PermGroup> brute_minimal_normals(const PermGroup& G,
                                             const PermGroup& K) {
  std::vector<PermGroup> all;
  for (const Perm& x : brute_elements(G.degree(), G.generators())) {
    if (K.contains(x)) continue;
    all.push_back(cgt::normal_closure(G, K, {x}));
  }
  std::sort(all.begin(), all.end(), [](const PermGroup& a, const PermGroup& b) {
    return a.order() < b.order();
  });
  std::vector<PermGroup> mins;
  for (PermGroup& n : all) {
    bool covered = false;
    for (const PermGroup& m : mins) {
      if (n.contains_group(m)) {
        covered = true;
        break;
      }
    }
    if (!covered) mins.push_back(std::move(n));
  }
  return mins;
}

void check_same_family(std::vector<PermGroup> got, std::vector<PermGroup> want) {
  REQUIRE(got.size() == want.size());
  for (const PermGroup& w : want) {
    bool found = false;
    for (const PermGroup& g : got) {
      if (g.same_group(w)) {
        found = true;
        break;
      }
    }
    CHECK(found);
  }
}

PermGroup a5_wr_c2() {
  return make(10, {"(1 2 3)", "(1 2 3 4 5)",
                   "(1 6)(2 7)(3 8)(4 9)(5 10)"});
}

PermGroup even_wreath_a5() {
  return make(10, {"(1 2)(3 4)", "(1 3 5)(2 4 6)",
                   "(1 3 5 7 9)(2 4 6 8 10)"});
}

PermGroup sl23() {
  return make(8, {"(1 6 2 3)(4 7 8 5)", "(1 4 7)(2 8 5)"});
}

PermGroup q8() {
  return make(8, {"(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)"});
}

}  // namespace

TEST_CASE("chief series of sym(4)") {
  SeedStream rng(1);
  auto cs = cgt::chief_series(sym(4), rng);
  REQUIRE(cs.terms.size() == 4);
  CHECK(cs.terms[0].order() == cgt::Bigint(1));
  CHECK(cs.terms[1].order() == cgt::Bigint(4));
  CHECK(cs.terms[2].order() == cgt::Bigint(12));
  CHECK(cs.terms[3].order() == cgt::Bigint(24));
  CHECK(type_names(cs) == std::vector<std::string>{"C2^2", "C3", "C2"});
  check_series(cs, rng);
}

TEST_CASE("chief series of simple and trivial groups") {
  SeedStream rng(2);
  auto a5 = make(5, {"(1 2 3)", "(1 2 3 4 5)"});
  auto cs = cgt::chief_series(a5, rng);
  REQUIRE(cs.terms.size() == 2);
  CHECK(type_names(cs) == std::vector<std::string>{"A5"});
  check_series(cs, rng);

  auto cs0 = cgt::chief_series(PermGroup::trivial(3), rng);
  CHECK(cs0.terms.size() == 1);
  CHECK(cs0.types.empty());
}

TEST_CASE("chief series of sym(5)") {
  SeedStream rng(3);
  auto cs = cgt::chief_series(sym(5), rng);
  REQUIRE(cs.terms.size() == 3);
  CHECK(cs.terms[1].order() == cgt::Bigint(60));
  CHECK(type_names(cs) == std::vector<std::string>{"A5", "C2"});
  check_series(cs, rng);
}

TEST_CASE("chief series through a requested subgroup") {
  SeedStream rng(4);
  PermGroup c12 = make(12, {"(1 2 3 4 5 6 7 8 9 10 11 12)"});
  PermGroup c2 = make(12, {"(1 7)(2 8)(3 9)(4 10)(5 11)(6 12)"});
  auto cs = cgt::chief_series(c12, PermGroup::trivial(12), {c2}, rng);
  REQUIRE(cs.terms.size() == 4);
  bool has_c2 = false;
  for (const auto& t : cs.terms) has_c2 = has_c2 || t.same_group(c2);
  CHECK(has_c2);
  check_series(cs, rng);
}

TEST_CASE("chief series rejects a non normal through subgroup") {
  SeedStream rng(5);
  PermGroup s4 = sym(4);
  PermGroup c2 = make(4, {"(1 2)"});
  CHECK_THROWS_AS(
      cgt::chief_series(s4, PermGroup::trivial(4), {c2}, rng),
      cgt::input_error);
}

TEST_CASE("chief series of the wreath product alt(5) wr c2") {
  SeedStream rng(6);
  PermGroup g = a5_wr_c2();
  CHECK(g.order() == cgt::Bigint(7200));
  auto cs = cgt::chief_series(g, rng);
  REQUIRE(cs.terms.size() == 3);
  CHECK(cs.terms[1].order() == cgt::Bigint(3600));
  CHECK(type_names(cs) == std::vector<std::string>{"A5^2", "C2"});
  // One component does not close to a proper normal subgroup: its closure
  // is the whole socle.
  PermGroup comp = make(10, {"(1 2 3)", "(1 2 3 4 5)"});
  PermGroup closed = cgt::normal_closure(g, comp.generators());
  CHECK(closed.order() == cgt::Bigint(3600));
  for (std::size_t i = 0; i + 1 < cs.terms.size(); ++i) {
    CHECK(cgt::is_normal_in(cs.terms[i], g));
  }
}

TEST_CASE("chief series of the even wreath group") {
  SeedStream rng(7);
  PermGroup p = even_wreath_a5();
  auto cs = cgt::chief_series(p, rng);
  REQUIRE(cs.terms.size() == 3);
  CHECK(cs.terms[1].order() == cgt::Bigint(16));
  CHECK(type_names(cs) == std::vector<std::string>{"C2^4", "A5"});
  check_series(cs, rng);
}

TEST_CASE("chief series of sl(2,3)") {
  SeedStream rng(8);
  PermGroup g = sl23();
  CHECK(g.order() == cgt::Bigint(24));
  auto cs = cgt::chief_series(g, rng);
  REQUIRE(cs.terms.size() == 4);
  CHECK(type_names(cs) ==
        std::vector<std::string>{"C2", "C2^2", "C3"});
  check_series(cs, rng);
}

TEST_CASE("identify type of standard sections") {
  SeedStream rng(9);
  PermGroup s4 = sym(4);
  PermGroup v4 = make(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  auto t = cgt::identify_type(s4, v4, PermGroup::trivial(4), rng);
  CHECK(t.abelian);
  CHECK(t.p == 2);
  CHECK(t.width == 2);

  PermGroup a5 = make(5, {"(1 2 3)", "(1 2 3 4 5)"});
  auto ta = cgt::identify_type(a5, a5, PermGroup::trivial(5), rng);
  CHECK_FALSE(ta.abelian);
  CHECK(ta.name == "A5");
  CHECK(ta.width == 1);

  PermGroup w = a5_wr_c2();
  PermGroup soc = make(10, {"(1 2 3)", "(1 2 3 4 5)", "(6 7 8)",
                            "(6 7 8 9 10)"});
  auto tw = cgt::identify_type(w, soc, PermGroup::trivial(10), rng);
  CHECK(tw.name == "A5");
  CHECK(tw.width == 2);
  CHECK(tw.print() == "A5^2");
}

TEST_CASE("identify type is stable under generator shuffles") {
  PermGroup w = a5_wr_c2();
  PermGroup soc = make(10, {"(6 7 8 9 10)", "(1 2 3 4 5)", "(1 2 3)",
                            "(6 7 8)"});
  for (unsigned s = 0; s < 5; ++s) {
    SeedStream rng(100 + s);
    auto t = cgt::identify_type(w, soc, PermGroup::trivial(10), rng);
    CHECK(t.print() == "A5^2");
  }
}

TEST_CASE("minimal normal subgroups match brute closures") {
  SeedStream rng(10);
  struct Case {
    PermGroup g;
    PermGroup k;
  };
  std::vector<Case> cases;
  cases.push_back({sym(4), PermGroup::trivial(4)});
  cases.push_back({make(5, {"(1 2 3)", "(1 2 3 4 5)"}), PermGroup::trivial(5)});
  cases.push_back({make(6, {"(1 2 3 4 5 6)"}), PermGroup::trivial(6)});
  cases.push_back({make(4, {"(1 2)(3 4)", "(1 3)(2 4)"}), PermGroup::trivial(4)});
  cases.push_back({q8(), PermGroup::trivial(8)});
  cases.push_back({sl23(), PermGroup::trivial(8)});
  cases.push_back({sym(4), make(4, {"(1 2)(3 4)", "(1 3)(2 4)"})});
  for (const Case& c : cases) {
    auto got = cgt::minimal_normal_subgroups(c.g, c.k, rng);
    auto want = brute_minimal_normals(c.g, c.k);
    check_same_family(got, want);
  }
}

TEST_CASE("minimal normal subgroup counts") {
  SeedStream rng(11);
  auto m1 = cgt::minimal_normal_subgroups(sym(4), PermGroup::trivial(4), rng);
  REQUIRE(m1.size() == 1);
  CHECK(m1[0].order() == cgt::Bigint(4));

  PermGroup c6 = make(6, {"(1 2 3 4 5 6)"});
  auto m2 = cgt::minimal_normal_subgroups(c6, PermGroup::trivial(6), rng);
  REQUIRE(m2.size() == 2);

  PermGroup v4 = make(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  auto m3 = cgt::minimal_normal_subgroups(v4, PermGroup::trivial(4), rng);
  CHECK(m3.size() == 3);

  auto m4 = cgt::minimal_normal_subgroups(q8(), PermGroup::trivial(8), rng);
  REQUIRE(m4.size() == 1);
  CHECK(m4[0].order() == cgt::Bigint(2));
}

TEST_CASE("o sigma radicals with cyclic type restrictions") {
  SeedStream rng(12);
  PermGroup s4 = sym(4);
  PermGroup v4 = make(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  PermGroup r = cgt::o_sigma(s4, PermGroup::trivial(4),
                             cgt::tp_cyclic_among({2}), rng);
  CHECK(r.same_group(v4));

  PermGroup s3 = make(3, {"(1 2)", "(1 2 3)"});
  PermGroup a3 = make(3, {"(1 2 3)"});
  PermGroup rodd = cgt::o_sigma(s3, PermGroup::trivial(3),
                                cgt::tp_coprime_to({2}), rng);
  CHECK(rodd.same_group(a3));

  PermGroup rsol = cgt::o_sigma(s4, PermGroup::trivial(4),
                                cgt::tp_cyclic_any(), rng);
  CHECK(rsol.order() == cgt::Bigint(24));

  PermGroup s5 = sym(5);
  PermGroup rsol5 = cgt::o_sigma(s5, PermGroup::trivial(5),
                                 cgt::tp_cyclic_any(), rng);
  CHECK(rsol5.order() == cgt::Bigint(1));
}

TEST_CASE("o sigma radicals in a direct product") {
  SeedStream rng(13);
  PermGroup g = make(12, {"(1 2 3)", "(1 2 3 4 5)", "(6 7 8 9 10 11 12)"});
  PermGroup a5part = make(12, {"(1 2 3)", "(1 2 3 4 5)"});
  PermGroup c7part = make(12, {"(6 7 8 9 10 11 12)"});

  cgt::SimpleType a5t = cgt::SimpleType::nonabelian(
      "A5", {{2, 2}, {3, 1}, {5, 1}}, 1);
  PermGroup r1 = cgt::o_sigma(g, PermGroup::trivial(12),
                              cgt::tp_listed({a5t}), rng);
  CHECK(r1.same_group(a5part));

  PermGroup r2 = cgt::o_sigma(g, PermGroup::trivial(12),
                              cgt::tp_coprime_to({2}), rng);
  CHECK(r2.same_group(c7part));

  PermGroup r3 = cgt::o_sigma(g, PermGroup::trivial(12), cgt::tp_all(), rng);
  CHECK(r3.order() == g.order());
}

TEST_CASE("o sigma with a central obstruction") {
  SeedStream rng(14);
  PermGroup c6 = make(6, {"(1 2 3 4 5 6)"});
  PermGroup c3 = make(6, {"(1 3 5)(2 4 6)"});
  PermGroup r = cgt::o_sigma(c6, c3, cgt::tp_cyclic_among({3}), rng);
  CHECK(r.same_group(c3));

  // Same shape from the bottom: the 3 radical of c6 is c3.
  PermGroup r2 = cgt::o_sigma(c6, PermGroup::trivial(6),
                              cgt::tp_cyclic_among({3}), rng);
  CHECK(r2.same_group(c3));
}

TEST_CASE("o sigma two radical of sl(2,3) is the quaternion subgroup") {
  SeedStream rng(15);
  PermGroup g = sl23();
  PermGroup r = cgt::o_sigma(g, PermGroup::trivial(8),
                             cgt::tp_cyclic_among({2}), rng);
  CHECK(r.order() == cgt::Bigint(8));
  CHECK(cgt::is_normal_in(r, g));
  auto cs = cgt::chief_series(r, rng);
  for (const auto& t : cs.types) {
    CHECK(t.abelian);
    CHECK(t.p == 2);
  }
}

TEST_CASE("o sigma is a quotient compatible radical") {
  // The two prime radical of the even wreath group: the flip space is the
  // largest normal 2 subgroup.
  SeedStream rng(16);
  PermGroup p = even_wreath_a5();
  PermGroup r = cgt::o_sigma(p, PermGroup::trivial(10),
                             cgt::tp_cyclic_among({2}), rng);
  CHECK(r.order() == cgt::Bigint(16));
  CHECK(cgt::is_normal_in(r, p));
}
