#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cgt/bigint.hpp"
#include "cgt/catalog.hpp"
#include "cgt/chief.hpp"
#include "cgt/errors.hpp"
#include "cgt/formation.hpp"
#include "cgt/oracle.hpp"
#include "cgt/perm.hpp"
#include "cgt/perm_group.hpp"
#include "cgt/radical.hpp"
#include "cgt/rng.hpp"
#include "cgt/stats.hpp"
#include "cgt/structure.hpp"

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool small_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

// Output format shared by all subcommands: one self-delimiting record
//   record <kind>
//   <key> <value>
//   ...
//   end
// Groups appear as result-degree, result-order and one result-generator line
// per generator; the trivial group gets a single "()" generator line.
void emit_group(std::ostream& out, const cgt::PermGroup& g) {
  out << "result-degree " << g.degree() << "\n";
  out << "result-order " << cgt::bigint_str(g.order()) << "\n";
  bool any = false;
  for (const cgt::Perm& p : g.generators()) {
    if (p.is_identity()) continue;
    out << "result-generator " << p.to_cycle_string() << "\n";
    any = true;
  }
  if (!any) out << "result-generator ()\n";
}

cgt::GroupInput load_input(const std::string& group_spec,
                           const std::string& mod_spec) {
  cgt::GroupInput in = cgt::parse_group_spec(group_spec);
  if (!mod_spec.empty()) {
    cgt::require_input(in.kernel.is_trivial(),
                       "--mod conflicts with a kernel in the group file");
    cgt::GroupInput k = cgt::parse_group_spec(mod_spec);
    cgt::require_input(k.kernel.is_trivial(),
                       "a kernel spec may not itself carry a kernel");
    cgt::require_input(k.group.degree() == in.group.degree(),
                       "kernel degree does not match the group");
    cgt::require_input(in.group.contains_group(k.group),
                       "kernel is not a subgroup of the group");
    cgt::require_input(cgt::is_normal_in(k.group, in.group),
                       "kernel is not normal in the group");
    in.kernel = k.group;
  }
  return in;
}

cgt::LengthKind parse_kind(const std::string& text) {
  if (text == "h") return cgt::LengthKind::h();
  if (text == "hstar") return cgt::LengthKind::h_star();
  if (text == "lambda") return cgt::LengthKind::lambda();
  auto with_prime =
      [&](const char* prefix) -> std::optional<std::uint64_t> {
    std::string pre(prefix);
    if (text.rfind(pre, 0) != 0) return std::nullopt;
    std::string tail = text.substr(pre.size());
    cgt::require_input(!tail.empty() && tail.find_first_not_of("0123456789") ==
                                            std::string::npos,
                       "bad length kind '" + text + "'");
    std::uint64_t p = std::stoull(tail);
    cgt::require_input(small_prime(p),
                       "length kind parameter must be a prime in '" + text +
                           "'");
    return p;
  };
  if (auto p = with_prime("lp:")) return cgt::LengthKind::l_p(*p);
  if (auto p = with_prime("lambdap:")) return cgt::LengthKind::lambda_p(*p);
  throw cgt::input_error("bad length kind '" + text +
                         "' (expected h, lp:<p>, hstar, lambdap:<p> or "
                         "lambda)");
}

void run_radical(const std::string& group, const std::string& formation,
                 const std::string& mod, bool report, std::uint64_t seed) {
  Clock::time_point start = Clock::now();
  cgt::GroupInput in = load_input(group, mod);
  cgt::Formation f = cgt::parse_formation(formation);
  cgt::SeedStream rng(seed);
  std::ostringstream out;
  out << "record result\n";
  out << "command radical\n";
  out << "group " << group << "\n";
  out << "formation " << formation << "\n";
  if (!mod.empty()) out << "mod " << mod << "\n";
  out << "seed " << seed << "\n";
  if (report) {
    cgt::RadicalReport rep = cgt::fradical_report(in.group, in.kernel, f, rng);
    emit_group(out, rep.subgroup);
    out << "report-series-orders";
    for (const cgt::PermGroup& term : rep.series.terms)
      out << " " << cgt::bigint_str(term.order());
    out << "\n";
    for (std::size_t i = 0; i < rep.used_factors.size(); ++i) {
      out << "report-factor " << rep.used_factors[i] << " "
          << rep.series.types[rep.used_factors[i]].print()
          << " centralizer-order "
          << cgt::bigint_str(rep.centralizers[i].order()) << "\n";
    }
    out << "report-intersection-order "
        << cgt::bigint_str(rep.intersection.order()) << "\n";
    out << "report-sweep-orders";
    for (const cgt::PermGroup& s : rep.sweep)
      out << " " << cgt::bigint_str(s.order());
    out << "\n";
  } else {
    emit_group(out, cgt::fradical(in.group, in.kernel, f, rng));
  }
  out << "time-ms " << ms_since(start) << "\n";
  out << "end\n";
  std::cout << out.str();
}

void run_length(const std::string& kind_text, const std::string& group,
                std::uint64_t seed) {
  Clock::time_point start = Clock::now();
  cgt::GroupInput in = load_input(group, "");
  cgt::LengthKind kind = parse_kind(kind_text);
  cgt::SeedStream rng(seed);
  std::optional<unsigned> len = cgt::flength(in.group, in.kernel, kind, rng);
  std::cout << "record result\n"
            << "command length\n"
            << "kind " << kind_text << "\n"
            << "group " << group << "\n"
            << "seed " << seed << "\n"
            << "result " << (len ? std::to_string(*len) : "infinity") << "\n"
            << "time-ms " << ms_since(start) << "\n"
            << "end\n";
}

void run_chief(const std::string& group, std::uint64_t seed) {
  Clock::time_point start = Clock::now();
  cgt::GroupInput in = load_input(group, "");
  cgt::SeedStream rng(seed);
  cgt::ChiefSeries s = cgt::chief_series(in.group, in.kernel, {}, rng);
  std::ostringstream out;
  out << "record result\n"
      << "command chief-series\n"
      << "group " << group << "\n"
      << "seed " << seed << "\n";
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    out << "term " << i << " order " << cgt::bigint_str(s.terms[i].order())
        << "\n";
    bool any = false;
    for (const cgt::Perm& p : s.terms[i].generators()) {
      if (p.is_identity()) continue;
      out << "term " << i << " generator " << p.to_cycle_string() << "\n";
      any = true;
    }
    if (!any) out << "term " << i << " generator ()\n";
  }
  // factor i is terms[i] over terms[i-1]
  for (std::size_t i = 0; i < s.types.size(); ++i)
    out << "factor " << i + 1 << " type " << s.types[i].print() << "\n";
  out << "time-ms " << ms_since(start) << "\n";
  out << "end\n";
  std::cout << out.str();
}

void run_fstar(const std::string& group, std::uint64_t seed) {
  Clock::time_point start = Clock::now();
  cgt::GroupInput in = load_input(group, "");
  cgt::SeedStream rng(seed);
  cgt::PermGroup r = cgt::fstar_radical(in.group, in.kernel, rng);
  std::ostringstream out;
  out << "record result\n"
      << "command fstar\n"
      << "group " << group << "\n"
      << "seed " << seed << "\n";
  emit_group(out, r);
  out << "time-ms " << ms_since(start) << "\n";
  out << "end\n";
  std::cout << out.str();
}

int run_check(const std::string& suite, std::size_t max_order,
              std::uint64_t seed) {
  Clock::time_point total = Clock::now();
  std::ifstream file(suite);
  cgt::require_input(static_cast<bool>(file),
                     "cannot open suite file " + suite);
  std::size_t bound = max_order ? max_order : cgt::oracle_order_bound();
  std::size_t cases = 0, passed = 0, failed = 0, skipped = 0;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(file, raw)) {
    ++lineno;
    std::string line = trimmed(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t semi = line.find(';');
    cgt::require_input(semi != std::string::npos,
                       "suite line " + std::to_string(lineno) +
                           ": expected 'SPEC ; FORMATION'");
    std::string spec = trimmed(line.substr(0, semi));
    std::string fexpr = trimmed(line.substr(semi + 1));
    ++cases;
    Clock::time_point start = Clock::now();
    cgt::GroupInput in = cgt::parse_group_spec(spec);
    cgt::require_input(in.kernel.is_trivial(),
                       "suite line " + std::to_string(lineno) +
                           ": check compares plain groups, not quotients");
    cgt::Formation f = cgt::parse_formation(fexpr);
    std::ostringstream out;
    out << "record case\n"
        << "group " << spec << "\n"
        << "formation " << fexpr << "\n";
    if (in.group.order() > bound) {
      ++skipped;
      out << "status skipped\n";
    } else {
      cgt::SeedStream engine_rng(seed);
      cgt::SeedStream oracle_rng(seed ^ 0x5eedULL);
      cgt::PermGroup engine = cgt::fradical(in.group, in.kernel, f, engine_rng);
      cgt::NormalLattice lat = cgt::normal_subgroups(in.group, bound);
      cgt::PermGroup oracle = cgt::radical_oracle(in.group, f, lat, oracle_rng);
      out << "engine-order " << cgt::bigint_str(engine.order()) << "\n";
      out << "oracle-order " << cgt::bigint_str(oracle.order()) << "\n";
      bool ok = engine.same_group(oracle);
      out << "status " << (ok ? "ok" : "mismatch") << "\n";
      if (ok)
        ++passed;
      else
        ++failed;
    }
    out << "time-ms " << ms_since(start) << "\n";
    out << "end\n";
    std::cout << out.str();
  }
  std::cout << "record summary\n"
            << "command check\n"
            << "suite " << suite << "\n"
            << "cases " << cases << "\n"
            << "passed " << passed << "\n"
            << "failed " << failed << "\n"
            << "skipped " << skipped << "\n"
            << "time-ms " << ms_since(total) << "\n"
            << "end\n";
  return failed == 0 ? 0 : 3;
}

int run_bench(const std::string& family, const std::string& range,
              const std::string& formation, std::uint64_t seed) {
  std::size_t dots = range.find("..");
  cgt::require_input(dots != std::string::npos && dots > 0 &&
                         dots + 2 < range.size(),
                     "range must look like A..B");
  unsigned lo = 0, hi = 0;
  try {
    lo = static_cast<unsigned>(std::stoul(range.substr(0, dots)));
    hi = static_cast<unsigned>(std::stoul(range.substr(dots + 2)));
  } catch (const std::exception&) {
    throw cgt::input_error("range must look like A..B");
  }
  cgt::require_input(lo >= 1 && lo <= hi, "range must satisfy 1 <= A <= B");
  bool known = family == "sym" || family == "alt" || family == "cyclic" ||
               family == "dihedral" || family == "psl2";
  cgt::require_input(known, "unknown bench family '" + family +
                                "' (expected sym, alt, cyclic, dihedral or "
                                "psl2)");
  cgt::Formation f = cgt::parse_formation(formation);
  Clock::time_point total = Clock::now();
  std::size_t cases = 0;
  for (unsigned n = lo; n <= hi; ++n) {
    cgt::PermGroup g;
    try {
      g = cgt::parse_catalog(family + "(" + std::to_string(n) + ")");
    } catch (const cgt::input_error&) {
      continue;  // family undefined at this parameter; skip, do not fail
    }
    ++cases;
    cgt::stats().reset();
    Clock::time_point start = Clock::now();
    cgt::SeedStream rng(seed);
    cgt::PermGroup r =
        cgt::fradical(g, cgt::PermGroup::trivial(g.degree()), f, rng);
    long long elapsed = ms_since(start);
    std::cout << "record bench\n"
              << "family " << family << "\n"
              << "n " << n << "\n"
              << "order-input " << cgt::bigint_str(g.order()) << "\n"
              << "result-order " << cgt::bigint_str(r.order()) << "\n"
              << "time-ms " << elapsed << "\n"
              << "bsgs-builds " << cgt::stats().bsgs_builds.load() << "\n"
              << "sifts " << cgt::stats().sifts.load() << "\n"
              << "backtrack-nodes " << cgt::stats().backtrack_nodes.load()
              << "\n"
              << "end\n";
  }
  std::cout << "record summary\n"
            << "command bench\n"
            << "family " << family << "\n"
            << "cases " << cases << "\n"
            << "time-ms " << ms_since(total) << "\n"
            << "end\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radicals, lengths and chief series of finite permutation "
               "groups"};
  app.fallthrough();
  std::uint64_t seed = cgt::kDefaultSeed;
  app.add_option("--seed", seed, "Seed for all randomized choices");
  app.require_subcommand(1);

  std::string rad_group, rad_formation, rad_mod;
  bool rad_report = false;
  CLI::App* rad = app.add_subcommand(
      "radical", "Radical of a group or quotient for a formation");
  rad->add_option("--group", rad_group,
                  "Group spec (catalog expression or @file)")
      ->required();
  rad->add_option("--formation", rad_formation, "Formation expression")
      ->required();
  rad->add_option("--mod", rad_mod,
                  "Normal subgroup spec; compute in the quotient");
  rad->add_flag("--report", rad_report, "Emit the per-factor audit trail");

  std::string len_kind, len_group;
  CLI::App* len =
      app.add_subcommand("length", "Iterated-radical length of a group");
  len->add_option("--kind", len_kind, "h, lp:<p>, hstar, lambdap:<p> or lambda")
      ->required();
  len->add_option("--group", len_group, "Group spec")->required();

  std::string chief_group;
  CLI::App* chief =
      app.add_subcommand("chief-series", "Chief series with factor types");
  chief->add_option("--group", chief_group, "Group spec")->required();

  std::string fstar_group;
  CLI::App* fst = app.add_subcommand("fstar", "Generalized Fitting subgroup");
  fst->add_option("--group", fstar_group, "Group spec")->required();

  std::string check_suite;
  std::size_t check_max = 0;
  CLI::App* chk = app.add_subcommand(
      "check", "Compare engine radicals against the brute-force oracle");
  chk->add_option("--suite", check_suite,
                  "Suite file: one 'SPEC ; FORMATION' per line")
      ->required();
  chk->add_option("--max-order", check_max,
                  "Skip groups above this order (default: oracle bound)");

  std::string bench_family, bench_range, bench_formation;
  CLI::App* ben =
      app.add_subcommand("bench", "Time radicals across a parameter range");
  ben->add_option("--family", bench_family,
                  "sym, alt, cyclic, dihedral or psl2")
      ->required();
  ben->add_option("--range", bench_range, "Parameter range A..B")->required();
  ben->add_option("--formation", bench_formation, "Formation expression")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // help and version exit clean, usage errors 1
  }

  try {
    if (*rad) {
      run_radical(rad_group, rad_formation, rad_mod, rad_report, seed);
      return 0;
    }
    if (*len) {
      run_length(len_kind, len_group, seed);
      return 0;
    }
    if (*chief) {
      run_chief(chief_group, seed);
      return 0;
    }
    if (*fst) {
      run_fstar(fstar_group, seed);
      return 0;
    }
    if (*chk) return run_check(check_suite, check_max, seed);
    if (*ben) return run_bench(bench_family, bench_range, bench_formation, seed);
  } catch (const cgt::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const cgt::bound_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
