#include "cgt/formation.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "cgt/centralizer.hpp"
#include "cgt/chief.hpp"
#include "cgt/errors.hpp"
#include "cgt/structure.hpp"

namespace cgt {

struct Formation::Node {
  Kind kind = Kind::Empty;
  std::optional<TypePredicate> sigma;
  std::map<std::uint64_t, Formation> per_prime;
  std::optional<Formation> prime_default;  // Local default / Baer abelian
  std::map<std::string, Formation> per_name;
  std::optional<Formation> name_default;  // Baer nonabelian
  std::vector<Formation> parts;
};

Formation::Formation() = default;
Formation::Formation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formation::Kind Formation::kind() const {
  return node_ ? node_->kind : Kind::Empty;
}

const TypePredicate& Formation::sigma() const {
  require_input(kind() == Kind::Sigma, "not a sigma class");
  return *node_->sigma;
}

const std::vector<Formation>& Formation::parts() const {
  require_input(kind() == Kind::Meet, "not a meet");
  return node_->parts;
}

const std::map<std::uint64_t, Formation>& Formation::prime_table() const {
  require_input(kind() == Kind::Local || kind() == Kind::Baer,
                "no prime table on this node");
  return node_->per_prime;
}

Formation Formation::prime_default() const {
  require_input(kind() == Kind::Local || kind() == Kind::Baer,
                "no prime table on this node");
  return node_->prime_default ? *node_->prime_default : empty();
}

const std::map<std::string, Formation>& Formation::name_table() const {
  require_input(kind() == Kind::Baer, "no name table on this node");
  return node_->per_name;
}

Formation Formation::name_default() const {
  require_input(kind() == Kind::Baer, "no name table on this node");
  return node_->name_default ? *node_->name_default : empty();
}

bool Formation::has_baer_function() const {
  Kind k = kind();
  return k == Kind::Local || k == Kind::Baer || k == Kind::Quasinilpotent;
}

Formation Formation::empty() { return Formation(); }

Formation Formation::sigma_class(TypePredicate sigma) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Sigma;
  node->sigma = std::move(sigma);
  return Formation(std::move(node));
}

Formation Formation::triv() { return sigma_class(tp_none()); }
Formation Formation::all() { return sigma_class(tp_all()); }
Formation Formation::soluble() { return sigma_class(tp_cyclic_any()); }

Formation Formation::p_group(std::uint64_t p) {
  return sigma_class(tp_cyclic_among({p}));
}

Formation Formation::pi_group(std::vector<std::uint64_t> primes) {
  return sigma_class(tp_pi_subset(std::move(primes)));
}

Formation Formation::p_soluble(std::uint64_t p) {
  return sigma_class(tp_p_soluble(p));
}

Formation Formation::nilpotent() { return local({}, triv()); }

Formation Formation::p_nilpotent(std::uint64_t p) {
  return local({{p, triv()}}, all());
}

Formation Formation::quasinilpotent() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Quasinilpotent;
  return Formation(std::move(node));
}

Formation Formation::local(std::map<std::uint64_t, Formation> per_prime,
                           std::optional<Formation> default_prime) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Local;
  Formation def = default_prime ? *default_prime : empty();
  for (auto& [p, v] : per_prime) {
    if (!v.equal(def)) node->per_prime.emplace(p, std::move(v));
  }
  node->prime_default = std::move(def);
  return Formation(std::move(node));
}

Formation Formation::baer(std::map<std::uint64_t, Formation> per_prime,
                          std::optional<Formation> default_abelian,
                          std::map<std::string, Formation> per_name,
                          std::optional<Formation> default_nonabelian) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Baer;
  Formation da = default_abelian ? *default_abelian : empty();
  Formation dn = default_nonabelian ? *default_nonabelian : empty();
  for (auto& [p, v] : per_prime) {
    if (!v.equal(da)) node->per_prime.emplace(p, std::move(v));
  }
  for (auto& [name, v] : per_name) {
    if (!v.equal(dn)) node->per_name.emplace(name, std::move(v));
  }
  node->prime_default = std::move(da);
  node->name_default = std::move(dn);
  return Formation(std::move(node));
}

Formation Formation::meet(std::vector<Formation> members) {
  std::vector<Formation> flat;
  for (Formation& m : members) {
    if (m.kind() == Kind::Meet) {
      for (const Formation& p : m.parts()) flat.push_back(p);
    } else {
      flat.push_back(std::move(m));
    }
  }
  for (const Formation& m : flat) {
    if (m.is_empty_class()) return empty();
  }
  Formation trivial = triv();
  for (const Formation& m : flat) {
    if (m.equal(trivial)) return trivial;
  }
  Formation full = all();
  std::vector<TypePredicate> sigmas;
  std::vector<Formation> rest;
  for (Formation& m : flat) {
    if (m.equal(full)) continue;
    if (m.kind() == Kind::Sigma) {
      sigmas.push_back(m.sigma());
    } else {
      rest.push_back(std::move(m));
    }
  }
  std::sort(sigmas.begin(), sigmas.end(),
            [](const TypePredicate& a, const TypePredicate& b) {
              return a.print() < b.print();
            });
  sigmas.erase(std::unique(sigmas.begin(), sigmas.end(), predicate_equal),
               sigmas.end());
  if (sigmas.size() == 1) {
    rest.push_back(sigma_class(sigmas[0]));
  } else if (sigmas.size() > 1) {
    rest.push_back(sigma_class(tp_all_of(std::move(sigmas))));
  }
  std::sort(rest.begin(), rest.end(), [](const Formation& a, const Formation& b) {
    return a.print() < b.print();
  });
  rest.erase(std::unique(rest.begin(), rest.end(),
                         [](const Formation& a, const Formation& b) {
                           return a.equal(b);
                         }),
             rest.end());
  if (rest.empty()) return full;
  if (rest.size() == 1) return rest[0];
  auto node = std::make_shared<Node>();
  node->kind = Kind::Meet;
  node->parts = std::move(rest);
  return Formation(std::move(node));
}

Formation Formation::baer_value(const SimpleType& J) const {
  require_input(has_baer_function(), "formation has no Baer function");
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Local: {
      auto value_at = [&](std::uint64_t p) -> Formation {
        auto it = n.per_prime.find(p);
        if (it != n.per_prime.end()) return it->second;
        return n.prime_default ? *n.prime_default : empty();
      };
      if (J.abelian) return value_at(J.p);
      std::vector<Formation> vals;
      for (std::uint64_t p : J.pi) vals.push_back(value_at(p));
      return meet(std::move(vals));
    }
    case Kind::Baer: {
      if (J.abelian) {
        auto it = n.per_prime.find(J.p);
        if (it != n.per_prime.end()) return it->second;
        return n.prime_default ? *n.prime_default : empty();
      }
      auto it = n.per_name.find(J.name);
      if (it != n.per_name.end()) return it->second;
      return n.name_default ? *n.name_default : empty();
    }
    case Kind::Quasinilpotent:
      // The quasinilpotent Baer function: the trivial class on abelian
      // types, the direct powers of J on nonabelian ones.  Radical code
      // short-circuits these; the values exist for display and membership.
      return J.abelian ? triv() : sigma_class(tp_listed({J}));
    default:
      break;
  }
  throw invariant_error("unreachable Baer value request");
}

namespace {

// Maps a predicate print form back to a grammar token when possible.
std::optional<std::string> sigma_token(const std::string& ps) {
  if (ps == "notype") return "triv";
  if (ps == "anytype") return "all";
  if (ps == "cyclic") return "sol";
  auto inner = [&](const std::string& prefix) -> std::optional<std::string> {
    if (ps.size() > prefix.size() + 1 && ps.compare(0, prefix.size(), prefix) == 0 &&
        ps.back() == '}') {
      return ps.substr(prefix.size(), ps.size() - prefix.size() - 1);
    }
    return std::nullopt;
  };
  if (auto v = inner("cyclic{")) {
    if (v->find(',') == std::string::npos) return "pgrp(" + *v + ")";
    return std::nullopt;
  }
  if (auto v = inner("pi{")) return "pigrp(" + *v + ")";
  if (auto v = inner("psoluble{")) return "psol(" + *v + ")";
  return std::nullopt;
}

std::string fold_meet(const std::vector<std::string>& parts) {
  std::string acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) {
    acc = "meet(" + parts[i] + "," + acc + ")";
  }
  return acc;
}

}  // namespace

std::string Formation::print() const {
  switch (kind()) {
    case Kind::Empty:
      return "empty";
    case Kind::Quasinilpotent:
      return "qnil";
    case Kind::Sigma: {
      std::string ps = node_->sigma->print();
      if (auto tok = sigma_token(ps)) return *tok;
      // A conjunction of grammar-expressible predicates prints as the
      // meet that built it, keeping the form parseable.
      if (ps.size() > 5 && ps.compare(0, 5, "both(") == 0) {
        std::vector<std::string> toks;
        std::size_t depth = 0, start = 5;
        bool ok = true;
        for (std::size_t i = 5; i < ps.size() && ok; ++i) {
          char c = ps[i];
          if (c == '(' || c == '{') ++depth;
          if (c == ')' || c == '}') {
            if (c == ')' && depth == 0 && i + 1 == ps.size()) {
              auto tok = sigma_token(ps.substr(start, i - start));
              if (tok) toks.push_back(*tok);
              else ok = false;
              break;
            }
            --depth;
          }
          if (c == ',' && depth == 0) {
            auto tok = sigma_token(ps.substr(start, i - start));
            if (tok) toks.push_back(*tok);
            else ok = false;
            start = i + 1;
          }
        }
        if (ok && toks.size() >= 2) return fold_meet(toks);
      }
      return "sigma[" + ps + "]";
    }
    case Kind::Local: {
      const Node& n = *node_;
      Formation def = n.prime_default ? *n.prime_default : empty();
      if (n.per_prime.empty() && def.equal(triv())) return "nil";
      if (n.per_prime.size() == 1 && n.per_prime.begin()->second.equal(triv()) &&
          def.equal(all())) {
        return "pnil(" + std::to_string(n.per_prime.begin()->first) + ")";
      }
      std::string out = "local(";
      for (const auto& [p, v] : n.per_prime)
        out += std::to_string(p) + "->" + v.print() + ",";
      out += "*->" + def.print() + ")";
      return out;
    }
    case Kind::Baer: {
      const Node& n = *node_;
      std::string out = "baer(";
      for (const auto& [p, v] : n.per_prime)
        out += std::to_string(p) + "->" + v.print() + ",";
      out += "*a->" + (n.prime_default ? *n.prime_default : empty()).print();
      for (const auto& [name, v] : n.per_name)
        out += "," + name + "->" + v.print();
      out += ",*n->" + (n.name_default ? *n.name_default : empty()).print() + ")";
      return out;
    }
    case Kind::Meet: {
      std::vector<std::string> ps;
      for (const Formation& p : node_->parts) ps.push_back(p.print());
      return fold_meet(ps);
    }
  }
  throw invariant_error("unreachable formation kind");
}

bool Formation::equal(const Formation& other) const {
  return print() == other.print();
}

namespace {

bool small_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

struct FormationParser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw input_error(msg + " at position " + std::to_string(at + 1));
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      fail(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  void expect_arrow() {
    skip_ws();
    if (pos + 1 >= s.size() || s[pos] != '-' || s[pos + 1] != '>')
      fail("expected '->'", pos);
    pos += 2;
  }

  bool peek_digit() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
      fail("expected a name", pos);
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }

  std::uint64_t prime() {
    skip_ws();
    std::size_t start = pos;
    if (!peek_digit()) fail("expected a prime", pos);
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      if (v > 1000000000) fail("prime out of range", start);
      ++pos;
    }
    if (!small_prime(v)) fail("not a prime", start);
    return v;
  }

  Formation expr() {
    skip_ws();
    if (pos >= s.size()) fail("expected a formation", pos);
    std::size_t start = pos;
    std::string name = ident();
    if (name == "empty") return Formation::empty();
    if (name == "triv") return Formation::triv();
    if (name == "all") return Formation::all();
    if (name == "sol") return Formation::soluble();
    if (name == "nil") return Formation::nilpotent();
    if (name == "qnil") return Formation::quasinilpotent();
    if (name == "pgrp") {
      expect('(');
      std::uint64_t p = prime();
      expect(')');
      return Formation::p_group(p);
    }
    if (name == "pigrp") {
      expect('(');
      std::vector<std::uint64_t> ps = {prime()};
      while (eat(',')) ps.push_back(prime());
      expect(')');
      return Formation::pi_group(std::move(ps));
    }
    if (name == "pnil") {
      expect('(');
      std::uint64_t p = prime();
      expect(')');
      return Formation::p_nilpotent(p);
    }
    if (name == "psol") {
      expect('(');
      std::uint64_t p = prime();
      expect(')');
      return Formation::p_soluble(p);
    }
    if (name == "local") {
      expect('(');
      std::map<std::uint64_t, Formation> table;
      std::optional<Formation> def;
      do {
        skip_ws();
        std::size_t at = pos;
        if (eat('*')) {
          if (def) fail("duplicate default entry", at);
          expect_arrow();
          def = expr();
        } else {
          std::uint64_t p = prime();
          if (table.count(p)) fail("duplicate prime entry", at);
          expect_arrow();
          table.emplace(p, expr());
        }
      } while (eat(','));
      expect(')');
      return Formation::local(std::move(table), std::move(def));
    }
    if (name == "baer") {
      expect('(');
      std::map<std::uint64_t, Formation> primes;
      std::map<std::string, Formation> names;
      std::optional<Formation> da, dn;
      do {
        skip_ws();
        std::size_t at = pos;
        if (eat('*')) {
          if (pos >= s.size() || (s[pos] != 'a' && s[pos] != 'n'))
            fail("expected '*a' or '*n'", at);
          char which = s[pos++];
          std::optional<Formation>& slot = which == 'a' ? da : dn;
          if (slot) fail("duplicate default entry", at);
          expect_arrow();
          slot = expr();
        } else if (peek_digit()) {
          std::uint64_t p = prime();
          if (primes.count(p)) fail("duplicate prime entry", at);
          expect_arrow();
          primes.emplace(p, expr());
        } else {
          std::string key = ident();
          if (names.count(key)) fail("duplicate name entry", at);
          expect_arrow();
          names.emplace(key, expr());
        }
      } while (eat(','));
      expect(')');
      return Formation::baer(std::move(primes), std::move(da),
                             std::move(names), std::move(dn));
    }
    if (name == "meet") {
      expect('(');
      Formation a = expr();
      expect(',');
      Formation b = expr();
      expect(')');
      return Formation::meet({std::move(a), std::move(b)});
    }
    fail("unknown formation name '" + name + "'", start);
  }
};

}  // namespace

Formation parse_formation(const std::string& text) {
  FormationParser p{text};
  Formation f = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("unexpected trailing input", p.pos);
  return f;
}

bool formation_contains(const Formation& f, const PermGroup& G,
                        const PermGroup& K, SeedStream& rng) {
  switch (f.kind()) {
    case Formation::Kind::Empty:
      return false;
    case Formation::Kind::Meet: {
      for (const Formation& p : f.parts()) {
        if (!formation_contains(p, G, K, rng)) return false;
      }
      return true;
    }
    default:
      break;
  }
  ChiefSeries cs = chief_series(G, K, {}, rng);
  switch (f.kind()) {
    case Formation::Kind::Sigma: {
      for (const SimpleType& t : cs.types) {
        if (!f.sigma().matches(t)) return false;
      }
      return true;
    }
    case Formation::Kind::Quasinilpotent: {
      for (std::size_t i = 0; i + 1 < cs.terms.size(); ++i) {
        PermGroup C = centralizer_of_section(G, cs.terms[i + 1], cs.terms[i]);
        if (join(cs.terms[i + 1], C).order() != G.order()) return false;
      }
      return true;
    }
    case Formation::Kind::Local:
    case Formation::Kind::Baer: {
      for (std::size_t i = 0; i + 1 < cs.terms.size(); ++i) {
        Formation fv = f.baer_value(cs.types[i]);
        if (fv.is_empty_class()) return false;
        PermGroup C = centralizer_of_section(G, cs.terms[i + 1], cs.terms[i]);
        if (!formation_contains(fv, G, C, rng)) return false;
      }
      return true;
    }
    default:
      break;
  }
  throw invariant_error("unreachable formation membership kind");
}

bool is_primitive_formation(const Formation& f, int level) {
  if (level < 0) return false;
  if (f.is_empty_class() || f.equal(Formation::triv()) ||
      f.equal(Formation::soluble()))
    return true;
  if (level == 0) return false;
  if (f.kind() != Formation::Kind::Local) return false;
  for (const auto& [p, v] : f.prime_table()) {
    (void)p;
    if (!is_primitive_formation(v, level - 1)) return false;
  }
  return is_primitive_formation(f.prime_default(), level - 1);
}

Formation primitive_formation(int level, const Formation& spec) {
  require_input(is_primitive_formation(spec, level),
                "not a primitive formation tower of the requested level");
  return spec;
}

}  // namespace cgt
