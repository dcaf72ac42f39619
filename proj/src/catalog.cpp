#include "cgt/catalog.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

#include "cgt/errors.hpp"
#include "cgt/structure.hpp"

namespace cgt {

namespace {

bool small_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// Embeds p into a larger domain at the given offset; the rest is fixed.
Perm shifted(const Perm& p, unsigned offset, unsigned total) {
  std::vector<std::uint32_t> img(total);
  std::iota(img.begin(), img.end(), 0u);
  for (unsigned i = 0; i < p.degree(); ++i) img[offset + i] = offset + p[i];
  return Perm::from_images(img);
}

PermGroup from_gens(unsigned degree, const std::vector<Perm>& gens) {
  if (gens.empty()) return PermGroup::trivial(degree);
  return PermGroup::generated(degree, gens);
}

PermGroup build_sym(unsigned n) {
  if (n <= 1) return PermGroup::trivial(n ? n : 1);
  std::vector<std::uint32_t> cyc(n), swap(n);
  std::iota(swap.begin(), swap.end(), 0u);
  swap[0] = 1;
  swap[1] = 0;
  for (unsigned i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return from_gens(n, {Perm::from_images(swap), Perm::from_images(cyc)});
}

PermGroup build_alt(unsigned n) {
  if (n <= 2) return PermGroup::trivial(n ? n : 1);
  std::vector<std::uint32_t> three(n);
  std::iota(three.begin(), three.end(), 0u);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n == 3) return from_gens(n, {Perm::from_images(three)});
  std::vector<std::uint32_t> big(n);
  std::iota(big.begin(), big.end(), 0u);
  if (n % 2 == 1) {
    for (unsigned i = 0; i < n; ++i) big[i] = (i + 1) % n;
  } else {
    for (unsigned i = 1; i < n; ++i) big[i] = 1 + (i % (n - 1));
  }
  return from_gens(n, {Perm::from_images(three), Perm::from_images(big)});
}

PermGroup build_cyclic(unsigned n) {
  if (n <= 1) return PermGroup::trivial(n ? n : 1);
  std::vector<std::uint32_t> cyc(n);
  for (unsigned i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return from_gens(n, {Perm::from_images(cyc)});
}

PermGroup build_dihedral(unsigned m) {
  require_input(m >= 6 && m % 2 == 0,
                "dihedral(m) needs an even order m >= 6");
  unsigned k = m / 2;
  std::vector<std::uint32_t> rot(k), flip(k);
  for (unsigned i = 0; i < k; ++i) {
    rot[i] = (i + 1) % k;
    flip[i] = k - 1 - i;
  }
  return from_gens(k, {Perm::from_images(rot), Perm::from_images(flip)});
}

PermGroup build_elemab(std::uint64_t p, unsigned d) {
  require_input(small_prime(p), "elemab(p,d) needs a prime p");
  require_input(d >= 1, "elemab(p,d) needs d >= 1");
  require_input(p * d <= kCatalogDegreeLimit, "catalog degree limit exceeded");
  unsigned n = static_cast<unsigned>(p * d);
  std::vector<Perm> gens;
  for (unsigned b = 0; b < d; ++b) {
    std::vector<std::uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0u);
    for (unsigned i = 0; i < p; ++i) {
      img[b * p + i] = b * p + (i + 1) % p;
    }
    gens.push_back(Perm::from_images(img));
  }
  return from_gens(n, gens);
}

PermGroup build_psl2(std::uint64_t p) {
  require_input(small_prime(p), "psl2(p) needs a prime p");
  require_input(p + 1 <= kCatalogDegreeLimit, "catalog degree limit exceeded");
  unsigned n = static_cast<unsigned>(p + 1);  // points 0..p-1 and infinity = p
  std::vector<std::uint32_t> t(n), s(n);
  for (std::uint64_t x = 0; x < p; ++x) t[x] = static_cast<std::uint32_t>((x + 1) % p);
  t[p] = static_cast<std::uint32_t>(p);
  s[0] = static_cast<std::uint32_t>(p);
  s[p] = 0;
  for (std::uint64_t x = 1; x < p; ++x) {
    s[x] = static_cast<std::uint32_t>((p - pow_mod(x, p - 2, p)) % p);
  }
  return from_gens(n, {Perm::from_images(t), Perm::from_images(s)});
}

PermGroup build_q8() {
  return from_gens(8, {parse_cycles("(1 3 2 4)(5 8 6 7)", 8),
                       parse_cycles("(1 5 2 6)(3 7 4 8)", 8)});
}

struct CatParser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw input_error(msg + " at line 1 column " + std::to_string(at + 1));
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      fail(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected a number", pos);
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      if (v > kCatalogDegreeLimit * 2ULL) fail("parameter out of range", start);
      ++pos;
    }
    return v;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
      fail("expected a family name", pos);
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }

  unsigned degree_checked(std::uint64_t n, std::size_t at) {
    if (n > kCatalogDegreeLimit) fail("catalog degree limit exceeded", at);
    return static_cast<unsigned>(n);
  }

  PermGroup atom() {
    skip_ws();
    std::size_t start = pos;
    std::string name = ident();
    if (name == "q8") return build_q8();
    expect('(');
    try {
      return atom_body(name, start);
    } catch (const input_error& e) {
      // Builder preconditions carry no position; attach the atom's start.
      std::string msg = e.what();
      if (msg.find(" at line ") == std::string::npos) fail(msg, start);
      throw;
    }
  }

  PermGroup atom_body(const std::string& name, std::size_t start) {
    PermGroup out;
    if (name == "wr") {
      PermGroup base = expr();
      expect(',');
      std::size_t at = pos;
      std::uint64_t m = number();
      if (m < 1) fail("wreath copies must be positive", at);
      if (base.degree() * m > kCatalogDegreeLimit)
        fail("catalog degree limit exceeded", at);
      out = wreath_cyclic(base, static_cast<unsigned>(m));
    } else if (name == "sym" || name == "alt" || name == "cyclic" ||
               name == "dihedral" || name == "psl2") {
      std::size_t at = pos;
      std::uint64_t n = number();
      if (name == "sym") out = build_sym(degree_checked(n, at));
      else if (name == "alt") out = build_alt(degree_checked(n, at));
      else if (name == "cyclic") out = build_cyclic(degree_checked(n, at));
      else if (name == "dihedral") out = build_dihedral(degree_checked(n, at));
      else out = build_psl2(n);
    } else if (name == "elemab") {
      std::uint64_t p = number();
      expect(',');
      std::size_t at = pos;
      std::uint64_t d = number();
      if (d > kCatalogDegreeLimit) fail("parameter out of range", at);
      out = build_elemab(p, static_cast<unsigned>(d));
    } else {
      fail("unknown family '" + name + "'", start);
    }
    expect(')');
    return out;
  }

  // After a complete atom the only continuations are 'x', ',' or ')', so a
  // bare 'x' always means a direct product.
  PermGroup expr() {
    PermGroup g = atom();
    for (;;) {
      skip_ws();
      if (pos >= s.size() || s[pos] != 'x') break;
      ++pos;
      PermGroup h = atom();
      if (g.degree() + h.degree() > kCatalogDegreeLimit)
        fail("catalog degree limit exceeded", pos);
      g = direct_product(g, h);
    }
    return g;
  }
};

// One logical line of a structured group file.
struct SpecLine {
  std::size_t number;
  std::size_t column;  // first non-space position, 1-based
  std::string text;    // trimmed
};

std::vector<SpecLine> spec_lines(const std::string& text) {
  std::vector<SpecLine> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::size_t a = raw.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = raw.find_last_not_of(" \t\r");
    std::string body = raw.substr(a, b - a + 1);
    if (body[0] == '#') continue;
    out.push_back({number, a + 1, body});
  }
  return out;
}

[[noreturn]] void fail_line(const SpecLine& ln, const std::string& msg) {
  throw input_error(msg + " at line " + std::to_string(ln.number) + " column " +
                    std::to_string(ln.column));
}

}  // namespace

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  unsigned n = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) gens.push_back(shifted(g, 0, n));
  for (const Perm& g : b.generators())
    gens.push_back(shifted(g, a.degree(), n));
  return from_gens(n, gens);
}

PermGroup wreath_cyclic(const PermGroup& base, unsigned m) {
  require_input(m >= 1, "wreath copies must be positive");
  unsigned d = base.degree();
  unsigned n = d * m;
  std::vector<Perm> gens;
  for (const Perm& g : base.generators()) gens.push_back(shifted(g, 0, n));
  if (m > 1) {
    std::vector<std::uint32_t> img(n);
    for (unsigned j = 0; j < m; ++j) {
      for (unsigned i = 0; i < d; ++i) img[j * d + i] = ((j + 1) % m) * d + i;
    }
    gens.push_back(Perm::from_images(img));
  }
  return from_gens(n, gens);
}

PermGroup parse_catalog(const std::string& expr) {
  CatParser p{expr};
  PermGroup g = p.expr();
  p.skip_ws();
  if (p.pos != expr.size()) p.fail("unexpected trailing input", p.pos);
  return g;
}

GroupInput parse_group_text(const std::string& text) {
  std::vector<SpecLine> lines = spec_lines(text);
  std::size_t at = 0;
  auto have = [&] { return at < lines.size(); };

  if (!have() || lines[at].text.rfind("degree", 0) != 0) {
    SpecLine where = have() ? lines[at] : SpecLine{1, 1, ""};
    fail_line(where, "expected 'degree N'");
  }
  unsigned degree = 0;
  {
    std::istringstream ds(lines[at].text.substr(6));
    long long v = -1;
    ds >> v;
    if (v < 1 || v > static_cast<long long>(kCatalogDegreeLimit))
      fail_line(lines[at], "bad degree");
    degree = static_cast<unsigned>(v);
    std::string rest;
    if (ds >> rest) fail_line(lines[at], "trailing input after the degree");
    ++at;
  }

  if (!have() || lines[at].text != "generators") {
    SpecLine where = have() ? lines[at] : lines[at - 1];
    fail_line(where, "expected 'generators'");
  }
  ++at;

  auto read_perms = [&](std::vector<Perm>& out) {
    while (have() && lines[at].text != "kernel" && lines[at].text != "end") {
      try {
        out.push_back(parse_cycles(lines[at].text, degree));
      } catch (const input_error& e) {
        fail_line(lines[at], std::string("bad cycle string: ") + e.what());
      }
      ++at;
    }
  };

  std::vector<Perm> gens;
  read_perms(gens);
  GroupInput in{from_gens(degree, gens), PermGroup::trivial(degree)};

  if (have() && lines[at].text == "kernel") {
    std::size_t header = at;
    ++at;
    std::vector<Perm> kgens;
    read_perms(kgens);
    for (const Perm& k : kgens) {
      if (!in.group.contains(k))
        fail_line(lines[header], "kernel generator outside the group");
    }
    in.kernel = from_gens(degree, kgens);
    if (!is_normal_in(in.kernel, in.group))
      fail_line(lines[header], "kernel is not normal in the group");
  }
  if (have() && lines[at].text == "end") ++at;
  if (have()) fail_line(lines[at], "unexpected trailing input");
  return in;
}

GroupInput parse_group_spec(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    require_input(static_cast<bool>(in), "cannot open group file " + spec.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_group_text(buf.str());
  }
  PermGroup g = parse_catalog(spec);
  return {g, PermGroup::trivial(g.degree())};
}

}  // namespace cgt
