#include "cgt/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "cgt/errors.hpp"

namespace cgt {

Perm::Perm(unsigned degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0u);
}

Perm Perm::from_images(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::uint32_t v : images) {
    require_input(v < images.size(), "image table entry out of range");
    require_input(!seen[v], "image table is not a bijection");
    seen[v] = true;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

bool Perm::is_identity() const {
  for (std::uint32_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& rhs) const {
  require_input(degree() == rhs.degree(), "degree mismatch in product");
  Perm r;
  r.img_.resize(img_.size());
  for (std::uint32_t i = 0; i < img_.size(); ++i) r.img_[i] = rhs.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::uint32_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = i;
  return r;
}

Perm Perm::conjugated_by(const Perm& g) const {
  // x^(g^-1 a g): image table computed directly to avoid two allocations.
  require_input(degree() == g.degree(), "degree mismatch in conjugation");
  Perm r;
  r.img_.resize(img_.size());
  for (std::uint32_t i = 0; i < img_.size(); ++i) r.img_[g.img_[i]] = g.img_[img_[i]];
  return r;
}

Perm Perm::power(long long e) const {
  Perm base = e >= 0 ? *this : inverse();
  unsigned long long k = e >= 0 ? static_cast<unsigned long long>(e)
                                : static_cast<unsigned long long>(-e);
  Perm acc(degree());
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::uint32_t Perm::first_moved() const {
  for (std::uint32_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return i;
  return degree();
}

std::vector<std::pair<std::uint64_t, int>> Perm::order_factored() const {
  std::map<std::uint64_t, int> acc;
  std::vector<bool> seen(img_.size(), false);
  for (std::uint32_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::uint32_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    // lcm accumulated in factored form; cycle lengths are <= degree.
    for (std::uint64_t p = 2; p * p <= len; ++p) {
      int e = 0;
      while (len % p == 0) {
        ++e;
        len /= p;
      }
      if (e) acc[p] = std::max(acc[p], e);
    }
    if (len > 1) acc[len] = std::max(acc[len], 1);
  }
  return {acc.begin(), acc.end()};
}

std::string Perm::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (std::uint32_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    any = true;
    out << '(';
    bool first = true;
    for (std::uint32_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::size_t Perm::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t v : img_) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

Perm parse_cycles(const std::string& text, unsigned degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw input_error("cycle parse error at position " + std::to_string(i) +
                      ": " + what + " in \"" + text + "\"");
  };
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  std::vector<bool> used(degree, false);
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<std::uint32_t> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[i]))) fail("expected point");
      std::uint64_t v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > degree) fail("point exceeds degree");
        ++i;
      }
      if (v == 0) fail("points are 1-indexed");
      std::uint32_t pt = static_cast<std::uint32_t>(v - 1);
      if (used[pt]) fail("point repeated");
      used[pt] = true;
      cycle.push_back(pt);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;  // tolerate comma separators inside cycles
        skip_ws();
      }
    }
    if (i >= text.size()) fail("unterminated cycle");
    ++i;  // ')'
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k) img[cycle[k]] = cycle[k + 1];
    if (cycle.size() > 1) img[cycle.back()] = cycle.front();
    skip_ws();
  }
  return Perm::from_images(std::move(img));
}

}  // namespace cgt
