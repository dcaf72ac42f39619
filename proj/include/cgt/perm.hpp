#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cgt {

// Permutation of {0, ..., n-1} stored as an image table.
//
// Points are 0-indexed internally; cycle notation used for input and output
// is 1-indexed.  Products compose left to right: x^(a*b) = (x^a)^b, so a*b
// means "apply a, then b" (the usual convention for permutation groups acting
// on the right).
class Perm {
 public:
  Perm() = default;
  explicit Perm(unsigned degree);  // identity
  static Perm from_images(std::vector<std::uint32_t> images);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  std::uint32_t operator[](std::uint32_t x) const { return img_[x]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  bool is_identity() const;
  Perm operator*(const Perm& rhs) const;  // apply *this, then rhs
  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const;  // g^-1 * (*this) * g
  Perm power(long long e) const;

  bool operator==(const Perm& rhs) const { return img_ == rhs.img_; }
  bool operator!=(const Perm& rhs) const { return img_ != rhs.img_; }
  bool operator<(const Perm& rhs) const { return img_ < rhs.img_; }

  // Smallest moved point, or degree() if identity.
  std::uint32_t first_moved() const;

  // Order as a factored integer (lcm of cycle lengths).
  std::vector<std::pair<std::uint64_t, int>> order_factored() const;

  std::string to_cycle_string() const;  // "(1 2)(3 4)", identity -> "()"

  std::size_t hash() const;

 private:
  std::vector<std::uint32_t> img_;
};

inline Perm commutator(const Perm& a, const Perm& b) {
  return a.inverse() * b.inverse() * a * b;
}

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

// Parses a product of 1-indexed cycles, e.g. "(1 2 3)(4 5)".  "()" and the
// empty string denote the identity.  Throws input_error with the offending
// position on malformed input.
Perm parse_cycles(const std::string& text, unsigned degree);

}  // namespace cgt
