#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cgt/perm_group.hpp"
#include "cgt/rng.hpp"
#include "cgt/simple_type.hpp"

namespace cgt {

// Immutable expression tree denoting a Fitting formation.  Every
// constructor yields a class that is a Fitting formation by construction;
// the empty class appears only as a whole tree or as a Baer function value.
//
// Local nodes carry a per-prime map plus a default; their value on a
// nonabelian type J is the meet of the values over the primes of J.  Baer
// nodes carry independent abelian (per prime) and nonabelian (per simple
// name) tables.  Nilpotent and p-nilpotent classes are sugar for Local
// nodes; quasinilpotent is its own node with special-cased evaluation.
class Formation {
 public:
  enum class Kind { Empty, Sigma, Local, Baer, Quasinilpotent, Meet };

  Formation();  // the empty class

  Kind kind() const;
  const TypePredicate& sigma() const;           // Sigma nodes only
  const std::vector<Formation>& parts() const;  // Meet nodes only
  // Table access for Local and Baer nodes; defaults come back as the empty
  // class when absent.
  const std::map<std::uint64_t, Formation>& prime_table() const;
  Formation prime_default() const;
  const std::map<std::string, Formation>& name_table() const;  // Baer only
  Formation name_default() const;                              // Baer only
  bool is_empty_class() const { return kind() == Kind::Empty; }
  // True when the node exposes a Baer function (Local, Baer, Quasinilpotent).
  bool has_baer_function() const;

  // The Baer function value f(J); missing table entries fall back to the
  // node's defaults, and an absent default is the empty class.
  Formation baer_value(const SimpleType& J) const;

  // Canonical form: parseable for grammar-expressible trees, diagnostic
  // ("sigma[...]") otherwise.  Structural equality compares these strings.
  std::string print() const;
  bool equal(const Formation& other) const;

  static Formation empty();
  static Formation sigma_class(TypePredicate sigma);
  static Formation triv();
  static Formation all();
  static Formation soluble();
  static Formation p_group(std::uint64_t p);
  static Formation pi_group(std::vector<std::uint64_t> primes);
  static Formation p_soluble(std::uint64_t p);
  static Formation nilpotent();
  static Formation p_nilpotent(std::uint64_t p);
  static Formation quasinilpotent();
  static Formation local(std::map<std::uint64_t, Formation> per_prime,
                         std::optional<Formation> default_prime);
  static Formation baer(std::map<std::uint64_t, Formation> per_prime,
                        std::optional<Formation> default_abelian,
                        std::map<std::string, Formation> per_name,
                        std::optional<Formation> default_nonabelian);
  // Intersection with syntactic simplification: flattens, collapses on an
  // empty or trivial member, drops the full class, merges sigma members.
  static Formation meet(std::vector<Formation> members);

 private:
  struct Node;
  explicit Formation(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Parses the formation grammar:
//   expr := empty | triv | all | sol | nil | qnil | pgrp(p) | pigrp(p,...)
//         | pnil(p) | psol(p) | local(entry,...) | baer(bentry,...)
//         | meet(expr,expr)
//   entry := p -> expr | * -> expr
//   bentry := p -> expr | *a -> expr | name -> expr | *n -> expr
// Whitespace-insensitive; malformed input raises input_error with the
// offending position.
Formation parse_formation(const std::string& text);

// Membership of the quotient G/K in the formation.
bool formation_contains(const Formation& f, const PermGroup& G,
                        const PermGroup& K, SeedStream& rng);

// Membership of the chief factor B/A of G in the class described by f's
// Baer function: abelian factors need a nonempty value, nonabelian factors
// must equal their own f(J)-radical.
bool chief_factor_in_formation(const Formation& f, const PermGroup& G,
                               const PermGroup& B, const PermGroup& A,
                               SeedStream& rng);

// Preimage of the largest normal subgroup of G/K all of whose chief
// factors lie in the class described by f.
PermGroup ef_radical(const PermGroup& G, const PermGroup& K,
                     const Formation& f, SeedStream& rng);

// Level-indexed primitive families: level 0 holds the empty, trivial and
// soluble classes; level i adds Local nodes whose values sit one level
// down.
bool is_primitive_formation(const Formation& f, int level);
// Validates the spec and returns it unchanged; throws input_error when a
// leaf escapes level 0 or the tower exceeds the level.
Formation primitive_formation(int level, const Formation& spec);

}  // namespace cgt
