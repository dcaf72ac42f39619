#pragma once

#include <string>

#include "cgt/perm_group.hpp"

namespace cgt {

// A computation target G/K; the kernel is trivial unless a spec supplied one.
struct GroupInput {
  PermGroup group;
  PermGroup kernel;
};

// Largest degree the catalog will materialize.
// Sanity cap on constructed degrees: transversal storage grows with the
// square of the degree, so absurd inputs are refused at parse time.
inline constexpr unsigned kCatalogDegreeLimit = 1000;

// Catalog expression grammar:
//   expr := atom ( "x" atom )*                  disjoint direct product
//   atom := sym(n) | alt(n) | cyclic(n) | dihedral(m) | elemab(p,d)
//         | psl2(p) | q8 | wr(expr, m)
// dihedral(m) is the dihedral group of order m on m/2 points (m even >= 6);
// elemab(p,d) acts as d disjoint p-cycles; psl2(p) acts on the projective
// line over F_p (p + 1 points); q8 is the quaternion group in its regular
// representation; wr(g, m) is the imprimitive wreath product g wr C_m on
// m blocks.  Errors carry a line/column position.
PermGroup parse_catalog(const std::string& expr);

// Structured group file:
//   degree N
//   generators
//   <one cycle string per line>
//   [kernel
//   <one cycle string per line>]
//   [end]
// Blank lines and lines starting with '#' are skipped.  Kernel generators
// must lie in the group and the kernel must be normal; violations are
// rejected with a line/column position.
GroupInput parse_group_text(const std::string& text);

// '@path' loads a structured file; anything else is a catalog expression.
GroupInput parse_group_spec(const std::string& spec);

// Disjoint-action product and the imprimitive wreath product with a cyclic
// top group, exposed for direct use by tests and tools.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
PermGroup wreath_cyclic(const PermGroup& base, unsigned m);

}  // namespace cgt
