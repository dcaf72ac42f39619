#pragma once

#include "cgt/bigint.hpp"
#include "cgt/perm_group.hpp"

namespace cgt {

// The pair (top, bottom) standing for the quotient group top/bottom, with
// bottom normal in top.  Both act on the same domain; no coset enumeration
// is implied.
struct Section {
  PermGroup top;
  PermGroup bottom;

  Bigint order() const { return top.order() / bottom.order(); }
  Factored order_factored() const {
    return factored_div(top.order_factored(), bottom.order_factored());
  }
  bool trivial_quotient() const { return top.order() == bottom.order(); }
  unsigned degree() const { return top.degree(); }
};

}  // namespace cgt
