#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>

namespace cgt {

// Group orders overflow 64 bits quickly (|S_30| ~ 2.6e32), so orders are kept
// as arbitrary-precision integers throughout.
using Bigint = boost::multiprecision::cpp_int;

// Orders are also carried in factored form: prime -> exponent.  Factored
// orders come for free from orbit lengths (every factor is <= the degree), so
// no big-integer factorization is ever needed.
using Factored = std::map<std::uint64_t, int>;

inline void factored_mul_int(Factored& f, std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  }
  if (n > 1) ++f[n];
}

inline Factored factored_div(const Factored& a, const Factored& b) {
  Factored r = a;
  for (const auto& [p, e] : b) {
    r[p] -= e;
    if (r[p] == 0) r.erase(p);
  }
  return r;
}

inline Bigint factored_value(const Factored& f) {
  Bigint v = 1;
  for (const auto& [p, e] : f)
    for (int i = 0; i < e; ++i) v *= p;
  return v;
}

inline std::string bigint_str(const Bigint& v) { return v.str(); }

}  // namespace cgt
