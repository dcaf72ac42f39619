#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cgt/bigint.hpp"

namespace cgt {

// Isomorphism type of a characteristically simple group T^width:
// either (C_p)^width or a direct power of a nonabelian simple group.
struct SimpleType {
    bool abelian = true;
    uint64_t p = 0;              // the prime, abelian case only
    std::string name;            // "C2", "A5", "PSL2_7", "unknown-simple(...)"
    Factored simple_order;       // order of one simple factor
    std::vector<uint64_t> pi;    // primes dividing the simple factor order
    unsigned width = 1;          // number of direct factors

    static SimpleType cyclic(uint64_t prime, unsigned width);
    static SimpleType nonabelian(std::string name, Factored order, unsigned width);

    Bigint factor_order() const;   // order of the whole factor T^width
    std::string print() const;     // e.g. "C2^3", "A5", "PSL2_7^2"
};

// Equality of the simple factor (width ignored).
bool same_simple(const SimpleType& a, const SimpleType& b);
// Equality including width.
bool same_type(const SimpleType& a, const SimpleType& b);

// Lookup table of nonabelian simple group orders up to 10^6.
// Both groups of order 20160 appear; callers must disambiguate.
struct SimpleOrderEntry {
    uint64_t order;
    const char* name;
};
const std::vector<SimpleOrderEntry>& simple_order_table();

// Decidable predicate on simple types (the sigma of an O_Sigma radical).
class TypePredicate {
  public:
    enum class Kind { All, None, CyclicAny, CyclicAmong, CoprimeTo, PiSubset, PSoluble, Listed, Not, AnyOf, AllOf };

    bool matches(const SimpleType& t) const;
    std::string print() const;
    Kind kind() const { return node_->kind; }

    friend TypePredicate tp_all();
    friend TypePredicate tp_none();
    friend TypePredicate tp_cyclic_any();
    friend TypePredicate tp_cyclic_among(std::vector<uint64_t> primes);
    friend TypePredicate tp_coprime_to(std::vector<uint64_t> primes);
    friend TypePredicate tp_pi_subset(std::vector<uint64_t> primes);
    friend TypePredicate tp_p_soluble(uint64_t p);
    friend TypePredicate tp_listed(std::vector<SimpleType> types);
    friend TypePredicate tp_not(TypePredicate inner);
    friend TypePredicate tp_any_of(std::vector<TypePredicate> parts);
    friend TypePredicate tp_all_of(std::vector<TypePredicate> parts);

  private:
    struct Node {
        Kind kind;
        std::vector<uint64_t> primes;
        std::vector<SimpleType> listed;
        std::vector<TypePredicate> kids;
    };
    static TypePredicate make(Kind kind, std::vector<uint64_t> primes,
                              std::vector<SimpleType> listed, std::vector<TypePredicate> kids);
    explicit TypePredicate(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

TypePredicate tp_all();
TypePredicate tp_none();
TypePredicate tp_cyclic_any();
TypePredicate tp_cyclic_among(std::vector<uint64_t> primes);
TypePredicate tp_coprime_to(std::vector<uint64_t> primes);
TypePredicate tp_pi_subset(std::vector<uint64_t> primes);
TypePredicate tp_p_soluble(uint64_t p);
TypePredicate tp_listed(std::vector<SimpleType> types);
TypePredicate tp_not(TypePredicate inner);
TypePredicate tp_any_of(std::vector<TypePredicate> parts);
TypePredicate tp_all_of(std::vector<TypePredicate> parts);

bool predicate_equal(const TypePredicate& a, const TypePredicate& b);

}  // namespace cgt
