#include "cgt/simple_type.hpp"

#include <algorithm>
#include <sstream>

#include "cgt/errors.hpp"

namespace cgt {

SimpleType SimpleType::cyclic(uint64_t prime, unsigned width) {
    SimpleType t;
    t.abelian = true;
    t.p = prime;
    t.name = "C" + std::to_string(prime);
    t.simple_order = Factored{{prime, 1}};
    t.pi = {prime};
    t.width = width;
    return t;
}

SimpleType SimpleType::nonabelian(std::string name, Factored order, unsigned width) {
    SimpleType t;
    t.abelian = false;
    t.p = 0;
    t.name = std::move(name);
    t.simple_order = std::move(order);
    for (const auto& [q, e] : t.simple_order) {
        (void)e;
        t.pi.push_back(q);
    }
    t.width = width;
    return t;
}

Bigint SimpleType::factor_order() const {
    Bigint one = factored_value(simple_order);
    Bigint v = 1;
    for (unsigned i = 0; i < width; ++i) v *= one;
    return v;
}

std::string SimpleType::print() const {
    std::string s = name;
    if (width > 1) s += "^" + std::to_string(width);
    return s;
}

bool same_simple(const SimpleType& a, const SimpleType& b) {
    if (a.abelian != b.abelian) return false;
    if (a.abelian) return a.p == b.p;
    return a.simple_order == b.simple_order && a.name == b.name;
}

bool same_type(const SimpleType& a, const SimpleType& b) {
    return a.width == b.width && same_simple(a, b);
}

const std::vector<SimpleOrderEntry>& simple_order_table() {
    // All nonabelian simple groups of order at most 10^6.  The only order
    // collision is 20160 (A8 and PSL3_4); callers separate those two by
    // testing for an element of order 15 (present in A8 only).
    static const std::vector<SimpleOrderEntry> table = {
        {60, "A5"},          {168, "PSL2_7"},     {360, "A6"},
        {504, "PSL2_8"},     {660, "PSL2_11"},    {1092, "PSL2_13"},
        {2448, "PSL2_17"},   {2520, "A7"},        {3420, "PSL2_19"},
        {4080, "PSL2_16"},   {5616, "PSL3_3"},    {6048, "PSU3_3"},
        {6072, "PSL2_23"},   {7800, "PSL2_25"},   {7920, "M11"},
        {9828, "PSL2_27"},   {12180, "PSL2_29"},  {14880, "PSL2_31"},
        {20160, "A8"},       {20160, "PSL3_4"},   {25308, "PSL2_37"},
        {25920, "PSU4_2"},   {29120, "Sz8"},      {32736, "PSL2_32"},
        {34440, "PSL2_41"},  {39732, "PSL2_43"},  {51888, "PSL2_47"},
        {58800, "PSL2_49"},  {62400, "PSU3_4"},   {74412, "PSL2_53"},
        {95040, "M12"},      {102660, "PSL2_59"}, {113460, "PSL2_61"},
        {126000, "PSU3_5"},  {150348, "PSL2_67"}, {175560, "J1"},
        {178920, "PSL2_71"}, {181440, "A9"},      {194472, "PSL2_73"},
        {246480, "PSL2_79"}, {262080, "PSL2_64"}, {265680, "PSL2_81"},
        {285852, "PSL2_83"}, {352440, "PSL2_89"}, {372000, "PSL3_5"},
        {443520, "M22"},     {456288, "PSL2_97"}, {515100, "PSL2_101"},
        {546312, "PSL2_103"}, {604800, "J2"},     {612468, "PSL2_107"},
        {647460, "PSL2_109"}, {721392, "PSL2_113"}, {885720, "PSL2_121"},
        {976500, "PSL2_125"}, {979200, "PSp4_4"},
    };
    return table;
}

bool TypePredicate::matches(const SimpleType& t) const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::All:
            return true;
        case Kind::None:
            return false;
        case Kind::CyclicAny:
            return t.abelian;
        case Kind::CyclicAmong:
            return t.abelian && std::find(n.primes.begin(), n.primes.end(), t.p) != n.primes.end();
        case Kind::CoprimeTo:
            for (uint64_t q : n.primes)
                if (std::find(t.pi.begin(), t.pi.end(), q) != t.pi.end()) return false;
            return true;
        case Kind::PiSubset:
            for (uint64_t q : t.pi)
                if (std::find(n.primes.begin(), n.primes.end(), q) == n.primes.end()) return false;
            return true;
        case Kind::PSoluble:
            return t.abelian ||
                   std::find(t.pi.begin(), t.pi.end(), n.primes[0]) == t.pi.end();
        case Kind::Listed:
            for (const SimpleType& s : n.listed)
                if (same_simple(s, t)) return true;
            return false;
        case Kind::Not:
            return !n.kids[0].matches(t);
        case Kind::AnyOf:
            for (const TypePredicate& k : n.kids)
                if (k.matches(t)) return true;
            return false;
        case Kind::AllOf:
            for (const TypePredicate& k : n.kids)
                if (!k.matches(t)) return false;
            return true;
    }
    throw invariant_error("unreachable predicate kind");
}

std::string TypePredicate::print() const {
    const Node& n = *node_;
    std::ostringstream out;
    auto join_primes = [&out](const std::vector<uint64_t>& ps) {
        for (size_t i = 0; i < ps.size(); ++i) out << (i ? "," : "") << ps[i];
    };
    switch (n.kind) {
        case Kind::All: out << "anytype"; break;
        case Kind::None: out << "notype"; break;
        case Kind::CyclicAny: out << "cyclic"; break;
        case Kind::CyclicAmong:
            out << "cyclic{";
            join_primes(n.primes);
            out << "}";
            break;
        case Kind::CoprimeTo:
            out << "coprime{";
            join_primes(n.primes);
            out << "}";
            break;
        case Kind::PiSubset:
            out << "pi{";
            join_primes(n.primes);
            out << "}";
            break;
        case Kind::PSoluble: out << "psoluble{" << n.primes[0] << "}"; break;
        case Kind::Listed:
            out << "listed[";
            for (size_t i = 0; i < n.listed.size(); ++i) {
                if (i) out << ",";
                out << n.listed[i].name << ":" << bigint_str(factored_value(n.listed[i].simple_order));
            }
            out << "]";
            break;
        case Kind::Not: out << "not(" << n.kids[0].print() << ")"; break;
        case Kind::AnyOf:
        case Kind::AllOf: {
            out << (n.kind == Kind::AnyOf ? "any(" : "both(");
            for (size_t i = 0; i < n.kids.size(); ++i) {
                if (i) out << ",";
                out << n.kids[i].print();
            }
            out << ")";
            break;
        }
    }
    return out.str();
}

TypePredicate TypePredicate::make(Kind kind, std::vector<uint64_t> primes,
                                  std::vector<SimpleType> listed, std::vector<TypePredicate> kids) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->primes = std::move(primes);
    node->listed = std::move(listed);
    node->kids = std::move(kids);
    return TypePredicate(std::move(node));
}

TypePredicate tp_all() { return TypePredicate::make(TypePredicate::Kind::All, {}, {}, {}); }
TypePredicate tp_none() { return TypePredicate::make(TypePredicate::Kind::None, {}, {}, {}); }
TypePredicate tp_cyclic_any() {
    return TypePredicate::make(TypePredicate::Kind::CyclicAny, {}, {}, {});
}

TypePredicate tp_cyclic_among(std::vector<uint64_t> primes) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return TypePredicate::make(TypePredicate::Kind::CyclicAmong, std::move(primes), {}, {});
}

TypePredicate tp_coprime_to(std::vector<uint64_t> primes) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return TypePredicate::make(TypePredicate::Kind::CoprimeTo, std::move(primes), {}, {});
}

TypePredicate tp_pi_subset(std::vector<uint64_t> primes) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return TypePredicate::make(TypePredicate::Kind::PiSubset, std::move(primes), {}, {});
}

TypePredicate tp_p_soluble(uint64_t p) {
    return TypePredicate::make(TypePredicate::Kind::PSoluble, {p}, {}, {});
}

TypePredicate tp_listed(std::vector<SimpleType> types) {
    return TypePredicate::make(TypePredicate::Kind::Listed, {}, std::move(types), {});
}

TypePredicate tp_not(TypePredicate inner) {
    return TypePredicate::make(TypePredicate::Kind::Not, {}, {}, {std::move(inner)});
}

TypePredicate tp_any_of(std::vector<TypePredicate> parts) {
    return TypePredicate::make(TypePredicate::Kind::AnyOf, {}, {}, std::move(parts));
}

TypePredicate tp_all_of(std::vector<TypePredicate> parts) {
    return TypePredicate::make(TypePredicate::Kind::AllOf, {}, {}, std::move(parts));
}

bool predicate_equal(const TypePredicate& a, const TypePredicate& b) {
    return a.print() == b.print();
}

}  // namespace cgt
