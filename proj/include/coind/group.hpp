#pragma once

#include "coind/core.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coind {

/// A finite group given by its full Cayley table over dense indices 0..order-1.
/// Instances are only created through validate_group, so holding a FiniteGroup
/// means the axioms were checked.
struct FiniteGroup {
    int order = 0;
    std::vector<std::string> names;
    std::vector<int> mul;  // row-major: mul[a*order + b]
    int identity = 0;
    std::vector<int> inv;

    int at(int a, int b) const { return mul[static_cast<size_t>(a) * order + b]; }
    int inverse(int a) const { return inv[static_cast<size_t>(a)]; }
    /// [a,b] = a b a^-1 b^-1
    int commutator(int a, int b) const { return at(at(at(a, b), inverse(a)), inverse(b)); }
    const std::string& name(int a) const { return names[static_cast<size_t>(a)]; }
    int conjugate(int g, int x) const { return at(at(g, x), inverse(g)); }
    bool is_abelian() const {
        for (int a = 0; a < order; ++a)
            for (int b = a + 1; b < order; ++b)
                if (at(a, b) != at(b, a)) return false;
        return true;
    }
};

using GroupRef = std::shared_ptr<const FiniteGroup>;

/// Certify raw tables as a group. Diagnostics name the first violated axiom
/// and the witnessing indices. If identity is not supplied, the element named
/// "1" is used, falling back to index 0.
inline GroupRef validate_group(int order, std::vector<std::string> names, std::vector<int> mul,
                               std::optional<int> identity = std::nullopt) {
    if (order <= 0) fail_validation("group order must be positive, got " + std::to_string(order));
    if (static_cast<int>(names.size()) != order)
        fail_validation("names list has " + std::to_string(names.size()) + " entries, expected " + std::to_string(order));
    if (mul.size() != static_cast<size_t>(order) * order)
        fail_validation("multiplication table has " + std::to_string(mul.size()) + " entries, expected " +
                        std::to_string(static_cast<size_t>(order) * order));
    for (size_t k = 0; k < mul.size(); ++k)
        if (mul[k] < 0 || mul[k] >= order)
            fail_validation("multiplication table entry at position " + std::to_string(k) + " is " +
                            std::to_string(mul[k]) + ", out of range 0.." + std::to_string(order - 1));

    int e;
    if (identity) {
        e = *identity;
        if (e < 0 || e >= order) fail_validation("declared identity index " + std::to_string(e) + " out of range");
    } else {
        auto it = std::find(names.begin(), names.end(), "1");
        e = it != names.end() ? static_cast<int>(it - names.begin()) : 0;
    }

    auto at = [&](int a, int b) { return mul[static_cast<size_t>(a) * order + b]; };

    for (int a = 0; a < order; ++a) {
        if (at(e, a) != a)
            fail_validation("identity axiom fails: " + names[e] + "*" + names[a] + " = " + names[at(e, a)] +
                            " (witness indices e=" + std::to_string(e) + ", a=" + std::to_string(a) + ")");
        if (at(a, e) != a)
            fail_validation("identity axiom fails: " + names[a] + "*" + names[e] + " = " + names[at(a, e)] +
                            " (witness indices a=" + std::to_string(a) + ", e=" + std::to_string(e) + ")");
    }

    std::vector<int> inv(static_cast<size_t>(order), -1);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            if (at(a, b) == e && at(b, a) == e) {
                inv[a] = b;
                break;
            }
        }
        if (inv[a] < 0)
            fail_validation("inverse axiom fails: no two-sided inverse for " + names[a] +
                            " (witness index a=" + std::to_string(a) + ")");
    }

    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (at(at(a, b), c) != at(a, at(b, c)))
                    fail_validation("associativity fails at witness triple (a,b,c) = (" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) + "): (" + names[a] + "*" + names[b] +
                                    ")*" + names[c] + " = " + names[at(at(a, b), c)] + " but " + names[a] + "*(" +
                                    names[b] + "*" + names[c] + ") = " + names[at(a, at(b, c))]);

    auto g = std::make_shared<FiniteGroup>();
    g->order = order;
    g->names = std::move(names);
    g->mul = std::move(mul);
    g->identity = e;
    g->inv = std::move(inv);
    return g;
}

inline std::string show_elems(const FiniteGroup& g, const ElemSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto i = s.find_first(); i != ElemSet::npos; i = s.find_next(i)) {
        if (!first) os << ',';
        os << g.name(static_cast<int>(i));
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace coind
