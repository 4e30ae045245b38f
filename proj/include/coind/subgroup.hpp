#pragma once

#include "coind/group.hpp"

#include <map>
#include <vector>

namespace coind {

struct Subgroup {
    GroupRef parent;
    ElemSet members;

    int size() const { return static_cast<int>(members.count()); }
    bool contains(int x) const { return members.test(static_cast<size_t>(x)); }
};

inline bool is_subgroup_set(const FiniteGroup& g, const ElemSet& s) {
    if (!s.test(static_cast<size_t>(g.identity))) return false;
    for (auto a = s.find_first(); a != ElemSet::npos; a = s.find_next(a)) {
        if (!s.test(static_cast<size_t>(g.inverse(static_cast<int>(a))))) return false;
        for (auto b = s.find_first(); b != ElemSet::npos; b = s.find_next(b))
            if (!s.test(static_cast<size_t>(g.at(static_cast<int>(a), static_cast<int>(b))))) return false;
    }
    return true;
}

/// Closure of a seed set under multiplication and inversion.
inline ElemSet closure_set(const FiniteGroup& g, const ElemSet& seed) {
    ElemSet cur = seed;
    cur.set(static_cast<size_t>(g.identity));
    std::vector<int> frontier = elements(cur);
    std::vector<int> members = frontier;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier) {
            int ia = g.inverse(a);
            if (!cur.test(static_cast<size_t>(ia))) {
                cur.set(static_cast<size_t>(ia));
                next.push_back(ia);
            }
        }
        // products of existing members with the frontier, both sides
        std::vector<int> snapshot = elements(cur);
        for (int a : snapshot)
            for (int b : snapshot) {
                int p = g.at(a, b);
                if (!cur.test(static_cast<size_t>(p))) {
                    cur.set(static_cast<size_t>(p));
                    next.push_back(p);
                }
            }
        frontier = std::move(next);
    }
    (void)members;
    return cur;
}

inline Subgroup generate_subgroup(const GroupRef& g, const ElemSet& seed) {
    if (static_cast<int>(seed.size()) != g->order) fail_validation("seed set carrier does not match group order");
    return Subgroup{g, closure_set(*g, seed)};
}

inline Subgroup generate_subgroup(const GroupRef& g, const std::vector<int>& seed) {
    return generate_subgroup(g, set_from(g->order, seed));
}

inline Subgroup trivial_subgroup(const GroupRef& g) { return Subgroup{g, singleton(g->order, g->identity)}; }

inline Subgroup full_subgroup(const GroupRef& g) { return Subgroup{g, full_set(g->order)}; }

/// Subgroup generated by all commutators [a,b], a in A, b in B.
inline Subgroup commutator_subgroup(const GroupRef& g, const Subgroup& a, const Subgroup& b) {
    if (a.parent.get() != g.get() || b.parent.get() != g.get())
        fail_validation("commutator_subgroup: arguments have mismatched parent groups");
    ElemSet seed = empty_set(g->order);
    for (auto x = a.members.find_first(); x != ElemSet::npos; x = a.members.find_next(x))
        for (auto y = b.members.find_first(); y != ElemSet::npos; y = b.members.find_next(y))
            seed.set(static_cast<size_t>(g->commutator(static_cast<int>(x), static_cast<int>(y))));
    return Subgroup{g, closure_set(*g, seed)};
}

/// Smallest normal subgroup containing the seed.
inline Subgroup normal_closure(const GroupRef& g, const ElemSet& seed) {
    if (static_cast<int>(seed.size()) != g->order) fail_validation("seed set carrier does not match group order");
    ElemSet conj = empty_set(g->order);
    for (auto s = seed.find_first(); s != ElemSet::npos; s = seed.find_next(s))
        for (int x = 0; x < g->order; ++x) conj.set(static_cast<size_t>(g->conjugate(x, static_cast<int>(s))));
    return Subgroup{g, closure_set(*g, conj)};
}

inline Subgroup normal_closure(const GroupRef& g, const std::vector<int>& seed) {
    return normal_closure(g, set_from(g->order, seed));
}

inline bool is_normal_set(const FiniteGroup& g, const ElemSet& s) {
    for (int x = 0; x < g.order; ++x)
        for (auto a = s.find_first(); a != ElemSet::npos; a = s.find_next(a))
            if (!s.test(static_cast<size_t>(g.conjugate(x, static_cast<int>(a))))) return false;
    return true;
}

/// Every subgroup of g, as member sets in canonical (lexicographic) order.
/// Subset scan; meant for desk-scale orders only.
inline std::vector<ElemSet> all_subgroups(const FiniteGroup& g, int max_order = 16) {
    if (g.order > max_order)
        fail_budget("all_subgroups: order " + std::to_string(g.order) + " exceeds bound " + std::to_string(max_order));
    std::vector<ElemSet> out;
    const uint64_t total = uint64_t(1) << g.order;
    for (uint64_t mask = 0; mask < total; ++mask) {
        if (!(mask & (uint64_t(1) << g.identity))) continue;
        ElemSet s(static_cast<size_t>(g.order), mask);
        if (is_subgroup_set(g, s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// A subgroup presented as a group in its own right, with the embedding data.
struct ReindexedSubgroup {
    GroupRef group;
    std::vector<int> to_parent;    // new index -> parent index
    std::vector<int> from_parent;  // parent index -> new index, -1 outside
};

inline ReindexedSubgroup subgroup_as_group(const GroupRef& parent, const ElemSet& members) {
    if (!is_subgroup_set(*parent, members)) fail_validation("subgroup_as_group: member set is not a subgroup");
    std::vector<int> to_parent = elements(members);
    std::vector<int> from_parent(static_cast<size_t>(parent->order), -1);
    for (size_t i = 0; i < to_parent.size(); ++i) from_parent[static_cast<size_t>(to_parent[i])] = static_cast<int>(i);
    int n = static_cast<int>(to_parent.size());
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back(parent->name(to_parent[static_cast<size_t>(i)]));
    std::vector<int> mul(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mul[static_cast<size_t>(a) * n + b] =
                from_parent[static_cast<size_t>(parent->at(to_parent[static_cast<size_t>(a)], to_parent[static_cast<size_t>(b)]))];
    auto g = validate_group(n, std::move(names), std::move(mul), from_parent[static_cast<size_t>(parent->identity)]);
    return ReindexedSubgroup{g, std::move(to_parent), std::move(from_parent)};
}

}  // namespace coind
