#pragma once

#include "coind/subgroup.hpp"

#include <algorithm>
#include <queue>
#include <vector>

namespace coind {

struct Homomorphism {
    GroupRef source, target;
    std::vector<int> map;  // total table, source index -> target index

    int at(int x) const { return map[static_cast<size_t>(x)]; }
};

/// First pair (x,y) with f(xy) != f(x)f(y), if any.
inline std::optional<std::pair<int, int>> hom_violation(const FiniteGroup& g, const FiniteGroup& h,
                                                        const std::vector<int>& map) {
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            if (map[static_cast<size_t>(g.at(x, y))] != h.at(map[static_cast<size_t>(x)], map[static_cast<size_t>(y)]))
                return std::make_pair(x, y);
    return std::nullopt;
}

inline Homomorphism validate_homomorphism(const GroupRef& g, const GroupRef& h, std::vector<int> map) {
    if (map.size() != static_cast<size_t>(g->order)) fail_validation("homomorphism table size mismatch");
    for (int v : map)
        if (v < 0 || v >= h->order) fail_validation("homomorphism table entry out of range");
    if (auto viol = hom_violation(*g, *h, map))
        fail_validation("not a homomorphism at witness pair (x,y) = (" + std::to_string(viol->first) + "," +
                        std::to_string(viol->second) + ")");
    if (map[static_cast<size_t>(g->identity)] != h->identity)
        fail_validation("homomorphism does not send identity to identity");
    return Homomorphism{g, h, std::move(map)};
}

inline Homomorphism identity_hom(const GroupRef& g) {
    std::vector<int> map(static_cast<size_t>(g->order));
    for (int i = 0; i < g->order; ++i) map[static_cast<size_t>(i)] = i;
    return Homomorphism{g, g, std::move(map)};
}

inline Homomorphism trivial_hom(const GroupRef& g, const GroupRef& h) {
    return Homomorphism{g, h, std::vector<int>(static_cast<size_t>(g->order), h->identity)};
}

/// f after g (apply g first).
inline Homomorphism compose_homs(const Homomorphism& f, const Homomorphism& g) {
    if (g.target.get() != f.source.get()) fail_validation("compose_homs: middle groups differ");
    std::vector<int> map(static_cast<size_t>(g.source->order));
    for (int x = 0; x < g.source->order; ++x) map[static_cast<size_t>(x)] = f.at(g.at(x));
    return Homomorphism{g.source, f.target, std::move(map)};
}

inline ElemSet hom_image(const Homomorphism& f) {
    ElemSet img = empty_set(f.target->order);
    for (int x = 0; x < f.source->order; ++x) img.set(static_cast<size_t>(f.at(x)));
    return img;
}

inline bool is_automorphism(const FiniteGroup& g, const Homomorphism& f) {
    if (f.source.get() != &g || f.target.get() != &g) fail_validation("is_automorphism: map is not an endomorphism of the group");
    ElemSet seen = empty_set(g.order);
    for (int x = 0; x < g.order; ++x) {
        if (seen.test(static_cast<size_t>(f.at(x)))) return false;
        seen.set(static_cast<size_t>(f.at(x)));
    }
    return true;
}

/// Greedy generating set: add elements whose closure grows the subgroup.
inline std::vector<int> generating_set(const FiniteGroup& g) {
    std::vector<int> gens;
    ElemSet cur = singleton(g.order, g.identity);
    for (int x = 0; x < g.order && static_cast<int>(cur.count()) < g.order; ++x) {
        if (cur.test(static_cast<size_t>(x))) continue;
        ElemSet seed = cur;
        seed.set(static_cast<size_t>(x));
        cur = closure_set(g, seed);
        gens.push_back(x);
    }
    return gens;
}

/// BFS expression tree: every element is parent * gens[gen_index].
struct WordTable {
    std::vector<int> gens;
    std::vector<int> parent;     // -1 for identity
    std::vector<int> gen_index;  // which generator extends parent
    std::vector<int> bfs_order;  // identity first
};

inline WordTable word_table(const FiniteGroup& g, const std::vector<int>& gens) {
    WordTable wt;
    wt.gens = gens;
    wt.parent.assign(static_cast<size_t>(g.order), -2);
    wt.gen_index.assign(static_cast<size_t>(g.order), -1);
    std::queue<int> q;
    wt.parent[static_cast<size_t>(g.identity)] = -1;
    q.push(g.identity);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        wt.bfs_order.push_back(x);
        for (size_t k = 0; k < gens.size(); ++k) {
            int y = g.at(x, gens[k]);
            if (wt.parent[static_cast<size_t>(y)] == -2) {
                wt.parent[static_cast<size_t>(y)] = x;
                wt.gen_index[static_cast<size_t>(y)] = static_cast<int>(k);
                q.push(y);
            }
        }
    }
    if (wt.bfs_order.size() != static_cast<size_t>(g.order)) fail_internal("generating set does not generate the group");
    return wt;
}

/// Extend generator images to a full map along the word table; empty if the
/// extension is not a homomorphism.
inline std::optional<std::vector<int>> extend_hom(const FiniteGroup& g, const FiniteGroup& h, const WordTable& wt,
                                                  const std::vector<int>& images) {
    std::vector<int> map(static_cast<size_t>(g.order), -1);
    map[static_cast<size_t>(g.identity)] = h.identity;
    for (int x : wt.bfs_order) {
        if (x == g.identity) continue;
        int p = wt.parent[static_cast<size_t>(x)];
        map[static_cast<size_t>(x)] = h.at(map[static_cast<size_t>(p)], images[static_cast<size_t>(wt.gen_index[static_cast<size_t>(x)])]);
    }
    if (hom_violation(g, h, map)) return std::nullopt;
    return map;
}

/// Brute-force path: filter all |H|^|G| set maps. Used for tiny sources.
inline std::vector<Homomorphism> enumerate_homomorphisms_brute(const GroupRef& g, const GroupRef& h,
                                                               const Budget& budget = {}) {
    long total = checked_pow(h->order, g->order, budget.map_enum);
    if (total > budget.map_enum)
        fail_budget("hom enumeration refused: |H|^|G| exceeds map budget " + std::to_string(budget.map_enum));
    std::vector<Homomorphism> out;
    for_each_tuple(g->order, h->order, [&](const std::vector<int>& map) {
        if (!hom_violation(*g, *h, map)) out.push_back(Homomorphism{g, h, map});
    });
    std::sort(out.begin(), out.end(), [](const Homomorphism& a, const Homomorphism& b) { return a.map < b.map; });
    return out;
}

/// The complete, duplicate-free list of homomorphisms G -> H in lexicographic
/// order on the map table. Generator-image search with a brute-force path for
/// very small sources; refuses (never truncates) past the budget.
inline std::vector<Homomorphism> enumerate_homomorphisms(const GroupRef& g, const GroupRef& h,
                                                         const Budget& budget = {}) {
    if (g->order > budget.hom_source_order)
        fail_budget("hom enumeration refused: source order " + std::to_string(g->order) + " exceeds budget " +
                    std::to_string(budget.hom_source_order));
    if (g->order <= 5) {
        long total = checked_pow(h->order, g->order, budget.map_enum);
        if (total <= budget.map_enum) return enumerate_homomorphisms_brute(g, h, budget);
    }
    auto gens = generating_set(*g);
    long search = checked_pow(h->order, static_cast<int>(gens.size()), budget.hom_search);
    if (search > budget.hom_search)
        fail_budget("hom enumeration refused: |H|^" + std::to_string(gens.size()) + " exceeds search budget " +
                    std::to_string(budget.hom_search));
    auto wt = word_table(*g, gens);
    std::vector<Homomorphism> out;
    for_each_tuple(static_cast<int>(gens.size()), h->order, [&](const std::vector<int>& images) {
        if (auto map = extend_hom(*g, *h, wt, images)) out.push_back(Homomorphism{g, h, std::move(*map)});
    });
    std::sort(out.begin(), out.end(), [](const Homomorphism& a, const Homomorphism& b) { return a.map < b.map; });
    return out;
}

/// All automorphisms of g as permutation tables, canonical order.
inline std::vector<std::vector<int>> enumerate_automorphisms(const FiniteGroup& g, const Budget& budget = {}) {
    auto gens = generating_set(g);
    long search = checked_pow(g.order, static_cast<int>(gens.size()), budget.hom_search);
    if (search > budget.hom_search) fail_budget("automorphism enumeration exceeds search budget");
    auto wt = word_table(g, gens);
    std::vector<std::vector<int>> out;
    for_each_tuple(static_cast<int>(gens.size()), g.order, [&](const std::vector<int>& images) {
        if (auto map = extend_hom(g, g, wt, images)) {
            ElemSet seen = empty_set(g.order);
            bool bij = true;
            for (int v : *map) {
                if (seen.test(static_cast<size_t>(v))) {
                    bij = false;
                    break;
                }
                seen.set(static_cast<size_t>(v));
            }
            if (bij) out.push_back(std::move(*map));
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace coind
