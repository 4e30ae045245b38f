#pragma once

#include "coind/action.hpp"
#include "coind/subgroup.hpp"
#include "coind/topology.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace coind {

/// A finite group with a compatible topology. For finite groups this forces
/// the minimal neighbourhood of 1 to be a normal subgroup N with
/// minopen(g) = gN; validate_topgroup checks continuity directly and
/// cross-checks that coset characterisation.
struct TopGroup {
    GroupRef group;
    FiniteTopology top;
};

inline std::vector<int> flat_mul_table(const FiniteGroup& g) {
    std::vector<int> f(static_cast<size_t>(g.order) * g.order);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) f[static_cast<size_t>(a) * g.order + b] = g.at(a, b);
    return f;
}

inline TopGroup validate_topgroup(const GroupRef& g, const FiniteTopology& top) {
    if (top.n != g->order) fail_validation("topology carrier does not match the group order");
    auto prod = product_topology(top, top);
    if (auto w = continuity_witness(flat_mul_table(*g), prod, top)) {
        int a = w->point / g->order, b = w->point % g->order;
        fail_validation("multiplication is not continuous at (" + g->name(a) + "," + g->name(b) +
                        "): preimage of open " + show_set(w->open) + " is not open");
    }
    if (auto w = continuity_witness(g->inv, top, top))
        fail_validation("inversion is not continuous at " + g->name(w->point) + ": preimage of open " +
                        show_set(w->open) + " is not open");
    // cross-check: minopen(1) is a normal subgroup and minopen(g) = gN = Ng
    const ElemSet& n_set = top.minopen[static_cast<size_t>(g->identity)];
    if (!is_subgroup_set(*g, n_set)) fail_internal("topgroup coset check: minopen(1) is not a subgroup");
    if (!is_normal_set(*g, n_set)) fail_internal("topgroup coset check: minopen(1) is not normal");
    for (int x = 0; x < g->order; ++x) {
        ElemSet coset = empty_set(g->order);
        for (auto m = n_set.find_first(); m != ElemSet::npos; m = n_set.find_next(m))
            coset.set(static_cast<size_t>(g->at(x, static_cast<int>(m))));
        if (coset != top.minopen[static_cast<size_t>(x)])
            fail_internal("topgroup coset check: minopen(g) is not the coset g*minopen(1)");
    }
    return TopGroup{g, top};
}

/// The coset topology determined by a normal subgroup.
inline TopGroup coset_topgroup(const GroupRef& g, const ElemSet& normal_sub) {
    if (!is_subgroup_set(*g, normal_sub) || !is_normal_set(*g, normal_sub))
        fail_validation("coset_topgroup: the given set is not a normal subgroup");
    std::vector<ElemSet> minopen;
    for (int x = 0; x < g->order; ++x) {
        ElemSet coset = empty_set(g->order);
        for (auto m = normal_sub.find_first(); m != ElemSet::npos; m = normal_sub.find_next(m))
            coset.set(static_cast<size_t>(g->at(x, static_cast<int>(m))));
        minopen.push_back(coset);
    }
    return validate_topgroup(g, topology_from_minopen(g->order, std::move(minopen)));
}

inline TopGroup discrete_topgroup(const GroupRef& g) { return TopGroup{g, discrete_topology(g->order)}; }
inline TopGroup indiscrete_topgroup(const GroupRef& g) { return TopGroup{g, indiscrete_topology(g->order)}; }

/// An action of a topological group on another. Per-actor continuity always
/// holds for certified values; joint continuity (of B x G -> G with the
/// product topology) is the stronger condition recorded by the flag.
struct ContinuousAction {
    TopGroup actor, target;
    GroupAction act;
    bool jointly_continuous = false;
};

inline std::vector<int> flat_action_table(const GroupAction& a) { return a.table; }

inline bool action_jointly_continuous(const TopGroup& b, const TopGroup& g, const GroupAction& a) {
    auto prod = product_topology(b.top, g.top);
    return is_continuous(a.table, prod, g.top);
}

inline bool action_per_actor_continuous(const TopGroup& b, const TopGroup& g, const GroupAction& a) {
    std::vector<int> row(static_cast<size_t>(g.group->order));
    for (int e = 0; e < b.group->order; ++e) {
        for (int x = 0; x < g.group->order; ++x) row[static_cast<size_t>(x)] = a.at(e, x);
        if (!is_continuous(row, g.top, g.top)) return false;
    }
    return true;
}

inline ContinuousAction validate_continuous_action(const TopGroup& b, const TopGroup& g, const GroupAction& a,
                                                   bool require_joint) {
    if (a.actor.get() != b.group.get() || a.target.get() != g.group.get())
        fail_validation("continuous action: table endpoints do not match the topological groups");
    if (!action_per_actor_continuous(b, g, a))
        fail_validation("continuous action: some actor element does not act by a continuous automorphism");
    bool joint = action_jointly_continuous(b, g, a);
    if (require_joint && !joint)
        fail_validation("continuous action: B x G -> G is not jointly continuous");
    return ContinuousAction{b, g, a, joint};
}

/// C(B,Y): all continuous maps with the pointwise group law and the
/// compact-open topology. On a finite carrier every subset is compact, so the
/// compact-open subbasis reduces to the pointwise one:
/// minopen(u) = { v : v(b) in minopen(u(b)) for all b }.
struct MapSpaceGroup {
    GroupRef carrier;
    std::vector<std::vector<int>> values;
    FiniteTopology top;
    TopGroup as_topgroup() const { return TopGroup{carrier, top}; }
};

inline FiniteTopology compact_open_topology(const FiniteTopology& b_top, const FiniteTopology& y_top,
                                            const std::vector<std::vector<int>>& maps) {
    int n = static_cast<int>(maps.size());
    std::vector<ElemSet> minopen;
    minopen.reserve(static_cast<size_t>(n));
    for (int u = 0; u < n; ++u) {
        ElemSet m = empty_set(n);
        for (int v = 0; v < n; ++v) {
            bool inside = true;
            for (int p = 0; p < b_top.n && inside; ++p)
                inside = y_top.minopen[static_cast<size_t>(maps[static_cast<size_t>(u)][static_cast<size_t>(p)])].test(
                    static_cast<size_t>(maps[static_cast<size_t>(v)][static_cast<size_t>(p)]));
            if (inside) m.set(static_cast<size_t>(v));
        }
        minopen.push_back(m);
    }
    return topology_from_minopen(n, std::move(minopen));
}

inline MapSpaceGroup continuous_maps_group(const TopGroup& b, const TopGroup& y, const Budget& budget = {}) {
    auto maps = enumerate_continuous_maps(b.top, y.top, budget.map_enum);
    if (static_cast<long>(maps.size()) > budget.carrier_order)
        fail_budget("continuous_maps_group: carrier of " + std::to_string(maps.size()) + " maps exceeds budget " +
                    std::to_string(budget.carrier_order));
    int n = static_cast<int>(maps.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[maps[static_cast<size_t>(i)]] = i;
    const auto& yg = *y.group;
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (const auto& u : maps) {
        std::string nm = "[";
        for (size_t p = 0; p < u.size(); ++p) {
            if (p) nm += ' ';
            nm += yg.name(u[p]);
        }
        names.push_back(nm + "]");
    }
    std::vector<int> mul(static_cast<size_t>(n) * n);
    std::vector<int> prod(static_cast<size_t>(b.top.n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int p = 0; p < b.top.n; ++p)
                prod[static_cast<size_t>(p)] =
                    yg.at(maps[static_cast<size_t>(i)][static_cast<size_t>(p)], maps[static_cast<size_t>(j)][static_cast<size_t>(p)]);
            auto it = index.find(prod);
            if (it == index.end())
                fail_internal("pointwise product of continuous maps escaped C(B,Y)");
            mul[static_cast<size_t>(i) * n + j] = it->second;
        }
    std::vector<int> unit(static_cast<size_t>(b.top.n), yg.identity);
    auto carrier = validate_group(n, std::move(names), std::move(mul), index.at(unit));
    auto top = compact_open_topology(b.top, y.top, maps);
    validate_topgroup(carrier, top);  // verified, not assumed
    return MapSpaceGroup{carrier, std::move(maps), std::move(top)};
}

/// Currying bijection report: continuous maps B x X -> Y versus continuous
/// maps X -> C(B,Y) with the compact-open topology.
struct CurryReport {
    long product_side = 0;
    long function_side = 0;
    bool bijection_verified = false;
};

inline CurryReport curry_check(const TopGroup& b, const FiniteTopology& x, const FiniteTopology& y,
                               const Budget& budget = {}) {
    const FiniteTopology& b_top = b.top;
    auto prod = product_topology(b_top, x);
    auto joint_maps = enumerate_continuous_maps(prod, y, budget.map_enum);

    auto b_maps = enumerate_continuous_maps(b_top, y, budget.map_enum);
    std::map<std::vector<int>, int> b_index;
    for (size_t i = 0; i < b_maps.size(); ++i) b_index[b_maps[i]] = static_cast<int>(i);
    auto co = compact_open_topology(b_top, y, b_maps);
    auto curried_maps = enumerate_continuous_maps(x, co, budget.map_enum);
    std::set<std::vector<int>> curried_set(curried_maps.begin(), curried_maps.end());

    CurryReport report;
    report.product_side = static_cast<long>(joint_maps.size());
    report.function_side = static_cast<long>(curried_maps.size());

    // curry every jointly continuous map and check it lands bijectively
    std::set<std::vector<int>> image;
    bool ok = true;
    for (const auto& f : joint_maps) {
        std::vector<int> curried(static_cast<size_t>(x.n));
        for (int p = 0; p < x.n; ++p) {
            std::vector<int> partial(static_cast<size_t>(b_top.n));
            for (int q = 0; q < b_top.n; ++q) partial[static_cast<size_t>(q)] = f[static_cast<size_t>(q * x.n + p)];
            auto it = b_index.find(partial);
            if (it == b_index.end()) {  // partial map not continuous: should not happen
                ok = false;
                break;
            }
            curried[static_cast<size_t>(p)] = it->second;
        }
        if (!ok) break;
        if (!curried_set.count(curried)) {  // curried map not continuous
            ok = false;
            break;
        }
        if (!image.insert(curried).second) {  // not injective
            ok = false;
            break;
        }
    }
    // surjectivity: every continuous g: X -> C(B,Y) uncurries to a jointly
    // continuous map (this is where local compactness of B enters; finite
    // spaces are compact, hence locally compact)
    if (ok) {
        for (const auto& g : curried_maps)
            if (!image.count(g)) {
                ok = false;
                break;
            }
    }
    report.bijection_verified = ok && report.product_side == report.function_side;
    return report;
}

/// One tower level: a subgroup of the ambient group with a topology on it,
/// kept in ambient indices (minopen entries only meaningful on members).
struct TopLevel {
    ElemSet members;
    std::vector<ElemSet> minopen;  // indexed by ambient element; subsets of members

    bool operator==(const TopLevel& other) const = default;
};

inline TopLevel top_level_of(const TopGroup& g) {
    return TopLevel{full_set(g.group->order), g.top.minopen};
}

/// One application of t: keep the elements whose orbit maps b -> b.g are
/// continuous into the current level, topologised as the subspace of the
/// compact-open space C(B, current level).
inline TopLevel t_top_level_step(const TopGroup& b, const FiniteGroup& g, const GroupAction& a,
                                 const TopLevel& cur) {
    int n = g.order;
    // G_1 = { g in cur : b -> b.g is continuous B -> (cur members, cur topology) }
    ElemSet next = empty_set(n);
    for (auto x = cur.members.find_first(); x != ElemSet::npos; x = cur.members.find_next(x)) {
        bool cont = true;
        for (int p = 0; p < b.group->order && cont; ++p) {
            const ElemSet& mb = b.top.minopen[static_cast<size_t>(p)];
            int fx = a.at(p, static_cast<int>(x));
            if (!cur.members.test(static_cast<size_t>(fx))) {
                cont = false;
                break;
            }
            const ElemSet& target = cur.minopen[static_cast<size_t>(fx)];
            for (auto q = mb.find_first(); q != ElemSet::npos; q = mb.find_next(q)) {
                int fq = a.at(static_cast<int>(q), static_cast<int>(x));
                if (!cur.members.test(static_cast<size_t>(fq)) || !target.test(static_cast<size_t>(fq))) {
                    cont = false;
                    break;
                }
            }
        }
        if (cont) next.set(x);
    }
    // tau_1: subspace of compact-open via g -> (b -> b.g):
    // minopen(g) = { h in next : b.h in minopen_cur(b.g) for all b }
    std::vector<ElemSet> minopen(static_cast<size_t>(n), empty_set(n));
    for (auto x = next.find_first(); x != ElemSet::npos; x = next.find_next(x)) {
        ElemSet m = empty_set(n);
        for (auto h = next.find_first(); h != ElemSet::npos; h = next.find_next(h)) {
            bool inside = true;
            for (int p = 0; p < b.group->order && inside; ++p)
                inside = cur.minopen[static_cast<size_t>(a.at(p, static_cast<int>(x)))].test(
                    static_cast<size_t>(a.at(p, static_cast<int>(h))));
            if (inside) m.set(h);
        }
        minopen[x] = m;
    }
    return TopLevel{std::move(next), std::move(minopen)};
}

/// Reindex a tower level as a certified TopGroup plus the induced B-action.
struct ReindexedLevel {
    TopGroup tg;
    GroupAction action;
    std::vector<int> to_parent, from_parent;
};

inline ReindexedLevel reindex_level(const TopGroup& b, const GroupRef& g, const GroupAction& a, const TopLevel& lv) {
    auto sub = subgroup_as_group(g, lv.members);
    int k = sub.group->order;
    std::vector<ElemSet> minopen;
    for (int i = 0; i < k; ++i) {
        ElemSet m = empty_set(k);
        const ElemSet& big = lv.minopen[static_cast<size_t>(sub.to_parent[static_cast<size_t>(i)])];
        for (auto x = big.find_first(); x != ElemSet::npos; x = big.find_next(x)) {
            int nx = sub.from_parent[x];
            if (nx < 0) fail_internal("tower level minopen escapes the member set");
            m.set(static_cast<size_t>(nx));
        }
        minopen.push_back(m);
    }
    auto top = topology_from_minopen(k, std::move(minopen));
    auto tg = validate_topgroup(sub.group, top);
    std::vector<int> act(static_cast<size_t>(b.group->order) * k);
    for (int p = 0; p < b.group->order; ++p)
        for (int i = 0; i < k; ++i) {
            int moved = a.at(p, sub.to_parent[static_cast<size_t>(i)]);
            int ni = sub.from_parent[static_cast<size_t>(moved)];
            if (ni < 0) fail_internal("tower level is not stable under the B-action");
            act[static_cast<size_t>(p) * k + i] = ni;
        }
    auto action = validate_group_action(b.group, sub.group, std::move(act));
    return ReindexedLevel{tg, std::move(action), std::move(sub.to_parent), std::move(sub.from_parent)};
}

/// (G_1, tau_1) as a TopGroup with the B-action, re-verifying:
/// subgroup, B-stability, tau_1 finer than the subspace topology from G, and
/// B acting by tau_1-continuous automorphisms.
struct TopStepResult {
    ReindexedLevel level;
    TopLevel raw;
};

inline TopStepResult t_top_step(const TopGroup& b, const TopGroup& g, const GroupAction& a) {
    if (!action_per_actor_continuous(b, g, a))
        fail_validation("t_top_step: the action is not by continuous automorphisms");
    auto lv = t_top_level_step(b, *g.group, a, top_level_of(g));
    if (!is_subgroup_set(*g.group, lv.members)) fail_internal("t_top_step: G_1 is not a subgroup");
    for (int p = 0; p < b.group->order; ++p)
        if (act_image(a, p, lv.members) != lv.members) fail_internal("t_top_step: G_1 is not B-stable");
    // tau_1 finer than the subspace topology: minopen_1(g) <= minopen_G(g) & members
    for (auto x = lv.members.find_first(); x != ElemSet::npos; x = lv.members.find_next(x)) {
        ElemSet sub = g.top.minopen[x] & lv.members;
        if (!lv.minopen[x].is_subset_of(sub))
            fail_internal("t_top_step: tau_1 is not finer than the subspace topology");
    }
    auto rl = reindex_level(b, g.group, a, lv);
    // B acts on (G_1, tau_1) by continuous automorphisms
    if (!action_per_actor_continuous(b, rl.tg, rl.action))
        fail_internal("t_top_step: B does not act on (G_1, tau_1) by continuous automorphisms");
    return TopStepResult{std::move(rl), std::move(lv)};
}

/// The tower (G_l, tau_l) and its limit: subgroups descend and topologies on
/// a fixed finite carrier refine only finitely often, so this terminates.
/// Fixed-point detection compares the member set AND the topology.
struct TopTower {
    std::vector<TopLevel> levels;  // level 0 = (G, tau)
    ReindexedLevel limit;          // certified TopGroup + action
    ContinuousAction limit_point;  // jointly continuous, certified
    int iterations = 0;
};

inline TopTower t_top_infinity(const TopGroup& b, const TopGroup& g, const GroupAction& a) {
    if (!action_per_actor_continuous(b, g, a))
        fail_validation("t_top_infinity: the action is not by continuous automorphisms");
    TopTower tower;
    tower.levels.push_back(top_level_of(g));
    const int hard_cap = 10000;
    while (true) {
        auto next = t_top_level_step(b, *g.group, a, tower.levels.back());
        ++tower.iterations;
        if (next == tower.levels.back()) break;
        if (!next.members.is_subset_of(tower.levels.back().members))
            fail_internal("t_top_infinity: tower failed to descend");
        tower.levels.push_back(std::move(next));
        if (tower.iterations > hard_cap) fail_internal("t_top_infinity: tower failed to stabilize");
    }
    // limit = intersection of the G_l with the topology generated by the
    // union of the restricted tau_l; both equal the stabilized last level
    tower.limit = reindex_level(b, g.group, a, tower.levels.back());
    tower.limit_point = validate_continuous_action(b, tower.limit.tg, tower.limit.action, /*require_joint=*/true);
    return tower;
}

}  // namespace coind
