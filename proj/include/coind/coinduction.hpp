#pragma once

#include "coind/action.hpp"
#include "coind/catalog.hpp"
#include "coind/semidirect.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace coind {

/// The group hom_E(B,Y) of E-equivariant set maps u: B -> Y, i.e. those with
/// u(alpha(e) b) = e . u(b), under the pointwise product, together with the
/// B-action (b . u)(-) = u(- . b).
struct EquivariantMapGroup {
    Homomorphism alpha;   // E -> B
    GroupAction e_action; // E on Y
    GroupRef carrier;
    std::vector<std::vector<int>> values;  // values[u][b] = u(b) in Y
    GroupAction b_action;                  // B on the carrier
    ElemSet fixed_points;                  // Fix_Y(ker alpha)
    std::vector<int> coset_reps;           // representatives of alpha(E)\B

    int eval(int u, int b) const { return values[static_cast<size_t>(u)][static_cast<size_t>(b)]; }
    int index_of(const std::vector<int>& map) const {
        auto it = std::lower_bound(values.begin(), values.end(), map);
        if (it == values.end() || *it != map) return -1;
        return static_cast<int>(it - values.begin());
    }
};

namespace detail {

inline bool equivariance_holds(const Homomorphism& alpha, const GroupAction& e_action, const std::vector<int>& u) {
    const auto& b_grp = *alpha.target;
    int ne = alpha.source->order;
    for (int e = 0; e < ne; ++e)
        for (int b = 0; b < b_grp.order; ++b)
            if (u[static_cast<size_t>(b_grp.at(alpha.at(e), b))] != e_action.at(e, u[static_cast<size_t>(b)]))
                return false;
    return true;
}

}  // namespace detail

/// Construct hom_E(B,Y). Enumerates all |Y|^|B| maps when that fits the
/// budget; otherwise builds maps from their values on a transversal of
/// alpha(E)\B restricted to Fix_Y(ker alpha). Both routes re-verify full
/// equivariance; group and action laws are certified, not assumed.
inline EquivariantMapGroup equivariant_maps(const Homomorphism& alpha, const GroupAction& e_action,
                                            const Budget& budget = {}) {
    if (alpha.source.get() != e_action.actor.get())
        fail_validation("equivariant_maps: alpha's source and the action's actor differ");
    const GroupRef& e_grp = alpha.source;
    const GroupRef& b_grp = alpha.target;
    const GroupRef& y = e_action.target;

    // Fix_Y(ker alpha)
    ElemSet fix = full_set(y->order);
    for (int e = 0; e < e_grp->order; ++e) {
        if (alpha.at(e) != b_grp->identity) continue;
        for (int v = 0; v < y->order; ++v)
            if (e_action.at(e, v) != v) fix.reset(static_cast<size_t>(v));
    }

    // right cosets alpha(E)\B: orbits of left multiplication by the image
    ElemSet image = hom_image(alpha);
    std::vector<int> coset_of(static_cast<size_t>(b_grp->order), -1);
    std::vector<int> reps;
    for (int b = 0; b < b_grp->order; ++b) {
        if (coset_of[static_cast<size_t>(b)] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(b);
        for (auto a = image.find_first(); a != ElemSet::npos; a = image.find_next(a))
            coset_of[static_cast<size_t>(b_grp->at(static_cast<int>(a), b))] = c;
    }

    long expected = checked_pow(static_cast<long>(fix.count()), static_cast<int>(reps.size()), budget.carrier_order);
    if (expected > budget.carrier_order)
        fail_budget("equivariant_maps: carrier order |Fix|^cosets = " + std::to_string(expected) +
                    " exceeds carrier budget " + std::to_string(budget.carrier_order));

    std::vector<std::vector<int>> maps;
    long brute = checked_pow(y->order, b_grp->order, budget.map_enum);
    if (brute <= budget.map_enum) {
        for_each_tuple(b_grp->order, y->order, [&](const std::vector<int>& u) {
            if (detail::equivariance_holds(alpha, e_action, u)) maps.push_back(u);
        });
    } else {
        // one E-preimage per image element
        std::vector<int> preimage(static_cast<size_t>(b_grp->order), -1);
        for (int e = 0; e < e_grp->order; ++e)
            if (preimage[static_cast<size_t>(alpha.at(e))] < 0) preimage[static_cast<size_t>(alpha.at(e))] = e;
        auto fix_elems = elements(fix);
        for_each_tuple(static_cast<int>(reps.size()), static_cast<long>(fix_elems.size()),
                       [&](const std::vector<int>& choice) {
                           std::vector<int> u(static_cast<size_t>(b_grp->order), -1);
                           for (size_t c = 0; c < reps.size(); ++c) {
                               int rep = reps[c];
                               int val = fix_elems[static_cast<size_t>(choice[c])];
                               for (auto a = image.find_first(); a != ElemSet::npos; a = image.find_next(a)) {
                                   int b = b_grp->at(static_cast<int>(a), rep);
                                   u[static_cast<size_t>(b)] = e_action.at(preimage[a], val);
                               }
                           }
                           if (!detail::equivariance_holds(alpha, e_action, u))
                               fail_internal("transversal-built map fails equivariance");
                           maps.push_back(std::move(u));
                       });
    }
    std::sort(maps.begin(), maps.end());
    maps.erase(std::unique(maps.begin(), maps.end()), maps.end());

    if (static_cast<long>(maps.size()) != expected)
        fail_internal("carrier cardinality " + std::to_string(maps.size()) + " does not match |Fix|^cosets = " +
                      std::to_string(expected));

    int n = static_cast<int>(maps.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[maps[static_cast<size_t>(i)]] = i;

    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (const auto& u : maps) {
        std::string nm = "[";
        for (size_t b = 0; b < u.size(); ++b) {
            if (b) nm += ' ';
            nm += y->name(u[b]);
        }
        names.push_back(nm + "]");
    }

    std::vector<int> mul(static_cast<size_t>(n) * n);
    std::vector<int> prod(static_cast<size_t>(b_grp->order));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int b = 0; b < b_grp->order; ++b)
                prod[static_cast<size_t>(b)] =
                    y->at(maps[static_cast<size_t>(i)][static_cast<size_t>(b)], maps[static_cast<size_t>(j)][static_cast<size_t>(b)]);
            auto it = index.find(prod);
            if (it == index.end()) fail_internal("pointwise product escaped the equivariant carrier");
            mul[static_cast<size_t>(i) * n + j] = it->second;
        }
    std::vector<int> unit(static_cast<size_t>(b_grp->order), y->identity);
    auto carrier = validate_group(n, std::move(names), std::move(mul), index.at(unit));

    // (b . u)(x) = u(x b)
    std::vector<int> act(static_cast<size_t>(b_grp->order) * n);
    std::vector<int> moved(static_cast<size_t>(b_grp->order));
    for (int b = 0; b < b_grp->order; ++b)
        for (int u = 0; u < n; ++u) {
            for (int x = 0; x < b_grp->order; ++x)
                moved[static_cast<size_t>(x)] = maps[static_cast<size_t>(u)][static_cast<size_t>(b_grp->at(x, b))];
            auto it = index.find(moved);
            if (it == index.end()) fail_internal("translated map escaped the equivariant carrier");
            act[static_cast<size_t>(b) * n + u] = it->second;
        }
    auto b_action = validate_group_action(b_grp, carrier, std::move(act));

    return EquivariantMapGroup{alpha, e_action, carrier, std::move(maps), std::move(b_action), std::move(fix),
                               std::move(reps)};
}

inline Filtration pointwise_filtration(const EquivariantMapGroup& emg, const Filtration& y_f) {
    if (y_f.parent.get() != emg.e_action.target.get())
        fail_validation("pointwise_filtration: filtration does not live on Y");
    return pointwise_filtration(emg.carrier, emg.values, y_f);
}

/// Transport operator: t_i = { g in G_i : [B_j, g] <= G_{i+j} for all j }.
/// The inner quantifier stops at J = max of both tail bounds: beyond J both
/// B_j and the clamped target level are constant, so the finite check is
/// equivalent to the unbounded one. Output is checked to be a strongly
/// central, B-stable sub-filtration, not assumed to be.
inline Filtration t_step(const Filtration& b_f, const Filtration& g_f, const GroupAction& a) {
    if (b_f.parent.get() != a.actor.get()) fail_validation("t_step: actor filtration lives on the wrong group");
    if (g_f.parent.get() != a.target.get()) fail_validation("t_step: target filtration lives on the wrong group");
    if (auto v = scf_violation(b_f))
        fail_validation("t_step: actor filtration is not strongly central: " + v->describe(*a.actor));
    if (auto v = scf_violation(g_f))
        fail_validation("t_step: target filtration is not strongly central: " + v->describe(*a.target));
    for (int b = 0; b < a.actor->order; ++b)
        for (int k = 1; k <= g_f.length(); ++k)
            if (act_image(a, b, g_f.level(k)) != g_f.level(k))
                fail_validation("t_step: action does not preserve target level " + std::to_string(k));

    int n = g_f.length();
    int bound = std::max(b_f.length(), n);
    std::vector<ElemSet> chain;
    for (int i = 1; i <= n; ++i) {
        ElemSet lv = empty_set(a.target->order);
        const ElemSet& gi = g_f.level(i);
        for (auto g = gi.find_first(); g != ElemSet::npos; g = gi.find_next(g)) {
            bool ok = true;
            for (int j = 1; j <= bound && ok; ++j) {
                const ElemSet& bj = b_f.level(j);
                const ElemSet& target = g_f.level(i + j);
                for (auto b = bj.find_first(); b != ElemSet::npos; b = bj.find_next(b))
                    if (!target.test(static_cast<size_t>(a.bracket(static_cast<int>(b), static_cast<int>(g))))) {
                        ok = false;
                        break;
                    }
            }
            if (ok) lv.set(g);
        }
        chain.push_back(lv);
    }
    auto out = make_filtration(a.target, std::move(chain));

    if (!filtration_subset(out, g_f)) fail_internal("t_step output escapes the input filtration");
    if (auto v = scf_violation(out)) fail_internal("t_step output is not strongly central: " + v->describe(*a.target));
    for (int b = 0; b < a.actor->order; ++b)
        for (int k = 1; k <= out.length(); ++k)
            if (act_image(a, b, out.level(k)) != out.level(k)) fail_internal("t_step output is not B-stable");
    return out;
}

/// The descending tower t^0 >= t^1 >= ... and its stabilized limit.
struct TransportTower {
    std::vector<Filtration> levels;  // distinct iterates, starting at t^0 = G_*
    Filtration limit;
    int iterations = 0;  // number of t_step applications performed
};

inline TransportTower t_infinity(const Filtration& b_f, const Filtration& g_f, const GroupAction& a) {
    TransportTower tower;
    tower.levels.push_back(g_f);
    const int hard_cap = 1000;
    while (true) {
        auto next = t_step(b_f, tower.levels.back(), a);
        ++tower.iterations;
        if (same_filtration(next, tower.levels.back())) break;
        if (!filtration_subset(next, tower.levels.back())) fail_internal("transport tower failed to descend");
        tower.levels.push_back(std::move(next));
        if (tower.iterations > hard_cap) fail_internal("transport tower failed to stabilize");
    }
    tower.limit = tower.levels.back();
    // the limit is a fixed point carrying a certified action of B_*
    validate_scf_action(a, b_f, tower.limit);
    return tower;
}

/// The co-induced point alpha_!(Y_*) = t^infty(B_*, hom_E(B, Y_*)).
struct CoinducedPoint {
    EquivariantMapGroup emg;
    Filtration y_filtration;  // the input Y_* (for transposes)
    Filtration pointwise;     // hom_E(B,Y_*) levels on the carrier
    TransportTower tower;     // transport tower on the carrier
    ScfAction carrier_scf;    // certified action of B_* on the limit, carrier-ambient

    // the limit presented as a group in its own right
    GroupRef point_group;
    std::vector<int> to_carrier, from_carrier;
    Filtration point_filtration;  // on point_group, level 1 = everything
    GroupAction point_action;     // B acting on point_group
    ScfAction point_scf;          // certified
};

inline CoinducedPoint coinduce(const Homomorphism& alpha, const Filtration& e_f, const Filtration& b_f,
                               const ScfAction& y_point, const Budget& budget = {}) {
    if (!y_point.certified) fail_validation("coinduce: Y-point is not certified");
    if (y_point.base.actor.get() != alpha.source.get()) fail_validation("coinduce: Y-point actor is not alpha's source");
    if (b_f.parent.get() != alpha.target.get()) fail_validation("coinduce: B filtration lives on the wrong group");
    if (!alpha_preserves_filtrations(alpha, e_f, b_f)) fail_validation("coinduce: alpha does not preserve the filtrations");
    if (!same_filtration(e_f, y_point.actor_f))
        fail_validation("coinduce: Y-point actor filtration differs from the supplied E filtration");
    if (y_point.target_f.level_order(1) != y_point.base.target->order)
        fail_validation("coinduce: Y-point filtration must start at the whole group");

    auto emg = equivariant_maps(alpha, y_point.base, budget);
    auto pw = pointwise_filtration(emg, y_point.target_f);
    auto tower = t_infinity(b_f, pw, emg.b_action);
    auto carrier_scf = validate_scf_action(emg.b_action, b_f, tower.limit);

    auto sub = subgroup_as_group(emg.carrier, tower.limit.level(1));
    int n = sub.group->order;
    std::vector<ElemSet> chain;
    for (int i = 1; i <= tower.limit.length(); ++i) {
        ElemSet lv = empty_set(n);
        for (int x = 0; x < n; ++x)
            if (tower.limit.level(i).test(static_cast<size_t>(sub.to_parent[static_cast<size_t>(x)]))) lv.set(static_cast<size_t>(x));
        chain.push_back(lv);
    }
    auto point_f = make_filtration(sub.group, std::move(chain));
    std::vector<int> act(static_cast<size_t>(alpha.target->order) * n);
    for (int b = 0; b < alpha.target->order; ++b)
        for (int x = 0; x < n; ++x) {
            int moved = emg.b_action.at(b, sub.to_parent[static_cast<size_t>(x)]);
            int nx = sub.from_parent[static_cast<size_t>(moved)];
            if (nx < 0) fail_internal("coinduce: limit subgroup is not stable under the B-action");
            act[static_cast<size_t>(b) * n + x] = nx;
        }
    auto point_action = validate_group_action(alpha.target, sub.group, std::move(act));
    auto point_scf = validate_scf_action(point_action, b_f, point_f);

    return CoinducedPoint{std::move(emg),
                          y_point.target_f,
                          std::move(pw),
                          std::move(tower),
                          std::move(carrier_scf),
                          sub.group,
                          std::move(sub.to_parent),
                          std::move(sub.from_parent),
                          std::move(point_f),
                          std::move(point_action),
                          std::move(point_scf)};
}

/// Adjoint transpose: f: alpha^*(X_*) -> Y_* gives f^(x) = (b -> f(b.x)),
/// landing in the co-induced point. Landing and all laws are re-verified;
/// failures signal an implementation bug, not expected mathematics.
inline EquivariantMorphism transpose_forward(const Homomorphism& f, const ScfAction& x_point,
                                             const CoinducedPoint& cp) {
    const auto& alpha = cp.emg.alpha;
    const GroupRef& x_grp = x_point.base.target;
    if (f.source.get() != x_grp.get()) fail_validation("transpose_forward: f does not start at X");
    if (f.target.get() != cp.emg.e_action.target.get()) fail_validation("transpose_forward: f does not land in Y");
    if (x_point.base.actor.get() != alpha.target.get()) fail_validation("transpose_forward: X is not a point over B");

    // preconditions: f is E-equivariant (through alpha) and filtration-preserving
    for (int e = 0; e < alpha.source->order; ++e)
        for (int x = 0; x < x_grp->order; ++x)
            if (f.at(x_point.base.at(alpha.at(e), x)) != cp.emg.e_action.at(e, f.at(x)))
                fail_validation("transpose_forward: f is not E-equivariant");
    if (!preserves_filtration(f, x_point.target_f, cp.y_filtration))
        fail_validation("transpose_forward: f does not preserve the filtrations");

    int nb = alpha.target->order;
    std::vector<int> map(static_cast<size_t>(x_grp->order));
    std::vector<int> u(static_cast<size_t>(nb));
    for (int x = 0; x < x_grp->order; ++x) {
        for (int b = 0; b < nb; ++b) u[static_cast<size_t>(b)] = f.at(x_point.base.at(b, x));
        int idx = cp.emg.index_of(u);
        if (idx < 0) fail_internal("transpose_forward: image map is not equivariant");
        int pt = cp.from_carrier[static_cast<size_t>(idx)];
        if (pt < 0) fail_internal("transpose_forward: image map escapes the t-infinity carrier");
        map[static_cast<size_t>(x)] = pt;
    }
    auto hom = validate_homomorphism(x_grp, cp.point_group, std::move(map));
    if (!is_equivariant(hom, x_point.base, cp.point_action)) fail_internal("transpose_forward: result is not B-equivariant");
    if (!preserves_filtration(hom, x_point.target_f, cp.point_filtration))
        fail_internal("transpose_forward: result does not preserve the filtrations");
    return EquivariantMorphism{std::move(hom)};
}

/// Inverse transpose: g: X_* -> alpha_!(Y_*) gives g_v(x) = g(x)(1).
inline EquivariantMorphism transpose_backward(const Homomorphism& g, const ScfAction& x_point,
                                              const CoinducedPoint& cp) {
    const auto& alpha = cp.emg.alpha;
    const GroupRef& x_grp = x_point.base.target;
    if (g.source.get() != x_grp.get()) fail_validation("transpose_backward: g does not start at X");
    if (g.target.get() != cp.point_group.get()) fail_validation("transpose_backward: g does not land in the point");

    int one_b = alpha.target->identity;
    std::vector<int> map(static_cast<size_t>(x_grp->order));
    for (int x = 0; x < x_grp->order; ++x)
        map[static_cast<size_t>(x)] = cp.emg.eval(cp.to_carrier[static_cast<size_t>(g.at(x))], one_b);
    auto hom = validate_homomorphism(x_grp, cp.emg.e_action.target, std::move(map));

    // E-equivariance for the restricted X-action and filtration preservation
    const auto& e_grp = *alpha.source;
    for (int e = 0; e < e_grp.order; ++e)
        for (int x = 0; x < x_grp->order; ++x)
            if (hom.at(x_point.base.at(alpha.at(e), x)) != cp.emg.e_action.at(e, hom.at(x)))
                fail_internal("transpose_backward: result is not E-equivariant");
    if (!preserves_filtration(hom, x_point.target_f, cp.y_filtration))
        fail_internal("transpose_backward: result does not preserve the filtrations");
    return EquivariantMorphism{std::move(hom)};
}

}  // namespace coind
