#pragma once

#include "coind/filtration.hpp"

#include <algorithm>
#include <vector>

namespace coind {

/// Left action of B on G by automorphisms, as a full table.
struct GroupAction {
    GroupRef actor, target;
    std::vector<int> table;  // row-major: table[b*|G| + g]

    int at(int b, int g) const { return table[static_cast<size_t>(b) * target->order + g]; }
    /// [b,g] = (b.g) g^-1, the commutator of (b,1) and (1,g) in B x| G.
    int bracket(int b, int g) const { return target->at(at(b, g), target->inverse(g)); }
};

inline ElemSet act_image(const GroupAction& a, int b, const ElemSet& s) {
    ElemSet out = empty_set(a.target->order);
    for (auto g = s.find_first(); g != ElemSet::npos; g = s.find_next(g))
        out.set(static_cast<size_t>(a.at(b, static_cast<int>(g))));
    return out;
}

/// Certify an action table: unit law, per-actor automorphisms, composition law.
/// The diagnostic names the first violated law with witnesses.
inline GroupAction validate_group_action(const GroupRef& b, const GroupRef& g, std::vector<int> table) {
    if (table.size() != static_cast<size_t>(b->order) * g->order)
        fail_validation("action table has wrong size");
    for (int v : table)
        if (v < 0 || v >= g->order) fail_validation("action table entry out of range");
    GroupAction a{b, g, std::move(table)};
    for (int x = 0; x < g->order; ++x)
        if (a.at(b->identity, x) != x)
            fail_validation("action unit law fails: 1 . " + g->name(x) + " = " + g->name(a.at(b->identity, x)));
    for (int e = 0; e < b->order; ++e) {
        std::vector<int> row(static_cast<size_t>(g->order));
        for (int x = 0; x < g->order; ++x) row[static_cast<size_t>(x)] = a.at(e, x);
        if (auto viol = hom_violation(*g, *g, row))
            fail_validation("actor element " + b->name(e) + " does not act by an automorphism: not a homomorphism at (" +
                            g->name(viol->first) + "," + g->name(viol->second) + ")");
        ElemSet seen = empty_set(g->order);
        for (int v : row) {
            if (seen.test(static_cast<size_t>(v)))
                fail_validation("actor element " + b->name(e) + " does not act by an automorphism: not injective");
            seen.set(static_cast<size_t>(v));
        }
    }
    for (int e1 = 0; e1 < b->order; ++e1)
        for (int e2 = 0; e2 < b->order; ++e2)
            for (int x = 0; x < g->order; ++x)
                if (a.at(b->at(e1, e2), x) != a.at(e1, a.at(e2, x)))
                    fail_validation("action composition law fails at (b,b',g) = (" + b->name(e1) + "," + b->name(e2) +
                                    "," + g->name(x) + ")");
    return a;
}

inline GroupAction trivial_action(const GroupRef& b, const GroupRef& g) {
    std::vector<int> table(static_cast<size_t>(b->order) * g->order);
    for (int e = 0; e < b->order; ++e)
        for (int x = 0; x < g->order; ++x) table[static_cast<size_t>(e) * g->order + x] = x;
    return GroupAction{b, g, std::move(table)};
}

inline GroupAction conjugation_action(const GroupRef& g) {
    std::vector<int> table(static_cast<size_t>(g->order) * g->order);
    for (int e = 0; e < g->order; ++e)
        for (int x = 0; x < g->order; ++x) table[static_cast<size_t>(e) * g->order + x] = g->conjugate(e, x);
    return GroupAction{g, g, std::move(table)};
}

/// Action built from a homomorphism into automorphism tables.
inline GroupAction action_from_automorphisms(const GroupRef& b, const GroupRef& g,
                                             const std::vector<std::vector<int>>& phi) {
    std::vector<int> table(static_cast<size_t>(b->order) * g->order);
    for (int e = 0; e < b->order; ++e)
        for (int x = 0; x < g->order; ++x) table[static_cast<size_t>(e) * g->order + x] = phi[static_cast<size_t>(e)][static_cast<size_t>(x)];
    return validate_group_action(b, g, std::move(table));
}

struct ScfActionViolation {
    bool level_issue = false;  // level preservation vs bracket condition
    int b = -1, level = -1;    // level preservation witness
    int i = 0, j = 0;          // least violating bracket pair
    int actor_elem = -1, g_elem = -1, value = -1;

    std::string describe(const FiniteGroup& actor, const FiniteGroup& target) const {
        if (level_issue)
            return "actor element " + actor.name(b) + " does not preserve filtration level " + std::to_string(level);
        return "[B_" + std::to_string(i) + ", G_" + std::to_string(j) + "] escapes G_" + std::to_string(i + j) +
               ": witness [" + actor.name(actor_elem) + "," + target.name(g_elem) + "] = " + target.name(value);
    }
};

/// Check that the action preserves every level of target_f and satisfies
/// [B_i, G_j] <= G_{i+j} for all i, j >= 1. Pairs are scanned out to the sum
/// of both tail bounds: past that, clamped indices repeat, so the finite scan
/// is equivalent to the unbounded axiom and finds its least violating pair.
inline std::optional<ScfActionViolation> scf_action_violation(const GroupAction& a, const Filtration& actor_f,
                                                              const Filtration& target_f) {
    for (int b = 0; b < a.actor->order; ++b)
        for (int k = 1; k <= target_f.length(); ++k)
            if (act_image(a, b, target_f.level(k)) != target_f.level(k)) {
                ScfActionViolation v;
                v.level_issue = true;
                v.b = b;
                v.level = k;
                return v;
            }
    int m = actor_f.length(), n = target_f.length();
    for (int i = 1; i <= m + n; ++i)
        for (int j = 1; j <= m + n; ++j) {
            const ElemSet& bs = actor_f.level(i);
            const ElemSet& gs = target_f.level(j);
            const ElemSet& tgt = target_f.level(i + j);
            for (auto e = bs.find_first(); e != ElemSet::npos; e = bs.find_next(e))
                for (auto x = gs.find_first(); x != ElemSet::npos; x = gs.find_next(x)) {
                    int c = a.bracket(static_cast<int>(e), static_cast<int>(x));
                    if (!tgt.test(static_cast<size_t>(c))) {
                        ScfActionViolation v;
                        v.i = i;
                        v.j = j;
                        v.actor_elem = static_cast<int>(e);
                        v.g_elem = static_cast<int>(x);
                        v.value = c;
                        return v;
                    }
                }
        }
    return std::nullopt;
}

/// An action of B_* on G_*: level-preserving automorphisms with the bracket
/// condition. Only validate_scf_action produces certified values; the
/// uncertified state is what the forgetful functor sees.
struct ScfAction {
    GroupAction base;
    Filtration actor_f, target_f;
    bool certified = false;
};

inline ScfAction validate_scf_action(const GroupAction& a, const Filtration& actor_f, const Filtration& target_f) {
    if (actor_f.parent.get() != a.actor.get()) fail_validation("actor filtration lives on the wrong group");
    if (target_f.parent.get() != a.target.get()) fail_validation("target filtration lives on the wrong group");
    if (auto v = scf_violation(actor_f))
        fail_validation("actor filtration is not strongly central: " + v->describe(*a.actor));
    if (auto v = scf_violation(target_f))
        fail_validation("target filtration is not strongly central: " + v->describe(*a.target));
    if (auto v = scf_action_violation(a, actor_f, target_f))
        fail_validation("not an action of the filtered actor: " + v->describe(*a.actor, *a.target));
    return ScfAction{a, actor_f, target_f, true};
}

inline bool alpha_preserves_filtrations(const Homomorphism& alpha, const Filtration& src_f, const Filtration& dst_f) {
    int bound = std::max(src_f.length(), dst_f.length());
    for (int i = 1; i <= bound; ++i) {
        const ElemSet& src = src_f.level(i);
        const ElemSet& dst = dst_f.level(i);
        for (auto x = src.find_first(); x != ElemSet::npos; x = src.find_next(x))
            if (!dst.test(static_cast<size_t>(alpha.at(static_cast<int>(x))))) return false;
    }
    return true;
}

/// Restrict a B_*-action along alpha: E_* -> B_*, acting through alpha.
/// The certificate is recomputed rather than assumed.
inline ScfAction restrict_action(const Homomorphism& alpha, const Filtration& e_f, const ScfAction& s) {
    if (!s.certified) fail_validation("restrict_action: input action is not certified");
    if (alpha.source.get() != e_f.parent.get() || alpha.target.get() != s.base.actor.get())
        fail_validation("restrict_action: morphism endpoints do not match");
    if (!alpha_preserves_filtrations(alpha, e_f, s.actor_f))
        fail_validation("restrict_action: morphism does not preserve the filtrations");
    const GroupRef& e = alpha.source;
    const GroupRef& g = s.base.target;
    std::vector<int> table(static_cast<size_t>(e->order) * g->order);
    for (int x = 0; x < e->order; ++x)
        for (int y = 0; y < g->order; ++y) table[static_cast<size_t>(x) * g->order + y] = s.base.at(alpha.at(x), y);
    auto a = validate_group_action(e, g, std::move(table));
    return validate_scf_action(a, e_f, s.target_f);
}

/// A morphism of actions: a homomorphism commuting with a common actor, and
/// preserving filtrations when those are part of the data.
struct EquivariantMorphism {
    Homomorphism hom;
};

inline bool is_equivariant(const Homomorphism& f, const GroupAction& src_act, const GroupAction& dst_act) {
    if (src_act.actor.get() != dst_act.actor.get()) fail_validation("is_equivariant: actions have different actors");
    for (int e = 0; e < src_act.actor->order; ++e)
        for (int x = 0; x < f.source->order; ++x)
            if (f.at(src_act.at(e, x)) != dst_act.at(e, f.at(x))) return false;
    return true;
}

inline bool preserves_filtration(const Homomorphism& f, const Filtration& src_f, const Filtration& dst_f) {
    return alpha_preserves_filtrations(f, src_f, dst_f);
}

/// All equivariant (and, when filtrations are given, filtration-preserving)
/// homomorphisms between the actions' carriers, canonical order.
inline std::vector<EquivariantMorphism> enumerate_equivariant_morphisms(
    const GroupAction& src_act, const GroupAction& dst_act, const std::optional<Filtration>& src_f = std::nullopt,
    const std::optional<Filtration>& dst_f = std::nullopt, const Budget& budget = {}) {
    if (src_act.actor.get() != dst_act.actor.get())
        fail_validation("enumerate_equivariant_morphisms: actions have different actors");
    auto homs = enumerate_homomorphisms(src_act.target, dst_act.target, budget);
    std::vector<EquivariantMorphism> out;
    for (auto& h : homs) {
        if (!is_equivariant(h, src_act, dst_act)) continue;
        if (src_f && dst_f && !preserves_filtration(h, *src_f, *dst_f)) continue;
        out.push_back(EquivariantMorphism{std::move(h)});
    }
    return out;
}

}  // namespace coind
