#pragma once

#include "coind/action.hpp"

namespace coind {

/// B x| G with the certified product filtration, plus the split epimorphism
/// onto B and its section. Pair (b,g) is encoded as b*|G| + g.
struct SemidirectProduct {
    GroupRef group;
    Filtration filtration;
    Homomorphism projection;  // (b,g) -> b
    Homomorphism section;     // b -> (b,1)
};

/// Multiplication convention: (b,g)(b',g') = (bb', (b'^-1 . g) g').
/// Fixed so that the commutator of (b,1) and (1,g) is (1, (b.g)g^-1);
/// the regression test pins this down.
inline SemidirectProduct semidirect_product(const ScfAction& s, const Budget& budget = {}) {
    if (!s.certified) fail_validation("semidirect_product: action is not certified");
    const GroupRef& b = s.base.actor;
    const GroupRef& g = s.base.target;
    long order = static_cast<long>(b->order) * g->order;
    if (order > budget.carrier_order)
        fail_budget("semidirect product order " + std::to_string(order) + " exceeds carrier budget " +
                    std::to_string(budget.carrier_order));
    int n = static_cast<int>(order);
    auto encode = [&](int bb, int gg) { return bb * g->order + gg; };
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int e = 0; e < b->order; ++e)
        for (int x = 0; x < g->order; ++x) names.push_back("(" + b->name(e) + "|" + g->name(x) + ")");
    std::vector<int> mul(static_cast<size_t>(n) * n);
    for (int b1 = 0; b1 < b->order; ++b1)
        for (int g1 = 0; g1 < g->order; ++g1)
            for (int b2 = 0; b2 < b->order; ++b2)
                for (int g2 = 0; g2 < g->order; ++g2) {
                    int twisted = s.base.at(b->inverse(b2), g1);
                    mul[static_cast<size_t>(encode(b1, g1)) * n + encode(b2, g2)] =
                        encode(b->at(b1, b2), g->at(twisted, g2));
                }
    auto sd = validate_group(n, std::move(names), std::move(mul), encode(b->identity, g->identity));

    // (B x| G)_i = { (b,g) : b in B_i, g in G_i }
    int levels = std::max(s.actor_f.length(), s.target_f.length());
    std::vector<ElemSet> chain;
    for (int i = 1; i <= levels; ++i) {
        ElemSet lv = empty_set(n);
        const ElemSet& bi = s.actor_f.level(i);
        const ElemSet& gi = s.target_f.level(i);
        for (auto e = bi.find_first(); e != ElemSet::npos; e = bi.find_next(e))
            for (auto x = gi.find_first(); x != ElemSet::npos; x = gi.find_next(x))
                lv.set(static_cast<size_t>(encode(static_cast<int>(e), static_cast<int>(x))));
        chain.push_back(lv);
    }
    auto filt = make_filtration(sd, std::move(chain));
    validate_scf(filt);

    std::vector<int> proj(static_cast<size_t>(n));
    for (int e = 0; e < b->order; ++e)
        for (int x = 0; x < g->order; ++x) proj[static_cast<size_t>(encode(e, x))] = e;
    auto p = validate_homomorphism(sd, b, std::move(proj));
    std::vector<int> sect(static_cast<size_t>(b->order));
    for (int e = 0; e < b->order; ++e) sect[static_cast<size_t>(e)] = encode(e, g->identity);
    auto sec = validate_homomorphism(b, sd, std::move(sect));

    return SemidirectProduct{sd, std::move(filt), std::move(p), std::move(sec)};
}

}  // namespace coind
