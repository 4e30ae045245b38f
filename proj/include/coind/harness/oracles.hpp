#pragma once

#include "coind/coinduction.hpp"

#include <set>
#include <vector>

namespace coind {

/// Brute-force maximum sub-filtration: enumerate every descending chain of
/// subgroups within the length bound, keep the ones that are strongly
/// central, index-wise below G_*, and carry a certified action of B_*, and
/// return the unique maximum. Deliberately independent of the t-iteration.
inline Filtration oracle_max_subfiltration(const Filtration& b_f, const Filtration& g_f, const GroupAction& a,
                                           const Budget& budget = {}) {
    const auto& g = *a.target;
    if (g.order > budget.subfiltration_order)
        fail_budget("oracle_max_subfiltration: group order " + std::to_string(g.order) + " exceeds bound " +
                    std::to_string(budget.subfiltration_order));
    if (g_f.length() > budget.subfiltration_len)
        fail_budget("oracle_max_subfiltration: filtration length " + std::to_string(g_f.length()) +
                    " exceeds bound " + std::to_string(budget.subfiltration_len));

    auto subs = all_subgroups(g, budget.subfiltration_order);
    int levels = budget.subfiltration_len;
    const ElemSet& deepest = g_f.chain.back();

    std::set<std::vector<ElemSet>> seen;
    std::vector<Filtration> valid;
    std::vector<ElemSet> chain;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == levels) {
            if (!chain.back().is_subset_of(deepest)) return;  // tail containment
            auto cand = make_filtration(g_f.parent, chain);
            if (!seen.insert(cand.chain).second) return;
            if (!filtration_subset(cand, g_f)) return;
            if (scf_violation(cand)) return;
            if (scf_action_violation(a, b_f, cand)) return;
            valid.push_back(std::move(cand));
            return;
        }
        for (const auto& h : subs) {
            if (!h.is_subset_of(g_f.level(depth + 1))) continue;
            if (depth > 0 && !h.is_subset_of(chain.back())) continue;
            chain.push_back(h);
            self(self, depth + 1);
            chain.pop_back();
        }
    };
    rec(rec, 0);

    if (valid.empty()) fail_internal("oracle_max_subfiltration: no valid sub-filtration (the trivial one always is)");

    // the maximum: index-wise above every valid chain, and unique
    const Filtration* best = &valid.front();
    for (const auto& cand : valid)
        if (filtration_subset(*best, cand)) best = &cand;
    for (const auto& cand : valid)
        if (!filtration_subset(cand, *best))
            fail_internal("oracle_max_subfiltration: maximum is not unique against " + show_elems(g, cand.level(1)));
    return *best;
}

}  // namespace coind
