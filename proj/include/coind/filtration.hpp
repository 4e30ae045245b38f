#pragma once

#include "coind/homomorphism.hpp"
#include "coind/subgroup.hpp"

#include <algorithm>
#include <vector>

namespace coind {

/// An eventually-constant descending chain of subgroups G_1 >= G_2 >= ...,
/// stored normalized: the last entry repeats forever (tail convention), and
/// the stored list never ends in a duplicate. Strong centrality is a separate
/// certificate (validate_scf); the type alone does not promise it.
struct Filtration {
    GroupRef parent;
    std::vector<ElemSet> chain;

    int length() const { return static_cast<int>(chain.size()); }
    /// 1-based level with the tail convention G_k = G_N for k > N.
    const ElemSet& level(int i) const {
        if (i < 1) fail_internal("filtration level index must be >= 1");
        int n = length();
        int k = i < n ? i : n;
        return chain[static_cast<size_t>(k - 1)];
    }
    int level_order(int i) const { return static_cast<int>(level(i).count()); }
    std::vector<int> level_orders() const {
        std::vector<int> out;
        for (const auto& s : chain) out.push_back(static_cast<int>(s.count()));
        return out;
    }
};

inline void normalize_chain(std::vector<ElemSet>& chain) {
    while (chain.size() > 1 && chain[chain.size() - 1] == chain[chain.size() - 2]) chain.pop_back();
}

/// Certify a raw chain as a filtration: levels are subgroups, descending;
/// normalizes the tail.
inline Filtration make_filtration(const GroupRef& g, std::vector<ElemSet> chain) {
    if (chain.empty()) fail_validation("filtration chain must be nonempty");
    for (size_t k = 0; k < chain.size(); ++k) {
        if (static_cast<int>(chain[k].size()) != g->order)
            fail_validation("filtration level " + std::to_string(k + 1) + " has carrier size mismatch");
        if (!is_subgroup_set(*g, chain[k]))
            fail_validation("filtration level " + std::to_string(k + 1) + " is not a subgroup: " + show_elems(*g, chain[k]));
    }
    for (size_t k = 0; k + 1 < chain.size(); ++k)
        if (!chain[k + 1].is_subset_of(chain[k]))
            fail_validation("filtration is not descending at levels " + std::to_string(k + 1) + " >= " + std::to_string(k + 2));
    normalize_chain(chain);
    return Filtration{g, std::move(chain)};
}

inline Filtration constant_filtration(const GroupRef& g) { return Filtration{g, {full_set(g->order)}}; }

inline Filtration constant_filtration(const GroupRef& g, const ElemSet& s) {
    return make_filtration(g, {s});
}

inline bool same_filtration(const Filtration& a, const Filtration& b) {
    return a.parent.get() == b.parent.get() && a.chain == b.chain;
}

/// Index-wise containment under the tail convention.
inline bool filtration_subset(const Filtration& a, const Filtration& b) {
    if (a.parent.get() != b.parent.get()) return false;
    int bound = std::max(a.length(), b.length());
    for (int i = 1; i <= bound; ++i)
        if (!a.level(i).is_subset_of(b.level(i))) return false;
    return true;
}

struct ScfViolation {
    int i = 0, j = 0;   // least violating pair, lexicographic
    int a = -1, b = -1; // witness elements with [a,b] outside the target level
    int commutator = -1;

    std::string describe(const FiniteGroup& g) const {
        return "[G_" + std::to_string(i) + ", G_" + std::to_string(j) + "] not contained in G_" +
               std::to_string(i + j) + ": witness [" + g.name(a) + "," + g.name(b) + "] = " + g.name(commutator);
    }
};

/// Check [G_i, G_j] <= G_{i+j} for all i, j >= 1. Scanning i, j up to 2N with
/// the tail convention is equivalent to the unbounded check: clamped indices
/// repeat beyond that bound, so any violation reappears inside it.
inline std::optional<ScfViolation> scf_violation(const Filtration& f) {
    const auto& g = *f.parent;
    int n = f.length();
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = 1; j <= 2 * n; ++j) {
            const ElemSet& a_lv = f.level(i);
            const ElemSet& b_lv = f.level(j);
            const ElemSet& target = f.level(i + j);
            for (auto a = a_lv.find_first(); a != ElemSet::npos; a = a_lv.find_next(a))
                for (auto b = b_lv.find_first(); b != ElemSet::npos; b = b_lv.find_next(b)) {
                    int c = g.commutator(static_cast<int>(a), static_cast<int>(b));
                    if (!target.test(static_cast<size_t>(c)))
                        return ScfViolation{i, j, static_cast<int>(a), static_cast<int>(b), c};
                }
        }
    return std::nullopt;
}

struct ScfCertificate {
    int checked_bound = 0;  // pairs scanned up to this index
};

/// Certificate that the filtration is strongly central, or a structured
/// rejection naming the least violated pair and a witness commutator.
inline ScfCertificate validate_scf(const Filtration& f) {
    if (auto v = scf_violation(f))
        fail_validation("filtration is not strongly central: " + v->describe(*f.parent));
    return ScfCertificate{2 * f.length()};
}

/// gamma_1 = G, gamma_{k+1} = [G, gamma_k], iterated to stability.
inline Filtration lower_central_series(const GroupRef& g) {
    std::vector<ElemSet> chain;
    chain.push_back(full_set(g->order));
    while (true) {
        Subgroup prev{g, chain.back()};
        auto next = commutator_subgroup(g, full_subgroup(g), prev);
        if (next.members == chain.back()) break;
        chain.push_back(next.members);
    }
    auto f = make_filtration(g, std::move(chain));
    validate_scf(f);
    return f;
}

/// Index-wise intersection under the tail convention, then normalized.
inline Filtration intersect_filtrations(const std::vector<Filtration>& fs) {
    if (fs.empty()) fail_validation("intersect_filtrations: empty list");
    const GroupRef& g = fs.front().parent;
    for (const auto& f : fs)
        if (f.parent.get() != g.get()) fail_validation("intersect_filtrations: mismatched parent groups");
    int bound = 1;
    for (const auto& f : fs) bound = std::max(bound, f.length());
    std::vector<ElemSet> chain;
    for (int i = 1; i <= bound; ++i) {
        ElemSet lv = fs.front().level(i);
        for (const auto& f : fs) lv &= f.level(i);
        chain.push_back(lv);
    }
    return make_filtration(g, std::move(chain));
}

/// Index-wise image f(K_i), normalized. Strongly central when K is.
inline Filtration image_filtration(const Homomorphism& f, const Filtration& k) {
    if (f.source.get() != k.parent.get()) fail_validation("image_filtration: morphism source does not match filtration parent");
    std::vector<ElemSet> chain;
    for (const auto& lv : k.chain) {
        ElemSet img = empty_set(f.target->order);
        for (auto x = lv.find_first(); x != ElemSet::npos; x = lv.find_next(x))
            img.set(static_cast<size_t>(f.at(static_cast<int>(x))));
        chain.push_back(img);
    }
    return make_filtration(f.target, std::move(chain));
}

/// Filtration on a group of maps into Y, defined pointwise from a filtration
/// on Y: level i consists of the maps landing entirely inside Y_i.
/// values[u] is the full value table of carrier element u.
inline Filtration pointwise_filtration(const GroupRef& carrier, const std::vector<std::vector<int>>& values,
                                       const Filtration& y_f) {
    if (values.size() != static_cast<size_t>(carrier->order))
        fail_validation("pointwise_filtration: value tables do not match carrier order");
    std::vector<ElemSet> chain;
    for (int i = 1; i <= y_f.length(); ++i) {
        const ElemSet& target = y_f.level(i);
        ElemSet lv = empty_set(carrier->order);
        for (int u = 0; u < carrier->order; ++u) {
            bool inside = true;
            for (int y : values[static_cast<size_t>(u)])
                if (!target.test(static_cast<size_t>(y))) {
                    inside = false;
                    break;
                }
            if (inside) lv.set(static_cast<size_t>(u));
        }
        chain.push_back(lv);
    }
    return make_filtration(carrier, std::move(chain));
}

}  // namespace coind
