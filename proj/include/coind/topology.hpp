#pragma once

#include "coind/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace coind {

/// A topology on a finite carrier. Every finite topology is Alexandrov, so it
/// is determined by the minimal open neighbourhood of each point; the full
/// open-set family is recoverable as the unions of minimal neighbourhoods and
/// is materialised on demand under a budget cap.
struct FiniteTopology {
    int n = 0;
    std::vector<ElemSet> minopen;  // minopen[x] is the smallest open set containing x

    bool is_open(const ElemSet& s) const {
        for (auto x = s.find_first(); x != ElemSet::npos; x = s.find_next(x))
            if (!minopen[static_cast<size_t>(x)].is_subset_of(s)) return false;
        return true;
    }

    /// All opens (unions of minimal neighbourhoods), canonical order.
    /// Refuses past the cap rather than truncating.
    std::vector<ElemSet> opens(long cap = 200'000) const {
        std::set<ElemSet> family;
        family.insert(empty_set(n));
        std::vector<ElemSet> queue = {empty_set(n)};
        while (!queue.empty()) {
            ElemSet u = queue.back();
            queue.pop_back();
            for (int x = 0; x < n; ++x) {
                if (u.test(static_cast<size_t>(x))) continue;
                ElemSet v = u | minopen[static_cast<size_t>(x)];
                if (family.insert(v).second) {
                    if (static_cast<long>(family.size()) > cap)
                        fail_budget("open-set family exceeds cap " + std::to_string(cap));
                    queue.push_back(v);
                }
            }
        }
        return std::vector<ElemSet>(family.begin(), family.end());
    }

    long count_opens(long cap = 200'000) const { return static_cast<long>(opens(cap).size()); }

    bool operator==(const FiniteTopology& other) const { return n == other.n && minopen == other.minopen; }
};

/// Validate a raw minimal-neighbourhood assignment: x in M(x), and
/// y in M(x) implies M(y) <= M(x).
inline FiniteTopology topology_from_minopen(int n, std::vector<ElemSet> minopen) {
    if (static_cast<int>(minopen.size()) != n) fail_validation("minopen table size mismatch");
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(minopen[static_cast<size_t>(x)].size()) != n)
            fail_validation("minopen set carrier mismatch at point " + std::to_string(x));
        if (!minopen[static_cast<size_t>(x)].test(static_cast<size_t>(x)))
            fail_validation("minimal neighbourhood of " + std::to_string(x) + " does not contain it");
    }
    for (int x = 0; x < n; ++x)
        for (auto y = minopen[static_cast<size_t>(x)].find_first(); y != ElemSet::npos;
             y = minopen[static_cast<size_t>(x)].find_next(y))
            if (!minopen[y].is_subset_of(minopen[static_cast<size_t>(x)]))
                fail_validation("minimal neighbourhoods are not nested at points " + std::to_string(x) + "," +
                                std::to_string(static_cast<int>(y)));
    return FiniteTopology{n, std::move(minopen)};
}

/// Certify an open-set family: must contain the empty and full sets and be
/// closed under pairwise union and intersection (which, on a finite carrier,
/// is all the topology axioms). The diagnostic names the first violated
/// closure axiom with witness sets.
inline FiniteTopology validate_topology(int n, const std::vector<ElemSet>& family) {
    if (n < 0) fail_validation("carrier size must be nonnegative");
    std::set<ElemSet> opens;
    for (const auto& u : family) {
        if (static_cast<int>(u.size()) != n) fail_validation("open set carrier size mismatch");
        opens.insert(u);
    }
    if (!opens.count(empty_set(n))) fail_validation("topology axiom fails: empty set is not open");
    if (!opens.count(full_set(n))) fail_validation("topology axiom fails: full carrier is not open");
    for (const auto& u : opens)
        for (const auto& v : opens) {
            if (!opens.count(u | v))
                fail_validation("topology axiom fails: union of " + show_set(u) + " and " + show_set(v) +
                                " is not in the family");
            if (!opens.count(u & v))
                fail_validation("topology axiom fails: intersection of " + show_set(u) + " and " + show_set(v) +
                                " is not in the family");
        }
    std::vector<ElemSet> minopen;
    minopen.reserve(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
        ElemSet m = full_set(n);
        for (const auto& u : opens)
            if (u.test(static_cast<size_t>(x))) m &= u;
        minopen.push_back(m);
    }
    return topology_from_minopen(n, std::move(minopen));
}

inline FiniteTopology discrete_topology(int n) {
    std::vector<ElemSet> minopen;
    for (int x = 0; x < n; ++x) minopen.push_back(singleton(n, x));
    return FiniteTopology{n, std::move(minopen)};
}

inline FiniteTopology indiscrete_topology(int n) {
    return FiniteTopology{n, std::vector<ElemSet>(static_cast<size_t>(n), full_set(n))};
}

/// Topology generated by a subbasis: minopen(x) is the intersection of the
/// subbasic sets containing x (the whole carrier when none does).
inline FiniteTopology topology_from_subbasis(int n, const std::vector<ElemSet>& subbasis) {
    std::vector<ElemSet> minopen;
    minopen.reserve(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
        ElemSet m = full_set(n);
        for (const auto& s : subbasis)
            if (s.test(static_cast<size_t>(x))) m &= s;
        minopen.push_back(m);
    }
    return topology_from_minopen(n, std::move(minopen));
}

/// Continuity of a total map between finite spaces: monotone on minimal
/// neighbourhoods, equivalently all preimages of opens are open.
inline bool is_continuous(const std::vector<int>& f, const FiniteTopology& x, const FiniteTopology& y) {
    for (int p = 0; p < x.n; ++p) {
        const ElemSet& m = x.minopen[static_cast<size_t>(p)];
        const ElemSet& target = y.minopen[static_cast<size_t>(f[static_cast<size_t>(p)])];
        for (auto q = m.find_first(); q != ElemSet::npos; q = m.find_next(q))
            if (!target.test(static_cast<size_t>(f[q]))) return false;
    }
    return true;
}

/// Witness for a continuity failure: an open of the target whose preimage is
/// not open, with the witnessing point.
struct ContinuityWitness {
    int point = -1;
    ElemSet open;
};

inline std::optional<ContinuityWitness> continuity_witness(const std::vector<int>& f, const FiniteTopology& x,
                                                           const FiniteTopology& y) {
    for (int p = 0; p < x.n; ++p) {
        const ElemSet& m = x.minopen[static_cast<size_t>(p)];
        const ElemSet& target = y.minopen[static_cast<size_t>(f[static_cast<size_t>(p)])];
        for (auto q = m.find_first(); q != ElemSet::npos; q = m.find_next(q))
            if (!target.test(static_cast<size_t>(f[q]))) return ContinuityWitness{p, target};
    }
    return std::nullopt;
}

/// Product topology on the pair carrier (index = a*b_space.n + b): minimal
/// neighbourhoods are products of minimal neighbourhoods, so openness of any
/// subset of the pair carrier is decided exactly without materialising the
/// (possibly huge) product family.
inline FiniteTopology product_topology(const FiniteTopology& a, const FiniteTopology& b) {
    int n = a.n * b.n;
    std::vector<ElemSet> minopen;
    minopen.reserve(static_cast<size_t>(n));
    for (int p = 0; p < a.n; ++p)
        for (int q = 0; q < b.n; ++q) {
            ElemSet m = empty_set(n);
            const ElemSet& ma = a.minopen[static_cast<size_t>(p)];
            const ElemSet& mb = b.minopen[static_cast<size_t>(q)];
            for (auto i = ma.find_first(); i != ElemSet::npos; i = ma.find_next(i))
                for (auto j = mb.find_first(); j != ElemSet::npos; j = mb.find_next(j))
                    m.set(i * b.n + j);
            minopen.push_back(m);
        }
    return FiniteTopology{n, std::move(minopen)};
}

/// Subspace topology on the given points (reindexed 0..k-1 in list order).
inline FiniteTopology subspace_topology(const FiniteTopology& t, const std::vector<int>& points) {
    int k = static_cast<int>(points.size());
    std::vector<int> from_parent(static_cast<size_t>(t.n), -1);
    for (int i = 0; i < k; ++i) from_parent[static_cast<size_t>(points[static_cast<size_t>(i)])] = i;
    std::vector<ElemSet> minopen;
    for (int i = 0; i < k; ++i) {
        ElemSet m = empty_set(k);
        const ElemSet& big = t.minopen[static_cast<size_t>(points[static_cast<size_t>(i)])];
        for (auto x = big.find_first(); x != ElemSet::npos; x = big.find_next(x))
            if (from_parent[x] >= 0) m.set(static_cast<size_t>(from_parent[x]));
        minopen.push_back(m);
    }
    return topology_from_minopen(k, std::move(minopen));
}

/// All continuous maps X -> Y in lexicographic order, by monotone
/// backtracking over the points of X. Refuses when the count exceeds the cap.
inline std::vector<std::vector<int>> enumerate_continuous_maps(const FiniteTopology& x, const FiniteTopology& y,
                                                               long cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> f(static_cast<size_t>(x.n), -1);
    // incremental consistency: whenever both p,q assigned with q in minopen(p),
    // require f(q) in minopen(f(p)).
    auto consistent = [&](int p) {
        for (int q = 0; q < x.n; ++q) {
            if (f[static_cast<size_t>(q)] < 0) continue;
            if (x.minopen[static_cast<size_t>(p)].test(static_cast<size_t>(q)) &&
                !y.minopen[static_cast<size_t>(f[static_cast<size_t>(p)])].test(static_cast<size_t>(f[static_cast<size_t>(q)])))
                return false;
            if (x.minopen[static_cast<size_t>(q)].test(static_cast<size_t>(p)) &&
                !y.minopen[static_cast<size_t>(f[static_cast<size_t>(q)])].test(static_cast<size_t>(f[static_cast<size_t>(p)])))
                return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int p) -> void {
        if (p == x.n) {
            if (static_cast<long>(out.size()) >= cap)
                fail_budget("continuous-map enumeration exceeds cap " + std::to_string(cap));
            out.push_back(f);
            return;
        }
        for (int v = 0; v < y.n; ++v) {
            f[static_cast<size_t>(p)] = v;
            if (consistent(p)) self(self, p + 1);
        }
        f[static_cast<size_t>(p)] = -1;
    };
    if (x.n == 0) return {std::vector<int>{}};
    rec(rec, 0);
    return out;
}

}  // namespace coind
