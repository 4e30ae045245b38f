#pragma once

#include "coind/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

namespace coind {

inline GroupRef trivial_group() {
    return validate_group(1, {"1"}, {0}, 0);
}

/// Z_n with additive names "0".."n-1".
inline GroupRef cyclic_group(int n) {
    if (n < 1) fail_validation("cyclic_group: order must be >= 1");
    std::vector<std::string> names;
    std::vector<int> mul(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[static_cast<size_t>(a) * n + b] = (a + b) % n;
    return validate_group(n, std::move(names), std::move(mul), 0);
}

/// D_n of order 2n: r^a s^e with s r s = r^-1. Index = e*n + a.
inline GroupRef dihedral_group(int n) {
    if (n < 2) fail_validation("dihedral_group: need n >= 2");
    int order = 2 * n;
    std::vector<std::string> names(static_cast<size_t>(order));
    for (int e = 0; e < 2; ++e)
        for (int a = 0; a < n; ++a) {
            std::string nm;
            if (a == 0)
                nm = e ? "s" : "1";
            else
                nm = (a == 1 ? "r" : "r" + std::to_string(a)) + (e ? "s" : "");
            names[static_cast<size_t>(e * n + a)] = nm;
        }
    std::vector<int> mul(static_cast<size_t>(order) * order);
    for (int e1 = 0; e1 < 2; ++e1)
        for (int a1 = 0; a1 < n; ++a1)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int a2 = 0; a2 < n; ++a2) {
                    // (r^a1 s^e1)(r^a2 s^e2) = r^(a1 + a2 or a1 - a2) s^(e1+e2)
                    int a = e1 ? (a1 - a2 % n + n) % n : (a1 + a2) % n;
                    int e = (e1 + e2) % 2;
                    mul[static_cast<size_t>(e1 * n + a1) * order + (e2 * n + a2)] = e * n + a;
                }
    return validate_group(order, std::move(names), std::move(mul), 0);
}

/// Q_8 = {1,-1,i,-i,j,-j,k,-k}. Index 2v + s: v in {1,i,j,k}, s = sign bit.
inline GroupRef quaternion_group() {
    const std::array<std::string, 8> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    // axis product table: entry {axis, sign} for v1*v2 with axes 0=1,1=i,2=j,3=k
    auto axis_mul = [](int v1, int v2) -> std::pair<int, int> {
        if (v1 == 0) return {v2, 0};
        if (v2 == 0) return {v1, 0};
        if (v1 == v2) return {0, 1};             // i*i = j*j = k*k = -1
        static const int third[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
        int v = third[v1][v2];
        // cyclic (i,j,k) is positive: i*j=k, j*k=i, k*i=j
        bool positive = (v2 == v1 % 3 + 1);
        return {v, positive ? 0 : 1};
    };
    std::vector<int> mul(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            auto [v, s] = axis_mul(a / 2, b / 2);
            int sign = (a % 2 + b % 2 + s) % 2;
            mul[static_cast<size_t>(a) * 8 + b] = 2 * v + sign;
        }
    return validate_group(8, std::vector<std::string>(names.begin(), names.end()), std::move(mul), 0);
}

namespace detail {
inline void permutations_lex(int n, std::vector<std::vector<int>>& out) {
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

inline std::string cycle_name(const std::vector<int>& p) {
    int n = static_cast<int>(p.size());
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::string out;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)] || p[static_cast<size_t>(i)] == i) continue;
        out += '(';
        int j = i;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = true;
            out += std::to_string(j);
            j = p[static_cast<size_t>(j)];
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}
}  // namespace detail

/// S_n for n <= 4, permutations in lexicographic order, cycle-notation names.
inline GroupRef symmetric_group(int n) {
    if (n < 1 || n > 4) fail_validation("symmetric_group: supported range is 1..4");
    std::vector<std::vector<int>> perms;
    detail::permutations_lex(n, perms);
    int order = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < order; ++i) index[perms[static_cast<size_t>(i)]] = i;
    std::vector<std::string> names;
    for (auto& p : perms) names.push_back(detail::cycle_name(p));
    std::vector<int> mul(static_cast<size_t>(order) * order);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            std::vector<int> c(static_cast<size_t>(n));
            for (int x = 0; x < n; ++x)
                c[static_cast<size_t>(x)] = perms[static_cast<size_t>(a)][static_cast<size_t>(perms[static_cast<size_t>(b)][static_cast<size_t>(x)])];
            mul[static_cast<size_t>(a) * order + b] = index[c];
        }
    return validate_group(order, std::move(names), std::move(mul), 0);
}

inline GroupRef direct_product(const GroupRef& g, const GroupRef& h) {
    int order = g->order * h->order;
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(order));
    for (int a = 0; a < g->order; ++a)
        for (int b = 0; b < h->order; ++b) names.push_back("(" + g->name(a) + "," + h->name(b) + ")");
    std::vector<int> mul(static_cast<size_t>(order) * order);
    auto idx = [&](int a, int b) { return a * h->order + b; };
    for (int a1 = 0; a1 < g->order; ++a1)
        for (int b1 = 0; b1 < h->order; ++b1)
            for (int a2 = 0; a2 < g->order; ++a2)
                for (int b2 = 0; b2 < h->order; ++b2)
                    mul[static_cast<size_t>(idx(a1, b1)) * order + idx(a2, b2)] = idx(g->at(a1, a2), h->at(b1, b2));
    return validate_group(order, std::move(names), std::move(mul), idx(g->identity, h->identity));
}

inline GroupRef klein_four() { return direct_product(cyclic_group(2), cyclic_group(2)); }

struct CatalogEntry {
    std::string name;
    GroupRef group;
};

/// Fixed catalog used by the randomized suites: cyclic, dihedral, quaternion,
/// symmetric up to S_4, and direct products up to order 16.
inline const std::vector<CatalogEntry>& small_group_catalog() {
    static const std::vector<CatalogEntry> catalog = [] {
        std::vector<CatalogEntry> c;
        c.push_back({"Z1", trivial_group()});
        for (int n = 2; n <= 8; ++n) c.push_back({"Z" + std::to_string(n), cyclic_group(n)});
        c.push_back({"Z9", cyclic_group(9)});
        c.push_back({"Z12", cyclic_group(12)});
        c.push_back({"Z16", cyclic_group(16)});
        c.push_back({"V4", klein_four()});
        c.push_back({"Z2xZ4", direct_product(cyclic_group(2), cyclic_group(4))});
        c.push_back({"Z2xZ2xZ2", direct_product(cyclic_group(2), klein_four())});
        c.push_back({"Z4xZ4", direct_product(cyclic_group(4), cyclic_group(4))});
        c.push_back({"S3", symmetric_group(3)});
        c.push_back({"D4", dihedral_group(4)});
        c.push_back({"D5", dihedral_group(5)});
        c.push_back({"D6", dihedral_group(6)});
        c.push_back({"D8", dihedral_group(8)});
        c.push_back({"Q8", quaternion_group()});
        c.push_back({"Z2xD4", direct_product(cyclic_group(2), dihedral_group(4))});
        c.push_back({"Z2xQ8", direct_product(cyclic_group(2), quaternion_group())});
        c.push_back({"S4", symmetric_group(4)});
        return c;
    }();
    return catalog;
}

}  // namespace coind
