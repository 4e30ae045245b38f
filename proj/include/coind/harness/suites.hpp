#pragma once

#include "coind/catalog.hpp"
#include "coind/coinduction.hpp"
#include "coind/harness/oracles.hpp"
#include "coind/harness/report.hpp"
#include "coind/topgroup.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace coind {

// ---------------------------------------------------------------------------
// seeded instance generation over the small-group catalog
// ---------------------------------------------------------------------------

namespace gen {

// The caches hold a GroupRef so cached keys can never dangle or be reused by
// a later allocation at the same address.
inline const std::vector<std::vector<int>>& cached_automorphisms(const GroupRef& g) {
    static std::map<const FiniteGroup*, std::pair<GroupRef, std::vector<std::vector<int>>>> cache;
    auto it = cache.find(g.get());
    if (it == cache.end()) it = cache.emplace(g.get(), std::make_pair(g, enumerate_automorphisms(*g))).first;
    return it->second.second;
}

inline const std::vector<ElemSet>& cached_subgroups(const GroupRef& g) {
    static std::map<const FiniteGroup*, std::pair<GroupRef, std::vector<ElemSet>>> cache;
    auto it = cache.find(g.get());
    if (it == cache.end()) it = cache.emplace(g.get(), std::make_pair(g, all_subgroups(*g, 16))).first;
    return it->second.second;
}

/// A random strongly central filtration starting at the whole group,
/// by rejection sampling over descending subgroup chains.
inline std::optional<Filtration> random_scf_filtration(const GroupRef& g, std::mt19937_64& rng, int max_len) {
    const auto& subs = cached_subgroups(g);
    for (int attempt = 0; attempt < 25; ++attempt) {
        std::vector<ElemSet> chain = {full_set(g->order)};
        int len = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(max_len));
        for (int k = 1; k < len; ++k) {
            std::vector<const ElemSet*> candidates;
            for (const auto& s : subs)
                if (s.is_subset_of(chain.back())) candidates.push_back(&s);
            chain.push_back(*candidates[static_cast<size_t>(rng() % candidates.size())]);
        }
        auto f = make_filtration(g, chain);
        if (!scf_violation(f)) return f;
    }
    return std::nullopt;
}

/// A random action of b on g whose automorphisms preserve every level of g_f,
/// built from random generator images among the level-preserving
/// automorphisms. Falls back to the trivial action.
inline GroupAction random_level_preserving_action(const GroupRef& b, const GroupRef& g, const Filtration& g_f,
                                                  std::mt19937_64& rng) {
    const auto& all_auts = cached_automorphisms(g);
    std::vector<const std::vector<int>*> good;
    for (const auto& aut : all_auts) {
        bool ok = true;
        for (int i = 1; i <= g_f.length() && ok; ++i) {
            const ElemSet& lv = g_f.level(i);
            for (auto x = lv.find_first(); x != ElemSet::npos; x = lv.find_next(x))
                if (!lv.test(static_cast<size_t>(aut[x]))) {
                    ok = false;
                    break;
                }
        }
        if (ok) good.push_back(&aut);
    }
    auto gens = generating_set(*b);
    auto wt = word_table(*b, gens);
    std::vector<int> id_perm(static_cast<size_t>(g->order));
    for (int x = 0; x < g->order; ++x) id_perm[static_cast<size_t>(x)] = x;

    for (int attempt = 0; attempt < 40; ++attempt) {
        std::vector<const std::vector<int>*> choice;
        for (size_t k = 0; k < gens.size(); ++k) choice.push_back(good[static_cast<size_t>(rng() % good.size())]);
        // extend along the word table: phi(x * gen) = phi(x) o phi(gen)
        std::vector<std::vector<int>> phi(static_cast<size_t>(b->order));
        phi[static_cast<size_t>(b->identity)] = id_perm;
        bool built = true;
        for (int x : wt.bfs_order) {
            if (x == b->identity) continue;
            const auto& parent = phi[static_cast<size_t>(wt.parent[static_cast<size_t>(x)])];
            const auto& genp = *choice[static_cast<size_t>(wt.gen_index[static_cast<size_t>(x)])];
            std::vector<int> comp(static_cast<size_t>(g->order));
            for (int v = 0; v < g->order; ++v) comp[static_cast<size_t>(v)] = parent[static_cast<size_t>(genp[static_cast<size_t>(v)])];
            phi[static_cast<size_t>(x)] = std::move(comp);
        }
        for (int x = 0; x < b->order && built; ++x)
            for (int y = 0; y < b->order && built; ++y)
                for (int v = 0; v < g->order; ++v)
                    if (phi[static_cast<size_t>(b->at(x, y))][static_cast<size_t>(v)] !=
                        phi[static_cast<size_t>(x)][static_cast<size_t>(phi[static_cast<size_t>(y)][static_cast<size_t>(v)])]) {
                        built = false;
                        break;
                    }
        if (!built) continue;
        return action_from_automorphisms(b, g, phi);
    }
    return trivial_action(b, g);
}

}  // namespace gen

namespace detail {

inline std::string instance_id(int k) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "i%03d", k);
    return buf;
}

inline std::string orders_string(const Filtration& f) {
    std::string s = "[";
    for (int i = 0; i < f.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(static_cast<int>(f.chain[static_cast<size_t>(i)].count()));
    }
    return s + "]";
}

template <typename Fn>
inline CheckRecord run_check(const std::string& name, Fn&& fn) {
    CheckRecord c;
    c.name = name;
    try {
        c.pass = fn(c);
    } catch (const Error& e) {
        c.pass = false;
        c.witness = e.what();
    }
    return c;
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// criterion 1: t_step output is strongly central, B-stable, contained
// ---------------------------------------------------------------------------

inline VerificationReport run_transportation_suite(unsigned long long seed, const Budget& budget = {},
                                                   int min_instances = 100) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "transport-step";
    report.seed = seed;
    report.budget = budget.describe();
    std::mt19937_64 rng(seed);

    std::vector<std::pair<std::string, GroupRef>> actors = {
        {"Z2", cyclic_group(2)}, {"Z4", cyclic_group(4)}, {"S3", symmetric_group(3)}};
    int k = 0;
    for (const auto& entry : small_group_catalog()) {
        const GroupRef& g = entry.group;
        if (g->order > 16) continue;
        std::vector<std::pair<std::string, Filtration>> filtrations;
        filtrations.emplace_back("lcs", lower_central_series(g));
        filtrations.emplace_back("const", constant_filtration(g));
        if (auto rf = gen::random_scf_filtration(g, rng, 4)) filtrations.emplace_back("rand", *rf);

        for (const auto& [bname, b] : actors)
            for (const auto& [fname, g_f] : filtrations) {
                auto act = gen::random_level_preserving_action(b, g, g_f, rng);
                InstanceRecord inst;
                inst.id = detail::instance_id(k++);
                inst.descriptor = "G=" + entry.name + " Gf=" + fname + detail::orders_string(g_f) +
                                  " B=" + bname;
                auto b_f = constant_filtration(b);
                inst.checks.push_back(detail::run_check("t_step", [&](CheckRecord& c) {
                    auto t = t_step(b_f, g_f, act);
                    c.counts["levels"] = t.length();
                    bool scf = !scf_violation(t).has_value();
                    bool stable = true;
                    for (int p = 0; p < b->order && stable; ++p)
                        for (int i = 1; i <= t.length() && stable; ++i)
                            stable = act_image(act, p, t.level(i)) == t.level(i);
                    bool contained = filtration_subset(t, g_f);
                    if (!scf) c.witness = "output not strongly central";
                    if (!stable) c.witness = "output not B-stable";
                    if (!contained) c.witness = "output escapes the input filtration";
                    return scf && stable && contained;
                }));
                report.instances.push_back(std::move(inst));
            }
        // conjugation instance: G acting on itself over its lower central series
        auto lcs = lower_central_series(g);
        InstanceRecord inst;
        inst.id = detail::instance_id(k++);
        inst.descriptor = "G=" + entry.name + " conjugation over lcs";
        inst.checks.push_back(detail::run_check("t_step", [&](CheckRecord& c) {
            auto t = t_step(lcs, lcs, conjugation_action(g));
            c.counts["levels"] = t.length();
            return !scf_violation(t).has_value() && filtration_subset(t, lcs);
        }));
        report.instances.push_back(std::move(inst));
    }

    if (static_cast<int>(report.instances.size()) < min_instances) {
        InstanceRecord inst;
        inst.id = detail::instance_id(k++);
        inst.descriptor = "instance count";
        CheckRecord c;
        c.name = "enough_instances";
        c.pass = false;
        c.witness = "generated " + std::to_string(report.instances.size()) + " < " + std::to_string(min_instances);
        inst.checks.push_back(c);
        report.instances.push_back(std::move(inst));
    }
    report.wall_ms = detail::elapsed_ms(start);
    return report;
}

// ---------------------------------------------------------------------------
// criterion 2: t_infinity equals the exhaustive maximum sub-filtration
// ---------------------------------------------------------------------------

inline VerificationReport run_maximality_suite(unsigned long long seed, const Budget& budget = {},
                                               int min_instances = 30) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "maximality-oracle";
    report.seed = seed;
    report.budget = budget.describe();
    std::mt19937_64 rng(seed);

    std::vector<GroupRef> actors = {cyclic_group(2), cyclic_group(4)};
    int k = 0;
    auto add_instance = [&](const std::string& desc, const Filtration& b_f, const Filtration& g_f,
                            const GroupAction& act) {
        InstanceRecord inst;
        inst.id = detail::instance_id(k++);
        inst.descriptor = desc;
        inst.checks.push_back(detail::run_check("limit_equals_oracle", [&](CheckRecord& c) {
            auto tower = t_infinity(b_f, g_f, act);
            auto oracle = oracle_max_subfiltration(b_f, g_f, act, budget);
            c.counts["tower_levels"] = static_cast<long>(tower.levels.size());
            c.counts["iterations"] = tower.iterations;
            c.counts["limit_order"] = tower.limit.level_order(1);
            bool equal = same_filtration(tower.limit, oracle);
            if (!equal)
                c.witness = "t_infinity " + detail::orders_string(tower.limit) + " vs oracle " +
                            detail::orders_string(oracle);
            // maximality scan: the oracle result contains the limit too
            return equal && filtration_subset(tower.limit, oracle) && filtration_subset(oracle, tower.limit);
        }));
        report.instances.push_back(std::move(inst));
    };

    // the worked negation example
    {
        auto z2 = cyclic_group(2);
        auto z4 = cyclic_group(4);
        auto neg = validate_group_action(z2, z4, {0, 1, 2, 3, 0, 3, 2, 1});
        auto gf = make_filtration(z4, {full_set(4), set_from(4, {0, 2}), singleton(4, 0)});
        add_instance("Z2 negation on Z4 deep chain", constant_filtration(z2), gf, neg);
    }

    for (const auto& entry : small_group_catalog()) {
        const GroupRef& g = entry.group;
        if (g->order > budget.subfiltration_order) continue;
        std::vector<std::pair<std::string, Filtration>> filtrations;
        auto lcs = lower_central_series(g);
        if (lcs.length() <= budget.subfiltration_len) filtrations.emplace_back("lcs", lcs);
        filtrations.emplace_back("const", constant_filtration(g));
        if (auto rf = gen::random_scf_filtration(g, rng, budget.subfiltration_len))
            filtrations.emplace_back("rand", *rf);
        for (const auto& b : actors)
            for (const auto& [fname, g_f] : filtrations) {
                auto act = gen::random_level_preserving_action(b, g, g_f, rng);
                add_instance("G=" + entry.name + " Gf=" + fname + detail::orders_string(g_f) + " B=Z" +
                                 std::to_string(b->order),
                             constant_filtration(b), g_f, act);
            }
    }

    if (static_cast<int>(report.instances.size()) < min_instances) {
        InstanceRecord inst;
        inst.id = detail::instance_id(k++);
        inst.descriptor = "instance count";
        CheckRecord c;
        c.name = "enough_instances";
        c.pass = false;
        c.witness = "generated " + std::to_string(report.instances.size()) + " < " + std::to_string(min_instances);
        inst.checks.push_back(c);
        report.instances.push_back(std::move(inst));
    }
    report.wall_ms = detail::elapsed_ms(start);
    return report;
}

// ---------------------------------------------------------------------------
// the adjunction core shared by criteria 3 and 4
// ---------------------------------------------------------------------------

struct AlphaData {
    Homomorphism hom;        // E -> B
    Filtration source_f;     // E_*
    Filtration target_f;     // B_*
};

/// Enumerate Hom_{Pt_E}(alpha^*(X_*), Y_*): homomorphisms X -> Y that are
/// E-equivariant through alpha and preserve the filtrations.
inline std::vector<Homomorphism> restricted_hom_set(const AlphaData& alpha, const ScfAction& x_point,
                                                    const ScfAction& y_point, const Budget& budget) {
    auto homs = enumerate_homomorphisms(x_point.base.target, y_point.base.target, budget);
    std::vector<Homomorphism> out;
    for (auto& f : homs) {
        bool ok = true;
        for (int e = 0; e < alpha.hom.source->order && ok; ++e)
            for (int x = 0; x < f.source->order; ++x)
                if (f.at(x_point.base.at(alpha.hom.at(e), x)) != y_point.base.at(e, f.at(x))) {
                    ok = false;
                    break;
                }
        if (ok && preserves_filtration(f, x_point.target_f, y_point.target_f)) out.push_back(std::move(f));
    }
    return out;
}

/// One adjunction instance: hom-set bijection, mutual inverse transposes, and
/// sampled naturality squares.
inline InstanceRecord check_scf_adjunction_instance(const std::string& id, const std::string& descriptor,
                                                    const AlphaData& alpha, const ScfAction& x_point,
                                                    const ScfAction& y_point, const Budget& budget,
                                                    int naturality_samples = 2) {
    InstanceRecord inst;
    inst.id = id;
    inst.descriptor = descriptor;

    std::optional<CoinducedPoint> built;
    auto construct = detail::run_check("coinduce", [&](CheckRecord& c) {
        built.emplace(coinduce(alpha.hom, alpha.source_f, alpha.target_f, y_point, budget));
        c.counts["carrier"] = built->emg.carrier->order;
        c.counts["point"] = built->point_group->order;
        c.counts["tower"] = static_cast<long>(built->tower.levels.size());
        return true;
    });
    inst.checks.push_back(construct);
    if (!construct.pass) return inst;
    const CoinducedPoint& cp = *built;

    auto lhs = restricted_hom_set(alpha, x_point, y_point, budget);
    auto rhs = enumerate_equivariant_morphisms(x_point.base, cp.point_action, x_point.target_f, cp.point_filtration,
                                               budget);

    inst.checks.push_back(detail::run_check("hom_sets_bijective", [&](CheckRecord& c) {
        c.counts["lhs"] = static_cast<long>(lhs.size());
        c.counts["rhs"] = static_cast<long>(rhs.size());
        if (lhs.size() != rhs.size()) {
            c.witness = "cardinalities differ";
            return false;
        }
        return true;
    }));

    inst.checks.push_back(detail::run_check("transposes_mutually_inverse", [&](CheckRecord& c) {
        std::set<std::vector<int>> rhs_maps;
        for (const auto& m : rhs) rhs_maps.insert(m.hom.map);
        for (const auto& f : lhs) {
            auto fwd = transpose_forward(f, x_point, cp);
            if (!rhs_maps.count(fwd.hom.map)) {
                c.witness = "forward transpose lands outside the enumerated hom-set";
                return false;
            }
            auto back = transpose_backward(fwd.hom, x_point, cp);
            if (back.hom.map != f.map) {
                c.witness = "backward(forward(f)) differs from f";
                return false;
            }
        }
        for (const auto& m : rhs) {
            auto back = transpose_backward(m.hom, x_point, cp);
            auto fwd = transpose_forward(back.hom, x_point, cp);
            if (fwd.hom.map != m.hom.map) {
                c.witness = "forward(backward(g)) differs from g";
                return false;
            }
        }
        return true;
    }));

    inst.checks.push_back(detail::run_check("naturality_squares", [&](CheckRecord& c) {
        // morphisms h: X -> X in Pt_{B_*}; the square compares
        // forward(f o h) with forward(f) o h for sampled pairs
        auto endos = enumerate_equivariant_morphisms(x_point.base, x_point.base, x_point.target_f,
                                                     x_point.target_f, budget);
        int used = 0;
        for (const auto& h : endos) {
            if (used >= naturality_samples) break;
            ++used;
            for (const auto& f : lhs) {
                auto composed = compose_homs(f, h.hom);
                auto lhs_route = transpose_forward(composed, x_point, cp);
                auto fwd = transpose_forward(f, x_point, cp);
                auto rhs_route = compose_homs(fwd.hom, h.hom);
                if (lhs_route.hom.map != rhs_route.map) {
                    c.witness = "naturality square does not commute";
                    return false;
                }
            }
        }
        c.counts["squares"] = static_cast<long>(used * lhs.size());
        return true;
    }));

    return inst;
}

/// Library entry point for a single adjunction verification (criterion 4 runs
/// many of these over the catalog).
inline VerificationReport verify_scf_adjunction(const AlphaData& alpha, const ScfAction& x_point,
                                                const ScfAction& y_point, const Budget& budget = {}) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "verify-scf-adjunction";
    report.seed = 0;
    report.budget = budget.describe();
    report.instances.push_back(
        check_scf_adjunction_instance("i000", "single instance", alpha, x_point, y_point, budget));
    report.wall_ms = detail::elapsed_ms(start);
    return report;
}

// ---------------------------------------------------------------------------
// criterion 3: plain-group co-induction (constant filtrations)
// ---------------------------------------------------------------------------

inline VerificationReport run_plain_coinduction_suite(unsigned long long seed, const Budget& budget = {},
                                                      int min_instances = 20) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "plain-coinduction";
    report.seed = seed;
    report.budget = budget.describe();

    int k = 0;
    auto add = [&](const std::string& desc, const Homomorphism& alpha, const GroupAction& e_on_y,
                   const GroupAction& b_on_x) {
        AlphaData ad{alpha, constant_filtration(alpha.source), constant_filtration(alpha.target)};
        auto y_point = validate_scf_action(e_on_y, ad.source_f, constant_filtration(e_on_y.target));
        auto x_point = validate_scf_action(b_on_x, ad.target_f, constant_filtration(b_on_x.target));
        report.instances.push_back(
            check_scf_adjunction_instance(detail::instance_id(k++), desc, ad, x_point, y_point, budget));
    };

    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    auto z4 = cyclic_group(4);
    auto v4 = klein_four();
    auto s3 = symmetric_group(3);
    auto one = trivial_group();

    auto neg4 = [&](const GroupRef& b, auto parity) {
        std::vector<int> t(static_cast<size_t>(b->order) * 4);
        for (int e = 0; e < b->order; ++e)
            for (int x = 0; x < 4; ++x) t[static_cast<size_t>(e) * 4 + x] = parity(e) ? (4 - x) % 4 : x;
        return validate_group_action(b, z4, std::move(t));
    };
    auto neg3 = [&](const GroupRef& b, auto parity) {
        std::vector<int> t(static_cast<size_t>(b->order) * 3);
        for (int e = 0; e < b->order; ++e)
            for (int x = 0; x < 3; ++x) t[static_cast<size_t>(e) * 3 + x] = parity(e) ? (3 - x) % 3 : x;
        return validate_group_action(b, z3, std::move(t));
    };

    // alpha = id instances
    add("id_Z2, Y=trivial group, X=Z2 triv", identity_hom(z2), trivial_action(z2, one), trivial_action(z2, z2));
    add("id_Z2, Y=Z2 triv, X=Z2 triv", identity_hom(z2), trivial_action(z2, z2), trivial_action(z2, z2));
    add("id_Z2, Y=Z4 negation, X=Z2 triv", identity_hom(z2), neg4(z2, [](int e) { return e == 1; }),
        trivial_action(z2, z2));
    add("id_Z2, Y=Z3 negation, X=Z4 negation", identity_hom(z2), neg3(z2, [](int e) { return e == 1; }),
        neg4(z2, [](int e) { return e == 1; }));
    add("id_Z4, Y=Z4 negation via parity, X=Z4 triv", identity_hom(z4), neg4(z4, [](int e) { return e % 2 == 1; }),
        trivial_action(z4, z4));
    add("id_S3, Y=S3 conjugation, X=S3 conjugation", identity_hom(s3), conjugation_action(s3),
        conjugation_action(s3));
    add("id_S3, Y=Z3 sign negation, X=S3 triv", identity_hom(s3),
        [&] {
            // sign character of S3: odd permutations negate Z3
            std::vector<int> t(18);
            for (int e = 0; e < 6; ++e) {
                bool odd = s3->name(e).size() == 4;  // "(ab)" transpositions
                for (int x = 0; x < 3; ++x) t[static_cast<size_t>(e) * 3 + x] = odd ? (3 - x) % 3 : x;
            }
            return validate_group_action(s3, z3, std::move(t));
        }(),
        trivial_action(s3, s3));

    // alpha trivial (E arbitrary, image 1)
    add("trivial_Z2_to_Z2, Y=Z2 triv, X=Z2 triv", trivial_hom(z2, z2), trivial_action(z2, z2),
        trivial_action(z2, z2));
    add("trivial_Z2_to_Z2, Y=Z4 negation, X=Z4 negation", trivial_hom(z2, z2),
        neg4(z2, [](int e) { return e == 1; }), neg4(z2, [](int e) { return e == 1; }));
    add("trivial_Z2_to_Z4, Y=Z3 negation, X=Z4 triv", trivial_hom(z2, z4), neg3(z2, [](int e) { return e == 1; }),
        trivial_action(z4, z4));
    add("trivial_Z3_to_Z2, Y=Z3 triv, X=Z2 triv", trivial_hom(z3, z2), trivial_action(z3, z3),
        trivial_action(z2, z2));
    add("trivial_Z1_to_Z4, Y=Z2, X=Z4 negation via parity", trivial_hom(one, z4), trivial_action(one, z2),
        neg4(z4, [](int e) { return e % 2 == 1; }));
    add("trivial_Z1_to_V4, Y=Z2, X=V4 triv", trivial_hom(one, v4), trivial_action(one, z2),
        trivial_action(v4, v4));

    // proper inclusions
    {
        auto doubling = validate_homomorphism(z2, z4, {0, 2});
        add("incl_Z2_in_Z4, Y=Z2 triv, X=Z4 triv", doubling, trivial_action(z2, z2), trivial_action(z4, z4));
        add("incl_Z2_in_Z4, Y=Z4 negation, X=Z4 negation via parity", doubling,
            neg4(z2, [](int e) { return e == 1; }), neg4(z4, [](int e) { return e % 2 == 1; }));
        add("incl_Z2_in_Z4, Y=Z3 negation, X=Z4 triv", doubling, neg3(z2, [](int e) { return e == 1; }),
            trivial_action(z4, z4));
    }
    {
        std::vector<int> incl = {0, 1};  // Z2 -> first coordinate of V4
        auto alpha = validate_homomorphism(z2, v4, {0, 2});
        (void)incl;
        add("incl_Z2_in_V4, Y=Z2 triv, X=V4 triv", alpha, trivial_action(z2, z2), trivial_action(v4, v4));
        add("incl_Z2_in_V4, Y=Z4 negation, X=V4 triv", alpha, neg4(z2, [](int e) { return e == 1; }),
            trivial_action(v4, v4));
    }
    {
        // Z3 -> A3 inside S3 (generated by the first 3-cycle)
        int three_cycle = -1;
        for (int i = 0; i < 6; ++i)
            if (s3->name(i).size() == 5) {  // "(abc)"
                three_cycle = i;
                break;
            }
        std::vector<int> map(3);
        map[0] = s3->identity;
        map[1] = three_cycle;
        map[2] = s3->at(three_cycle, three_cycle);
        auto alpha = validate_homomorphism(z3, s3, map);
        // Y = V4 with Z3 cycling the involutions: V4 = Z2 x Z2 indices {0,1,2,3}
        std::vector<int> cycle = {0, 2, 3, 1};  // (1,2,3) on nonidentity elements
        std::vector<int> t(12);
        for (int e = 0; e < 3; ++e) {
            std::vector<int> p = {0, 1, 2, 3};
            for (int rep = 0; rep < e; ++rep) {
                std::vector<int> q(4);
                for (int x = 0; x < 4; ++x) q[static_cast<size_t>(x)] = cycle[static_cast<size_t>(p[static_cast<size_t>(x)])];
                p = q;
            }
            for (int x = 0; x < 4; ++x) t[static_cast<size_t>(e) * 4 + x] = p[static_cast<size_t>(x)];
        }
        auto cycling = validate_group_action(z3, v4, std::move(t));
        add("incl_Z3_in_S3, Y=V4 cycled, X=S3 conjugation", alpha, cycling, conjugation_action(s3));
        add("incl_Z3_in_S3, Y=Z3 triv, X=S3 triv", alpha, trivial_action(z3, z3), trivial_action(s3, s3));
    }

    // quotients (non-injective, non-trivial alpha)
    {
        auto quot = validate_homomorphism(z4, z2, {0, 1, 0, 1});
        add("quot_Z4_to_Z2, Y=Z2 triv, X=Z2 triv", quot, trivial_action(z4, z2), trivial_action(z2, z2));
        add("quot_Z4_to_Z2, Y=Z3 negation via parity, X=Z2 triv", quot,
            neg3(z4, [](int e) { return e % 2 == 1; }), trivial_action(z2, z2));
    }
    {
        // sign: S3 -> Z2
        std::vector<int> sgn(6);
        for (int e = 0; e < 6; ++e) sgn[static_cast<size_t>(e)] = s3->name(e).size() == 4 ? 1 : 0;
        auto sign_hom = validate_homomorphism(s3, z2, sgn);
        add("sign_S3_to_Z2, Y=Z3 negation via sign, X=Z2 triv", sign_hom,
            [&] {
                std::vector<int> t(18);
                for (int e = 0; e < 6; ++e) {
                    bool odd = s3->name(e).size() == 4;
                    for (int x = 0; x < 3; ++x) t[static_cast<size_t>(e) * 3 + x] = odd ? (3 - x) % 3 : x;
                }
                return validate_group_action(s3, z3, std::move(t));
            }(),
            trivial_action(z2, z2));
    }

    if (static_cast<int>(report.instances.size()) < min_instances) {
        InstanceRecord inst;
        inst.id = detail::instance_id(k++);
        inst.descriptor = "instance count";
        CheckRecord c;
        c.name = "enough_instances";
        c.pass = false;
        c.witness = "generated " + std::to_string(report.instances.size()) + " < " + std::to_string(min_instances);
        inst.checks.push_back(c);
        report.instances.push_back(std::move(inst));
    }
    report.wall_ms = detail::elapsed_ms(start);
    return report;
}

// ---------------------------------------------------------------------------
// criterion 4: full SCF adjunction with nontrivial filtrations
// ---------------------------------------------------------------------------

inline VerificationReport run_scf_adjunction_suite(unsigned long long seed, const Budget& budget = {},
                                                   int min_instances = 25) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "scf-adjunction";
    report.seed = seed;
    report.budget = budget.describe();

    int k = 0;
    auto add = [&](const std::string& desc, const AlphaData& ad, const ScfAction& x_point, const ScfAction& y_point) {
        report.instances.push_back(
            check_scf_adjunction_instance(detail::instance_id(k++), desc, ad, x_point, y_point, budget));
    };

    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    auto z4 = cyclic_group(4);
    auto v4 = klein_four();
    auto s3 = symmetric_group(3);
    auto d4 = dihedral_group(4);
    auto one = trivial_group();

    auto neg = [&](const GroupRef& b, const GroupRef& y, auto parity) {
        std::vector<int> t(static_cast<size_t>(b->order) * y->order);
        for (int e = 0; e < b->order; ++e)
            for (int x = 0; x < y->order; ++x)
                t[static_cast<size_t>(e) * y->order + x] = parity(e) ? (y->order - x) % y->order : x;
        return validate_group_action(b, y, std::move(t));
    };

    auto f_z4_two = make_filtration(z4, {full_set(4), set_from(4, {0, 2})});
    auto f_z4_lcs = make_filtration(z4, {full_set(4), singleton(4, 0)});
    auto f_z2_lcs = make_filtration(z2, {full_set(2), singleton(2, 0)});
    auto lcs_s3 = lower_central_series(s3);
    auto lcs_d4 = lower_central_series(d4);

    // alpha = id with two-level filtrations
    {
        AlphaData ad{identity_hom(z4), f_z4_two, f_z4_two};
        auto y1 = validate_scf_action(neg(z4, z4, [](int e) { return e % 2 == 1; }), f_z4_two, f_z4_two);
        auto x1 = validate_scf_action(trivial_action(z4, z4), f_z4_two, f_z4_lcs);
        add("id_Z4 two-level, Y=negation, X=trivial lcs", ad, x1, y1);
        auto y2 = validate_scf_action(trivial_action(z4, z2), f_z4_two, f_z2_lcs);
        add("id_Z4 two-level, Y=Z2 triv, X=trivial lcs", ad, x1, y2);
        auto x2 = validate_scf_action(neg(z4, z4, [](int e) { return e % 2 == 1; }), f_z4_two, f_z4_two);
        add("id_Z4 two-level, Y=Z2 triv, X=negation", ad, x2, y2);
        add("id_Z4 two-level, Y=negation, X=negation", ad, x2, y1);
    }
    {
        AlphaData ad{identity_hom(s3), lcs_s3, lcs_s3};
        auto y = validate_scf_action(conjugation_action(s3), lcs_s3, lcs_s3);
        auto x = validate_scf_action(conjugation_action(s3), lcs_s3, lcs_s3);
        add("id_S3 lcs, Y=conjugation, X=conjugation", ad, x, y);
        auto y2 = validate_scf_action(trivial_action(s3, z3),
                                      lcs_s3, make_filtration(z3, {full_set(3), singleton(3, 0)}));
        add("id_S3 lcs, Y=Z3 triv lcs, X=conjugation", ad, x, y2);
    }
    {
        AlphaData ad{identity_hom(d4), lcs_d4, lcs_d4};
        auto y = validate_scf_action(conjugation_action(d4), lcs_d4, lcs_d4);
        add("id_D4 lcs, Y=conjugation, X=conjugation", ad, y, y);
    }

    // alpha trivial with filtrations
    {
        AlphaData ad{trivial_hom(z2, z2), f_z2_lcs, f_z2_lcs};
        auto y = validate_scf_action(neg(z2, z4, [](int e) { return e == 1; }), f_z2_lcs, f_z4_two);
        auto x = validate_scf_action(trivial_action(z2, z2), f_z2_lcs, f_z2_lcs);
        add("trivial_Z2 lcs, Y=Z4 negation two-level, X=Z2", ad, x, y);
        auto y2 = validate_scf_action(trivial_action(z2, z2), f_z2_lcs, f_z2_lcs);
        add("trivial_Z2 lcs, Y=Z2 lcs, X=Z2 lcs", ad, x, y2);
    }
    {
        AlphaData ad{trivial_hom(z3, z2), constant_filtration(z3), f_z2_lcs};
        auto y = validate_scf_action(trivial_action(z3, z3), constant_filtration(z3),
                                     make_filtration(z3, {full_set(3), singleton(3, 0)}));
        auto x = validate_scf_action(trivial_action(z2, z4), f_z2_lcs, f_z4_two);
        add("trivial_Z3_to_Z2, Y=Z3 lcs, X=Z4 two-level", ad, x, y);
    }
    {
        AlphaData ad{trivial_hom(one, z2), constant_filtration(one), f_z2_lcs};
        auto y = validate_scf_action(trivial_action(one, z3), constant_filtration(one),
                                     make_filtration(z3, {full_set(3), singleton(3, 0)}));
        auto x = validate_scf_action(trivial_action(z2, z2), f_z2_lcs, f_z2_lcs);
        add("trivial_Z1_to_Z2, Y=Z3 lcs, X=Z2 lcs", ad, x, y);
    }

    // proper inclusion: Z2 -> Z4 by doubling, with level-matched filtrations
    {
        auto doubling = validate_homomorphism(z2, z4, {0, 2});
        // alpha(E_2) = {0} <= B_2 = {0,2}
        AlphaData ad{doubling, f_z2_lcs, f_z4_two};
        auto y = validate_scf_action(trivial_action(z2, z2), f_z2_lcs, f_z2_lcs);
        auto x = validate_scf_action(trivial_action(z4, z4), f_z4_two, f_z4_lcs);
        add("incl_Z2_in_Z4, Y=Z2 lcs, X=Z4 lcs", ad, x, y);
        auto x2 = validate_scf_action(neg(z4, z4, [](int e) { return e % 2 == 1; }), f_z4_two, f_z4_two);
        add("incl_Z2_in_Z4, Y=Z2 lcs, X=Z4 negation", ad, x2, y);
        auto y2 = validate_scf_action(neg(z2, z4, [](int e) { return e == 1; }), f_z2_lcs, f_z4_two);
        add("incl_Z2_in_Z4, Y=Z4 negation two-level, X=Z4 lcs", ad, x, y2);
        add("incl_Z2_in_Z4, Y=Z4 negation two-level, X=Z4 negation", ad, x2, y2);
    }
    {
        auto alpha = validate_homomorphism(z2, v4, {0, 2});
        auto f_v4 = make_filtration(v4, {full_set(4), singleton(4, 0)});
        AlphaData ad{alpha, f_z2_lcs, f_v4};
        auto y = validate_scf_action(trivial_action(z2, z3), f_z2_lcs,
                                     make_filtration(z3, {full_set(3), singleton(3, 0)}));
        auto x = validate_scf_action(trivial_action(v4, v4), f_v4, f_v4);
        add("incl_Z2_in_V4 lcs, Y=Z3 lcs, X=V4 lcs", ad, x, y);
    }
    {
        // Z3 -> A3 in S3 with the lcs filtration on both
        int three_cycle = -1;
        for (int i = 0; i < 6; ++i)
            if (s3->name(i).size() == 5) {
                three_cycle = i;
                break;
            }
        std::vector<int> map = {s3->identity, three_cycle, s3->at(three_cycle, three_cycle)};
        auto alpha = validate_homomorphism(z3, s3, map);
        // E_* = [Z3, Z3] constant maps into lcs(S3) = [S3, A3]
        AlphaData ad{alpha, constant_filtration(z3), lcs_s3};
        auto y = validate_scf_action(trivial_action(z3, z2), constant_filtration(z3), constant_filtration(z2));
        auto x = validate_scf_action(conjugation_action(s3), lcs_s3, lcs_s3);
        add("incl_Z3_in_S3, Y=Z2 const, X=S3 conjugation lcs", ad, x, y);
    }

    // quotient: Z4 -> Z2
    {
        auto quot = validate_homomorphism(z4, z2, {0, 1, 0, 1});
        AlphaData ad{quot, f_z4_two, f_z2_lcs};
        auto y = validate_scf_action(trivial_action(z4, z2), f_z4_two, f_z2_lcs);
        auto x = validate_scf_action(trivial_action(z2, z2), f_z2_lcs, f_z2_lcs);
        add("quot_Z4_to_Z2, Y=Z2 lcs, X=Z2 lcs", ad, x, y);
        auto x2 = validate_scf_action(neg(z2, z4, [](int e) { return e == 1; }), f_z2_lcs, f_z4_two);
        add("quot_Z4_to_Z2, Y=Z2 lcs, X=Z4 negation", ad, x2, y);
    }
    {
        std::vector<int> sgn(6);
        for (int e = 0; e < 6; ++e) sgn[static_cast<size_t>(e)] = s3->name(e).size() == 4 ? 1 : 0;
        auto sign_hom = validate_homomorphism(s3, z2, sgn);
        AlphaData ad{sign_hom, lcs_s3, f_z2_lcs};
        auto y = validate_scf_action(conjugation_action(s3), lcs_s3, lcs_s3);
        auto x = validate_scf_action(trivial_action(z2, z2), f_z2_lcs, f_z2_lcs);
        add("sign_S3_to_Z2, Y=S3 conjugation lcs, X=Z2 lcs", ad, x, y);
    }

    // deeper chains: three levels on Z8
    {
        auto z8 = cyclic_group(8);
        auto f8 = make_filtration(z8, {full_set(8), set_from(8, {0, 2, 4, 6}), set_from(8, {0, 4})});
        AlphaData ad{identity_hom(z8), f8, f8};
        auto y = validate_scf_action(trivial_action(z8, z4), f8, f_z4_two);
        auto x = validate_scf_action(trivial_action(z8, z8), f8, f8);
        add("id_Z8 three-level, Y=Z4 two-level, X=Z8", ad, x, y);
        auto y2 = validate_scf_action(neg(z8, z8, [](int e) { return e % 2 == 1; }), f8, f8);
        add("id_Z8 three-level, Y=Z8 negation, X=Z8", ad, x, y2);
    }

    // V4 with the coordinate swap and the diagonal filtration
    {
        std::vector<int> t(16);
        for (int e = 0; e < 4; ++e)
            for (int x = 0; x < 4; ++x) t[static_cast<size_t>(e) * 4 + x] = (e >= 2) ? ((x % 2) * 2 + x / 2) : x;
        auto swap_act = validate_group_action(v4, v4, std::move(t));
        auto f_diag = make_filtration(v4, {full_set(4), set_from(4, {0, 3})});
        AlphaData ad{identity_hom(v4), f_diag, f_diag};
        auto y = validate_scf_action(swap_act, f_diag, f_diag);
        auto x = validate_scf_action(trivial_action(v4, v4), f_diag,
                                     make_filtration(v4, {full_set(4), singleton(4, 0)}));
        add("id_V4 diagonal, Y=swap, X=trivial lcs", ad, x, y);
    }

    // rotation subgroup of D4: the transport tower genuinely iterates here
    {
        std::vector<int> incl(4);
        auto rot = subgroup_as_group(d4, generate_subgroup(d4, std::vector<int>{1}).members);
        for (int i = 0; i < 4; ++i) incl[static_cast<size_t>(i)] = rot.to_parent[static_cast<size_t>(i)];
        auto alpha = validate_homomorphism(rot.group, d4, incl);
        auto e_f = make_filtration(rot.group, {full_set(4), set_from(4, {0, 2}), singleton(4, 0)});
        AlphaData ad{alpha, e_f, lcs_d4};
        auto y = validate_scf_action(trivial_action(rot.group, z2), e_f, f_z2_lcs);
        auto x = validate_scf_action(conjugation_action(d4), lcs_d4, lcs_d4);
        add("incl_rot_in_D4 lcs, Y=Z2 lcs, X=D4 conjugation", ad, x, y);
    }

    // abelianization quotient D4 -> V4
    {
        std::vector<int> map(8);
        for (int e = 0; e < 2; ++e)
            for (int a = 0; a < 4; ++a) map[static_cast<size_t>(e * 4 + a)] = (a % 2) * 2 + e;
        auto ab = validate_homomorphism(d4, v4, map);
        auto f_v4 = make_filtration(v4, {full_set(4), singleton(4, 0)});
        AlphaData ad{ab, lcs_d4, f_v4};
        auto y = validate_scf_action(trivial_action(d4, z2), lcs_d4, f_z2_lcs);
        auto x = validate_scf_action(trivial_action(v4, v4), f_v4, f_v4);
        add("abelianization_D4_to_V4, Y=Z2 lcs, X=V4 lcs", ad, x, y);
    }

    // degenerate corner: everything over the trivial base
    {
        AlphaData ad{identity_hom(one), constant_filtration(one), constant_filtration(one)};
        auto y = validate_scf_action(trivial_action(one, z4), constant_filtration(one), f_z4_two);
        auto x = validate_scf_action(trivial_action(one, z2), constant_filtration(one), f_z2_lcs);
        add("id_Z1, Y=Z4 two-level, X=Z2 lcs", ad, x, y);
    }

    if (static_cast<int>(report.instances.size()) < min_instances) {
        InstanceRecord inst;
        inst.id = detail::instance_id(k++);
        inst.descriptor = "instance count";
        CheckRecord c;
        c.name = "enough_instances";
        c.pass = false;
        c.witness = "generated " + std::to_string(report.instances.size()) + " < " + std::to_string(min_instances);
        inst.checks.push_back(c);
        report.instances.push_back(std::move(inst));
    }
    (void)seed;
    report.wall_ms = detail::elapsed_ms(start);
    return report;
}

// ---------------------------------------------------------------------------
// criterion 5: currying adjunction over finite spaces
// ---------------------------------------------------------------------------

inline VerificationReport run_currying_suite(unsigned long long seed, const Budget& budget = {},
                                             int min_instances = 20) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "currying";
    report.seed = seed;
    report.budget = budget.describe();

    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    auto z4 = cyclic_group(4);
    auto v4 = klein_four();

    std::vector<std::pair<std::string, TopGroup>> bs;
    bs.emplace_back("Z1d", discrete_topgroup(trivial_group()));
    bs.emplace_back("Z2d", discrete_topgroup(z2));
    bs.emplace_back("Z2i", indiscrete_topgroup(z2));
    bs.emplace_back("Z3i", indiscrete_topgroup(z3));
    bs.emplace_back("Z4c", coset_topgroup(z4, set_from(4, {0, 2})));
    bs.emplace_back("V4c", coset_topgroup(v4, set_from(4, {0, 1})));

    std::vector<std::pair<std::string, FiniteTopology>> xs;
    xs.emplace_back("pt", discrete_topology(1));
    xs.emplace_back("disc2", discrete_topology(2));
    xs.emplace_back("indisc2", indiscrete_topology(2));
    xs.emplace_back("sierp", validate_topology(2, {empty_set(2), singleton(2, 0), full_set(2)}));

    std::vector<std::pair<std::string, FiniteTopology>> ys;
    ys.emplace_back("disc2", discrete_topology(2));
    ys.emplace_back("disc3", discrete_topology(3));
    ys.emplace_back("indisc3", indiscrete_topology(3));
    ys.emplace_back("sierp", validate_topology(2, {empty_set(2), singleton(2, 0), full_set(2)}));
    ys.emplace_back("chain3", validate_topology(3, {empty_set(3), singleton(3, 0), set_from(3, {0, 1}), full_set(3)}));

    int k = 0;
    for (const auto& [bn, b] : bs)
        for (const auto& [xn, x] : xs)
            for (const auto& [yn, y] : ys) {
                long worst = checked_pow(y.n, b.top.n * x.n, budget.map_enum);
                if (worst > budget.map_enum) continue;  // refuse oversized instances
                InstanceRecord inst;
                inst.id = detail::instance_id(k++);
                inst.descriptor = "B=" + bn + " X=" + xn + " Y=" + yn;
                inst.checks.push_back(detail::run_check("curry_bijection", [&](CheckRecord& c) {
                    auto r = curry_check(b, x, y, budget);
                    c.counts["product_side"] = r.product_side;
                    c.counts["function_side"] = r.function_side;
                    if (!r.bijection_verified) c.witness = "curry map is not a verified bijection";
                    return r.bijection_verified;
                }));
                report.instances.push_back(std::move(inst));
            }

    if (static_cast<int>(report.instances.size()) < min_instances) {
        InstanceRecord inst;
        inst.id = detail::instance_id(k++);
        inst.descriptor = "instance count";
        CheckRecord c;
        c.name = "enough_instances";
        c.pass = false;
        c.witness = "generated " + std::to_string(report.instances.size()) + " < " + std::to_string(min_instances);
        inst.checks.push_back(c);
        report.instances.push_back(std::move(inst));
    }
    (void)seed;
    report.wall_ms = detail::elapsed_ms(start);
    return report;
}

// ---------------------------------------------------------------------------
// criterion 6: topological co-induction adjunction
// ---------------------------------------------------------------------------

/// Continuous equivariant homomorphisms X -> target.
inline long count_continuous_equivariant(const TopGroup& x, const GroupAction& x_act, const TopGroup& target,
                                         const GroupAction& t_act, const Budget& budget) {
    auto homs = enumerate_homomorphisms(x.group, target.group, budget);
    long n = 0;
    for (const auto& h : homs)
        if (is_equivariant(h, x_act, t_act) && is_continuous(h.map, x.top, target.top)) ++n;
    return n;
}

inline InstanceRecord check_top_adjunction_instance(const std::string& id, const std::string& descriptor,
                                                    const TopGroup& b, const TopGroup& g, const GroupAction& act,
                                                    const Budget& budget) {
    InstanceRecord inst;
    inst.id = id;
    inst.descriptor = descriptor;

    TopTower tower = t_top_infinity(b, g, act);
    inst.checks.push_back(detail::run_check("tower_terminates_joint_limit", [&](CheckRecord& c) {
        c.counts["tower_levels"] = static_cast<long>(tower.levels.size());
        c.counts["iterations"] = tower.iterations;
        c.counts["limit_order"] = tower.limit.tg.group->order;
        if (!tower.limit_point.jointly_continuous) c.witness = "limit action is not jointly continuous";
        return tower.limit_point.jointly_continuous;
    }));

    // X-objects with jointly continuous B-actions: trivial actions on small
    // discrete groups plus the limit itself (its own counit).
    std::vector<std::tuple<std::string, TopGroup, GroupAction>> x_objects;
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    x_objects.emplace_back("Z2d_triv", discrete_topgroup(z2), trivial_action(b.group, z2));
    x_objects.emplace_back("Z3d_triv", discrete_topgroup(z3), trivial_action(b.group, z3));
    x_objects.emplace_back("limit", tower.limit.tg, tower.limit.action);

    for (const auto& [name, x, x_act] : x_objects) {
        const TopGroup& xg = x;
        const GroupAction& xa = x_act;
        inst.checks.push_back(detail::run_check("factorization_" + name, [&](CheckRecord& c) {
            validate_continuous_action(b, xg, xa, /*require_joint=*/true);
            auto homs = enumerate_homomorphisms(xg.group, g.group, budget);
            long into_g = 0, into_limit = 0;
            for (const auto& h : homs) {
                if (!is_equivariant(h, xa, act) || !is_continuous(h.map, xg.top, g.top)) continue;
                ++into_g;
                // factor through the limit: membership and continuity
                std::vector<int> re(static_cast<size_t>(xg.group->order));
                bool lands = true;
                for (int p = 0; p < xg.group->order && lands; ++p) {
                    int v = tower.limit.from_parent[static_cast<size_t>(h.at(p))];
                    if (v < 0)
                        lands = false;
                    else
                        re[static_cast<size_t>(p)] = v;
                }
                if (!lands) {
                    c.witness = "continuous equivariant map escapes the limit subgroup";
                    return false;
                }
                if (!is_continuous(re, xg.top, tower.limit.tg.top)) {
                    c.witness = "factored map is not continuous for the limit topology";
                    return false;
                }
            }
            into_limit = count_continuous_equivariant(xg, xa, tower.limit.tg, tower.limit.action, budget);
            c.counts["into_G"] = into_g;
            c.counts["into_limit"] = into_limit;
            if (into_g != into_limit) {
                c.witness = "hom-set cardinalities differ";
                return false;
            }
            return true;
        }));
    }
    return inst;
}

inline VerificationReport verify_top_adjunction(const TopGroup& b, const TopGroup& g, const GroupAction& act,
                                                const Budget& budget = {}) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "verify-top-adjunction";
    report.seed = 0;
    report.budget = budget.describe();
    report.instances.push_back(check_top_adjunction_instance("i000", "single instance", b, g, act, budget));
    report.wall_ms = detail::elapsed_ms(start);
    return report;
}

inline VerificationReport run_top_adjunction_suite(unsigned long long seed, const Budget& budget = {},
                                                   int min_instances = 15) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "top-adjunction";
    report.seed = seed;
    report.budget = budget.describe();

    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    auto z4 = cyclic_group(4);
    auto z5 = cyclic_group(5);
    auto z6 = cyclic_group(6);
    auto v4 = klein_four();
    auto s3 = symmetric_group(3);

    auto negation = [&](const GroupRef& b, const GroupRef& g, auto parity) {
        std::vector<int> t(static_cast<size_t>(b->order) * g->order);
        for (int e = 0; e < b->order; ++e)
            for (int x = 0; x < g->order; ++x)
                t[static_cast<size_t>(e) * g->order + x] = parity(e) ? (g->order - x) % g->order : x;
        return validate_group_action(b, g, std::move(t));
    };
    auto swap_v4 = [&](const GroupRef& b, auto parity) {
        // V4 = Z2 x Z2 with indices (a,b) -> 2a + b; swap coordinates
        std::vector<int> t(static_cast<size_t>(b->order) * 4);
        for (int e = 0; e < b->order; ++e)
            for (int x = 0; x < 4; ++x) t[static_cast<size_t>(e) * 4 + x] = parity(e) ? ((x % 2) * 2 + x / 2) : x;
        return validate_group_action(b, v4, std::move(t));
    };

    int k = 0;
    auto add = [&](const std::string& desc, const TopGroup& b, const TopGroup& g, const GroupAction& act) {
        report.instances.push_back(check_top_adjunction_instance(detail::instance_id(k++), desc, b, g, act, budget));
    };

    int a3_gen = -1;
    for (int i = 0; i < 6; ++i)
        if (s3->name(i).size() == 5) {
            a3_gen = i;
            break;
        }
    auto a3 = generate_subgroup(s3, std::vector<int>{a3_gen}).members;

    // non-discrete B throughout the first block
    add("B=Z2 indiscrete, G=Z4 discrete, negation", indiscrete_topgroup(z2), discrete_topgroup(z4),
        negation(z2, z4, [](int e) { return e == 1; }));
    add("B=Z2 indiscrete, G=Z4 coset{0,2}, negation", indiscrete_topgroup(z2),
        coset_topgroup(z4, set_from(4, {0, 2})), negation(z2, z4, [](int e) { return e == 1; }));
    add("B=Z2 indiscrete, G=V4 discrete, swap", indiscrete_topgroup(z2), discrete_topgroup(v4),
        swap_v4(z2, [](int e) { return e == 1; }));
    add("B=Z2 indiscrete, G=Z6 discrete, negation", indiscrete_topgroup(z2), discrete_topgroup(z6),
        negation(z2, z6, [](int e) { return e == 1; }));
    add("B=Z4 coset{0,2}, G=Z4 discrete, negation via parity", coset_topgroup(z4, set_from(4, {0, 2})),
        discrete_topgroup(z4), negation(z4, z4, [](int e) { return e % 2 == 1; }));
    add("B=Z4 coset{0,2}, G=Z3 discrete, negation via parity", coset_topgroup(z4, set_from(4, {0, 2})),
        discrete_topgroup(z3), negation(z4, z3, [](int e) { return e % 2 == 1; }));
    add("B=S3 coset A3, G=S3 discrete, conjugation", coset_topgroup(s3, a3), discrete_topgroup(s3),
        conjugation_action(s3));
    add("B=S3 coset A3, G=Z3 discrete, sign negation", coset_topgroup(s3, a3), discrete_topgroup(z3),
        [&] {
            std::vector<int> t(18);
            for (int e = 0; e < 6; ++e) {
                bool odd = s3->name(e).size() == 4;
                for (int x = 0; x < 3; ++x) t[static_cast<size_t>(e) * 3 + x] = odd ? (3 - x) % 3 : x;
            }
            return validate_group_action(s3, z3, std::move(t));
        }());
    add("B=S3 indiscrete, G=S3 discrete, conjugation", indiscrete_topgroup(s3), discrete_topgroup(s3),
        conjugation_action(s3));
    add("B=V4 coset, G=Z3 discrete, partial negation", coset_topgroup(v4, set_from(4, {0, 1})),
        discrete_topgroup(z3), negation(v4, z3, [](int e) { return e >= 2; }));

    // discrete and mixed control instances
    add("B=Z2 discrete, G=Z4 coset{0,2}, negation", discrete_topgroup(z2), coset_topgroup(z4, set_from(4, {0, 2})),
        negation(z2, z4, [](int e) { return e == 1; }));
    add("B=Z2 discrete, G=Z4 discrete, negation", discrete_topgroup(z2), discrete_topgroup(z4),
        negation(z2, z4, [](int e) { return e == 1; }));
    add("B=Z2 discrete, G=S3 indiscrete, trivial", discrete_topgroup(z2), indiscrete_topgroup(s3),
        trivial_action(z2, s3));
    add("B=Z3 indiscrete, G=Z5 discrete, trivial", indiscrete_topgroup(z3), discrete_topgroup(z5),
        trivial_action(z3, z5));
    add("B=Z6 coset{0,3}, G=Z6 discrete, negation via parity", coset_topgroup(z6, set_from(6, {0, 3})),
        discrete_topgroup(z6), negation(z6, z6, [](int e) { return e % 2 == 1; }));
    add("B=Z2 indiscrete, G=Z2 discrete, trivial", indiscrete_topgroup(z2), discrete_topgroup(z2),
        trivial_action(z2, z2));

    if (static_cast<int>(report.instances.size()) < min_instances) {
        InstanceRecord inst;
        inst.id = detail::instance_id(k++);
        inst.descriptor = "instance count";
        CheckRecord c;
        c.name = "enough_instances";
        c.pass = false;
        c.witness = "generated " + std::to_string(report.instances.size()) + " < " + std::to_string(min_instances);
        inst.checks.push_back(c);
        report.instances.push_back(std::move(inst));
    }
    (void)seed;
    report.wall_ms = detail::elapsed_ms(start);
    return report;
}

// ---------------------------------------------------------------------------
// criterion 7: ground-truth lower central series regressions
// ---------------------------------------------------------------------------

inline VerificationReport run_ground_truth_suite() {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "ground-truth";
    report.seed = 0;
    report.budget = Budget{}.describe();

    // independent commutator-closure oracle, written directly against the
    // multiplication table (no subgroup machinery shared with the library path)
    auto oracle_lcs_orders = [](const FiniteGroup& g) {
        std::vector<int> orders;
        std::vector<char> cur(static_cast<size_t>(g.order), 1);
        while (true) {
            orders.push_back(static_cast<int>(std::count(cur.begin(), cur.end(), 1)));
            // commutators [x, y] with x in G, y in cur
            std::vector<char> next(static_cast<size_t>(g.order), 0);
            next[static_cast<size_t>(g.identity)] = 1;
            for (int x = 0; x < g.order; ++x)
                for (int y = 0; y < g.order; ++y)
                    if (cur[static_cast<size_t>(y)]) next[static_cast<size_t>(g.commutator(x, y))] = 1;
            // close under multiplication
            bool grew = true;
            while (grew) {
                grew = false;
                for (int a = 0; a < g.order; ++a)
                    for (int b = 0; b < g.order; ++b)
                        if (next[static_cast<size_t>(a)] && next[static_cast<size_t>(b)] &&
                            !next[static_cast<size_t>(g.at(a, b))]) {
                            next[static_cast<size_t>(g.at(a, b))] = 1;
                            grew = true;
                        }
            }
            if (next == cur) break;
            cur = next;
        }
        return orders;
    };

    int k = 0;
    auto add = [&](const std::string& name, const GroupRef& g, const std::vector<int>& expect) {
        InstanceRecord inst;
        inst.id = detail::instance_id(k++);
        inst.descriptor = "lcs(" + name + ")";
        inst.checks.push_back(detail::run_check("orders_match", [&](CheckRecord& c) {
            auto f = lower_central_series(g);
            auto got = f.level_orders();
            auto oracle = oracle_lcs_orders(*g);
            c.counts["levels"] = static_cast<long>(got.size());
            if (got != expect) {
                c.witness = "library orders differ from the frozen expectation";
                return false;
            }
            if (got != oracle) {
                c.witness = "library orders differ from the commutator-closure oracle";
                return false;
            }
            return true;
        }));
        report.instances.push_back(std::move(inst));
    };

    add("D4", dihedral_group(4), {8, 2, 1});
    add("Q8", quaternion_group(), {8, 2, 1});
    add("S3", symmetric_group(3), {6, 3});

    report.wall_ms = detail::elapsed_ms(start);
    return report;
}

// ---------------------------------------------------------------------------
// suite registry (used by the CLI and the acceptance binary)
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"transport-step", "maximality-oracle", "plain-coinduction",
                                                   "scf-adjunction",       "currying",          "top-adjunction",
                                                   "ground-truth"};
    return names;
}

inline VerificationReport run_suite(const std::string& name, unsigned long long seed, const Budget& budget) {
    if (name == "transport-step") return run_transportation_suite(seed, budget);
    if (name == "maximality-oracle") return run_maximality_suite(seed, budget);
    if (name == "plain-coinduction") return run_plain_coinduction_suite(seed, budget);
    if (name == "scf-adjunction") return run_scf_adjunction_suite(seed, budget);
    if (name == "currying") return run_currying_suite(seed, budget);
    if (name == "top-adjunction") return run_top_adjunction_suite(seed, budget);
    if (name == "ground-truth") return run_ground_truth_suite();
    throw Error(ErrorKind::usage, "unknown suite: " + name);
}

}  // namespace coind
