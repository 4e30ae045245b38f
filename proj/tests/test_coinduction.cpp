#include <catch_amalgamated.hpp>

#include "coind/catalog.hpp"
#include "coind/coinduction.hpp"

using namespace coind;

namespace {

GroupAction negation_on_z4() {
    auto z2 = cyclic_group(2);
    auto z4 = cyclic_group(4);
    std::vector<int> table = {0, 1, 2, 3, 0, 3, 2, 1};
    return validate_group_action(z2, z4, std::move(table));
}

// Brute-force oracle: filter all |Y|^|B| maps for equivariance.
std::vector<std::vector<int>> brute_equivariant_maps(const Homomorphism& alpha, const GroupAction& e_action) {
    std::vector<std::vector<int>> out;
    const auto& b = *alpha.target;
    const auto& y = *e_action.target;
    for_each_tuple(b.order, y.order, [&](const std::vector<int>& u) {
        for (int e = 0; e < alpha.source->order; ++e)
            for (int x = 0; x < b.order; ++x)
                if (u[static_cast<size_t>(b.at(alpha.at(e), x))] != e_action.at(e, u[static_cast<size_t>(x)])) return;
        out.push_back(u);
    });
    return out;
}

}  // namespace

TEST_CASE("equivariant_maps", "[coinduction]") {
    SECTION("trivial E: all maps B -> Y") {
        auto one = trivial_group();
        auto z2 = cyclic_group(2);
        auto z4 = cyclic_group(4);
        auto emg = equivariant_maps(trivial_hom(one, z2), trivial_action(one, z4));
        REQUIRE(emg.carrier->order == 16);  // |Y|^|B| = 4^2
        REQUIRE(emg.carrier->is_abelian());
    }
    SECTION("alpha = identity: evaluation at 1 is an isomorphism onto Y") {
        auto z4 = cyclic_group(4);
        std::vector<int> table(16);
        for (int b = 0; b < 4; ++b)
            for (int x = 0; x < 4; ++x) table[static_cast<size_t>(b) * 4 + x] = (b % 2) ? (4 - x) % 4 : x;
        auto act = validate_group_action(z4, z4, table);
        auto emg = equivariant_maps(identity_hom(z4), act);
        REQUIRE(emg.carrier->order == 4);
        // eval at 1 is bijective and multiplicative
        std::vector<int> eval1(4);
        for (int u = 0; u < 4; ++u) eval1[static_cast<size_t>(u)] = emg.eval(u, z4->identity);
        std::sort(eval1.begin(), eval1.end());
        REQUIRE(eval1 == std::vector<int>{0, 1, 2, 3});
        for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v)
                REQUIRE(emg.eval(emg.carrier->at(u, v), z4->identity) ==
                        z4->at(emg.eval(u, z4->identity), emg.eval(v, z4->identity)));
    }
    SECTION("E = B = Z2 with alpha = id and trivial action: constants only") {
        auto z2 = cyclic_group(2);
        auto emg = equivariant_maps(identity_hom(z2), trivial_action(z2, z2));
        REQUIRE(emg.carrier->order == 2);
        for (int u = 0; u < 2; ++u) REQUIRE(emg.eval(u, 0) == emg.eval(u, 1));
    }
    SECTION("agrees with the brute-force filter, including a non-injective alpha") {
        auto z4 = cyclic_group(4);
        auto z2 = cyclic_group(2);
        // alpha: Z4 ->> Z2, Y = Z2 with the trivial Z4-action
        auto alpha = validate_homomorphism(z4, z2, {0, 1, 0, 1});
        auto act = trivial_action(z4, z2);
        auto emg = equivariant_maps(alpha, act);
        auto brute = brute_equivariant_maps(alpha, act);
        REQUIRE(emg.values == brute);
        // u determined on one coset rep of alpha(Z4) = Z2 in Z2: |Fix|^1 = 2
        REQUIRE(emg.carrier->order == 2);
    }
    SECTION("transversal route agrees with brute force when forced") {
        auto one = trivial_group();
        auto z2 = cyclic_group(2);
        auto z3 = cyclic_group(3);
        auto alpha = trivial_hom(one, z2);
        auto act = trivial_action(one, z3);
        Budget tiny;
        tiny.map_enum = 2;  // forces the transversal path (3^2 = 9 > 2)
        auto via_transversal = equivariant_maps(alpha, act, tiny);
        auto brute = brute_equivariant_maps(alpha, act);
        REQUIRE(via_transversal.values == brute);
    }
    SECTION("carrier budget refusal") {
        auto one = trivial_group();
        auto z8 = cyclic_group(8);
        Budget tight;
        tight.carrier_order = 100;
        REQUIRE_THROWS_AS(equivariant_maps(trivial_hom(one, z8), trivial_action(one, z8), tight), Error);
    }
}

TEST_CASE("t_step", "[coinduction]") {
    SECTION("trivial action: t is the identity on filtrations") {
        auto d4 = dihedral_group(4);
        auto z2 = cyclic_group(2);
        auto lcs = lower_central_series(d4);
        auto t = t_step(constant_filtration(z2), lcs, trivial_action(z2, d4));
        REQUIRE(same_filtration(t, lcs));
    }
    SECTION("already-certified action: t fixes the filtration") {
        auto d4 = dihedral_group(4);
        auto lcs = lower_central_series(d4);
        validate_scf_action(conjugation_action(d4), lcs, lcs);
        auto t = t_step(lcs, lcs, conjugation_action(d4));
        REQUIRE(same_filtration(t, lcs));
    }
    SECTION("Z2 negation on Z4: worked example") {
        auto a = negation_on_z4();
        auto bf = constant_filtration(a.actor);
        auto gf = make_filtration(a.target, {full_set(4), set_from(4, {0, 2}), singleton(4, 0)});
        auto t = t_step(bf, gf, a);
        // t_1 = {g in Z4 : -2g in G_{1+j} for all j} = {0,2}
        REQUIRE(t.level(1) == set_from(4, {0, 2}));
        // t_2 = {g in {0,2} : -2g = 0} = {0,2} (2*2 = 0 mod 4), t_3 = {0}
        REQUIRE(t.level(2) == set_from(4, {0, 2}));
        REQUIRE(t.level(3) == singleton(4, 0));
        REQUIRE(t.length() == 3);
    }
    SECTION("monotone in the target filtration") {
        auto a = negation_on_z4();
        auto bf = constant_filtration(a.actor);
        auto big = make_filtration(a.target, {full_set(4), set_from(4, {0, 2}), singleton(4, 0)});
        auto small = make_filtration(a.target, {set_from(4, {0, 2}), set_from(4, {0, 2}), singleton(4, 0)});
        REQUIRE(filtration_subset(small, big));
        auto t_small = t_step(bf, small, a);
        auto t_big = t_step(bf, big, a);
        REQUIRE(filtration_subset(t_small, t_big));
    }
    SECTION("non-scf target filtration is rejected") {
        auto s3 = symmetric_group(3);
        auto z2 = cyclic_group(2);
        auto bad = make_filtration(s3, {full_set(6), full_set(6), singleton(6, 0)});
        REQUIRE_THROWS_AS(t_step(constant_filtration(z2), bad, trivial_action(z2, s3)), Error);
    }
}

TEST_CASE("t_infinity", "[coinduction]") {
    SECTION("certified input stabilizes at once: tower of length 1") {
        auto d4 = dihedral_group(4);
        auto lcs = lower_central_series(d4);
        auto tower = t_infinity(lcs, lcs, conjugation_action(d4));
        REQUIRE(tower.levels.size() == 1);
        REQUIRE(same_filtration(tower.limit, lcs));
    }
    SECTION("Z2 negation on Z4 stabilizes at [{0,2},{0,2},{0}]") {
        auto a = negation_on_z4();
        auto bf = constant_filtration(a.actor);
        auto gf = make_filtration(a.target, {full_set(4), set_from(4, {0, 2}), singleton(4, 0)});
        auto tower = t_infinity(bf, gf, a);
        REQUIRE(tower.limit.level(1) == set_from(4, {0, 2}));
        REQUIRE(tower.limit.level(2) == set_from(4, {0, 2}));
        REQUIRE(tower.limit.level(3) == singleton(4, 0));
        // the limit is a fixed point
        auto again = t_step(bf, tower.limit, a);
        REQUIRE(same_filtration(again, tower.limit));
    }
    SECTION("limit contains every sub-filtration carrying a certified action") {
        auto a = negation_on_z4();
        auto bf = constant_filtration(a.actor);
        auto gf = make_filtration(a.target, {full_set(4), set_from(4, {0, 2}), singleton(4, 0)});
        auto tower = t_infinity(bf, gf, a);
        // [{0,2},{0}] is a valid point below G_* but strictly smaller than the limit
        auto smaller = make_filtration(a.target, {set_from(4, {0, 2}), singleton(4, 0)});
        REQUIRE_NOTHROW(validate_scf_action(a, bf, smaller));
        REQUIRE(filtration_subset(smaller, tower.limit));
        REQUIRE_FALSE(same_filtration(smaller, tower.limit));
    }
}

TEST_CASE("coinduce", "[coinduction]") {
    SECTION("alpha = id: the point is isomorphic to Y_* via evaluation at 1") {
        auto z4 = cyclic_group(4);
        std::vector<int> table(16);
        for (int b = 0; b < 4; ++b)
            for (int x = 0; x < 4; ++x) table[static_cast<size_t>(b) * 4 + x] = (b % 2) ? (4 - x) % 4 : x;
        auto yf = make_filtration(z4, {full_set(4), set_from(4, {0, 2})});
        auto y_point = validate_scf_action(validate_group_action(z4, z4, table), constant_filtration(z4), yf);
        auto cp = coinduce(identity_hom(z4), constant_filtration(z4), constant_filtration(z4), y_point);
        REQUIRE(cp.point_group->order == 4);
        // evaluation at 1 respects filtration levels
        for (int i = 1; i <= cp.point_filtration.length(); ++i) {
            ElemSet image = empty_set(4);
            for (auto u = cp.point_filtration.level(i).find_first(); u != ElemSet::npos;
                 u = cp.point_filtration.level(i).find_next(u))
                image.set(static_cast<size_t>(cp.emg.eval(cp.to_carrier[static_cast<size_t>(u)], z4->identity)));
            REQUIRE(image == yf.level(i));
        }
    }
    SECTION("trivial Y gives the trivial point") {
        auto z2 = cyclic_group(2);
        auto one = trivial_group();
        auto y_point = validate_scf_action(trivial_action(z2, one), constant_filtration(z2), constant_filtration(one));
        auto cp = coinduce(identity_hom(z2), constant_filtration(z2), constant_filtration(z2), y_point);
        REQUIRE(cp.point_group->order == 1);
    }
    SECTION("E trivial, B = Z2, Y = Z2: carrier Z2 x Z2 with the swap action") {
        auto one = trivial_group();
        auto z2 = cyclic_group(2);
        auto y_point =
            validate_scf_action(trivial_action(one, z2), constant_filtration(one), constant_filtration(z2));
        auto cp = coinduce(trivial_hom(one, z2), constant_filtration(one), constant_filtration(z2), y_point);
        REQUIRE(cp.emg.carrier->order == 4);
        REQUIRE(cp.tower.levels.size() == 1);  // the whole carrier already works
        REQUIRE(cp.point_group->order == 4);
        // the nontrivial b acts by swapping coordinates: (b.u)(x) = u(x+1)
        int b = 1;
        for (int u = 0; u < 4; ++u) {
            int moved = cp.emg.b_action.at(b, u);
            REQUIRE(cp.emg.eval(moved, 0) == cp.emg.eval(u, 1));
            REQUIRE(cp.emg.eval(moved, 1) == cp.emg.eval(u, 0));
        }
    }
}

TEST_CASE("transposes", "[coinduction]") {
    // E = Z2 included in B = Z4 by doubling; Y = Z2 trivial action; X = Z4 trivial point
    auto z2 = cyclic_group(2);
    auto z4 = cyclic_group(4);
    auto alpha = validate_homomorphism(z2, z4, {0, 2});
    auto ef = constant_filtration(z2);
    auto bf = constant_filtration(z4);
    auto y_point = validate_scf_action(trivial_action(z2, z2), ef, constant_filtration(z2));
    auto cp = coinduce(alpha, ef, bf, y_point);

    auto x_point = validate_scf_action(trivial_action(z4, z4), bf, constant_filtration(z4));

    // LHS: E-equivariant filtration-preserving homs X -> Y (E acts trivially here)
    auto lhs = enumerate_homomorphisms(z4, z2);
    SECTION("round trips are the identity both ways") {
        for (const auto& f : lhs) {
            auto fwd = transpose_forward(f, x_point, cp);
            auto back = transpose_backward(fwd.hom, x_point, cp);
            REQUIRE(back.hom.map == f.map);
        }
        auto rhs =
            enumerate_equivariant_morphisms(x_point.base, cp.point_action, x_point.target_f, cp.point_filtration);
        for (const auto& gmor : rhs) {
            auto back = transpose_backward(gmor.hom, x_point, cp);
            auto fwd = transpose_forward(back.hom, x_point, cp);
            REQUIRE(fwd.hom.map == gmor.hom.map);
        }
        REQUIRE(lhs.size() == rhs.size());
    }
    SECTION("trivial morphism transposes to the trivial morphism") {
        auto fwd = transpose_forward(trivial_hom(z4, z2), x_point, cp);
        REQUIRE(fwd.hom.map == trivial_hom(z4, cp.point_group).map);
    }
    SECTION("alpha = id: evaluation at 1 recovers f") {
        auto y2 = validate_scf_action(trivial_action(z4, z4), bf, constant_filtration(z4));
        auto cp2 = coinduce(identity_hom(z4), bf, bf, y2);
        for (const auto& f : enumerate_homomorphisms(z4, z4)) {
            auto fwd = transpose_forward(f, x_point, cp2);
            for (int x = 0; x < 4; ++x)
                REQUIRE(cp2.emg.eval(cp2.to_carrier[static_cast<size_t>(fwd.hom.at(x))], z4->identity) == f.at(x));
        }
    }
}
