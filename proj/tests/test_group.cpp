#include <catch_amalgamated.hpp>

#include "coind/catalog.hpp"
#include "coind/homomorphism.hpp"
#include "coind/subgroup.hpp"

using namespace coind;

namespace {

int name_index(const FiniteGroup& g, const std::string& nm) {
    for (int i = 0; i < g.order; ++i)
        if (g.name(i) == nm) return i;
    FAIL("no element named " + nm);
    return -1;
}

}  // namespace

TEST_CASE("validate_group certifies and rejects", "[group]") {
    SECTION("trivial one-element table") {
        auto g = validate_group(1, {"1"}, {0});
        REQUIRE(g->order == 1);
        REQUIRE(g->identity == 0);
    }
    SECTION("Z4 Cayley table is a group") {
        auto g = cyclic_group(4);
        REQUIRE(g->order == 4);
        REQUIRE(g->inverse(1) == 3);
        REQUIRE(g->is_abelian());
    }
    SECTION("swapped entry breaks associativity with a witness triple") {
        std::vector<int> mul = {0, 1, 2, 3, 1, 3, 2, 0, 2, 3, 0, 1, 3, 0, 1, 2};
        // row 1 had (1,2,3,0); entries 1*1 and 1*2 swapped above
        try {
            validate_group(4, {"0", "1", "2", "3"}, mul, 0);
            FAIL("expected rejection");
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::validation);
            REQUIRE(std::string(e.what()).find("witness triple") != std::string::npos);
        }
    }
    SECTION("malformed table: wrong size") {
        REQUIRE_THROWS_AS(validate_group(2, {"a", "b"}, {0, 1, 1}), Error);
    }
    SECTION("identity defaults to the element named 1") {
        // Z2 with identity listed second
        auto g = validate_group(2, {"x", "1"}, {1, 0, 0, 1});
        REQUIRE(g->identity == 1);
    }
}

TEST_CASE("generate_subgroup closure", "[group]") {
    auto d4 = dihedral_group(4);
    SECTION("empty seed gives the trivial subgroup") {
        auto s = generate_subgroup(d4, std::vector<int>{});
        REQUIRE(s.size() == 1);
        REQUIRE(s.contains(d4->identity));
    }
    SECTION("rotation generates the cyclic subgroup of order 4") {
        int r = name_index(*d4, "r");
        auto s = generate_subgroup(d4, std::vector<int>{r});
        REQUIRE(s.size() == 4);
        REQUIRE(s.contains(name_index(*d4, "r2")));
        REQUIRE(s.contains(name_index(*d4, "r3")));
        REQUIRE_FALSE(s.contains(name_index(*d4, "s")));
    }
    SECTION("all elements generate the whole group") {
        auto s = generate_subgroup(d4, full_set(d4->order));
        REQUIRE(s.size() == d4->order);
    }
    SECTION("idempotent and monotone in the seed") {
        for (int x = 0; x < d4->order; ++x)
            for (int y = 0; y < d4->order; ++y) {
                ElemSet small = singleton(d4->order, x);
                ElemSet big = small;
                big.set(static_cast<size_t>(y));
                auto s1 = generate_subgroup(d4, small);
                auto s2 = generate_subgroup(d4, big);
                REQUIRE(s1.members.is_subset_of(s2.members));
                REQUIRE(generate_subgroup(d4, s1.members).members == s1.members);
            }
    }
    SECTION("out-of-range seed index is rejected") {
        REQUIRE_THROWS_AS(generate_subgroup(d4, std::vector<int>{9}), Error);
    }
}

TEST_CASE("commutator_subgroup", "[group]") {
    auto d4 = dihedral_group(4);
    SECTION("[D4, D4] = {1, r2}") {
        auto c = commutator_subgroup(d4, full_subgroup(d4), full_subgroup(d4));
        REQUIRE(c.size() == 2);
        REQUIRE(c.contains(d4->identity));
        REQUIRE(c.contains(name_index(*d4, "r2")));
    }
    SECTION("trivial argument gives the trivial subgroup") {
        auto c = commutator_subgroup(d4, trivial_subgroup(d4), full_subgroup(d4));
        REQUIRE(c.size() == 1);
    }
    SECTION("abelian groups have trivial commutator subgroup") {
        auto z6 = cyclic_group(6);
        auto c = commutator_subgroup(z6, full_subgroup(z6), full_subgroup(z6));
        REQUIRE(c.size() == 1);
    }
    SECTION("symmetric in its arguments") {
        auto s4 = symmetric_group(4);
        auto a = generate_subgroup(s4, std::vector<int>{1});
        auto b = generate_subgroup(s4, std::vector<int>{5});
        REQUIRE(commutator_subgroup(s4, a, b).members == commutator_subgroup(s4, b, a).members);
    }
    SECTION("mismatched parents are rejected") {
        auto z2 = cyclic_group(2);
        REQUIRE_THROWS_AS(commutator_subgroup(d4, full_subgroup(d4), full_subgroup(z2)), Error);
    }
}

TEST_CASE("normal_closure", "[group]") {
    auto s3 = symmetric_group(3);
    SECTION("identity seed stays trivial") {
        auto n = normal_closure(s3, std::vector<int>{s3->identity});
        REQUIRE(n.size() == 1);
    }
    SECTION("a transposition in S3 closes to the whole group") {
        int t = name_index(*s3, "(01)");
        auto n = normal_closure(s3, std::vector<int>{t});
        REQUIRE(n.size() == 6);
    }
    SECTION("abelian: normal closure equals generated subgroup") {
        auto z8 = cyclic_group(8);
        for (int x = 0; x < 8; ++x) {
            auto n = normal_closure(z8, std::vector<int>{x});
            auto s = generate_subgroup(z8, std::vector<int>{x});
            REQUIRE(n.members == s.members);
        }
    }
    SECTION("contains the generated subgroup in general") {
        for (int x = 0; x < s3->order; ++x) {
            auto n = normal_closure(s3, std::vector<int>{x});
            auto s = generate_subgroup(s3, std::vector<int>{x});
            REQUIRE(s.members.is_subset_of(n.members));
            REQUIRE(is_normal_set(*s3, n.members));
        }
    }
}

TEST_CASE("enumerate_homomorphisms", "[group]") {
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    auto z4 = cyclic_group(4);
    SECTION("exactly one map into the trivial group") {
        auto homs = enumerate_homomorphisms(dihedral_group(4), trivial_group());
        REQUIRE(homs.size() == 1);
    }
    SECTION("|Hom(Z2, Z2)| = 2") { REQUIRE(enumerate_homomorphisms(z2, z2).size() == 2); }
    SECTION("|Hom(Z2, Z3)| = 1") { REQUIRE(enumerate_homomorphisms(z2, z3).size() == 1); }
    SECTION("agrees with the brute-force oracle for orders <= 4") {
        std::vector<GroupRef> gs = {trivial_group(), z2, z3, z4, klein_four()};
        for (const auto& g : gs)
            for (const auto& h : gs) {
                auto fast = enumerate_homomorphisms(g, h);
                auto brute = enumerate_homomorphisms_brute(g, h);
                REQUIRE(fast.size() == brute.size());
                for (size_t i = 0; i < fast.size(); ++i) REQUIRE(fast[i].map == brute[i].map);
            }
    }
    SECTION("nonabelian source: Hom(S3, Z6) counts match brute force") {
        auto s3 = symmetric_group(3);
        auto z6 = cyclic_group(6);
        auto fast = enumerate_homomorphisms(s3, z6);
        auto brute = enumerate_homomorphisms_brute(s3, z6, [] {
            Budget b;
            b.map_enum = 50'000'000;
            return b;
        }());
        REQUIRE(fast.size() == brute.size());
    }
    SECTION("budget exceeded refuses outright") {
        Budget tight;
        tight.hom_source_order = 4;
        REQUIRE_THROWS_AS(enumerate_homomorphisms(dihedral_group(4), z2, tight), Error);
    }
}

TEST_CASE("is_automorphism", "[group]") {
    auto z4 = cyclic_group(4);
    SECTION("identity map is an automorphism") {
        REQUIRE(is_automorphism(*z4, identity_hom(z4)));
    }
    SECTION("x -> x^2 on Z4 is a homomorphism but not an automorphism") {
        auto f = validate_homomorphism(z4, z4, {0, 2, 0, 2});
        REQUIRE_FALSE(is_automorphism(*z4, f));
    }
    SECTION("conjugation is an automorphism") {
        auto d4 = dihedral_group(4);
        for (int g = 0; g < d4->order; ++g) {
            std::vector<int> map(8);
            for (int x = 0; x < 8; ++x) map[static_cast<size_t>(x)] = d4->conjugate(g, x);
            auto f = validate_homomorphism(d4, d4, map);
            REQUIRE(is_automorphism(*d4, f));
        }
    }
}

TEST_CASE("catalog groups all certify", "[group]") {
    for (const auto& entry : small_group_catalog()) {
        REQUIRE(entry.group->order >= 1);
        REQUIRE(is_subgroup_set(*entry.group, full_set(entry.group->order)));
    }
    REQUIRE(quaternion_group()->order == 8);
    REQUIRE_FALSE(quaternion_group()->is_abelian());
    REQUIRE(symmetric_group(4)->order == 24);
}

TEST_CASE("subgroup_as_group reindexing", "[group]") {
    auto d4 = dihedral_group(4);
    auto rot = generate_subgroup(d4, std::vector<int>{name_index(*d4, "r")});
    auto sub = subgroup_as_group(d4, rot.members);
    REQUIRE(sub.group->order == 4);
    REQUIRE(sub.group->is_abelian());
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            int parent_prod = d4->at(sub.to_parent[static_cast<size_t>(a)], sub.to_parent[static_cast<size_t>(b)]);
            REQUIRE(sub.to_parent[static_cast<size_t>(sub.group->at(a, b))] == parent_prod);
        }
}
