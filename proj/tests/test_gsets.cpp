#include <globalk/gset.hpp>

#include <catch_amalgamated.hpp>

#include <random>

using namespace globalk;

namespace {
Subgroup subgroup_of_size(const Group& G, int size) {
    for (auto& H : all_subgroups(G))
        if (H.size() == size) return H;
    throw Error("no subgroup of that size");
}
} // namespace

TEST_CASE("orbits and stabilizers") {
    auto G = symmetric_group(3);
    SECTION("empty G-set has no orbits") {
        CHECK(orbits_and_stabilizers(G, empty_gset(G)).empty());
    }
    SECTION("regular C2-set: one orbit, trivial stabilizer") {
        auto C2 = cyclic_group(2);
        auto od = orbits_and_stabilizers(C2, regular_gset(C2));
        REQUIRE(od.size() == 1);
        CHECK(od[0].stabilizer == trivial_subgroup(C2));
    }
    SECTION("natural S3-set: one orbit, stabilizer of order 2") {
        // S3 on 3 points = cosets of a C2
        auto X = coset_gset(G, subgroup_of_size(G, 2));
        auto od = orbits_and_stabilizers(G, X);
        REQUIRE(od.size() == 1);
        CHECK(od[0].stabilizer.size() == 2);
    }
}

TEST_CASE("decompose") {
    auto C2 = cyclic_group(2);
    auto sc = conjugacy_classes_of_subgroups(C2);
    auto swap_plus_fixed = disjoint_union(C2, regular_gset(C2), trivial_gset(C2, 1));

    SECTION("one swap plus one fixed point") {
        auto cl = decompose(C2, sc, swap_plus_fixed);
        REQUIRE(cl.mult.size() == 2);
        CHECK(cl.mult.at(sc.class_index(trivial_subgroup(C2))) == 1);
        CHECK(cl.mult.at(sc.class_index(full_subgroup(C2))) == 1);
    }
    SECTION("X + X doubles multiplicities") {
        auto one = decompose(C2, sc, swap_plus_fixed);
        auto two = decompose(C2, sc, disjoint_union(C2, swap_plus_fixed, swap_plus_fixed));
        for (auto& [c, k] : one.mult) CHECK(two.mult.at(c) == 2 * k);
    }
    SECTION("transitive G/H is the unit vector at (H)") {
        auto G = dihedral_group(4);
        auto scg = conjugacy_classes_of_subgroups(G);
        for (int c = 0; c < scg.num_classes(); ++c) {
            auto cl = decompose(G, scg, coset_gset(G, scg.reps[c]));
            REQUIRE(cl.mult.size() == 1);
            CHECK(cl.mult.at(c) == 1);
        }
    }
}

TEST_CASE("decompose is a complete isomorphism invariant under shuffles") {
    std::mt19937 rng(20260810);
    for (auto G : {symmetric_group(3), dihedral_group(4), cyclic_group(6)}) {
        auto sc = conjugacy_classes_of_subgroups(G);
        auto X = disjoint_union(
            G, disjoint_union(G, coset_gset(G, sc.reps[1]), trivial_gset(G, 2)), regular_gset(G));
        auto base = decompose(G, sc, X);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<int> perm(X.points);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(decompose(G, sc, shuffle_points(G, X, perm)) == base);
        }
        // distinct classes never collide
        auto Y = disjoint_union(G, X, trivial_gset(G, 1));
        CHECK_FALSE(decompose(G, sc, Y) == base);
    }
}

TEST_CASE("marks") {
    auto G = dihedral_group(4);
    auto sc = conjugacy_classes_of_subgroups(G);
    SECTION("marks of G/G are 1 for every H") {
        auto X = coset_gset(G, full_subgroup(G));
        for (auto& H : all_subgroups(G)) CHECK(marks(G, X, H) == 1);
    }
    SECTION("marks of G/e at e is |G|") {
        CHECK(marks(G, regular_gset(G), trivial_subgroup(G)) == G.n);
    }
    SECTION("additive under disjoint union, multiplicative under product") {
        auto X = coset_gset(G, sc.reps[1]);
        auto Y = disjoint_union(G, regular_gset(G), trivial_gset(G, 2));
        for (auto& H : all_subgroups(G)) {
            CHECK(marks(G, disjoint_union(G, X, Y), H) == marks(G, X, H) + marks(G, Y, H));
            CHECK(marks(G, cartesian_product(G, X, Y), H) == marks(G, X, H) * marks(G, Y, H));
        }
    }
}

TEST_CASE("table of marks") {
    SECTION("C2: frozen table") {
        auto G = cyclic_group(2);
        auto sc = conjugacy_classes_of_subgroups(G);
        auto t = table_of_marks(G, sc);
        REQUIRE(t.size() == 2);
        CHECK(t[0] == std::vector<int>{2, 0});
        CHECK(t[1] == std::vector<int>{1, 1});
    }
    SECTION("triangular with nonzero diagonal") {
        for (auto G : {symmetric_group(3), dihedral_group(4), alternating_group_4()}) {
            auto sc = conjugacy_classes_of_subgroups(G);
            auto t = table_of_marks(G, sc);
            for (int r = 0; r < (int)t.size(); ++r) {
                CHECK(t[r][r] > 0);
                for (int c = r + 1; c < (int)t.size(); ++c) CHECK(t[r][c] == 0);
            }
        }
    }
}

TEST_CASE("restriction and induction") {
    auto G = symmetric_group(3);
    auto sc = conjugacy_classes_of_subgroups(G);

    SECTION("restriction along the identity is the identity") {
        auto X = coset_gset(G, subgroup_of_size(G, 2));
        auto Y = restrict_along(identity_hom(G), X);
        CHECK(Y.act == X.act);
    }
    SECTION("inducing a point from e to C2 gives the free orbit") {
        auto C2 = cyclic_group(2);
        auto scc = conjugacy_classes_of_subgroups(C2);
        auto em = subgroup_as_group(C2, trivial_subgroup(C2));
        auto pt = trivial_gset(em.group, 1);
        auto I = induce(C2, em, pt);
        CHECK(decompose(C2, scc, I) == decompose(C2, scc, regular_gset(C2)));
    }
    SECTION("decompose(induce(H, H/L)) = decompose(G/L)") {
        for (auto& H : all_subgroups(G)) {
            auto hm = subgroup_as_group(G, H);
            for (auto& L : all_subgroups(hm.group)) {
                auto up = induce(G, hm, coset_gset(hm.group, L));
                std::vector<int> Lparent;
                for (int x : L.elems) Lparent.push_back(hm.to_parent[x]);
                std::sort(Lparent.begin(), Lparent.end());
                auto direct = coset_gset(G, Subgroup{Lparent});
                CHECK(decompose(G, sc, up) == decompose(G, sc, direct));
            }
        }
    }
    SECTION("res o ind along C2 <= S3: the double-coset prediction") {
        auto C2 = subgroup_of_size(G, 2);
        auto hm = subgroup_as_group(G, C2);
        auto up = induce(G, hm, trivial_gset(hm.group, 1)); // G/C2
        auto down = restrict_along(hm.embedding, up);       // as C2-set
        auto scc = conjugacy_classes_of_subgroups(hm.group);
        auto cl = decompose(hm.group, scc, down);
        REQUIRE(cl.mult.size() == 2);
        CHECK(cl.mult.at(scc.class_index(trivial_subgroup(hm.group))) == 1);
        CHECK(cl.mult.at(scc.class_index(full_subgroup(hm.group))) == 1);
    }
}

TEST_CASE("Frobenius: res of ind equals the double coset expansion") {
    // decompose(Res^G_K(Ind_H^G Y)) = sum over KgH of
    //   Ind^K_{K cap gHg^-1}(restrict Y along x -> g^-1 x g)
    for (auto G : {symmetric_group(3), dihedral_group(4), alternating_group_4()}) {
        auto subs = all_subgroups(G);
        for (auto& K : subs)
            for (auto& H : subs) {
                auto km = subgroup_as_group(G, K);
                auto hm = subgroup_as_group(G, H);
                auto sck = conjugacy_classes_of_subgroups(km.group);
                // test Y = H/L for every subgroup class of H (transitive generators suffice
                // by additivity)
                for (auto& L : all_subgroups(hm.group)) {
                    auto Y = coset_gset(hm.group, L);
                    auto lhs = decompose(
                        km.group, sck,
                        restrict_along(km.embedding, induce(G, hm, Y)));
                    GSetClass rhs;
                    for (int g : double_cosets(G, K, H)) {
                        // D = K cap gHg^-1 inside G
                        std::vector<int> d;
                        for (int x : K.elems) {
                            int y = G.conj(G.inv[g], x); // g^-1 x g
                            if (H.contains(y)) d.push_back(x);
                        }
                        Subgroup D{d};
                        // model of D inside K
                        std::vector<int> dk;
                        std::map<int, int> k_to_model;
                        for (int i = 0; i < km.group.n; ++i) k_to_model[km.to_parent[i]] = i;
                        for (int x : D.elems) dk.push_back(k_to_model.at(x));
                        std::sort(dk.begin(), dk.end());
                        auto dm = subgroup_as_group(km.group, Subgroup{dk});
                        // hom D -> H-model: x -> g^-1 x g
                        std::map<int, int> h_to_model;
                        for (int i = 0; i < hm.group.n; ++i) h_to_model[hm.to_parent[i]] = i;
                        std::vector<int> im(dm.group.n);
                        for (int i = 0; i < dm.group.n; ++i) {
                            int x = km.to_parent[dm.to_parent[i]];
                            im[i] = h_to_model.at(G.conj(G.inv[g], x));
                        }
                        auto conj_hom = make_hom(dm.group, hm.group, im);
                        rhs += decompose(km.group, sck,
                                         induce(km.group, dm, restrict_along(conj_hom, Y)));
                    }
                    CHECK(lhs == rhs);
                }
            }
    }
}

TEST_CASE("isotypical parts") {
    auto C2 = cyclic_group(2);
    auto sc = conjugacy_classes_of_subgroups(C2);
    auto X = disjoint_union(C2, regular_gset(C2), trivial_gset(C2, 1));
    int cls_e = sc.class_index(trivial_subgroup(C2));
    int cls_full = sc.class_index(full_subgroup(C2));
    CHECK(isotypical_part(C2, sc, X, cls_e).points == 2);
    CHECK(isotypical_part(C2, sc, X, cls_full).points == 1);
    CHECK(isotypical_part(C2, sc, empty_gset(C2), cls_e).points == 0);

    // parts sum back to X
    int total = 0;
    for (int c = 0; c < sc.num_classes(); ++c) total += isotypical_part(C2, sc, X, c).points;
    CHECK(total == X.points);

    // transitive G/H: everything at (H), empty elsewhere
    auto G = symmetric_group(3);
    auto scg = conjugacy_classes_of_subgroups(G);
    for (int c = 0; c < scg.num_classes(); ++c) {
        auto T = coset_gset(G, scg.reps[c]);
        for (int d = 0; d < scg.num_classes(); ++d)
            CHECK(isotypical_part(G, scg, T, d).points == (c == d ? T.points : 0));
    }
}

TEST_CASE("realize_class inverts decompose") {
    auto G = dihedral_group(4);
    auto sc = conjugacy_classes_of_subgroups(G);
    GSetClass cl;
    cl.mult[0] = 2;
    cl.mult[3] = 1;
    cl.mult[7] = 1;
    CHECK(decompose(G, sc, realize_class(G, sc, cl)) == cl);
}
