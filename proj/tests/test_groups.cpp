#include <globalk/group.hpp>

#include <catch_amalgamated.hpp>

#include <set>

using namespace globalk;

namespace {

// Independent oracle: power-set scan for subgroups, feasible for |G| <= 16.
// The library itself never does this (it uses closure iteration), which is
// exactly why we can use it as a cross-check.
std::set<std::vector<int>> subgroups_by_subset_scan(const Group& G) {
    std::set<std::vector<int>> out;
    int n = G.n;
    REQUIRE(n <= 16);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (!(mask & (1u << G.e))) continue;
        std::vector<int> el;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) el.push_back(i);
        bool closed = true;
        for (int a : el) {
            if (!(mask & (1u << G.inv[a]))) { closed = false; break; }
            for (int b : el)
                if (!(mask & (1u << G.op(a, b)))) { closed = false; break; }
            if (!closed) break;
        }
        if (closed) out.insert(el);
    }
    return out;
}

} // namespace

TEST_CASE("bestiary groups are valid and have the right orders") {
    CHECK(cyclic_group(1).n == 1);
    CHECK(cyclic_group(7).n == 7);
    CHECK(symmetric_group(3).n == 6);
    CHECK(symmetric_group(4).n == 24);
    CHECK(dihedral_group(4).n == 8);
    CHECK(quaternion_group_8().n == 8);
    CHECK(alternating_group_4().n == 12);
    CHECK(direct_product(cyclic_group(2), cyclic_group(2)).n == 4);
    CHECK_FALSE(symmetric_group(3).is_abelian());
    CHECK(cyclic_group(6).is_abelian());
}

TEST_CASE("quaternion group really is Q8, not D4") {
    auto Q = quaternion_group_8();
    auto D = dihedral_group(4);
    // Q8 has a unique involution, D4 has five.
    auto count_inv = [](const Group& G) {
        int c = 0;
        for (int g = 0; g < G.n; ++g)
            if (g != G.e && G.op(g, g) == G.e) ++c;
        return c;
    };
    CHECK(count_inv(Q) == 1);
    CHECK(count_inv(D) == 5);
    CHECK_FALSE(isomorphic(Q, D));
}

TEST_CASE("subgroup enumeration matches subset-scan oracle") {
    for (auto G : {cyclic_group(1), cyclic_group(2), cyclic_group(12), symmetric_group(3),
                   direct_product(cyclic_group(2), cyclic_group(2)), dihedral_group(4),
                   quaternion_group_8(), alternating_group_4()}) {
        auto fast = all_subgroups(G);
        auto slow = subgroups_by_subset_scan(G);
        REQUIRE(fast.size() == slow.size());
        for (auto& H : fast) {
            CHECK(slow.count(H.elems) == 1);
            CHECK(is_subgroup(G, H));
            CHECK(G.n % H.size() == 0); // Lagrange
        }
    }
}

TEST_CASE("subgroup counts: frozen values") {
    CHECK(all_subgroups(cyclic_group(1)).size() == 1);
    CHECK(all_subgroups(cyclic_group(2)).size() == 2);
    CHECK(all_subgroups(symmetric_group(3)).size() == 6);
    CHECK(all_subgroups(direct_product(cyclic_group(2), cyclic_group(2))).size() == 5);
    CHECK(all_subgroups(dihedral_group(4)).size() == 10);
    CHECK(all_subgroups(symmetric_group(4)).size() == 30);
}

TEST_CASE("order cap enforced") {
    CHECK_THROWS_AS(all_subgroups(cyclic_group(10), 8), OrderCapExceeded);
}

TEST_CASE("conjugacy classes of subgroups") {
    CHECK(conjugacy_classes_of_subgroups(cyclic_group(1)).num_classes() == 1);
    auto s3 = conjugacy_classes_of_subgroups(symmetric_group(3));
    CHECK(s3.num_classes() == 4);
    CHECK(conjugacy_classes_of_subgroups(dihedral_group(4)).num_classes() == 8);

    // class equation: sum over classes of [G:N_G(rep)] = #subgroups
    for (auto G : {symmetric_group(3), dihedral_group(4), symmetric_group(4)}) {
        auto sc = conjugacy_classes_of_subgroups(G);
        int total = 0;
        for (auto& rep : sc.reps) total += G.n / normalizer(G, rep).size();
        CHECK(total == (int)sc.all.size());
    }

    // representative is the lex-least member of its class
    auto sc = conjugacy_classes_of_subgroups(symmetric_group(3));
    for (size_t i = 0; i < sc.all.size(); ++i) {
        auto& rep = sc.reps[sc.class_of[i]];
        CHECK(!(sc.all[i] < rep));
    }
}

TEST_CASE("class labels are deterministic") {
    auto sc = conjugacy_classes_of_subgroups(dihedral_group(4));
    std::vector<std::string> labels;
    for (int c = 0; c < sc.num_classes(); ++c) labels.push_back(sc.label(c));
    CHECK(labels == std::vector<std::string>{"1a", "2a", "2b", "2c", "4a", "4b", "4c", "8a"});
    CHECK(sc.class_by_label("2b") == 2);
}

TEST_CASE("normalizer and Weyl groups") {
    auto G = symmetric_group(3);
    SECTION("W(G,G) is trivial") {
        auto w = weyl_group(G, full_subgroup(G));
        CHECK(w.group.n == 1);
    }
    SECTION("W(G,e) is G") {
        auto w = weyl_group(G, trivial_subgroup(G));
        CHECK(w.group.n == 6);
        CHECK(isomorphic(w.group, G));
    }
    SECTION("W(S3, C2) is trivial") {
        Subgroup c2;
        for (auto& H : all_subgroups(G))
            if (H.size() == 2) { c2 = H; break; }
        CHECK(normalizer(G, c2).size() == 2);
        CHECK(weyl_group(G, c2).group.n == 1);
    }
    SECTION("|W| = |N|/|H| and projection is a surjective hom with kernel H") {
        for (auto& H : all_subgroups(G)) {
            auto w = weyl_group(G, H);
            auto N = normalizer(G, H);
            CHECK(w.group.n * H.size() == N.size());
            CHECK(is_hom_image(w.normal.group, w.group, w.projection.image));
            int kernel = 0;
            for (int i = 0; i < w.normal.group.n; ++i)
                if (w.projection.image[i] == w.group.e) ++kernel;
            CHECK(kernel == H.size());
        }
    }
}

TEST_CASE("double cosets") {
    SECTION("K = G gives a single coset") {
        auto G = symmetric_group(3);
        auto reps = double_cosets(G, full_subgroup(G), trivial_subgroup(G));
        CHECK(reps.size() == 1);
        CHECK(reps[0] == G.e);
    }
    SECTION("S3 with K = H = same C2 gives 2 double cosets") {
        auto G = symmetric_group(3);
        Subgroup c2;
        for (auto& H : all_subgroups(G))
            if (H.size() == 2) { c2 = H; break; }
        CHECK(double_cosets(G, c2, c2).size() == 2);
    }
    SECTION("C6 with K = C2, H = C3 gives 1 double coset") {
        auto G = cyclic_group(6);
        Subgroup K, H;
        for (auto& S : all_subgroups(G)) {
            if (S.size() == 2) K = S;
            if (S.size() == 3) H = S;
        }
        CHECK(double_cosets(G, K, H).size() == 1);
    }
    SECTION("coset sizes partition the group") {
        auto G = dihedral_group(4);
        auto subs = all_subgroups(G);
        for (auto& K : subs)
            for (auto& H : subs) {
                auto reps = double_cosets(G, K, H);
                int total = 0;
                for (int g : reps) {
                    std::set<int> coset;
                    for (int k : K.elems)
                        for (int h : H.elems) coset.insert(G.op(G.op(k, g), h));
                    total += (int)coset.size();
                }
                CHECK(total == G.n);
            }
    }
}

TEST_CASE("homomorphism enumeration matches brute force on tiny groups") {
    // Oracle: enumerate *all* functions K->G and filter (independent of the
    // generator-word construction used by all_homs).
    auto brute = [](const Group& K, const Group& G) {
        std::set<std::vector<int>> out;
        std::vector<int> f(K.n, 0);
        while (true) {
            if (is_hom_image(K, G, f)) out.insert(f);
            int i = 0;
            while (i < K.n && ++f[i] == G.n) f[i++] = 0;
            if (i == K.n) break;
        }
        return out;
    };
    for (auto& [K, G] : std::vector<std::pair<Group, Group>>{
             {cyclic_group(2), cyclic_group(2)},
             {cyclic_group(3), cyclic_group(2)},
             {cyclic_group(2), symmetric_group(3)},
             {cyclic_group(4), cyclic_group(2)},
             {direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2)}}) {
        auto fast = all_homs(K, G);
        auto slow = brute(K, G);
        REQUIRE(fast.size() == slow.size());
        for (auto& h : fast) CHECK(slow.count(h.image) == 1);
    }
}

TEST_CASE("homs up to conjugacy: frozen counts") {
    CHECK(homs_up_to_conjugacy(cyclic_group(2), cyclic_group(2)).size() == 2);
    CHECK(homs_up_to_conjugacy(cyclic_group(3), cyclic_group(2)).size() == 1);
    CHECK(homs_up_to_conjugacy(cyclic_group(2), symmetric_group(3)).size() == 2);
}

TEST_CASE("cayley text round trip") {
    auto G = dihedral_group(4);
    std::stringstream ss;
    write_cayley_text(G, ss);
    // element 0 is the identity for all bestiary constructions
    auto H = group_from_cayley_text(ss, "D4.reload");
    CHECK(H.n == G.n);
    CHECK(H.mul == G.mul);
}

TEST_CASE("group_by_name selectors") {
    CHECK(group_by_name("e").n == 1);
    CHECK(group_by_name("C6").n == 6);
    CHECK(group_by_name("C2xC2").n == 4);
    CHECK(group_by_name("S3").n == 6);
    CHECK_THROWS(group_by_name("M11"));
}

TEST_CASE("isomorphism testing") {
    CHECK(isomorphic(cyclic_group(6), direct_product(cyclic_group(2), cyclic_group(3))));
    CHECK_FALSE(isomorphic(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))));
    CHECK(isomorphic(symmetric_group(3), dihedral_group(3)));
    auto iso = find_isomorphism(cyclic_group(6), direct_product(cyclic_group(3), cyclic_group(2)));
    REQUIRE(iso.has_value());
    CHECK(is_hom_image(iso->source, iso->target, iso->image));
}
