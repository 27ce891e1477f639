#include <globalk/biset.hpp>

#include <catch_amalgamated.hpp>

#include <random>

using namespace globalk;

namespace {

Subgroup subgroup_of_size(const Group& G, int size) {
    for (auto& H : all_subgroups(G))
        if (H.size() == size) return H;
    throw Error("no subgroup of that size");
}

BisetClass random_class(const Group& K, const Group& G, const SubgroupClass& sck,
                        std::mt19937& rng) {
    auto terms = canonical_terms(K, G, sck);
    BisetClass cl;
    std::uniform_int_distribution<int> pick(0, (int)terms.size() - 1);
    std::uniform_int_distribution<int> mult(1, 2);
    int n = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int i = 0; i < n; ++i) cl.terms[terms[pick(rng)]] += mult(rng);
    return cl;
}

} // namespace

TEST_CASE("identity biset classifies as the identity term") {
    auto G = cyclic_group(2);
    auto sc = conjugacy_classes_of_subgroups(G);
    auto cl = classify(G, G, sc, identity_biset(G));
    REQUIRE(cl.terms.size() == 1);
    auto& [term, mult] = *cl.terms.begin();
    CHECK(mult == 1);
    CHECK(term.L == std::vector<int>{0, 1});
    CHECK(term.alpha == std::vector<int>{0, 1});
}

TEST_CASE("transfer biset from the trivial subgroup of C2") {
    auto G = cyclic_group(2);
    auto em = subgroup_as_group(G, trivial_subgroup(G));
    auto S = transfer_biset_data(G, em); // _G G_e as G-e-biset
    auto sc = conjugacy_classes_of_subgroups(G);
    auto cl = classify(G, em.group, sc, S);
    REQUIRE(cl.terms.size() == 1);
    auto& [term, mult] = *cl.terms.begin();
    CHECK(mult == 1);
    CHECK(term.L == std::vector<int>{G.e}); // L = e inside K = C2
    CHECK(term.alpha == std::vector<int>{0});
}

TEST_CASE("unit laws in the effective Burnside category") {
    auto K = symmetric_group(3);
    auto sck = conjugacy_classes_of_subgroups(K);
    auto L = subgroup_of_size(K, 2);
    auto lm = subgroup_as_group(K, L);
    auto T = transfer_biset_data(K, lm); // _K K_L

    SECTION("_K K_L o _L L_L = _K K_L") {
        auto composed = balanced_product(K, lm.group, lm.group, T, identity_biset(lm.group));
        CHECK(classify(K, lm.group, sck, composed) == classify(K, lm.group, sck, T));
    }
    SECTION("_K K_K o S = S") {
        auto composed = balanced_product(K, K, lm.group, identity_biset(K), T);
        CHECK(classify(K, lm.group, sck, composed) == classify(K, lm.group, sck, T));
    }
    SECTION("size formula |T x_K S| = |T||S|/|K| for right-free T") {
        auto composed = balanced_product(K, K, lm.group, identity_biset(K), T);
        CHECK(composed.points == K.n * T.points / K.n);
    }
}

TEST_CASE("res o tr composite matches the double coset expansion") {
    // K = H = the same C2 inside S3; alpha: K-model -> S3 the inclusion.
    auto G = symmetric_group(3);
    auto H = subgroup_of_size(G, 2);
    auto hm = subgroup_as_group(G, H);
    auto& K = H;
    auto km = hm;

    auto T = restriction_biset(km.embedding);  // K-G-biset _alpha G_G
    auto S = transfer_biset_data(G, hm);       // G-H-biset _G G_H
    auto composite = balanced_product(km.group, G, hm.group, T, S);

    auto sck = conjugacy_classes_of_subgroups(km.group);
    auto got = classify(km.group, hm.group, sck, composite);

    // Expected: sum over K-H double cosets KgH of the term
    // (L = model of K cap gHg^-1, alpha = conjugation x -> g^-1 x g into H-model).
    BisetClass expected;
    std::map<int, int> k_to_model, h_to_model;
    for (int i = 0; i < km.group.n; ++i) k_to_model[km.to_parent[i]] = i;
    for (int i = 0; i < hm.group.n; ++i) h_to_model[hm.to_parent[i]] = i;
    for (int g : double_cosets(G, K, H)) {
        std::vector<int> L_model, alpha;
        for (int x : K.elems) {
            int y = G.conj(G.inv[g], x);
            if (H.contains(y)) {
                L_model.push_back(k_to_model.at(x));
                alpha.push_back(h_to_model.at(y));
            }
        }
        // sort by model index, keeping alpha aligned
        std::vector<size_t> idx(L_model.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](size_t a, size_t b) { return L_model[a] < L_model[b]; });
        std::vector<int> Ls, as;
        for (auto i : idx) {
            Ls.push_back(L_model[i]);
            as.push_back(alpha[i]);
        }
        expected.terms[canonical_term(km.group, hm.group, sck, Subgroup{Ls}, as)] += 1;
    }
    CHECK(got == expected);
    // |K\G/H| = 2 here
    int total = 0;
    for (auto& [t, m] : got.terms) total += m;
    CHECK(total == 2);
}

TEST_CASE("additivity of classify") {
    auto K = cyclic_group(4);
    auto G = cyclic_group(2);
    auto sck = conjugacy_classes_of_subgroups(K);
    std::mt19937 rng(42);
    for (int i = 0; i < 5; ++i) {
        auto a = random_class(K, G, sck, rng);
        auto b = random_class(K, G, sck, rng);
        auto S = realize_biset_class(K, G, a);
        auto T = realize_biset_class(K, G, b);
        CHECK(classify(K, G, sck, disjoint_union_biset(K, G, S, T)) == a + b);
    }
}

TEST_CASE("classify is a complete invariant under point shuffles") {
    std::mt19937 rng(20260810);
    auto K = symmetric_group(3);
    auto G = cyclic_group(2);
    auto sck = conjugacy_classes_of_subgroups(K);
    for (int trial = 0; trial < 8; ++trial) {
        auto cl = random_class(K, G, sck, rng);
        auto S = realize_biset_class(K, G, cl);
        std::vector<int> perm(S.points);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(classify(K, G, sck, shuffle_biset(K, G, S, perm)) == cl);
    }
}

TEST_CASE("non right-free bisets are rejected by classify") {
    auto K = cyclic_group(2);
    auto G = cyclic_group(2);
    // single point, both actions trivial: right action not free
    std::vector<int> l(K.n, 0), r(G.n, 0);
    auto S = make_biset(K, G, 1, std::move(l), std::move(r));
    CHECK_FALSE(S.right_free);
    auto sck = conjugacy_classes_of_subgroups(K);
    CHECK_THROWS_AS(classify(K, G, sck, S), NotRightFree);
}

TEST_CASE("associativity of balanced product on sampled triples") {
    std::mt19937 rng(7);
    auto L = cyclic_group(2);
    auto K = cyclic_group(4);
    auto G = symmetric_group(3);
    auto scl = conjugacy_classes_of_subgroups(L);
    auto sck = conjugacy_classes_of_subgroups(K);
    auto scg = conjugacy_classes_of_subgroups(G);
    for (int i = 0; i < 4; ++i) {
        auto U = realize_biset_class(L, K, random_class(L, K, scl, rng));
        auto T = realize_biset_class(K, G, random_class(K, G, sck, rng));
        auto S = realize_biset_class(G, L, random_class(G, L, scg, rng));
        auto left = balanced_product(L, G, L, balanced_product(L, K, G, U, T), S);
        auto right = balanced_product(L, K, L, U, balanced_product(K, G, L, T, S));
        CHECK(classify(L, L, scl, left) == classify(L, L, scl, right));
    }
}

TEST_CASE("rank formula: canonical terms match graph subgroup classes") {
    struct Pair {
        Group K, G;
    };
    std::vector<Pair> pairs = {
        {cyclic_group(2), cyclic_group(2)},
        {cyclic_group(2), cyclic_group(3)},
        {cyclic_group(4), cyclic_group(2)},
        {symmetric_group(3), cyclic_group(2)},
        {cyclic_group(2), symmetric_group(3)},
        {dihedral_group(4), cyclic_group(2)},
    };
    for (auto& [K, G] : pairs) {
        auto sck = conjugacy_classes_of_subgroups(K);
        CHECK((int)canonical_terms(K, G, sck).size() == graph_subgroup_class_count(K, G));
    }
}

TEST_CASE("A_{C2}(C2) has exactly three canonical terms") {
    auto C2 = cyclic_group(2);
    auto sc = conjugacy_classes_of_subgroups(C2);
    auto terms = canonical_terms(C2, C2, sc);
    CHECK(terms.size() == 3); // (e,triv), (C2,triv), (C2,id)
}

TEST_CASE("to_tr_res_word") {
    auto K = symmetric_group(3);
    auto G = symmetric_group(3);
    SECTION("identity term gives the identity word") {
        auto sck = conjugacy_classes_of_subgroups(K);
        auto cl = classify(K, G, sck, identity_biset(G));
        auto& term = cl.terms.begin()->first;
        auto w = to_tr_res_word(K, G, term);
        CHECK(w.L.size() == K.n); // L = K: pure restriction along an iso
        CHECK(is_hom_image(w.L_model.group, G, w.alpha.image));
    }
    SECTION("(e, trivial) over K = C2 is the transfer word") {
        auto C2 = cyclic_group(2);
        auto E = cyclic_group(1);
        BisetTerm t{{C2.e}, {E.e}};
        auto w = to_tr_res_word(C2, E, t);
        CHECK(w.L.size() == 1);
        CHECK(w.alpha.target.n == 1);
    }
}

TEST_CASE("realize_term round trips through classify") {
    auto K = dihedral_group(4);
    auto G = cyclic_group(2);
    auto sck = conjugacy_classes_of_subgroups(K);
    for (auto& t : canonical_terms(K, G, sck)) {
        auto S = realize_term(K, G, t);
        CHECK(S.right_free);
        auto cl = classify(K, G, sck, S);
        REQUIRE(cl.terms.size() == 1);
        CHECK(cl.terms.begin()->first == t);
        CHECK(cl.terms.begin()->second == 1);
    }
}
