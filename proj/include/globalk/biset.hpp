#pragma once

// The effective Burnside category at desk scale: finite K-G-bisets with free
// right action, balanced products, classification into canonical (L, alpha)
// terms, and the translation of a term into a transfer-restriction word.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "gset.hpp"

namespace globalk {

struct Biset {
    int points = 0;
    std::vector<int> left;  // left[k*points+s]  = k.s
    std::vector<int> right; // right[g*points+s] = s.g
    bool right_free = false;

    int lact(int k, int s) const { return left[k * points + s]; }
    int ract(int s, int g) const { return right[g * points + s]; }
};

inline Biset make_biset(const Group& K, const Group& G, int points, std::vector<int> left,
                        std::vector<int> right) {
    Biset S{points, std::move(left), std::move(right), false};
    // left K-action
    auto check_left = [&](const Group& H, const std::vector<int>& t) {
        for (int s = 0; s < points; ++s)
            if (t[H.e * points + s] != s) throw Error("make_biset: identity acts nontrivially");
        for (int a = 0; a < H.n; ++a)
            for (int b = 0; b < H.n; ++b)
                for (int s = 0; s < points; ++s)
                    if (t[H.op(a, b) * points + s] != t[a * points + t[b * points + s]])
                        throw Error("make_biset: not an action");
    };
    check_left(K, S.left);
    // right G-action: s.(gh) = (s.g).h means table over opposite group composition
    for (int s = 0; s < points; ++s)
        if (S.ract(s, G.e) != s) throw Error("make_biset: right identity acts nontrivially");
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            for (int s = 0; s < points; ++s)
                if (S.ract(s, G.op(a, b)) != S.ract(S.ract(s, a), b))
                    throw Error("make_biset: right action not associative");
    // commuting
    for (int k = 0; k < K.n; ++k)
        for (int g = 0; g < G.n; ++g)
            for (int s = 0; s < points; ++s)
                if (S.ract(S.lact(k, s), g) != S.lact(k, S.ract(s, g)))
                    throw Error("make_biset: actions do not commute");
    // right freeness
    S.right_free = true;
    for (int g = 0; g < G.n && S.right_free; ++g) {
        if (g == G.e) continue;
        for (int s = 0; s < points; ++s)
            if (S.ract(s, g) == s) {
                S.right_free = false;
                break;
            }
    }
    return S;
}

// _G G_G, the identity of the effective Burnside category at G.
inline Biset identity_biset(const Group& G) {
    std::vector<int> l(G.n * G.n), r(G.n * G.n);
    for (int g = 0; g < G.n; ++g)
        for (int s = 0; s < G.n; ++s) {
            l[g * G.n + s] = G.op(g, s);
            r[g * G.n + s] = G.op(s, g);
        }
    return make_biset(G, G, G.n, std::move(l), std::move(r));
}

// _alpha G_G: restriction along alpha : K -> G as a K-G-biset.
inline Biset restriction_biset(const GroupHom& alpha) {
    const Group& K = alpha.source;
    const Group& G = alpha.target;
    std::vector<int> l(K.n * G.n), r(G.n * G.n);
    for (int k = 0; k < K.n; ++k)
        for (int s = 0; s < G.n; ++s) l[k * G.n + s] = G.op(alpha.image[k], s);
    for (int g = 0; g < G.n; ++g)
        for (int s = 0; s < G.n; ++s) r[g * G.n + s] = G.op(s, g);
    return make_biset(K, G, G.n, std::move(l), std::move(r));
}

// _G G_H for a subgroup model H of G: the transfer from H to G as a G-H-biset.
inline Biset transfer_biset_data(const Group& G, const SubgroupModel& H) {
    std::vector<int> l(G.n * G.n), r(H.group.n * G.n);
    for (int g = 0; g < G.n; ++g)
        for (int s = 0; s < G.n; ++s) l[g * G.n + s] = G.op(g, s);
    for (int h = 0; h < H.group.n; ++h)
        for (int s = 0; s < G.n; ++s) r[h * G.n + s] = G.op(s, H.to_parent[h]);
    return make_biset(G, H.group, G.n, std::move(l), std::move(r));
}

inline Biset disjoint_union_biset(const Group& K, const Group& G, const Biset& S, const Biset& T) {
    int m = S.points + T.points;
    std::vector<int> l(K.n * m), r(G.n * m);
    for (int k = 0; k < K.n; ++k) {
        for (int s = 0; s < S.points; ++s) l[k * m + s] = S.lact(k, s);
        for (int s = 0; s < T.points; ++s) l[k * m + S.points + s] = S.points + T.lact(k, s);
    }
    for (int g = 0; g < G.n; ++g) {
        for (int s = 0; s < S.points; ++s) r[g * m + s] = S.ract(s, g);
        for (int s = 0; s < T.points; ++s) r[g * m + S.points + s] = S.points + T.ract(s, g);
    }
    return make_biset(K, G, m, std::move(l), std::move(r));
}

inline Biset shuffle_biset(const Group& K, const Group& G, const Biset& S,
                           const std::vector<int>& perm) {
    std::vector<int> l(K.n * S.points), r(G.n * S.points);
    for (int k = 0; k < K.n; ++k)
        for (int s = 0; s < S.points; ++s) l[k * S.points + perm[s]] = perm[S.lact(k, s)];
    for (int g = 0; g < G.n; ++g)
        for (int s = 0; s < S.points; ++s) r[g * S.points + perm[s]] = perm[S.ract(s, g)];
    return make_biset(K, G, S.points, std::move(l), std::move(r));
}

// T x_K S for T an L-K-biset and S a K-G-biset.
inline Biset balanced_product(const Group& Lg, const Group& K, const Group& G, const Biset& T,
                              const Biset& S) {
    if (T.right.size() != (size_t)K.n * T.points || S.left.size() != (size_t)K.n * S.points)
        throw GroupMismatch("balanced_product: middle groups differ");
    int np = T.points * S.points;
    std::vector<int> uf(np);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    auto unite = [&](int a, int b) { uf[find(a)] = find(b); };
    auto enc = [&](int t, int s) { return t * S.points + s; };
    for (int t = 0; t < T.points; ++t)
        for (int s = 0; s < S.points; ++s)
            for (int k = 0; k < K.n; ++k) unite(enc(T.ract(t, k), s), enc(t, S.lact(k, s)));
    std::map<int, int> index;
    for (int x = 0; x < np; ++x) {
        int r = find(x);
        if (!index.count(r)) index[r] = (int)index.size();
    }
    int m = (int)index.size();
    std::vector<int> l(Lg.n * m), r(G.n * m);
    for (int t = 0; t < T.points; ++t)
        for (int s = 0; s < S.points; ++s) {
            int c = index.at(find(enc(t, s)));
            for (int a = 0; a < Lg.n; ++a) l[a * m + c] = index.at(find(enc(T.lact(a, t), s)));
            for (int g = 0; g < G.n; ++g) r[g * m + c] = index.at(find(enc(t, S.ract(s, g))));
        }
    return make_biset(Lg, G, m, std::move(l), std::move(r));
}

// ---------------------------------------------------------------------------
// Classification

// One transitive right-free K-G-biset up to isomorphism: K x_{L,alpha} G.
struct BisetTerm {
    std::vector<int> L;     // sorted subgroup of K
    std::vector<int> alpha; // image in G per element of L, aligned with L

    bool operator<(const BisetTerm& o) const { return std::tie(L, alpha) < std::tie(o.L, o.alpha); }
    bool operator==(const BisetTerm& o) const { return L == o.L && alpha == o.alpha; }
};

struct BisetClass {
    std::map<BisetTerm, int> terms; // canonical term -> multiplicity

    bool operator==(const BisetClass& o) const { return terms == o.terms; }
    bool operator<(const BisetClass& o) const { return terms < o.terms; }
    BisetClass& operator+=(const BisetClass& o) {
        for (auto& [t, k] : o.terms) terms[t] += k;
        return *this;
    }
    friend BisetClass operator+(BisetClass a, const BisetClass& b) { return a += b; }
};

// Canonicalize (L, alpha) under simultaneous K-conjugacy of L and G-conjugacy
// of alpha: resulting L is the class representative; alpha is the lex-least
// image array over the remaining freedom.
inline BisetTerm canonical_term(const Group& K, const Group& G, const SubgroupClass& classes_of_K,
                                const Subgroup& L, const std::vector<int>& alpha_on_L) {
    int cls = classes_of_K.class_index(L);
    const Subgroup& rep = classes_of_K.reps[cls];
    std::vector<int> best;
    std::vector<int> cur(rep.elems.size());
    for (int k = 0; k < K.n; ++k) {
        if (!(conjugate_subgroup(K, L, k) == rep)) continue;
        // alpha' on rep: alpha'(x) = alpha(k^-1 x k)
        for (size_t i = 0; i < rep.elems.size(); ++i) {
            int pre = K.conj(K.inv[k], rep.elems[i]);
            auto it = std::lower_bound(L.elems.begin(), L.elems.end(), pre);
            cur[i] = alpha_on_L[it - L.elems.begin()];
        }
        for (int g = 0; g < G.n; ++g) {
            std::vector<int> conj(cur.size());
            for (size_t i = 0; i < cur.size(); ++i) conj[i] = G.conj(g, cur[i]);
            if (best.empty() || conj < best) best = std::move(conj);
        }
    }
    if (best.empty()) throw Error("canonical_term: representative not reachable");
    return BisetTerm{rep.elems, std::move(best)};
}

// Complete invariant for right-free bisets: the multiset of canonical terms of
// the K x G^op orbits, read off from graph-subgroup stabilizers.
inline BisetClass classify(const Group& K, const Group& G, const SubgroupClass& classes_of_K,
                           const Biset& S) {
    if (!S.right_free) throw NotRightFree("classify requires a right-free biset");
    BisetClass out;
    std::vector<char> seen(S.points, 0);
    for (int s = 0; s < S.points; ++s) {
        if (seen[s]) continue;
        for (int k = 0; k < K.n; ++k)
            for (int g = 0; g < G.n; ++g) seen[S.ract(S.lact(k, s), g)] = 1;
        // stabilizer data: L = {k : k.s in s.G}, alpha(k) the unique g with k.s = s.g
        std::vector<int> L, alpha;
        std::vector<int> orbit_of_s(G.n);
        for (int g = 0; g < G.n; ++g) orbit_of_s[g] = S.ract(s, g);
        for (int k = 0; k < K.n; ++k) {
            int ks = S.lact(k, s);
            for (int g = 0; g < G.n; ++g)
                if (orbit_of_s[g] == ks) {
                    L.push_back(k);
                    alpha.push_back(g);
                    break;
                }
        }
        out.terms[canonical_term(K, G, classes_of_K, Subgroup{L}, alpha)] += 1;
    }
    return out;
}

// Materialize K x_{L,alpha} G: points are (coset of K/L) x G.
inline Biset realize_term(const Group& K, const Group& G, const BisetTerm& term) {
    Subgroup L{term.L};
    std::vector<int> coset_of(K.n, -1), reps;
    for (int k = 0; k < K.n; ++k) {
        if (coset_of[k] >= 0) continue;
        int c = (int)reps.size();
        reps.push_back(k);
        for (int l : L.elems) coset_of[K.op(k, l)] = c;
    }
    auto alpha_of = [&](int l) {
        auto it = std::lower_bound(term.L.begin(), term.L.end(), l);
        return term.alpha[it - term.L.begin()];
    };
    int nc = (int)reps.size();
    int m = nc * G.n;
    std::vector<int> ltab(K.n * m), rtab(G.n * m);
    for (int k = 0; k < K.n; ++k)
        for (int c = 0; c < nc; ++c) {
            int p = K.op(k, reps[c]);
            int j = coset_of[p];
            int l = K.op(K.inv[reps[j]], p);
            int a = alpha_of(l);
            for (int g = 0; g < G.n; ++g)
                ltab[k * m + c * G.n + g] = j * G.n + G.op(a, g);
        }
    for (int g = 0; g < G.n; ++g)
        for (int c = 0; c < nc; ++c)
            for (int x = 0; x < G.n; ++x) rtab[g * m + c * G.n + x] = c * G.n + G.op(x, g);
    return make_biset(K, G, m, std::move(ltab), std::move(rtab));
}

inline Biset realize_biset_class(const Group& K, const Group& G, const BisetClass& cl) {
    bool first = true;
    Biset acc;
    for (auto& [t, mult] : cl.terms)
        for (int i = 0; i < mult; ++i) {
            auto piece = realize_term(K, G, t);
            acc = first ? piece : disjoint_union_biset(K, G, acc, piece);
            first = false;
        }
    if (first) {
        // empty biset
        acc = make_biset(K, G, 0, {}, {});
        acc.right_free = true;
    }
    return acc;
}

// M[K x_{L,alpha} G] = tr_L^K o alpha^*; the two-step word form of a term.
struct TrResWord {
    Subgroup L;    // subgroup of K
    GroupHom alpha; // L-model -> G
    SubgroupModel L_model;
};

inline TrResWord to_tr_res_word(const Group& K, const Group& G, const BisetTerm& term) {
    TrResWord w;
    w.L = Subgroup{term.L};
    w.L_model = subgroup_as_group(K, w.L);
    // alpha on the model: model index i corresponds to parent element term.L[i]
    w.alpha = make_hom(w.L_model.group, G, term.alpha);
    return w;
}

// Independent rank oracle: number of conjugacy classes of graph subgroups of
// K x G, i.e. subgroups meeting 1 x G trivially.
inline int graph_subgroup_class_count(const Group& K, const Group& G) {
    auto P = direct_product(K, G);
    auto sc = conjugacy_classes_of_subgroups(P, P.n);
    int count = 0;
    for (auto& rep : sc.reps) {
        bool graph = true;
        for (int x : rep.elems) {
            auto [a, b] = product_split(K, G, x);
            if (a == K.e && b != G.e) {
                graph = false;
                break;
            }
        }
        if (graph) ++count;
    }
    return count;
}

// All canonical terms for the pair (from G, to K), in canonical order.
inline std::vector<BisetTerm> canonical_terms(const Group& K, const Group& G,
                                              const SubgroupClass& classes_of_K) {
    std::set<BisetTerm> set;
    for (auto& L : classes_of_K.reps) {
        auto lm = subgroup_as_group(K, L);
        for (auto& h : all_homs(lm.group, G)) {
            set.insert(canonical_term(K, G, classes_of_K, L, h.image));
        }
    }
    return std::vector<BisetTerm>(set.begin(), set.end());
}

} // namespace globalk
