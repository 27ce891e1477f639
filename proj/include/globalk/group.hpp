#pragma once

// Finite groups as Cayley tables. Everything at desk scale (|G| <= 48):
// subgroup enumeration by closure iteration, conjugacy classes with
// canonical representatives, normalizers, Weyl groups, double cosets,
// and homomorphism enumeration up to conjugacy.

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace globalk {

struct Group {
    int n = 1;
    std::vector<int> mul; // n*n, mul[a*n+b] = a*b
    std::vector<int> inv;
    int e = 0;
    std::string name = "C1";

    int op(int a, int b) const { return mul[a * n + b]; }
    int conj(int g, int x) const { return op(op(g, x), inv[g]); } // g x g^-1

    int order_of(int g) const {
        int k = 1, x = g;
        while (x != e) {
            x = op(x, g);
            ++k;
        }
        return k;
    }

    // Multiset of element orders; cheap isomorphism invariant.
    std::vector<int> order_profile() const {
        std::vector<int> p(n);
        for (int g = 0; g < n; ++g) p[g] = order_of(g);
        std::sort(p.begin(), p.end());
        return p;
    }

    bool is_abelian() const {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (op(a, b) != op(b, a)) return false;
        return true;
    }
};

inline Group make_group(int n, std::vector<int> mul, std::string name) {
    if (n <= 0 || (int)mul.size() != n * n) throw Error("make_group: bad table size");
    Group G;
    G.n = n;
    G.mul = std::move(mul);
    G.name = std::move(name);
    for (auto v : G.mul)
        if (v < 0 || v >= n) throw Error("make_group: entry out of range in " + G.name);
    // identity
    G.e = -1;
    for (int c = 0; c < n && G.e < 0; ++c) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            if (G.op(c, a) != a || G.op(a, c) != a) ok = false;
        if (ok) G.e = c;
    }
    if (G.e < 0) throw Error("make_group: no identity in " + G.name);
    // inverses
    G.inv.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (G.op(a, b) == G.e && G.op(b, a) == G.e) {
                G.inv[a] = b;
                break;
            }
        if (G.inv[a] < 0) throw Error("make_group: missing inverse in " + G.name);
    }
    for (int a = 0; a < n; ++a)
        if (G.inv[G.inv[a]] != a) throw Error("make_group: inv not involutive in " + G.name);
    // associativity
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (G.op(G.op(a, b), c) != G.op(a, G.op(b, c)))
                    throw Error("make_group: not associative in " + G.name);
    return G;
}

// ---------------------------------------------------------------------------
// Bestiary

inline Group cyclic_group(int m) {
    std::vector<int> mul(m * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) mul[a * m + b] = (a + b) % m;
    return make_group(m, std::move(mul), "C" + std::to_string(m));
}

inline Group direct_product(const Group& A, const Group& B, std::string name = "") {
    int n = A.n * B.n;
    std::vector<int> mul(n * n);
    auto idx = [&](int a, int b) { return a * B.n + b; };
    for (int a1 = 0; a1 < A.n; ++a1)
        for (int b1 = 0; b1 < B.n; ++b1)
            for (int a2 = 0; a2 < A.n; ++a2)
                for (int b2 = 0; b2 < B.n; ++b2)
                    mul[idx(a1, b1) * n + idx(a2, b2)] = idx(A.op(a1, a2), B.op(b1, b2));
    if (name.empty()) name = A.name + "x" + B.name;
    return make_group(n, std::move(mul), std::move(name));
}

inline int product_index(const Group& A, const Group& B, int a, int b) { return a * B.n + b; }
inline std::pair<int, int> product_split(const Group& A, const Group& B, int x) {
    return {x / B.n, x % B.n};
}

inline Group opposite_group(const Group& G) {
    std::vector<int> mul(G.n * G.n);
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b) mul[a * G.n + b] = G.op(b, a);
    return make_group(G.n, std::move(mul), G.name + "^op");
}

namespace detail {
inline std::vector<std::vector<int>> permutations_of(int m) {
    std::vector<int> p(m);
    for (int i = 0; i < m; ++i) p[i] = i;
    std::vector<std::vector<int>> all;
    do all.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return all;
}

inline bool perm_even(const std::vector<int>& p) {
    int sw = 0;
    auto q = p;
    for (size_t i = 0; i < q.size(); ++i)
        while (q[i] != (int)i) {
            std::swap(q[i], q[q[i]]);
            ++sw;
        }
    return sw % 2 == 0;
}

inline Group group_from_perms(std::vector<std::vector<int>> perms, std::string name) {
    std::sort(perms.begin(), perms.end());
    int n = (int)perms.size();
    std::map<std::vector<int>, int> idx;
    for (int i = 0; i < n; ++i) idx[perms[i]] = i;
    std::vector<int> mul(n * n);
    int m = (int)perms[0].size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> c(m);
            for (int i = 0; i < m; ++i) c[i] = perms[a][perms[b][i]]; // (a.b)(i) = a(b(i))
            auto it = idx.find(c);
            if (it == idx.end()) throw Error("group_from_perms: not closed");
            mul[a * n + b] = it->second;
        }
    return make_group(n, std::move(mul), std::move(name));
}
} // namespace detail

inline Group symmetric_group(int m) {
    if (m < 1 || m > 4) throw OrderCapExceeded("symmetric_group supports m <= 4");
    return detail::group_from_perms(detail::permutations_of(m), "S" + std::to_string(m));
}

inline Group alternating_group_4() {
    std::vector<std::vector<int>> evens;
    for (auto& p : detail::permutations_of(4))
        if (detail::perm_even(p)) evens.push_back(p);
    return detail::group_from_perms(std::move(evens), "A4");
}

// Dihedral group of order 2m: elements 0..m-1 rotations, m..2m-1 reflections.
inline Group dihedral_group(int m) {
    int n = 2 * m;
    std::vector<int> mul(n * n);
    auto id = [&](bool refl, int r) { return (refl ? m : 0) + ((r % m) + m) % m; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool ra = a >= m, rb = b >= m;
            int xa = a % m, xb = b % m;
            // r^x s^e composition with s r = r^-1 s
            int r = ra ? xa - xb : xa + xb;
            mul[a * n + b] = id(ra != rb, r);
        }
    return make_group(n, std::move(mul), "D" + std::to_string(m));
}

inline Group quaternion_group_8() {
    // elements 1,-1,i,-i,j,-j,k,-k as 0..7
    auto neg = [](int x) { return x ^ 1; };
    std::vector<int> mul(64, -1);
    auto set = [&](int a, int b, int c) { mul[a * 8 + b] = c; };
    // base table on units {1:0, i:2, j:4, k:6}
    int I = 2, J = 4, K = 6;
    set(0, 0, 0);
    set(0, I, I); set(I, 0, I);
    set(0, J, J); set(J, 0, J);
    set(0, K, K); set(K, 0, K);
    set(I, I, 1); set(J, J, 1); set(K, K, 1);
    set(I, J, K); set(J, K, I); set(K, I, J);
    set(J, I, neg(K)); set(K, J, neg(I)); set(I, K, neg(J));
    // extend by signs
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a & ~1, ub = b & ~1;
            int base = mul[ua * 8 + ub];
            int sgn = (a & 1) ^ (b & 1);
            mul[a * 8 + b] = sgn ? neg(base) : base;
        }
    return make_group(8, std::move(mul), "Q8");
}

// ---------------------------------------------------------------------------
// Cayley-table text format: first line "order n", then n rows of n indices.

inline Group group_from_cayley_text(std::istream& in, std::string name) {
    std::string word;
    int n = 0;
    if (!(in >> word >> n) || word != "order" || n <= 0)
        throw Error("cayley text: expected 'order n' header");
    std::vector<int> mul(n * n);
    for (auto& v : mul)
        if (!(in >> v)) throw Error("cayley text: truncated table");
    auto G = make_group(n, std::move(mul), std::move(name));
    if (G.e != 0) throw Error("cayley text: element 0 must be the identity");
    return G;
}

inline Group load_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::string name = path;
    auto slash = name.find_last_of('/');
    if (slash != std::string::npos) name = name.substr(slash + 1);
    return group_from_cayley_text(in, name);
}

inline void write_cayley_text(const Group& G, std::ostream& out) {
    out << "order " << G.n << "\n";
    for (int a = 0; a < G.n; ++a) {
        for (int b = 0; b < G.n; ++b) out << (b ? " " : "") << G.op(a, b);
        out << "\n";
    }
}

// ---------------------------------------------------------------------------
// Subgroups

struct Subgroup {
    std::vector<int> elems; // strictly sorted, contains identity

    int size() const { return (int)elems.size(); }
    bool contains(int x) const { return std::binary_search(elems.begin(), elems.end(), x); }
    bool operator==(const Subgroup& o) const { return elems == o.elems; }
    bool operator<(const Subgroup& o) const {
        if (elems.size() != o.elems.size()) return elems.size() < o.elems.size();
        return elems < o.elems;
    }
};

inline Subgroup closure(const Group& G, std::vector<int> seed) {
    std::vector<char> in(G.n, 0);
    in[G.e] = 1;
    std::vector<int> stack = {G.e};
    for (int s : seed)
        if (!in[s]) {
            in[s] = 1;
            stack.push_back(s);
        }
    std::vector<int> have = stack;
    for (size_t i = 0; i < have.size(); ++i)
        for (size_t j = 0; j < have.size(); ++j) {
            int p = G.op(have[i], have[j]);
            if (!in[p]) {
                in[p] = 1;
                have.push_back(p);
            }
        }
    std::sort(have.begin(), have.end());
    return Subgroup{std::move(have)};
}

inline Subgroup trivial_subgroup(const Group& G) { return Subgroup{{G.e}}; }
inline Subgroup full_subgroup(const Group& G) {
    std::vector<int> all(G.n);
    for (int i = 0; i < G.n; ++i) all[i] = i;
    return Subgroup{std::move(all)};
}

inline bool is_subgroup(const Group& G, const Subgroup& H) {
    if (H.elems.empty() || !H.contains(G.e)) return false;
    for (int a : H.elems) {
        if (!H.contains(G.inv[a])) return false;
        for (int b : H.elems)
            if (!H.contains(G.op(a, b))) return false;
    }
    return true;
}

// Closure iteration: cyclic seeds, then <H, g> joins until saturation.
inline std::vector<Subgroup> all_subgroups(const Group& G, int order_cap = 0) {
    if (order_cap == 0) order_cap = caps().group_order;
    if (G.n > order_cap)
        throw OrderCapExceeded("group " + G.name + " has order " + std::to_string(G.n) +
                               " > cap " + std::to_string(order_cap));
    std::set<std::vector<int>> found;
    std::vector<Subgroup> work;
    auto add = [&](Subgroup H) {
        if (found.insert(H.elems).second) work.push_back(std::move(H));
    };
    add(trivial_subgroup(G));
    for (int g = 0; g < G.n; ++g) add(closure(G, {g}));
    for (size_t i = 0; i < work.size(); ++i) {
        Subgroup H = work[i]; // copy: work may reallocate
        if (H.size() == G.n) continue;
        for (int g = 0; g < G.n; ++g) {
            if (H.contains(g)) continue;
            auto seed = H.elems;
            seed.push_back(g);
            add(closure(G, std::move(seed)));
        }
    }
    std::vector<Subgroup> out(work.begin(), work.end());
    std::sort(out.begin(), out.end());
    return out;
}

inline Subgroup conjugate_subgroup(const Group& G, const Subgroup& H, int g) {
    std::vector<int> el;
    el.reserve(H.elems.size());
    for (int x : H.elems) el.push_back(G.conj(g, x));
    std::sort(el.begin(), el.end());
    return Subgroup{std::move(el)};
}

struct SubgroupClass {
    std::vector<Subgroup> all;  // canonical sorted list of all subgroups
    std::vector<int> class_of;  // aligned with `all`
    std::vector<Subgroup> reps; // lexicographically least member per class

    int num_classes() const { return (int)reps.size(); }

    int class_index(const Subgroup& H) const {
        auto it = std::lower_bound(all.begin(), all.end(), H);
        if (it == all.end() || !(*it == H)) throw Error("class_index: not a subgroup of the table");
        return class_of[it - all.begin()];
    }

    // Labels like "1a", "2a", "2b", ... in canonical class order.
    std::string label(int cls) const {
        int order = reps[cls].size();
        int letter = 0;
        for (int c = 0; c < cls; ++c)
            if (reps[c].size() == order) ++letter;
        return std::to_string(order) + std::string(1, char('a' + letter));
    }

    int class_by_label(const std::string& lab) const {
        for (int c = 0; c < num_classes(); ++c)
            if (label(c) == lab) return c;
        throw Error("unknown subgroup class label: " + lab);
    }
};

inline SubgroupClass conjugacy_classes_of_subgroups(const Group& G, int order_cap = 0) {
    SubgroupClass sc;
    sc.all = all_subgroups(G, order_cap);
    sc.class_of.assign(sc.all.size(), -1);
    auto index_of = [&](const Subgroup& H) {
        auto it = std::lower_bound(sc.all.begin(), sc.all.end(), H);
        return (int)(it - sc.all.begin());
    };
    for (size_t i = 0; i < sc.all.size(); ++i) {
        if (sc.class_of[i] >= 0) continue;
        int cls = (int)sc.reps.size();
        Subgroup least = sc.all[i];
        std::vector<int> members;
        for (int g = 0; g < G.n; ++g) {
            auto C = conjugate_subgroup(G, sc.all[i], g);
            int j = index_of(C);
            if (sc.class_of[j] < 0) {
                sc.class_of[j] = cls;
                members.push_back(j);
            }
            if (C < least) least = C;
        }
        (void)members;
        sc.reps.push_back(std::move(least));
    }
    return sc;
}

inline Subgroup normalizer(const Group& G, const Subgroup& H) {
    std::vector<int> el;
    for (int g = 0; g < G.n; ++g)
        if (conjugate_subgroup(G, H, g) == H) el.push_back(g);
    return Subgroup{std::move(el)};
}

inline Subgroup centralizer(const Group& G, const Subgroup& H) {
    std::vector<int> el;
    for (int g = 0; g < G.n; ++g) {
        bool c = true;
        for (int h : H.elems)
            if (G.op(g, h) != G.op(h, g)) {
                c = false;
                break;
            }
        if (c) el.push_back(g);
    }
    return Subgroup{std::move(el)};
}

// One representative per K-H double coset; reps are the least element of each coset.
inline std::vector<int> double_cosets(const Group& G, const Subgroup& K, const Subgroup& H) {
    std::vector<char> seen(G.n, 0);
    std::vector<int> reps;
    for (int g = 0; g < G.n; ++g) {
        if (seen[g]) continue;
        reps.push_back(g);
        for (int k : K.elems)
            for (int h : H.elems) seen[G.op(G.op(k, g), h)] = 1;
    }
    return reps;
}

// ---------------------------------------------------------------------------
// Homomorphisms

struct GroupHom {
    Group source;
    Group target;
    std::vector<int> image; // image[i] in target, per source element i

    int operator()(int x) const { return image[x]; }
};

inline bool is_hom_image(const Group& S, const Group& T, const std::vector<int>& image) {
    if ((int)image.size() != S.n) return false;
    if (image[S.e] != T.e) return false;
    for (int a = 0; a < S.n; ++a)
        for (int b = 0; b < S.n; ++b)
            if (image[S.op(a, b)] != T.op(image[a], image[b])) return false;
    return true;
}

inline GroupHom make_hom(Group S, Group T, std::vector<int> image) {
    if (!is_hom_image(S, T, image)) throw Error("make_hom: not a homomorphism");
    return GroupHom{std::move(S), std::move(T), std::move(image)};
}

inline GroupHom identity_hom(const Group& G) {
    std::vector<int> im(G.n);
    for (int i = 0; i < G.n; ++i) im[i] = i;
    return GroupHom{G, G, std::move(im)};
}

inline GroupHom compose_hom(const GroupHom& g, const GroupHom& f) {
    // g after f
    std::vector<int> im(f.source.n);
    for (int i = 0; i < f.source.n; ++i) im[i] = g.image[f.image[i]];
    return GroupHom{f.source, g.target, std::move(im)};
}

inline GroupHom conjugation_hom(const Group& G, int g) {
    std::vector<int> im(G.n);
    for (int x = 0; x < G.n; ++x) im[x] = G.conj(g, x);
    return GroupHom{G, G, std::move(im)};
}

inline GroupHom trivial_hom(const Group& S, const Group& T) {
    return GroupHom{S, T, std::vector<int>(S.n, T.e)};
}

namespace detail {
// Greedy generating sequence plus, for every element, a word expressing it:
// expr[x] = {gen index, previous element} with expr[e] = {-1,-1}.
struct GenWords {
    std::vector<int> gens;
    std::vector<std::pair<int, int>> expr;
};

inline GenWords generating_words(const Group& G) {
    GenWords w;
    w.expr.assign(G.n, {-2, -2});
    std::vector<int> have = {G.e};
    w.expr[G.e] = {-1, -1};
    std::vector<char> in(G.n, 0);
    in[G.e] = 1;
    while ((int)have.size() < G.n) {
        int g = -1;
        for (int x = 0; x < G.n; ++x)
            if (!in[x]) {
                g = x;
                break;
            }
        int gi = (int)w.gens.size();
        w.gens.push_back(g);
        // close under right-multiplication by the new generator set
        bool grew = true;
        if (!in[g]) {
            in[g] = 1;
            w.expr[g] = {gi, G.e};
            have.push_back(g);
        }
        while (grew) {
            grew = false;
            for (size_t i = 0; i < have.size(); ++i)
                for (size_t k = 0; k < w.gens.size(); ++k) {
                    int p = G.op(have[i], w.gens[k]);
                    if (!in[p]) {
                        in[p] = 1;
                        w.expr[p] = {(int)k, have[i]};
                        have.push_back(p);
                        grew = true;
                    }
                }
        }
    }
    return w;
}
} // namespace detail

// All homomorphisms K -> G (can be large; desk scale only).
inline std::vector<GroupHom> all_homs(const Group& K, const Group& G) {
    auto words = detail::generating_words(K);
    int ng = (int)words.gens.size();
    std::vector<int> gen_order(ng);
    for (int i = 0; i < ng; ++i) gen_order[i] = K.order_of(words.gens[i]);

    std::vector<GroupHom> out;
    std::vector<int> assign(ng, 0);
    std::vector<int> image(K.n);

    auto build_and_check = [&]() {
        image[K.e] = G.e;
        // fill in BFS order so prerequisites are ready
        std::vector<int> order;
        order.reserve(K.n);
        std::vector<char> done(K.n, 0);
        done[K.e] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int x = 0; x < K.n; ++x) {
                if (done[x]) continue;
                auto [gi, prev] = words.expr[x];
                if (done[prev]) {
                    image[x] = G.op(image[prev], assign[gi]);
                    done[x] = 1;
                    grew = true;
                }
            }
        }
        if (!is_hom_image(K, G, image)) return;
        out.push_back(GroupHom{K, G, image});
    };

    // backtrack over generator images, pruning by element order
    std::vector<int> stackpos(ng, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == ng) {
            build_and_check();
            return;
        }
        for (int t = 0; t < G.n; ++t) {
            if (gen_order[i] % G.order_of(t) != 0) continue;
            assign[i] = t;
            rec(i + 1);
        }
    };
    rec(0);
    // dedupe (distinct assignments can induce equal homs only if gens redundant; keep safe)
    std::sort(out.begin(), out.end(),
              [](const GroupHom& a, const GroupHom& b) { return a.image < b.image; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const GroupHom& a, const GroupHom& b) { return a.image == b.image; }),
              out.end());
    return out;
}

// Lexicographically least image array among post-conjugates c_g . alpha.
inline std::vector<int> canonical_post_conjugate(const Group& G, const std::vector<int>& image) {
    std::vector<int> best = image;
    std::vector<int> cur(image.size());
    for (int g = 0; g < G.n; ++g) {
        for (size_t i = 0; i < image.size(); ++i) cur[i] = G.conj(g, image[i]);
        if (cur < best) best = cur;
    }
    return best;
}

inline std::vector<GroupHom> homs_up_to_conjugacy(const Group& K, const Group& G) {
    auto homs = all_homs(K, G);
    std::set<std::vector<int>> seen;
    std::vector<GroupHom> out;
    for (auto& h : homs) {
        auto canon = canonical_post_conjugate(G, h.image);
        if (seen.insert(canon).second) out.push_back(GroupHom{K, G, canon});
    }
    std::sort(out.begin(), out.end(),
              [](const GroupHom& a, const GroupHom& b) { return a.image < b.image; });
    return out;
}

// ---------------------------------------------------------------------------
// Subgroup models and quotients

struct SubgroupModel {
    Group group;                // abstract Cayley model of H
    std::vector<int> to_parent; // model element -> parent element
    GroupHom embedding;         // model -> parent
};

inline SubgroupModel subgroup_as_group(const Group& G, const Subgroup& H, std::string name = "") {
    int m = H.size();
    std::map<int, int> back;
    for (int i = 0; i < m; ++i) back[H.elems[i]] = i;
    std::vector<int> mul(m * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) mul[a * m + b] = back.at(G.op(H.elems[a], H.elems[b]));
    if (name.empty()) name = G.name + ".sub" + std::to_string(m);
    SubgroupModel sm;
    sm.group = make_group(m, std::move(mul), std::move(name));
    sm.to_parent = H.elems;
    sm.embedding = GroupHom{sm.group, G, H.elems};
    return sm;
}

struct WeylGroup {
    Group group;             // (N_G H)/H as a Cayley table
    SubgroupModel normal;    // model of N_G H
    GroupHom projection;     // normal.group -> group, kernel H
    std::vector<int> coset_reps; // parent elements, one per W element
};

inline WeylGroup weyl_group(const Group& G, const Subgroup& H, std::string name = "") {
    Subgroup N = normalizer(G, H);
    auto nm = subgroup_as_group(G, N, G.name + ".N");
    int m = N.size();
    // cosets nH inside the normalizer model
    std::vector<int> coset_of(m, -1);
    std::vector<int> reps; // model indices
    for (int i = 0; i < m; ++i) {
        if (coset_of[i] >= 0) continue;
        int c = (int)reps.size();
        reps.push_back(i);
        for (int h : H.elems) {
            int p = G.op(nm.to_parent[i], h); // nH in parent coordinates
            auto it = std::lower_bound(N.elems.begin(), N.elems.end(), p);
            coset_of[(int)(it - N.elems.begin())] = c;
        }
    }
    int w = (int)reps.size();
    std::vector<int> mul(w * w);
    for (int a = 0; a < w; ++a)
        for (int b = 0; b < w; ++b) mul[a * w + b] = coset_of[nm.group.op(reps[a], reps[b])];
    WeylGroup wg;
    if (name.empty()) name = "W(" + G.name + ")";
    wg.group = make_group(w, std::move(mul), std::move(name));
    wg.normal = std::move(nm);
    wg.projection = GroupHom{wg.normal.group, wg.group, coset_of};
    for (int r : reps) wg.coset_reps.push_back(wg.normal.to_parent[r]);
    return wg;
}

// ---------------------------------------------------------------------------
// Isomorphism testing (backtracking over generator images)

inline std::optional<GroupHom> find_isomorphism(const Group& A, const Group& B) {
    if (A.n != B.n) return std::nullopt;
    if (A.order_profile() != B.order_profile()) return std::nullopt;
    auto words = detail::generating_words(A);
    int ng = (int)words.gens.size();
    std::vector<int> assign(ng);
    std::vector<int> image(A.n, -1);

    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == ng) {
            image.assign(A.n, -1);
            image[A.e] = B.e;
            bool grew = true;
            while (grew) {
                grew = false;
                for (int x = 0; x < A.n; ++x) {
                    if (image[x] >= 0) continue;
                    auto [gi, prev] = words.expr[x];
                    if (image[prev] >= 0) {
                        image[x] = B.op(image[prev], assign[gi]);
                        grew = true;
                    }
                }
            }
            std::vector<char> hit(B.n, 0);
            for (int x = 0; x < A.n; ++x) {
                if (image[x] < 0 || hit[image[x]]) return false;
                hit[image[x]] = 1;
            }
            return is_hom_image(A, B, image);
        }
        int oa = A.order_of(words.gens[i]);
        for (int t = 0; t < B.n; ++t) {
            if (B.order_of(t) != oa) continue;
            assign[i] = t;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return GroupHom{A, B, image};
}

inline bool isomorphic(const Group& A, const Group& B) { return find_isomorphism(A, B).has_value(); }

// ---------------------------------------------------------------------------
// Bestiary lookup by name (CLI selectors)

inline Group group_by_name(const std::string& name) {
    if (name == "e" || name == "1" || name == "C1") return cyclic_group(1);
    if (name == "S3") return symmetric_group(3);
    if (name == "S4") return symmetric_group(4);
    if (name == "A4") return alternating_group_4();
    if (name == "D4") return dihedral_group(4);
    if (name == "Q8") return quaternion_group_8();
    if (name.size() >= 2 && name[0] == 'C') {
        auto x = name.find('x');
        if (x == std::string::npos) {
            int m = std::stoi(name.substr(1));
            return cyclic_group(m);
        }
        int a = std::stoi(name.substr(1, x - 1));
        int b = std::stoi(name.substr(x + 2));
        return direct_product(cyclic_group(a), cyclic_group(b), name);
    }
    if (name.rfind("file:", 0) == 0) return load_cayley_file(name.substr(5));
    throw Error("unknown group selector: " + name);
}

} // namespace globalk
