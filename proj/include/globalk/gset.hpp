#pragma once

// Finite G-sets as explicit action tables: orbits, stabilizers, transitive
// decomposition (a complete isomorphism invariant), marks and the table of
// marks, restriction along homomorphisms, induction, isotypical parts.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "errors.hpp"
#include "group.hpp"

namespace globalk {

struct GSet {
    int points = 0;
    std::vector<int> act; // act[g*points + p], g a group element index

    int apply(int g, int p) const { return act[g * points + p]; }
};

inline GSet make_gset(const Group& G, int points, std::vector<int> act, int point_cap = 0) {
    if (point_cap == 0) point_cap = caps().gset_points;
    if (points > point_cap)
        throw OrderCapExceeded("gset on " + std::to_string(points) + " points > cap " +
                               std::to_string(point_cap));
    if ((int)act.size() != G.n * points) throw Error("make_gset: bad table size");
    GSet X{points, std::move(act)};
    for (int p = 0; p < points; ++p)
        if (X.apply(G.e, p) != p) throw Error("make_gset: identity acts nontrivially");
    for (int g = 0; g < G.n; ++g) {
        std::vector<char> hit(points, 0);
        for (int p = 0; p < points; ++p) {
            int q = X.apply(g, p);
            if (q < 0 || q >= points || hit[q]) throw Error("make_gset: action not bijective");
            hit[q] = 1;
        }
        for (int h = 0; h < G.n; ++h)
            for (int p = 0; p < points; ++p)
                if (X.apply(G.op(g, h), p) != X.apply(g, X.apply(h, p)))
                    throw Error("make_gset: not a group action");
    }
    return X;
}

inline GSet empty_gset(const Group& G) { return GSet{0, {}}; }

inline GSet trivial_gset(const Group& G, int points) {
    std::vector<int> act(G.n * points);
    for (int g = 0; g < G.n; ++g)
        for (int p = 0; p < points; ++p) act[g * points + p] = p;
    return GSet{points, std::move(act)};
}

// G/H with points indexed by sorted least coset representatives.
inline GSet coset_gset(const Group& G, const Subgroup& H) {
    std::vector<int> coset_of(G.n, -1);
    std::vector<int> reps;
    for (int g = 0; g < G.n; ++g) {
        if (coset_of[g] >= 0) continue;
        int c = (int)reps.size();
        reps.push_back(g);
        for (int h : H.elems) coset_of[G.op(g, h)] = c;
    }
    int m = (int)reps.size();
    std::vector<int> act(G.n * m);
    for (int g = 0; g < G.n; ++g)
        for (int c = 0; c < m; ++c) act[g * m + c] = coset_of[G.op(g, reps[c])];
    return GSet{m, std::move(act)};
}

inline GSet regular_gset(const Group& G) { return coset_gset(G, trivial_subgroup(G)); }

inline GSet disjoint_union(const Group& G, const GSet& X, const GSet& Y) {
    int m = X.points + Y.points;
    std::vector<int> act(G.n * m);
    for (int g = 0; g < G.n; ++g) {
        for (int p = 0; p < X.points; ++p) act[g * m + p] = X.apply(g, p);
        for (int p = 0; p < Y.points; ++p) act[g * m + X.points + p] = X.points + Y.apply(g, p);
    }
    return GSet{m, std::move(act)};
}

inline GSet cartesian_product(const Group& G, const GSet& X, const GSet& Y) {
    int m = X.points * Y.points;
    std::vector<int> act(G.n * m);
    for (int g = 0; g < G.n; ++g)
        for (int p = 0; p < X.points; ++p)
            for (int q = 0; q < Y.points; ++q)
                act[g * m + p * Y.points + q] = X.apply(g, p) * Y.points + Y.apply(g, q);
    return make_gset(G, m, std::move(act), m + 1);
}

// Relabel points by a permutation: new point perm[p] plays the role of p.
inline GSet shuffle_points(const Group& G, const GSet& X, const std::vector<int>& perm) {
    std::vector<int> act(G.n * X.points);
    for (int g = 0; g < G.n; ++g)
        for (int p = 0; p < X.points; ++p) act[g * X.points + perm[p]] = perm[X.apply(g, p)];
    return GSet{X.points, std::move(act)};
}

struct OrbitData {
    std::vector<int> points;
    Subgroup stabilizer; // exact stabilizer of the least point
};

inline std::vector<OrbitData> orbits_and_stabilizers(const Group& G, const GSet& X) {
    std::vector<OrbitData> out;
    std::vector<char> seen(X.points, 0);
    for (int p = 0; p < X.points; ++p) {
        if (seen[p]) continue;
        OrbitData od;
        std::set<int> orbit;
        std::vector<int> stab;
        for (int g = 0; g < G.n; ++g) {
            int q = X.apply(g, p);
            orbit.insert(q);
            if (q == p) stab.push_back(g);
        }
        od.points.assign(orbit.begin(), orbit.end());
        for (int q : od.points) seen[q] = 1;
        od.stabilizer = Subgroup{std::move(stab)};
        out.push_back(std::move(od));
    }
    return out;
}

// Isomorphism class of a finite G-set: multiplicity per subgroup conjugacy class.
struct GSetClass {
    std::map<int, int> mult; // class index -> multiplicity (> 0 entries only)

    bool operator==(const GSetClass& o) const { return mult == o.mult; }
    bool operator<(const GSetClass& o) const { return mult < o.mult; }

    GSetClass& operator+=(const GSetClass& o) {
        for (auto& [c, k] : o.mult) mult[c] += k;
        return *this;
    }
    friend GSetClass operator+(GSetClass a, const GSetClass& b) { return a += b; }

    int total_points(const SubgroupClass& sc, const Group& G) const {
        int t = 0;
        for (auto& [c, k] : mult) t += k * (G.n / sc.reps[c].size());
        return t;
    }
};

inline GSetClass decompose(const Group& G, const SubgroupClass& sc, const GSet& X) {
    GSetClass cl;
    for (auto& od : orbits_and_stabilizers(G, X)) cl.mult[sc.class_index(od.stabilizer)] += 1;
    return cl;
}

inline int marks(const Group& G, const GSet& X, const Subgroup& H) {
    int c = 0;
    for (int p = 0; p < X.points; ++p) {
        bool fixed = true;
        for (int h : H.elems)
            if (X.apply(h, p) != p) {
                fixed = false;
                break;
            }
        if (fixed) ++c;
    }
    return c;
}

// Rows: transitive G/K over class reps K; columns: class reps H; entry |(G/K)^H|.
// Lower triangular in the canonical class order (by subgroup order, then lex).
inline std::vector<std::vector<int>> table_of_marks(const Group& G, const SubgroupClass& sc) {
    int m = sc.num_classes();
    std::vector<std::vector<int>> t(m, std::vector<int>(m, 0));
    for (int r = 0; r < m; ++r) {
        auto X = coset_gset(G, sc.reps[r]);
        for (int c = 0; c < m; ++c) t[r][c] = marks(G, X, sc.reps[c]);
    }
    return t;
}

inline GSet restrict_along(const GroupHom& alpha, const GSet& X) {
    const Group& K = alpha.source;
    std::vector<int> act(K.n * X.points);
    for (int k = 0; k < K.n; ++k)
        for (int p = 0; p < X.points; ++p) act[k * X.points + p] = X.apply(alpha.image[k], p);
    return GSet{X.points, std::move(act)};
}

// G x_H Y for the subgroup model H of G; Y is a GSet over H.group.
inline GSet induce(const Group& G, const SubgroupModel& H, const GSet& Y) {
    std::vector<int> coset_of(G.n, -1), rep_list;
    for (int g = 0; g < G.n; ++g) {
        if (coset_of[g] >= 0) continue;
        int c = (int)rep_list.size();
        rep_list.push_back(g);
        for (int h : H.to_parent) coset_of[G.op(g, h)] = c;
    }
    std::map<int, int> to_model;
    for (int i = 0; i < (int)H.to_parent.size(); ++i) to_model[H.to_parent[i]] = i;
    int nc = (int)rep_list.size();
    int m = nc * Y.points;
    std::vector<int> act(G.n * m);
    for (int g = 0; g < G.n; ++g)
        for (int c = 0; c < nc; ++c) {
            int p = G.op(g, rep_list[c]);
            int j = coset_of[p];
            int h = G.op(G.inv[rep_list[j]], p);
            int hm = to_model.at(h);
            for (int y = 0; y < Y.points; ++y)
                act[g * m + c * Y.points + y] = j * Y.points + Y.apply(hm, y);
        }
    return GSet{m, std::move(act)};
}

// The G-invariant set of points whose stabilizer lies in the given class.
inline GSet isotypical_part(const Group& G, const SubgroupClass& sc, const GSet& X, int cls) {
    std::vector<int> keep;
    for (auto& od : orbits_and_stabilizers(G, X))
        if (sc.class_index(od.stabilizer) == cls)
            keep.insert(keep.end(), od.points.begin(), od.points.end());
    std::sort(keep.begin(), keep.end());
    std::map<int, int> idx;
    for (int i = 0; i < (int)keep.size(); ++i) idx[keep[i]] = i;
    int m = (int)keep.size();
    std::vector<int> act(G.n * m);
    for (int g = 0; g < G.n; ++g)
        for (int i = 0; i < m; ++i) act[g * m + i] = idx.at(X.apply(g, keep[i]));
    return GSet{m, std::move(act)};
}

// Realize a class as a concrete disjoint union of coset G-sets.
inline GSet realize_class(const Group& G, const SubgroupClass& sc, const GSetClass& cl) {
    GSet X = empty_gset(G);
    for (auto& [c, k] : cl.mult)
        for (int i = 0; i < k; ++i) X = disjoint_union(G, X, coset_gset(G, sc.reps[c]));
    return X;
}

} // namespace globalk
