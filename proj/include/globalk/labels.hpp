#pragma once

// Labels are points of the countable set omega = {0,1,2,...}; windows are the
// finite pieces of it that enumeration touches. Injections are arbitrary
// injective self-maps of omega, evaluated lazily on finite supports; a
// G-window lays out copies of the coset spaces G/H inside omega so that the
// G-action and equivariant relocations are label formulas.

#include <functional>
#include <map>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "gset.hpp"

namespace globalk {

class Injection {
    std::function<int(int)> fn_;

public:
    Injection() : fn_([](int l) { return l; }) {}
    explicit Injection(std::function<int(int)> f) : fn_(std::move(f)) {}

    int operator()(int l) const {
        int v = fn_(l);
        if (v < 0) throw Error("injection: label out of domain");
        return v;
    }

    // image of a sorted label set; validates injectivity on it
    std::vector<int> map_set(const std::vector<int>& labels) const {
        std::vector<int> out;
        out.reserve(labels.size());
        for (int l : labels) out.push_back((*this)(l));
        std::sort(out.begin(), out.end());
        for (size_t i = 1; i < out.size(); ++i)
            if (out[i] == out[i - 1]) throw Error("injection: not injective on support");
        return out;
    }

    static Injection identity() { return Injection(); }

    static Injection stride(int k, int r) {
        return Injection([k, r](int l) { return k * l + r; });
    }

    static Injection table(std::map<int, int> t) {
        return Injection([t = std::move(t)](int l) {
            auto it = t.find(l);
            if (it == t.end()) throw Error("injection table: label outside domain");
            return it->second;
        });
    }

    // outer after inner
    static Injection compose(Injection outer, Injection inner) {
        return Injection(
            [o = std::move(outer), i = std::move(inner)](int l) { return o(i(l)); });
    }
};

// Finite windows are plain sorted label vectors.
inline std::vector<int> iota_labels(int n, int base = 0) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = base + i;
    return v;
}

// A G-window: omega laid out as infinitely many copies of the disjoint union
// of all coset spaces G/H (one per subgroup conjugacy class). Copy c of the
// block occupies labels [c*block, (c+1)*block).
struct GWindow {
    Group G;
    SubgroupClass classes;
    std::vector<GSet> orbits;      // coset_gset per class
    std::vector<int> orbit_offset; // within a block
    int block = 1;
    std::vector<int> gens; // generating set of G, for fixed-point tests

    struct Loc {
        int cls, copy, point;
    };

    Loc locate(int label) const {
        int copy = label / block, off = label % block;
        int cls = (int)orbit_offset.size() - 1;
        while (orbit_offset[cls] > off) --cls;
        return Loc{cls, copy, off - orbit_offset[cls]};
    }

    int label(int cls, int copy, int point) const {
        return copy * block + orbit_offset[cls] + point;
    }

    int act(int g, int l) const {
        auto loc = locate(l);
        return label(loc.cls, loc.copy, orbits[loc.cls].apply(g, loc.point));
    }

    Injection action(int g) const {
        return Injection([this, g](int l) { return act(g, l); });
    }

    // Equivariant relocation: copy c goes to base + c (per class).
    Injection copy_shift(int base) const {
        return Injection([this, base](int l) {
            auto loc = locate(l);
            return label(loc.cls, base + loc.copy, loc.point);
        });
    }

    std::vector<int> orbit_labels(int cls, int copy) const {
        std::vector<int> out;
        for (int p = 0; p < orbits[cls].points; ++p) out.push_back(label(cls, copy, p));
        return out;
    }

    // Labels of the first k_cls copies of each class orbit.
    std::vector<int> prefix_labels(const std::vector<int>& type_vector) const {
        std::vector<int> out;
        for (int cls = 0; cls < (int)type_vector.size(); ++cls)
            for (int c = 0; c < type_vector[cls]; ++c) {
                auto ol = orbit_labels(cls, c);
                out.insert(out.end(), ol.begin(), ol.end());
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Orbits (cls, copy) touched by a sorted label set.
    std::vector<std::pair<int, int>> touched_orbits(const std::vector<int>& labels) const {
        std::vector<std::pair<int, int>> out;
        for (int l : labels) {
            auto loc = locate(l);
            std::pair<int, int> key{loc.cls, loc.copy};
            if (out.empty() || !(out.back() == key)) {
                bool dup = false;
                for (auto& k : out)
                    if (k == key) dup = true;
                if (!dup) out.push_back(key);
            }
        }
        return out;
    }
};

inline GWindow build_gwindow(Group G) {
    GWindow w;
    w.classes = conjugacy_classes_of_subgroups(G);
    w.block = 0;
    for (int c = 0; c < w.classes.num_classes(); ++c) {
        w.orbit_offset.push_back(w.block);
        w.orbits.push_back(coset_gset(G, w.classes.reps[c]));
        w.block += w.orbits.back().points;
    }
    w.gens = detail::generating_words(G).gens;
    if (w.gens.empty()) w.gens.push_back(G.e);
    w.G = std::move(G);
    return w;
}

} // namespace globalk
