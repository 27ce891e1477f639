#pragma once

// A finite slice of the effective Burnside category: a list of groups closed
// under subgroups up to isomorphism, with the canonical (L, alpha) morphism
// basis precomputed for every ordered pair. Functors are tabulated on such a
// window; functoriality is only ever checked within it.

#include <memory>
#include <string>
#include <vector>

#include "biset.hpp"
#include "errors.hpp"
#include "group.hpp"

namespace globalk {

struct SubgroupLink {
    int model = -1;   // window index of a group isomorphic to the subgroup
    GroupHom to_parent; // model group -> parent group, image = the subgroup
};

// Display name for common small groups; falls back to the given name.
inline std::string recognized_name(const Group& G, const std::string& fallback) {
    for (int g = 0; g < G.n; ++g)
        if (G.order_of(g) == G.n) return "C" + std::to_string(G.n);
    if (G.n == 4) return "C2xC2";
    if (G.n == 6 && !G.is_abelian()) return "S3";
    if (G.n == 8 && isomorphic(G, dihedral_group(4))) return "D4";
    if (G.n == 8 && isomorphic(G, quaternion_group_8())) return "Q8";
    return fallback;
}

struct WindowGroup {
    Group group;
    SubgroupClass classes;
    std::vector<SubgroupLink> links; // aligned with classes.reps
};

struct GroupWindow {
    std::vector<WindowGroup> groups;
    // terms[to][from]: canonical (L <= groups[to], alpha: L -> groups[from])
    std::vector<std::vector<std::vector<BisetTerm>>> terms;

    int size() const { return (int)groups.size(); }
    const Group& g(int i) const { return groups[i].group; }

    int find_isomorphic(const Group& G) const {
        for (int i = 0; i < size(); ++i)
            if (isomorphic(groups[i].group, G)) return i;
        return -1;
    }

    int index_by_name(const std::string& name) const {
        for (int i = 0; i < size(); ++i)
            if (groups[i].group.name == name) return i;
        throw WindowMiss("group " + name + " not in window");
    }

    int term_index(int to, int from, const BisetTerm& t) const {
        auto& v = terms[to][from];
        auto it = std::lower_bound(v.begin(), v.end(), t);
        if (it == v.end() || !(*it == t))
            throw WindowMiss("term not in canonical basis of the window pair");
        return (int)(it - v.begin());
    }

    SubgroupModel subgroup_model(int i, int cls) const {
        const auto& link = groups[i].links[cls];
        SubgroupModel sm;
        sm.group = groups[link.model].group;
        sm.to_parent = link.to_parent.image;
        sm.embedding = link.to_parent;
        return sm;
    }

    // Class of _alpha G_G in A+(from, to); alpha : groups[to] -> groups[from].
    BisetClass restriction_class(int to, int from, const GroupHom& alpha) const {
        if (alpha.source.n != g(to).n || alpha.target.n != g(from).n)
            throw GroupMismatch("restriction_class: homomorphism does not match pair");
        return classify(g(to), g(from), groups[to].classes, restriction_biset(alpha));
    }

    // Class of _G G_H in A+(model(H), i) for subgroup class cls of groups[i].
    BisetClass transfer_class(int i, int cls) const {
        auto sm = subgroup_model(i, cls);
        return classify(g(i), sm.group, groups[i].classes, transfer_biset_data(g(i), sm));
    }

    BisetClass identity_class(int i) const {
        return classify(g(i), g(i), groups[i].classes, identity_biset(g(i)));
    }

    // Compose two classes with realize + balanced product + classify.
    BisetClass compose_classes(int to, int mid, int from, const BisetClass& T,
                               const BisetClass& S) const {
        auto Tb = realize_biset_class(g(to), g(mid), T);
        auto Sb = realize_biset_class(g(mid), g(from), S);
        auto C = balanced_product(g(to), g(mid), g(from), Tb, Sb);
        return classify(g(to), g(from), groups[to].classes, C);
    }
};

// Close the requested groups under subgroups up to isomorphism and precompute
// the canonical morphism basis for every ordered pair.
inline std::shared_ptr<const GroupWindow> build_window(std::vector<Group> requested,
                                                       int order_cap = 0) {
    auto W = std::make_shared<GroupWindow>();
    auto& groups = W->groups;

    auto add_group = [&](Group G) -> int {
        int found = W->find_isomorphic(G);
        if (found >= 0) return found;
        WindowGroup wg;
        wg.group = std::move(G);
        wg.group.name = recognized_name(wg.group, wg.group.name);
        // dedupe display names
        int copy = 0;
        for (auto& other : groups)
            if (other.group.name == wg.group.name) ++copy;
        if (copy > 0) wg.group.name += "'" + std::to_string(copy);
        wg.classes = conjugacy_classes_of_subgroups(wg.group, order_cap);
        groups.push_back(std::move(wg));
        return (int)groups.size() - 1;
    };

    for (auto& G : requested) add_group(std::move(G));

    // close under subgroup models (new groups are processed too)
    for (size_t i = 0; i < groups.size(); ++i) {
        auto classes = groups[i].classes; // copy: groups may reallocate
        for (int c = 0; c < classes.num_classes(); ++c) {
            auto sm = subgroup_as_group(groups[i].group, classes.reps[c]);
            int model = add_group(sm.group);
            auto iso = find_isomorphism(groups[model].group, sm.group);
            if (!iso) throw Error("build_window: lost isomorphism");
            // window model -> parent, image = subgroup
            std::vector<int> im(groups[model].group.n);
            for (int x = 0; x < groups[model].group.n; ++x) im[x] = sm.to_parent[iso->image[x]];
            groups[i].links.push_back(
                SubgroupLink{model, GroupHom{groups[model].group, groups[i].group, std::move(im)}});
        }
    }

    W->terms.resize(groups.size());
    for (size_t to = 0; to < groups.size(); ++to) {
        W->terms[to].resize(groups.size());
        for (size_t from = 0; from < groups.size(); ++from)
            W->terms[to][from] =
                canonical_terms(groups[to].group, groups[from].group, groups[to].classes);
    }
    return W;
}

inline std::shared_ptr<const GroupWindow> build_window_by_names(
    const std::vector<std::string>& names, int order_cap = 0) {
    std::vector<Group> gs;
    for (auto& n : names) gs.push_back(group_by_name(n));
    return build_window(std::move(gs), order_cap);
}

} // namespace globalk
