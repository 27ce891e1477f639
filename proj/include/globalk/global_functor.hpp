#pragma once

// Pre-global and global functors tabulated on a group window. Values are free
// commutative monoids (resp. free abelian groups) on named atoms; operations
// are matrices per canonical biset term. The free functor A_G, the finite
// (K x G)-set functor B_G, axiom verification, group completion, represented
// morphisms, and isomorphism search between functors.

#include <random>
#include <sstream>

#include "window.hpp"

namespace globalk {

using Vec = std::vector<long long>;
using Matrix = std::vector<Vec>; // [target atom][source atom]

inline Matrix zero_matrix(int rows, int cols) { return Matrix(rows, Vec(cols, 0)); }

inline Matrix identity_matrix(int n) {
    auto m = zero_matrix(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    int r = (int)a.size(), k = r ? (int)a[0].size() : 0, c = b.empty() ? 0 : (int)b[0].size();
    if (r && (int)b.size() != k) throw Error("matmul: dimension mismatch");
    auto out = zero_matrix(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (int l = 0; l < c; ++l) out[i][l] += a[i][j] * b[j][l];
        }
    return out;
}

inline Matrix matadd(Matrix a, const Matrix& b, long long mult = 1) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) a[i][j] += mult * b[i][j];
    return a;
}

inline Vec matvec(const Matrix& m, const Vec& x) {
    Vec out(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) out[i] += m[i][j] * x[j];
    return out;
}

struct GlobalFunctor {
    std::shared_ptr<const GroupWindow> window;
    bool integral = false; // pre-global functors carry nonnegative coefficients
    std::string name;
    std::vector<std::vector<std::string>> atoms; // per window group
    std::vector<std::vector<std::vector<Matrix>>> ops; // [to][from][term]

    int rank(int i) const { return (int)atoms[i].size(); }

    const Matrix& term_matrix(int to, int from, int t) const { return ops[to][from][t]; }

    Matrix class_matrix(int to, int from, const BisetClass& S) const {
        auto m = zero_matrix(rank(to), rank(from));
        for (auto& [t, mult] : S.terms)
            m = matadd(std::move(m), term_matrix(to, from, window->term_index(to, from, t)), mult);
        return m;
    }

    Vec apply(int to, int from, const BisetClass& S, const Vec& x) const {
        return matvec(class_matrix(to, from, S), x);
    }
};

// Incremental builder; all term matrices must be supplied.
struct FunctorBuilder {
    GlobalFunctor f;

    explicit FunctorBuilder(std::shared_ptr<const GroupWindow> w, std::string name,
                            bool integral) {
        f.window = std::move(w);
        f.name = std::move(name);
        f.integral = integral;
        int n = f.window->size();
        f.atoms.resize(n);
        f.ops.assign(n, std::vector<std::vector<Matrix>>(n));
        for (int to = 0; to < n; ++to)
            for (int from = 0; from < n; ++from)
                f.ops[to][from].resize(f.window->terms[to][from].size());
    }

    void set_atoms(int i, std::vector<std::string> names) { f.atoms[i] = std::move(names); }

    void set_op(int to, int from, int term, Matrix m) {
        if ((int)m.size() != f.rank(to) || (f.rank(to) > 0 && (int)m[0].size() != f.rank(from)))
            throw Error("set_op: matrix shape mismatch");
        f.ops[to][from][term] = std::move(m);
    }

    GlobalFunctor finish() {
        for (int to = 0; to < f.window->size(); ++to)
            for (int from = 0; from < f.window->size(); ++from)
                for (size_t t = 0; t < f.ops[to][from].size(); ++t) {
                    auto& m = f.ops[to][from][t];
                    if ((int)m.size() != f.rank(to)) throw Error("finish: missing op matrix");
                    if (!f.integral)
                        for (auto& row : m)
                            for (auto v : row)
                                if (v < 0) throw Error("finish: negative coefficient in monoid");
                }
        return std::move(f);
    }
};

// ---------------------------------------------------------------------------
// Distinguished functors

inline std::string term_label(const BisetTerm& t) {
    std::ostringstream os;
    os << "(L={";
    for (size_t i = 0; i < t.L.size(); ++i) os << (i ? "," : "") << t.L[i];
    os << "},a=[";
    for (size_t i = 0; i < t.alpha.size(); ++i) os << (i ? "," : "") << t.alpha[i];
    os << "])";
    return os.str();
}

// The free functor represented by window group g: A_G(K) is free on the
// canonical terms of the pair (G -> K); operations act by biset composition.
inline GlobalFunctor free_functor_A(std::shared_ptr<const GroupWindow> window, int g,
                                    bool integral = true) {
    FunctorBuilder b(window, "A_" + window->g(g).name, integral);
    auto& W = *window;
    for (int i = 0; i < W.size(); ++i) {
        std::vector<std::string> names;
        for (auto& t : W.terms[i][g]) names.push_back(term_label(t));
        b.set_atoms(i, std::move(names));
    }
    for (int to = 0; to < W.size(); ++to)
        for (int from = 0; from < W.size(); ++from)
            for (size_t t = 0; t < W.terms[to][from].size(); ++t) {
                auto T = realize_term(W.g(to), W.g(from), W.terms[to][from][t]);
                auto m = zero_matrix((int)W.terms[to][g].size(), (int)W.terms[from][g].size());
                for (size_t s = 0; s < W.terms[from][g].size(); ++s) {
                    auto S = realize_term(W.g(from), W.g(g), W.terms[from][g][s]);
                    auto C = balanced_product(W.g(to), W.g(from), W.g(g), T, S);
                    auto cl = classify(W.g(to), W.g(g), W.groups[to].classes, C);
                    for (auto& [term, mult] : cl.terms) m[W.term_index(to, g, term)][s] += mult;
                }
                b.set_op(to, from, (int)t, std::move(m));
            }
    return b.finish();
}

// B_G: Grothendieck group of finite (K x G)-sets; restrictions restrict the
// action, transfers induce it up.
inline GlobalFunctor burnside_functor_B(std::shared_ptr<const GroupWindow> window,
                                        const Group& Gamma, bool integral = true) {
    auto& W = *window;
    FunctorBuilder b(window, "B_" + Gamma.name, integral);
    std::vector<Group> prod;
    std::vector<SubgroupClass> prod_classes;
    for (int i = 0; i < W.size(); ++i) {
        prod.push_back(direct_product(W.g(i), Gamma));
        prod_classes.push_back(conjugacy_classes_of_subgroups(prod[i], prod[i].n));
        std::vector<std::string> names;
        for (int c = 0; c < prod_classes[i].num_classes(); ++c)
            names.push_back("[" + prod[i].name + "/" + prod_classes[i].label(c) + "]");
        b.set_atoms(i, std::move(names));
    }
    for (int to = 0; to < W.size(); ++to)
        for (int from = 0; from < W.size(); ++from)
            for (size_t t = 0; t < W.terms[to][from].size(); ++t) {
                const auto& term = W.terms[to][from][t];
                // L <= K_to with alpha : L -> G_from, both on sorted L elements
                Subgroup L{term.L};
                auto lm = subgroup_as_group(W.g(to), L);
                auto LxGamma = direct_product(lm.group, Gamma);
                // restriction along (alpha x id) : L x Gamma -> G_from x Gamma
                std::vector<int> im(LxGamma.n);
                for (int l = 0; l < lm.group.n; ++l)
                    for (int ga = 0; ga < Gamma.n; ++ga)
                        im[product_index(lm.group, Gamma, l, ga)] =
                            product_index(W.g(from), Gamma, term.alpha[l], ga);
                auto alphaxid = make_hom(LxGamma, prod[from], im);
                // model of L x Gamma inside K_to x Gamma (same table as LxGamma)
                std::vector<int> sub;
                for (int l : term.L)
                    for (int ga = 0; ga < Gamma.n; ++ga)
                        sub.push_back(product_index(W.g(to), Gamma, l, ga));
                std::sort(sub.begin(), sub.end());
                auto sm = subgroup_as_group(prod[to], Subgroup{sub});
                if (!(sm.group.mul == LxGamma.mul))
                    throw Error("burnside_functor_B: model tables disagree");
                auto m = zero_matrix(b.f.rank(to), b.f.rank(from));
                for (int J = 0; J < prod_classes[from].num_classes(); ++J) {
                    auto X = coset_gset(prod[from], prod_classes[from].reps[J]);
                    auto down = restrict_along(alphaxid, X);
                    auto up = induce(prod[to], sm, down);
                    auto cl = decompose(prod[to], prod_classes[to], up);
                    for (auto& [c, k] : cl.mult) m[c][J] += k;
                }
                b.set_op(to, from, (int)t, std::move(m));
            }
    return b.finish();
}

// Constant functor: rank one everywhere, res = id, tr_L^K = [K:L].
inline GlobalFunctor constant_functor(std::shared_ptr<const GroupWindow> window,
                                      bool integral = true) {
    auto& W = *window;
    FunctorBuilder b(window, "const", integral);
    for (int i = 0; i < W.size(); ++i) b.set_atoms(i, {"1"});
    for (int to = 0; to < W.size(); ++to)
        for (int from = 0; from < W.size(); ++from)
            for (size_t t = 0; t < W.terms[to][from].size(); ++t) {
                long long index = W.g(to).n / (long long)W.terms[to][from][t].L.size();
                b.set_op(to, from, (int)t, Matrix{{index}});
            }
    return b.finish();
}

inline GlobalFunctor direct_sum(const std::vector<const GlobalFunctor*>& parts,
                                std::string name = "sum") {
    if (parts.empty()) throw Error("direct_sum: empty");
    auto window = parts[0]->window;
    for (auto* p : parts)
        if (p->window != window) throw GroupMismatch("direct_sum: windows differ");
    FunctorBuilder b(window, std::move(name), parts[0]->integral);
    auto& W = *window;
    for (int i = 0; i < W.size(); ++i) {
        std::vector<std::string> names;
        for (size_t k = 0; k < parts.size(); ++k)
            for (auto& a : parts[k]->atoms[i]) names.push_back("s" + std::to_string(k) + "." + a);
        b.set_atoms(i, std::move(names));
    }
    for (int to = 0; to < W.size(); ++to)
        for (int from = 0; from < W.size(); ++from)
            for (size_t t = 0; t < W.terms[to][from].size(); ++t) {
                auto m = zero_matrix(b.f.rank(to), b.f.rank(from));
                int ro = 0, co = 0;
                for (auto* p : parts) {
                    auto& pm = p->ops[to][from][t];
                    for (size_t r = 0; r < pm.size(); ++r)
                        for (size_t c = 0; c < pm[r].size(); ++c) m[ro + r][co + c] = pm[r][c];
                    ro += p->rank(to);
                    co += p->rank(from);
                }
                b.set_op(to, from, (int)t, std::move(m));
            }
    return b.finish();
}

// ---------------------------------------------------------------------------
// Axiom verification

struct AxiomCheck {
    std::string axiom;
    std::string context;
    bool pass;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int failures() const {
        int f = 0;
        for (auto& c : checks)
            if (!c.pass) ++f;
        return f;
    }
};

// Every check is an exact matrix identity. Composition sweeps are capped by
// max_compositions per ordered triple of window groups (deterministic prefix).
inline AxiomReport verify_axioms(const GlobalFunctor& M, int max_compositions = 64,
                                 unsigned seed = 1) {
    AxiomReport rep;
    auto& W = *M.window;
    int n = W.size();

    // identity terms act as the identity
    for (int i = 0; i < n; ++i) {
        auto m = M.class_matrix(i, i, W.identity_class(i));
        rep.checks.push_back({"identity", W.g(i).name, m == identity_matrix(M.rank(i))});
    }

    // restriction along inner automorphisms is the identity
    for (int i = 0; i < n; ++i)
        for (int g = 0; g < W.g(i).n; ++g) {
            auto m = M.class_matrix(i, i, W.restriction_class(i, i, conjugation_hom(W.g(i), g)));
            if (m == identity_matrix(M.rank(i))) continue;
            rep.checks.push_back({"inner-automorphism", W.g(i).name, false});
        }
    rep.checks.push_back({"inner-automorphism", "all window groups", true});

    // composition: M[T o S] = M[T] . M[S]
    for (int to = 0; to < n; ++to)
        for (int mid = 0; mid < n; ++mid)
            for (int from = 0; from < n; ++from) {
                int budget = max_compositions;
                bool ok = true;
                for (auto& T : W.terms[to][mid]) {
                    for (auto& S : W.terms[mid][from]) {
                        if (budget-- <= 0) break;
                        BisetClass Tc, Sc;
                        Tc.terms[T] = 1;
                        Sc.terms[S] = 1;
                        auto composite = W.compose_classes(to, mid, from, Tc, Sc);
                        auto lhs = M.class_matrix(to, from, composite);
                        auto rhs =
                            matmul(M.class_matrix(to, mid, Tc), M.class_matrix(mid, from, Sc));
                        if (lhs != rhs) ok = false;
                    }
                    if (budget <= 0) break;
                }
                rep.checks.push_back({"composition",
                                      W.g(to).name + "<-" + W.g(mid).name + "<-" + W.g(from).name,
                                      ok});
            }

    // additivity on random pairs of classes
    std::mt19937 rng(seed);
    for (int to = 0; to < n; ++to)
        for (int from = 0; from < n; ++from) {
            auto& terms = W.terms[to][from];
            if (terms.empty()) continue;
            bool ok = true;
            for (int trial = 0; trial < 4; ++trial) {
                std::uniform_int_distribution<int> pick(0, (int)terms.size() - 1);
                BisetClass a, bcl;
                a.terms[terms[pick(rng)]] += 1;
                a.terms[terms[pick(rng)]] += 1;
                bcl.terms[terms[pick(rng)]] += 1;
                auto lhs = M.class_matrix(to, from, a + bcl);
                auto rhs = matadd(M.class_matrix(to, from, a), M.class_matrix(to, from, bcl));
                if (lhs != rhs) ok = false;
            }
            rep.checks.push_back(
                {"additivity", W.g(to).name + "<-" + W.g(from).name, ok});
        }

    // transfer transitivity: tr_H^G o tr_K^H = tr_K^G with consistent embeddings
    for (int i = 0; i < n; ++i) {
        auto& wg = W.groups[i];
        bool ok = true;
        for (int cH = 0; cH < wg.classes.num_classes(); ++cH) {
            int h = wg.links[cH].model;
            auto& eta_H = wg.links[cH].to_parent; // model H -> G
            for (int cK = 0; cK < W.groups[h].classes.num_classes(); ++cK) {
                int k = W.groups[h].links[cK].model;
                auto& eta_KH = W.groups[h].links[cK].to_parent; // model K -> model H
                // embedding model K -> G through H
                std::vector<int> im(W.g(k).n);
                for (int x = 0; x < W.g(k).n; ++x) im[x] = eta_H.image[eta_KH.image[x]];
                SubgroupModel km;
                km.group = W.g(k);
                km.to_parent = im;
                km.embedding = GroupHom{W.g(k), W.g(i), im};
                auto direct = classify(W.g(i), W.g(k), wg.classes,
                                       transfer_biset_data(W.g(i), km));
                auto lhs = matmul(M.class_matrix(i, h, W.transfer_class(i, cH)),
                                  M.class_matrix(h, k, W.transfer_class(h, cK)));
                auto rhs = M.class_matrix(i, k, direct);
                if (lhs != rhs) ok = false;
            }
        }
        rep.checks.push_back({"transfer-transitivity", W.g(i).name, ok});
    }

    // double coset formula for every pair of subgroup classes of every group
    for (int i = 0; i < n; ++i) {
        auto& wg = W.groups[i];
        const Group& G = W.g(i);
        bool ok = true;
        for (int cK = 0; cK < wg.classes.num_classes(); ++cK)
            for (int cH = 0; cH < wg.classes.num_classes(); ++cH) {
                const Subgroup& K = wg.classes.reps[cK];
                const Subgroup& H = wg.classes.reps[cH];
                int kw = wg.links[cK].model, hw = wg.links[cH].model;
                auto& eta_K = wg.links[cK].to_parent;
                auto& eta_H = wg.links[cH].to_parent;
                auto lhs = matmul(M.class_matrix(kw, i, W.restriction_class(kw, i, eta_K)),
                                  M.class_matrix(i, hw, W.transfer_class(i, cH)));
                auto rhs = zero_matrix(M.rank(kw), M.rank(hw));
                std::map<int, int> etaK_inv;
                for (int x = 0; x < W.g(kw).n; ++x) etaK_inv[eta_K.image[x]] = x;
                std::map<int, int> etaH_inv;
                for (int x = 0; x < W.g(hw).n; ++x) etaH_inv[eta_H.image[x]] = x;
                for (int g : double_cosets(G, K, H)) {
                    // D = K cap gHg^-1, as a subgroup of the K-model
                    std::vector<int> dk;
                    for (int x : K.elems)
                        if (H.contains(G.conj(G.inv[g], x))) dk.push_back(etaK_inv.at(x));
                    std::sort(dk.begin(), dk.end());
                    int cD = W.groups[kw].classes.class_index(Subgroup{dk});
                    // move the class rep back to the concrete D by a transporter
                    const Subgroup& Drep = W.groups[kw].classes.reps[cD];
                    int transporter = -1;
                    for (int t = 0; t < W.g(kw).n; ++t)
                        if (conjugate_subgroup(W.g(kw), Drep, t) == Subgroup{dk}) {
                            transporter = t;
                            break;
                        }
                    int dwin = W.groups[kw].links[cD].model;
                    auto& eta_D = W.groups[kw].links[cD].to_parent; // model D -> K-model, image Drep
                    // embedding model D -> K-model with image dk (compose with transporter)
                    std::vector<int> imD(W.g(dwin).n);
                    for (int x = 0; x < W.g(dwin).n; ++x)
                        imD[x] = W.g(kw).conj(transporter, eta_D.image[x]);
                    SubgroupModel dm;
                    dm.group = W.g(dwin);
                    dm.to_parent = imD;
                    dm.embedding = GroupHom{W.g(dwin), W.g(kw), imD};
                    auto tr_part = classify(W.g(kw), W.g(dwin), W.groups[kw].classes,
                                            transfer_biset_data(W.g(kw), dm));
                    // conjugation-restriction model D -> model H: d -> g^-1 eta(d) g
                    std::vector<int> imB(W.g(dwin).n);
                    for (int x = 0; x < W.g(dwin).n; ++x)
                        imB[x] = etaH_inv.at(G.conj(G.inv[g], eta_K.image[imD[x]]));
                    auto beta = make_hom(W.g(dwin), W.g(hw), imB);
                    auto res_part = W.restriction_class(dwin, hw, beta);
                    rhs = matadd(std::move(rhs),
                                 matmul(M.class_matrix(kw, dwin, tr_part),
                                        M.class_matrix(dwin, hw, res_part)));
                }
                if (lhs != rhs) ok = false;
            }
        rep.checks.push_back({"double-coset", G.name, ok});
    }
    return rep;
}

inline GlobalFunctor group_complete(const GlobalFunctor& P) {
    if (P.integral) return P;
    for (int to = 0; to < P.window->size(); ++to)
        for (int from = 0; from < P.window->size(); ++from)
            for (auto& m : P.ops[to][from])
                for (auto& row : m)
                    for (auto v : row)
                        if (v < 0) throw NonCancellative("negative coefficient in monoid data");
    GlobalFunctor out = P;
    out.integral = true;
    out.name = "K(" + P.name + ")";
    return out;
}

// ---------------------------------------------------------------------------
// Represented morphisms A_G -> M

struct FunctorMorphism {
    std::vector<Matrix> comp; // per window group, atoms(M at i) x atoms(A_G at i)
    bool natural = false;
};

inline FunctorMorphism represent_to_morphism(const GlobalFunctor& M, int g, const Vec& x) {
    auto& W = *M.window;
    FunctorMorphism out;
    out.comp.resize(W.size());
    for (int i = 0; i < W.size(); ++i) {
        auto& terms = W.terms[i][g];
        auto m = zero_matrix(M.rank(i), (int)terms.size());
        for (size_t t = 0; t < terms.size(); ++t) {
            BisetClass c;
            c.terms[terms[t]] = 1;
            auto v = M.apply(i, g, c, x);
            for (int r = 0; r < M.rank(i); ++r) m[r][t] = v[r];
        }
        out.comp[i] = std::move(m);
    }
    // naturality on the window: M[T] . phi_from = phi_to . A_G[T]
    auto A = free_functor_A(M.window, g, M.integral);
    out.natural = true;
    for (int to = 0; to < W.size(); ++to)
        for (int from = 0; from < W.size(); ++from)
            for (size_t t = 0; t < W.terms[to][from].size(); ++t) {
                auto lhs = matmul(M.ops[to][from][t], out.comp[from]);
                auto rhs = matmul(out.comp[to], A.ops[to][from][t]);
                if (lhs != rhs) out.natural = false;
            }
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism search between two functors on the same window

struct IsoReport {
    bool isomorphic = false;
    std::vector<std::vector<int>> matching; // per group: M-atom index -> N-atom index
    std::string obstruction;
    long long tried = 0;
};

namespace detail {
inline std::vector<std::vector<long long>> atom_signatures(const GlobalFunctor& F, int i) {
    auto& W = *F.window;
    std::vector<std::vector<long long>> sig(F.rank(i));
    for (int a = 0; a < F.rank(i); ++a) {
        auto& s = sig[a];
        for (int j = 0; j < W.size(); ++j) {
            for (auto& m : F.ops[i][j]) { // ops into i: row a
                std::vector<long long> row = m[a];
                std::sort(row.begin(), row.end());
                s.push_back(-1000000);
                s.insert(s.end(), row.begin(), row.end());
            }
            for (auto& m : F.ops[j][i]) { // ops out of i: column a
                std::vector<long long> col;
                for (auto& r : m) col.push_back(r[a]);
                std::sort(col.begin(), col.end());
                s.push_back(-2000000);
                s.insert(s.end(), col.begin(), col.end());
            }
        }
    }
    return sig;
}
} // namespace detail

inline IsoReport compare_functors(const GlobalFunctor& M, const GlobalFunctor& N,
                                  const std::vector<std::vector<int>>* supplied = nullptr,
                                  long long cap = 3628800) {
    IsoReport rep;
    if (M.window != N.window) {
        rep.obstruction = "functors live on different windows";
        return rep;
    }
    auto& W = *M.window;
    int n = W.size();
    for (int i = 0; i < n; ++i)
        if (M.rank(i) != N.rank(i)) {
            rep.obstruction = "rank mismatch at " + W.g(i).name + ": " +
                              std::to_string(M.rank(i)) + " vs " + std::to_string(N.rank(i));
            return rep;
        }

    std::vector<std::vector<int>> match(n);
    auto check_pair = [&](int a, int b) {
        for (size_t t = 0; t < W.terms[a][b].size(); ++t) {
            auto& m = M.ops[a][b][t];
            auto& nn = N.ops[a][b][t];
            for (int r = 0; r < M.rank(a); ++r)
                for (int c = 0; c < M.rank(b); ++c)
                    if (nn[match[a][r]][match[b][c]] != m[r][c]) return false;
        }
        return true;
    };
    auto check_group_done = [&](int i) {
        for (int j = 0; j < n; ++j) {
            if (j == i || match[j].empty()) {
                if (j == i && !check_pair(i, i)) return false;
                continue;
            }
            if (!check_pair(i, j) || !check_pair(j, i)) return false;
        }
        return true;
    };

    if (supplied) {
        match = *supplied;
        for (int i = 0; i < n; ++i)
            if (!check_group_done(i)) {
                rep.obstruction = "supplied matching does not commute with operations";
                return rep;
            }
        rep.isomorphic = true;
        rep.matching = match;
        return rep;
    }

    // candidates by signature
    std::vector<std::vector<std::vector<int>>> cand(n);
    for (int i = 0; i < n; ++i) {
        auto sm = detail::atom_signatures(M, i);
        auto sn = detail::atom_signatures(N, i);
        cand[i].resize(M.rank(i));
        for (int a = 0; a < M.rank(i); ++a)
            for (int b = 0; b < N.rank(i); ++b)
                if (sm[a] == sn[b]) cand[i][a].push_back(b);
    }

    std::function<bool(int)> per_group = [&](int i) -> bool {
        if (i == n) return true;
        int r = M.rank(i);
        match[i].assign(r, -1);
        std::vector<char> used(r, 0);
        std::function<bool(int)> assign = [&](int a) -> bool {
            if (++rep.tried > cap) return false;
            if (a == r) {
                if (!check_group_done(i)) return false;
                return per_group(i + 1);
            }
            for (int b : cand[i][a]) {
                if (used[b]) continue;
                match[i][a] = b;
                used[b] = 1;
                if (assign(a + 1)) return true;
                used[b] = 0;
                match[i][a] = -1;
            }
            return false;
        };
        bool ok = assign(0);
        if (!ok) match[i].clear();
        return ok;
    };

    if (per_group(0)) {
        rep.isomorphic = true;
        rep.matching = match;
    } else if (rep.tried > cap) {
        rep.obstruction = "matching search cap exceeded";
    } else {
        rep.obstruction = "no atom bijection commutes with all operations";
    }
    return rep;
}

} // namespace globalk
