#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>

#include "hce/simplicial.hpp"

namespace hce {

namespace {

BracketTree relabel(const BracketTree& t, const std::vector<int>& map) {
    BracketTree out = t;
    if (t.kind == BracketTree::Leaf) {
        out.leaf = map[t.leaf];
        return out;
    }
    out.left = std::make_shared<BracketTree>(relabel(*t.left, map));
    if (t.kind == BracketTree::Br) out.right = std::make_shared<BracketTree>(relabel(*t.right, map));
    return out;
}

// Reduced bar construction over the free Lie monad with lazily evaluated
// faces.  Levels r = 0..R carry L^r(g); a nondegenerate level-r element has
// weight at least (r+1) * (minimal generator weight), which bounds R.
struct BarTower {
    const Ring& ring;
    const GradedLieAlgebra& g;
    int W;
    int R = 0;
    std::vector<FreeWGModule> mods;
    std::vector<std::unique_ptr<FreeLieAlgebra>> alg;   // alg[r] over mods[r-1], r >= 1
    std::vector<std::vector<int>> eta;                  // mods[r-1] -> mods[r]
    // degeneracy membership bitmasks: bit i of degmask[r][b] is set when the
    // level-r element b lies in the image of s_i.  Bit 0 marks leaves; bit i
    // (i >= 1) requires every letter to carry bit i-1 one level down.
    std::vector<std::vector<std::uint32_t>> degmask;
    std::map<std::tuple<int, int, int>, Vec> face_cache;

    BarTower(const Ring& ring_, const GradedLieAlgebra& g_, int W_) : ring(ring_), g(g_), W(W_) {
        int minw = kValInfinity;
        for (const auto& b : g.module.basis()) minw = std::min(minw, b.weight);
        while ((R + 2) * minw <= W) ++R;

        mods.resize(R + 1);
        mods[0] = g.module;
        alg.resize(R + 1);
        for (int r = 1; r <= R; ++r) {
            alg[r] = std::make_unique<FreeLieAlgebra>(ring, mods[r - 1], W);
            mods[r] = alg[r]->module();
        }
        eta.resize(R + 1);
        for (int r = 1; r <= R; ++r) {
            eta[r].assign(mods[r - 1].rank(), -1);
            const auto& trees = alg[r]->trees();
            for (int i = 0; i < mods[r].rank(); ++i)
                if (trees[i].kind == BracketTree::Leaf) eta[r][trees[i].leaf] = i;
            for (int j = 0; j < mods[r - 1].rank(); ++j)
                if (eta[r][j] < 0) throw std::logic_error("missing length-1 word in free Lie basis");
        }
        degmask.resize(R + 1);
        if (R >= 0) degmask[0].assign(mods[0].rank(), 0);
        for (int r = 1; r <= R; ++r) {
            degmask[r].assign(mods[r].rank(), 0);
            for (int b = 0; b < mods[r].rank(); ++b) {
                const BracketTree& t = alg[r]->trees()[b];
                std::uint32_t inner_and = ~std::uint32_t{0};
                std::function<void(const BracketTree&)> walk = [&](const BracketTree& n) {
                    if (n.kind == BracketTree::Leaf) {
                        inner_and &= degmask[r - 1][n.leaf];
                        return;
                    }
                    walk(*n.left);
                    if (n.kind == BracketTree::Br) walk(*n.right);
                };
                walk(t);
                std::uint32_t mask = (inner_and << 1);
                if (t.kind == BracketTree::Leaf) mask |= 1;
                mask &= (std::uint32_t{1} << r) - 1;
                degmask[r][b] = mask;
            }
        }
    }

    // explicit degeneracy index map s_i : mods[r] -> mods[r+1] (spot checks)
    std::vector<int> degen_map(int r, int i) {
        if (i == 0) return eta[r + 1];
        std::vector<int> inner = degen_map(r - 1, i - 1);
        std::vector<int> out(mods[r].rank(), -1);
        for (int b = 0; b < mods[r].rank(); ++b) {
            BracketTree t = relabel(alg[r]->trees()[b], inner);
            out[b] = mods[r + 1].index_of(bracket_tree_name(t, mods[r]));
        }
        return out;
    }

    LieOps level_ops(int r) const { return r == 0 ? ops_of(g) : alg[r]->ops(); }

    const Vec& face_col(int r, int k, int b) {
        auto key = std::make_tuple(r, k, b);
        auto it = face_cache.find(key);
        if (it != face_cache.end()) return it->second;
        Vec v;
        if (k == 0) {
            const BracketTree& t = alg[r]->trees()[b];
            if (t.kind == BracketTree::Leaf) v[t.leaf] = ring.one();
        } else if (k == 1) {
            LieOps tgt = level_ops(r - 1);
            std::vector<Vec> ident(mods[r - 1].rank());
            // only letters of this tree are touched; identity images suffice
            std::function<void(const BracketTree&)> fill = [&](const BracketTree& t) {
                if (t.kind == BracketTree::Leaf) {
                    ident[t.leaf][t.leaf] = ring.one();
                    return;
                }
                fill(*t.left);
                if (t.kind == BracketTree::Br) fill(*t.right);
            };
            fill(alg[r]->trees()[b]);
            v = eval_tree(ring, tgt, alg[r]->trees()[b], ident);
        } else {
            LieOps tgt = level_ops(r - 1);
            std::vector<Vec> leaf_images(mods[r - 1].rank());
            std::function<void(const BracketTree&)> fill = [&](const BracketTree& t) {
                if (t.kind == BracketTree::Leaf) {
                    Vec img;
                    for (const auto& [e, c] : face_col(r - 1, k - 1, t.leaf))
                        img[eta[r - 1][e]] = c;
                    leaf_images[t.leaf] = std::move(img);
                    return;
                }
                fill(*t.left);
                if (t.kind == BracketTree::Br) fill(*t.right);
            };
            fill(alg[r]->trees()[b]);
            v = eval_tree(ring, tgt, alg[r]->trees()[b], leaf_images);
        }
        auto [pos, _] = face_cache.emplace(key, std::move(v));
        return pos->second;
    }

    // Full face maps for low levels (identity spot checks).
    WGMap face_map(int r, int k) {
        WGMap f(mods[r], mods[r - 1], 0);
        for (int b = 0; b < mods[r].rank(); ++b) f.set_column(b, face_col(r, k, b));
        return f;
    }
};

}  // namespace

HomologySummary lie_homology_via_bar(const Ring& ring, const GradedLieAlgebra& g, int max_weight) {
    HomologySummary H;
    ModuleSummary unit;
    unit.free_rank = 1;
    H.set(0, 0, 0, unit);
    if (g.module.rank() == 0) return H;

    // Reorder generators by weight so that generator inclusions are
    // order-preserving basis injections at every bar level.
    std::vector<int> perm(g.module.rank());
    for (int i = 0; i < g.module.rank(); ++i) perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        return g.module.elt(a).weight < g.module.elt(b).weight;
    });
    std::vector<int> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
    std::vector<BasisElt> basis;
    for (int i : perm) basis.push_back(g.module.elt(i));
    GradedLieAlgebra gs;
    gs.module = FreeWGModule(g.module.spec(), std::move(basis));
    for (const auto& [key, v] : g.bracket) {
        Vec w;
        for (const auto& [e, c] : v) w[inv[e]] = c;
        gs.bracket[{inv[key.first], inv[key.second]}] = std::move(w);
    }
    for (const auto& b : gs.module.basis())
        if (b.weight < 1) throw std::invalid_argument("bar oracle needs generator weights >= 1");

    BarTower bar(ring, gs, max_weight);
    const int R = bar.R;

    // simplicial identity spot check on the low levels
    if (R >= 1) {
        SimplicialModules probe;
        int Rp = std::min(R, 2);
        probe.mods.assign(bar.mods.begin(), bar.mods.begin() + Rp + 1);
        probe.faces.resize(Rp + 1);
        for (int r = 1; r <= Rp; ++r)
            for (int k = 0; k <= r; ++k) probe.faces[r].push_back(bar.face_map(r, k));
        probe.degens.resize(Rp);
        for (int r = 0; r < Rp; ++r)
            for (int i = 0; i <= r; ++i) probe.degens[r].push_back(bar.degen_map(r, i));
        check_simplicial_identities(ring, probe);
    }

    // nondegenerate bases
    std::vector<std::vector<int>> pos(R + 1);
    std::vector<FreeWGModule> nmods(R + 1);
    for (int r = 0; r <= R; ++r) {
        pos[r].assign(bar.mods[r].rank(), -1);
        std::vector<BasisElt> nb;
        for (int b = 0; b < bar.mods[r].rank(); ++b) {
            if (bar.degmask[r][b] != 0) continue;
            pos[r][b] = static_cast<int>(nb.size());
            nb.push_back(bar.mods[r].elt(b));
        }
        nmods[r] = FreeWGModule(gs.module.spec(), std::move(nb));
    }

    BigradedComplex C(gs.module.spec());
    for (int r = 0; r <= R; ++r) C.set_term(r, nmods[r]);
    for (int r = 1; r <= R; ++r) {
        WGMap d(nmods[r], nmods[r - 1], 0);
        for (int b = 0; b < bar.mods[r].rank(); ++b) {
            if (pos[r][b] < 0) continue;
            Vec acc;
            for (int k = 0; k <= r; ++k) {
                bool negate = k % 2 != 0;
                for (const auto& [e, c] : bar.face_col(r, k, b)) {
                    if (pos[r - 1][e] < 0) continue;
                    vec_add_term(ring, acc, pos[r - 1][e], negate ? ring.neg(c) : c);
                }
            }
            d.set_column(pos[r][b], std::move(acc));
        }
        C.set_diff(r, std::move(d));
    }
    verify(ring, C);

    HomologySummary bh = homology(ring, C, configured_threads());
    for (const auto& [key, s] : bh.entries) {
        auto [n, i, w] = key;
        H.set(n + 1, i, w, s);
    }
    return H;
}

}  // namespace hce
