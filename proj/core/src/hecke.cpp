#include "hce/hecke.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hce/simplicial.hpp"

namespace hce {

WeightPOpModel height1_model(const Ring& ring) {
    WeightPOpModel m;
    m.spec = ring.spec();
    m.rank = 1;
    m.euler_mult = Mat(1, 1);
    m.euler_mult.at(0, 0) = ring.from_int(ring.p());
    m.f_coeffs = {ring.from_int(ring.p())};
    return m;
}

WeightPOpModel model_from_euler_poly(const Ring& ring, const std::vector<Scalar>& f_coeffs) {
    const int d = static_cast<int>(f_coeffs.size());
    if (d < 1) throw std::invalid_argument("euler polynomial must have degree >= 1");
    if (ring.valuation(f_coeffs[0]) < 1)
        throw std::invalid_argument("euler polynomial constant term must be divisible by p");
    WeightPOpModel m;
    m.spec = ring.spec();
    m.rank = d;
    m.euler_mult = Mat(d, d);
    for (auto& x : m.euler_mult.a) x = ring.zero();
    for (int i = 0; i + 1 < d; ++i) m.euler_mult.at(i + 1, i) = ring.one();
    for (int i = 0; i < d; ++i) m.euler_mult.at(i, d - 1) = ring.neg(f_coeffs[i]);
    m.f_coeffs = f_coeffs;
    return m;
}

Mat susp_power(const Ring& ring, const WeightPOpModel& model, int source_degree, int n) {
    int odd = 0;
    for (int i = source_degree; i < source_degree + n; ++i)
        if (((i % 2) + 2) % 2 == 1) ++odd;
    return mat_pow(ring, model.euler_mult, odd);
}

std::optional<std::string> check_hecke(const Ring& ring, const HeckeLieAlgebra& g) {
    if (auto bad = check_axioms(ring, g.lie)) return bad;
    const auto& M = g.lie.module;
    std::set<int> image_gens;
    for (const auto& [gen, act] : g.action) {
        if (act.matrix.rows != static_cast<int>(act.targets.size()) ||
            act.matrix.cols != g.model.rank)
            return "action matrix shape mismatch on " + M.elt(gen).name;
        for (int r = 0; r < act.matrix.rows; ++r) {
            const auto& t = M.elt(act.targets[r]);
            const auto& s = M.elt(gen);
            bool rowzero = true;
            for (int c = 0; c < act.matrix.cols; ++c)
                if (!ring.is_zero(act.matrix.at(r, c))) rowzero = false;
            if (rowzero) continue;
            if (t.degree != s.degree - 1 || t.weight != static_cast<int>(ring.p()) * s.weight)
                return "action violates (degree-1, weight*p) grading on " + s.name;
            image_gens.insert(act.targets[r]);
        }
    }
    for (int t : image_gens)
        for (int b = 0; b < M.rank(); ++b)
            if (!g.lie.bracket_of(t, b).empty() || !g.lie.bracket_of(b, t).empty())
                return "action target " + M.elt(t).name + " is not bracket-central";
    return std::nullopt;
}

HeckeLieAlgebra atomic_algebra(const Ring& ring, int a, int n, int w, const WeightPOpModel& model) {
    if (w < 1) throw std::invalid_argument("atomic_algebra: weight must be >= 1");
    const int p = static_cast<int>(ring.p());
    HeckeLieAlgebra g;
    g.model = model;
    std::vector<BasisElt> basis;
    basis.push_back({"x", a, w});
    for (int t = 0; t < model.rank; ++t)
        basis.push_back({model.rank == 1 ? "y" : "y" + std::to_string(t), a - 1, p * w});
    g.lie.module = FreeWGModule(ring.spec(), std::move(basis));
    HeckeLieAlgebra::Action act;
    for (int t = 0; t < model.rank; ++t) act.targets.push_back(1 + t);
    act.matrix = susp_power(ring, model, a, n);
    g.action[0] = std::move(act);
    return g;
}

namespace {

// Direct sum with disjoint generator names; zero cross brackets/actions.
HeckeLieAlgebra direct_sum(const Ring& ring, const HeckeLieAlgebra& a, const HeckeLieAlgebra& b,
                           const std::string& suffix_a, const std::string& suffix_b) {
    HeckeLieAlgebra g;
    g.model = a.model;
    std::vector<BasisElt> basis;
    for (const auto& e : a.lie.module.basis()) basis.push_back({e.name + suffix_a, e.degree, e.weight});
    const int off = a.lie.module.rank();
    for (const auto& e : b.lie.module.basis()) basis.push_back({e.name + suffix_b, e.degree, e.weight});
    g.lie.module = FreeWGModule(ring.spec(), std::move(basis));
    for (const auto& [key, v] : a.lie.bracket) g.lie.bracket[key] = v;
    for (const auto& [key, v] : b.lie.bracket) {
        Vec w;
        for (const auto& [e, c] : v) w[e + off] = c;
        g.lie.bracket[{key.first + off, key.second + off}] = std::move(w);
    }
    for (const auto& [gen, act] : a.action) g.action[gen] = act;
    for (const auto& [gen, act] : b.action) {
        HeckeLieAlgebra::Action shifted = act;
        for (auto& t : shifted.targets) t += off;
        g.action[gen + off] = std::move(shifted);
    }
    return g;
}

}  // namespace

HeckeLieAlgebra euclidean_algebra(const Ring& ring, int n, int k, const WeightPOpModel& model) {
    if (n < 1) throw std::invalid_argument("euclidean_algebra: n >= 1 required");
    HeckeLieAlgebra first = atomic_algebra(ring, k - 1, n, 1, model);
    if (((n + k - 1) % 2 + 2) % 2 == 0) return first;
    HeckeLieAlgebra second = atomic_algebra(ring, n + 2 * k - 2, n, 2, model);
    return direct_sum(ring, first, second, "", "t");
}

HeckeLieAlgebra surface_algebra(const Ring& ring, int g, const WeightPOpModel& model) {
    if (g < 0) throw std::invalid_argument("surface_algebra: genus must be >= 0");
    const int p = static_cast<int>(ring.p());
    const int d = model.rank;
    HeckeLieAlgebra out;
    out.model = model;

    // cells: c (the 2-cell) and a_i, b_i (1-cells)
    std::vector<std::pair<std::string, int>> cells;  // (name, cell dimension)
    cells.push_back({"c", 2});
    for (int i = 1; i <= g; ++i) cells.push_back({"a" + std::to_string(i), 1});
    for (int i = 1; i <= g; ++i) cells.push_back({"b" + std::to_string(i), 1});

    std::vector<BasisElt> basis;
    std::map<std::string, std::vector<int>> block_of;  // "<cell><x|xt|y|yt>" -> indices
    auto push_block = [&](const std::string& cell, const std::string& kind, int degree, int weight,
                          int count) {
        std::vector<int> idx;
        for (int t = 0; t < count; ++t) {
            std::string nm = cell + kind + (count == 1 ? "" : std::to_string(t));
            idx.push_back(static_cast<int>(basis.size()));
            basis.push_back({nm, degree, weight});
        }
        block_of[cell + kind] = idx;
    };
    // x: degree 1 - celldim, weight 1;   xt: degree 2 - celldim, weight 2
    // y: degree -celldim, weight p;      yt: degree 1 - celldim, weight 2p
    for (const auto& [cell, dim] : cells) push_block(cell, "x", 1 - dim, 1, 1);
    for (const auto& [cell, dim] : cells) push_block(cell, "xt", 2 - dim, 2, 1);
    for (const auto& [cell, dim] : cells) push_block(cell, "y", -dim, p, d);
    for (const auto& [cell, dim] : cells) push_block(cell, "yt", 1 - dim, 2 * p, d);
    out.lie.module = FreeWGModule(ring.spec(), std::move(basis));

    // bracket [a_i x, b_i x] = -c xt
    for (int i = 1; i <= g; ++i) {
        int ai = block_of["a" + std::to_string(i) + "x"][0];
        int bi = block_of["b" + std::to_string(i) + "x"][0];
        int ct = block_of["cxt"][0];
        Vec v;
        v[ct] = ring.neg(ring.one());
        out.lie.set_bracket_pair(ring, ai, bi, v);
    }

    // actions: x-generators act into y-blocks via Susp^celldim, xt into yt
    for (const auto& [cell, dim] : cells) {
        for (auto kind : {std::string("x"), std::string("xt")}) {
            int gen = block_of[cell + kind][0];
            const auto& tgt = block_of[cell + (kind == "x" ? "y" : "yt")];
            HeckeLieAlgebra::Action act;
            act.targets = tgt;
            act.matrix = susp_power(ring, model, out.lie.module.elt(gen).degree, dim);
            out.action[gen] = std::move(act);
        }
    }
    return out;
}

/// --- additive resolution -------------------------------------------------

namespace {

std::string letter_name(const WeightPOpModel& model, const FreeWGModule& gens, const ARLetter& L) {
    std::ostringstream os;
    os << "[";
    for (int s : L.slots) os << (s < 0 ? std::string("1") : model.op_name(s)) << "|";
    os << gens.elt(L.base).name << "]";
    return os.str();
}

int letter_ops(const ARLetter& L) {
    int n = 0;
    for (int s : L.slots)
        if (s >= 0) ++n;
    return n;
}

}  // namespace

ARLevels additive_resolution(const Ring& ring, const HeckeLieAlgebra& g, int max_weight) {
    if (auto bad = check_hecke(ring, g))
        throw std::invalid_argument("additive_resolution: " + *bad);
    const int p = static_cast<int>(ring.p());
    const auto& M = g.lie.module;
    int minw = kValInfinity;
    for (const auto& b : M.basis()) minw = std::min(minw, b.weight);
    if (M.rank() == 0) throw std::invalid_argument("additive_resolution: empty algebra");
    if (max_weight >= p * p * minw)
        throw std::invalid_argument(
            "additive_resolution: truncation admits composite operations; require W < p^2 * min weight");

    ARLevels ar;
    ar.max_weight = max_weight;
    ar.top_level = std::max(0, max_weight / (p * minw));
    const int R = ar.top_level;

    ar.mods.resize(R + 1);
    ar.letters.resize(R + 1);
    for (int r = 0; r <= R; ++r) {
        // enumerate slot patterns: at most one op slot survives the weight bound
        std::vector<ARLetter> ls;
        for (int base = 0; base < M.rank(); ++base) {
            int bw = M.elt(base).weight;
            std::vector<std::vector<int>> patterns;
            std::vector<int> cur(r, -1);
            std::function<void(int, int)> rec = [&](int pos, int weight) {
                if (weight > max_weight) return;
                if (pos == r) {
                    patterns.push_back(cur);
                    return;
                }
                cur[pos] = -1;
                rec(pos + 1, weight);
                for (int t = 0; t < g.model.rank; ++t) {
                    cur[pos] = t;
                    rec(pos + 1, weight * p);
                    cur[pos] = -1;
                }
            };
            rec(0, bw);
            for (auto& pat : patterns) ls.push_back({pat, base});
        }
        // deterministic order: by (weight, name)
        std::vector<BasisElt> basis;
        std::sort(ls.begin(), ls.end(), [&](const ARLetter& A, const ARLetter& B) {
            int wa = M.elt(A.base).weight * static_cast<int>(ipow(p, letter_ops(A)));
            int wb = M.elt(B.base).weight * static_cast<int>(ipow(p, letter_ops(B)));
            if (wa != wb) return wa < wb;
            return letter_name(g.model, M, A) < letter_name(g.model, M, B);
        });
        for (const auto& L : ls) {
            int ops = letter_ops(L);
            basis.push_back({letter_name(g.model, M, L), M.elt(L.base).degree - ops,
                             M.elt(L.base).weight * static_cast<int>(ipow(p, ops))});
        }
        ar.mods[r] = FreeWGModule(ring.spec(), std::move(basis));
        ar.letters[r] = std::move(ls);
    }

    auto find_letter = [&](int r, const ARLetter& L) -> int {
        return ar.mods[r].index_of(letter_name(g.model, M, L));
    };

    // Lie structure per level: brackets only between all-identity symbols.
    ar.lie_levels.resize(R + 1);
    for (int r = 0; r <= R; ++r) {
        GradedLieAlgebra lr;
        lr.module = ar.mods[r];
        for (int i = 0; i < static_cast<int>(ar.letters[r].size()); ++i) {
            if (letter_ops(ar.letters[r][i]) > 0) continue;
            for (int j = 0; j < static_cast<int>(ar.letters[r].size()); ++j) {
                if (letter_ops(ar.letters[r][j]) > 0) continue;
                Vec br = g.lie.bracket_of(ar.letters[r][i].base, ar.letters[r][j].base);
                if (br.empty()) continue;
                Vec out;
                for (const auto& [e, c] : br) {
                    ARLetter L;
                    L.slots.assign(r, -1);
                    L.base = e;
                    if (M.elt(e).weight <= max_weight) out[find_letter(r, L)] = c;
                }
                if (!out.empty()) lr.bracket[{i, j}] = std::move(out);
            }
        }
        ar.lie_levels[r] = std::move(lr);
    }

    // faces
    ar.faces.resize(R + 1);
    for (int r = 1; r <= R; ++r) {
        ar.faces[r].reserve(r + 1);
        for (int k = 0; k <= r; ++k) {
            WGMap f(ar.mods[r], ar.mods[r - 1], 0);
            for (int i = 0; i < static_cast<int>(ar.letters[r].size()); ++i) {
                const ARLetter& L = ar.letters[r][i];
                if (k == 0) {
                    if (L.slots[0] >= 0) continue;  // non-scalar killed by the collapse
                    ARLetter T{std::vector<int>(L.slots.begin() + 1, L.slots.end()), L.base};
                    f.set(find_letter(r - 1, T), i, ring.one());
                } else if (k < r) {
                    // merge slots k-1 and k (0-based); op*op is weight-truncated to zero
                    if (L.slots[k - 1] >= 0 && L.slots[k] >= 0) continue;
                    ARLetter T = L;
                    int merged = std::max(L.slots[k - 1], L.slots[k]);
                    T.slots.erase(T.slots.begin() + k);
                    T.slots[k - 1] = merged;
                    f.set(find_letter(r - 1, T), i, ring.one());
                } else {
                    // apply the last slot to the base generator
                    int s = L.slots[r - 1];
                    ARLetter T{std::vector<int>(L.slots.begin(), L.slots.end() - 1), L.base};
                    if (s < 0) {
                        f.set(find_letter(r - 1, T), i, ring.one());
                    } else {
                        auto it = g.action.find(L.base);
                        if (it == g.action.end()) continue;
                        const auto& act = it->second;
                        for (int row = 0; row < act.matrix.rows; ++row) {
                            const Scalar& c = act.matrix.at(row, s);
                            if (ring.is_zero(c)) continue;
                            ARLetter T2 = T;
                            T2.base = act.targets[row];
                            if (M.elt(T2.base).weight > max_weight) continue;
                            f.add(ring, find_letter(r - 1, T2), i, c);
                        }
                    }
                }
            }
            ar.faces[r].push_back(std::move(f));
        }
    }

    // degeneracies: insert an identity slot at position i
    ar.degens.resize(R);
    for (int r = 0; r < R; ++r) {
        ar.degens[r].resize(r + 1);
        for (int i = 0; i <= r; ++i) {
            std::vector<int> idx(ar.mods[r].rank(), -1);
            for (int b = 0; b < static_cast<int>(ar.letters[r].size()); ++b) {
                ARLetter T = ar.letters[r][b];
                T.slots.insert(T.slots.begin() + i, -1);
                idx[b] = find_letter(r + 1, T);
            }
            ar.degens[r][i] = std::move(idx);
        }
    }
    return ar;
}

/// --- Chevalley-Eilenberg of the additive resolution ----------------------

HeckeCE hecke_ce_complex(const Ring& ring, const HeckeLieAlgebra& g, int max_weight) {
    HeckeCE h;
    h.ar = additive_resolution(ring, g, max_weight);
    const int R = h.ar.top_level;

    h.ce.reserve(R + 1);
    for (int r = 0; r <= R; ++r) h.ce.push_back(ce_complex(ring, h.ar.lie_levels[r], max_weight));

    h.normalized = normalize_ce_levels(ring, h.ce, h.ar.faces, h.ar.degens, max_weight);
    h.total = total_complex(ring, h.normalized);
    verify(ring, h.total);
    return h;
}

HomologySummary hecke_homology(const Ring& ring, const HeckeLieAlgebra& g, int max_weight,
                               int threads) {
    HeckeCE h = hecke_ce_complex(ring, g, max_weight);
    return homology(ring, h.total, threads);
}

HomologySummary hecke_cohomology(const Ring& ring, const HeckeLieAlgebra& g, int max_weight,
                                 int threads) {
    HeckeCE h = hecke_ce_complex(ring, g, max_weight);
    return cohomology_of_dual(ring, h.total, threads);
}

}  // namespace hce
