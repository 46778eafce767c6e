#include "hce/simplicial.hpp"

#include <set>
#include <stdexcept>

namespace hce {

namespace {

std::vector<std::set<int>> degenerate_letter_images(const SimplicialModules& s, int r) {
    std::vector<std::set<int>> images;
    if (r == 0) return images;
    images.resize(r);
    for (int i = 0; i < r; ++i)
        for (int v : s.degens[r - 1][i])
            if (v >= 0) images[i].insert(v);
    return images;
}

}  // namespace

BigradedComplex normalize_modules(const Ring& ring, const SimplicialModules& s) {
    const int R = static_cast<int>(s.mods.size()) - 1;
    BigradedComplex C(s.mods.at(0).spec());
    std::vector<std::vector<int>> pos(R + 1);
    for (int r = 0; r <= R; ++r) {
        auto images = degenerate_letter_images(s, r);
        pos[r].assign(s.mods[r].rank(), -1);
        std::vector<BasisElt> basis;
        for (int b = 0; b < s.mods[r].rank(); ++b) {
            bool degenerate = false;
            for (const auto& img : images)
                if (img.count(b)) { degenerate = true; break; }
            if (degenerate) continue;
            pos[r][b] = static_cast<int>(basis.size());
            basis.push_back(s.mods[r].elt(b));
        }
        C.set_term(r, FreeWGModule(s.mods[r].spec(), std::move(basis)));
    }
    for (int r = 1; r <= R; ++r) {
        WGMap d(C.term(r), C.term(r - 1), 0);
        for (int b = 0; b < s.mods[r].rank(); ++b) {
            if (pos[r][b] < 0) continue;
            Vec acc;
            for (int k = 0; k <= r; ++k) {
                bool negate = k % 2 != 0;
                for (const auto& [e, c] : s.faces[r][k].column(b)) {
                    if (pos[r - 1][e] < 0) continue;
                    vec_add_term(ring, acc, pos[r - 1][e], negate ? ring.neg(c) : c);
                }
            }
            d.set_column(pos[r][b], std::move(acc));
        }
        C.set_diff(r, std::move(d));
    }
    return C;
}

BigradedComplex unnormalized_complex(const Ring& ring, const SimplicialModules& s) {
    const int R = static_cast<int>(s.mods.size()) - 1;
    BigradedComplex C(s.mods.at(0).spec());
    for (int r = 0; r <= R; ++r) C.set_term(r, s.mods[r]);
    for (int r = 1; r <= R; ++r) {
        WGMap d(s.mods[r], s.mods[r - 1], 0);
        for (int b = 0; b < s.mods[r].rank(); ++b) {
            Vec acc;
            for (int k = 0; k <= r; ++k) {
                bool negate = k % 2 != 0;
                for (const auto& [e, c] : s.faces[r][k].column(b))
                    vec_add_term(ring, acc, e, negate ? ring.neg(c) : c);
            }
            d.set_column(b, std::move(acc));
        }
        C.set_diff(r, std::move(d));
    }
    return C;
}

void check_simplicial_identities(const Ring& ring, const SimplicialModules& s) {
    const int R = static_cast<int>(s.mods.size()) - 1;
    // d_i d_j = d_{j-1} d_i for i < j
    for (int r = 2; r <= R; ++r)
        for (int j = 1; j <= r; ++j)
            for (int i = 0; i < j; ++i) {
                WGMap lhs = WGMap::compose(ring, s.faces[r - 1][i], s.faces[r][j]);
                WGMap rhs = WGMap::compose(ring, s.faces[r - 1][j - 1], s.faces[r][i]);
                for (int b = 0; b < s.mods[r].rank(); ++b) {
                    Vec diff = vec_add(ring, lhs.column(b), vec_scale(ring, ring.neg(ring.one()), rhs.column(b)));
                    if (!diff.empty())
                        throw std::logic_error("simplicial identity d_i d_j failed at level " +
                                               std::to_string(r));
                }
            }
    // d_i s_i = id and d_{i+1} s_i = id
    for (int r = 0; r < R; ++r)
        for (int i = 0; i <= r; ++i)
            for (int b = 0; b < s.mods[r].rank(); ++b) {
                int im = s.degens[r][i][b];
                if (im < 0) throw std::logic_error("degeneracy not basis-to-basis");
                for (int k : {i, i + 1}) {
                    const Vec& v = s.faces[r + 1][k].column(im);
                    if (v.size() != 1 || v.begin()->first != b || !ring.is_unit(v.begin()->second))
                        throw std::logic_error("face/degeneracy identity failed at level " +
                                               std::to_string(r + 1));
                }
            }
}

DoubleComplex normalize_ce_levels(const Ring& ring, const std::vector<CEComplex>& ce,
                                  const std::vector<std::vector<WGMap>>& letter_faces,
                                  const std::vector<std::vector<std::vector<int>>>& letter_degens,
                                  int max_weight) {
    const int R = static_cast<int>(ce.size()) - 1;
    DoubleComplex out;
    out.spec = ce.at(0).letters.spec();

    // Letter-level degeneracy images per level and degeneracy index.
    std::vector<std::vector<std::set<int>>> images(R + 1);
    for (int r = 1; r <= R; ++r) {
        images[r].resize(r);
        for (int i = 0; i < r; ++i)
            for (int v : letter_degens[r - 1][i])
                if (v >= 0) images[r][i].insert(v);
    }
    // A monomial is degenerate when all of its letters lie in one degeneracy
    // image; the empty monomial at level r >= 1 is degenerate.
    auto degenerate = [&](int r, const GammaMonomial& m) {
        if (r == 0) return false;
        for (int i = 0; i < r; ++i) {
            bool all = true;
            for (auto [letter, _] : m.factors)
                if (!images[r][i].count(letter)) { all = false; break; }
            if (all) return true;
        }
        return false;
    };

    std::vector<std::map<int, std::vector<int>>> keep(R + 1);
    std::vector<std::map<int, std::vector<int>>> position(R + 1);
    for (int r = 0; r <= R; ++r) {
        BigradedComplex col(out.spec);
        for (const auto& [len, monos] : ce[r].monos) {
            std::vector<int> kept;
            std::vector<int> pos(monos.size(), -1);
            std::vector<BasisElt> basis;
            const FreeWGModule& full = ce[r].cx.term(len);
            for (int i = 0; i < static_cast<int>(monos.size()); ++i) {
                if (degenerate(r, monos[i])) continue;
                pos[i] = static_cast<int>(kept.size());
                kept.push_back(i);
                basis.push_back(full.elt(i));
            }
            keep[r][len] = std::move(kept);
            position[r][len] = std::move(pos);
            col.set_term(len, FreeWGModule(out.spec, std::move(basis)));
        }
        for (const auto& [len, monos] : ce[r].monos) {
            if (len == 0 || !ce[r].cx.has_diff(len)) continue;
            WGMap d(col.term(len), col.term(len - 1), 0);
            const WGMap& full = ce[r].cx.diff(len);
            const auto& src_keep = keep[r][len];
            const auto& dst_pos = position[r][len - 1];
            for (int jj = 0; jj < static_cast<int>(src_keep.size()); ++jj)
                for (const auto& [t, c] : full.column(src_keep[jj])) {
                    if (dst_pos[t] < 0) continue;
                    d.add(ring, dst_pos[t], jj, c);
                }
            col.set_diff(len, std::move(d));
        }
        out.columns[r] = std::move(col);
    }

    for (int r = 1; r <= R; ++r)
        for (const auto& [len, monos] : ce[r].monos) {
            if (!out.columns.at(r - 1).has_term(len)) continue;
            WGMap hmap(out.columns.at(r).term(len), out.columns.at(r - 1).term(len), 0);
            for (int k = 0; k <= r; ++k) {
                WGMap facek = ce_functor_level(ring, ce[r], ce[r - 1], letter_faces[r][k], len, max_weight);
                bool negate = k % 2 != 0;
                const auto& src_keep = keep[r].at(len);
                const auto& dst_pos = position[r - 1].at(len);
                for (int jj = 0; jj < static_cast<int>(src_keep.size()); ++jj)
                    for (const auto& [t, c] : facek.column(src_keep[jj])) {
                        if (dst_pos[t] < 0) continue;
                        hmap.add(ring, dst_pos[t], jj, negate ? ring.neg(c) : c);
                    }
            }
            out.hmaps[{r, len}] = std::move(hmap);
        }
    return out;
}

}  // namespace hce
