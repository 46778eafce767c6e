#include "hce/lie.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hce {

void GradedLieAlgebra::set_bracket(const Ring& ring, int a, int b, Vec v) {
    // drop explicit zeros
    for (auto it = v.begin(); it != v.end();) {
        if (ring.is_zero(it->second)) it = v.erase(it);
        else ++it;
    }
    if (v.empty()) bracket.erase({a, b});
    else bracket[{a, b}] = std::move(v);
}

void GradedLieAlgebra::set_bracket_pair(const Ring& ring, int a, int b, const Vec& v) {
    set_bracket(ring, a, b, v);
    if (a == b) return;
    int sign = koszul_sign(module.elt(a).degree, module.elt(b).degree);
    Vec w;
    for (const auto& [e, c] : v) w[e] = sign > 0 ? ring.neg(c) : c;
    set_bracket(ring, b, a, std::move(w));
}

GradedLieAlgebra abelian_lie(const FreeWGModule& m) {
    GradedLieAlgebra g;
    g.module = m;
    return g;
}

LieOps ops_of(const GradedLieAlgebra& g) {
    LieOps ops;
    ops.module = &g.module;
    ops.bracket = [&g](int a, int b) { return g.bracket_of(a, b); };
    return ops;
}

namespace {

Vec bracket_vec(const Ring& ring, const LieOps& g, const Vec& x, const Vec& y) {
    Vec out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            Vec br = g.bracket(a, b);
            Scalar c = ring.mul(ca, cb);
            for (const auto& [e, ce] : br) vec_add_term(ring, out, e, ring.mul(c, ce));
        }
    return out;
}

Vec bracket_vec(const Ring& ring, const GradedLieAlgebra& g, const Vec& x, const Vec& y) {
    return bracket_vec(ring, ops_of(g), x, y);
}

}  // namespace

std::optional<std::string> check_axioms(const Ring& ring, const GradedLieAlgebra& g) {
    const auto& M = g.module;
    const int n = M.rank();
    // grading of structure constants
    for (const auto& [key, v] : g.bracket) {
        auto [a, b] = key;
        for (const auto& [e, c] : v) {
            if (ring.is_zero(c)) continue;
            if (M.elt(e).degree != M.elt(a).degree + M.elt(b).degree ||
                M.elt(e).weight != M.elt(a).weight + M.elt(b).weight)
                return "bracket [" + M.elt(a).name + "," + M.elt(b).name +
                       "] violates grading at " + M.elt(e).name;
        }
    }
    // antisymmetry: [a,b] + (-1)^{|a||b|}[b,a] = 0
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            Vec lhs = g.bracket_of(a, b);
            Vec rhs = g.bracket_of(b, a);
            int s = koszul_sign(M.elt(a).degree, M.elt(b).degree);
            Vec sum = lhs;
            for (const auto& [e, c] : rhs)
                vec_add_term(ring, sum, e, s > 0 ? c : ring.neg(c));
            if (!sum.empty())
                return "antisymmetry fails on (" + M.elt(a).name + "," + M.elt(b).name + ")";
        }
    // [a,a] = 0 for even a (2 invertible)
    for (int a = 0; a < n; ++a)
        if (M.elt(a).degree % 2 == 0 && !g.bracket_of(a, a).empty())
            return "[a,a] != 0 for even-degree " + M.elt(a).name;
    // graded Jacobi
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int i = M.elt(a).degree, j = M.elt(b).degree, k = M.elt(c).degree;
                Vec va, vb, vc;
                va[a] = ring.one(); vb[b] = ring.one(); vc[c] = ring.one();
                Vec t1 = bracket_vec(ring, g, va, bracket_vec(ring, g, vb, vc));
                Vec t2 = bracket_vec(ring, g, vb, bracket_vec(ring, g, vc, va));
                Vec t3 = bracket_vec(ring, g, vc, bracket_vec(ring, g, va, vb));
                Vec sum;
                auto addsigned = [&](const Vec& v, int exp) {
                    bool neg = exp % 2 != 0;
                    for (const auto& [e, cv] : v) vec_add_term(ring, sum, e, neg ? ring.neg(cv) : cv);
                };
                addsigned(t1, i * k);
                addsigned(t2, j * i);
                addsigned(t3, k * j);
                if (!sum.empty()) {
                    std::ostringstream os;
                    os << "Jacobi fails on (" << M.elt(a).name << "," << M.elt(b).name << ","
                       << M.elt(c).name << ")";
                    return os.str();
                }
            }
    // [a,[a,a]] = 0 for odd a
    for (int a = 0; a < n; ++a) {
        if (M.elt(a).degree % 2 == 0) continue;
        Vec va; va[a] = ring.one();
        Vec t = bracket_vec(ring, g, va, bracket_vec(ring, g, va, va));
        if (!t.empty()) return "[a,[a,a]] != 0 for " + M.elt(a).name;
    }
    return std::nullopt;
}

/// --- Chevalley-Eilenberg ------------------------------------------------

namespace {

struct SplitMono {
    std::vector<std::pair<int, int>> divided;  // letters with even suspension
    std::vector<int> exterior;                 // letters with odd suspension
};

SplitMono split(const FreeWGModule& letters, const GammaMonomial& m) {
    SplitMono s;
    for (auto [i, r] : m.factors) {
        if (suspension_even(letters.elt(i))) s.divided.push_back({i, r});
        else s.exterior.push_back(i);
    }
    return s;
}

GammaMonomial join(const SplitMono& s) {
    GammaMonomial m;
    for (auto [i, r] : s.divided) m.factors.push_back({i, r});
    for (int i : s.exterior) m.factors.push_back({i, 1});
    std::sort(m.factors.begin(), m.factors.end());
    return m;
}

// Insert letter e into a sorted list of exterior letters coming from the
// front; sign is (-1)^(number of letters strictly before e's position).
// Returns false when e already occurs.
bool exterior_insert(std::vector<int>& ext, int e, int& sign) {
    int pos = 0;
    for (int x : ext) {
        if (x == e) return false;
        if (x < e) ++pos;
    }
    ext.insert(ext.begin() + pos, e);
    if (pos % 2) sign = -sign;
    return true;
}

}  // namespace

GammaVec ce_differential(const Ring& ring, const GradedLieAlgebra& g, const GammaMonomial& m) {
    const FreeWGModule& L = g.module;
    SplitMono s = split(L, m);
    GammaVec out;

    auto emit = [&](const SplitMono& t, const Scalar& c) {
        gamma_vec_add(ring, out, join(t), c);
    };

    // (1) pairs of distinct divided letters
    for (size_t t1 = 0; t1 < s.divided.size(); ++t1)
        for (size_t t2 = t1 + 1; t2 < s.divided.size(); ++t2) {
            Vec br = g.bracket_of(s.divided[t1].first, s.divided[t2].first);
            for (const auto& [e, c] : br) {
                SplitMono t = s;
                if (--t.divided[t2].second == 0) t.divided.erase(t.divided.begin() + t2);
                if (--t.divided[t1].second == 0) t.divided.erase(t.divided.begin() + t1);
                int sign = 1;
                if (!exterior_insert(t.exterior, e, sign)) continue;
                emit(t, sign > 0 ? c : ring.neg(c));
            }
        }

    // (2) pairs of exterior letters, positions 1-based with sign (-1)^(u+v-1)
    for (size_t u = 0; u < s.exterior.size(); ++u)
        for (size_t v = u + 1; v < s.exterior.size(); ++v) {
            Vec br = g.bracket_of(s.exterior[u], s.exterior[v]);
            for (const auto& [e, c] : br) {
                SplitMono t = s;
                t.exterior.erase(t.exterior.begin() + v);
                t.exterior.erase(t.exterior.begin() + u);
                int sign = ((u + 1) + (v + 1) - 1) % 2 ? -1 : 1;
                if (!exterior_insert(t.exterior, e, sign)) continue;
                emit(t, sign > 0 ? c : ring.neg(c));
            }
        }

    // (3) half the self-bracket of each divided letter with multiplicity >= 2
    for (size_t t1 = 0; t1 < s.divided.size(); ++t1) {
        if (s.divided[t1].second < 2) continue;
        Vec br = g.bracket_of(s.divided[t1].first, s.divided[t1].first);
        for (const auto& [e, c] : br) {
            SplitMono t = s;
            t.divided[t1].second -= 2;
            if (t.divided[t1].second == 0) t.divided.erase(t.divided.begin() + t1);
            int sign = 1;
            if (!exterior_insert(t.exterior, e, sign)) continue;
            Scalar coeff = ring.halve(c);
            emit(t, sign > 0 ? coeff : ring.neg(coeff));
        }
    }

    // (4) divided x exterior, sign (-1)^(u-1), result merges as gamma_1
    for (size_t t1 = 0; t1 < s.divided.size(); ++t1)
        for (size_t u = 0; u < s.exterior.size(); ++u) {
            Vec br = g.bracket_of(s.divided[t1].first, s.exterior[u]);
            for (const auto& [e, c] : br) {
                SplitMono t = s;
                if (--t.divided[t1].second == 0) t.divided.erase(t.divided.begin() + t1);
                t.exterior.erase(t.exterior.begin() + u);
                // merge gamma_1(e): coefficient r_e + 1 when e already present
                int mult = 0;
                for (auto& [le, re] : t.divided)
                    if (le == e) { mult = re; ++re; break; }
                if (mult == 0) {
                    t.divided.push_back({e, 1});
                    std::sort(t.divided.begin(), t.divided.end());
                }
                Scalar coeff = ring.mul(c, ring.from_int(mult + 1));
                if (u % 2) coeff = ring.neg(coeff);
                emit(t, coeff);
            }
        }

    return out;
}

int CEComplex::index_of(int len, const GammaMonomial& m) const {
    const auto& v = monos.at(len);
    auto it = std::lower_bound(v.begin(), v.end(), m);
    if (it == v.end() || !(*it == m)) return -1;
    return static_cast<int>(it - v.begin());
}

CEComplex ce_complex(const Ring& ring, const GradedLieAlgebra& g, int max_weight) {
    CEComplex ce;
    ce.letters = g.module;
    auto all = divided_power_basis(g.module, max_weight);
    for (const auto& m : all) ce.monos[m.length()].push_back(m);
    for (auto& [len, v] : ce.monos) std::sort(v.begin(), v.end());

    ce.cx = BigradedComplex(g.module.spec());
    for (const auto& [len, v] : ce.monos) {
        std::vector<BasisElt> basis;
        basis.reserve(v.size());
        for (const auto& m : v)
            basis.push_back({monomial_name(g.module, m), monomial_internal_degree(g.module, m),
                             monomial_weight(g.module, m)});
        ce.cx.set_term(len, FreeWGModule(g.module.spec(), std::move(basis)));
    }
    for (const auto& [len, v] : ce.monos) {
        if (len == 0 || !ce.cx.has_term(len - 1)) continue;
        WGMap d(ce.cx.term(len), ce.cx.term(len - 1), 0);
        for (int j = 0; j < static_cast<int>(v.size()); ++j) {
            GammaVec dv = ce_differential(ring, g, v[j]);
            for (const auto& [mm, c] : dv) {
                int idx = ce.index_of(len - 1, mm);
                if (idx < 0) throw std::logic_error("CE differential left the truncation");
                d.add(ring, idx, j, c);
            }
        }
        ce.cx.set_diff(len, std::move(d));
    }
    return ce;
}

WGMap ce_functor_level(const Ring& ring, const CEComplex& src, const CEComplex& dst,
                       const WGMap& letter_map, int len, int max_weight) {
    const auto empty = std::vector<GammaMonomial>{};
    const auto& sv = src.monos.count(len) ? src.monos.at(len) : empty;
    FreeWGModule srcmod = src.cx.has_term(len) ? src.cx.term(len) : FreeWGModule(src.letters.spec(), {});
    FreeWGModule dstmod = dst.cx.has_term(len) ? dst.cx.term(len) : FreeWGModule(dst.letters.spec(), {});
    WGMap f(srcmod, dstmod, 0);
    for (int j = 0; j < static_cast<int>(sv.size()); ++j) {
        GammaVec img = gamma_apply_letter_map(ring, src.letters, dst.letters, letter_map, sv[j], max_weight);
        for (const auto& [mm, c] : img) {
            if (mm.length() != len) throw std::logic_error("CE functor changed monomial length");
            int idx = dst.index_of(len, mm);
            if (idx < 0) throw std::logic_error("CE functor left the truncation");
            f.add(ring, idx, j, c);
        }
    }
    return f;
}

Vec eval_tree(const Ring& ring, const LieOps& target, const BracketTree& t,
              const std::vector<Vec>& leaf_images) {
    switch (t.kind) {
        case BracketTree::Leaf:
            return leaf_images[t.leaf];
        case BracketTree::Br: {
            Vec l = eval_tree(ring, target, *t.left, leaf_images);
            Vec r = eval_tree(ring, target, *t.right, leaf_images);
            return bracket_vec(ring, target, l, r);
        }
        case BracketTree::Sq: {
            Vec l = eval_tree(ring, target, *t.left, leaf_images);
            return bracket_vec(ring, target, l, l);
        }
    }
    return {};
}

}  // namespace hce
