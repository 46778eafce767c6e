#include "hce/gamma.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hce {

int monomial_weight(const FreeWGModule& letters, const GammaMonomial& m) {
    int w = 0;
    for (auto [i, r] : m.factors) w += r * letters.elt(i).weight;
    return w;
}

int monomial_internal_degree(const FreeWGModule& letters, const GammaMonomial& m) {
    int d = 0;
    for (auto [i, r] : m.factors) d += r * letters.elt(i).degree;
    return d;
}

std::string monomial_name(const FreeWGModule& letters, const GammaMonomial& m) {
    if (m.factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto [i, r] : m.factors) {
        if (!first) os << "*";
        if (r == 1) os << "[" << letters.elt(i).name << "]";
        else os << "g" << r << "[" << letters.elt(i).name << "]";
        first = false;
    }
    return os.str();
}

std::vector<GammaMonomial> divided_power_basis(const FreeWGModule& letters, int max_weight) {
    for (const auto& b : letters.basis())
        if (b.weight == 0)
            throw std::invalid_argument("divided_power_basis: weight-0 letter " + b.name +
                                        " makes the truncation infinite");
    std::vector<GammaMonomial> out;
    GammaMonomial cur;
    std::function<void(int, int)> rec2 = [&](int idx, int wleft) {
        for (int i = idx; i < letters.rank(); ++i) {
            const auto& b = letters.elt(i);
            if (b.weight > wleft) continue;
            int max_mult = suspension_even(b) ? wleft / b.weight : 1;
            for (int r = 1; r <= max_mult; ++r) {
                cur.factors.push_back({i, r});
                out.push_back(cur);
                rec2(i + 1, wleft - r * b.weight);
                cur.factors.pop_back();
            }
        }
    };
    out.push_back(GammaMonomial{});
    rec2(0, max_weight);
    std::sort(out.begin(), out.end(), [&](const GammaMonomial& a, const GammaMonomial& b) {
        int la = a.length(), lb = b.length();
        if (la != lb) return la < lb;
        return a.factors < b.factors;
    });
    return out;
}

namespace {

BigInt binomial_big(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

}  // namespace

std::optional<std::pair<Scalar, GammaMonomial>> gamma_multiply(const Ring& ring,
                                                               const FreeWGModule& letters,
                                                               const GammaMonomial& a,
                                                               const GammaMonomial& b) {
    // Koszul sign: count inversions among odd suspended letters when the word
    // of b is merged into the word of a.  Divided letters are even and never
    // contribute.
    long inversions = 0;
    for (auto [ib, rb] : b.factors) {
        if (suspension_even(letters.elt(ib))) continue;
        for (auto [ia, ra] : a.factors) {
            if (suspension_even(letters.elt(ia))) continue;
            if (ia > ib) inversions += static_cast<long>(ra) * rb;
        }
    }

    BigInt coeff = 1;
    GammaMonomial out;
    size_t i = 0, j = 0;
    while (i < a.factors.size() || j < b.factors.size()) {
        if (j >= b.factors.size() || (i < a.factors.size() && a.factors[i].first < b.factors[j].first)) {
            out.factors.push_back(a.factors[i++]);
        } else if (i >= a.factors.size() || b.factors[j].first < a.factors[i].first) {
            out.factors.push_back(b.factors[j++]);
        } else {
            int letter = a.factors[i].first;
            int ra = a.factors[i].second, rb = b.factors[j].second;
            if (!suspension_even(letters.elt(letter))) return std::nullopt;  // exterior square
            coeff *= binomial_big(ra + rb, ra);
            out.factors.push_back({letter, ra + rb});
            ++i; ++j;
        }
    }
    Scalar c = ring.from_big(coeff);
    if (inversions % 2) c = ring.neg(c);
    if (ring.is_zero(c)) return std::nullopt;
    return std::make_pair(c, out);
}

void gamma_vec_add(const Ring& ring, GammaVec& v, const GammaMonomial& m, const Scalar& c) {
    if (ring.is_zero(c)) return;
    for (auto& [mm, cc] : v)
        if (mm == m) {
            cc = ring.add(cc, c);
            if (ring.is_zero(cc)) {
                mm = std::move(v.back().first);
                cc = v.back().second;
                v.pop_back();
            }
            return;
        }
    v.push_back({m, c});
}

GammaVec gamma_vec_mul(const Ring& ring, const FreeWGModule& letters, const GammaVec& v,
                       const GammaMonomial& m, const Scalar& c) {
    GammaVec out;
    for (const auto& [mm, cc] : v) {
        auto prod = gamma_multiply(ring, letters, mm, m);
        if (!prod) continue;
        gamma_vec_add(ring, out, prod->second, ring.mul(cc, ring.mul(c, prod->first)));
    }
    return out;
}

GammaVec gamma_apply_letter_map(const Ring& ring, const FreeWGModule& src_letters,
                                const FreeWGModule& dst_letters, const WGMap& f,
                                const GammaMonomial& m, int max_weight) {
    GammaVec acc;
    gamma_vec_add(ring, acc, GammaMonomial{}, ring.one());
    for (auto [letter, mult] : m.factors) {
        const Vec& img = f.column(letter);
        GammaVec expansion;  // expansion of gamma_mult(letter) under f
        if (!suspension_even(src_letters.elt(letter))) {
            // exterior letter, mult == 1: linear expansion
            for (const auto& [y, c] : img) {
                GammaMonomial g;
                g.factors = {{y, 1}};
                gamma_vec_add(ring, expansion, g, c);
            }
        } else {
            // gamma_r of a sum: iterate over weak compositions of mult across
            // the image letters; gamma_k(c*y) = c^k gamma_k(y), no multinomials.
            std::vector<std::pair<int, Scalar>> terms(img.begin(), img.end());
            std::function<void(size_t, int, GammaMonomial, Scalar)> rec =
                [&](size_t t, int left, GammaMonomial partial, Scalar coeff) {
                    if (t == terms.size()) {
                        if (left == 0) gamma_vec_add(ring, expansion, partial, coeff);
                        return;
                    }
                    for (int k = 0; k <= left; ++k) {
                        Scalar c2 = coeff;
                        for (int q = 0; q < k; ++q) c2 = ring.mul(c2, terms[t].second);
                        if (ring.is_zero(c2)) continue;
                        GammaMonomial p2 = partial;
                        if (k > 0) p2.factors.push_back({terms[t].first, k});
                        rec(t + 1, left - k, std::move(p2), c2);
                    }
                };
            rec(0, mult, GammaMonomial{}, ring.one());
            // factors within each expansion monomial may be unsorted; fix.
            for (auto& [mm, _] : expansion) std::sort(mm.factors.begin(), mm.factors.end());
        }
        GammaVec next;
        for (const auto& [am, ac] : acc)
            for (const auto& [em, ec] : expansion) {
                auto prod = gamma_multiply(ring, dst_letters, am, em);
                if (!prod) continue;
                if (monomial_weight(dst_letters, prod->second) > max_weight) continue;
                gamma_vec_add(ring, next, prod->second, ring.mul(ring.mul(ac, ec), prod->first));
            }
        acc = std::move(next);
        if (acc.empty()) break;
    }
    return acc;
}

}  // namespace hce
