#include "hce/specseq.hpp"

#include <algorithm>
#include <stdexcept>

namespace hce {

Page e2_page(const Ring& ring, const HeckeLieAlgebra& g, int max_weight, int threads) {
    HomologySummary H = hecke_homology(ring, g, max_weight, threads);
    Page page;
    page.cohomological = false;
    for (const auto& [key, s] : H.entries) {
        auto [n, i, w] = key;
        page.entries[{n - 1, i + 1, w}] = s;
    }
    return page;
}

Page cohomological_e2_page(const Ring& ring, const HeckeLieAlgebra& g, int max_weight, int threads) {
    HomologySummary H = hecke_cohomology(ring, g, max_weight, threads);
    Page page;
    page.cohomological = true;
    for (const auto& [key, s] : H.entries) {
        auto [n, i, w] = key;
        page.entries[{n - 1, 2 * n + i - 1, w}] = s;
    }
    return page;
}

namespace {

int drop_torsion_exponent(ModuleSummary& m) {
    if (m.torsion.empty()) throw std::invalid_argument("assertion needs a p-power torsion class");
    if (m.torsion.size() > 1)
        throw std::invalid_argument("assertion target torsion is not a single cyclic summand");
    int e = m.torsion[0] - 1;
    m.torsion.clear();
    if (e > 0) m.torsion.push_back(e);
    return e;
}

}  // namespace

Page apply_assertions(const Page& page, const std::vector<DifferentialAssertion>& asserts) {
    Page out = page;
    for (const auto& a : asserts) {
        auto [s, t, w] = a.source;
        auto sit = out.entries.find({s, t, w});
        if (sit == out.entries.end() || sit->second.is_zero())
            throw std::invalid_argument("assertion from an empty source bidegree");
        if (a.effect == DifferentialAssertion::Effect::Dies) {
            drop_torsion_exponent(sit->second);
            if (sit->second.is_zero()) out.entries.erase(sit);
            continue;
        }
        if (sit->second.free_rank < 1)
            throw std::invalid_argument("surjecting assertion needs a free class at the source");
        int ts = out.cohomological ? s + a.r : s - a.r;
        int tt = t + a.r - 1;
        // the coefficient ring is 2-periodic: match the target bidegree mod 2 in t
        ModuleSummary* target = nullptr;
        for (auto& [key, m] : out.entries) {
            auto [ks, kt, kw] = key;
            if (ks == ts && kw == w && ((kt - tt) % 2 + 2) % 2 == 0 && !m.torsion.empty()) {
                if (target) throw std::invalid_argument("ambiguous assertion target");
                target = &m;
            }
        }
        if (!target) {
            // a bidegree-matching free-only entry is a violation; absence too
            for (auto& [key, m] : out.entries) {
                auto [ks, kt, kw] = key;
                if (ks == ts && kw == w && ((kt - tt) % 2 + 2) % 2 == 0)
                    throw std::invalid_argument("assertion targets a free class");
            }
            throw std::invalid_argument("assertion target bidegree is empty");
        }
        drop_torsion_exponent(*target);
    }
    // prune zero entries
    for (auto it = out.entries.begin(); it != out.entries.end();)
        it = it->second.is_zero() ? out.entries.erase(it) : std::next(it);
    return out;
}

GradedAnswer assemble(const Page& einf) {
    GradedAnswer ans;
    std::map<std::pair<int, int>, int> torsion_lines;  // (degree, weight) -> s of the torsion line
    for (const auto& [key, m] : einf.entries) {
        auto [s, t, w] = key;
        int q = einf.cohomological ? t - s : s + t;
        auto& entry = ans.entries[{q, w}];
        entry.free_rank += m.free_rank;
        if (!m.torsion.empty()) {
            auto [it, fresh] = torsion_lines.emplace(std::make_pair(q, w), s);
            if (!fresh && it->second != s)
                throw std::runtime_error("ambiguous extension: two lines contribute torsion in one degree");
            entry.torsion.insert(entry.torsion.end(), m.torsion.begin(), m.torsion.end());
            std::sort(entry.torsion.begin(), entry.torsion.end());
        }
    }
    for (auto it = ans.entries.begin(); it != ans.entries.end();)
        it = it->second.is_zero() ? ans.entries.erase(it) : std::next(it);
    return ans;
}

int euclidean_cokernel_exponent(int n, int k) {
    auto even = [](int x) { return ((x % 2) + 2) % 2 == 0; };
    if (even(n)) return even(k) ? n / 2 - 1 : n / 2;
    return (n - 1) / 2;
}

GradedAnswer closed_form_euclidean(const Ring& ring, int n, int k, const WeightPOpModel& model) {
    auto even = [](int x) { return ((x % 2) + 2) % 2 == 0; };
    const int p = static_cast<int>(ring.p());
    GradedAnswer ans;
    auto add_free = [&](int degree) { ans.entries[{degree, p}].free_rank += 1; };

    if (even(n) && even(k)) {
        add_free(k * p);
        add_free(p * k + n - 1);
    } else if (!even(n) && even(k)) {
        add_free(k * p);
    } else if (!even(n) && !even(k)) {
        add_free(k + (2 * k + n - 1) * (p - 1) / 2);
    }
    int m = euclidean_cokernel_exponent(n, k);
    if (m > 0) {
        Mat em = mat_pow(ring, model.euler_mult, m);
        ModuleSummary coker = cokernel_summary(ring, em);
        if (!coker.is_zero()) {
            auto& entry = ans.entries[{k - 1, p}];
            entry.free_rank += coker.free_rank;
            entry.torsion.insert(entry.torsion.end(), coker.torsion.begin(), coker.torsion.end());
            std::sort(entry.torsion.begin(), entry.torsion.end());
        }
    }
    for (auto it = ans.entries.begin(); it != ans.entries.end();)
        it = it->second.is_zero() ? ans.entries.erase(it) : std::next(it);
    return ans;
}

namespace {

long binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) { r = r * (n - i) / (i + 1); }
    return r;
}

// number of degree-d monomials in m variables (1 for d = 0 even when m = 0)
long monomial_count(long d, long m) {
    if (d < 0) return 0;
    if (m == 0) return d == 0 ? 1 : 0;
    return binom(d + m - 1, m - 1);
}

}  // namespace

long closed_form_surface_betti(int g, long p, int i) {
    if (i < 0 || i > p) return 0;
    long beta = 0;
    for (int j = 0; j <= g; ++j) {
        if (((i - j) % 2 + 2) % 2 != 0) continue;
        beta += (binom(2 * g, j) - binom(2 * g, j - 2)) * monomial_count((i - j) / 2, 2 * g);
    }
    if (i == p) return beta;
    for (int j = g + 1; j <= 2 * g + 1; ++j) {
        if (((i - j) % 2 + 2) % 2 != 0) continue;
        beta += (binom(2 * g, j - 1) - binom(2 * g, j + 1)) * monomial_count((i - j) / 2, 2 * g);
    }
    return beta;
}

std::pair<long, long> fp_surface_homology(int g, long p) {
    long even = 0, odd = 0;
    for (int i = 0; i < p; i += 2) even += closed_form_surface_betti(g, p, i);
    for (int i = 1; i <= p; i += 2) odd += closed_form_surface_betti(g, p, i);
    return {even, odd};
}

long kh_multiplicity(long p, int h, int m) {
    long d = 1, ph = 1;
    for (int i = 0; i < h; ++i) ph *= p;
    d = (ph - 1) / (p - 1);
    return std::min<long>(d, m);
}

}  // namespace hce
