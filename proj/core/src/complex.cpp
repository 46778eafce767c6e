#include "hce/complex.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hce {

int configured_threads() {
    const char* env = std::getenv("HECKE_CE_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n > 0 ? n : 1;
}

void verify(const Ring& ring, const BigradedComplex& c) {
    for (const auto& [n, m] : c.terms()) {
        if (!c.has_diff(n)) continue;
        const WGMap& d = c.diff(n);
        d.check_grading(ring);
        if (!c.has_diff(n + 1)) continue;
        const WGMap& d2 = c.diff(n + 1);
        for (int j = 0; j < d2.source().rank(); ++j) {
            Vec v = d.apply(ring, d2.column(j));
            if (!v.empty()) {
                std::ostringstream os;
                os << "d o d != 0 at level " << n + 1 << " on basis element "
                   << d2.source().elt(j).name;
                throw std::logic_error(os.str());
            }
        }
        (void)m;
    }
}

namespace {

struct BlockTask {
    int n, i, w;
    Mat out, in;
};

HomologySummary run_blocks(const Ring& ring, std::vector<BlockTask> tasks, int threads) {
    HomologySummary H;
    if (threads <= 1 || tasks.size() <= 1) {
        for (auto& t : tasks) H.set(t.n, t.i, t.w, homology_summary(ring, t.out, t.in));
        return H;
    }
    std::atomic<size_t> next{0};
    std::vector<ModuleSummary> results(tasks.size());
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                size_t k = next.fetch_add(1);
                if (k >= tasks.size()) return;
                results[k] = homology_summary(ring, tasks[k].out, tasks[k].in);
            }
        });
    for (auto& th : pool) th.join();
    for (size_t k = 0; k < tasks.size(); ++k) H.set(tasks[k].n, tasks[k].i, tasks[k].w, results[k]);
    return H;
}

}  // namespace

HomologySummary homology(const Ring& ring, const BigradedComplex& c, int threads) {
    if (ring.spec().tag == RingTag::TruncPoly)
        throw std::invalid_argument("homology: flatten TruncPoly coefficients first");
    std::vector<BlockTask> tasks;
    for (const auto& [n, m] : c.terms()) {
        for (auto [deg, w] : m.blocks()) {
            std::vector<int> mid = m.block(deg, w);
            std::vector<int> below =
                c.has_term(n - 1) ? c.term(n - 1).block(deg, w) : std::vector<int>{};
            std::vector<int> above =
                c.has_term(n + 1) ? c.term(n + 1).block(deg, w) : std::vector<int>{};
            Mat out(static_cast<int>(below.size()), static_cast<int>(mid.size()));
            for (auto& x : out.a) x = ring.zero();
            if (c.has_diff(n)) out = c.diff(n).block_matrix(ring, below, mid);
            Mat in(static_cast<int>(mid.size()), static_cast<int>(above.size()));
            for (auto& x : in.a) x = ring.zero();
            if (c.has_diff(n + 1)) in = c.diff(n + 1).block_matrix(ring, mid, above);
            tasks.push_back({n, deg, w, std::move(out), std::move(in)});
        }
    }
    return run_blocks(ring, std::move(tasks), threads);
}

HomologySummary cohomology_of_dual(const Ring& ring, const BigradedComplex& c, int threads) {
    std::vector<BlockTask> tasks;
    for (const auto& [n, m] : c.terms()) {
        for (auto [deg, w] : m.blocks()) {
            std::vector<int> mid = m.block(deg, w);
            std::vector<int> below =
                c.has_term(n - 1) ? c.term(n - 1).block(deg, w) : std::vector<int>{};
            std::vector<int> above =
                c.has_term(n + 1) ? c.term(n + 1).block(deg, w) : std::vector<int>{};
            // dual: out = transpose(d_{n+1} block), in = transpose(d_n block)
            Mat dn1(static_cast<int>(mid.size()), static_cast<int>(above.size()));
            for (auto& x : dn1.a) x = ring.zero();
            if (c.has_diff(n + 1)) dn1 = c.diff(n + 1).block_matrix(ring, mid, above);
            Mat dn(static_cast<int>(below.size()), static_cast<int>(mid.size()));
            for (auto& x : dn.a) x = ring.zero();
            if (c.has_diff(n)) dn = c.diff(n).block_matrix(ring, below, mid);
            tasks.push_back({n, deg, w, mat_transpose(dn1), mat_transpose(dn)});
        }
    }
    return run_blocks(ring, std::move(tasks), threads);
}

BigradedComplex total_complex(const Ring& ring, const DoubleComplex& d) {
    BigradedComplex tot(d.spec);
    // Collect per total degree n the pieces (r, j = n - r).
    std::map<int, std::vector<std::pair<int, int>>> pieces;  // n -> [(r, j)]
    for (const auto& [r, col] : d.columns)
        for (const auto& [j, m] : col.terms()) pieces[j + r].push_back({r, j});

    struct Loc { int r, j, offset; };
    std::map<int, std::vector<Loc>> layout;
    std::map<int, FreeWGModule> totmod;
    for (auto& [n, ps] : pieces) {
        std::sort(ps.begin(), ps.end());
        std::vector<BasisElt> basis;
        std::vector<Loc> locs;
        for (auto [r, j] : ps) {
            const FreeWGModule& m = d.columns.at(r).term(j);
            locs.push_back({r, j, static_cast<int>(basis.size())});
            for (const auto& b : m.basis())
                basis.push_back({"r" + std::to_string(r) + ":" + b.name, b.degree, b.weight});
        }
        layout[n] = std::move(locs);
        totmod[n] = FreeWGModule(d.spec, std::move(basis));
    }
    for (auto& [n, m] : totmod) tot.set_term(n, m);

    auto find_offset = [&](int n, int r, int j) -> int {
        for (const auto& L : layout.at(n))
            if (L.r == r && L.j == j) return L.offset;
        return -1;
    };

    for (const auto& [n, m] : totmod) {
        if (!totmod.count(n - 1)) {
            if (n > 0) { /* nothing below */ }
            continue;
        }
        WGMap dn(m, totmod.at(n - 1), 0);
        for (const auto& L : layout.at(n)) {
            const BigradedComplex& col = d.columns.at(L.r);
            const FreeWGModule& src = col.term(L.j);
            // vertical differential: (r, j) -> (r, j-1)
            if (col.has_diff(L.j) && col.has_term(L.j - 1)) {
                int off = find_offset(n - 1, L.r, L.j - 1);
                if (off >= 0) {
                    const WGMap& v = col.diff(L.j);
                    for (int s = 0; s < src.rank(); ++s)
                        for (const auto& [t, cval] : v.column(s)) dn.add(ring, off + t, L.offset + s, cval);
                }
            }
            // horizontal differential with sign (-1)^j: (r, j) -> (r-1, j)
            auto hit = d.hmaps.find({L.r, L.j});
            if (hit != d.hmaps.end()) {
                int off = find_offset(n - 1, L.r - 1, L.j);
                if (off >= 0) {
                    const WGMap& h = hit->second;
                    bool negate = L.j % 2 != 0;
                    for (int s = 0; s < src.rank(); ++s)
                        for (const auto& [t, cval] : h.column(s))
                            dn.add(ring, off + t, L.offset + s, negate ? ring.neg(cval) : cval);
                }
            }
        }
        tot.set_diff(n, std::move(dn));
    }
    return tot;
}

}  // namespace hce
