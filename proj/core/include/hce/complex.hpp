#pragma once

#include <map>
#include <tuple>

#include "hce/wgmod.hpp"

namespace hce {

/// Chain complex of weighted graded modules, nonnegatively graded by the
/// homological index n, with weight-preserving degree-0 differentials
/// d_n : C_n -> C_{n-1}.
class BigradedComplex {
  public:
    BigradedComplex() = default;
    explicit BigradedComplex(RingSpec spec) : spec_(spec) {}

    const RingSpec& spec() const { return spec_; }
    void set_term(int n, FreeWGModule m) { terms_[n] = std::move(m); }
    void set_diff(int n, WGMap d) { diffs_[n] = std::move(d); }
    bool has_term(int n) const { return terms_.count(n) > 0; }
    const FreeWGModule& term(int n) const { return terms_.at(n); }
    bool has_diff(int n) const { return diffs_.count(n) > 0; }
    const WGMap& diff(int n) const { return diffs_.at(n); }
    int max_index() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    const std::map<int, FreeWGModule>& terms() const { return terms_; }

  private:
    RingSpec spec_;
    std::map<int, FreeWGModule> terms_;
    std::map<int, WGMap> diffs_;
};

/// Asserts gradings and d o d = 0; reports the first failing basis element.
void verify(const Ring& ring, const BigradedComplex& c);

/// Per (homological degree n, internal degree i, weight w): free rank and
/// p-power torsion exponents.
struct HomologySummary {
    std::map<std::tuple<int, int, int>, ModuleSummary> entries;

    void set(int n, int i, int w, ModuleSummary s) {
        if (!s.is_zero()) entries[{n, i, w}] = std::move(s);
    }
    const ModuleSummary* find(int n, int i, int w) const {
        auto it = entries.find({n, i, w});
        return it == entries.end() ? nullptr : &it->second;
    }
    bool operator==(const HomologySummary& o) const { return entries == o.entries; }
};

/// SNF-based homology of every (n, i, w) block.  Parallelises across blocks
/// when `threads` > 1 (results are merged in key order, so output is
/// deterministic).
HomologySummary homology(const Ring& ring, const BigradedComplex& c, int threads = 1);

/// Cohomology of the degreewise dual complex, indexed by the primal
/// homological degree n and the primal internal degree i of the block.
HomologySummary cohomology_of_dual(const Ring& ring, const BigradedComplex& c, int threads = 1);

/// Double complex: vertical complexes D[r] (differential lowers the vertical
/// index j) joined by horizontal chain maps h_r : D[r] -> D[r-1].
struct DoubleComplex {
    RingSpec spec;
    std::map<int, BigradedComplex> columns;      // r -> vertical complex
    std::map<std::pair<int, int>, WGMap> hmaps;  // (r, j) -> map D[r]_j -> D[r-1]_j
};

/// Total complex T_n = direct sum over j + r = n, with differential
/// d = d_vert + (-1)^j h.  Basis names are prefixed "r<r>:".
BigradedComplex total_complex(const Ring& ring, const DoubleComplex& d);

/// Number of worker threads from HECKE_CE_THREADS (default 1).
int configured_threads();

}  // namespace hce
