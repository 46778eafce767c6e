#pragma once

#include <array>

#include "hce/hecke.hpp"

namespace hce {

/// Spectral sequence page.  Homological pages (Euclidean inputs) follow
/// E2[s,t] = H_{s+1}(total)_{t-1}: s = n - 1, t = i + 1, and classes land in
/// total degree s + t.  Cohomological pages (surface inputs) are produced
/// from the dualised complex with s = n - 1 and t chosen so that the answer
/// degree is t - s (so t = 2n + i - 1 in terms of the primal block).
struct Page {
    bool cohomological = false;
    int number = 2;
    std::map<std::tuple<int, int, int>, ModuleSummary> entries;  // (s, t, w)

    const ModuleSummary* find(int s, int t, int w) const {
        auto it = entries.find({s, t, w});
        return it == entries.end() ? nullptr : &it->second;
    }
};

Page e2_page(const Ring& ring, const HeckeLieAlgebra& g, int max_weight, int threads = 1);
Page cohomological_e2_page(const Ring& ring, const HeckeLieAlgebra& g, int max_weight,
                           int threads = 1);

/// Externally justified differential.  "surjects onto torsion": the free
/// class at `source` maps onto the order-p part of the torsion class in the
/// target bidegree (source + r steps along the differential), dropping its
/// exponent by one; free ranks are unchanged.  "dies": the torsion class at
/// `source` itself is killed by one exponent unit (used where the paper
/// infers death by comparison rather than by an in-page source).
struct DifferentialAssertion {
    int r = 2;
    std::array<int, 3> source{0, 0, 0};  // (s, t, w)
    enum class Effect { SurjectsOntoTorsion, Dies } effect = Effect::SurjectsOntoTorsion;
};

/// Applies assertions; validates bidegree arithmetic (t matching mod 2, the
/// ring being 2-periodic), nonempty sources, and p-power-torsion targets.
Page apply_assertions(const Page& page, const std::vector<DifferentialAssertion>& asserts);

/// Final graded answer: per (degree, weight) a free rank and torsion list.
/// Degree = s + t on homological pages and t - s on cohomological ones.
struct GradedAnswer {
    std::map<std::pair<int, int>, ModuleSummary> entries;  // (degree, weight)

    bool operator==(const GradedAnswer& o) const { return entries == o.entries; }
};

/// Collapses a page across lines.  Throws when two lines contribute torsion
/// to the same (degree, weight) (an ambiguous extension).
GradedAnswer assemble(const Page& einf);

/// Closed-form weight-p answer for Euclidean configurations, with the
/// torsion part presented as coker(e^m) on the operation model.
GradedAnswer closed_form_euclidean(const Ring& ring, int n, int k, const WeightPOpModel& model);

/// The cokernel exponent m in closed_form_euclidean's torsion part.
int euclidean_cokernel_exponent(int n, int k);

/// Betti number beta_i of the weight-p part for the punctured genus-g
/// surface, 0 <= i <= p (separate branch at i = p).
long closed_form_surface_betti(int g, long p, int i);

/// Even/odd F_p Betti totals: even over i < p, odd over i <= p.
std::pair<long, long> fp_surface_homology(int g, long p);

/// K(h)-multiplicity min((p^h-1)/(p-1), m).
long kh_multiplicity(long p, int h, int m);

}  // namespace hce
