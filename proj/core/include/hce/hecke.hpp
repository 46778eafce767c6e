#pragma once

#include "hce/lie.hpp"

namespace hce {

/// Weight-p operation model: the rank-d module E0[e]/f(e) together with
/// multiplication by the Euler class e in the basis 1, e, ..., e^(d-1).
/// Suspension from an even source degree is the identity, from an odd source
/// degree it is euler_mult.
struct WeightPOpModel {
    RingSpec spec;
    int rank = 1;
    Mat euler_mult;
    std::vector<Scalar> f_coeffs;  // c_0..c_{d-1} of the monic f, when known

    std::string op_name(int t) const { return rank == 1 ? "a" : "a" + std::to_string(t); }
};

/// Height-1 model: rank 1, e = p.
WeightPOpModel height1_model(const Ring& ring);

/// Model presented by a monic Euler polynomial f (coefficients c_0..c_{d-1});
/// euler_mult is the companion matrix.  Requires v_p(c_0) > 0.
WeightPOpModel model_from_euler_poly(const Ring& ring, const std::vector<Scalar>& f_coeffs);

/// e^(number of odd degrees among source_degree .. source_degree + n - 1):
/// the n-fold suspension of weight-p operations starting at the given degree.
Mat susp_power(const Ring& ring, const WeightPOpModel& model, int source_degree, int n);

/// Hecke Lie algebra: a Lie algebra with a weight-p operation action.  For a
/// generator x, column t of the action matrix is the expansion of (op_t)(x)
/// over the target generators, which sit in degree deg(x)-1, weight p*wt(x).
struct HeckeLieAlgebra {
    GradedLieAlgebra lie;
    WeightPOpModel model;
    struct Action {
        std::vector<int> targets;  // row indices into lie.module
        Mat matrix;                // |targets| x model.rank
    };
    std::map<int, Action> action;
};

/// Checks the Lie axioms, the action grading, and bracket-centrality of
/// action targets ([x, a(y)] = 0 holds because brackets out of action-image
/// generators vanish).
std::optional<std::string> check_hecke(const Ring& ring, const HeckeLieAlgebra& g);

/// Two-generator-block algebra of an n-fold looped free generator: x in
/// (degree a, weight w), a model block y in (degree a-1, weight p*w), action
/// e^(floor(n/2)) for a even and e^(ceil(n/2)) for a odd, zero bracket.
HeckeLieAlgebra atomic_algebra(const Ring& ring, int a, int n, int w, const WeightPOpModel& model);

/// Hecke Lie algebra of weight-graded configurations of Euclidean n-space
/// with labels in degree k: atomic(k-1, n, 1), plus atomic(n+2k-2, n, 2)
/// when n+k-1 is odd.
HeckeLieAlgebra euclidean_algebra(const Ring& ring, int n, int k, const WeightPOpModel& model);

/// Once-punctured orientable genus-g surface algebra.
HeckeLieAlgebra surface_algebra(const Ring& ring, int g, const WeightPOpModel& model);

/// One level of the additive resolution: symbols [s_1|...|s_r|x] where each
/// slot is the identity (-1) or a model basis operation, truncated by weight.
struct ARLetter {
    std::vector<int> slots;
    int base = 0;
};

struct ARLevels {
    int max_weight = 0;
    int top_level = 0;  // R: levels 0..R are materialised
    std::vector<FreeWGModule> mods;
    std::vector<std::vector<ARLetter>> letters;
    std::vector<GradedLieAlgebra> lie_levels;        // bracket per level
    std::vector<std::vector<WGMap>> faces;           // faces[r][k] : mods[r] -> mods[r-1]
    std::vector<std::vector<std::vector<int>>> degens;  // degens[r][i] : index map mods[r] -> mods[r+1]
};

/// Builds levels 0..R with R = floor(W / (p * min generator weight)).
/// Requires W < p^2 * (min generator weight) so that composite operation
/// slots are weight-truncated to zero.
ARLevels additive_resolution(const Ring& ring, const HeckeLieAlgebra& g, int max_weight);

/// The Chevalley-Eilenberg complex applied levelwise to the additive
/// resolution, normalised (degeneracy images dropped) and totalised.
struct HeckeCE {
    ARLevels ar;
    std::vector<CEComplex> ce;   // per simplicial level
    DoubleComplex normalized;    // columns = simplicial levels
    BigradedComplex total;
};

HeckeCE hecke_ce_complex(const Ring& ring, const HeckeLieAlgebra& g, int max_weight);

/// Homology of the total complex, indexed by (total degree, internal degree,
/// weight).
HomologySummary hecke_homology(const Ring& ring, const HeckeLieAlgebra& g, int max_weight,
                               int threads = 1);

/// Cohomology of the dualised total complex (free ranks match homology;
/// torsion shifts one degree up).  Keys: (total degree n of the primal
/// complex, primal internal degree i, weight).
HomologySummary hecke_cohomology(const Ring& ring, const HeckeLieAlgebra& g, int max_weight,
                                 int threads = 1);

}  // namespace hce
