#pragma once

#include "hce/lie.hpp"

namespace hce {

/// Simplicial object in weighted graded modules, presented by levels 0..R
/// with face maps (faces[r][k], k = 0..r) and degeneracies given as
/// basis-to-basis index maps (degens[r][i] : mods[r] -> mods[r+1], i = 0..r).
struct SimplicialModules {
    std::vector<FreeWGModule> mods;
    std::vector<std::vector<WGMap>> faces;
    std::vector<std::vector<std::vector<int>>> degens;
};

/// Normalised (Moore) complex: degeneracy images are dropped and the
/// differential is the projected alternating face sum.
BigradedComplex normalize_modules(const Ring& ring, const SimplicialModules& s);

/// Full levels with the alternating face sum (no degeneracy quotient);
/// quasi-isomorphic to the normalised complex.
BigradedComplex unnormalized_complex(const Ring& ring, const SimplicialModules& s);

/// Spot-checks the simplicial identities d_i d_j = d_{j-1} d_i (i < j) and
/// the face/degeneracy relations on basis elements; throws on failure.
void check_simplicial_identities(const Ring& ring, const SimplicialModules& s);

/// Levelwise Chevalley-Eilenberg complexes of a simplicial Lie algebra,
/// normalised in the simplicial direction.  `letter_faces[r][k]` and
/// `letter_degens[r][i]` are the face/degeneracy data on the underlying
/// modules of the Lie algebra levels; `ce[r]` their CE complexes.
DoubleComplex normalize_ce_levels(const Ring& ring, const std::vector<CEComplex>& ce,
                                  const std::vector<std::vector<WGMap>>& letter_faces,
                                  const std::vector<std::vector<std::vector<int>>>& letter_degens,
                                  int max_weight);

}  // namespace hce
