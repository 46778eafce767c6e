#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "hce/complex.hpp"
#include "hce/gamma.hpp"

namespace hce {

/// Weighted graded Lie algebra presented by structure constants on a finite
/// free module.  Brackets absent from the table are zero.
struct GradedLieAlgebra {
    FreeWGModule module;
    std::map<std::pair<int, int>, Vec> bracket;  // (a,b) -> [a,b]

    Vec bracket_of(int a, int b) const {
        auto it = bracket.find({a, b});
        return it == bracket.end() ? Vec{} : it->second;
    }
    void set_bracket(const Ring& ring, int a, int b, Vec v);
    /// Sets [a,b] = v and [b,a] = -(-1)^(|a||b|) v.
    void set_bracket_pair(const Ring& ring, int a, int b, const Vec& v);
};

/// Abelian Lie algebra on the given module.
GradedLieAlgebra abelian_lie(const FreeWGModule& m);

/// Verifies grading, graded antisymmetry, graded Jacobi, and the cube
/// relation [a,[a,a]] = 0; returns a description of the first violation.
std::optional<std::string> check_axioms(const Ring& ring, const GradedLieAlgebra& g);

/// Chevalley-Eilenberg complex: divided powers of the suspension with the
/// explicit four-term differential.  Homological degree = monomial length;
/// internal degree of a monomial = sum of the unsuspended letter degrees, so
/// the differential preserves (internal degree, weight).
struct CEComplex {
    FreeWGModule letters;  // underlying module of the algebra
    std::map<int, std::vector<GammaMonomial>> monos;  // length -> monomials
    BigradedComplex cx;

    int index_of(int len, const GammaMonomial& m) const;
};

CEComplex ce_complex(const Ring& ring, const GradedLieAlgebra& g, int max_weight);

/// Differential of a single monomial (used by the complex builder and tests).
GammaVec ce_differential(const Ring& ring, const GradedLieAlgebra& g, const GammaMonomial& m);

/// Functorial extension of a letter-level chain map to CE level `len`.
WGMap ce_functor_level(const Ring& ring, const CEComplex& src, const CEComplex& dst,
                       const WGMap& letter_map, int len, int max_weight);

/// --- free Lie algebras --------------------------------------------------

/// Bracketing shape of a free-Lie basis element.
struct BracketTree {
    enum Kind { Leaf, Br, Sq } kind = Leaf;
    int leaf = -1;  // generator index when kind == Leaf
    std::shared_ptr<BracketTree> left, right;  // Br: [left,right]; Sq: [left,left]
};

/// Bracket lookup used by tree evaluation; lets free Lie algebras supply
/// their structure constants lazily.
struct LieOps {
    const FreeWGModule* module = nullptr;
    std::function<Vec(int, int)> bracket;
};

LieOps ops_of(const GradedLieAlgebra& g);

/// Free graded Lie algebra on `generators`, truncated at total weight <= W.
/// Basis: Lyndon-word bracketings plus, for each odd-degree Lyndon element l,
/// the square class [l,l].  Basis order: (weight, word length, lex), which
/// makes generator inclusions order-preserving basis injections.  Structure
/// constants are computed on demand inside the tensor algebra.
class FreeLieAlgebra {
  public:
    FreeLieAlgebra(const Ring& ring, FreeWGModule generators, int max_weight);

    const FreeWGModule& generators() const { return gens_; }
    const FreeWGModule& module() const { return module_; }
    const std::vector<BracketTree>& trees() const { return trees_; }
    int word_length(int i) const { return word_length_[i]; }
    int max_weight() const { return max_weight_; }

    /// [basis a, basis b] expanded in the basis (memoized).
    const Vec& bracket(int a, int b) const;
    LieOps ops() const;

    /// Full structure-constant table (intended for small inputs).
    GradedLieAlgebra materialize() const;

  private:
    using Word = std::vector<int>;
    using TensorElt = std::map<Word, Scalar>;

    const Ring& ring_;
    FreeWGModule gens_;
    FreeWGModule module_;
    int max_weight_ = 0;
    std::vector<BracketTree> trees_;
    std::vector<int> word_length_;
    std::vector<TensorElt> tensor_;  // tensor-algebra representative per basis element
    // leading (lex-least) word -> basis index; distinct across the basis, so
    // expansion in the basis is a triangular elimination, not a dense solve
    std::map<Word, int> by_leading_word_;
    mutable std::map<std::pair<int, int>, Vec> cache_;

    TensorElt tensor_bracket(const TensorElt& a, const TensorElt& b) const;
    Vec expand_in_basis(TensorElt t, const std::string& what) const;
    int word_degree(const Word& w) const;
    int word_weight(const Word& w) const;
};

/// Evaluates a bracketing tree with linear leaf images through a bracket
/// provider (bilinear extension).
Vec eval_tree(const Ring& ring, const LieOps& target, const BracketTree& t,
              const std::vector<Vec>& leaf_images);

/// Canonical rendering of a bracketing tree; leaves are parenthesised so the
/// rendering stays injective when generator names are themselves bracket
/// expressions (as happens in iterated bar levels).
std::string bracket_tree_name(const BracketTree& t, const FreeWGModule& gens);

/// Lie algebra homology through the reduced bar construction over the free
/// Lie monad; independent of the Chevalley-Eilenberg path.  Output indexing
/// matches ce homology: the bar degree is shifted up by one and the unit is
/// added at (0,0,0).
HomologySummary lie_homology_via_bar(const Ring& ring, const GradedLieAlgebra& g, int max_weight);

}  // namespace hce
