#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hce/linalg.hpp"
#include "hce/scalar.hpp"

namespace hce {

struct BasisElt {
    std::string name;
    int degree = 0;   // internal degree
    int weight = 0;   // nonnegative; carries no Koszul sign

    bool operator==(const BasisElt& o) const {
        return name == o.name && degree == o.degree && weight == o.weight;
    }
};

/// Finite free weighted graded module with a named, ordered basis.
class FreeWGModule {
  public:
    FreeWGModule() = default;
    FreeWGModule(RingSpec spec, std::vector<BasisElt> basis);

    const RingSpec& spec() const { return spec_; }
    const std::vector<BasisElt>& basis() const { return basis_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const BasisElt& elt(int i) const { return basis_[i]; }
    int index_of(const std::string& name) const;

    /// Indices of basis elements at the given (degree, weight).
    std::vector<int> block(int degree, int weight) const;
    /// All (degree, weight) pairs present, sorted.
    std::vector<std::pair<int, int>> blocks() const;

  private:
    RingSpec spec_;
    std::vector<BasisElt> basis_;
    std::map<std::string, int> by_name_;
};

/// Sparse linear combination over a module's basis.
using Vec = std::map<int, Scalar>;

void vec_add_term(const Ring& ring, Vec& v, int idx, const Scalar& c);
Vec vec_scale(const Ring& ring, const Scalar& c, const Vec& v);
Vec vec_add(const Ring& ring, const Vec& a, const Vec& b);

/// Map of weighted graded modules.  Entries are stored column-wise:
/// image(source basis j) = sparse vector over the target basis.
/// Nonzero entries must satisfy deg(target) = deg(source) + degree_shift and
/// wt(target) = wt(source).
class WGMap {
  public:
    WGMap() = default;
    WGMap(FreeWGModule source, FreeWGModule target, int degree_shift = 0);

    const FreeWGModule& source() const { return source_; }
    const FreeWGModule& target() const { return target_; }
    int degree_shift() const { return degree_shift_; }

    void set(int target_idx, int source_idx, const Scalar& c);
    void add(const Ring& ring, int target_idx, int source_idx, const Scalar& c);
    const Vec& column(int source_idx) const { return cols_[source_idx]; }
    void set_column(int source_idx, Vec col) { cols_[source_idx] = std::move(col); }

    Vec apply(const Ring& ring, const Vec& v) const;
    /// Checks the grading constraint on every stored entry.
    void check_grading(const Ring& ring) const;

    /// Dense block of the map from source (degree,weight) to the matching
    /// target block.  Row/col order follows the index lists supplied.
    Mat block_matrix(const Ring& ring, const std::vector<int>& target_rows,
                     const std::vector<int>& source_cols) const;

    static WGMap compose(const Ring& ring, const WGMap& f, const WGMap& g);  // f after g
    bool is_zero(const Ring& ring) const;

  private:
    FreeWGModule source_, target_;
    int degree_shift_ = 0;
    std::vector<Vec> cols_;
};

/// Tensor product: basis = pairs in lexicographic (left, right) order, with
/// degrees and weights adding.  Names are "a*b".
FreeWGModule tensor(const FreeWGModule& a, const FreeWGModule& b);
int tensor_index(const FreeWGModule& a, const FreeWGModule& b, int i, int j);

/// Koszul sign of swapping x (degree i) past y (degree j): (-1)^(i*j).
/// Weights never contribute signs.
inline int koszul_sign(int deg_x, int deg_y) { return (deg_x * deg_y) % 2 ? -1 : 1; }

/// Dual of a map between finite free modules: transpose matrix; degrees
/// negate, weights persist.
WGMap dualize(const Ring& ring, const WGMap& f);
FreeWGModule dual_module(const FreeWGModule& m);

}  // namespace hce
