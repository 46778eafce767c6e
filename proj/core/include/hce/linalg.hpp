#pragma once

#include <optional>
#include <vector>

#include "hce/scalar.hpp"

namespace hce {

/// Dense matrix of Scalars.  Blocks in this engine stay small; sparsity is
/// handled at the level of basis bookkeeping, not storage.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(const Ring& ring, int n);
};

Mat mat_mul(const Ring& ring, const Mat& A, const Mat& B);
Mat mat_add(const Ring& ring, const Mat& A, const Mat& B);
Mat mat_transpose(const Mat& A);
bool mat_eq(const Ring& ring, const Mat& A, const Mat& B);
bool mat_is_zero(const Ring& ring, const Mat& A);
/// Entrywise scale.
Mat mat_scale(const Ring& ring, const Scalar& c, const Mat& A);
/// A^k (square A).
Mat mat_pow(const Ring& ring, const Mat& A, int k);

/// Diagonal reduction over a chain ring (Z_(p) or Z/p^N): U*A*V = D with
/// U, V invertible, D diagonal with entries unit * p^(exponents[i]) and
/// exponents nondecreasing.  Rejects TruncPoly.
struct SnfResult {
    Mat D, U, V, Vinv;
    int rank = 0;                 // number of nonzero diagonal entries
    std::vector<int> exponents;   // p-valuations of the nonzero diagonal entries
};

/// Which transforms to accumulate (tracking them dominates the cost on
/// larger blocks, so callers ask only for what they use).
struct SnfOptions {
    bool with_U = true;
    bool with_V = true;
    bool with_Vinv = true;
};

SnfResult smith_normal_form(const Ring& ring, Mat A, SnfOptions opts = {});

/// Isomorphism class of a finitely generated module over the active ring:
/// free part plus p-power torsion exponents (sorted ascending).
struct ModuleSummary {
    int free_rank = 0;
    std::vector<int> torsion;  // exponents e with summand Z/p^e, ascending

    bool operator==(const ModuleSummary& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
};

/// coker(A : R^cols -> R^rows).
ModuleSummary cokernel_summary(const Ring& ring, const Mat& A);

/// ker(out : C -> C') / im(in : C'' -> C) where out*in = 0.
ModuleSummary homology_summary(const Ring& ring, const Mat& out, const Mat& in);

/// |coker(A)| over Z/p^N as an exact integer.
BigInt coker_cardinality(const Ring& ring, const Mat& A);

/// Unique solution of A x = b, or nullopt when inconsistent.  `unique` is set
/// false when the solution space is positive-dimensional (a solution is still
/// returned).
std::optional<std::vector<Scalar>> solve_linear(const Ring& ring, const Mat& A,
                                                const std::vector<Scalar>& b, bool* unique = nullptr);

/// Replace each truncated-polynomial entry by its M x M regular-representation
/// block over Z/p^N, so cokernels can be analysed by smith_normal_form.
Mat flatten_to_base(const Ring& poly_ring, const Mat& A, Ring* base_ring_out);

}  // namespace hce
