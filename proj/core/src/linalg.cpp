#include "hce/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hce {

Mat Mat::identity(const Ring& ring, int n) {
    Mat I(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) I.at(i, j) = i == j ? ring.one() : ring.zero();
    return I;
}

Mat mat_mul(const Ring& ring, const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("mat_mul shape mismatch");
    Mat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < B.cols; ++j) {
            Scalar s = ring.zero();
            for (int k = 0; k < A.cols; ++k) {
                if (ring.is_zero(A.at(i, k)) || ring.is_zero(B.at(k, j))) continue;
                s = ring.add(s, ring.mul(A.at(i, k), B.at(k, j)));
            }
            C.at(i, j) = s;
        }
    return C;
}

Mat mat_add(const Ring& ring, const Mat& A, const Mat& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("mat_add shape mismatch");
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = ring.add(A.a[i], B.a[i]);
    return C;
}

Mat mat_transpose(const Mat& A) {
    Mat T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

bool mat_eq(const Ring& ring, const Mat& A, const Mat& B) {
    if (A.rows != B.rows || A.cols != B.cols) return false;
    for (size_t i = 0; i < A.a.size(); ++i)
        if (!ring.eq(A.a[i], B.a[i])) return false;
    return true;
}

bool mat_is_zero(const Ring& ring, const Mat& A) {
    for (const auto& x : A.a)
        if (!ring.is_zero(x)) return false;
    return true;
}

Mat mat_scale(const Ring& ring, const Scalar& c, const Mat& A) {
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = ring.mul(c, A.a[i]);
    return C;
}

Mat mat_pow(const Ring& ring, const Mat& A, int k) {
    if (A.rows != A.cols) throw std::invalid_argument("mat_pow needs a square matrix");
    Mat R = Mat::identity(ring, A.rows);
    for (int i = 0; i < k; ++i) R = mat_mul(ring, R, A);
    return R;
}

namespace {

// In a chain ring only the p-valuation decides divisibility; pick the entry
// of minimal valuation as pivot so every elimination quotient is exact.
struct Pivot {
    int i = -1, j = -1, val = kValInfinity;
};

Pivot find_pivot(const Ring& ring, const Mat& A, int from) {
    Pivot best;
    for (int i = from; i < A.rows; ++i)
        for (int j = from; j < A.cols; ++j) {
            if (ring.is_zero(A.at(i, j))) continue;
            int v = ring.valuation(A.at(i, j));
            if (v < best.val) best = {i, j, v};
        }
    return best;
}

}  // namespace

SnfResult smith_normal_form(const Ring& ring, Mat A, SnfOptions opts) {
    if (ring.spec().tag == RingTag::TruncPoly)
        throw std::invalid_argument("smith_normal_form: truncated polynomial ring is not a chain ring; flatten_to_base first");

    const int m = A.rows, n = A.cols;
    SnfResult res;
    if (opts.with_U) res.U = Mat::identity(ring, m);
    if (opts.with_V) res.V = Mat::identity(ring, n);
    if (opts.with_Vinv) res.Vinv = Mat::identity(ring, n);

    auto swap_rows = [&](Mat& M, int a, int b) {
        for (int j = 0; j < M.cols; ++j) std::swap(M.at(a, j), M.at(b, j));
    };
    auto swap_cols = [&](Mat& M, int a, int b) {
        for (int i = 0; i < M.rows; ++i) std::swap(M.at(i, a), M.at(i, b));
    };
    // row_i -= f * row_t
    auto row_op = [&](Mat& M, int i, int t, const Scalar& f) {
        for (int j = 0; j < M.cols; ++j)
            M.at(i, j) = ring.sub(M.at(i, j), ring.mul(f, M.at(t, j)));
    };
    // col_j -= f * col_t
    auto col_op = [&](Mat& M, int j, int t, const Scalar& f) {
        for (int i = 0; i < M.rows; ++i)
            M.at(i, j) = ring.sub(M.at(i, j), ring.mul(f, M.at(i, t)));
    };
    // inverse of col_j -= f*col_t on Vinv: row_t += f * row_j
    auto col_op_inv = [&](Mat& M, int j, int t, const Scalar& f) {
        for (int c = 0; c < M.cols; ++c)
            M.at(t, c) = ring.add(M.at(t, c), ring.mul(f, M.at(j, c)));
    };

    int t = 0;
    const int tmax = std::min(m, n);
    while (t < tmax) {
        Pivot pv = find_pivot(ring, A, t);
        if (pv.i < 0) break;
        if (pv.i != t) {
            swap_rows(A, pv.i, t);
            if (opts.with_U) swap_rows(res.U, pv.i, t);
        }
        if (pv.j != t) {
            swap_cols(A, pv.j, t);
            if (opts.with_V) swap_cols(res.V, pv.j, t);
            if (opts.with_Vinv) swap_rows(res.Vinv, pv.j, t);
        }
        const Scalar piv = A.at(t, t);
        for (int i = t + 1; i < m; ++i) {
            if (ring.is_zero(A.at(i, t))) continue;
            Scalar f = ring.div(A.at(i, t), piv);
            row_op(A, i, t, f);
            if (opts.with_U) row_op(res.U, i, t, f);
        }
        for (int j = t + 1; j < n; ++j) {
            if (ring.is_zero(A.at(t, j))) continue;
            Scalar f = ring.div(A.at(t, j), piv);
            col_op(A, j, t, f);
            if (opts.with_V) col_op(res.V, j, t, f);
            if (opts.with_Vinv) col_op_inv(res.Vinv, j, t, f);
        }
        ++t;
    }
    res.rank = t;
    res.D = std::move(A);
    for (int i = 0; i < res.rank; ++i) res.exponents.push_back(ring.valuation(res.D.at(i, i)));
    return res;
}

ModuleSummary cokernel_summary(const Ring& ring, const Mat& A) {
    SnfResult s = smith_normal_form(ring, A, {false, false, false});
    ModuleSummary out;
    const int N = ring.spec().tag == RingTag::ChainRing ? ring.spec().N : kValInfinity;
    int killed = 0;
    for (int e : s.exponents) {
        if (e == 0) { ++killed; continue; }
        if (e >= N) continue;  // zero relation mod p^N
        out.torsion.push_back(e);
        ++killed;
    }
    out.free_rank = A.rows - killed;
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

BigInt coker_cardinality(const Ring& ring, const Mat& A) {
    if (ring.spec().tag != RingTag::ChainRing)
        throw std::invalid_argument("coker_cardinality needs a finite chain ring");
    SnfResult s = smith_normal_form(ring, A, {false, false, false});
    const int N = ring.spec().N;
    BigInt card = 1;
    int counted = 0;
    for (int e : s.exponents) {
        card *= boost::multiprecision::pow(BigInt(ring.p()), std::min(e, N));
        ++counted;
    }
    for (int i = counted; i < A.rows; ++i) card *= boost::multiprecision::pow(BigInt(ring.p()), N);
    return card;
}

ModuleSummary homology_summary(const Ring& ring, const Mat& out_map, const Mat& in_map) {
    const int n = out_map.cols;  // dimension of the middle term
    if (in_map.rows != n) throw std::invalid_argument("homology_summary: shape mismatch");

    SnfResult s = smith_normal_form(ring, out_map, {false, false, true});
    const bool finite = ring.spec().tag == RingTag::ChainRing;
    const int N = finite ? ring.spec().N : kValInfinity;

    // Kernel generators in V-coordinates: index j >= rank gives a full free
    // generator; over Z/p^N a diagonal entry p^e with 0 < e also contributes
    // the generator p^(N-e) * V_j of order p^e.
    struct Gen { int vcol; int scale_exp; int order_exp; };  // order kValInfinity = free
    std::vector<Gen> gens;
    for (int j = 0; j < s.rank; ++j) {
        int e = s.exponents[j];
        if (e == 0) continue;
        if (finite) {
            int eff = std::min(e, N);
            if (eff >= N) gens.push_back({j, 0, N});            // d_j = 0 mod p^N: full generator
            else gens.push_back({j, N - eff, eff});
        } else {
            // over Z_(p) a nonzero diagonal entry has trivial kernel
        }
    }
    for (int j = s.rank; j < n; ++j) gens.push_back({j, 0, finite ? N : kValInfinity});

    const int G = static_cast<int>(gens.size());

    // Express columns of in_map in kernel-generator coordinates.
    // w = Vinv * col; coordinate on gens[g] = w[vcol] / p^(scale_exp).
    std::vector<std::vector<Scalar>> relcols;
    for (int c = 0; c < in_map.cols; ++c) {
        std::vector<Scalar> w(n, ring.zero());
        for (int i = 0; i < n; ++i) {
            Scalar s2 = ring.zero();
            for (int k = 0; k < n; ++k) {
                if (ring.is_zero(s.Vinv.at(i, k)) || ring.is_zero(in_map.at(k, c))) continue;
                s2 = ring.add(s2, ring.mul(s.Vinv.at(i, k), in_map.at(k, c)));
            }
            w[i] = s2;
        }
        // Sanity: coordinates on unit-diagonal directions must vanish (out*in = 0).
        for (int j = 0; j < s.rank; ++j) {
            if (s.exponents[j] == 0 && !ring.is_zero(w[j]))
                throw std::logic_error("homology_summary: image not contained in kernel");
            if (!finite && s.exponents[j] > 0 && !ring.is_zero(w[j]))
                throw std::logic_error("homology_summary: image not contained in kernel");
        }
        std::vector<Scalar> col(G, ring.zero());
        for (int g = 0; g < G; ++g) {
            Scalar coord = w[gens[g].vcol];
            if (gens[g].scale_exp > 0)
                coord = ring.div(coord, ring.from_big(boost::multiprecision::pow(BigInt(ring.p()), gens[g].scale_exp)));
            col[g] = coord;
        }
        relcols.push_back(std::move(col));
    }
    // Order relations for finite-order generators.
    if (finite) {
        for (int g = 0; g < G; ++g) {
            if (gens[g].order_exp >= N) continue;  // p^N = 0 already
            std::vector<Scalar> col(G, ring.zero());
            col[g] = ring.from_big(boost::multiprecision::pow(BigInt(ring.p()), gens[g].order_exp));
            relcols.push_back(std::move(col));
        }
    }

    Mat R(G, static_cast<int>(relcols.size()));
    for (int c = 0; c < R.cols; ++c)
        for (int g = 0; g < G; ++g) R.at(g, c) = relcols[c][g];

    return cokernel_summary(ring, R);
}

std::optional<std::vector<Scalar>> solve_linear(const Ring& ring, const Mat& A,
                                                const std::vector<Scalar>& b, bool* unique) {
    if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("solve_linear: size mismatch");
    SnfResult s = smith_normal_form(ring, A);
    // y solves D y = U b; x = V y.
    std::vector<Scalar> ub(A.rows, ring.zero());
    for (int i = 0; i < A.rows; ++i) {
        Scalar acc = ring.zero();
        for (int k = 0; k < A.rows; ++k) {
            if (ring.is_zero(s.U.at(i, k)) || ring.is_zero(b[k])) continue;
            acc = ring.add(acc, ring.mul(s.U.at(i, k), b[k]));
        }
        ub[i] = acc;
    }
    std::vector<Scalar> y(A.cols, ring.zero());
    for (int i = 0; i < s.rank; ++i) {
        try {
            y[i] = ring.div(ub[i], s.D.at(i, i));
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
    }
    for (int i = s.rank; i < A.rows; ++i)
        if (!ring.is_zero(ub[i])) return std::nullopt;
    if (unique) {
        bool uniq = s.rank == A.cols;
        if (uniq && ring.spec().tag == RingTag::ChainRing)
            for (int e : s.exponents)
                if (e > 0) uniq = false;
        *unique = uniq;
    }
    std::vector<Scalar> x(A.cols, ring.zero());
    for (int i = 0; i < A.cols; ++i) {
        Scalar acc = ring.zero();
        for (int k = 0; k < A.cols; ++k) {
            if (ring.is_zero(s.V.at(i, k)) || ring.is_zero(y[k])) continue;
            acc = ring.add(acc, ring.mul(s.V.at(i, k), y[k]));
        }
        x[i] = acc;
    }
    return x;
}

Mat flatten_to_base(const Ring& poly_ring, const Mat& A, Ring* base_ring_out) {
    if (poly_ring.spec().tag != RingTag::TruncPoly)
        throw std::invalid_argument("flatten_to_base expects a truncated polynomial ring");
    const int M = poly_ring.spec().M;
    Ring base(RingSpec::chain(poly_ring.spec().p, poly_ring.spec().N));
    if (base_ring_out) *base_ring_out = base;
    Mat B(A.rows * M, A.cols * M);
    for (auto& x : B.a) x = base.zero();
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) {
            const auto& c = std::get<std::vector<std::int64_t>>(A.at(i, j).v);
            // column b of the block is the coefficient vector of entry * h^b
            for (int bcol = 0; bcol < M; ++bcol)
                for (int brow = bcol; brow < M; ++brow)
                    B.at(i * M + brow, j * M + bcol) = base.from_int(c[brow - bcol]);
        }
    return B;
}

}  // namespace hce
