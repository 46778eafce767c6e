#include "hce/fgl.hpp"

#include <stdexcept>

namespace hce {

PSeries honda_pseries(const Ring& ring, int h) {
    if (!(ring.spec().tag == RingTag::ChainRing && ring.spec().N == 1))
        throw std::invalid_argument("honda_pseries is defined over F_p (ChainRing N=1)");
    long ph = 1;
    for (int i = 0; i < h; ++i) ph *= ring.p();
    PSeries ps;
    ps.coeffs.assign(ph, ring.zero());
    ps.coeffs[ph - 1] = ring.one();
    return ps;
}

namespace {

// polynomials as dense coefficient vectors c_0.. (low degree first)
using Poly = std::vector<Scalar>;

Poly poly_trim(const Ring& ring, Poly a) {
    while (!a.empty() && ring.is_zero(a.back())) a.pop_back();
    return a;
}

Poly poly_mul(const Ring& ring, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, ring.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (ring.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = ring.add(c[i + j], ring.mul(a[i], b[j]));
    }
    return poly_trim(ring, c);
}

// reduce a modulo the monic polynomial m (m.back() == 1)
Poly poly_mod(const Ring& ring, Poly a, const Poly& m) {
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        Scalar lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (!ring.is_zero(lead))
            for (size_t i = 0; i < dm; ++i)
                a[shift + i] = ring.sub(a[shift + i], ring.mul(lead, m[i]));
        a.pop_back();
        a = poly_trim(ring, a);
        if (a.size() <= dm) break;
    }
    return a;
}

}  // namespace

std::vector<Scalar> euler_poly(const Ring& ring, const PSeries& ps, int h) {
    const long p = ring.p();
    long ph = 1;
    for (int i = 0; i < h; ++i) ph *= p;
    long d = (ph - 1) / (p - 1);

    if (ps.truncation_degree() < ph)
        throw std::invalid_argument("p-series truncated below x^(p^h)");
    for (int i = static_cast<int>(ph); i < ps.truncation_degree(); ++i)
        if (!ring.is_zero(ps.coeffs[i]))
            throw std::invalid_argument("p-series support beyond x^(p^h) is not representable exactly");

    // monic normalisation of [p](x): divide by the unit x^(p^h)-coefficient
    Scalar top = ps.coeffs[ph - 1];
    if (!ring.is_unit(top)) throw std::invalid_argument("x^(p^h) coefficient of [p](x) must be a unit");
    Scalar tinv = ring.inv(top);
    Poly modulus(ph + 1, ring.zero());
    for (long i = 1; i <= ph; ++i) modulus[i] = ring.mul(tinv, ps.coeffs[i - 1]);

    // q = [p](x)/x reduced (degree p^h - 1 < p^h, no reduction needed)
    Poly q(ph, ring.zero());
    for (long i = 0; i < ph; ++i) q[i] = ps.coeffs[i];

    // powers of (-x^(p-1)) modulo the modulus
    std::vector<Poly> xp(d + 1);
    Poly base(p, ring.zero());
    base[p - 1] = ring.neg(ring.one());
    xp[0] = {ring.one()};
    for (long j = 1; j <= d; ++j) xp[j] = poly_mod(ring, poly_mul(ring, xp[j - 1], base), modulus);

    // unknowns: c_0..c_{d-1}, u; equations: sum_j c_j xp[j] - u q = -xp[d]
    Mat A(static_cast<int>(ph), static_cast<int>(d + 1));
    for (auto& x : A.a) x = ring.zero();
    for (long j = 0; j < d; ++j)
        for (size_t i = 0; i < xp[j].size(); ++i) A.at(static_cast<int>(i), static_cast<int>(j)) = xp[j][i];
    for (size_t i = 0; i < q.size(); ++i)
        A.at(static_cast<int>(i), static_cast<int>(d)) = ring.neg(q[i]);
    std::vector<Scalar> rhs(ph, ring.zero());
    for (size_t i = 0; i < xp[d].size(); ++i) rhs[i] = ring.neg(xp[d][i]);

    bool unique = false;
    auto sol = solve_linear(ring, A, rhs, &unique);
    if (!sol) throw std::runtime_error("euler_poly: congruence system inconsistent (not a valid p-series?)");
    if (!unique) throw std::runtime_error("euler_poly: congruence system singular");
    Scalar u = (*sol)[d];
    if (!ring.is_unit(u)) throw std::runtime_error("euler_poly: scaling factor is not a unit");

    std::vector<Scalar> f(sol->begin(), sol->begin() + d);
    // constant term must be p times a unit (0 when p = 0 in the ring)
    if (ring.valuation(f[0]) < 1)
        throw std::runtime_error("euler_poly: constant term is not divisible by p");
    return f;
}

}  // namespace hce
