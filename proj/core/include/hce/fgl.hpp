#pragma once

#include "hce/linalg.hpp"

namespace hce {

/// Truncated p-series [p](x) = c_1 x + c_2 x^2 + ... over the active ring.
/// Invariants: c_1 = p (up to the ambient truncation) and the x^(p^h)
/// coefficient is a unit.
struct PSeries {
    std::vector<Scalar> coeffs;  // coeffs[i] = coefficient of x^(i+1)

    int truncation_degree() const { return static_cast<int>(coeffs.size()); }
};

/// Honda p-series x^(p^h) over F_p (the ring must be ChainRing(p, 1)).
PSeries honda_pseries(const Ring& ring, int h);

/// The monic degree (p^h-1)/(p-1) polynomial f with
/// f(-x^(p-1)) = u * [p](x)/x in E0[x]/[p](x) for a unit u.  Returns the
/// coefficients c_0..c_{d-1} (f = e^d + c_{d-1} e^{d-1} + ... + c_0).
/// Throws when the linear system is singular or the scaling unit is not a
/// unit.  Requires the p-series support to live in degrees <= p^h.
std::vector<Scalar> euler_poly(const Ring& ring, const PSeries& ps, int h);

}  // namespace hce
