#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hce/wgmod.hpp"

namespace hce {

/// Monomial in the free divided-power algebra on the suspension of a module:
/// letters are basis indices of the unsuspended module; a letter of even
/// suspended degree (odd internal degree) carries an arbitrary multiplicity
/// (divided-power part), a letter of odd suspended degree (even internal
/// degree) appears at most once (exterior part).
struct GammaMonomial {
    // (letter index, multiplicity), sorted by letter index, multiplicities >= 1
    std::vector<std::pair<int, int>> factors;

    int length() const {
        int n = 0;
        for (auto [_, r] : factors) n += r;
        return n;
    }
    bool operator==(const GammaMonomial& o) const { return factors == o.factors; }
    bool operator<(const GammaMonomial& o) const { return factors < o.factors; }
};

inline bool suspension_even(const BasisElt& letter) { return (letter.degree + 1) % 2 == 0; }

int monomial_weight(const FreeWGModule& letters, const GammaMonomial& m);
/// Sum of unsuspended letter degrees; the CE complex stores this as the
/// internal degree (the suspended total degree is this plus the length).
int monomial_internal_degree(const FreeWGModule& letters, const GammaMonomial& m);
std::string monomial_name(const FreeWGModule& letters, const GammaMonomial& m);

/// All monomials of weight <= max_weight (including the empty one), in a
/// deterministic order.  Throws if a weight-0 letter is present.
std::vector<GammaMonomial> divided_power_basis(const FreeWGModule& letters, int max_weight);

/// Product of two monomials: zero when an exterior letter repeats; otherwise
/// the binomial coefficient from merging divided powers times the Koszul sign
/// from interleaving odd suspended letters.
std::optional<std::pair<Scalar, GammaMonomial>> gamma_multiply(const Ring& ring,
                                                               const FreeWGModule& letters,
                                                               const GammaMonomial& a,
                                                               const GammaMonomial& b);

/// Sparse element of the divided-power algebra: monomial -> coefficient.
using GammaVec = std::vector<std::pair<GammaMonomial, Scalar>>;

void gamma_vec_add(const Ring& ring, GammaVec& v, const GammaMonomial& m, const Scalar& c);

/// Multiply a sparse element by a monomial with coefficient.
GammaVec gamma_vec_mul(const Ring& ring, const FreeWGModule& letters, const GammaVec& v,
                       const GammaMonomial& m, const Scalar& c);

/// Functorial extension of a degree-preserving letter map f to the divided
/// power algebra: gamma_r(sum c_y y) expands with no multinomial factors,
/// exterior letters expand linearly.  Monomials of weight > max_weight are
/// dropped.
GammaVec gamma_apply_letter_map(const Ring& ring, const FreeWGModule& src_letters,
                                const FreeWGModule& dst_letters, const WGMap& f,
                                const GammaMonomial& m, int max_weight);

}  // namespace hce
