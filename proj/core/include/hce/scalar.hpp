#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hce {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Valuation of the zero element; large enough to exceed any truncation.
inline constexpr int kValInfinity = 1 << 28;

/// Exact rational with an inline int64 fast path and arbitrary-precision
/// fallback.  Reduced form: gcd(|num|, den) = 1, den > 0.
class PRat {
  public:
    PRat() : n_(0), d_(1) {}
    explicit PRat(std::int64_t n) : n_(n), d_(1) {}
    PRat(std::int64_t n, std::int64_t d);
    explicit PRat(const BigRat& x);

    bool is_small() const { return big_ == nullptr; }
    bool is_zero() const { return big_ ? *big_ == 0 : n_ == 0; }
    BigRat to_big() const;

    PRat add(const PRat& o) const;
    PRat neg() const;
    PRat mul(const PRat& o) const;
    PRat div(const PRat& o) const;
    bool eq(const PRat& o) const;

    /// p-valuation (kValInfinity for 0).
    int valuation(long p) const;
    /// denominator coprime to p?
    bool denominator_coprime(long p) const;

    std::string str() const;

  private:
    std::int64_t n_ = 0, d_ = 1;          // valid when big_ == nullptr
    std::shared_ptr<const BigRat> big_;   // set when the value escapes int64

    static PRat from_parts(__int128 n, __int128 d);
    static PRat from_bigrat(BigRat x);
};

enum class RingTag { PLocal, ChainRing, TruncPoly };

/// Which coefficient ring all scalars of a computation live in.
/// PLocal(p):        rationals with denominator coprime to p.
/// ChainRing(p,N):   integers mod p^N.
/// TruncPoly(p,N,M): (Z/p^N)[h]/(h^M).
struct RingSpec {
    RingTag tag = RingTag::PLocal;
    long p = 3;
    int N = 1;  // ChainRing / TruncPoly truncation exponent
    int M = 1;  // TruncPoly h-truncation order

    static RingSpec plocal(long p) { return {RingTag::PLocal, p, 1, 1}; }
    static RingSpec chain(long p, int N) { return {RingTag::ChainRing, p, N, 1}; }
    static RingSpec trunc_poly(long p, int N, int M) { return {RingTag::TruncPoly, p, N, M}; }

    bool operator==(const RingSpec& o) const {
        if (tag != o.tag || p != o.p) return false;
        if (tag == RingTag::PLocal) return true;
        if (tag == RingTag::ChainRing) return N == o.N;
        return N == o.N && M == o.M;
    }
    bool operator!=(const RingSpec& o) const { return !(*this == o); }

    std::string str() const;
};

/// Exact element of the active coefficient ring.  The variant alternative in
/// use must match the RingSpec of the ambient computation.
struct Scalar {
    // PLocal: exact rational; ChainRing: residue in [0, p^N); TruncPoly:
    // coefficient list c_0..c_{M-1}, each in [0, p^N).
    std::variant<PRat, std::int64_t, std::vector<std::int64_t>> v;

    Scalar() : v(std::int64_t{0}) {}
};

/// Arithmetic over a fixed RingSpec.  All operations are pure.
class Ring {
  public:
    explicit Ring(RingSpec spec);

    const RingSpec& spec() const { return spec_; }
    long p() const { return spec_.p; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long n) const;
    Scalar from_big(const BigInt& n) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;

    bool is_zero(const Scalar& a) const;
    bool is_unit(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;

    /// Largest k with p^k dividing a (kValInfinity for 0).  For TruncPoly the
    /// valuation of the constant coefficient is returned.
    int valuation(const Scalar& a) const;

    /// Exact division; throws if b does not divide a in this ring.
    Scalar div(const Scalar& a, const Scalar& b) const;
    /// Inverse of a unit; throws on non-units.
    Scalar inv(const Scalar& a) const;

    /// a / 2 (p odd, so 2 is invertible everywhere we work).
    Scalar halve(const Scalar& a) const;

    std::string str(const Scalar& a) const;

    /// Canonical reduction (used after raw construction from parts).
    Scalar normalize(const Scalar& a) const;

  private:
    RingSpec spec_;
    std::int64_t mod_ = 0;  // p^N for ChainRing/TruncPoly

    std::int64_t mod_reduce(BigInt x) const;
    std::int64_t mul_mod(std::int64_t a, std::int64_t b) const;
};

/// p-power in the given modulus-safe integer type.
std::int64_t ipow(std::int64_t base, int exp);

/// Valuation of an exact rational at p (kValInfinity for 0).
int rational_valuation(const BigRat& x, long p);

}  // namespace hce
