#include "hce/scalar.hpp"

#include <sstream>

namespace hce {

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (std::int64_t{1} << 40)) throw std::overflow_error("ipow overflow");
        r *= base;
    }
    return r;
}

int rational_valuation(const BigRat& x, long p) {
    if (x == 0) return kValInfinity;
    int v = 0;
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    while (num % p == 0) { num /= p; ++v; }
    while (den % p == 0) { den /= p; --v; }
    return v;
}

/// --- PRat ----------------------------------------------------------------

namespace {

constexpr std::int64_t kSmallMax = (std::int64_t{1} << 62);

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

PRat PRat::from_parts(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    if (n == 0) return PRat();
    __int128 g = gcd128(n, d);
    n /= g;
    d /= g;
    if (n > -kSmallMax && n < kSmallMax && d < kSmallMax) {
        PRat r;
        r.n_ = static_cast<std::int64_t>(n);
        r.d_ = static_cast<std::int64_t>(d);
        return r;
    }
    auto big = [](__int128 x) {
        bool neg = x < 0;
        if (neg) x = -x;
        BigInt hi = static_cast<std::uint64_t>(x >> 64);
        BigInt lo = static_cast<std::uint64_t>(x);
        BigInt out = (hi << 64) | lo;
        return neg ? -out : out;
    };
    return from_bigrat(BigRat(big(n), big(d)));
}

PRat PRat::from_bigrat(BigRat x) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    if (num > -kSmallMax && num < kSmallMax && den < kSmallMax) {
        PRat r;
        r.n_ = num.convert_to<std::int64_t>();
        r.d_ = den.convert_to<std::int64_t>();
        return r;
    }
    PRat r;
    r.big_ = std::make_shared<const BigRat>(std::move(x));
    return r;
}

PRat::PRat(std::int64_t n, std::int64_t d) { *this = from_parts(n, d); }

PRat::PRat(const BigRat& x) { *this = from_bigrat(x); }

BigRat PRat::to_big() const {
    if (big_) return *big_;
    return BigRat(n_, d_);
}

PRat PRat::add(const PRat& o) const {
    if (!big_ && !o.big_)
        return from_parts(static_cast<__int128>(n_) * o.d_ + static_cast<__int128>(o.n_) * d_,
                          static_cast<__int128>(d_) * o.d_);
    return from_bigrat(to_big() + o.to_big());
}

PRat PRat::neg() const {
    if (!big_) {
        PRat r;
        r.n_ = -n_;
        r.d_ = d_;
        return r;
    }
    return from_bigrat(-*big_);
}

PRat PRat::mul(const PRat& o) const {
    if (!big_ && !o.big_)
        return from_parts(static_cast<__int128>(n_) * o.n_, static_cast<__int128>(d_) * o.d_);
    return from_bigrat(to_big() * o.to_big());
}

PRat PRat::div(const PRat& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (!big_ && !o.big_)
        return from_parts(static_cast<__int128>(n_) * o.d_, static_cast<__int128>(d_) * o.n_);
    return from_bigrat(to_big() / o.to_big());
}

bool PRat::eq(const PRat& o) const {
    if (!big_ && !o.big_) return n_ == o.n_ && d_ == o.d_;
    return to_big() == o.to_big();
}

int PRat::valuation(long p) const {
    if (is_zero()) return kValInfinity;
    if (!big_) {
        int v = 0;
        std::int64_t n = n_, d = d_;
        while (n % p == 0) { n /= p; ++v; }
        while (d % p == 0) { d /= p; --v; }
        return v;
    }
    return rational_valuation(*big_, p);
}

bool PRat::denominator_coprime(long p) const {
    if (!big_) return d_ % p != 0;
    return boost::multiprecision::denominator(*big_) % p != 0;
}

std::string PRat::str() const {
    if (big_) {
        std::ostringstream os;
        os << *big_;
        return os.str();
    }
    std::ostringstream os;
    os << n_;
    if (d_ != 1) os << "/" << d_;
    return os.str();
}

/// --- RingSpec / Ring ------------------------------------------------------

std::string RingSpec::str() const {
    std::ostringstream os;
    switch (tag) {
        case RingTag::PLocal: os << "Z_(" << p << ")"; break;
        case RingTag::ChainRing: os << "Z/" << p << "^" << N; break;
        case RingTag::TruncPoly: os << "Z/" << p << "^" << N << "[h]/h^" << M; break;
    }
    return os.str();
}

Ring::Ring(RingSpec spec) : spec_(spec) {
    if (spec_.p < 3 || spec_.p % 2 == 0) throw std::invalid_argument("p must be an odd prime >= 3");
    if (spec_.tag != RingTag::PLocal) {
        if (spec_.N < 1) throw std::invalid_argument("truncation exponent N must be >= 1");
        mod_ = ipow(spec_.p, spec_.N);
    }
    if (spec_.tag == RingTag::TruncPoly && spec_.M < 1)
        throw std::invalid_argument("truncation order M must be >= 1");
}

std::int64_t Ring::mod_reduce(BigInt x) const {
    BigInt r = x % mod_;
    if (r < 0) r += mod_;
    return static_cast<std::int64_t>(r);
}

std::int64_t Ring::mul_mod(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % mod_);
}

Scalar Ring::zero() const { return from_int(0); }
Scalar Ring::one() const { return from_int(1); }

Scalar Ring::from_int(long n) const {
    Scalar s;
    switch (spec_.tag) {
        case RingTag::PLocal: s.v = PRat(static_cast<std::int64_t>(n)); break;
        case RingTag::ChainRing: {
            std::int64_t r = n % mod_;
            if (r < 0) r += mod_;
            s.v = r;
            break;
        }
        case RingTag::TruncPoly: {
            std::vector<std::int64_t> c(spec_.M, 0);
            std::int64_t r = n % mod_;
            if (r < 0) r += mod_;
            c[0] = r;
            s.v = std::move(c);
            break;
        }
    }
    return s;
}

Scalar Ring::from_big(const BigInt& n) const {
    Scalar s;
    switch (spec_.tag) {
        case RingTag::PLocal: s.v = PRat(BigRat(n)); break;
        case RingTag::ChainRing: s.v = mod_reduce(n); break;
        case RingTag::TruncPoly: {
            std::vector<std::int64_t> c(spec_.M, 0);
            c[0] = mod_reduce(n);
            s.v = std::move(c);
            break;
        }
    }
    return s;
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const {
    Scalar s;
    switch (spec_.tag) {
        case RingTag::PLocal:
            s.v = std::get<PRat>(a.v).add(std::get<PRat>(b.v));
            break;
        case RingTag::ChainRing: {
            std::int64_t r = std::get<std::int64_t>(a.v) + std::get<std::int64_t>(b.v);
            if (r >= mod_) r -= mod_;
            s.v = r;
            break;
        }
        case RingTag::TruncPoly: {
            const auto& x = std::get<std::vector<std::int64_t>>(a.v);
            const auto& y = std::get<std::vector<std::int64_t>>(b.v);
            std::vector<std::int64_t> c(spec_.M, 0);
            for (int i = 0; i < spec_.M; ++i) {
                std::int64_t r = x[i] + y[i];
                if (r >= mod_) r -= mod_;
                c[i] = r;
            }
            s.v = std::move(c);
            break;
        }
    }
    return s;
}

Scalar Ring::neg(const Scalar& a) const {
    Scalar s;
    switch (spec_.tag) {
        case RingTag::PLocal: s.v = std::get<PRat>(a.v).neg(); break;
        case RingTag::ChainRing: {
            std::int64_t r = std::get<std::int64_t>(a.v);
            s.v = r == 0 ? 0 : mod_ - r;
            break;
        }
        case RingTag::TruncPoly: {
            const auto& x = std::get<std::vector<std::int64_t>>(a.v);
            std::vector<std::int64_t> c(spec_.M, 0);
            for (int i = 0; i < spec_.M; ++i) c[i] = x[i] == 0 ? 0 : mod_ - x[i];
            s.v = std::move(c);
            break;
        }
    }
    return s;
}

Scalar Ring::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Ring::mul(const Scalar& a, const Scalar& b) const {
    Scalar s;
    switch (spec_.tag) {
        case RingTag::PLocal:
            s.v = std::get<PRat>(a.v).mul(std::get<PRat>(b.v));
            break;
        case RingTag::ChainRing:
            s.v = mul_mod(std::get<std::int64_t>(a.v), std::get<std::int64_t>(b.v));
            break;
        case RingTag::TruncPoly: {
            const auto& x = std::get<std::vector<std::int64_t>>(a.v);
            const auto& y = std::get<std::vector<std::int64_t>>(b.v);
            std::vector<std::int64_t> c(spec_.M, 0);
            for (int i = 0; i < spec_.M; ++i)
                for (int j = 0; i + j < spec_.M; ++j)
                    c[i + j] = (c[i + j] + static_cast<__int128>(x[i]) * y[j]) % mod_;
            s.v = std::move(c);
            break;
        }
    }
    return s;
}

bool Ring::is_zero(const Scalar& a) const {
    switch (spec_.tag) {
        case RingTag::PLocal: return std::get<PRat>(a.v).is_zero();
        case RingTag::ChainRing: return std::get<std::int64_t>(a.v) == 0;
        case RingTag::TruncPoly: {
            for (auto c : std::get<std::vector<std::int64_t>>(a.v))
                if (c != 0) return false;
            return true;
        }
    }
    return true;
}

bool Ring::eq(const Scalar& a, const Scalar& b) const {
    if (spec_.tag == RingTag::PLocal) return std::get<PRat>(a.v).eq(std::get<PRat>(b.v));
    return is_zero(sub(a, b));
}

int Ring::valuation(const Scalar& a) const {
    switch (spec_.tag) {
        case RingTag::PLocal:
            return std::get<PRat>(a.v).valuation(spec_.p);
        case RingTag::ChainRing: {
            std::int64_t r = std::get<std::int64_t>(a.v);
            if (r == 0) return kValInfinity;
            int v = 0;
            while (r % spec_.p == 0) { r /= spec_.p; ++v; }
            return v;
        }
        case RingTag::TruncPoly: {
            const auto& x = std::get<std::vector<std::int64_t>>(a.v);
            std::int64_t r = x[0];
            if (r == 0) return kValInfinity;
            int v = 0;
            while (r % spec_.p == 0) { r /= spec_.p; ++v; }
            return v;
        }
    }
    return kValInfinity;
}

bool Ring::is_unit(const Scalar& a) const {
    switch (spec_.tag) {
        case RingTag::PLocal:
        case RingTag::ChainRing:
            return !is_zero(a) && valuation(a) == 0;
        case RingTag::TruncPoly: {
            const auto& x = std::get<std::vector<std::int64_t>>(a.v);
            return x[0] % spec_.p != 0;
        }
    }
    return false;
}

namespace {
// Inverse of a unit mod m via extended Euclid.
std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
    std::int64_t t = 0, newt = 1, r = m, newr = a % m;
    if (newr < 0) newr += m;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (r != 1) throw std::domain_error("not a unit");
    if (t < 0) t += m;
    return t;
}
}  // namespace

Scalar Ring::inv(const Scalar& a) const {
    switch (spec_.tag) {
        case RingTag::PLocal: {
            const auto& x = std::get<PRat>(a.v);
            if (x.is_zero() || x.valuation(spec_.p) != 0)
                throw std::domain_error("not a unit in Z_(p)");
            Scalar s;
            s.v = PRat(std::int64_t{1}).div(x);
            return s;
        }
        case RingTag::ChainRing: {
            Scalar s;
            s.v = inv_mod(std::get<std::int64_t>(a.v), mod_);
            return s;
        }
        case RingTag::TruncPoly: {
            const auto& x = std::get<std::vector<std::int64_t>>(a.v);
            if (x[0] % spec_.p == 0) throw std::domain_error("not a unit in truncated poly ring");
            std::vector<std::int64_t> r(spec_.M, 0);
            r[0] = inv_mod(x[0], mod_);
            Scalar ax;
            ax.v = r;
            for (int it = 0; it < spec_.M; ++it) {
                Scalar prod = mul(a, ax);
                Scalar corr = sub(from_int(2), prod);
                ax = mul(ax, corr);
            }
            return ax;
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Ring::div(const Scalar& a, const Scalar& b) const {
    if (is_zero(b)) throw std::domain_error("division by zero");
    switch (spec_.tag) {
        case RingTag::PLocal: {
            if (is_zero(a)) return zero();
            if (valuation(a) < valuation(b)) throw std::domain_error("inexact division in Z_(p)");
            Scalar s;
            s.v = std::get<PRat>(a.v).div(std::get<PRat>(b.v));
            return s;
        }
        case RingTag::ChainRing: {
            std::int64_t bv = std::get<std::int64_t>(b.v);
            std::int64_t av = std::get<std::int64_t>(a.v);
            int vb = valuation(b);
            std::int64_t pv = ipow(spec_.p, vb);
            if (av % pv != 0) throw std::domain_error("inexact division in Z/p^N");
            std::int64_t bu = bv / pv;
            return mul(from_int(av / pv), from_int(inv_mod(bu, mod_)));
        }
        case RingTag::TruncPoly:
            if (is_unit(b)) return mul(a, inv(b));
            throw std::domain_error("division by non-unit not supported over truncated poly ring");
    }
    throw std::logic_error("unreachable");
}

Scalar Ring::halve(const Scalar& a) const { return div(a, from_int(2)); }

Scalar Ring::normalize(const Scalar& a) const {
    switch (spec_.tag) {
        case RingTag::PLocal: {
            const auto& x = std::get<PRat>(a.v);
            if (!x.denominator_coprime(spec_.p))
                throw std::domain_error("denominator not coprime to p");
            return a;
        }
        case RingTag::ChainRing: {
            Scalar s;
            s.v = mod_reduce(BigInt(std::get<std::int64_t>(a.v)));
            return s;
        }
        case RingTag::TruncPoly: {
            auto x = std::get<std::vector<std::int64_t>>(a.v);
            x.resize(spec_.M, 0);
            for (auto& c : x) c = mod_reduce(BigInt(c));
            Scalar s;
            s.v = std::move(x);
            return s;
        }
    }
    return a;
}

std::string Ring::str(const Scalar& a) const {
    std::ostringstream os;
    switch (spec_.tag) {
        case RingTag::PLocal:
            os << std::get<PRat>(a.v).str();
            break;
        case RingTag::ChainRing:
            os << std::get<std::int64_t>(a.v);
            break;
        case RingTag::TruncPoly: {
            const auto& x = std::get<std::vector<std::int64_t>>(a.v);
            bool first = true;
            for (int i = 0; i < static_cast<int>(x.size()); ++i) {
                if (x[i] == 0) continue;
                if (!first) os << "+";
                os << x[i];
                if (i >= 1) os << "h";
                if (i >= 2) os << "^" << i;
                first = false;
            }
            if (first) os << "0";
            break;
        }
    }
    return os.str();
}

}  // namespace hce
