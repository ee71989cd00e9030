#include "iwa/padic.hpp"

#include <cstdlib>

namespace iwa {

namespace {

bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t q) {
    std::uint64_t acc = 1 % q;
    base %= q;
    while (exp) {
        if (exp & 1) acc = mul_mod(acc, base, q);
        base = mul_mod(base, base, q);
        exp >>= 1;
    }
    return acc;
}

// Inverse mod q by extended Euclid; caller guarantees gcd(a, q) = 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) {
    long long r0 = static_cast<long long>(q), r1 = static_cast<long long>(a % q);
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long k = r0 / r1;
        long long r2 = r0 - k * r1;
        long long t2 = t0 - k * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    long long t = t0 % static_cast<long long>(q);
    if (t < 0) t += static_cast<long long>(q);
    return static_cast<std::uint64_t>(t);
}

// Square root mod an odd prime by Tonelli-Shanks; returns p when d is a
// non-residue.  d is assumed reduced and nonzero mod p.
std::uint64_t sqrt_mod_prime(std::uint64_t d, std::uint64_t p) {
    if (pow_mod(d, (p - 1) / 2, p) != 1) return p;
    if (p % 4 == 3) return pow_mod(d, (p + 1) / 4, p);

    // Write p - 1 = s * 2^e with s odd.
    std::uint64_t s = p - 1;
    unsigned e = 0;
    while (s % 2 == 0) { s /= 2; ++e; }

    std::uint64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;

    std::uint64_t c = pow_mod(z, s, p);
    std::uint64_t r = pow_mod(d, (s + 1) / 2, p);
    std::uint64_t t = pow_mod(d, s, p);
    unsigned m = e;
    while (t != 1) {
        std::uint64_t t2 = t;
        unsigned i = 0;
        while (t2 != 1) { t2 = mul_mod(t2, t2, p); ++i; }
        std::uint64_t b = pow_mod(c, std::uint64_t(1) << (m - i - 1), p);
        r = mul_mod(r, b, p);
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        m = i;
    }
    return r;
}

} // namespace

PadicContext::PadicContext(std::uint64_t p, unsigned precision) : p_(p), m_(precision) {
    if (!is_odd_prime(p)) throw Error("p must be an odd prime");
    if (precision < 1) throw Error("precision M must be at least 1");
    q_ = 1;
    for (unsigned i = 0; i < precision; ++i) {
        if (q_ > (std::uint64_t(1) << 62) / p) throw Error("p^M exceeds the supported 62-bit range");
        q_ *= p;
    }
}

PadicScalar::PadicScalar(PadicContext ctx, std::uint64_t value)
    : ctx_(ctx), value_(value % ctx.modulus()) {}

PadicScalar PadicScalar::from_int(PadicContext ctx, long long value) {
    long long q = static_cast<long long>(ctx.modulus());
    long long r = value % q;
    if (r < 0) r += q;
    return PadicScalar(ctx, static_cast<std::uint64_t>(r));
}

unsigned PadicScalar::valuation() const {
    if (value_ == 0) return ctx_.precision();
    unsigned v = 0;
    std::uint64_t x = value_;
    while (x % ctx_.prime() == 0) { x /= ctx_.prime(); ++v; }
    return v;
}

void PadicScalar::require_same_context(const PadicScalar& o) const {
    if (ctx_ != o.ctx_) throw ContextMismatch();
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
    require_same_context(o);
    std::uint64_t s = value_ + o.value_;
    if (s >= ctx_.modulus()) s -= ctx_.modulus();
    return PadicScalar(ctx_, s);
}

PadicScalar PadicScalar::operator-(const PadicScalar& o) const {
    require_same_context(o);
    std::uint64_t s = value_ + (ctx_.modulus() - o.value_);
    if (s >= ctx_.modulus()) s -= ctx_.modulus();
    return PadicScalar(ctx_, s);
}

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
    require_same_context(o);
    return PadicScalar(ctx_, mul_mod(value_, o.value_, ctx_.modulus()));
}

PadicScalar PadicScalar::operator-() const {
    return PadicScalar(ctx_, value_ == 0 ? 0 : ctx_.modulus() - value_);
}

bool PadicScalar::operator==(const PadicScalar& o) const {
    require_same_context(o);
    return value_ == o.value_;
}

PadicScalar inv_unit(const PadicScalar& x) {
    if (!x.is_unit()) throw NotAUnit();
    return PadicScalar(x.context(), inv_mod(x.value(), x.context().modulus()));
}

PadicScalar unit_root(const PadicScalar& ap) {
    if (!ap.is_unit()) throw NonOrdinary();
    const PadicContext& ctx = ap.context();
    const std::uint64_t q = ctx.modulus();
    const std::uint64_t p = ctx.prime();

    // Newton iteration on f(X) = X^2 - a_p X + p from the seed a_p.  The
    // derivative 2X - a_p stays congruent to a_p mod p, hence stays a unit.
    std::uint64_t x = ap.value();
    for (unsigned step = 0; step <= 2 * ctx.precision(); ++step) {
        std::uint64_t fx = (mul_mod(x, x, q) + q - mul_mod(ap.value(), x, q) + p % q) % q;
        if (fx == 0) return PadicScalar(ctx, x);
        std::uint64_t dfx = (2 * x % q + q - ap.value()) % q;
        x = (x + q - mul_mod(fx, inv_mod(dfx, q), q)) % q;
    }
    throw Error("unit root iteration failed to converge");
}

PadicScalar sqrt_hensel(const PadicScalar& d) {
    if (!d.is_unit()) throw NotAUnit();
    const PadicContext& ctx = d.context();
    const std::uint64_t q = ctx.modulus();
    const std::uint64_t p = ctx.prime();

    std::uint64_t r = sqrt_mod_prime(d.value() % p, p);
    if (r == p) throw NonResidue();

    // Newton iteration r <- (r + d/r) / 2 doubles the precision each step.
    const std::uint64_t half = inv_mod(2, q);
    for (unsigned step = 0; step <= 2 * ctx.precision(); ++step) {
        if (mul_mod(r, r, q) == d.value()) break;
        r = mul_mod(half, (r + mul_mod(d.value(), inv_mod(r, q), q)) % q, q);
    }
    if (mul_mod(r, r, q) != d.value()) throw Error("square root iteration failed to converge");
    if (r > q - r) r = q - r;
    return PadicScalar(ctx, r);
}

std::string valuation_string(const PadicScalar& x) {
    if (x.is_zero()) return ">= " + std::to_string(x.context().precision());
    return std::to_string(x.valuation());
}

} // namespace iwa
