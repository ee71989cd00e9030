#pragma once

#include <cstdint>
#include <string>

#include "iwa/errors.hpp"

namespace iwa {

/**
 * Coefficient domain Z/p^M for an odd prime p and precision M >= 1.
 *
 * Every nonzero residue factors as p^k * u with u a unit, and the exponent
 * k (the valuation) drives all divisibility decisions downstream.  Zero is
 * reported with valuation M, the largest value distinguishable at this
 * precision.
 */
class PadicContext {
public:
    PadicContext(std::uint64_t p, unsigned precision);

    std::uint64_t prime() const { return p_; }
    unsigned precision() const { return m_; }
    std::uint64_t modulus() const { return q_; }

    bool operator==(const PadicContext& o) const { return p_ == o.p_ && m_ == o.m_; }
    bool operator!=(const PadicContext& o) const { return !(*this == o); }

private:
    std::uint64_t p_;
    unsigned m_;
    std::uint64_t q_;
};

/**
 * Residue in Z/p^M with value stored in [0, p^M).
 */
class PadicScalar {
public:
    PadicScalar(PadicContext ctx, std::uint64_t value);

    // Accepts negative inputs and reduces them into [0, p^M).
    static PadicScalar from_int(PadicContext ctx, long long value);

    const PadicContext& context() const { return ctx_; }
    std::uint64_t value() const { return value_; }

    // min(v_p(value), M); zero reports M.
    unsigned valuation() const;
    bool is_zero() const { return value_ == 0; }
    bool is_unit() const { return value_ % ctx_.prime() != 0; }

    PadicScalar operator+(const PadicScalar& o) const;
    PadicScalar operator-(const PadicScalar& o) const;
    PadicScalar operator*(const PadicScalar& o) const;
    PadicScalar operator-() const;
    bool operator==(const PadicScalar& o) const;
    bool operator!=(const PadicScalar& o) const { return !(*this == o); }

private:
    void require_same_context(const PadicScalar& o) const;

    PadicContext ctx_;
    std::uint64_t value_;
};

// Inverse of a unit, by extended Euclid on (value, p^M).  Throws NotAUnit.
PadicScalar inv_unit(const PadicScalar& x);

// Unit root alpha of X^2 - a_p X + p, Hensel-lifted from the seed a_p mod p.
// The companion root p/alpha has valuation exactly 1.  Throws NonOrdinary
// when p divides a_p.
PadicScalar unit_root(const PadicScalar& ap);

// Square root of a unit quadratic residue, lifted to precision M and
// canonicalised to the representative in [0, p^M / 2].  Throws NotAUnit or
// NonResidue.
PadicScalar sqrt_hensel(const PadicScalar& d);

// "k" for nonzero values, ">= M" for zero, matching valuation().
std::string valuation_string(const PadicScalar& x);

} // namespace iwa
