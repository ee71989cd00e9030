#pragma once

#include <string>

#include "iwa/padic.hpp"

namespace iwa {

/**
 * Elliptic curve in long Weierstrass form
 * y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, together with its
 * conductor.  The conductor is ingested, not computed; the constructor only
 * checks that the discriminant is nonzero and the conductor positive.
 */
struct CurveSpec {
    long long a1, a2, a3, a4, a6;
    long long conductor;
    std::string label;

    CurveSpec(long long a1, long long a2, long long a3, long long a4, long long a6,
              long long conductor, std::string label = "");

    __int128 discriminant() const;
};

/**
 * Imaginary quadratic field Q(sqrt(-D_K)) given by the positive integer
 * D_K.  Structural sanity (odd, > 4, coprime to the level) is verified by
 * check_hypotheses rather than assumed here, so degenerate inputs can still
 * reach the matrix constructors and fail with their own diagnostics.
 */
struct FieldSpec {
    long long d_k;

    explicit FieldSpec(long long d_k);
};

struct ConductorSplit {
    long long n_plus = 1;
    long long n_minus = 1;
    bool def_ok = false;  // N^- squarefree with an odd number of prime factors
};

struct ContextReport {
    long long p = 0;
    long long ap = 0;
    bool ordinary = false;     // p does not divide a_p
    bool na = false;           // a_p != 1 mod p
    bool spl = false;          // p splits in the field
    bool def_ok = false;
    bool coprime = false;      // gcd(D_K, N p) == 1
    long long n_plus = 0;
    long long n_minus = 0;
    // Surjectivity of the residual representation and ramification
    // cleanness are out of computational reach here and reported verbatim.
    std::string im = "unchecked";
    std::string ram = "unchecked";

    bool all_checked_pass() const { return ordinary && na && spl && def_ok && coprime; }
};

// Trace of Frobenius a_ell = ell + 1 - #E(F_ell) by exhaustive point
// enumeration, ell a prime of good reduction capped at 10^4.  Throws
// BadReduction when ell divides the conductor or the discriminant.
long long count_points_ap(const CurveSpec& curve, long long ell);

// Quadratic character of d mod a prime q (the q = 2 case follows the usual
// mod 8 rule); 0 exactly when q divides d.
int kronecker(long long d, long long q);

// Factor the conductor into the part split in the field (N^+) and the part
// inert in it (N^-).  A prime dividing both N and D_K has nowhere to go and
// raises RamifiedPrime.
ConductorSplit split_conductor(long long conductor, long long d_k);

// Evaluates every decidable running hypothesis for (E, K, p) and reports
// the verdicts; sub-operation failures (e.g. bad reduction at p) propagate.
ContextReport check_hypotheses(const CurveSpec& curve, const FieldSpec& field, long long p);

// Row-major 2x2 integer matrix.
struct IntMat2 {
    long long a, b, c, d;

    bool operator==(const IntMat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

// Row-major 2x2 matrix over Z/p^M.
struct ScalarMat2 {
    PadicScalar a, b, c, d;

    bool operator==(const ScalarMat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

ScalarMat2 mat_mul(const ScalarMat2& x, const ScalarMat2& y);

// Companion matrix [[D_K, -(D_K^2 + D_K)/4], [1, 0]] of the minimal
// polynomial of the half-trace generator; requires D_K = 3 mod 4 so the
// norm is integral (NonIntegralNorm otherwise).
IntMat2 local_embedding_matrix(const FieldSpec& field);

// The level-n local point matrix [[v p^n, -1], [p^n, 0]] over Z/p^M, where
// v is the mod-p^M image of the half-trace generator computed from the
// canonical square root of -D_K.  Requires p split in the field (NotSplit).
ScalarMat2 gross_point_matrix_p(const FieldSpec& field, unsigned n, PadicContext ctx);

} // namespace iwa
