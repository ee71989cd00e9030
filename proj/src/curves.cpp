#include "iwa/curves.hpp"

#include <numeric>

namespace iwa {

namespace {

constexpr long long kMaxEll = 10000;

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long long mod_ll(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

long long pow_mod_ll(long long base, long long exp, long long m) {
    long long acc = 1 % m;
    base = mod_ll(base, m);
    while (exp) {
        if (exp & 1) acc = static_cast<long long>(static_cast<__int128>(acc) * base % m);
        base = static_cast<long long>(static_cast<__int128>(base) * base % m);
        exp >>= 1;
    }
    return acc;
}

} // namespace

CurveSpec::CurveSpec(long long a1_, long long a2_, long long a3_, long long a4_, long long a6_,
                     long long conductor_, std::string label_)
    : a1(a1_), a2(a2_), a3(a3_), a4(a4_), a6(a6_), conductor(conductor_), label(std::move(label_)) {
    if (conductor < 1) throw Error("conductor must be positive");
    if (discriminant() == 0) throw Error("singular curve: discriminant is zero");
}

__int128 CurveSpec::discriminant() const {
    __int128 b2 = static_cast<__int128>(a1) * a1 + 4 * static_cast<__int128>(a2);
    __int128 b4 = 2 * static_cast<__int128>(a4) + static_cast<__int128>(a1) * a3;
    __int128 b6 = static_cast<__int128>(a3) * a3 + 4 * static_cast<__int128>(a6);
    __int128 b8 = static_cast<__int128>(a1) * a1 * a6 + 4 * static_cast<__int128>(a2) * a6 -
                  static_cast<__int128>(a1) * a3 * a4 + static_cast<__int128>(a2) * a3 * a3 -
                  static_cast<__int128>(a4) * a4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

FieldSpec::FieldSpec(long long d_k_) : d_k(d_k_) {
    if (d_k < 1) throw Error("D_K must be positive");
}

long long count_points_ap(const CurveSpec& curve, long long ell) {
    if (!is_prime_ll(ell) || ell > kMaxEll) throw Error("ell must be a prime at most 10^4");
    if (curve.conductor % ell == 0) throw BadReduction();
    __int128 disc = curve.discriminant();
    if (disc % ell == 0) throw BadReduction();  // the model itself must be smooth mod ell

    long long a1 = mod_ll(curve.a1, ell), a2 = mod_ll(curve.a2, ell), a3 = mod_ll(curve.a3, ell);
    long long a4 = mod_ll(curve.a4, ell), a6 = mod_ll(curve.a6, ell);

    long long affine = 0;
    for (long long x = 0; x < ell; ++x) {
        long long rhs = mod_ll(((x + a2) * x + a4) % ell * x % ell + a6, ell);
        for (long long y = 0; y < ell; ++y) {
            long long lhs = mod_ll((y + a1 * x % ell + a3) % ell * y, ell);
            if (lhs == rhs) ++affine;
        }
    }
    return ell + 1 - (affine + 1);
}

int kronecker(long long d, long long q) {
    if (q == 2) {
        if (d % 2 == 0) return 0;
        long long r = mod_ll(d, 8);
        return (r == 1 || r == 7) ? 1 : -1;
    }
    long long r = mod_ll(d, q);
    if (r == 0) return 0;
    long long e = pow_mod_ll(r, (q - 1) / 2, q);
    return e == 1 ? 1 : -1;
}

ConductorSplit split_conductor(long long conductor, long long d_k) {
    if (conductor < 1) throw Error("conductor must be positive");
    ConductorSplit split;
    int minus_primes = 0;
    bool minus_squarefree = true;

    auto absorb = [&](long long q, int mult, long long power) {
        int chi = kronecker(-d_k, q);
        if (chi == 0) throw RamifiedPrime(q);
        if (chi == 1) {
            split.n_plus *= power;
        } else {
            split.n_minus *= power;
            ++minus_primes;
            if (mult > 1) minus_squarefree = false;
        }
    };

    long long n = conductor;
    for (long long q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        int mult = 0;
        long long power = 1;
        while (n % q == 0) {
            n /= q;
            power *= q;
            ++mult;
        }
        absorb(q, mult, power);
    }
    if (n > 1) absorb(n, 1, n);

    split.def_ok = minus_squarefree && (minus_primes % 2 == 1);
    return split;
}

ContextReport check_hypotheses(const CurveSpec& curve, const FieldSpec& field, long long p) {
    if (!is_prime_ll(p) || p == 2) throw Error("p must be an odd prime");
    if (field.d_k % 2 == 0 || field.d_k <= 4) throw Error("D_K must be odd and greater than 4");

    ContextReport report;
    report.p = p;
    report.ap = count_points_ap(curve, p);
    report.ordinary = mod_ll(report.ap, p) != 0;
    report.na = mod_ll(report.ap, p) != 1;
    report.spl = kronecker(-field.d_k, p) == 1;
    report.coprime = std::gcd(field.d_k, curve.conductor) == 1 && field.d_k % p != 0;
    if (report.coprime) {
        ConductorSplit split = split_conductor(curve.conductor, field.d_k);
        report.n_plus = split.n_plus;
        report.n_minus = split.n_minus;
        report.def_ok = split.def_ok;
    }
    return report;
}

ScalarMat2 mat_mul(const ScalarMat2& x, const ScalarMat2& y) {
    return ScalarMat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                      x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

IntMat2 local_embedding_matrix(const FieldSpec& field) {
    if (mod_ll(field.d_k, 4) != 3) throw NonIntegralNorm();
    long long norm = (field.d_k * field.d_k + field.d_k) / 4;
    return IntMat2{field.d_k, -norm, 1, 0};
}

ScalarMat2 gross_point_matrix_p(const FieldSpec& field, unsigned n, PadicContext ctx) {
    if (kronecker(-field.d_k, static_cast<long long>(ctx.prime())) != 1) throw NotSplit();

    PadicScalar root = sqrt_hensel(PadicScalar::from_int(ctx, -field.d_k));
    PadicScalar theta =
        (PadicScalar::from_int(ctx, field.d_k) - root) * inv_unit(PadicScalar(ctx, 2));

    PadicScalar pn(ctx, 1);
    for (unsigned i = 0; i < n; ++i) pn = pn * PadicScalar(ctx, ctx.prime());

    PadicScalar zero(ctx, 0), one(ctx, 1);
    ScalarMat2 embed{theta, -one, one, zero};
    ScalarMat2 scale{pn, zero, zero, one};
    return mat_mul(embed, scale);
}

} // namespace iwa
