#include <doctest.h>

#include <random>

#include "iwa/layer.hpp"

using namespace iwa;

namespace {

// Independent multiplication route: convolve in the group basis, where the
// product is plain cyclic convolution of gamma-coefficients.
LayerElement mul_via_group_basis(const LayerElement& a, const LayerElement& b) {
    const std::uint64_t q = a.context().modulus();
    auto ga = to_group_basis(a);
    auto gb = to_group_basis(b);
    const std::size_t d = ga.size();
    std::vector<std::uint64_t> gc(d, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::size_t k = (i + j) % d;
            gc[k] = (gc[k] + static_cast<unsigned __int128>(ga[i]) * gb[j]) % q;
        }
    return from_group_basis(a.context(), a.layer(), gc);
}

LayerElement gamma_of(PadicContext ctx, unsigned layer) {
    return gamma_power(ctx, layer, 1);
}

struct Params {
    std::uint64_t p;
    unsigned m;
    unsigned n;
};

} // namespace

// ====================== construction ======================

TEST_CASE("coefficient count must match the layer dimension") {
    PadicContext ctx(3, 2);
    CHECK_THROWS_AS(LayerElement(ctx, 1, {1, 2}), DimensionMismatch);
    CHECK_THROWS_AS(LayerElement(ctx, 0, {1, 2}), DimensionMismatch);
    CHECK(LayerElement(ctx, 1, {1, 2, 3}).dimension() == 3);
    CHECK(LayerElement(ctx, 2, std::vector<std::uint64_t>(9, 0)).is_zero());
}

TEST_CASE("operations across layers or contexts are refused") {
    PadicContext ctx(3, 2);
    LayerElement a = LayerElement::one(ctx, 1);
    LayerElement b = LayerElement::one(ctx, 2);
    CHECK_THROWS_AS(a + b, LayerMismatch);
    CHECK_THROWS_AS(a * b, LayerMismatch);
    PadicContext other(5, 2);
    CHECK_THROWS_AS(a + LayerElement::one(other, 1), LayerMismatch);
}

// ====================== multiplication ======================

TEST_CASE("gamma has multiplicative order p^n") {
    for (auto [p, n] : {std::pair<std::uint64_t, unsigned>{3, 2}, {5, 1}, {3, 3}}) {
        PadicContext ctx(p, 2);
        LayerElement g = gamma_of(ctx, n);
        LayerElement acc = LayerElement::one(ctx, n);
        std::size_t order = 1;
        for (std::size_t i = 0; i < g.dimension(); ++i) {
            acc = acc * g;
            ++order;
            if (acc == LayerElement::one(ctx, n)) break;
        }
        CHECK(acc == LayerElement::one(ctx, n));
        CHECK(order == g.dimension() + 1);  // first return to 1 is at exponent p^n
    }
}

TEST_CASE("top-degree reduction agrees with the expanded modulus") {
    // X * X^{p^n - 1} = X^{p^n} = (gamma^{p^n} expanded) - lower terms, i.e.
    // gamma_power(0) minus the sub-leading part of the modulus.  Cross-check
    // against the independent group-basis convolution.
    PadicContext ctx(3, 2);
    LayerElement x = LayerElement::from_ints(ctx, 1, {0, 1, 0});
    LayerElement xsq = LayerElement::from_ints(ctx, 1, {0, 0, 1});
    LayerElement prod = x * xsq;
    CHECK(prod == mul_via_group_basis(x, xsq));
    // X^3 = 1 - (1 + 3X + 3X^2) = -3X - 3X^2 mod omega_1
    CHECK(prod == LayerElement::from_ints(ctx, 1, {0, -3, -3}));
}

TEST_CASE("schoolbook product matches group-basis convolution on random input") {
    std::mt19937_64 rng(11);
    for (auto [p, m, n] : {Params{3, 2, 2}, Params{5, 2, 1}, Params{3, 3, 1}, Params{7, 1, 1}}) {
        PadicContext ctx(p, m);
        for (int t = 0; t < 25; ++t) {
            LayerElement a = sample_element(rng, ctx, n);
            LayerElement b = sample_element(rng, ctx, n);
            CHECK(a * b == mul_via_group_basis(a, b));
        }
    }
}

TEST_CASE("ring identities on random elements") {
    std::mt19937_64 rng(12);
    PadicContext ctx(3, 2);
    for (int t = 0; t < 50; ++t) {
        LayerElement a = sample_element(rng, ctx, 2);
        LayerElement b = sample_element(rng, ctx, 2);
        LayerElement c = sample_element(rng, ctx, 2);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * LayerElement::one(ctx, 2) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("times_x agrees with multiplication by the monomial") {
    std::mt19937_64 rng(13);
    PadicContext ctx(5, 2);
    LayerElement x = LayerElement::one(ctx, 1).times_x();
    CHECK(x == LayerElement::from_ints(ctx, 1, {0, 1, 0, 0, 0}));
    for (int t = 0; t < 20; ++t) {
        LayerElement a = sample_element(rng, ctx, 1);
        CHECK(a.times_x() == a * x);
    }
    // layer 0: X acts as zero
    CHECK(LayerElement::one(ctx, 0).times_x().is_zero());
}

// ====================== basis change ======================

TEST_CASE("group basis roundtrip is the identity") {
    std::mt19937_64 rng(14);
    for (auto [p, m, n] : {Params{3, 2, 2}, Params{5, 3, 1}, Params{3, 1, 3}}) {
        PadicContext ctx(p, m);
        for (int t = 0; t < 20; ++t) {
            LayerElement a = sample_element(rng, ctx, n);
            CHECK(from_group_basis(ctx, n, to_group_basis(a)) == a);
        }
    }
}

TEST_CASE("group basis of gamma powers is a delta vector") {
    PadicContext ctx(3, 2);
    for (unsigned e = 0; e < 9; ++e) {
        auto g = to_group_basis(gamma_power(ctx, 2, e));
        for (unsigned i = 0; i < 9; ++i) CHECK(g[i] == (i == e ? 1 : 0));
    }
}

// ====================== involution ======================

TEST_CASE("iota inverts the group variable") {
    PadicContext ctx(3, 2);
    CHECK(iota(LayerElement::one(ctx, 2)) == LayerElement::one(ctx, 2));
    CHECK(iota(gamma_of(ctx, 2)) == gamma_power(ctx, 2, 8));

    std::mt19937_64 rng(15);
    for (int t = 0; t < 30; ++t) {
        LayerElement a = sample_element(rng, ctx, 2);
        LayerElement b = sample_element(rng, ctx, 2);
        CHECK(iota(iota(a)) == a);
        CHECK(iota(a + b) == iota(a) + iota(b));
        CHECK(iota(a * b) == iota(a) * iota(b));
    }
}

// ====================== projection ======================

TEST_CASE("projection reduces mod the lower modulus") {
    PadicContext ctx(3, 2);
    // constants pass through untouched
    LayerElement c = LayerElement::constant(PadicScalar(ctx, 7), 1);
    CHECK(project(c) == LayerElement::constant(PadicScalar(ctx, 7), 0));
    // X dies at the bottom: gamma_1 -> gamma_0 = 1
    LayerElement x = LayerElement::from_ints(ctx, 1, {0, 1, 0});
    CHECK(project(x).is_zero());
    CHECK(project(gamma_of(ctx, 2)) == gamma_of(ctx, 1));
    CHECK_THROWS_AS(project(LayerElement::one(ctx, 0)), BottomLayer);
}

TEST_CASE("projection is a ring map and lifting is its section") {
    std::mt19937_64 rng(16);
    PadicContext ctx(3, 2);
    for (int t = 0; t < 30; ++t) {
        LayerElement a = sample_element(rng, ctx, 2);
        LayerElement b = sample_element(rng, ctx, 2);
        CHECK(project(a + b) == project(a) + project(b));
        CHECK(project(a * b) == project(a) * project(b));
        CHECK(project(LayerElement::one(ctx, 2)) == LayerElement::one(ctx, 1));

        LayerElement low = sample_element(rng, ctx, 1);
        CHECK(project_to(lift_to(low, 2), 1) == low);
    }
}

TEST_CASE("omega generates the kernel of projection") {
    std::mt19937_64 rng(17);
    PadicContext ctx(3, 2);
    LayerElement omega = omega_element(ctx, 1, 2);
    for (int t = 0; t < 20; ++t) {
        LayerElement r = sample_element(rng, ctx, 2);
        CHECK(project(omega * r).is_zero());
    }
}

// ====================== norm map ======================

TEST_CASE("norm of one is the sum of the fibre over one") {
    for (auto [p, n] : {std::pair<std::uint64_t, unsigned>{3, 1}, {3, 2}, {5, 1}}) {
        PadicContext ctx(p, 2);
        LayerElement lhs = norm_map(LayerElement::one(ctx, n - 1));
        LayerElement rhs = LayerElement::zero(ctx, n);
        std::uint64_t step = 1;
        for (unsigned i = 0; i + 1 < n; ++i) step *= p;
        for (std::uint64_t j = 0; j < p; ++j) rhs = rhs + gamma_power(ctx, n, j * step);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("norm identities") {
    std::mt19937_64 rng(18);
    PadicContext ctx(3, 2);
    LayerElement nu1 = norm_map(LayerElement::one(ctx, 1));
    for (int t = 0; t < 30; ++t) {
        LayerElement a = sample_element(rng, ctx, 1);
        LayerElement b = sample_element(rng, ctx, 2);

        // additive, and factors through any lift of its argument
        CHECK(norm_map(a) == nu1 * lift_to(a, 2));
        CHECK(norm_map(a + project(b)) == norm_map(a) + norm_map(project(b)));

        // projection formula and the two compositions
        CHECK(norm_map(a) * b == norm_map(a * project(b)));
        CHECK(project(norm_map(a)) == PadicScalar(ctx, 3) * a);
        CHECK(norm_map(project(b)) == nu1 * b);

        // involution is compatible with both structure maps
        CHECK(iota(project(b)) == project(iota(b)));
        CHECK(iota(norm_map(a)) == norm_map(iota(a)));
    }
    CHECK(norm_map(LayerElement::zero(ctx, 0)).is_zero());
}

TEST_CASE("composite norms and projections collapse correctly") {
    std::mt19937_64 rng(19);
    PadicContext ctx(3, 2);
    LayerElement a = sample_element(rng, ctx, 0);
    CHECK(norm_to(a, 0) == a);
    CHECK(norm_to(a, 2) == norm_map(norm_map(a)));
    CHECK(project_to(norm_to(a, 2), 0) == PadicScalar(ctx, 9) * a);
    CHECK_THROWS_AS(norm_to(sample_element(rng, ctx, 1), 0), LevelOutOfRange);
    CHECK_THROWS_AS(project_to(a, 1), LevelOutOfRange);
}

// ====================== omega elements ======================

TEST_CASE("omega expansions") {
    PadicContext ctx(3, 2);
    CHECK(omega_element(ctx, 1, 1).is_zero());
    CHECK(omega_element(ctx, 0, 1) == LayerElement::from_ints(ctx, 1, {0, 1, 0}));
    // (1+X)^3 - 1 = X^3 + 3X^2 + 3X inside layer 2
    LayerElement w = omega_element(ctx, 1, 2);
    CHECK(w == LayerElement::from_ints(ctx, 2, {0, 3, 3, 1, 0, 0, 0, 0, 0}));
    CHECK(w == gamma_power(ctx, 2, 3) - LayerElement::one(ctx, 2));
}

// ====================== misc ======================

TEST_CASE("sampling is deterministic per seed") {
    PadicContext ctx(3, 2);
    std::mt19937_64 r1(42), r2(42), r3(43);
    LayerElement a = sample_element(r1, ctx, 2);
    LayerElement b = sample_element(r2, ctx, 2);
    LayerElement c = sample_element(r3, ctx, 2);
    CHECK(a == b);
    CHECK(a != c);  // astronomically unlikely to collide
}

TEST_CASE("display form lists monomial coefficients") {
    PadicContext ctx(3, 2);
    CHECK(to_string(LayerElement::from_ints(ctx, 1, {4, 0, 2})) == "[4, 0, 2]");
}
