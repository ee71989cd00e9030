#include <doctest.h>

#include <random>

#include "iwa/ideal.hpp"
#include "oracles.hpp"

using namespace iwa;

namespace {

const PadicContext kCtx(3, 2);
constexpr unsigned kLayer = 1;  // 729-element ring, small enough to enumerate

LayerElement elem(std::vector<long long> c) { return LayerElement::from_ints(kCtx, kLayer, std::move(c)); }

std::vector<LayerElement> random_gens(std::mt19937_64& rng, std::size_t count) {
    std::vector<LayerElement> gens;
    for (std::size_t i = 0; i < count; ++i) gens.push_back(sample_element(rng, kCtx, kLayer));
    return gens;
}

bool oracle_equals(const std::vector<LayerElement>& a, const std::vector<LayerElement>& b) {
    return oracle::enumerate_ideal(kCtx, kLayer, a) == oracle::enumerate_ideal(kCtx, kLayer, b);
}

} // namespace

// ====================== membership ======================

TEST_CASE("membership on pinned ideals") {
    LayerElement g = elem({1, 2, 0});
    LayerElement h = elem({0, 1, 1});
    IdealHandle I = IdealHandle::principal(g);
    CHECK(contains(I, g * h));
    CHECK(contains(I, LayerElement::zero(kCtx, kLayer)));
    CHECK(contains(IdealHandle::zero(kCtx, kLayer), LayerElement::zero(kCtx, kLayer)));
    CHECK_FALSE(contains(IdealHandle::zero(kCtx, kLayer), g));
    CHECK_THROWS_AS(contains(I, LayerElement::one(kCtx, 0)), LayerMismatch);
}

TEST_CASE("membership agrees with exhaustive enumeration") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 10; ++t) {
        auto gens = random_gens(rng, 1 + t % 3);
        IdealHandle I(kCtx, kLayer, gens);
        auto set = oracle::enumerate_ideal(kCtx, kLayer, gens);
        for (std::size_t idx = 0; idx < set.size(); ++idx) {
            LayerElement x = oracle::decode(kCtx, kLayer, idx);
            CHECK(contains(I, x) == (set[idx] != 0));
        }
    }
}

// ====================== equality ======================

TEST_CASE("equality is insensitive to generator order and unit factors") {
    LayerElement g = elem({1, 2, 0});
    LayerElement h = elem({0, 1, 1});
    LayerElement u = elem({2, 3, 0});  // unit: constant term is a unit
    REQUIRE(u.coeff(0).is_unit());

    CHECK(equals(IdealHandle(kCtx, kLayer, {g, h}), IdealHandle(kCtx, kLayer, {h, g})));
    CHECK(equals(IdealHandle::principal(g), IdealHandle::principal(u * g)));
    CHECK_FALSE(equals(IdealHandle::principal(g), IdealHandle::principal(h)));
}

TEST_CASE("the maximal ideal has the expected alternative generators") {
    // (p, X) = (X, p + X); confirmed independently by enumeration
    LayerElement p = elem({3, 0, 0});
    LayerElement x = elem({0, 1, 0});
    IdealHandle lhs(kCtx, kLayer, {p, x});
    IdealHandle rhs(kCtx, kLayer, {x, p + x});
    CHECK(equals(lhs, rhs));
    CHECK(oracle_equals({p, x}, {x, p + x}));
    CHECK(equals(lhs, IdealHandle::maximal(kCtx, kLayer)));
}

TEST_CASE("equality matches enumeration on random pairs") {
    std::mt19937_64 rng(32);
    int equal_seen = 0;
    for (int t = 0; t < 12; ++t) {
        auto ga = random_gens(rng, 1 + t % 2);
        auto gb = random_gens(rng, 1 + (t + 1) % 2);
        CHECK(equals(IdealHandle(kCtx, kLayer, ga), IdealHandle(kCtx, kLayer, gb)) == oracle_equals(ga, gb));

        // same ideal written with a redundant extra generator
        auto gc = ga;
        gc.push_back(ga[0].times_x() + ga[0]);
        bool eq = equals(IdealHandle(kCtx, kLayer, ga), IdealHandle(kCtx, kLayer, gc));
        CHECK(eq);
        equal_seen += eq;
    }
    CHECK(equal_seen == 12);
}

// ====================== products ======================

TEST_CASE("products on pinned ideals") {
    LayerElement g = elem({1, 2, 0});
    IdealHandle I = IdealHandle::principal(g);
    CHECK(equals(square(I), IdealHandle::principal(g * g)));
    CHECK(equals(product(I, IdealHandle::unit(kCtx, kLayer)), I));

    // (p, X)^2 = (p^2, pX, X^2)
    IdealHandle m = IdealHandle::maximal(kCtx, kLayer);
    IdealHandle msq(kCtx, kLayer, {elem({9, 0, 0}), elem({0, 3, 0}), elem({0, 0, 1})});
    CHECK(equals(square(m), msq));
}

TEST_CASE("products agree with exhaustive enumeration") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 6; ++t) {
        auto ga = random_gens(rng, 1 + t % 2);
        auto gb = random_gens(rng, 1 + (t + 1) % 3);
        IdealHandle prod = product(IdealHandle(kCtx, kLayer, ga), IdealHandle(kCtx, kLayer, gb));

        auto oracle_prod = oracle::enumerate_product(kCtx, kLayer,
                                                     oracle::enumerate_ideal(kCtx, kLayer, ga),
                                                     oracle::enumerate_ideal(kCtx, kLayer, gb));
        CHECK(oracle::enumerate_ideal(kCtx, kLayer, prod.generators()) == oracle_prod);
    }
}

TEST_CASE("product is commutative and associative up to equals") {
    std::mt19937_64 rng(34);
    IdealHandle a(kCtx, kLayer, random_gens(rng, 2));
    IdealHandle b(kCtx, kLayer, random_gens(rng, 1));
    IdealHandle c(kCtx, kLayer, random_gens(rng, 2));
    CHECK(equals(product(a, b), product(b, a)));
    CHECK(equals(product(product(a, b), c), product(a, product(b, c))));
}

// ====================== principality ======================

TEST_CASE("principality certificates on pinned ideals") {
    LayerElement g = elem({1, 2, 0});

    auto cert = is_principal(IdealHandle::principal(g));
    REQUIRE(cert.has_value());
    CHECK(equals(IdealHandle::principal(*cert), IdealHandle::principal(g)));

    auto zero_cert = is_principal(IdealHandle::zero(kCtx, kLayer));
    REQUIRE(zero_cert.has_value());
    CHECK(zero_cert->is_zero());

    CHECK_FALSE(is_principal(IdealHandle::maximal(kCtx, kLayer)).has_value());
}

TEST_CASE("principality agrees with exhaustive search") {
    std::mt19937_64 rng(35);
    for (int t = 0; t < 8; ++t) {
        auto gens = random_gens(rng, 1 + t % 3);
        IdealHandle I(kCtx, kLayer, gens);
        auto set = oracle::enumerate_ideal(kCtx, kLayer, gens);

        auto cert = is_principal(I);
        CHECK(cert.has_value() == oracle::enumerate_is_principal(kCtx, kLayer, set));
        if (cert) CHECK(equals(I, IdealHandle::principal(*cert)));
    }
}

// ====================== projection of ideals ======================

TEST_CASE("projected ideals are generated by projected generators") {
    std::mt19937_64 rng(36);
    PadicContext ctx(3, 2);
    std::vector<LayerElement> gens{sample_element(rng, ctx, 2), sample_element(rng, ctx, 2)};
    IdealHandle I(ctx, 2, gens);
    IdealHandle low = project_ideal(I, 1);
    CHECK(low.layer() == 1);
    for (const auto& g : gens) CHECK(contains(low, project(g)));
    // projection of a member stays a member
    LayerElement member = gens[0] * sample_element(rng, ctx, 2) + gens[1];
    CHECK(contains(low, project(member)));
}

// ====================== handle behaviour ======================

TEST_CASE("copied handles share one canonical certificate") {
    std::mt19937_64 rng(37);
    IdealHandle I(kCtx, kLayer, random_gens(rng, 2));
    IdealHandle J = I;  // copy before the basis is computed
    CHECK(equals(I, J));
    CHECK(&I.canonical() == &J.canonical());
}
