#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "iwa/padic.hpp"

namespace iwa {

/**
 * Element of the layer-n algebra (Z/p^M)[X] / ((1+X)^{p^n} - 1).
 *
 * The class keeps coefficients in the monomial basis X^i, 0 <= i < p^n.
 * The generator gamma = 1 + X spans a cyclic group of order p^n inside the
 * unit group, and the alternative basis {gamma^i} is reachable through
 * to_group_basis / from_group_basis.  Products are reduced against
 * omega_n = (1+X)^{p^n} - 1, which is monic, so reduction is exact.
 *
 * Layer 0 is the scalar ring itself: a single coefficient.
 */
class LayerElement {
public:
    LayerElement(PadicContext ctx, unsigned layer, std::vector<std::uint64_t> coeffs);

    static LayerElement zero(PadicContext ctx, unsigned layer);
    static LayerElement one(PadicContext ctx, unsigned layer);
    static LayerElement constant(const PadicScalar& c, unsigned layer);
    static LayerElement from_ints(PadicContext ctx, unsigned layer, const std::vector<long long>& coeffs);

    const PadicContext& context() const { return ctx_; }
    unsigned layer() const { return layer_; }
    std::size_t dimension() const { return coeffs_.size(); }
    PadicScalar coeff(std::size_t i) const { return PadicScalar(ctx_, coeffs_.at(i)); }
    const std::vector<std::uint64_t>& raw() const { return coeffs_; }

    bool is_zero() const;

    LayerElement operator+(const LayerElement& o) const;
    LayerElement operator-(const LayerElement& o) const;
    LayerElement operator*(const LayerElement& o) const;
    LayerElement operator-() const;
    bool operator==(const LayerElement& o) const;
    bool operator!=(const LayerElement& o) const { return !(*this == o); }

    // Multiplication by X in O(p^n), used to enumerate coefficient lattices.
    LayerElement times_x() const;

private:
    void require_same_layer(const LayerElement& o) const;

    PadicContext ctx_;
    unsigned layer_;
    std::vector<std::uint64_t> coeffs_;
};

LayerElement operator*(const PadicScalar& c, const LayerElement& a);

// Coefficients over the basis {gamma^i : 0 <= i < p^n}, gamma = 1 + X.
std::vector<std::uint64_t> to_group_basis(const LayerElement& a);
LayerElement from_group_basis(PadicContext ctx, unsigned layer, const std::vector<std::uint64_t>& g);

// Ring involution induced by gamma -> gamma^{-1}.
LayerElement iota(const LayerElement& a);

// Ring surjection onto layer n-1, induced by gamma_n -> gamma_{n-1}.  In the
// monomial basis this is reduction mod omega_{n-1}.  Throws BottomLayer at
// layer 0.
LayerElement project(const LayerElement& a);

// Composite projection down to layer m <= n; identity when m = n.
LayerElement project_to(const LayerElement& a, unsigned m);

// Coefficient-wise section of project_to: reinterprets the same polynomial
// at layer m >= n, so project_to(lift_to(a, m), n) == a.
LayerElement lift_to(const LayerElement& a, unsigned m);

// Additive norm map from layer n to layer n+1: gamma_n^i is sent to the sum
// of its p preimages under project.  Satisfies project(norm_map(a)) == p * a
// and the projection formula norm_map(a) * b == norm_map(a * project(b)).
LayerElement norm_map(const LayerElement& a);

// Composite norm up to layer m >= n; identity when m = n.
LayerElement norm_to(const LayerElement& a, unsigned m);

// omega_k = (1+X)^{p^k} - 1 viewed inside layer `target` (zero when equal).
LayerElement omega_element(PadicContext ctx, unsigned k, unsigned target);

// gamma^e reduced into the layer, i.e. (1+X)^{e mod p^n}.
LayerElement gamma_power(PadicContext ctx, unsigned layer, std::uint64_t e);

// Uniform coefficients drawn from the engine; deterministic given its state.
LayerElement sample_element(std::mt19937_64& rng, PadicContext ctx, unsigned layer);

// Coefficient list "[c0, c1, ...]" in the monomial basis.
std::string to_string(const LayerElement& a);

} // namespace iwa
