#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "iwa/layer.hpp"
#include "iwa/linalg.hpp"

namespace iwa {

/**
 * Finitely generated ideal of a layer algebra.
 *
 * The ideal is held as its generator list plus a lazily computed canonical
 * certificate: the Howell form of the coefficient lattice spanned by
 * X^i * g_j over Z/p^M for 0 <= i < p^n.  That lattice is closed under
 * multiplication by X, so it determines the ideal, and two ideals are equal
 * exactly when their certificates compare equal.
 *
 * Handles are cheap value types; copies share the cached certificate, and
 * the cache is safe to fill from concurrent readers.
 */
class IdealHandle {
public:
    IdealHandle(PadicContext ctx, unsigned layer, std::vector<LayerElement> generators);

    static IdealHandle zero(PadicContext ctx, unsigned layer);
    static IdealHandle principal(const LayerElement& g);
    static IdealHandle unit(PadicContext ctx, unsigned layer);
    // The maximal ideal (p, X).
    static IdealHandle maximal(PadicContext ctx, unsigned layer);

    const PadicContext& context() const { return ctx_; }
    unsigned layer() const { return layer_; }
    const std::vector<LayerElement>& generators() const { return gens_; }

    const HowellBasis& canonical() const;

private:
    struct Cache;

    PadicContext ctx_;
    unsigned layer_;
    std::vector<LayerElement> gens_;
    std::shared_ptr<Cache> cache_;
};

bool contains(const IdealHandle& ideal, const LayerElement& x);
bool equals(const IdealHandle& a, const IdealHandle& b);

// Generated by all pairwise products of generators.
IdealHandle product(const IdealHandle& a, const IdealHandle& b);
IdealHandle square(const IdealHandle& a);

// Nakayama test: the ideal is principal exactly when I / (p, X)I has
// dimension at most 1 over F_p.  Returns a generator when principal (the
// zero element for the zero ideal), nothing otherwise.
std::optional<LayerElement> is_principal(const IdealHandle& ideal);

// Image ideal under the composite projection to layer m <= n, generated by
// the projected generators.
IdealHandle project_ideal(const IdealHandle& ideal, unsigned m);

} // namespace iwa
