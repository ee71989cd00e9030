#include "iwa/ideal.hpp"

#include <mutex>

namespace iwa {

struct IdealHandle::Cache {
    std::once_flag once;
    std::optional<HowellBasis> basis;
};

IdealHandle::IdealHandle(PadicContext ctx, unsigned layer, std::vector<LayerElement> generators)
    : ctx_(ctx), layer_(layer), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_)
        if (g.context() != ctx_ || g.layer() != layer_) throw LayerMismatch();
}

IdealHandle IdealHandle::zero(PadicContext ctx, unsigned layer) {
    return IdealHandle(ctx, layer, {});
}

IdealHandle IdealHandle::principal(const LayerElement& g) {
    return IdealHandle(g.context(), g.layer(), {g});
}

IdealHandle IdealHandle::unit(PadicContext ctx, unsigned layer) {
    return IdealHandle(ctx, layer, {LayerElement::one(ctx, layer)});
}

IdealHandle IdealHandle::maximal(PadicContext ctx, unsigned layer) {
    LayerElement p = LayerElement::constant(PadicScalar(ctx, ctx.prime()), layer);
    LayerElement x = LayerElement::one(ctx, layer).times_x();
    if (layer == 0) return IdealHandle(ctx, layer, {p});  // X is already 0 downstairs
    return IdealHandle(ctx, layer, {p, x});
}

const HowellBasis& IdealHandle::canonical() const {
    std::call_once(cache_->once, [this] {
        std::vector<std::vector<std::uint64_t>> rows;
        for (const auto& g : gens_) {
            LayerElement shifted = g;
            for (std::size_t i = 0; i < shifted.dimension(); ++i) {
                rows.push_back(shifted.raw());
                if (i + 1 < shifted.dimension()) shifted = shifted.times_x();
            }
        }
        std::size_t d = LayerElement::zero(ctx_, layer_).dimension();
        cache_->basis = howell(ZModMatrix(ctx_, d, std::move(rows)));
    });
    return *cache_->basis;
}

bool contains(const IdealHandle& ideal, const LayerElement& x) {
    if (x.context() != ideal.context() || x.layer() != ideal.layer()) throw LayerMismatch();
    return span_membership(ideal.canonical(), x.raw());
}

bool equals(const IdealHandle& a, const IdealHandle& b) {
    if (a.context() != b.context() || a.layer() != b.layer()) throw LayerMismatch();
    return a.canonical() == b.canonical();
}

IdealHandle product(const IdealHandle& a, const IdealHandle& b) {
    if (a.context() != b.context() || a.layer() != b.layer()) throw LayerMismatch();
    std::vector<LayerElement> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& g : a.generators())
        for (const auto& h : b.generators()) gens.push_back(g * h);
    return IdealHandle(a.context(), a.layer(), std::move(gens));
}

IdealHandle square(const IdealHandle& a) { return product(a, a); }

std::optional<LayerElement> is_principal(const IdealHandle& ideal) {
    const PadicContext& ctx = ideal.context();
    const unsigned layer = ideal.layer();

    IdealHandle mi = product(IdealHandle::maximal(ctx, layer), ideal);
    unsigned dim = ideal.canonical().log_size() - mi.canonical().log_size();

    if (dim == 0) {
        // I = (p, X) I forces I = 0 in this finite local ring.
        return LayerElement::zero(ctx, layer);
    }
    if (dim > 1) return std::nullopt;

    // Any lattice row outside (p, X)I generates by Nakayama.
    const ZModMatrix& rows = ideal.canonical().matrix();
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        std::vector<std::uint64_t> row(rows.cols());
        for (std::size_t j = 0; j < rows.cols(); ++j) row[j] = rows.at(i, j);
        if (!span_membership(mi.canonical(), row))
            return LayerElement(ctx, layer, std::move(row));
    }
    return std::nullopt;  // unreachable when dim == 1
}

IdealHandle project_ideal(const IdealHandle& ideal, unsigned m) {
    std::vector<LayerElement> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) gens.push_back(project_to(g, m));
    return IdealHandle(ideal.context(), m, std::move(gens));
}

} // namespace iwa
