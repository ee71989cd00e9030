#include "iwa/layer.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace iwa {

namespace {

constexpr std::uint64_t kMaxDimension = 1 << 20;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    std::uint64_t s = a + (q - b);
    return s >= q ? s - q : s;
}

std::uint64_t layer_dimension(const PadicContext& ctx, unsigned layer) {
    std::uint64_t d = 1;
    for (unsigned i = 0; i < layer; ++i) {
        d *= ctx.prime();
        if (d > kMaxDimension) throw Error("layer dimension p^n too large");
    }
    return d;
}

// Row e of Pascal's triangle mod q, built additively so no division is
// needed in a ring with zero divisors.
std::vector<std::uint64_t> pascal_row(std::uint64_t e, std::uint64_t q) {
    std::vector<std::uint64_t> row{1 % q};
    for (std::uint64_t i = 1; i <= e; ++i) {
        std::vector<std::uint64_t> next(i + 1, 0);
        next[0] = row[0];
        next[i] = row[i - 1];
        for (std::uint64_t j = 1; j < i; ++j) {
            std::uint64_t s = row[j] + row[j - 1];
            next[j] = s >= q ? s - q : s;
        }
        row = std::move(next);
    }
    return row;
}

// Lower coefficients of the monic modulus omega_n = (1+X)^{p^n} - 1, i.e.
// row[j] = C(p^n, j) for 1 <= j < p^n and row[0] = 0.  Cached per (p, M, n)
// behind a mutex so concurrent callers share one copy.
using ModulusKey = std::tuple<std::uint64_t, unsigned, unsigned>;

std::shared_ptr<const std::vector<std::uint64_t>> modulus_row(const PadicContext& ctx, unsigned layer) {
    static std::mutex lock;
    static std::map<ModulusKey, std::shared_ptr<const std::vector<std::uint64_t>>> cache;

    ModulusKey key{ctx.prime(), ctx.precision(), layer};
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::uint64_t d = layer_dimension(ctx, layer);
    std::vector<std::uint64_t> row = pascal_row(d, ctx.modulus());
    row[0] = 0;
    row.resize(d);
    auto shared = std::make_shared<const std::vector<std::uint64_t>>(std::move(row));
    cache.emplace(key, shared);
    return shared;
}

// In-place reduction of a polynomial against omega at the given layer.
void reduce_mod_omega(std::vector<std::uint64_t>& c, const PadicContext& ctx, unsigned layer) {
    const std::uint64_t q = ctx.modulus();
    const std::uint64_t d = layer_dimension(ctx, layer);
    if (c.size() <= d) {
        c.resize(d, 0);
        return;
    }
    auto row = modulus_row(ctx, layer);
    for (std::size_t i = c.size(); i-- > d;) {
        std::uint64_t top = c[i];
        if (top == 0) continue;
        c[i] = 0;
        for (std::uint64_t j = 1; j < d; ++j)
            c[i - d + j] = sub_mod(c[i - d + j], mul_mod(top, (*row)[j], q), q);
    }
    c.resize(d);
}

} // namespace

LayerElement::LayerElement(PadicContext ctx, unsigned layer, std::vector<std::uint64_t> coeffs)
    : ctx_(ctx), layer_(layer), coeffs_(std::move(coeffs)) {
    std::uint64_t d = layer_dimension(ctx_, layer_);
    if (coeffs_.size() != d) throw DimensionMismatch();
    for (auto& c : coeffs_) c %= ctx_.modulus();
}

LayerElement LayerElement::zero(PadicContext ctx, unsigned layer) {
    return LayerElement(ctx, layer, std::vector<std::uint64_t>(layer_dimension(ctx, layer), 0));
}

LayerElement LayerElement::one(PadicContext ctx, unsigned layer) {
    std::vector<std::uint64_t> c(layer_dimension(ctx, layer), 0);
    c[0] = 1;
    return LayerElement(ctx, layer, std::move(c));
}

LayerElement LayerElement::constant(const PadicScalar& c, unsigned layer) {
    std::vector<std::uint64_t> v(layer_dimension(c.context(), layer), 0);
    v[0] = c.value();
    return LayerElement(c.context(), layer, std::move(v));
}

LayerElement LayerElement::from_ints(PadicContext ctx, unsigned layer, const std::vector<long long>& coeffs) {
    std::vector<std::uint64_t> v;
    v.reserve(coeffs.size());
    for (long long c : coeffs) v.push_back(PadicScalar::from_int(ctx, c).value());
    return LayerElement(ctx, layer, std::move(v));
}

bool LayerElement::is_zero() const {
    for (auto c : coeffs_)
        if (c != 0) return false;
    return true;
}

void LayerElement::require_same_layer(const LayerElement& o) const {
    if (ctx_ != o.ctx_ || layer_ != o.layer_) throw LayerMismatch();
}

LayerElement LayerElement::operator+(const LayerElement& o) const {
    require_same_layer(o);
    std::vector<std::uint64_t> out(coeffs_.size());
    const std::uint64_t q = ctx_.modulus();
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t s = coeffs_[i] + o.coeffs_[i];
        out[i] = s >= q ? s - q : s;
    }
    return LayerElement(ctx_, layer_, std::move(out));
}

LayerElement LayerElement::operator-(const LayerElement& o) const {
    require_same_layer(o);
    std::vector<std::uint64_t> out(coeffs_.size());
    const std::uint64_t q = ctx_.modulus();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = sub_mod(coeffs_[i], o.coeffs_[i], q);
    return LayerElement(ctx_, layer_, std::move(out));
}

LayerElement LayerElement::operator*(const LayerElement& o) const {
    require_same_layer(o);
    const std::uint64_t q = ctx_.modulus();
    const std::size_t d = coeffs_.size();
    std::vector<std::uint64_t> prod(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (o.coeffs_[j] == 0) continue;
            std::uint64_t s = prod[i + j] + mul_mod(coeffs_[i], o.coeffs_[j], q);
            prod[i + j] = s >= q ? s - q : s;
        }
    }
    reduce_mod_omega(prod, ctx_, layer_);
    return LayerElement(ctx_, layer_, std::move(prod));
}

LayerElement LayerElement::operator-() const {
    std::vector<std::uint64_t> out(coeffs_.size());
    const std::uint64_t q = ctx_.modulus();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] == 0 ? 0 : q - coeffs_[i];
    return LayerElement(ctx_, layer_, std::move(out));
}

bool LayerElement::operator==(const LayerElement& o) const {
    require_same_layer(o);
    return coeffs_ == o.coeffs_;
}

LayerElement LayerElement::times_x() const {
    const std::uint64_t q = ctx_.modulus();
    const std::size_t d = coeffs_.size();
    auto row = modulus_row(ctx_, layer_);
    std::uint64_t top = coeffs_[d - 1];
    std::vector<std::uint64_t> out(d, 0);
    for (std::size_t j = d; j-- > 1;) out[j] = coeffs_[j - 1];
    if (top != 0)
        for (std::size_t j = 1; j < d; ++j) out[j] = sub_mod(out[j], mul_mod(top, (*row)[j], q), q);
    return LayerElement(ctx_, layer_, std::move(out));
}

LayerElement operator*(const PadicScalar& c, const LayerElement& a) {
    if (c.context() != a.context()) throw LayerMismatch();
    const std::uint64_t q = a.context().modulus();
    std::vector<std::uint64_t> out(a.raw());
    for (auto& x : out) x = mul_mod(x, c.value(), q);
    return LayerElement(a.context(), a.layer(), std::move(out));
}

std::vector<std::uint64_t> to_group_basis(const LayerElement& a) {
    // Substitute X = gamma - 1: accumulate c_j * (gamma - 1)^j with the
    // power carried as a coefficient vector over gamma-exponents.
    const std::uint64_t q = a.context().modulus();
    const std::size_t d = a.dimension();
    std::vector<std::uint64_t> g(d, 0), pw(d, 0);
    pw[0] = 1;
    for (std::size_t j = 0; j < d; ++j) {
        std::uint64_t c = a.raw()[j];
        if (c != 0)
            for (std::size_t i = 0; i <= j; ++i) {
                std::uint64_t s = g[i] + mul_mod(c, pw[i], q);
                g[i] = s >= q ? s - q : s;
            }
        if (j + 1 < d) {
            // pw <- pw * (gamma - 1), degree grows by one so no wraparound.
            for (std::size_t i = j + 2; i-- > 0;) {
                std::uint64_t up = i > 0 ? pw[i - 1] : 0;
                pw[i] = sub_mod(up, pw[i], q);
            }
        }
    }
    return g;
}

LayerElement from_group_basis(PadicContext ctx, unsigned layer, const std::vector<std::uint64_t>& g) {
    const std::uint64_t q = ctx.modulus();
    LayerElement probe = LayerElement::zero(ctx, layer);
    const std::size_t d = probe.dimension();
    if (g.size() != d) throw DimensionMismatch();
    std::vector<std::uint64_t> out(d, 0), pw(d, 0);
    pw[0] = 1;
    for (std::size_t i = 0; i < d; ++i) {
        std::uint64_t c = g[i] % q;
        if (c != 0)
            for (std::size_t j = 0; j <= i; ++j) {
                std::uint64_t s = out[j] + mul_mod(c, pw[j], q);
                out[j] = s >= q ? s - q : s;
            }
        if (i + 1 < d) {
            // pw <- pw * (1 + X), again strictly below the modulus degree.
            for (std::size_t j = i + 2; j-- > 1;) {
                std::uint64_t s = pw[j] + pw[j - 1];
                pw[j] = s >= q ? s - q : s;
            }
        }
    }
    return LayerElement(ctx, layer, std::move(out));
}

LayerElement iota(const LayerElement& a) {
    std::vector<std::uint64_t> g = to_group_basis(a);
    const std::size_t d = g.size();
    std::vector<std::uint64_t> h(d);
    h[0] = g[0];
    for (std::size_t i = 1; i < d; ++i) h[i] = g[d - i];
    return from_group_basis(a.context(), a.layer(), h);
}

LayerElement project(const LayerElement& a) {
    if (a.layer() == 0) throw BottomLayer();
    std::vector<std::uint64_t> c(a.raw());
    reduce_mod_omega(c, a.context(), a.layer() - 1);
    return LayerElement(a.context(), a.layer() - 1, std::move(c));
}

LayerElement project_to(const LayerElement& a, unsigned m) {
    if (m > a.layer()) throw LevelOutOfRange();
    LayerElement out = a;
    while (out.layer() > m) out = project(out);
    return out;
}

LayerElement lift_to(const LayerElement& a, unsigned m) {
    if (m < a.layer()) throw LevelOutOfRange();
    LayerElement target = LayerElement::zero(a.context(), m);
    std::vector<std::uint64_t> c(target.dimension(), 0);
    for (std::size_t i = 0; i < a.dimension(); ++i) c[i] = a.raw()[i];
    return LayerElement(a.context(), m, std::move(c));
}

LayerElement norm_map(const LayerElement& a) {
    // gamma_{n}^i is sent to the sum of its preimages gamma_{n+1}^{i + t*p^n},
    // which in the group basis is a p-fold periodic spread.
    std::vector<std::uint64_t> g = to_group_basis(a);
    const std::size_t d = g.size();
    const std::size_t dd = d * static_cast<std::size_t>(a.context().prime());
    std::vector<std::uint64_t> spread(dd);
    for (std::size_t k = 0; k < dd; ++k) spread[k] = g[k % d];
    return from_group_basis(a.context(), a.layer() + 1, spread);
}

LayerElement norm_to(const LayerElement& a, unsigned m) {
    if (m < a.layer()) throw LevelOutOfRange();
    LayerElement out = a;
    while (out.layer() < m) out = norm_map(out);
    return out;
}

LayerElement omega_element(PadicContext ctx, unsigned k, unsigned target) {
    LayerElement out = LayerElement::zero(ctx, target);
    if (k >= target) return out;  // gamma^{p^k} - 1 collapses to 0 at or above its own layer
    std::uint64_t e = 1;
    for (unsigned i = 0; i < k; ++i) e *= ctx.prime();
    std::vector<std::uint64_t> row = pascal_row(e, ctx.modulus());
    std::vector<std::uint64_t> c(out.dimension(), 0);
    for (std::uint64_t j = 1; j <= e; ++j) c[j] = row[j];
    return LayerElement(ctx, target, std::move(c));
}

LayerElement gamma_power(PadicContext ctx, unsigned layer, std::uint64_t e) {
    LayerElement shape = LayerElement::zero(ctx, layer);
    const std::size_t d = shape.dimension();
    e %= d;
    std::vector<std::uint64_t> row = pascal_row(e, ctx.modulus());
    std::vector<std::uint64_t> c(d, 0);
    for (std::uint64_t j = 0; j <= e; ++j) c[j] = row[j];
    return LayerElement(ctx, layer, std::move(c));
}

LayerElement sample_element(std::mt19937_64& rng, PadicContext ctx, unsigned layer) {
    // Raw engine output reduced by modulo keeps the draw identical across
    // platforms; distribution classes do not guarantee that.
    LayerElement shape = LayerElement::zero(ctx, layer);
    std::vector<std::uint64_t> c(shape.dimension());
    for (auto& x : c) x = rng() % ctx.modulus();
    return LayerElement(ctx, layer, std::move(c));
}

std::string to_string(const LayerElement& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (i) s += ", ";
        s += std::to_string(a.raw()[i]);
    }
    return s + "]";
}

} // namespace iwa
