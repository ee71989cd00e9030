#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here trades efficiency for obviousness: ideals are enumerated
// as explicit element sets, determinants come from the permutation sum, and
// spans are walked exhaustively.  Only usable for tiny parameters.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "iwa/layer.hpp"
#include "iwa/linalg.hpp"

namespace oracle {

using iwa::LayerElement;
using iwa::PadicContext;

// Number of ring elements Q^D; guarded so tests cannot explode.
inline std::size_t ring_size(const PadicContext& ctx, unsigned layer) {
    std::size_t d = iwa::LayerElement::zero(ctx, layer).dimension();
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        total *= ctx.modulus();
        if (total > (1u << 21)) throw std::runtime_error("oracle ring too large");
    }
    return total;
}

inline std::size_t encode(const LayerElement& a) {
    std::size_t idx = 0;
    std::size_t base = 1;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        idx += static_cast<std::size_t>(a.raw()[i]) * base;
        base *= a.context().modulus();
    }
    return idx;
}

inline LayerElement decode(const PadicContext& ctx, unsigned layer, std::size_t idx) {
    std::size_t d = LayerElement::zero(ctx, layer).dimension();
    std::vector<std::uint64_t> c(d);
    for (std::size_t i = 0; i < d; ++i) {
        c[i] = idx % ctx.modulus();
        idx /= ctx.modulus();
    }
    return LayerElement(ctx, layer, std::move(c));
}

// Membership bitmap of the ideal generated by `gens`: the additive closure
// of all monomial shifts X^i g.  Uses nothing but coefficient addition.
inline std::vector<char> enumerate_ideal(const PadicContext& ctx, unsigned layer,
                                         const std::vector<LayerElement>& gens) {
    std::size_t total = ring_size(ctx, layer);
    std::vector<LayerElement> shifts;
    for (const auto& g : gens) {
        LayerElement s = g;
        for (std::size_t i = 0; i < g.dimension(); ++i) {
            shifts.push_back(s);
            if (i + 1 < g.dimension()) s = s.times_x();
        }
    }

    std::vector<char> seen(total, 0);
    std::vector<std::size_t> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        std::size_t idx = queue.back();
        queue.pop_back();
        LayerElement e = decode(ctx, layer, idx);
        for (const auto& s : shifts) {
            std::size_t nxt = encode(e + s);
            if (!seen[nxt]) {
                seen[nxt] = 1;
                queue.push_back(nxt);
            }
        }
    }
    return seen;
}

// Product ideal as the additive closure of every pairwise element product.
inline std::vector<char> enumerate_product(const PadicContext& ctx, unsigned layer,
                                           const std::vector<char>& lhs, const std::vector<char>& rhs) {
    std::size_t total = lhs.size();
    std::vector<LayerElement> gens;
    for (std::size_t i = 0; i < total; ++i) {
        if (!lhs[i]) continue;
        LayerElement a = decode(ctx, layer, i);
        for (std::size_t j = 0; j < total; ++j) {
            if (!rhs[j]) continue;
            gens.push_back(a * decode(ctx, layer, j));
        }
    }
    return enumerate_ideal(ctx, layer, gens);
}

// True when some single member generates the whole set.
inline bool enumerate_is_principal(const PadicContext& ctx, unsigned layer, const std::vector<char>& ideal) {
    for (std::size_t i = 0; i < ideal.size(); ++i) {
        if (!ideal[i]) continue;
        if (enumerate_ideal(ctx, layer, {decode(ctx, layer, i)}) == ideal) return true;
    }
    return false;
}

// Every Z/p^M combination of the given rows, as an explicit vector set.
inline std::set<std::vector<std::uint64_t>> enumerate_span(const PadicContext& ctx,
                                                           const std::vector<std::vector<std::uint64_t>>& rows) {
    const std::uint64_t q = ctx.modulus();
    std::set<std::vector<std::uint64_t>> span;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        combos *= q;
        if (combos > (1u << 21)) throw std::runtime_error("oracle span too large");
    }
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t m = 0; m < combos; ++m) {
        std::vector<std::uint64_t> v(cols, 0);
        std::size_t code = m;
        for (const auto& r : rows) {
            std::uint64_t c = code % q;
            code /= q;
            for (std::size_t j = 0; j < cols; ++j)
                v[j] = (v[j] + static_cast<unsigned __int128>(c) * r[j]) % q;
        }
        span.insert(v);
    }
    if (rows.empty()) span.insert(std::vector<std::uint64_t>(cols, 0));
    return span;
}

// Determinant via the full permutation sum, independent of the cofactor
// recursion in the library.
inline LayerElement permutation_determinant(const std::vector<std::vector<LayerElement>>& m) {
    const std::size_t n = m.size();
    const PadicContext& ctx = m[0][0].context();
    unsigned layer = m[0][0].layer();

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    LayerElement acc = LayerElement::zero(ctx, layer);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        LayerElement term = LayerElement::one(ctx, layer);
        for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
        acc = (inversions % 2 == 0) ? acc + term : acc - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// Reduced row echelon form over the field Z/p (assumes M = 1), zero rows
// dropped.  Unique for the row space, so it cross-checks the Howell form.
inline std::vector<std::vector<std::uint64_t>> rref_mod_p(const PadicContext& ctx,
                                                          std::vector<std::vector<std::uint64_t>> rows) {
    const std::uint64_t p = ctx.modulus();
    auto inv = [p](std::uint64_t a) {
        std::uint64_t r = 1;
        for (std::uint64_t e = p - 2; e; e >>= 1) {
            if (e & 1) r = r * a % p;
            a = a * a % p;
        }
        return r;
    };

    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
        std::size_t piv = lead;
        while (piv < rows.size() && rows[piv][col] % p == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[lead], rows[piv]);
        std::uint64_t f = inv(rows[lead][col] % p);
        for (auto& x : rows[lead]) x = x * f % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == lead || rows[i][col] % p == 0) continue;
            std::uint64_t g = rows[i][col] % p;
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] = (rows[i][j] + (p - g) * rows[lead][j]) % p;
        }
        ++lead;
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const std::vector<std::uint64_t>& r) {
                                  return std::all_of(r.begin(), r.end(),
                                                     [](std::uint64_t x) { return x == 0; });
                              }),
               rows.end());
    return rows;
}

} // namespace oracle
