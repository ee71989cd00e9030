#include "iwa/linalg.hpp"

#include <algorithm>

namespace iwa {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    std::uint64_t s = a + (q - b);
    return s >= q ? s - q : s;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) {
    long long r0 = static_cast<long long>(q), r1 = static_cast<long long>(a % q);
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long k = r0 / r1;
        long long r2 = r0 - k * r1;
        long long t2 = t0 - k * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    long long t = t0 % static_cast<long long>(q);
    if (t < 0) t += static_cast<long long>(q);
    return static_cast<std::uint64_t>(t);
}

unsigned val_of(std::uint64_t x, std::uint64_t p, unsigned m) {
    if (x == 0) return m;
    unsigned v = 0;
    while (x % p == 0) { x /= p; ++v; }
    return v;
}

using Row = std::vector<std::uint64_t>;

std::size_t leading_col(const Row& r) {
    for (std::size_t j = 0; j < r.size(); ++j)
        if (r[j] != 0) return j;
    return r.size();
}

void axpy(Row& dst, std::uint64_t factor, const Row& src, std::uint64_t q) {
    for (std::size_t j = 0; j < dst.size(); ++j)
        dst[j] = sub_mod(dst[j], mul_mod(factor, src[j], q), q);
}

} // namespace

ZModMatrix::ZModMatrix(PadicContext ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

ZModMatrix::ZModMatrix(PadicContext ctx, std::size_t cols, std::vector<std::vector<std::uint64_t>> rows)
    : ctx_(ctx), rows_(rows.size()), cols_(cols) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch();
        for (auto v : r) data_.push_back(v % ctx_.modulus());
    }
}

bool ZModMatrix::operator==(const ZModMatrix& o) const {
    return ctx_ == o.ctx_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

unsigned HowellBasis::log_size() const {
    unsigned total = 0;
    for (unsigned k : pivot_vals_) total += mat_.context().precision() - k;
    return total;
}

HowellBasis howell(const ZModMatrix& m) {
    const PadicContext& ctx = m.context();
    const std::uint64_t q = ctx.modulus();
    const std::uint64_t p = ctx.prime();
    const unsigned prec = ctx.precision();
    const std::size_t cols = m.cols();

    std::vector<Row> work;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Row r(cols);
        for (std::size_t j = 0; j < cols; ++j) r[j] = m.at(i, j);
        if (leading_col(r) < cols) work.push_back(std::move(r));
    }

    std::vector<Row> out;
    std::vector<std::size_t> pivot_cols;
    std::vector<unsigned> pivot_vals;

    for (std::size_t col = 0; col < cols; ++col) {
        // Select the row led by this column whose entry has minimal
        // valuation; over a chain ring it divides every other candidate.
        std::size_t best = work.size();
        unsigned best_val = prec + 1;
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (leading_col(work[i]) != col) continue;
            unsigned v = val_of(work[i][col], p, prec);
            if (v < best_val) { best = i; best_val = v; }
        }
        if (best == work.size()) continue;

        Row pivot = std::move(work[best]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));

        std::uint64_t pk = 1;
        for (unsigned i = 0; i < best_val; ++i) pk *= p;
        std::uint64_t unit = pivot[col] / pk;
        std::uint64_t unit_inv = inv_mod(unit, q);
        for (auto& x : pivot) x = mul_mod(x, unit_inv, q);

        for (auto& r : work) {
            if (leading_col(r) != col) continue;
            // r[col] is a multiple of the pivot p^k, so division by p^k is
            // exact and the entry cancels completely.
            axpy(r, r[col] / pk, pivot, q);
        }
        work.erase(std::remove_if(work.begin(), work.end(),
                                  [cols](const Row& r) { return leading_col(r) == cols; }),
                   work.end());

        if (best_val > 0) {
            // Saturation row: the annihilator multiple leads further right
            // and keeps the span closed under leading-zero truncation.
            std::uint64_t ann = 1;
            for (unsigned i = 0; i < prec - best_val; ++i) ann *= p;
            Row extra(cols, 0);
            for (std::size_t jj = col + 1; jj < cols; ++jj) extra[jj] = mul_mod(ann, pivot[jj], q);
            if (leading_col(extra) < cols) work.push_back(std::move(extra));
        }

        out.push_back(std::move(pivot));
        pivot_cols.push_back(col);
        pivot_vals.push_back(best_val);
    }

    // Normalise entries above each pivot into [0, p^k).
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t pk = 1;
        for (unsigned t = 0; t < pivot_vals[i]; ++t) pk *= p;
        for (std::size_t r = 0; r < i; ++r) {
            std::uint64_t f = out[r][pivot_cols[i]] / pk;
            if (f != 0) axpy(out[r], f, out[i], q);
        }
    }

    HowellBasis basis(ZModMatrix(ctx, cols, std::vector<std::vector<std::uint64_t>>(out.begin(), out.end())));
    basis.pivot_cols_ = std::move(pivot_cols);
    basis.pivot_vals_ = std::move(pivot_vals);
    return basis;
}

bool span_membership(const HowellBasis& basis, std::vector<std::uint64_t> v) {
    const PadicContext& ctx = basis.matrix().context();
    const std::uint64_t q = ctx.modulus();
    const std::uint64_t p = ctx.prime();
    if (v.size() != basis.matrix().cols()) throw DimensionMismatch();
    for (auto& x : v) x %= q;

    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::size_t col = basis.pivot_cols()[i];
        std::uint64_t pk = 1;
        for (unsigned t = 0; t < basis.pivot_vals()[i]; ++t) pk *= p;
        if (v[col] % pk != 0) return false;
        std::uint64_t f = v[col] / pk;
        if (f == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = sub_mod(v[j], mul_mod(f, basis.matrix().at(i, j), q), q);
    }
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

LayerElement determinant(const std::vector<std::vector<LayerElement>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];

    LayerElement acc = LayerElement::zero(m[0][0].context(), m[0][0].layer());
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<LayerElement>> sub;
        sub.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<LayerElement> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        LayerElement term = m[0][j] * determinant(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

std::vector<LayerElement> minors(const std::vector<std::vector<LayerElement>>& m, std::size_t k) {
    if (m.empty() || m[0].empty()) throw DimensionMismatch();
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    for (const auto& row : m) {
        if (row.size() != cols) throw DimensionMismatch();
        for (const auto& e : row)
            if (e.context() != m[0][0].context() || e.layer() != m[0][0].layer()) throw LayerMismatch();
    }
    if (k == 0 || k > rows || k > cols) throw SizeTooLarge();

    // March the k-subsets in lexicographic order for a deterministic list.
    auto first_subset = [k]() {
        std::vector<std::size_t> s(k);
        for (std::size_t i = 0; i < k; ++i) s[i] = i;
        return s;
    };
    auto next_subset = [k](std::vector<std::size_t>& s, std::size_t bound) {
        std::size_t i = k;
        while (i-- > 0) {
            if (s[i] + 1 <= bound - (k - i)) {
                ++s[i];
                for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    std::vector<LayerElement> out;
    std::vector<std::size_t> rsel = first_subset();
    do {
        std::vector<std::size_t> csel = first_subset();
        do {
            std::vector<std::vector<LayerElement>> sub;
            sub.reserve(k);
            for (std::size_t i : rsel) {
                std::vector<LayerElement> row;
                row.reserve(k);
                for (std::size_t j : csel) row.push_back(m[i][j]);
                sub.push_back(std::move(row));
            }
            out.push_back(determinant(sub));
        } while (next_subset(csel, cols));
    } while (next_subset(rsel, rows));
    return out;
}

} // namespace iwa
