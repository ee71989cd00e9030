#pragma once

#include <cstdint>
#include <vector>

#include "iwa/layer.hpp"
#include "iwa/padic.hpp"

namespace iwa {

/**
 * Dense matrix over Z/p^M, row-major.
 */
class ZModMatrix {
public:
    ZModMatrix(PadicContext ctx, std::size_t rows, std::size_t cols);
    ZModMatrix(PadicContext ctx, std::size_t cols, std::vector<std::vector<std::uint64_t>> rows);

    const PadicContext& context() const { return ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::uint64_t v) { data_[i * cols_ + j] = v % ctx_.modulus(); }

    bool operator==(const ZModMatrix& o) const;
    bool operator!=(const ZModMatrix& o) const { return !(*this == o); }

private:
    PadicContext ctx_;
    std::size_t rows_, cols_;
    std::vector<std::uint64_t> data_;
};

/**
 * Canonical certificate for a row span over Z/p^M.
 *
 * Rows are in echelon order with pivot entries p^k, entries above a pivot
 * reduced mod p^k, and the span closed under leading-zero saturation: for
 * each pivot p^k the tail of p^{M-k} times that row lies in the span of the
 * later rows.  Two matrices have equal row span exactly when their forms
 * compare equal, which reduces ideal identities to matrix comparison.
 */
class HowellBasis {
public:
    const ZModMatrix& matrix() const { return mat_; }
    std::size_t rows() const { return mat_.rows(); }
    const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }
    const std::vector<unsigned>& pivot_vals() const { return pivot_vals_; }

    // log_p of the number of vectors in the span.
    unsigned log_size() const;

    bool operator==(const HowellBasis& o) const { return mat_ == o.mat_; }
    bool operator!=(const HowellBasis& o) const { return !(*this == o); }

private:
    friend HowellBasis howell(const ZModMatrix& m);
    explicit HowellBasis(ZModMatrix mat) : mat_(std::move(mat)) {}

    ZModMatrix mat_;
    std::vector<std::size_t> pivot_cols_;
    std::vector<unsigned> pivot_vals_;
};

HowellBasis howell(const ZModMatrix& m);

// Decides v in span(basis) by eliminating against each pivot in turn; the
// saturation property makes this exact over Z/p^M.
bool span_membership(const HowellBasis& basis, std::vector<std::uint64_t> v);

// All k x k minors by cofactor expansion, ordered lexicographically by
// (row subset, column subset).  Throws SizeTooLarge when k exceeds either
// dimension and LayerMismatch on ragged or mixed-layer input.
std::vector<LayerElement> minors(const std::vector<std::vector<LayerElement>>& m, std::size_t k);

// Determinant of a square matrix of layer elements, cofactor expansion
// along the first row.
LayerElement determinant(const std::vector<std::vector<LayerElement>>& m);

} // namespace iwa
