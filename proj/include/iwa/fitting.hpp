#pragma once

#include <vector>

#include "iwa/ideal.hpp"
#include "iwa/layer.hpp"

namespace iwa {

/**
 * Relation matrix of a finitely presented module over a layer algebra.
 * Rows index the module generators and columns the relations, so the matrix
 * presents coker(Lambda^cols -> Lambda^rows).
 */
class PresentationMatrix {
public:
    PresentationMatrix(PadicContext ctx, unsigned layer, std::size_t rows, std::size_t cols,
                       std::vector<LayerElement> entries);

    const PadicContext& context() const { return ctx_; }
    unsigned layer() const { return layer_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const LayerElement& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::vector<std::vector<LayerElement>> as_grid() const;

private:
    PadicContext ctx_;
    unsigned layer_;
    std::size_t rows_, cols_;
    std::vector<LayerElement> entries_;
};

// Initial Fitting ideal: generated by the maximal (rows x rows) minors, or
// the zero ideal when there are fewer relations than generators.
IdealHandle fitting_ideal(const PresentationMatrix& m);

// Entry-wise composite projection to layer `target` <= layer.
PresentationMatrix base_change(const PresentationMatrix& m, unsigned target);

} // namespace iwa
