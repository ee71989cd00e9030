#include "iwa/fitting.hpp"

namespace iwa {

PresentationMatrix::PresentationMatrix(PadicContext ctx, unsigned layer, std::size_t rows, std::size_t cols,
                                       std::vector<LayerElement> entries)
    : ctx_(ctx), layer_(layer), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) throw DimensionMismatch();
    if (entries_.size() != rows_ * cols_) throw DimensionMismatch();
    for (const auto& e : entries_)
        if (e.context() != ctx_ || e.layer() != layer_) throw LayerMismatch();
}

std::vector<std::vector<LayerElement>> PresentationMatrix::as_grid() const {
    std::vector<std::vector<LayerElement>> grid;
    grid.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::vector<LayerElement> row;
        row.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) row.push_back(at(i, j));
        grid.push_back(std::move(row));
    }
    return grid;
}

IdealHandle fitting_ideal(const PresentationMatrix& m) {
    if (m.cols() < m.rows()) return IdealHandle::zero(m.context(), m.layer());
    return IdealHandle(m.context(), m.layer(), minors(m.as_grid(), m.rows()));
}

PresentationMatrix base_change(const PresentationMatrix& m, unsigned target) {
    if (target > m.layer()) throw LevelOutOfRange();
    std::vector<LayerElement> entries;
    entries.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(project_to(m.at(i, j), target));
    return PresentationMatrix(m.context(), target, m.rows(), m.cols(), std::move(entries));
}

} // namespace iwa
