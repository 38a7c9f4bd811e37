#include "xxzkink/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xxz {

namespace {

bool entry_less(const SparseEntry& a, const SparseEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
}

}  // namespace

SparseOperator SparseOperator::from_entries(std::int64_t dim, std::vector<SparseEntry> entries) {
    if (dim < 1) throw std::invalid_argument("SparseOperator: dimension must be positive");
    for (const SparseEntry& e : entries) {
        if (e.row < 0 || e.row >= dim || e.col < 0 || e.col >= dim)
            throw std::invalid_argument("SparseOperator: entry index out of range");
    }
    std::sort(entries.begin(), entries.end(), entry_less);

    SparseOperator op;
    op.dim_ = dim;
    op.entries_.reserve(entries.size());
    for (const SparseEntry& e : entries) {
        if (!op.entries_.empty() && op.entries_.back().row == e.row &&
            op.entries_.back().col == e.col) {
            op.entries_.back().value += e.value;
        } else {
            op.entries_.push_back(e);
        }
    }
    std::erase_if(op.entries_, [](const SparseEntry& e) { return e.value == 0.0; });

    for (const SparseEntry& e : op.entries_) op.max_abs_ = std::max(op.max_abs_, std::abs(e.value));

    // Conjugate-symmetry defect: every entry must have a matching transpose partner.
    double defect = 0.0;
    for (const SparseEntry& e : op.entries_) {
        SparseEntry probe{e.col, e.row, 0.0};
        auto it = std::lower_bound(op.entries_.begin(), op.entries_.end(), probe, entry_less);
        const std::complex<double> partner =
            (it != op.entries_.end() && it->row == e.col && it->col == e.row) ? it->value : 0.0;
        defect = std::max(defect, std::abs(e.value - std::conj(partner)));
    }
    op.hermiticity_defect_ = defect;
    op.hermitian_ = defect <= 1e-13 * std::max(1.0, op.max_abs_);
    return op;
}

SparseOperator SparseOperator::identity(std::int64_t dim) {
    std::vector<SparseEntry> entries;
    entries.reserve(static_cast<std::size_t>(dim));
    for (std::int64_t i = 0; i < dim; ++i) entries.push_back({i, i, 1.0});
    return from_entries(dim, std::move(entries));
}

SparseOperator SparseOperator::zero(std::int64_t dim) { return from_entries(dim, {}); }

Eigen::VectorXcd SparseOperator::apply(const Eigen::VectorXcd& x) const {
    if (x.size() != dim_)
        throw std::invalid_argument("SparseOperator::apply: vector length mismatch");
    Eigen::VectorXcd y = Eigen::VectorXcd::Zero(dim_);
    for (const SparseEntry& e : entries_) y[e.row] += e.value * x[e.col];
    return y;
}

Eigen::MatrixXcd SparseOperator::to_dense(std::int64_t dense_cap) const {
    if (dim_ > dense_cap)
        throw std::length_error("SparseOperator::to_dense: dimension exceeds the dense cap");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim_, dim_);
    for (const SparseEntry& e : entries_) m(e.row, e.col) += e.value;
    return m;
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("SparseOperator: dimension mismatch");
    std::vector<SparseEntry> entries = a.entries();
    entries.insert(entries.end(), b.entries().begin(), b.entries().end());
    return SparseOperator::from_entries(a.dim(), std::move(entries));
}

SparseOperator SparseOperator::scaled(std::complex<double> factor) const {
    std::vector<SparseEntry> entries = entries_;
    for (SparseEntry& e : entries) e.value *= factor;
    return from_entries(dim_, std::move(entries));
}

}  // namespace xxz
