#ifndef XXZKINK_SPARSE_HPP
#define XXZKINK_SPARSE_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace xxz {

struct SparseEntry {
    std::int64_t row = 0;
    std::int64_t col = 0;
    std::complex<double> value;
};

// Hermitian-aware sparse operator in coordinate-list form, sorted by (row, col)
// with duplicates merged at assembly so the result is independent of the bond
// iteration order.
class SparseOperator {
public:
    SparseOperator() = default;

    static SparseOperator from_entries(std::int64_t dim, std::vector<SparseEntry> entries);
    static SparseOperator identity(std::int64_t dim);
    static SparseOperator zero(std::int64_t dim);

    std::int64_t dim() const { return dim_; }
    std::size_t nnz() const { return entries_.size(); }
    const std::vector<SparseEntry>& entries() const { return entries_; }
    bool hermitian() const { return hermitian_; }
    double hermiticity_defect() const { return hermiticity_defect_; }
    double max_abs() const { return max_abs_; }

    Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;
    Eigen::MatrixXcd to_dense(std::int64_t dense_cap = 4096) const;

    friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
    SparseOperator scaled(std::complex<double> factor) const;

private:
    std::int64_t dim_ = 0;
    std::vector<SparseEntry> entries_;
    bool hermitian_ = false;
    double hermiticity_defect_ = 0.0;
    double max_abs_ = 0.0;
};

}  // namespace xxz

#endif
