#ifndef XXZKINK_SPECTRAL_HPP
#define XXZKINK_SPECTRAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "xxzkink/sparse.hpp"

namespace xxz {

inline constexpr std::int64_t kDefaultDenseCap = 4096;
inline constexpr double kKernelThreshold = 1e-8;

struct EigenSystem {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXcd vectors; // columns match values
};

// Full Hermitian spectrum, ascending. Rejects non-Hermitian input and
// dimensions above the dense cap.
std::vector<double> dense_spectrum(const SparseOperator& op,
                                   std::int64_t dense_cap = kDefaultDenseCap);
EigenSystem dense_eigensystem(const SparseOperator& op,
                              std::int64_t dense_cap = kDefaultDenseCap);

struct LanczosOptions {
    int k = 1;
    double tol = 1e-10;
    std::uint64_t seed = 1;
    int max_iterations = 512;
};

struct LanczosResult {
    std::vector<double> values;
    Eigen::MatrixXcd vectors;
    std::vector<double> residuals;
    int iterations = 0;
    bool converged = false;
};

// Lanczos with full (two-pass) reorthogonalization and a deterministic
// seeded start vector; returns the lowest k Ritz pairs. A breakdown starts a
// fresh deterministic direction, so degenerate levels can still be collected.
LanczosResult extremal_eigs(const SparseOperator& op, const LanczosOptions& options);

struct KernelCount {
    int dim = 0;
    double margin = 0.0;  // first eigenvalue at or above the threshold
    bool ambiguous = false;
};

// Number of eigenvalues below tol for a PSD operator. Ambiguous (reported,
// never silently resolved) when the margin to the next eigenvalue is < 10 tol.
KernelCount kernel_dimension(const SparseOperator& op, double tol = kKernelThreshold,
                             std::int64_t dense_cap = kDefaultDenseCap);

struct SectorReport {
    int size = 0;
    int twice_m = 0;
    double ground_energy = 0.0;
    int kernel_dim = 0;
    double gap = 0.0;
    bool converged = true;
    std::string solver;
};

struct GapScanEntry {
    int size = 0;
    int twice_m = 0;
    SparseOperator block;
};

// One report per family entry; dense below dense_switch, Lanczos above.
std::vector<SectorReport> gap_scan(const std::vector<GapScanEntry>& family,
                                   const LanczosOptions& options,
                                   double kernel_tol = kKernelThreshold,
                                   std::int64_t dense_switch = 512);

}  // namespace xxz

#endif
