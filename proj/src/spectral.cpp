#include "xxzkink/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace xxz {

namespace {

void require_hermitian(const SparseOperator& op, const char* who) {
    if (!op.hermitian())
        throw std::invalid_argument(std::string(who) + ": operator is not Hermitian");
}

// splitmix64; fixed-seed reproducible start vectors across platforms.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() {  // in (-1, 1)
        return 2.0 * (static_cast<double>(next() >> 11) * 0x1.0p-53) - 1.0;
    }
};

Eigen::VectorXcd random_start(std::int64_t dim, SplitMix64& rng) {
    Eigen::VectorXcd v(dim);
    for (std::int64_t i = 0; i < dim; ++i) v[i] = std::complex<double>(rng.uniform(), rng.uniform());
    const double n = v.norm();
    if (n == 0.0) v[0] = 1.0;
    return v / v.norm();
}

}  // namespace

EigenSystem dense_eigensystem(const SparseOperator& op, std::int64_t dense_cap) {
    require_hermitian(op, "dense_eigensystem");
    if (op.dim() > dense_cap)
        throw std::length_error("dense_eigensystem: dimension exceeds the dense cap");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op.to_dense(dense_cap));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("dense_eigensystem: eigendecomposition failed");
    return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<double> dense_spectrum(const SparseOperator& op, std::int64_t dense_cap) {
    require_hermitian(op, "dense_spectrum");
    if (op.dim() > dense_cap)
        throw std::length_error("dense_spectrum: dimension exceeds the dense cap");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op.to_dense(dense_cap),
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("dense_spectrum: eigendecomposition failed");
    const Eigen::VectorXd& v = solver.eigenvalues();
    return std::vector<double>(v.data(), v.data() + v.size());
}

LanczosResult extremal_eigs(const SparseOperator& op, const LanczosOptions& options) {
    require_hermitian(op, "extremal_eigs");
    const std::int64_t dim = op.dim();
    if (options.k < 1 || options.k > dim)
        throw std::invalid_argument("extremal_eigs: k out of range");

    SplitMix64 rng(options.seed ? options.seed : 1);
    const int max_steps =
        static_cast<int>(std::min<std::int64_t>(dim, std::max(options.max_iterations, options.k)));

    std::vector<Eigen::VectorXcd> basis;
    std::vector<double> alphas;
    std::vector<double> betas;  // betas[j] couples step j to j+1; 0 marks a restart

    auto orthogonalize = [&](Eigen::VectorXcd& w) {
        for (int pass = 0; pass < 2; ++pass)
            for (const Eigen::VectorXcd& v : basis) w -= v.dot(w) * v;
    };

    basis.push_back(random_start(dim, rng));
    double scale = 1.0;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small_solver;
    Eigen::MatrixXd tri;

    auto solve_tri = [&](int m) {
        tri = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            tri(i, i) = alphas[static_cast<std::size_t>(i)];
            if (i + 1 < m) tri(i, i + 1) = tri(i + 1, i) = betas[static_cast<std::size_t>(i)];
        }
        small_solver.compute(tri);
    };

    int m = 0;
    for (int j = 0; j < max_steps; ++j) {
        Eigen::VectorXcd w = op.apply(basis[static_cast<std::size_t>(j)]);
        const double alpha = std::real(basis[static_cast<std::size_t>(j)].dot(w));
        alphas.push_back(alpha);
        orthogonalize(w);
        double beta = w.norm();
        scale = std::max({scale, std::abs(alpha), beta});
        m = j + 1;
        if (m >= dim) break;

        if (beta <= 1e-13 * scale) {
            // Invariant subspace exhausted; continue in a fresh direction.
            Eigen::VectorXcd fresh = random_start(dim, rng);
            orthogonalize(fresh);
            const double fn = fresh.norm();
            if (fn <= 1e-8) break;
            basis.push_back(fresh / fn);
            betas.push_back(0.0);
            continue;
        }
        basis.push_back(w / beta);
        betas.push_back(beta);

        // Convergence check on the lowest k Ritz residual estimates.
        if (m >= options.k && (m % 8 == 0 || j + 1 == max_steps)) {
            solve_tri(m);
            bool done = true;
            for (int i = 0; i < options.k; ++i) {
                const double est = beta * std::abs(small_solver.eigenvectors()(m - 1, i));
                if (est > options.tol * scale) {
                    done = false;
                    break;
                }
            }
            if (done) break;
        }
    }

    solve_tri(m);
    const int k = options.k;
    LanczosResult result;
    result.iterations = m;
    result.vectors = Eigen::MatrixXcd::Zero(dim, k);
    for (int i = 0; i < k; ++i) {
        Eigen::VectorXcd x = Eigen::VectorXcd::Zero(dim);
        for (int j = 0; j < m; ++j)
            x += small_solver.eigenvectors()(j, i) * basis[static_cast<std::size_t>(j)];
        x.normalize();
        const double theta = small_solver.eigenvalues()(i);
        result.values.push_back(theta);
        result.vectors.col(i) = x;
        result.residuals.push_back((op.apply(x) - theta * x).norm());
    }
    result.converged = true;
    for (double r : result.residuals)
        if (!(r <= options.tol * scale)) result.converged = false;
    return result;
}

KernelCount kernel_dimension(const SparseOperator& op, double tol, std::int64_t dense_cap) {
    const std::vector<double> spectrum = dense_spectrum(op, dense_cap);
    if (!spectrum.empty() && spectrum.front() < -tol)
        throw std::invalid_argument("kernel_dimension: operator is not PSD within tol");
    KernelCount out;
    for (double v : spectrum)
        if (v < tol) ++out.dim;
    if (out.dim < static_cast<int>(spectrum.size())) {
        out.margin = spectrum[static_cast<std::size_t>(out.dim)];
        out.ambiguous = out.margin < 10.0 * tol;
    } else {
        out.margin = std::numeric_limits<double>::infinity();
    }
    return out;
}

std::vector<SectorReport> gap_scan(const std::vector<GapScanEntry>& family,
                                   const LanczosOptions& options, double kernel_tol,
                                   std::int64_t dense_switch) {
    std::vector<SectorReport> reports;
    for (const GapScanEntry& entry : family) {
        SectorReport report;
        report.size = entry.size;
        report.twice_m = entry.twice_m;

        std::vector<double> low;
        if (entry.block.dim() <= dense_switch) {
            low = dense_spectrum(entry.block, std::max(dense_switch, kDefaultDenseCap));
            report.solver = "dense";
            report.converged = true;
        } else {
            LanczosOptions opt = options;
            opt.k = std::min<std::int64_t>(std::max(options.k, 2), entry.block.dim());
            // Mix the entry label into the seed so every block starts fresh
            // but reproducibly.
            opt.seed = options.seed * 1000003ull +
                       static_cast<std::uint64_t>(entry.size) * 101ull +
                       static_cast<std::uint64_t>(entry.twice_m + 1024);
            const LanczosResult lr = extremal_eigs(entry.block, opt);
            low = lr.values;
            report.solver = "lanczos";
            report.converged = lr.converged;
        }

        if (!low.empty()) report.ground_energy = low.front();
        int kernel = 0;
        for (double v : low)
            if (v < kernel_tol) ++kernel;
        report.kernel_dim = kernel;
        if (kernel < static_cast<int>(low.size()))
            report.gap = low[static_cast<std::size_t>(kernel)];
        reports.push_back(report);
    }
    return reports;
}

}  // namespace xxz
