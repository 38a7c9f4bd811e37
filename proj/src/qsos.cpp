#include "xxzkink/qsos.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "xxzkink/operators.hpp"

namespace xxz {

namespace {

double real_powi(double base, int exp) {
    if (exp == 0) return 1.0;
    if (exp < 0) return 1.0 / real_powi(base, -exp);
    double r = 1.0;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

struct BasisLayout {
    std::vector<Site> sites;
    std::vector<int> chain_of;
    std::vector<int> height_of;
};

BasisLayout make_layout(int n_chains, int chain_length) {
    BasisLayout layout;
    if (n_chains == 1) {
        const Chain chain = Chain::centered(chain_length);
        for (int i = 0; i < chain.length; ++i) {
            const int x = chain.coordinate(i);
            layout.sites.push_back({x, 0});
            layout.chain_of.push_back(0);
            layout.height_of.push_back(x);
        }
        return layout;
    }
    const Region strip = make_diagonal_strip(n_chains, chain_length);
    for (const Site& u : strip.sites()) {
        layout.sites.push_back(u);
        layout.chain_of.push_back(zigzag_chain_index(u));
        layout.height_of.push_back(diagonal_height(u));
    }
    return layout;
}

ProductState height_state(const BasisLayout& layout, const std::vector<int>& n_config,
                          SpinQuantum spin, const Anisotropy& aniso) {
    ProductState state;
    state.spin = spin;
    for (std::size_t i = 0; i < layout.sites.size(); ++i) {
        const int exponent =
            n_config[static_cast<std::size_t>(layout.chain_of[i])] + layout.height_of[i];
        const std::complex<double> arg = real_powi(aniso.q, exponent);
        state.sites.push_back(layout.sites[i]);
        state.factors.push_back(chi(arg, spin).coeffs);
        state.chi_args.push_back(arg);
    }
    return state;
}

std::vector<std::vector<int>> enumerate_height_configs(int n_chains,
                                                       const HeightWindow& window) {
    std::vector<std::vector<int>> configs;
    std::vector<int> current(static_cast<std::size_t>(n_chains), window.n_min);
    while (true) {
        configs.push_back(current);
        int u = n_chains - 1;
        while (u >= 0 && current[static_cast<std::size_t>(u)] == window.n_max) {
            current[static_cast<std::size_t>(u)] = window.n_min;
            --u;
        }
        if (u < 0) break;
        ++current[static_cast<std::size_t>(u)];
    }
    return configs;
}

SparseOperator build_hamiltonian(int n_chains, int chain_length, SpinQuantum spin,
                                 const Anisotropy& aniso, std::int64_t cap) {
    if (n_chains == 1) {
        return xxz_chain_hamiltonian(Chain::centered(chain_length), spin, aniso,
                                     BoundaryField::kink(spin, aniso), cap);
    }
    return oriented_hamiltonian(make_diagonal_strip(n_chains, chain_length), spin, aniso, cap);
}

}  // namespace

std::vector<ProductState> height_basis(const Chain& chain, SpinQuantum spin,
                                       const Anisotropy& aniso, const HeightWindow& window) {
    if (!(aniso.q > 0.0 && aniso.q < 1.0))
        throw std::invalid_argument("height_basis: needs Δ > 1 (q in (0,1))");
    if (window.n_min > window.n_max)
        throw std::invalid_argument("height_basis: empty window");
    std::vector<ProductState> basis;
    for (int n = window.n_min; n <= window.n_max; ++n)
        basis.push_back(kink_state(real_powi(aniso.q, n), chain, spin, aniso));
    return basis;
}

GramMatrix gram_matrix(const std::vector<ProductState>& basis) {
    if (basis.empty()) throw std::invalid_argument("gram_matrix: empty basis");
    const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
    GramMatrix out;
    out.g.resize(n, n);
    const bool closed = !basis.front().chi_args.empty();
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            out.g(i, j) = closed ? overlap_closed_form(basis[static_cast<std::size_t>(i)],
                                                       basis[static_cast<std::size_t>(j)])
                                 : overlap(basis[static_cast<std::size_t>(i)],
                                           basis[static_cast<std::size_t>(j)]);

    // Condition number of the norm-scaled Gram matrix; the raw one only
    // reflects the huge norm disparity across heights.
    Eigen::VectorXd inv_norms = out.g.diagonal().real().cwiseSqrt().cwiseInverse();
    const Eigen::MatrixXcd scaled =
        inv_norms.asDiagonal() * out.g * inv_norms.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(scaled, Eigen::EigenvaluesOnly);
    const double lo = solver.eigenvalues().minCoeff();
    const double hi = solver.eigenvalues().maxCoeff();
    out.condition_number = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
    out.ill_conditioned = !(lo > 0.0) || out.condition_number > 1e12;
    return out;
}

QsosSystem projected_hamiltonian(const std::vector<ProductState>& basis,
                                 const std::vector<std::vector<int>>& height_configs,
                                 const SparseOperator& hamiltonian, std::int64_t cap) {
    if (basis.empty()) throw std::invalid_argument("projected_hamiltonian: empty basis");
    if (height_configs.size() != basis.size())
        throw std::invalid_argument("projected_hamiltonian: config labels do not match basis");
    const Eigen::Index nb = static_cast<Eigen::Index>(basis.size());

    QsosSystem system;
    system.spin = basis.front().spin;
    system.height_configs = height_configs;

    // Normalized basis vectors in the full product space.
    std::vector<Eigen::VectorXcd> vectors;
    system.basis_norms.resize(nb);
    for (Eigen::Index i = 0; i < nb; ++i) {
        Eigen::VectorXcd v = expand(basis[static_cast<std::size_t>(i)], cap);
        if (static_cast<std::int64_t>(v.size()) != hamiltonian.dim())
            throw std::invalid_argument("projected_hamiltonian: basis/Hamiltonian mismatch");
        const double norm = v.norm();
        system.basis_norms[i] = norm;
        vectors.push_back(v / norm);
    }

    system.gram.resize(nb, nb);
    system.m_raw.resize(nb, nb);
    for (Eigen::Index j = 0; j < nb; ++j) {
        const Eigen::VectorXcd hv = hamiltonian.apply(vectors[static_cast<std::size_t>(j)]);
        for (Eigen::Index i = 0; i < nb; ++i) {
            system.gram(i, j) =
                vectors[static_cast<std::size_t>(i)].dot(vectors[static_cast<std::size_t>(j)]);
            system.m_raw(i, j) = vectors[static_cast<std::size_t>(i)].dot(hv);
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> gram_solver(system.gram);
    if (gram_solver.info() != Eigen::Success)
        throw std::runtime_error("projected_hamiltonian: Gram eigendecomposition failed");
    const Eigen::VectorXd ev = gram_solver.eigenvalues();
    if (!(ev.minCoeff() > 0.0))
        throw std::runtime_error("projected_hamiltonian: height basis is numerically dependent");
    system.gram_condition = ev.maxCoeff() / ev.minCoeff();
    system.gram_warning = system.gram_condition > 1e12;

    const Eigen::MatrixXcd inv_sqrt = gram_solver.eigenvectors() *
                                      ev.cwiseSqrt().cwiseInverse().asDiagonal() *
                                      gram_solver.eigenvectors().adjoint();
    system.h_eff = inv_sqrt * system.m_raw * inv_sqrt;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> heff_solver(system.h_eff,
                                                                Eigen::EigenvaluesOnly);
    system.h_eff_min_eigenvalue = heff_solver.eigenvalues().minCoeff();
    return system;
}

HeightWindow default_window(int n_chains, int chain_length, int size) {
    // Strip chains all cover heights 0..chain_length-1; φ(qⁿ) is centered at
    // height -n, so the window is centered on the middle of that range. The
    // single chain is centered around coordinate 0 already.
    const int center = n_chains == 1 ? 0 : -(chain_length / 2);
    const int n_min = center - (size - 1) / 2;
    return HeightWindow{n_min, n_min + size - 1};
}

QsosSystem coupled_qsos(int n_chains, int chain_length, SpinQuantum spin,
                        const Anisotropy& aniso, const HeightWindow& window,
                        std::int64_t cap) {
    if (n_chains < 1 || n_chains > 3)
        throw std::invalid_argument("coupled_qsos: n_chains must be 1, 2 or 3");
    if (window.size() < 2) throw std::invalid_argument("coupled_qsos: window size must be >= 2");
    if (!(aniso.q > 0.0 && aniso.q < 1.0))
        throw std::invalid_argument("coupled_qsos: needs Δ > 1");

    const BasisLayout layout = make_layout(n_chains, chain_length);
    const std::vector<std::vector<int>> configs = enumerate_height_configs(n_chains, window);
    std::vector<ProductState> basis;
    basis.reserve(configs.size());
    for (const std::vector<int>& c : configs)
        basis.push_back(height_state(layout, c, spin, aniso));

    const SparseOperator hamiltonian =
        build_hamiltonian(n_chains, chain_length, spin, aniso, cap);
    QsosSystem system = projected_hamiltonian(basis, configs, hamiltonian, cap);
    system.n_chains = n_chains;
    system.chain_length = chain_length;
    system.window = window;
    system.delta = aniso.delta;
    return system;
}

double shift_commutator_defect(const QsosSystem& system) {
    if (system.window.size() < 3)
        throw std::invalid_argument("shift_commutator_defect: window size must be >= 3");
    const Eigen::Index nb = static_cast<Eigen::Index>(system.height_configs.size());

    const auto index_of = [&](const std::vector<int>& config) -> Eigen::Index {
        Eigen::Index idx = 0;
        for (int n : config) {
            if (n < system.window.n_min || n > system.window.n_max) return -1;
            idx = idx * system.window.size() + (n - system.window.n_min);
        }
        return idx;
    };

    // Matrix elements of h_eff within `depth` of the window edge are
    // truncation artifacts of the height cutoff (they do not converge with
    // chain length), so the interior insulation scales with the window.
    const int depth = (system.window.size() - 1) / 2;

    Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(nb, nb);
    std::vector<bool> interior(static_cast<std::size_t>(nb), true);
    for (Eigen::Index j = 0; j < nb; ++j) {
        std::vector<int> up = system.height_configs[static_cast<std::size_t>(j)];
        for (int& n : up) ++n;
        const Eigen::Index up_idx = index_of(up);
        if (up_idx >= 0) shift(up_idx, j) = 1.0;
        for (int n : system.height_configs[static_cast<std::size_t>(j)])
            if (n < system.window.n_min + depth || n > system.window.n_max - depth)
                interior[static_cast<std::size_t>(j)] = false;
    }

    const Eigen::MatrixXcd comm = system.h_eff * shift - shift * system.h_eff;
    double sq = 0.0;
    for (Eigen::Index i = 0; i < nb; ++i)
        for (Eigen::Index j = 0; j < nb; ++j)
            if (interior[static_cast<std::size_t>(i)] && interior[static_cast<std::size_t>(j)])
                sq += std::norm(comm(i, j));
    return std::sqrt(sq);
}

Eigen::VectorXcd interface_coordinates(const QsosSystem& system, const Anisotropy& aniso,
                                       int height) {
    const BasisLayout layout = make_layout(system.n_chains, system.chain_length);
    const std::vector<int> aligned(static_cast<std::size_t>(system.n_chains), height);
    const ProductState omega = height_state(layout, aligned, system.spin, aniso);
    const double omega_norm = std::sqrt(squared_norm(omega));

    const Eigen::Index nb = static_cast<Eigen::Index>(system.height_configs.size());
    Eigen::VectorXcd b(nb);
    for (Eigen::Index i = 0; i < nb; ++i) {
        const ProductState phi = height_state(
            layout, system.height_configs[static_cast<std::size_t>(i)], system.spin, aniso);
        b[i] = overlap_closed_form(phi, omega) /
               (std::sqrt(squared_norm(phi)) * omega_norm);
    }

    // Least-squares coefficients in the normalized height basis, then mapped
    // to Löwdin-orthonormal coordinates with G^{1/2}.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> gram_solver(system.gram);
    const Eigen::VectorXd ev = gram_solver.eigenvalues();
    if (!(ev.minCoeff() > 0.0))
        throw std::runtime_error("interface_coordinates: singular Gram matrix");
    const Eigen::MatrixXcd u = gram_solver.eigenvectors();
    const Eigen::VectorXcd coeffs =
        u * ev.cwiseInverse().asDiagonal() * u.adjoint() * b;        // G^{-1} b
    return u * ev.cwiseSqrt().asDiagonal() * u.adjoint() * coeffs;   // G^{1/2} G^{-1} b
}

double interface_residual(const QsosSystem& system, const Anisotropy& aniso, int height) {
    const Eigen::VectorXcd v = interface_coordinates(system, aniso, height);
    const double norm = v.norm();
    if (norm == 0.0) return 0.0;
    return (system.h_eff * v).norm() / norm;
}

int h_eff_kernel_dim(const QsosSystem& system, double tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(system.h_eff,
                                                           Eigen::EigenvaluesOnly);
    int dim = 0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
        if (solver.eigenvalues()[i] < tol) ++dim;
    return dim;
}

}  // namespace xxz
