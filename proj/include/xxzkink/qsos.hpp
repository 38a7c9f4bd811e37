#ifndef XXZKINK_QSOS_HPP
#define XXZKINK_QSOS_HPP

#include <cstdint>
#include <vector>

#include "xxzkink/lattice.hpp"
#include "xxzkink/spectral.hpp"
#include "xxzkink/states.hpp"

namespace xxz {

// Finite truncation of the height index n labeling φ(qⁿ).
struct HeightWindow {
    int n_min = 0;
    int n_max = 0;

    int size() const { return n_max - n_min + 1; }
};

// Height basis {φ(qⁿ) | n in window} on a chain: the kink center sits at
// coordinate -n.
std::vector<ProductState> height_basis(const Chain& chain, SpinQuantum spin,
                                       const Anisotropy& aniso, const HeightWindow& window);

struct GramMatrix {
    Eigen::MatrixXcd g;  // G[m][n] = ⟨φ_m, φ_n⟩ (raw, unnormalized states)
    // Condition number of the norm-scaled Gram matrix, which measures the
    // linear independence of the basis directions; flagged above 1e12.
    double condition_number = 0.0;
    bool ill_conditioned = false;
};

// Overlap matrix of a height basis via the per-site closed form.
GramMatrix gram_matrix(const std::vector<ProductState>& basis);

// Height-basis projection of a PSD Hamiltonian. Basis vectors are normalized
// before projecting, so gram/m_raw refer to unit-norm states; h_eff is the
// Löwdin-orthonormalized matrix G^{-1/2} M G^{-1/2}.
struct QsosSystem {
    int n_chains = 1;
    int chain_length = 0;
    HeightWindow window;
    SpinQuantum spin;
    double delta = 1.0;

    std::vector<std::vector<int>> height_configs;  // (n_u) per basis element
    Eigen::VectorXd basis_norms;                   // ‖φ‖ before normalization
    Eigen::MatrixXcd gram;
    Eigen::MatrixXcd m_raw;
    Eigen::MatrixXcd h_eff;
    double gram_condition = 0.0;
    bool gram_warning = false;
    double h_eff_min_eigenvalue = 0.0;
};

QsosSystem projected_hamiltonian(const std::vector<ProductState>& basis,
                                 const std::vector<std::vector<int>>& height_configs,
                                 const SparseOperator& hamiltonian,
                                 std::int64_t cap = kDefaultDimensionCap);

// Full QSOS construction over n_chains coupled zig-zag chains (n_chains = 1
// degenerates to the single-chain case, where the projected Hamiltonian
// vanishes identically). Basis elements are tensor products of per-chain
// height states over the shared window.
QsosSystem coupled_qsos(int n_chains, int chain_length, SpinQuantum spin,
                        const Anisotropy& aniso, const HeightWindow& window,
                        std::int64_t cap = kDefaultDimensionCap);

// Window whose aligned heights put the interface strictly inside every chain.
HeightWindow default_window(int n_chains, int chain_length, int size = 3);

// Frobenius norm of [h_eff, Shift] restricted to height configs whose global
// shifts up and down both stay inside the window. Requires window size >= 3.
double shift_commutator_defect(const QsosSystem& system);

// Löwdin-basis coordinates of the interface state Ω(qⁿ); solves the
// least-squares problem against the Gram matrix.
Eigen::VectorXcd interface_coordinates(const QsosSystem& system, const Anisotropy& aniso,
                                       int height);

// ‖h_eff v‖ / ‖v‖ for the interface coordinate vector.
double interface_residual(const QsosSystem& system, const Anisotropy& aniso, int height);

int h_eff_kernel_dim(const QsosSystem& system, double tol = kKernelThreshold);

}  // namespace xxz

#endif
