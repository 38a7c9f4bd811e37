// Acceptance suite: one check per release criterion, each printing a single
// PASS/FAIL line. Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "xxzkink/experiments.hpp"
#include "xxzkink/operators.hpp"
#include "xxzkink/qsos.hpp"
#include "xxzkink/spectral.hpp"
#include "xxzkink/states.hpp"

using namespace xxz;
using complexd = std::complex<double>;

namespace {

// Thrown by a criterion when the checked bound is violated.
struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

std::vector<complexd> z_grid(const Anisotropy& aniso) {
    return {aniso.q, 1.0, 1.0 / aniso.q, std::polar(1.0, M_PI / 3.0)};
}

// 1. Kink product states are zero-energy states of the 1D chain Hamiltonian.
std::string criterion_zero_energy_1d() {
    double worst = 0.0;
    for (int twice_s : {1, 2}) {
        const SpinQuantum spin{twice_s};
        for (double delta : {1.5, 2.0, 4.0}) {
            const Anisotropy aniso = q_from_delta(delta);
            for (int n : {4, 6, 8}) {
                const Chain chain = Chain::centered(n);
                const SparseOperator h = xxz_chain_hamiltonian(
                    chain, spin, aniso, BoundaryField::kink(spin, aniso));
                for (complexd z : z_grid(aniso)) {
                    Eigen::VectorXcd v = expand(kink_state(z, chain, spin, aniso));
                    v.normalize();
                    worst = std::max(worst, h.apply(v).norm());
                }
            }
        }
    }
    if (worst >= 1e-11) throw Failure("max relative residual " + fmt(worst) + " >= 1e-11");
    return "max relative residual " + fmt(worst);
}

// 2. The 111 interface state is a zero-energy state of the oriented 2D sum.
std::string criterion_zero_energy_2d() {
    const SpinQuantum spin{1};
    const Anisotropy aniso = q_from_delta(2.0);
    double worst = 0.0;
    for (const auto& [w, h] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {3, 4}}) {
        const Region region = make_rectangle(w, h);
        const SparseOperator ham = oriented_hamiltonian(region, spin, aniso);
        for (complexd z : z_grid(aniso)) {
            Eigen::VectorXcd v = expand(interface_state(z, region, spin, aniso));
            v.normalize();
            worst = std::max(worst, ham.apply(v).norm());
        }
    }
    if (worst >= 1e-10) throw Failure("max relative residual " + fmt(worst) + " >= 1e-10");
    return "max relative residual " + fmt(worst);
}

// 3. Every magnetization sector of the N=6 chain holds exactly one ground state.
std::string criterion_sector_uniqueness() {
    const SpinQuantum spin{1};
    const Anisotropy aniso = q_from_delta(2.0);
    const Chain chain = Chain::centered(6);
    const double threshold = 1e-8;
    int total = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    for (int twice_m = -6; twice_m <= 6; twice_m += 2) {
        const SectorBasis basis = SectorBasis::build(6, spin, twice_m);
        const SparseOperator block = xxz_chain_sector_block(
            chain, spin, aniso, BoundaryField::kink(spin, aniso), basis);
        const std::vector<double> spectrum = dense_spectrum(block);
        int kernel = 0;
        for (double v : spectrum)
            if (v < threshold) ++kernel;
        if (kernel != 1) throw Failure("sector 2M=" + std::to_string(twice_m) + " kernel dim " +
                                std::to_string(kernel) + " != 1");
        if (spectrum.size() > 1) min_margin = std::min(min_margin, spectrum[1]);
        total += kernel;
    }
    if (total != 7) throw Failure("total kernel dim " + std::to_string(total) + " != 7");
    if (min_margin < 1e4 * threshold)
        throw Failure("spectral margin " + fmt(min_margin) + " below 1e4 x threshold");
    return "7 one-dimensional sector kernels, margin " + fmt(min_margin);
}

// 4. S=1/2 kink profile equals (1/2) tanh((x-a)/xi) with the closed-form
//    center and width.
std::string criterion_tanh_profile() {
    const SpinQuantum spin{1};
    const Anisotropy aniso = q_from_delta(2.0);
    const Chain chain = Chain::centered(16);
    const double xi = 1.0 / std::log(1.0 / aniso.q);
    double worst = 0.0;
    for (complexd z : {complexd(1.0), complexd(2.0), complexd(0.7, 0.4)}) {
        const std::vector<double> profile =
            magnetization_profile(kink_state(z, chain, spin, aniso));
        const double a = std::log(std::abs(z)) * xi;
        for (int i = 0; i < chain.length; ++i) {
            const double fit = 0.5 * std::tanh((chain.coordinate(i) - a) / xi);
            worst = std::max(worst, std::abs(profile[static_cast<std::size_t>(i)] - fit));
        }
    }
    if (worst >= 1e-12) throw Failure("max profile deviation " + fmt(worst) + " >= 1e-12");
    return "max profile deviation " + fmt(worst);
}

// 5. Rotation covariance on the 2x3 lattice and exact translation covariance
//    of the kink family. In the z^{S-m} gauge used throughout, the rotation
//    identity reads exp(iθS³_tot) Ω(z) = e^{iθSn} Ω(e^{-iθ}z).
std::string criterion_symmetries() {
    const SpinQuantum spin{1};
    const Anisotropy aniso = q_from_delta(2.0);
    const Region region = make_rectangle(2, 3);
    const complexd z(0.9, 0.25);
    double worst = 0.0;
    for (double theta : {M_PI / 7.0, M_PI / 2.0, M_PI}) {
        const Eigen::VectorXcd rotated =
            rotation_unitary(theta, region.n_sites(), spin)
                .apply(expand(interface_state(z, region, spin, aniso)));
        const Eigen::VectorXcd target =
            std::polar(1.0, theta * spin.value() * region.n_sites()) *
            expand(interface_state(z * std::polar(1.0, -theta), region, spin, aniso));
        worst = std::max(worst, (rotated - target).norm() / target.norm());
    }
    if (worst >= 1e-12) throw Failure("rotation identity residual " + fmt(worst) + " >= 1e-12");

    const Chain chain = Chain::centered(10);
    const ProductState phi = kink_state(z, chain, spin, aniso);
    const ProductState phi_q = kink_state(z * aniso.q, chain, spin, aniso);
    double shift_dev = 0.0;
    for (int i = 0; i + 1 < chain.length; ++i) {
        const Eigen::VectorXcd& moved = phi.factors[static_cast<std::size_t>(i + 1)];
        const Eigen::VectorXcd& target = phi_q.factors[static_cast<std::size_t>(i)];
        shift_dev = std::max(shift_dev, (moved - target).cwiseAbs().maxCoeff() /
                                            std::max(1.0, target.cwiseAbs().maxCoeff()));
    }
    if (shift_dev >= 1e-13)
        throw Failure("translation covariance deviation " + fmt(shift_dev) + " >= 1e-13");
    return "rotation residual " + fmt(worst) + ", translation deviation " + fmt(shift_dev);
}

// 6. The four asymptotic profile types classify correctly on N=16 chains.
std::string criterion_classification() {
    const SpinQuantum spin{1};
    const Anisotropy aniso = q_from_delta(2.0);
    const Chain chain = Chain::centered(16);
    const ProductState up = kink_state(0.0, chain, spin, aniso);
    const struct {
        ProductState state;
        ProfileClass expected;
    } cases[] = {
        {up, ProfileClass::Up},
        {spin_flip(up), ProfileClass::Down},
        {kink_state(1.0, chain, spin, aniso), ProfileClass::Kink},
        {antikink_state(1.0, chain, spin, aniso), ProfileClass::Antikink},
    };
    for (const auto& c : cases) {
        const ProfileClass got = classify_profile(magnetization_profile(c.state), spin, 1e-3);
        if (got != c.expected)
            throw Failure(std::string("expected ") + to_string(c.expected) + ", got " + to_string(got));
    }
    return "up, down, kink, antikink all classified";
}

// 7. Isotropic contrast: at Δ=1 the kernel is the flat maximal multiplet; at
//    Δ=2 the sector ground states carry kink profiles.
std::string criterion_isotropic_contrast() {
    const SpinQuantum spin{1};
    const Anisotropy iso = q_from_delta(1.0);
    for (int n : {4, 6, 8}) {
        const Chain chain = Chain::centered(n);
        const SparseOperator h = xxz_chain_hamiltonian(chain, spin, iso, BoundaryField::raw(0.0));
        const KernelCount kernel = kernel_dimension(h);
        if (kernel.dim != n + 1)
            throw Failure("isotropic N=" + std::to_string(n) + " kernel dim " +
                   std::to_string(kernel.dim) + " != " + std::to_string(n + 1));
        // Flat profiles: each sector kernel vector has site-independent <S3>.
        for (int twice_m = -n; twice_m <= n; twice_m += 2) {
            const SectorBasis basis = SectorBasis::build(n, spin, twice_m);
            const EigenSystem es = dense_eigensystem(sector_restrict(h, basis));
            if (es.values[0] > 1e-10) throw Failure("isotropic sector ground energy not zero");
            const Eigen::VectorXcd& psi = es.vectors.col(0);
            for (int x = 0; x < n; ++x) {
                double m = 0.0;
                for (std::size_t i = 0; i < basis.size(); ++i)
                    m += 0.5 * basis.twice_m_config(i)[static_cast<std::size_t>(x)] *
                         std::norm(psi[static_cast<Eigen::Index>(i)]);
                if (std::abs(m - 0.5 * twice_m / n) > 1e-8)
                    throw Failure("isotropic kernel profile is not flat");
            }
        }
    }

    // Anisotropic side: central-sector ground state of the N=8 kink chain is
    // a strictly rising profile saturating at both ends.
    const Anisotropy aniso = q_from_delta(2.0);
    const Chain chain = Chain::centered(8);
    const SectorBasis basis = SectorBasis::build(8, spin, 0);
    const SparseOperator block = xxz_chain_sector_block(chain, spin, aniso,
                                                        BoundaryField::kink(spin, aniso), basis);
    const EigenSystem es = dense_eigensystem(block);
    const Eigen::VectorXcd& psi = es.vectors.col(0);
    std::vector<double> profile(8, 0.0);
    for (int x = 0; x < 8; ++x)
        for (std::size_t i = 0; i < basis.size(); ++i)
            profile[static_cast<std::size_t>(x)] +=
                0.5 * basis.twice_m_config(i)[static_cast<std::size_t>(x)] *
                std::norm(psi[static_cast<Eigen::Index>(i)]);
    for (int x = 0; x + 1 < 8; ++x)
        if (profile[static_cast<std::size_t>(x)] >= profile[static_cast<std::size_t>(x + 1)])
            throw Failure("anisotropic sector ground state profile is not strictly increasing");
    if (std::abs(profile.front() + 0.5) > 0.01 || std::abs(profile.back() - 0.5) > 0.01)
        throw Failure("anisotropic kink profile does not saturate at the chain ends");
    return "flat multiplet at Δ=1, kink profile at Δ=2";
}

// 8. Spectral gaps: the anisotropic 1D gaps stay above the floor 0.5
//    (= 1 - 1/Δ; first established by a dense run of the same family), while
//    the 2D strip gap above the kernel shrinks monotonically with the width.
std::string criterion_gap_behavior() {
    const SpinQuantum spin{1};
    const Anisotropy aniso = q_from_delta(2.0);
    const double floor = 0.5;

    std::vector<GapScanEntry> family;
    for (int n : {6, 8, 10, 12}) {
        const SectorBasis basis = SectorBasis::build(n, spin, 0);
        family.push_back({n, 0,
                          xxz_chain_sector_block(Chain::centered(n), spin, aniso,
                                                 BoundaryField::kink(spin, aniso), basis)});
    }
    LanczosOptions options;
    options.k = 3;
    options.tol = 1e-9;
    options.seed = 2024;
    for (const SectorReport& report : gap_scan(family, options)) {
        if (!report.converged) throw Failure("solver did not converge at N=" + std::to_string(report.size));
        if (report.kernel_dim != 1) throw Failure("1D sector kernel dimension is not 1");
        if (report.gap <= floor)
            throw Failure("N=" + std::to_string(report.size) + " gap " + fmt(report.gap) +
                   " fell below the floor " + fmt(floor));
    }

    double previous = std::numeric_limits<double>::infinity();
    for (int width : {2, 3, 4, 5}) {
        const Region region = make_rectangle(width, 2);
        const SparseOperator h = oriented_hamiltonian(region, spin, aniso);
        const std::vector<double> spectrum = dense_spectrum(h);
        int kernel = 0;
        for (double v : spectrum)
            if (v < 1e-8) ++kernel;
        if (kernel != region.n_sites() + 1) throw Failure("2D kernel dimension mismatch");
        const double gap = spectrum[static_cast<std::size_t>(kernel)];
        if (gap >= previous)
            throw Failure("2D gap did not decrease at W=" + std::to_string(width) + " (" + fmt(gap) +
                   " >= " + fmt(previous) + ")");
        previous = gap;
    }
    return "1D gaps above " + fmt(floor) + ", 2D gaps monotonically decreasing";
}

// 9. Per-site closed-form overlaps equal dense inner products.
std::string criterion_gram_dual_path() {
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int twice_s = 1 + trial % 3;
        const SpinQuantum spin{twice_s};
        const complexd a(std::sin(1.9 * trial + 0.2), std::cos(0.7 * trial));
        const complexd b(0.8 * std::cos(1.3 * trial), 0.9 * std::sin(2.1 * trial + 1.0));
        const complexd closed = chi_overlap(a, b, spin);
        const complexd dense = chi(a, spin).coeffs.dot(chi(b, spin).coeffs);
        worst = std::max(worst,
                         std::abs(closed - dense) / std::max(1.0, std::abs(dense)));
    }
    // Product-state level on a chain, closed form against the expanded vectors.
    const SpinQuantum spin{1};
    const Anisotropy aniso = q_from_delta(2.0);
    const Chain chain = Chain::centered(8);
    for (int trial = 0; trial < 10; ++trial) {
        const ProductState u =
            kink_state(complexd(0.5 + 0.1 * trial, 0.2), chain, spin, aniso);
        const ProductState v = kink_state(complexd(1.0, -0.05 * trial), chain, spin, aniso);
        const complexd closed = overlap_closed_form(u, v);
        const complexd dense = expand(u).dot(expand(v));
        worst = std::max(worst, std::abs(closed - dense) / std::max(1.0, std::abs(dense)));
    }
    if (worst >= 1e-12) throw Failure("max overlap mismatch " + fmt(worst) + " >= 1e-12");
    return "max overlap mismatch " + fmt(worst);
}

// 10. Effective height model: vanishing for one chain; Hermitian PSD with an
//     annihilated interface vector for two chains; shrinking shift defect.
std::string criterion_qsos() {
    const SpinQuantum spin{1};
    const Anisotropy aniso = q_from_delta(2.0);

    const QsosSystem single = coupled_qsos(1, 8, spin, aniso, default_window(1, 8, 3));
    if (single.h_eff.cwiseAbs().maxCoeff() >= 1e-10)
        throw Failure("single-chain effective Hamiltonian is not identically zero");

    const QsosSystem pair = coupled_qsos(2, 4, spin, aniso, default_window(2, 4, 3));
    if ((pair.h_eff - pair.h_eff.adjoint()).cwiseAbs().maxCoeff() >= 1e-12)
        throw Failure("effective Hamiltonian is not Hermitian");
    if (pair.h_eff_min_eigenvalue < -1e-9)
        throw Failure("effective Hamiltonian has eigenvalue " + fmt(pair.h_eff_min_eigenvalue));
    if (h_eff_kernel_dim(pair) < 1) throw Failure("effective Hamiltonian kernel is empty");
    const int n0 = (pair.window.n_min + pair.window.n_max) / 2;
    const double residual = interface_residual(pair, aniso, n0);
    if (residual >= 1e-9) throw Failure("interface coordinate residual " + fmt(residual) + " >= 1e-9");

    const double defect_small =
        shift_commutator_defect(coupled_qsos(2, 6, spin, aniso, default_window(2, 6, 3)));
    const double defect_large =
        shift_commutator_defect(coupled_qsos(2, 8, spin, aniso, default_window(2, 8, 5)));
    if (defect_large >= defect_small)
        throw Failure("shift defect did not shrink (" + fmt(defect_large) + " >= " +
               fmt(defect_small) + ")");
    return "interface residual " + fmt(residual) + ", shift defect " + fmt(defect_large) +
           " < " + fmt(defect_small);
}

// 11. The iterative solver reproduces the dense spectra below the gap on
//     every sector block of the N=6 chain and the 2x3 lattice.
std::string criterion_solver_cross_validation() {
    const SpinQuantum spin{1};
    const Anisotropy aniso = q_from_delta(2.0);
    double worst = 0.0;

    const auto check_blocks = [&](auto make_block, int n_sites) {
        for (int twice_m = -n_sites; twice_m <= n_sites; twice_m += 2) {
            const SectorBasis basis = SectorBasis::build(n_sites, spin, twice_m);
            const SparseOperator block = make_block(basis);
            const std::vector<double> dense = dense_spectrum(block);
            LanczosOptions options;
            options.k = static_cast<int>(std::min<std::int64_t>(2, block.dim()));
            options.tol = 1e-10;
            options.seed = 5;
            const LanczosResult lr = extremal_eigs(block, options);
            if (!lr.converged) throw Failure("iterative solver failed to converge");
            for (int i = 0; i < options.k; ++i)
                worst = std::max(worst, std::abs(lr.values[static_cast<std::size_t>(i)] -
                                                 dense[static_cast<std::size_t>(i)]));
        }
    };

    const Chain chain = Chain::centered(6);
    check_blocks(
        [&](const SectorBasis& basis) {
            return xxz_chain_sector_block(chain, spin, aniso, BoundaryField::kink(spin, aniso),
                                          basis);
        },
        6);
    const Region region = make_rectangle(2, 3);
    check_blocks(
        [&](const SectorBasis& basis) { return oriented_sector_block(region, spin, aniso, basis); },
        6);
    if (worst >= 1e-8) throw Failure("max dense/iterative mismatch " + fmt(worst) + " >= 1e-8");
    return "max dense/iterative mismatch " + fmt(worst);
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
        {"zero-energy kink states in 1D", criterion_zero_energy_1d},
        {"zero-energy 111 interface in 2D", criterion_zero_energy_2d},
        {"one ground state per magnetization sector", criterion_sector_uniqueness},
        {"tanh magnetization profile", criterion_tanh_profile},
        {"rotation and translation covariance", criterion_symmetries},
        {"profile classification table", criterion_classification},
        {"isotropic multiplet vs anisotropic kinks", criterion_isotropic_contrast},
        {"gap floor in 1D and shrinking 2D strip gaps", criterion_gap_behavior},
        {"closed-form overlaps vs dense inner products", criterion_gram_dual_path},
        {"projected height-model Hamiltonian", criterion_qsos},
        {"dense vs iterative solver cross-validation", criterion_solver_cross_validation},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool passed = false;
        try {
            detail = criteria[i].second();
            passed = true;
        } catch (const Failure& f) {
            detail = f.what();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!passed) ++failures;
        std::printf("%s  criterion %2zu: %s  [%s]  (%.2f s)\n", passed ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), detail.c_str(), seconds);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
