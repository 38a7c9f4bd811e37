#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "xxzkink/operators.hpp"
#include "xxzkink/spectral.hpp"
#include "xxzkink/states.hpp"

using namespace xxz;

namespace {

SparseOperator diag_op(std::initializer_list<double> values) {
    std::vector<SparseEntry> entries;
    std::int64_t i = 0;
    for (double v : values) {
        entries.push_back({i, i, v});
        ++i;
    }
    return SparseOperator::from_entries(i, std::move(entries));
}

SparseOperator chain_block(int n, int twice_m, double delta, int twice_s = 1) {
    const SpinQuantum spin{twice_s};
    const Anisotropy aniso = q_from_delta(delta);
    return xxz_chain_sector_block(Chain::centered(n), spin, aniso,
                                  BoundaryField::kink(spin, aniso),
                                  SectorBasis::build(n, spin, twice_m));
}

}  // namespace

TEST_CASE("dense spectrum: diagonal case and error paths") {
    const std::vector<double> s = dense_spectrum(diag_op({2.0, 0.0, 1.0}));
    REQUIRE(s.size() == 3);
    CHECK(s[0] == 0.0);
    CHECK(s[1] == 1.0);
    CHECK(s[2] == 2.0);

    // Non-Hermitian input is rejected.
    SparseOperator bad = SparseOperator::from_entries(2, {{0, 1, 1.0}});
    CHECK_THROWS_AS(dense_spectrum(bad), std::invalid_argument);
    // Dense cap.
    CHECK_THROWS_AS(dense_spectrum(SparseOperator::identity(8), 4), std::length_error);
}

TEST_CASE("dense spectrum: two-site kink interaction is {0,0,0,1} for S=1/2") {
    const SpinQuantum spin{1};
    const Anisotropy aniso = q_from_delta(2.0);
    const SparseOperator h =
        xxz_chain_hamiltonian(Chain::centered(2), spin, aniso, BoundaryField::kink(spin, aniso));
    const std::vector<double> s = dense_spectrum(h);
    REQUIRE(s.size() == 4);
    CHECK(std::abs(s[0]) < 1e-14);
    CHECK(std::abs(s[1]) < 1e-14);
    CHECK(std::abs(s[2]) < 1e-14);
    CHECK(std::abs(s[3] - 1.0) < 1e-14);
}

TEST_CASE("dense eigensystem: residuals below 1e-9") {
    const SparseOperator h = chain_block(6, 0, 2.0);
    const EigenSystem es = dense_eigensystem(h);
    for (Eigen::Index i = 0; i < es.values.size(); ++i) {
        const Eigen::VectorXcd v = es.vectors.col(i);
        CHECK((h.apply(v) - es.values[i] * v).norm() < 1e-9);
    }
}

TEST_CASE("dense spectrum is invariant under rotation conjugation") {
    const SpinQuantum spin{1};
    const Anisotropy aniso = q_from_delta(2.0);
    const SparseOperator h = xxz_chain_hamiltonian(Chain::centered(4), spin, aniso,
                                                   BoundaryField::kink(spin, aniso));
    const Eigen::MatrixXcd u = rotation_unitary(1.1, 4, spin).to_dense();
    const Eigen::MatrixXcd conj = u.adjoint() * h.to_dense() * u;
    std::vector<SparseEntry> entries;
    for (Eigen::Index i = 0; i < conj.rows(); ++i)
        for (Eigen::Index j = 0; j < conj.cols(); ++j)
            if (std::abs(conj(i, j)) > 1e-14) entries.push_back({i, j, conj(i, j)});
    const std::vector<double> a = dense_spectrum(h);
    const std::vector<double> b =
        dense_spectrum(SparseOperator::from_entries(conj.rows(), std::move(entries)));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-11);
}

TEST_CASE("lanczos agrees with the dense solver on all N=6 sector blocks") {
    for (int twice_m = -6; twice_m <= 6; twice_m += 2) {
        const SparseOperator block = chain_block(6, twice_m, 2.0);
        const std::vector<double> dense = dense_spectrum(block);
        LanczosOptions options;
        options.k = static_cast<int>(std::min<std::int64_t>(2, block.dim()));
        options.tol = 1e-11;
        options.seed = 7;
        const LanczosResult lr = extremal_eigs(block, options);
        CHECK(lr.converged);
        for (int i = 0; i < options.k; ++i)
            CHECK(std::abs(lr.values[static_cast<std::size_t>(i)] -
                           dense[static_cast<std::size_t>(i)]) < 1e-8);
        CHECK(lr.values.front() > -1e-9);  // PSD input
    }
}

TEST_CASE("lanczos is deterministic for a fixed seed") {
    const SparseOperator block = chain_block(8, 0, 2.0);
    LanczosOptions options;
    options.k = 2;
    options.tol = 1e-10;
    options.seed = 12345;
    const LanczosResult a = extremal_eigs(block, options);
    const LanczosResult b = extremal_eigs(block, options);
    REQUIRE(a.values.size() == b.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i] == b.values[i]);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("lanczos ground vector matches the projected kink state") {
    const SpinQuantum spin{1};
    const Anisotropy aniso = q_from_delta(2.0);
    const Chain chain = Chain::centered(8);
    const SectorBasis basis = SectorBasis::build(8, spin, 0);
    const SparseOperator block = xxz_chain_sector_block(chain, spin, aniso,
                                                        BoundaryField::kink(spin, aniso), basis);
    LanczosOptions options;
    options.k = 1;
    options.tol = 1e-11;
    const LanczosResult lr = extremal_eigs(block, options);
    CHECK(std::abs(lr.values[0]) < 1e-9);

    Eigen::VectorXcd psi = sector_project(kink_state(1.0, chain, spin, aniso), basis);
    psi.normalize();
    CHECK(std::abs(lr.vectors.col(0).dot(psi)) > 1.0 - 1e-8);
}

TEST_CASE("lanczos collects degenerate kernels through restarts") {
    // diag(0, 0, 0, 1): three exact kernel vectors; one start vector alone
    // cannot see the multiplicity.
    const SparseOperator op = diag_op({0.0, 0.0, 0.0, 1.0});
    LanczosOptions options;
    options.k = 3;
    options.tol = 1e-12;
    const LanczosResult lr = extremal_eigs(op, options);
    CHECK(lr.converged);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(lr.values[static_cast<std::size_t>(i)]) < 1e-12);
}

TEST_CASE("kernel dimension: chain, isotropic multiplet and 2x2 interface") {
    const SpinQuantum spin{1};
    const Anisotropy aniso = q_from_delta(2.0);

    const SparseOperator h4 = xxz_chain_hamiltonian(Chain::centered(4), spin, aniso,
                                                    BoundaryField::kink(spin, aniso));
    const KernelCount k4 = kernel_dimension(h4);
    CHECK(k4.dim == 5);
    CHECK_FALSE(k4.ambiguous);
    CHECK(k4.margin > 1e-4);

    const Anisotropy iso = q_from_delta(1.0);
    const SparseOperator hiso =
        xxz_chain_hamiltonian(Chain::centered(4), spin, iso, BoundaryField::raw(0.0));
    CHECK(kernel_dimension(hiso).dim == 5);

    const SparseOperator h22 = oriented_hamiltonian(make_rectangle(2, 2), spin, aniso);
    CHECK(kernel_dimension(h22).dim == 5);
}

TEST_CASE("kernel dimension equals the sum of sector kernel dimensions") {
    const SpinQuantum spin{1};
    const Anisotropy aniso = q_from_delta(2.0);
    const Chain chain = Chain::centered(5);
    const SparseOperator h =
        xxz_chain_hamiltonian(chain, spin, aniso, BoundaryField::kink(spin, aniso));
    int sector_total = 0;
    for (int twice_m = -5; twice_m <= 5; twice_m += 2)
        sector_total +=
            kernel_dimension(sector_restrict(h, SectorBasis::build(5, spin, twice_m))).dim;
    CHECK(kernel_dimension(h).dim == sector_total);
    CHECK(sector_total == 6);  // 2SN + 1
}

TEST_CASE("lanczos flags non-convergence instead of hiding it") {
    const SparseOperator block = chain_block(8, 0, 2.0);
    LanczosOptions options;
    options.k = 2;
    options.tol = 1e-300;  // unreachable on purpose
    options.max_iterations = 5;
    const LanczosResult lr = extremal_eigs(block, options);
    CHECK_FALSE(lr.converged);
    CHECK(lr.values.size() == 2);  // partial results are still returned
}

TEST_CASE("kernel dimension reports ambiguity instead of resolving it") {
    const SparseOperator tight = diag_op({0.0, 5e-8, 1.0});
    const KernelCount count = kernel_dimension(tight, 1e-8);
    CHECK(count.dim == 1);
    CHECK(count.ambiguous);  // margin 5e-8 < 10x threshold
    CHECK(count.margin == 5e-8);

    const SparseOperator clear = diag_op({0.0, 1e-6, 1.0});
    CHECK_FALSE(kernel_dimension(clear, 1e-8).ambiguous);
}

TEST_CASE("gap scan: anisotropic chains keep a positive gap, isotropic gap closes") {
    std::vector<GapScanEntry> aniso_family;
    std::vector<GapScanEntry> iso_family;
    const SpinQuantum spin{1};
    const Anisotropy iso = q_from_delta(1.0);
    for (int n : {4, 6, 8}) {
        aniso_family.push_back({n, 0, chain_block(n, 0, 2.0)});
        iso_family.push_back(
            {n, 0,
             xxz_chain_sector_block(Chain::centered(n), spin, iso, BoundaryField::raw(0.0),
                                    SectorBasis::build(n, spin, 0))});
    }
    LanczosOptions options;
    options.k = 3;
    options.tol = 1e-10;

    const std::vector<SectorReport> aniso_reports = gap_scan(aniso_family, options);
    for (const SectorReport& r : aniso_reports) {
        CHECK(r.converged);
        CHECK(r.kernel_dim == 1);
        CHECK(std::abs(r.ground_energy) < 1e-9);
        CHECK(r.gap > 0.4);  // stays well above zero as N grows
    }

    const std::vector<SectorReport> iso_reports = gap_scan(iso_family, options);
    for (std::size_t i = 1; i < iso_reports.size(); ++i)
        CHECK(iso_reports[i].gap < iso_reports[i - 1].gap);  // magnon gap closes
}
