#include "xxzkink/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace xxz {

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// S⁺|m⟩ = c_plus(m)|m+1⟩, S⁻|m⟩ = c_minus(m)|m-1⟩.
double c_plus(double s, double m) { return std::sqrt(s * (s + 1.0) - m * (m + 1.0)); }
double c_minus(double s, double m) { return std::sqrt(s * (s + 1.0) - m * (m - 1.0)); }

}  // namespace

BoundaryField BoundaryField::kink(SpinQuantum spin, const Anisotropy& aniso) {
    return BoundaryField{-spin.value() * aniso.kink_beta(), +1};
}

BoundaryField BoundaryField::antikink(SpinQuantum spin, const Anisotropy& aniso) {
    return BoundaryField{spin.value() * aniso.kink_beta(), -1};
}

BoundaryField BoundaryField::raw(double strength) { return BoundaryField{strength, 0}; }

Eigen::MatrixXcd kink_interaction(SpinQuantum spin, const Anisotropy& aniso, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("kink_interaction: sign must be +1 or -1");
    const SpinMatrices s = spin_matrices(spin);
    const int d = spin.dimension();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    const double sval = spin.value();

    Eigen::MatrixXcd h = sval * sval * Eigen::MatrixXcd::Identity(d * d, d * d);
    h -= kron(s.s3, s.s3);
    h -= aniso.inv_delta * (kron(s.s1, s.s1) + kron(s.s2, s.s2));
    h += static_cast<double>(sign) * sval * aniso.kink_beta() * (kron(s.s3, id) - kron(id, s.s3));
    return h;
}

namespace {

void append_one_site(std::vector<SparseEntry>& out, const Eigen::MatrixXcd& a, int slot,
                     int n_sites, int site_dim) {
    const std::int64_t right = ipow(site_dim, n_sites - 1 - slot);
    const std::int64_t rest = ipow(site_dim, n_sites - 1);
    for (std::int64_t r = 0; r < rest; ++r) {
        const std::int64_t left = r / right;
        const std::int64_t tail = r % right;
        const std::int64_t base = left * right * site_dim + tail;
        for (int ka = 0; ka < site_dim; ++ka)
            for (int kb = 0; kb < site_dim; ++kb) {
                const std::complex<double> v = a(ka, kb);
                if (v == 0.0) continue;
                out.push_back({base + ka * right, base + kb * right, v});
            }
    }
}

void append_two_site(std::vector<SparseEntry>& out, const Eigen::MatrixXcd& h2, int slot_a,
                     int slot_b, int n_sites, int site_dim) {
    if (slot_a == slot_b) throw std::invalid_argument("embed_two_site: slots must differ");
    const int lo = std::min(slot_a, slot_b);
    const int hi = std::max(slot_a, slot_b);
    const std::int64_t p_right = ipow(site_dim, n_sites - 1 - hi);
    const std::int64_t p_mid = ipow(site_dim, hi - lo - 1);
    const std::int64_t rest = ipow(site_dim, n_sites - 2);

    // Nonzero pattern of h2 once; indices are (first factor)*d + (second factor).
    struct Term {
        int a, b, ap, bp;
        std::complex<double> v;
    };
    std::vector<Term> terms;
    for (int r = 0; r < site_dim * site_dim; ++r)
        for (int c = 0; c < site_dim * site_dim; ++c) {
            const std::complex<double> v = h2(r, c);
            if (v == 0.0) continue;
            terms.push_back({r / site_dim, r % site_dim, c / site_dim, c % site_dim, v});
        }

    for (std::int64_t r = 0; r < rest; ++r) {
        const std::int64_t tail = r % p_right;
        const std::int64_t mid = (r / p_right) % p_mid;
        const std::int64_t head = r / (p_right * p_mid);
        const std::int64_t base =
            ((head * site_dim) * p_mid + mid) * site_dim * p_right + tail;
        const std::int64_t stride_lo = p_mid * site_dim * p_right;
        for (const Term& t : terms) {
            const int d_lo = slot_a < slot_b ? t.a : t.b;
            const int d_hi = slot_a < slot_b ? t.b : t.a;
            const int d_lo_p = slot_a < slot_b ? t.ap : t.bp;
            const int d_hi_p = slot_a < slot_b ? t.bp : t.ap;
            out.push_back({base + d_lo * stride_lo + d_hi * p_right,
                           base + d_lo_p * stride_lo + d_hi_p * p_right, t.v});
        }
    }
}

}  // namespace

SparseOperator embed_one_site(const Eigen::MatrixXcd& a, int slot, int n_sites, int site_dim,
                              std::int64_t cap) {
    if (slot < 0 || slot >= n_sites) throw std::invalid_argument("embed_one_site: bad slot");
    const std::int64_t dim = full_dimension(n_sites, SpinQuantum{site_dim - 1}, cap);
    std::vector<SparseEntry> entries;
    append_one_site(entries, a, slot, n_sites, site_dim);
    return SparseOperator::from_entries(dim, std::move(entries));
}

SparseOperator embed_two_site(const Eigen::MatrixXcd& h2, int slot_a, int slot_b, int n_sites,
                              int site_dim, std::int64_t cap) {
    if (slot_a < 0 || slot_a >= n_sites || slot_b < 0 || slot_b >= n_sites)
        throw std::invalid_argument("embed_two_site: bad slot");
    const std::int64_t dim = full_dimension(n_sites, SpinQuantum{site_dim - 1}, cap);
    std::vector<SparseEntry> entries;
    append_two_site(entries, h2, slot_a, slot_b, n_sites, site_dim);
    return SparseOperator::from_entries(dim, std::move(entries));
}

SparseOperator assemble_kink_hamiltonian(int n_sites,
                                         const std::vector<std::pair<int, int>>& bonds,
                                         const std::vector<double>& s3_field, SpinQuantum spin,
                                         const Anisotropy& aniso, std::int64_t cap) {
    if (s3_field.size() != static_cast<std::size_t>(n_sites))
        throw std::invalid_argument("assemble_kink_hamiltonian: field size mismatch");
    const std::int64_t dim = full_dimension(n_sites, spin, cap);
    const int d = spin.dimension();
    const SpinMatrices s = spin_matrices(spin);
    const double sval = spin.value();

    Eigen::MatrixXcd bulk = sval * sval * Eigen::MatrixXcd::Identity(d * d, d * d);
    bulk -= kron(s.s3, s.s3);
    bulk -= aniso.inv_delta * (kron(s.s1, s.s1) + kron(s.s2, s.s2));

    std::vector<SparseEntry> entries;
    for (const auto& [a, b] : bonds) append_two_site(entries, bulk, a, b, n_sites, d);
    for (int x = 0; x < n_sites; ++x) {
        if (s3_field[static_cast<std::size_t>(x)] == 0.0) continue;
        append_one_site(entries, s3_field[static_cast<std::size_t>(x)] * s.s3, x, n_sites, d);
    }
    return SparseOperator::from_entries(dim, std::move(entries));
}

SparseOperator assemble_kink_sector_block(const std::vector<std::pair<int, int>>& bonds,
                                          const std::vector<double>& s3_field,
                                          const Anisotropy& aniso, const SectorBasis& basis) {
    const SpinQuantum spin = basis.spin();
    const double sval = spin.value();
    const double hop = -0.5 * aniso.inv_delta;  // -(1/2Δ) on S⁺S⁻ + S⁻S⁺
    if (s3_field.size() != static_cast<std::size_t>(basis.n_sites()))
        throw std::invalid_argument("assemble_kink_sector_block: field size mismatch");

    std::vector<SparseEntry> entries;
    std::vector<int> target;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const std::vector<int>& config = basis.config(j);

        double diag = 0.0;
        for (const auto& [a, b] : bonds) {
            const double ma = sval - config[static_cast<std::size_t>(a)];
            const double mb = sval - config[static_cast<std::size_t>(b)];
            diag += sval * sval - ma * mb;
        }
        for (std::size_t x = 0; x < s3_field.size(); ++x)
            diag += s3_field[x] * (sval - config[x]);
        entries.push_back({static_cast<std::int64_t>(j), static_cast<std::int64_t>(j), diag});

        for (const auto& [a, b] : bonds) {
            const int ka = config[static_cast<std::size_t>(a)];
            const int kb = config[static_cast<std::size_t>(b)];
            const double ma = sval - ka;
            const double mb = sval - kb;
            // S⁺_a S⁻_b
            if (ka > 0 && kb < spin.twice_s) {
                target = config;
                target[static_cast<std::size_t>(a)] = ka - 1;
                target[static_cast<std::size_t>(b)] = kb + 1;
                const std::size_t i = basis.index_of(target);
                entries.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j),
                                   hop * c_plus(sval, ma) * c_minus(sval, mb)});
            }
            // S⁻_a S⁺_b
            if (ka < spin.twice_s && kb > 0) {
                target = config;
                target[static_cast<std::size_t>(a)] = ka + 1;
                target[static_cast<std::size_t>(b)] = kb - 1;
                const std::size_t i = basis.index_of(target);
                entries.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j),
                                   hop * c_minus(sval, ma) * c_plus(sval, mb)});
            }
        }
    }
    return SparseOperator::from_entries(static_cast<std::int64_t>(basis.size()),
                                        std::move(entries));
}

namespace {

std::vector<double> chain_field(const Chain& chain, const BoundaryField& field) {
    std::vector<double> f(static_cast<std::size_t>(chain.length), 0.0);
    f.front() = -field.strength;
    f.back() = field.strength;
    return f;
}

std::vector<std::pair<int, int>> chain_bonds(const Chain& chain) {
    std::vector<std::pair<int, int>> bonds;
    for (int i = 0; i + 1 < chain.length; ++i) bonds.push_back({i, i + 1});
    return bonds;
}

std::vector<std::pair<int, int>> region_bond_ordinals(const Region& region) {
    std::vector<std::pair<int, int>> bonds;
    for (const OrientedBond& b : region.bonds())
        bonds.push_back({region.ordinal(b.from), region.ordinal(b.to)});
    return bonds;
}

}  // namespace

SparseOperator xxz_chain_hamiltonian(const Chain& chain, SpinQuantum spin,
                                     const Anisotropy& aniso, const BoundaryField& field,
                                     std::int64_t cap) {
    if (chain.length < 2)
        throw std::invalid_argument("xxz_chain_hamiltonian: chain length must be >= 2");
    return assemble_kink_hamiltonian(chain.length, chain_bonds(chain), chain_field(chain, field),
                                     spin, aniso, cap);
}

SparseOperator xxz_chain_sector_block(const Chain& chain, SpinQuantum spin,
                                      const Anisotropy& aniso, const BoundaryField& field,
                                      const SectorBasis& basis) {
    if (chain.length < 2)
        throw std::invalid_argument("xxz_chain_sector_block: chain length must be >= 2");
    if (basis.n_sites() != chain.length || basis.spin().twice_s != spin.twice_s)
        throw std::invalid_argument("xxz_chain_sector_block: basis does not match the chain");
    return assemble_kink_sector_block(chain_bonds(chain), chain_field(chain, field), aniso,
                                      basis);
}

std::vector<double> oriented_field_coefficients(const Region& region, SpinQuantum spin,
                                                const Anisotropy& aniso) {
    std::vector<double> field(static_cast<std::size_t>(region.n_sites()), 0.0);
    const double scale = spin.value() * aniso.kink_beta();
    for (const OrientedBond& b : region.bonds()) {
        field[static_cast<std::size_t>(region.ordinal(b.from))] += scale;
        field[static_cast<std::size_t>(region.ordinal(b.to))] -= scale;
    }
    return field;
}

SparseOperator oriented_hamiltonian(const Region& region, SpinQuantum spin,
                                    const Anisotropy& aniso, std::int64_t cap) {
    return assemble_kink_hamiltonian(region.n_sites(), region_bond_ordinals(region),
                                     oriented_field_coefficients(region, spin, aniso), spin,
                                     aniso, cap);
}

SparseOperator oriented_sector_block(const Region& region, SpinQuantum spin,
                                     const Anisotropy& aniso, const SectorBasis& basis) {
    if (basis.n_sites() != region.n_sites() || basis.spin().twice_s != spin.twice_s)
        throw std::invalid_argument("oriented_sector_block: basis does not match the region");
    return assemble_kink_sector_block(region_bond_ordinals(region),
                                      oriented_field_coefficients(region, spin, aniso), aniso,
                                      basis);
}

SparseOperator s3_total(int n_sites, SpinQuantum spin, std::int64_t cap) {
    const std::int64_t dim = full_dimension(n_sites, spin, cap);
    const int d = spin.dimension();
    std::vector<SparseEntry> entries;
    entries.reserve(static_cast<std::size_t>(dim));
    for (std::int64_t i = 0; i < dim; ++i) {
        const int twice_m = twice_m_of_config(config_of_full_index(i, n_sites, d), spin);
        entries.push_back({i, i, 0.5 * twice_m});
    }
    return SparseOperator::from_entries(dim, std::move(entries));
}

SparseOperator rotation_unitary(double theta, int n_sites, SpinQuantum spin, std::int64_t cap) {
    const std::int64_t dim = full_dimension(n_sites, spin, cap);
    const int d = spin.dimension();
    std::vector<SparseEntry> entries;
    entries.reserve(static_cast<std::size_t>(dim));
    for (std::int64_t i = 0; i < dim; ++i) {
        const int twice_m = twice_m_of_config(config_of_full_index(i, n_sites, d), spin);
        entries.push_back({i, i, std::polar(1.0, 0.5 * theta * twice_m)});
    }
    return SparseOperator::from_entries(dim, std::move(entries));
}

double magnetization_defect(const SparseOperator& op, int n_sites, SpinQuantum spin) {
    const int d = spin.dimension();
    double defect = 0.0;
    for (const SparseEntry& e : op.entries()) {
        if (e.row == e.col) continue;
        const int mr = twice_m_of_config(config_of_full_index(e.row, n_sites, d), spin);
        const int mc = twice_m_of_config(config_of_full_index(e.col, n_sites, d), spin);
        if (mr != mc) defect = std::max(defect, std::abs(e.value) * 0.5 * std::abs(mr - mc));
    }
    return defect;
}

SparseOperator sector_restrict(const SparseOperator& op, const SectorBasis& basis) {
    const int n = basis.n_sites();
    const int d = basis.spin().dimension();
    const double tol = 1e-12 * std::max(1.0, op.max_abs());

    std::vector<SparseEntry> entries;
    for (const SparseEntry& e : op.entries()) {
        const std::vector<int> row_config = config_of_full_index(e.row, n, d);
        const std::vector<int> col_config = config_of_full_index(e.col, n, d);
        const int mr = twice_m_of_config(row_config, basis.spin());
        const int mc = twice_m_of_config(col_config, basis.spin());
        if (mr != mc) {
            if (std::abs(e.value) > tol)
                throw std::invalid_argument(
                    "sector_restrict: operator couples different magnetization sectors");
            continue;
        }
        if (mr != basis.twice_m()) continue;
        entries.push_back({static_cast<std::int64_t>(basis.index_of(row_config)),
                           static_cast<std::int64_t>(basis.index_of(col_config)), e.value});
    }
    return SparseOperator::from_entries(static_cast<std::int64_t>(basis.size()),
                                        std::move(entries));
}

}  // namespace xxz
