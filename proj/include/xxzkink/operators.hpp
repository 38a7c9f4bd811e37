#ifndef XXZKINK_OPERATORS_HPP
#define XXZKINK_OPERATORS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "xxzkink/lattice.hpp"
#include "xxzkink/sector.hpp"
#include "xxzkink/sparse.hpp"
#include "xxzkink/spin.hpp"

namespace xxz {

inline constexpr std::int64_t kDefaultDimensionCap = std::int64_t(1) << 22;

// Boundary field B in the chain term B(S³_last - S³_first). Constructed from
// (S, Δ) it satisfies |B| = S sqrt(1 - 1/Δ²); sign = +1 selects the kink
// family (up spins on the right), sign = -1 the antikink family.
struct BoundaryField {
    double strength = 0.0;
    int sign = +1;

    static BoundaryField kink(SpinQuantum spin, const Anisotropy& aniso);
    static BoundaryField antikink(SpinQuantum spin, const Anisotropy& aniso);
    static BoundaryField raw(double strength);
};

// Two-site interaction
//   h = S² I - S³⊗S³ - (1/Δ)(S¹⊗S¹ + S²⊗S²) + sign·S·sqrt(1-1/Δ²)(S³⊗I - I⊗S³),
// acting on an oriented pair (from, to). It is Hermitian, positive
// semidefinite, and for sign = +1 annihilates χ(z)⊗χ(zq) for every z, which
// makes the kink product states zero-energy ground states of its bond sums.
Eigen::MatrixXcd kink_interaction(SpinQuantum spin, const Anisotropy& aniso, int sign);

// Lift a one-site (two-site) matrix to the n-site product space.
SparseOperator embed_one_site(const Eigen::MatrixXcd& a, int slot, int n_sites, int site_dim,
                              std::int64_t cap = kDefaultDimensionCap);
SparseOperator embed_two_site(const Eigen::MatrixXcd& h2, int slot_a, int slot_b, int n_sites,
                              int site_dim, std::int64_t cap = kDefaultDimensionCap);

// Σ_bonds [S² - S³S³ - (1/Δ)(S¹S¹ + S²S²)] + Σ_sites field_x S³_x over an
// arbitrary oriented bond list (slot ordinals). The shared kernel of all
// Hamiltonians in this module.
SparseOperator assemble_kink_hamiltonian(int n_sites,
                                         const std::vector<std::pair<int, int>>& bonds,
                                         const std::vector<double>& s3_field, SpinQuantum spin,
                                         const Anisotropy& aniso,
                                         std::int64_t cap = kDefaultDimensionCap);

// Same operator restricted to a fixed-M sector, assembled without touching
// the full product space.
SparseOperator assemble_kink_sector_block(const std::vector<std::pair<int, int>>& bonds,
                                          const std::vector<double>& s3_field,
                                          const Anisotropy& aniso, const SectorBasis& basis);

// Open chain with boundary field: Σ_x h_{x,x+1} when the field matches the
// kink/antikink value, PSD in that case.
SparseOperator xxz_chain_hamiltonian(const Chain& chain, SpinQuantum spin,
                                     const Anisotropy& aniso, const BoundaryField& field,
                                     std::int64_t cap = kDefaultDimensionCap);
SparseOperator xxz_chain_sector_block(const Chain& chain, SpinQuantum spin,
                                      const Anisotropy& aniso, const BoundaryField& field,
                                      const SectorBasis& basis);

// H = Σ_{oriented bonds} h_{from→to} with sign = +1 on a 2D region; equals
// the XXZ Hamiltonian plus boundary fields on sites of unequal in/out degree.
SparseOperator oriented_hamiltonian(const Region& region, SpinQuantum spin,
                                    const Anisotropy& aniso,
                                    std::int64_t cap = kDefaultDimensionCap);
SparseOperator oriented_sector_block(const Region& region, SpinQuantum spin,
                                     const Anisotropy& aniso, const SectorBasis& basis);

// Per-site S³ coefficients implied by the oriented bond sum: Sβ(out - in).
std::vector<double> oriented_field_coefficients(const Region& region, SpinQuantum spin,
                                                const Anisotropy& aniso);

SparseOperator s3_total(int n_sites, SpinQuantum spin, std::int64_t cap = kDefaultDimensionCap);

// Diagonal unitary exp(iθ Σ_x S³_x).
SparseOperator rotation_unitary(double theta, int n_sites, SpinQuantum spin,
                                std::int64_t cap = kDefaultDimensionCap);

// Largest |entry| · |M(row) - M(col)| over all entries: zero iff the operator
// is block diagonal over magnetization sectors.
double magnetization_defect(const SparseOperator& op, int n_sites, SpinQuantum spin);

// Block of a sector-preserving operator on the given sector, in SectorBasis
// order. Throws if the operator couples different sectors.
SparseOperator sector_restrict(const SparseOperator& op, const SectorBasis& basis);

}  // namespace xxz

#endif
