#ifndef XXZKINK_STATES_HPP
#define XXZKINK_STATES_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "xxzkink/lattice.hpp"
#include "xxzkink/operators.hpp"
#include "xxzkink/sector.hpp"
#include "xxzkink/spin.hpp"

namespace xxz {

// One-site vector with coefficients indexed by k = S - m (k = 0 is m = S).
struct SingleSiteVector {
    SpinQuantum spin;
    Eigen::VectorXcd coeffs;
};

// χ(z): coefficient of |m⟩ is z^{S-m} sqrt((2S)! / ((S-m)!(S+m)!)). χ(0) = |S⟩,
// and for S = 1/2 this is |↑⟩ + z|↓⟩. Nearest-neighbor pairs χ(c)⊗χ(cq) span
// the kernel of kink_interaction(+1).
SingleSiteVector chi(std::complex<double> z, SpinQuantum spin);

// Product state over an ordered site list. chi_args holds the χ argument per
// site when the state is built from χ factors (empty otherwise); it enables
// the closed-form overlap path.
struct ProductState {
    SpinQuantum spin;
    std::vector<Site> sites;
    std::vector<Eigen::VectorXcd> factors;
    std::vector<std::complex<double>> chi_args;

    int n_sites() const { return static_cast<int>(sites.size()); }
};

// Kink state φ(z): factor χ(z q^x) at chain coordinate x. Its magnetization
// profile rises from -S to +S with center a = ln|z| / ln(1/q) and width
// ξ = 1 / ln(1/q). Requires 0 < q ≤ 1.
ProductState kink_state(std::complex<double> z, const Chain& chain, SpinQuantum spin,
                        const Anisotropy& aniso);

// Global spin flip of the kink state; profile is the negated kink profile
// with the same center.
ProductState antikink_state(std::complex<double> z, const Chain& chain, SpinQuantum spin,
                            const Anisotropy& aniso);

// 111 interface state Ω(z): factor χ(z q^{height(u)}) at site u. Zero-energy
// state of oriented_hamiltonian. Requires Δ > 1.
ProductState interface_state(std::complex<double> z, const Region& region, SpinQuantum spin,
                             const Anisotropy& aniso);

ProductState spin_flip(const ProductState& state);

// Product over sites of single-site inner products (conjugate-linear in a).
std::complex<double> overlap(const ProductState& a, const ProductState& b);

// ⟨χ(a), χ(b)⟩ = (1 + conj(a) b)^{2S}.
std::complex<double> chi_overlap(std::complex<double> a, std::complex<double> b,
                                 SpinQuantum spin);

// Closed-form overlap through the stored χ arguments; throws when either
// state lacks them.
std::complex<double> overlap_closed_form(const ProductState& a, const ProductState& b);

double squared_norm(const ProductState& state);

// Full coefficient vector in the product basis (site 0 most significant).
Eigen::VectorXcd expand(const ProductState& state, std::int64_t cap = kDefaultDimensionCap);

// Fixed-M component, in SectorBasis order, computed without full expansion.
Eigen::VectorXcd sector_project(const ProductState& state, const SectorBasis& basis);

// Per-site ⟨S³⟩ from the single-site factors.
std::vector<double> magnetization_profile(const ProductState& state);

enum class ProfileClass { Up, Down, Kink, Antikink, Undetermined };

// Classify by the chain-end values (α, β); Undetermined when either end is
// not within tol of ±S.
ProfileClass classify_profile(const std::vector<double>& profile, SpinQuantum spin,
                              double tol = 1e-3);

const char* to_string(ProfileClass c);

}  // namespace xxz

#endif
