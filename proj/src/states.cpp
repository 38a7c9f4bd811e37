#include "xxzkink/states.hpp"

#include <cmath>
#include <stdexcept>

namespace xxz {

namespace {

// Integer power with q^0 = 1 also at q = 0.
std::complex<double> cpowi(std::complex<double> base, int exp) {
    if (exp == 0) return 1.0;
    if (exp < 0) return 1.0 / cpowi(base, -exp);
    std::complex<double> r = 1.0;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

double real_powi(double base, int exp) {
    if (exp == 0) return 1.0;
    if (exp < 0) return 1.0 / real_powi(base, -exp);
    double r = 1.0;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

void require_kink_range(const Anisotropy& aniso) {
    if (!(aniso.q > 0.0 && aniso.q <= 1.0))
        throw std::invalid_argument("kink states need q in (0, 1]");
}

}  // namespace

SingleSiteVector chi(std::complex<double> z, SpinQuantum spin) {
    const int d = spin.dimension();
    Eigen::VectorXcd coeffs(d);
    double binom = 1.0;  // C(2S, k), updated incrementally
    for (int k = 0; k < d; ++k) {
        coeffs[k] = cpowi(z, k) * std::sqrt(binom);
        binom *= static_cast<double>(spin.twice_s - k) / static_cast<double>(k + 1);
    }
    return SingleSiteVector{spin, std::move(coeffs)};
}

ProductState kink_state(std::complex<double> z, const Chain& chain, SpinQuantum spin,
                        const Anisotropy& aniso) {
    require_kink_range(aniso);
    ProductState state;
    state.spin = spin;
    for (int i = 0; i < chain.length; ++i) {
        const int x = chain.coordinate(i);
        const std::complex<double> arg = z * real_powi(aniso.q, x);
        state.sites.push_back({x, 0});
        state.factors.push_back(chi(arg, spin).coeffs);
        state.chi_args.push_back(arg);
    }
    return state;
}

ProductState antikink_state(std::complex<double> z, const Chain& chain, SpinQuantum spin,
                            const Anisotropy& aniso) {
    return spin_flip(kink_state(z, chain, spin, aniso));
}

ProductState interface_state(std::complex<double> z, const Region& region, SpinQuantum spin,
                             const Anisotropy& aniso) {
    if (!(aniso.q > 0.0 && aniso.q < 1.0))
        throw std::invalid_argument("interface_state: needs Δ > 1 (q in (0,1))");
    ProductState state;
    state.spin = spin;
    for (const Site& u : region.sites()) {
        const std::complex<double> arg = z * real_powi(aniso.q, diagonal_height(u));
        state.sites.push_back(u);
        state.factors.push_back(chi(arg, spin).coeffs);
        state.chi_args.push_back(arg);
    }
    return state;
}

ProductState spin_flip(const ProductState& state) {
    ProductState out;
    out.spin = state.spin;
    out.sites = state.sites;
    for (const Eigen::VectorXcd& f : state.factors) out.factors.push_back(f.reverse());
    // Flipped χ factors are again χ factors only up to scale, so arguments
    // are dropped; overlaps fall back to the direct path.
    return out;
}

std::complex<double> overlap(const ProductState& a, const ProductState& b) {
    if (a.spin.twice_s != b.spin.twice_s || a.sites != b.sites)
        throw std::invalid_argument("overlap: states live on different site lists");
    std::complex<double> r = 1.0;
    for (std::size_t i = 0; i < a.factors.size(); ++i)
        r *= a.factors[i].dot(b.factors[i]);  // Eigen dot conjugates the left argument
    return r;
}

std::complex<double> chi_overlap(std::complex<double> a, std::complex<double> b,
                                 SpinQuantum spin) {
    return cpowi(1.0 + std::conj(a) * b, spin.twice_s);
}

std::complex<double> overlap_closed_form(const ProductState& a, const ProductState& b) {
    if (a.spin.twice_s != b.spin.twice_s || a.sites != b.sites)
        throw std::invalid_argument("overlap_closed_form: states live on different site lists");
    if (a.chi_args.size() != a.factors.size() || b.chi_args.size() != b.factors.size())
        throw std::invalid_argument("overlap_closed_form: states lack χ arguments");
    std::complex<double> r = 1.0;
    for (std::size_t i = 0; i < a.chi_args.size(); ++i)
        r *= chi_overlap(a.chi_args[i], b.chi_args[i], a.spin);
    return r;
}

double squared_norm(const ProductState& state) {
    double r = 1.0;
    for (const Eigen::VectorXcd& f : state.factors) r *= f.squaredNorm();
    return r;
}

Eigen::VectorXcd expand(const ProductState& state, std::int64_t cap) {
    const int n = state.n_sites();
    const std::int64_t dim = full_dimension(n, state.spin, cap);
    const int d = state.spin.dimension();
    Eigen::VectorXcd out = Eigen::VectorXcd::Constant(dim, 1.0);
    std::int64_t block = dim;
    for (int x = 0; x < n; ++x) {
        block /= d;
        for (std::int64_t i = 0; i < dim; ++i)
            out[i] *= state.factors[static_cast<std::size_t>(x)][(i / block) % d];
    }
    return out;
}

Eigen::VectorXcd sector_project(const ProductState& state, const SectorBasis& basis) {
    if (basis.n_sites() != state.n_sites() || basis.spin().twice_s != state.spin.twice_s)
        throw std::invalid_argument("sector_project: basis does not match the state");
    Eigen::VectorXcd out(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const std::vector<int>& config = basis.config(i);
        std::complex<double> c = 1.0;
        for (std::size_t x = 0; x < config.size(); ++x)
            c *= state.factors[x][config[x]];
        out[static_cast<Eigen::Index>(i)] = c;
    }
    return out;
}

std::vector<double> magnetization_profile(const ProductState& state) {
    const double s = state.spin.value();
    std::vector<double> profile;
    profile.reserve(state.factors.size());
    for (const Eigen::VectorXcd& f : state.factors) {
        double num = 0.0;
        double den = 0.0;
        for (int k = 0; k < f.size(); ++k) {
            const double w = std::norm(f[k]);
            num += (s - k) * w;
            den += w;
        }
        if (den == 0.0) throw std::invalid_argument("magnetization_profile: zero factor");
        profile.push_back(num / den);
    }
    return profile;
}

ProfileClass classify_profile(const std::vector<double>& profile, SpinQuantum spin,
                              double tol) {
    if (profile.empty()) return ProfileClass::Undetermined;
    const double s = spin.value();
    const auto end_sign = [&](double v) -> int {
        if (std::abs(v - s) <= tol) return +1;
        if (std::abs(v + s) <= tol) return -1;
        return 0;
    };
    const int alpha = end_sign(profile.front());
    const int beta = end_sign(profile.back());
    if (alpha == 0 || beta == 0) return ProfileClass::Undetermined;
    if (alpha > 0 && beta > 0) return ProfileClass::Up;
    if (alpha < 0 && beta < 0) return ProfileClass::Down;
    if (alpha < 0 && beta > 0) return ProfileClass::Kink;
    return ProfileClass::Antikink;
}

const char* to_string(ProfileClass c) {
    switch (c) {
        case ProfileClass::Up: return "up";
        case ProfileClass::Down: return "down";
        case ProfileClass::Kink: return "kink";
        case ProfileClass::Antikink: return "antikink";
        case ProfileClass::Undetermined: return "undetermined";
    }
    return "undetermined";
}

}  // namespace xxz
