#include "xxzkink/spin.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace xxz {

SpinQuantum SpinQuantum::from_twice(int twice_s) {
    if (twice_s < 1)
        throw std::invalid_argument("SpinQuantum: 2S must be a positive integer");
    return SpinQuantum{twice_s};
}

double Anisotropy::kink_beta() const {
    return std::sqrt(1.0 - inv_delta * inv_delta);
}

Anisotropy q_from_delta(double delta) {
    if (std::isnan(delta) || delta < 1.0)
        throw std::invalid_argument("Anisotropy: Δ must satisfy Δ >= 1");
    Anisotropy a;
    a.delta = delta;
    if (std::isinf(delta)) {
        a.q = 0.0;
        a.inv_delta = 0.0;
        return a;
    }
    // Root of q² - 2Δq + 1 = 0 lying in (0, 1].
    a.q = delta - std::sqrt(delta * delta - 1.0);
    a.inv_delta = 1.0 / delta;
    return a;
}

SpinMatrices spin_matrices(SpinQuantum spin) {
    if (spin.twice_s < 1)
        throw std::invalid_argument("spin_matrices: 2S must be a positive integer");
    const int d = spin.dimension();
    const double s = spin.value();

    Eigen::MatrixXcd sp = Eigen::MatrixXcd::Zero(d, d);  // S⁺
    Eigen::MatrixXcd sz = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        const double m = s - k;
        sz(k, k) = m;
        if (k > 0) {
            // S⁺|m⟩ = sqrt(S(S+1) - m(m+1)) |m+1⟩, with |m+1⟩ at index k-1.
            sp(k - 1, k) = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
        }
    }
    const Eigen::MatrixXcd sm = sp.adjoint();

    SpinMatrices out;
    out.s1 = 0.5 * (sp + sm);
    out.s2 = std::complex<double>(0.0, -0.5) * (sp - sm);
    out.s3 = sz;
    return out;
}

}  // namespace xxz
