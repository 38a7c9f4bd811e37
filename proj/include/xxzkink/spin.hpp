#ifndef XXZKINK_SPIN_HPP
#define XXZKINK_SPIN_HPP

#include <complex>

#include <Eigen/Dense>

namespace xxz {

// Spin quantum number S, stored doubled (2S) so that all sector arithmetic
// stays exact integer arithmetic.
struct SpinQuantum {
    int twice_s = 1;

    static SpinQuantum from_twice(int twice_s);

    int dimension() const { return twice_s + 1; }
    double value() const { return 0.5 * twice_s; }
    double casimir() const { return value() * (value() + 1.0); }
};

// Anisotropy Δ ≥ 1 with q ∈ [0,1] such that Δ = (q + 1/q)/2.
// Δ = 1 is the isotropic point (q = 1); Δ = +inf is the Ising limit (q = 0),
// in which case inv_delta = 0 keeps all operator formulas finite.
struct Anisotropy {
    double delta = 1.0;
    double q = 1.0;
    double inv_delta = 1.0;

    bool isotropic() const { return q == 1.0; }
    bool ising() const { return q == 0.0; }

    // sqrt(1 - 1/Δ²): scale of the boundary field under which kink states
    // become zero-energy ground states.
    double kink_beta() const;
};

// Solves Δ = (q + 1/q)/2 for the root q in (0, 1]. Rejects Δ < 1.
Anisotropy q_from_delta(double delta);

// The standard spin-S matrices in the S³ eigenbasis, ordered m = S, S-1, ..., -S.
struct SpinMatrices {
    Eigen::MatrixXcd s1, s2, s3;
};

SpinMatrices spin_matrices(SpinQuantum spin);

// m value (doubled) of local basis index k; k = 0 is m = S, descending.
inline int twice_m_of_index(SpinQuantum spin, int k) { return spin.twice_s - 2 * k; }

}  // namespace xxz

#endif
