#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "qrabi/errors.hpp"

namespace qrabi {

/// Physical constants of the two-level-plus-mode model. The coupling enters
/// the Hamiltonian as lambda*g throughout, so g can be held fixed while
/// lambda sweeps the interaction strength.
struct ModelParams {
    double omega = 1.0; // photon frequency, > 0
    double t = 1.0;     // kinetic hopping, > 0
    double g = 0.0;     // coupling
    double lambda = 1.0; // coupling scale

    double coupling() const { return lambda * g; }

    void validate() const {
        if (!(omega > 0.0) || !std::isfinite(omega))
            throw parameter_error("ModelParams: omega must be positive");
        if (!(t > 0.0) || !std::isfinite(t))
            throw parameter_error("ModelParams: t must be positive");
        if (!std::isfinite(g) || !std::isfinite(lambda))
            throw parameter_error("ModelParams: g and lambda must be finite");
    }

    ModelParams with_lambda(double lam) const {
        ModelParams q = *this;
        q.lambda = lam;
        return q;
    }
};

/// External pair (v, j): v tunes the two-level splitting, j drives the mode.
struct ExternalPair {
    double v = 0.0;
    double j = 0.0;

    void validate() const {
        if (!std::isfinite(v) || !std::isfinite(j))
            throw parameter_error("ExternalPair: v and j must be finite");
    }
};

/// Internal (density) pair: polarization sigma = <sigma_z>, displacement xi = <x>.
struct DensityPair {
    double sigma = 0.0;
    double xi = 0.0;

    void validate() const {
        if (!std::isfinite(sigma) || std::abs(sigma) > 1.0)
            throw parameter_error("DensityPair: |sigma| must be <= 1");
        if (!std::isfinite(xi))
            throw parameter_error("DensityPair: xi must be finite");
    }
};

/// N two-level systems sharing one mode, N <= 3.
struct DickeParams {
    int N = 1;
    std::vector<double> t_vec;
    std::vector<double> g_vec;
    double omega = 1.0;
    double lambda = 1.0;

    void validate() const {
        if (N < 1 || N > 3)
            throw unsupported_error("DickeParams: only N in {1,2,3} supported");
        if (static_cast<int>(t_vec.size()) != N || static_cast<int>(g_vec.size()) != N)
            throw parameter_error("DickeParams: t_vec and g_vec must have length N");
        for (double tk : t_vec)
            if (!(tk > 0.0) || !std::isfinite(tk))
                throw parameter_error("DickeParams: every t_k must be positive");
        for (double gk : g_vec)
            if (!std::isfinite(gk))
                throw parameter_error("DickeParams: every g_k must be finite");
        if (!(omega > 0.0) || !std::isfinite(omega) || !std::isfinite(lambda))
            throw parameter_error("DickeParams: omega must be positive, lambda finite");
    }
};

} // namespace qrabi
