#pragma once

#include <cmath>
#include <vector>

#include "qrabi/ground_state.hpp"
#include "qrabi/operators.hpp"
#include "qrabi/params.hpp"

namespace qrabi {

/// Ground-state (or any eigenstate) expectation values. p2 is evaluated via
/// p^2 = 2 omega (N + 1/2) - omega^2 x^2, which is exact on the truncation.
struct ExpectationSet {
    double sigma = 0.0; // <sigma_z>
    double xi = 0.0;    // <x>
    double sx = 0.0;    // <sigma_x>
    double szx = 0.0;   // <sigma_z x>
    double x2 = 0.0;    // <x^2>
    double p2 = 0.0;    // <p^2>
    double syp = 0.0;   // <sigma_y p>
    double sxx = 0.0;   // <sigma_x x>
};

namespace detail {

/// Apply the photon position operator to one spin component.
inline std::vector<double> apply_x(const double* c, int np, double omega) {
    std::vector<double> out(np, 0.0);
    for (int n = 0; n + 1 < np; ++n) {
        const double x = x_offdiag(n, omega);
        out[n] += x * c[n + 1];
        out[n + 1] += x * c[n];
    }
    return out;
}

} // namespace detail

inline ExpectationSet expectations(const std::vector<double>& state, int n_max,
                                   const ModelParams& p) {
    const int np = n_max + 1;
    const double* c0 = state.data();
    const double* c1 = state.data() + np;

    ExpectationSet e;
    double n_mean = 0.0;
    for (int n = 0; n < np; ++n) {
        e.sigma += c0[n] * c0[n] - c1[n] * c1[n];
        e.sx += 2.0 * c0[n] * c1[n];
        n_mean += n * (c0[n] * c0[n] + c1[n] * c1[n]);
    }

    const std::vector<double> xc0 = detail::apply_x(c0, np, p.omega);
    const std::vector<double> xc1 = detail::apply_x(c1, np, p.omega);
    for (int n = 0; n < np; ++n) {
        e.xi += c0[n] * xc0[n] + c1[n] * xc1[n];
        e.szx += c0[n] * xc0[n] - c1[n] * xc1[n];
        e.x2 += xc0[n] * xc0[n] + xc1[n] * xc1[n];
        e.sxx += 2.0 * c0[n] * xc1[n];
    }
    e.p2 = 2.0 * p.omega * (n_mean + 0.5) - p.omega * p.omega * e.x2;

    for (int n = 0; n + 1 < np; ++n) {
        const double b = std::sqrt(p.omega / 2.0) * std::sqrt(n + 1.0);
        e.syp += 2.0 * b * (c0[n + 1] * c1[n] - c0[n] * c1[n + 1]);
    }
    return e;
}

inline ExpectationSet expectations(const GroundSolution& sol, const ModelParams& p) {
    return expectations(sol.vector, sol.n_max_used, p);
}

/// <sigma_x p^2> with the same truncated-p^2 convention as ExpectationSet.
inline double sigma_x_p2(const std::vector<double>& state, int n_max, const ModelParams& p) {
    const int np = n_max + 1;
    const double* c0 = state.data();
    const double* c1 = state.data() + np;
    double sx_n = 0.0, sx = 0.0;
    for (int n = 0; n < np; ++n) {
        sx_n += 2.0 * n * c0[n] * c1[n];
        sx += 2.0 * c0[n] * c1[n];
    }
    const std::vector<double> xc0 = detail::apply_x(c0, np, p.omega);
    const std::vector<double> xc1 = detail::apply_x(c1, np, p.omega);
    double sx_x2 = 0.0;
    for (int n = 0; n < np; ++n) sx_x2 += 2.0 * xc0[n] * xc1[n];
    return 2.0 * p.omega * sx_n + p.omega * sx - p.omega * p.omega * sx_x2;
}

/// Residuals of the stationary-state identities. All vanish on exact
/// eigenstates; each is reported as the left-hand side of the corresponding
/// "= 0" relation with the lambda-scaled coupling.
struct HypervirialReport {
    double r_maxwell = 0.0;  // omega^2 xi + lambda g sigma + j
    double r_sigmay = 0.0;   // <sigma_y>, identically zero in the real representation
    double r_virial = 0.0;   // p2 - omega^2 x2 - lambda g szx - j xi
    double r_force = 0.0;    // t sigma + lambda g sxx + v sx
    double r_coupling = 0.0; // omega^2 szx + 2 t syp + lambda g + j sigma

    double max_abs() const {
        return std::max({std::abs(r_maxwell), std::abs(r_sigmay), std::abs(r_virial),
                         std::abs(r_force), std::abs(r_coupling)});
    }
};

inline HypervirialReport hypervirial_residuals(const ExpectationSet& e, const ModelParams& p,
                                               const ExternalPair& ext) {
    const double lg = p.coupling();
    const double w2 = p.omega * p.omega;
    HypervirialReport r;
    r.r_maxwell = w2 * e.xi + lg * e.sigma + ext.j;
    r.r_sigmay = 0.0;
    r.r_virial = e.p2 - w2 * e.x2 - lg * e.szx - ext.j * e.xi;
    r.r_force = p.t * e.sigma + lg * e.sxx + ext.v * e.sx;
    r.r_coupling = w2 * e.szx + 2.0 * p.t * e.syp + lg + ext.j * e.sigma;
    return r;
}

inline HypervirialReport hypervirial_residuals(const GroundSolution& sol, const ModelParams& p,
                                               const ExternalPair& ext) {
    return hypervirial_residuals(expectations(sol, p), p, ext);
}

} // namespace qrabi
