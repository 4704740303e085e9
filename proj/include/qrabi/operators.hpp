#pragma once

#include <cmath>
#include <vector>

#include "qrabi/banded.hpp"
#include "qrabi/errors.hpp"
#include "qrabi/params.hpp"
#include "qrabi/sym_matrix.hpp"

namespace qrabi {

/// Truncated Fock space: photon numbers 0..n_max.
struct FockBasis {
    int n_max = 40;

    int dim_photon() const { return n_max + 1; }
    int dim_rabi() const { return 2 * (n_max + 1); }
    int dim_dicke(int N) const { return (1 << N) * (n_max + 1); }

    void validate() const {
        if (n_max < 0) throw parameter_error("FockBasis: n_max must be >= 0");
    }
};

/// <n|x|n+1> = sqrt((n+1)/(2 omega))
inline double x_offdiag(int n, double omega) {
    return std::sqrt((n + 1) / (2.0 * omega));
}

/// Photon number operator diag(0, 1, ..., n_max) on the photon factor.
inline SymMatrix photon_number_op(const FockBasis& basis) {
    basis.validate();
    SymMatrix m(basis.dim_photon());
    for (int n = 0; n <= basis.n_max; ++n) m(n, n) = n;
    return m;
}

/// Position operator on the photon factor, tridiagonal in the number basis.
inline SymMatrix position_op(const FockBasis& basis, double omega) {
    basis.validate();
    if (!(omega > 0.0)) throw parameter_error("position_op: omega must be positive");
    SymMatrix m(basis.dim_photon());
    for (int n = 0; n < basis.n_max; ++n) m.set_sym(n, n + 1, x_offdiag(n, omega));
    return m;
}

/// sigma_y p as a real symmetric matrix on the full space. Both factors are
/// purely imaginary in this basis: sigma_y = i*K with K = [[0,-1],[1,0]] and
/// p = i*sqrt(omega/2)(adag - a), so sigma_y p = -K (x) sqrt(omega/2)(adag - a).
inline SymMatrix sigma_y_p_op(const FockBasis& basis, double omega) {
    basis.validate();
    if (!(omega > 0.0)) throw parameter_error("sigma_y_p_op: omega must be positive");
    const int np = basis.dim_photon();
    SymMatrix m(basis.dim_rabi());
    // (adag - a) has entry +sqrt(n+1) at (n+1, n) and -sqrt(n+1) at (n, n+1)
    for (int n = 0; n < basis.n_max; ++n) {
        const double b = std::sqrt(omega / 2.0) * std::sqrt(n + 1.0);
        // -K(0,1) * B(n, n+1) and -K(0,1) * B(n+1, n)
        m(0 * np + n, 1 * np + n + 1) = -b;
        m(0 * np + n + 1, 1 * np + n) = b;
        // -K(1,0) * B(...)
        m(1 * np + n + 1, 0 * np + n) = -b;
        m(1 * np + n, 0 * np + n + 1) = b;
    }
    return m;
}

/// Full two-level + mode Hamiltonian,
///   H = omega (N + 1/2) - t sigma_x + (lambda g sigma_z + j) x + v sigma_z,
/// on the 2(n_max+1)-dimensional space, spin-major index s*(n_max+1)+n with
/// s = 0 the sigma_z = +1 component. The photon energy is assembled as
/// omega(N + 1/2), which is exact on the truncated space.
inline SymMatrix build_rabi_hamiltonian(const ModelParams& p, const ExternalPair& ext,
                                        const FockBasis& basis) {
    p.validate();
    ext.validate();
    basis.validate();
    const int np = basis.dim_photon();
    SymMatrix h(basis.dim_rabi());
    const double lg = p.coupling();
    for (int s = 0; s < 2; ++s) {
        const double sign = (s == 0) ? 1.0 : -1.0;
        const double cs = lg * sign + ext.j;
        for (int n = 0; n < np; ++n) {
            const int i = s * np + n;
            h(i, i) = p.omega * (n + 0.5) + sign * ext.v;
            if (n + 1 < np) h.set_sym(i, i + 1, cs * x_offdiag(n, p.omega));
        }
    }
    for (int n = 0; n < np; ++n) h.set_sym(0 * np + n, 1 * np + n, -p.t);
    return h;
}

/// Same Hamiltonian in interleaved ordering (index 2n + s), where it is
/// banded with bandwidth 2. Used by the ground-state solver.
inline BandedSym build_rabi_banded(const ModelParams& p, const ExternalPair& ext,
                                   const FockBasis& basis) {
    p.validate();
    ext.validate();
    basis.validate();
    const int np = basis.dim_photon();
    BandedSym h(basis.dim_rabi(), 2);
    const double lg = p.coupling();
    for (int n = 0; n < np; ++n) {
        h.band(0, 2 * n) = p.omega * (n + 0.5) + ext.v;
        h.band(0, 2 * n + 1) = p.omega * (n + 0.5) - ext.v;
        h.band(1, 2 * n) = -p.t;
        if (n + 1 < np) {
            const double x = x_offdiag(n, p.omega);
            h.band(2, 2 * n) = (lg + ext.j) * x;
            h.band(2, 2 * n + 1) = (-lg + ext.j) * x;
        }
    }
    return h;
}

/// Map a vector from the interleaved ordering (2n + s) to spin-major
/// ordering (s*(n_max+1) + n).
inline std::vector<double> interleaved_to_spin_major(const std::vector<double>& x, int n_max) {
    const int np = n_max + 1;
    std::vector<double> out(x.size());
    for (int n = 0; n < np; ++n)
        for (int s = 0; s < 2; ++s) out[s * np + n] = x[2 * n + s];
    return out;
}

/// Sign of site k (1-based) in configuration s: +1 when the corresponding
/// bit is 0. Site 1 is the leftmost tensor factor (most significant bit).
inline int dicke_site_sign(int s, int k, int N) {
    return (s >> (N - k)) & 1 ? -1 : 1;
}

/// N-site Dicke Hamiltonian with per-site hoppings and couplings,
///   H = omega (N_ph + 1/2) - sum_k t_k sigma_x^k
///       + (lambda sum_k g_k sigma_z^k + j) x + sum_k v_k sigma_z^k,
/// on the 2^N (n_max+1)-dimensional space, index s*(n_max+1)+n.
inline SymMatrix build_dicke_hamiltonian(const DickeParams& p, const std::vector<double>& v_vec,
                                         double j, const FockBasis& basis) {
    p.validate();
    basis.validate();
    if (static_cast<int>(v_vec.size()) != p.N)
        throw parameter_error("build_dicke_hamiltonian: v_vec must have length N");
    const int np = basis.dim_photon();
    const int ns = 1 << p.N;
    SymMatrix h(basis.dim_dicke(p.N));
    for (int s = 0; s < ns; ++s) {
        double vdiag = 0.0;
        double gdiag = 0.0;
        for (int k = 1; k <= p.N; ++k) {
            const int sign = dicke_site_sign(s, k, p.N);
            vdiag += v_vec[k - 1] * sign;
            gdiag += p.g_vec[k - 1] * sign;
        }
        const double cs = p.lambda * gdiag + j;
        for (int n = 0; n < np; ++n) {
            const int i = s * np + n;
            h(i, i) = p.omega * (n + 0.5) + vdiag;
            if (n + 1 < np) h.set_sym(i, i + 1, cs * x_offdiag(n, p.omega));
        }
        for (int k = 1; k <= p.N; ++k) {
            const int s_flip = s ^ (1 << (p.N - k));
            if (s_flip > s)
                for (int n = 0; n < np; ++n)
                    h.set_sym(s * np + n, s_flip * np + n, -p.t_vec[k - 1]);
        }
    }
    return h;
}

} // namespace qrabi
