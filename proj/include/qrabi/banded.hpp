#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "qrabi/errors.hpp"

namespace qrabi {

/// Symmetric banded matrix. band(d, i) stores A(i, i+d) for 0 <= d <= bw.
/// The assembled model Hamiltonians have tiny bandwidth (2 for the two-level
/// model in interleaved ordering, 2^N for N sites), which makes shift-and-count
/// eigenvalue bisection essentially free even at large photon cutoffs.
class BandedSym {
public:
    BandedSym(int n, int bw)
        : n_(n), bw_(bw), a_(static_cast<std::size_t>(bw + 1) * n, 0.0) {}

    int size() const { return n_; }
    int bandwidth() const { return bw_; }

    double& band(int d, int i) { return a_[static_cast<std::size_t>(d) * n_ + i]; }
    double band(int d, int i) const { return a_[static_cast<std::size_t>(d) * n_ + i]; }

    double at(int i, int j) const {
        if (i > j) std::swap(i, j);
        const int d = j - i;
        if (d > bw_) return 0.0;
        return band(d, i);
    }

    void matvec(std::span<const double> x, std::span<double> y) const {
        for (int i = 0; i < n_; ++i) y[i] = band(0, i) * x[i];
        for (int d = 1; d <= bw_; ++d) {
            const double* bd = a_.data() + static_cast<std::size_t>(d) * n_;
            for (int i = 0; i + d < n_; ++i) {
                y[i] += bd[i] * x[i + d];
                y[i + d] += bd[i] * x[i];
            }
        }
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    /// Interval certain to contain the whole spectrum.
    std::pair<double, double> gershgorin() const {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (int i = 0; i < n_; ++i) {
            double r = 0.0;
            for (int d = 1; d <= bw_; ++d) {
                if (i + d < n_) r += std::abs(band(d, i));
                if (i - d >= 0) r += std::abs(band(d, i - d));
            }
            lo = std::min(lo, band(0, i) - r);
            hi = std::max(hi, band(0, i) + r);
        }
        return {lo, hi};
    }

private:
    int n_;
    int bw_;
    std::vector<double> a_;
};

/// Number of eigenvalues of A strictly below mu, from the inertia of the
/// LDL^T factorization of A - mu*I. Near-zero pivots are clamped to -pivmin,
/// the same convention tridiagonal Sturm counters use.
inline int count_below(const BandedSym& A, double mu) {
    const int n = A.size();
    const int bw = A.bandwidth();
    const double pivmin = std::max(A.max_abs(), 1.0) * 1e-290;

    // working copy of the upper bands of A - mu*I
    std::vector<double> w(static_cast<std::size_t>(bw + 1) * n);
    for (int d = 0; d <= bw; ++d)
        for (int i = 0; i + d < n; ++i)
            w[static_cast<std::size_t>(d) * n + i] = A.band(d, i) - (d == 0 ? mu : 0.0);

    auto wat = [&](int i, int j) -> double& { // i <= j, j - i <= bw
        return w[static_cast<std::size_t>(j - i) * n + i];
    };

    int count = 0;
    for (int j = 0; j < n; ++j) {
        double dj = wat(j, j);
        if (std::abs(dj) < pivmin) dj = -pivmin;
        if (dj < 0.0) ++count;
        const int last = std::min(j + bw, n - 1);
        for (int i = j + 1; i <= last; ++i) {
            const double lij = wat(j, i) / dj;
            for (int k = i; k <= last; ++k) wat(i, k) -= lij * wat(j, k);
        }
    }
    return count;
}

/// k-th smallest eigenvalue (0-based) by Sturm bisection.
inline double kth_eigenvalue(const BandedSym& A, int k) {
    auto [lo, hi] = A.gershgorin();
    const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
    lo -= 1e-12 * scale;
    hi += 1e-12 * scale;
    // count_below(lo) == 0 and count_below(hi) == n by construction
    while (hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * scale) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (count_below(A, mid) >= k + 1)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

inline std::vector<double> lowest_eigenvalues(const BandedSym& A, int k) {
    std::vector<double> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) out.push_back(kth_eigenvalue(A, i));
    return out;
}

/// LU factorization with partial pivoting for a banded matrix with equal
/// lower/upper bandwidth. LAPACK-style band storage with room for fill.
class BandedLU {
public:
    BandedLU(const BandedSym& A, double shift) : n_(A.size()), kl_(A.bandwidth()) {
        const int rows = 3 * kl_ + 1;
        ab_.assign(static_cast<std::size_t>(rows) * n_, 0.0);
        piv_.assign(n_, 0);
        for (int j = 0; j < n_; ++j)
            for (int i = std::max(0, j - kl_); i <= std::min(n_ - 1, j + kl_); ++i)
                entry(i, j) = A.at(i, j) - (i == j ? shift : 0.0);
        factor();
    }

    void solve(std::span<double> b) const {
        // forward substitution with the stored multipliers and row swaps
        for (int j = 0; j < n_ - 1; ++j) {
            const int p = piv_[j];
            if (p != j) std::swap(b[j], b[p]);
            const int last = std::min(n_ - 1, j + kl_);
            for (int i = j + 1; i <= last; ++i) b[i] -= entry_c(i, j) * b[j];
        }
        // back substitution on U (upper bandwidth 2*kl)
        for (int i = n_ - 1; i >= 0; --i) {
            const int last = std::min(n_ - 1, i + 2 * kl_);
            double s = b[i];
            for (int j = i + 1; j <= last; ++j) s -= entry_c(i, j) * b[j];
            b[i] = s / entry_c(i, i);
        }
    }

private:
    double& entry(int i, int j) {
        return ab_[static_cast<std::size_t>(2 * kl_ + i - j) * n_ + j];
    }
    double entry_c(int i, int j) const {
        return ab_[static_cast<std::size_t>(2 * kl_ + i - j) * n_ + j];
    }

    void factor() {
        const double tiny = 1e-300;
        for (int j = 0; j < n_; ++j) {
            const int last = std::min(n_ - 1, j + kl_);
            int p = j;
            double pmax = std::abs(entry(j, j));
            for (int i = j + 1; i <= last; ++i) {
                const double v = std::abs(entry(i, j));
                if (v > pmax) {
                    pmax = v;
                    p = i;
                }
            }
            piv_[j] = p;
            if (p != j) {
                const int cend = std::min(n_ - 1, j + 2 * kl_);
                for (int c = j; c <= cend; ++c) std::swap(entry(j, c), entry(p, c));
            }
            double d = entry(j, j);
            if (d == 0.0) d = entry(j, j) = tiny; // keep factorization usable near singularity
            const int cend = std::min(n_ - 1, j + 2 * kl_);
            for (int i = j + 1; i <= last; ++i) {
                const double m = entry(i, j) / d;
                entry(i, j) = m;
                for (int c = j + 1; c <= cend; ++c) entry(i, c) -= m * entry(j, c);
            }
        }
    }

    int n_;
    int kl_;
    std::vector<double> ab_;
    std::vector<int> piv_;
};

/// Eigenvector by inverse iteration at a precomputed eigenvalue. Returns the
/// normalized vector; *residual_out gets ||A x - eig x||.
inline std::vector<double> inverse_iteration_vector(const BandedSym& A, double eig,
                                                    double* residual_out = nullptr) {
    const int n = A.size();
    const double scale = std::max(A.max_abs(), 1.0);
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);

    auto normalize = [&](std::vector<double>& v) {
        double s = 0.0;
        for (double c : v) s += c * c;
        s = std::sqrt(s);
        for (double& c : v) c /= s;
    };
    auto residual = [&]() {
        A.matvec(x, y);
        double r = 0.0;
        for (int i = 0; i < n; ++i) r += (y[i] - eig * x[i]) * (y[i] - eig * x[i]);
        return std::sqrt(r);
    };

    const double target = 1e-11 * scale;
    for (int attempt = 0; attempt < 3; ++attempt) {
        const BandedLU lu(A, eig + attempt * 1e-12 * scale);
        for (int it = 0; it < 5; ++it) {
            lu.solve(x);
            normalize(x);
            if (residual() <= target) {
                if (residual_out) *residual_out = residual();
                return x;
            }
        }
        // restart from a different deterministic vector
        unsigned long long s = 88172645463325252ull + attempt;
        for (int i = 0; i < n; ++i) {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            x[i] = static_cast<double>(static_cast<long long>(s % 2000001) - 1000000) / 1e6;
        }
        normalize(x);
    }
    const double r = residual();
    if (residual_out) *residual_out = r;
    if (r > 1e-8 * scale)
        throw numeric_error("inverse iteration failed to reach residual tolerance");
    return x;
}

} // namespace qrabi
