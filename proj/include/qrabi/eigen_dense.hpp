#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "qrabi/errors.hpp"
#include "qrabi/sym_matrix.hpp"
#include "qrabi/util.hpp"

namespace qrabi {

/// Householder reduction of a real symmetric matrix to tridiagonal form.
/// On return d holds the diagonal and e the subdiagonal (e[0] = 0). When
/// vectors is true, a is overwritten with the accumulated orthogonal
/// transformation; otherwise its contents are scratch.
inline void householder_tridiag(SymMatrix& a, std::vector<double>& d, std::vector<double>& e,
                                bool vectors) {
    const int n = a.size();
    d.assign(n, 0.0);
    e.assign(n, 0.0);

    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k) scale += std::abs(a(i, k));
            if (scale == 0.0) {
                e[i] = a(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    a(i, k) /= scale;
                    h += a(i, k) * a(i, k);
                }
                double f = a(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    if (vectors) a(j, i) = a(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
                    for (int k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
                    e[j] = g / h;
                    f += e[j] * a(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k) a(j, k) -= f * e[k] + g * a(i, k);
                }
            }
        } else {
            e[i] = a(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        if (vectors) {
            if (d[i] != 0.0) {
                for (int j = 0; j < i; ++j) {
                    double g = 0.0;
                    for (int k = 0; k < i; ++k) g += a(i, k) * a(k, j);
                    for (int k = 0; k < i; ++k) a(k, j) -= g * a(k, i);
                }
            }
            d[i] = a(i, i);
            a(i, i) = 1.0;
            for (int j = 0; j < i; ++j) a(j, i) = a(i, j) = 0.0;
        } else {
            d[i] = a(i, i);
        }
    }
}

/// Implicit-shift QL iteration on a symmetric tridiagonal matrix. d/e as
/// produced by householder_tridiag. If z is non-null its columns are rotated
/// along, turning the accumulated transformation into eigenvectors.
inline void tqli(std::vector<double>& d, std::vector<double>& e, SymMatrix* z) {
    const int n = static_cast<int>(d.size());
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) + dd == dd) break;
            }
            if (m != l) {
                if (iter++ == 50) throw numeric_error("tqli: too many iterations");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    e[i + 1] = r = std::hypot(f, g);
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    d[i + 1] = g + (p = s * r);
                    g = c * r - b;
                    if (z) {
                        for (int k = 0; k < n; ++k) {
                            f = (*z)(k, i + 1);
                            (*z)(k, i + 1) = s * (*z)(k, i) + c * f;
                            (*z)(k, i) = c * (*z)(k, i) - s * f;
                        }
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

struct DenseEigen {
    std::vector<double> eigenvalues;           // ascending
    std::vector<std::vector<double>> vectors;  // vectors[m] matches eigenvalues[m]
};

/// Full eigendecomposition via Householder + QL; eigenvalues ascending.
inline DenseEigen dense_eigen(const SymMatrix& h, bool vectors = true) {
    SymMatrix a = h;
    const int n = h.size();
    std::vector<double> d, e;
    householder_tridiag(a, d, e, vectors);
    tqli(d, e, vectors ? &a : nullptr);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });

    DenseEigen out;
    out.eigenvalues.resize(n);
    for (int m = 0; m < n; ++m) out.eigenvalues[m] = d[order[m]];
    if (vectors) {
        out.vectors.resize(n, std::vector<double>(n));
        for (int m = 0; m < n; ++m)
            for (int k = 0; k < n; ++k) out.vectors[m][k] = a(k, order[m]);
    }
    return out;
}

/// Cyclic Jacobi rotations. Slow but nearly assumption-free; kept as the
/// independent cross-check for the QL path.
inline DenseEigen jacobi_eigen(const SymMatrix& h) {
    const int n = h.size();
    SymMatrix a = h;
    SymMatrix v = SymMatrix::identity(n);

    const double stop = sq(1e-14 * std::max(1.0, h.max_abs())) * n * n;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off <= stop) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k != p && k != q) {
                        const double akp = a(k, p), akq = a(k, q);
                        a(k, p) = a(p, k) = akp - s * (akq + tau * akp);
                        a(k, q) = a(q, k) = akq + s * (akp - tau * akq);
                    }
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp - s * (vkq + tau * vkp);
                    v(k, q) = vkq + s * (vkp - tau * vkq);
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

    DenseEigen out;
    out.eigenvalues.resize(n);
    out.vectors.resize(n, std::vector<double>(n));
    for (int m = 0; m < n; ++m) {
        out.eigenvalues[m] = a(order[m], order[m]);
        for (int k = 0; k < n; ++k) out.vectors[m][k] = v(k, order[m]);
    }
    return out;
}

/// Ascending sequence of the lowest k eigenvalues.
struct SpectrumSlice {
    std::vector<double> eigenvalues;
    int k = 0;
};

struct EigenPairs {
    SpectrumSlice slice;
    std::vector<std::vector<double>> vectors;
};

/// Lowest k eigenpairs of a symmetric matrix. Verifies the symmetry contract
/// and the residuals of the returned pairs.
inline EigenPairs eigen_lowest(const SymMatrix& h, int k) {
    const int n = h.size();
    if (k < 1 || k > n) throw parameter_error("eigen_lowest: need 1 <= k <= dim");
    if (!h.is_symmetric())
        throw parameter_error("eigen_lowest: matrix is not symmetric (contract violation)");

    DenseEigen full = dense_eigen(h, true);

    EigenPairs out;
    out.slice.k = k;
    out.slice.eigenvalues.assign(full.eigenvalues.begin(), full.eigenvalues.begin() + k);
    out.vectors.assign(full.vectors.begin(), full.vectors.begin() + k);

    std::vector<double> y(n);
    for (int m = 0; m < k; ++m) {
        h.matvec(out.vectors[m], y);
        double r = 0.0;
        for (int i = 0; i < n; ++i)
            r += (y[i] - out.slice.eigenvalues[m] * out.vectors[m][i]) *
                 (y[i] - out.slice.eigenvalues[m] * out.vectors[m][i]);
        r = std::sqrt(r);
        if (r > 1e-9 * std::max(1.0, std::abs(out.slice.eigenvalues[m])))
            throw numeric_error("eigen_lowest: residual tolerance exceeded");
    }
    return out;
}

} // namespace qrabi
