#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "qrabi/errors.hpp"

namespace qrabi {

/// Dense real symmetric matrix, row-major. All model operators used here
/// (sigma_x, sigma_z, x, x^2, sigma_z x, sigma_y p, H) are real symmetric in
/// the chosen basis, so this one type carries everything.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const { return n_; }

    double operator()(int i, int j) const { return a_[idx(i, j)]; }
    double& operator()(int i, int j) { return a_[idx(i, j)]; }

    /// Set both (i,j) and (j,i).
    void set_sym(int i, int j, double v) {
        a_[idx(i, j)] = v;
        a_[idx(j, i)] = v;
    }
    void add_sym(int i, int j, double v) {
        a_[idx(i, j)] += v;
        if (i != j) a_[idx(j, i)] += v;
    }

    std::span<const double> row(int i) const {
        return {a_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
    }
    const std::vector<double>& data() const { return a_; }
    std::vector<double>& data() { return a_; }

    void matvec(std::span<const double> x, std::span<double> y) const {
        for (int i = 0; i < n_; ++i) {
            const double* ai = a_.data() + static_cast<std::size_t>(i) * n_;
            double s = 0.0;
            for (int j = 0; j < n_; ++j) s += ai[j] * x[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = s;
        }
    }

    /// <x|A|y>
    double expectation(std::span<const double> x, std::span<const double> y) const {
        double s = 0.0;
        for (int i = 0; i < n_; ++i) {
            const double* ai = a_.data() + static_cast<std::size_t>(i) * n_;
            double row_dot = 0.0;
            for (int j = 0; j < n_; ++j) row_dot += ai[j] * y[static_cast<std::size_t>(j)];
            s += x[static_cast<std::size_t>(i)] * row_dot;
        }
        return s;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    double max_asymmetry() const {
        double m = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
        return m;
    }

    bool is_symmetric(double rel_tol = 1e-12) const {
        return max_asymmetry() <= rel_tol * std::max(1.0, max_abs());
    }

    static SymMatrix identity(int n) {
        SymMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    SymMatrix& operator+=(const SymMatrix& other) {
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
        return *this;
    }
    SymMatrix& operator*=(double c) {
        for (double& v : a_) v *= c;
        return *this;
    }

    friend SymMatrix operator*(const SymMatrix& a, const SymMatrix& b) {
        SymMatrix c(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const double aik = a(i, k);
                if (aik == 0.0) continue;
                for (int j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<double> a_;
};

/// Kronecker product; index convention (i_a * n_b + i_b), i.e. the left
/// factor is the slow index.
inline SymMatrix kron(const SymMatrix& a, const SymMatrix& b) {
    const int na = a.size(), nb = b.size();
    SymMatrix c(na * nb);
    for (int ia = 0; ia < na; ++ia)
        for (int ja = 0; ja < na; ++ja) {
            const double f = a(ia, ja);
            if (f == 0.0) continue;
            for (int ib = 0; ib < nb; ++ib)
                for (int jb = 0; jb < nb; ++jb)
                    c(ia * nb + ib, ja * nb + jb) = f * b(ib, jb);
        }
    return c;
}

} // namespace qrabi
