#pragma once

// Independent reference computations used only by the tests.

#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Composite Simpson rule with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    if (panels % 2) ++panels;
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int k = 1; k < panels; ++k) s += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
    return s * h / 3.0;
}

// Direct evaluation of (1/n) sum_j w^j / (alpha - w^j) with w = exp(2 pi i / n).
inline cplx roots_sum(cplx alpha, int n) {
    cplx s = 0.0;
    for (int j = 0; j < n; ++j) {
        const cplx w = std::exp(cplx(0.0, 2.0 * M_PI * j / n));
        s += w / (alpha - w);
    }
    return s / static_cast<double>(n);
}

// Central-difference Jacobian of a holomorphic map along real directions.
inline CMatrix holomorphic_jacobian(const std::function<CVector(const CVector&)>& f, const CVector& x,
                                    double h) {
    const CVector f0 = f(x);
    CMatrix jac(f0.size(), x.size());
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        CVector xp = x, xm = x;
        xp[k] += h;
        xm[k] -= h;
        jac.col(k) = (f(xp) - f(xm)) / (2.0 * h);
    }
    return jac;
}

// Real Hessian of f on C^n in the order (x_1..x_n, y_1..y_n).
inline Eigen::MatrixXd real_hessian(const std::function<double(const CVector&)>& f, const CVector& z,
                                    double h) {
    const Eigen::Index n = z.size();
    auto dir = [n](Eigen::Index k) {
        CVector e = CVector::Zero(n);
        if (k < n) e[k] = 1.0;
        else e[k - n] = cplx(0.0, 1.0);
        return e;
    };
    Eigen::MatrixXd hess(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < 2 * n; ++i)
        for (Eigen::Index j = 0; j < 2 * n; ++j) {
            const CVector ei = dir(i) * h, ej = dir(j) * h;
            hess(i, j) = (f(z + ei + ej) - f(z + ei - ej) - f(z - ei + ej) + f(z - ei - ej)) / (4.0 * h * h);
        }
    return hess;
}

// Haar-ish unitary from the QR factorisation of a complex Gaussian matrix.
inline CMatrix random_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = cplx(g(rng), g(rng));
    Eigen::HouseholderQR<CMatrix> qr(m);
    return qr.householderQ();
}

// Length of the closed geodesic zeta(t) = tan(t), t in [0, pi], of a * g_FS
// on CP^1, by quadrature of the speed sqrt(a) sec^2(t) / (1 + tan^2 t) over
// both halves (the midpoint is the point at infinity of the chart).
inline double great_circle_length(double a) {
    const double eps = 1e-9;
    auto speed = [a](double t) {
        const double z = std::tan(t);
        const double dz = 1.0 / (std::cos(t) * std::cos(t));
        return std::sqrt(a * dz * dz / ((1.0 + z * z) * (1.0 + z * z)));
    };
    const double half = simpson(speed, 0.0, M_PI / 2 - eps, 20000) + eps * std::sqrt(a);
    return 2.0 * half;
}

}  // namespace oracle
