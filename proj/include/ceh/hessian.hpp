#pragma once

#include <Eigen/Dense>

#include "ceh/tensors.hpp"

namespace ceh {

// Eigenvalue data of the real Hessian of the squared distance psi(u) to the
// zero section. lambda1 has multiplicity 2n-2, lambda2 and lambda3 are simple.
struct HessianSpectrum {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    double Upsilon = 0.0;
    double A = 0.0;
    double B = 0.0;
};

// psi'(u) = (sqrt(psi)/sqrt(u)) (u^n/(a^n+u^n))^((n-1)/(2n))
double psi_prime(double u, const GeometryParams& params);

// psi'' = (psi'/(2 psi)) (psi' + psi ((n-2)a^n - u^n) / (u (a^n+u^n)))
double psi_second_derivative(double u, const GeometryParams& params);

// Upsilon(u) = (n-1) a^n / (u (a^n+u^n))
double upsilon(double u, const GeometryParams& params);

// Real 2n x 2n Hessian in the coordinate order (x_1..x_n, y_1..y_n), z = x + iy:
//   H = 2 psi' (I + [[A xx + B yy, A xy - B yx], [A yx - B xy, B xx + A yy]])
Eigen::MatrixXd hessian_blocks(const QuotientPoint& p, const GeometryParams& params);

// lambda1 = 2 psi', lambda2 = 2 u psi'^2 / psi, lambda3 = 2 psi' (1 + u Upsilon)
HessianSpectrum hessian_spectrum(const QuotientPoint& p, const GeometryParams& params);
HessianSpectrum hessian_spectrum_u(double u, const GeometryParams& params);

}  // namespace ceh
