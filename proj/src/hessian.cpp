#include "ceh/hessian.hpp"

#include <cmath>

#include "ceh/geodesics.hpp"

namespace ceh {

namespace {

void require_positive(double u, const char* what) {
    if (!(u > 0.0)) throw DomainError(std::string(what) + ": requires u > 0");
}

double psi_prime_from(double u, const ArcLength& len, const GeometryParams& params) {
    const int n = params.n();
    return len.sqrt_psi / std::sqrt(u) *
           std::pow(one_minus_phi(u, params), (n - 1) / (2.0 * n));
}

}  // namespace

double upsilon(double u, const GeometryParams& params) {
    require_positive(u, "upsilon");
    return (params.n() - 1) * phi(u, params) / u;
}

double psi_prime(double u, const GeometryParams& params) {
    require_positive(u, "psi_prime");
    return psi_prime_from(u, radial_arclength(u, params), params);
}

double psi_second_derivative(double u, const GeometryParams& params) {
    require_positive(u, "psi_second_derivative");
    const int n = params.n();
    const ArcLength len = radial_arclength(u, params);
    const double d1 = psi_prime_from(u, len, params);
    // ((n-2)a^n - u^n) / (a^n+u^n) = (n-1) phi - 1
    const double bracket = (n - 1) * phi(u, params) - 1.0;
    return d1 / (2.0 * len.psi) * (d1 + len.psi * bracket / u);
}

HessianSpectrum hessian_spectrum_u(double u, const GeometryParams& params) {
    require_positive(u, "hessian_spectrum");
    const ArcLength len = radial_arclength(u, params);
    const double d1 = psi_prime_from(u, len, params);
    const double d2 = psi_second_derivative(u, params);
    HessianSpectrum s;
    s.Upsilon = upsilon(u, params);
    s.A = 2.0 * d2 / d1 - s.Upsilon;
    s.B = s.Upsilon;
    s.lambda1 = 2.0 * d1;
    s.lambda2 = 2.0 * u * d1 * d1 / len.psi;
    s.lambda3 = 2.0 * d1 * (1.0 + u * s.Upsilon);
    return s;
}

HessianSpectrum hessian_spectrum(const QuotientPoint& p, const GeometryParams& params) {
    if (p.dim() != params.n()) throw std::invalid_argument("point dimension does not match n");
    return hessian_spectrum_u(p.u(), params);
}

Eigen::MatrixXd hessian_blocks(const QuotientPoint& p, const GeometryParams& params) {
    const HessianSpectrum s = hessian_spectrum(p, params);
    const int n = p.dim();
    const Eigen::VectorXd x = p.z().real();
    const Eigen::VectorXd y = p.z().imag();
    const Eigen::MatrixXd xx = x * x.transpose();
    const Eigen::MatrixXd xy = x * y.transpose();
    const Eigen::MatrixXd yx = y * x.transpose();
    const Eigen::MatrixXd yy = y * y.transpose();

    Eigen::MatrixXd h = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    h.topLeftCorner(n, n) += s.A * xx + s.B * yy;
    h.topRightCorner(n, n) += s.A * xy - s.B * yx;
    h.bottomLeftCorner(n, n) += s.A * yx - s.B * xy;
    h.bottomRightCorner(n, n) += s.B * xx + s.A * yy;
    return s.lambda1 * h;
}

}  // namespace ceh
