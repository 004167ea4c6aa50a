#include "ceh/core.hpp"

#include <cmath>
#include <numbers>

namespace ceh {

namespace {

void require_positive_u(double u, const char* what) {
    if (!(u > 0.0)) {
        throw DomainError(std::string(what) + ": requires u > 0, got " + std::to_string(u));
    }
}

// (1 + x^n)^(1/n) for x >= 0, without overflow for large x.
double nth_root_one_plus_pow(double x, int n) {
    if (x <= 1.0) {
        return std::exp(std::log1p(std::pow(x, n)) / n);
    }
    return x * std::exp(std::log1p(std::pow(x, -n)) / n);
}

}  // namespace

GeometryParams::GeometryParams(int n, double a) : n_(n), a_(a), a_pow_n_(std::pow(a, n)) {
    if (n < 2) {
        throw std::invalid_argument("GeometryParams: n must be >= 2, got " + std::to_string(n));
    }
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw std::invalid_argument("GeometryParams: a must be a positive finite number");
    }
}

double radius_sq(const CVector& z) {
    double u = 0.0;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        u += std::norm(z[i]);
    }
    return u;
}

double f_prime(double u, const GeometryParams& params) {
    require_positive_u(u, "f_prime");
    return nth_root_one_plus_pow(params.a() / u, params.n());
}

double phi(double u, const GeometryParams& params) {
    require_positive_u(u, "phi");
    const double r = std::pow(u / params.a(), params.n());
    return 1.0 / (1.0 + r);
}

double one_minus_phi(double u, const GeometryParams& params) {
    require_positive_u(u, "one_minus_phi");
    const double r = std::pow(params.a() / u, params.n());
    return 1.0 / (1.0 + r);
}

double f_double_prime(double u, const GeometryParams& params) {
    return -phi(u, params) * f_prime(u, params) / u;
}

double u_f_prime_derivative(double u, const GeometryParams& params) {
    return f_prime(u, params) * one_minus_phi(u, params);
}

cplx root_of_unity(int n, int k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % n) / n;
    return std::polar(1.0, angle);
}

cplx potential_complex(double u, const GeometryParams& params) {
    require_positive_u(u, "potential");
    const int n = params.n();
    const double a = params.a();
    const double x = u / a;
    const double alpha = nth_root_one_plus_pow(x, n);
    // alpha - 1 loses all digits for small x; take it from expm1/log1p.
    const double alpha_minus_one =
        x <= 1.0 ? std::expm1(std::log1p(std::pow(x, n)) / n) : alpha - 1.0;

    cplx sum = std::log(alpha_minus_one);
    for (int j = 1; j < n; ++j) {
        const cplx zj = root_of_unity(n, j);
        sum += zj * std::log(cplx(alpha) - zj);
    }
    return a * alpha + (a / n) * sum;
}

double potential(double u, const GeometryParams& params) {
    const cplx f = potential_complex(u, params);
    // The zeta^j and zeta^(n-j) terms are complex conjugates.
    if (std::abs(f.imag()) > 1e-9 * (1.0 + std::abs(f.real()))) {
        throw std::logic_error("potential: imaginary parts failed to cancel");
    }
    return f.real();
}

cplx roots_of_unity_sum(cplx alpha, int n) {
    if (n < 1) {
        throw DomainError("roots_of_unity_sum: n must be >= 1");
    }
    if (std::abs(std::abs(alpha) - 1.0) < 1e-12) {
        throw DomainError("roots_of_unity_sum: |alpha| = 1 lies on the pole set");
    }
    cplx sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const cplx zj = root_of_unity(n, j);
        sum += zj / (alpha - zj);
    }
    return sum / static_cast<double>(n);
}

RadialProfile radial_profile(double u, const GeometryParams& params) {
    require_positive_u(u, "radial_profile");
    RadialProfile p;
    p.u = u;
    p.e_psi = f_prime(u, params);
    p.phi = phi(u, params);
    p.dphi = -(params.n() / u) * p.phi * one_minus_phi(u, params);
    return p;
}

}  // namespace ceh
