#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ceh {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Raised when an input lies outside the domain of a closed form
// (u <= 0, zero vector, pole set of a rational identity, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Dimension n >= 2 and scale a > 0 of one Calabi-Eguchi-Hanson space
// on O(-n) over CP^(n-1).
class GeometryParams {
public:
    GeometryParams(int n, double a);

    int n() const { return n_; }
    double a() const { return a_; }
    // a^n, cached.
    double a_pow_n() const { return a_pow_n_; }

    GeometryParams with_scale(double a) const { return {n_, a}; }

private:
    int n_;
    double a_;
    double a_pow_n_;
};

// Radial data of a rotationally symmetric Kahler metric
//   g = e^psi (delta - phi zbar (x) z / u)
// at radius u = |z|^2; dphi is d(phi)/du.
struct RadialProfile {
    double u = 0.0;
    double e_psi = 1.0;
    double phi = 0.0;
    double dphi = 0.0;
};

// u = sum_mu z^mu conj(z^mu).
double radius_sq(const CVector& z);

// f'(u) = (1 + (a/u)^n)^(1/n).
double f_prime(double u, const GeometryParams& params);

// f''(u) = -phi e^psi / u.
double f_double_prime(double u, const GeometryParams& params);

// d/du (u f'(u)) = e^psi (1 - phi), the second factor of det g.
double u_f_prime_derivative(double u, const GeometryParams& params);

// phi(u) = a^n / (a^n + u^n) and 1 - phi = u^n / (a^n + u^n), computed
// without forming a^n + u^n.
double phi(double u, const GeometryParams& params);
double one_minus_phi(double u, const GeometryParams& params);

// Kahler potential
//   f(u) = (a^n+u^n)^(1/n) + (a/n) sum_j zeta^j log((1+(u/a)^n)^(1/n) - zeta^j)
// with zeta = exp(2 pi i / n), principal logarithm and zero additive constant.
// potential_complex returns the raw complex sum; potential returns its real
// part after checking that the imaginary part cancelled.
cplx potential_complex(double u, const GeometryParams& params);
double potential(double u, const GeometryParams& params);

// (1/n) sum_{j<n} zeta^j / (alpha - zeta^j), which equals 1/(alpha^n - 1)
// off the unit circle.
cplx roots_of_unity_sum(cplx alpha, int n);

// exp(2 pi i k / n)
cplx root_of_unity(int n, int k = 1);

RadialProfile radial_profile(double u, const GeometryParams& params);

}  // namespace ceh
