#include "ceh/tensors.hpp"

#include <cmath>

namespace ceh {

namespace {

void check_dim(const QuotientPoint& p, const GeometryParams& params) {
    if (p.dim() != params.n()) {
        throw std::invalid_argument("point dimension " + std::to_string(p.dim()) +
                                    " does not match n = " + std::to_string(params.n()));
    }
}

}  // namespace

QuotientPoint::QuotientPoint(CVector z) : z_(std::move(z)), u_(radius_sq(z_)) {
    if (!(u_ > 0.0)) {
        throw DomainError("QuotientPoint: the zero vector is not a point of (C^n \\ {0})/mu_n");
    }
}

double HermitianForm::hermiticity_defect() const {
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

double HermitianForm::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

cplx HermitianForm::determinant() const {
    return m_.determinant();
}

Eigen::MatrixXd HermitianForm::to_real() const {
    // h = S + iT with S symmetric, T antisymmetric; in (r_A, s_A) pairs the
    // quadratic form is [[S, T], [-T, S]].
    const int n = dim();
    Eigen::MatrixXd out(2 * n, 2 * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const double s = m_(a, b).real();
            const double t = m_(a, b).imag();
            out(2 * a, 2 * b) = s;
            out(2 * a, 2 * b + 1) = t;
            out(2 * a + 1, 2 * b) = -t;
            out(2 * a + 1, 2 * b + 1) = s;
        }
    }
    return out;
}

HermitianForm rot_sym_metric(const CVector& z, const RadialProfile& profile) {
    const int n = static_cast<int>(z.size());
    const double u = profile.u;
    CMatrix g(n, n);
    for (int mu = 0; mu < n; ++mu) {
        g(mu, mu) = profile.e_psi * (1.0 - profile.phi * std::norm(z[mu]) / u);
        for (int nu = mu + 1; nu < n; ++nu) {
            g(mu, nu) = -profile.e_psi * profile.phi * std::conj(z[mu]) * z[nu] / u;
            g(nu, mu) = std::conj(g(mu, nu));
        }
    }
    return HermitianForm(std::move(g));
}

HermitianForm metric(const QuotientPoint& p, const GeometryParams& params) {
    check_dim(p, params);
    return rot_sym_metric(p.z(), radial_profile(p.u(), params));
}

CMatrix metric_deviation(const QuotientPoint& p, const GeometryParams& params) {
    check_dim(p, params);
    const int n = params.n();
    const double u = p.u();
    const double e_psi = f_prime(u, params);
    // e^psi - 1 = (1 + (a/u)^n)^(1/n) - 1
    const double e_psi_minus_one = u >= params.a() ? std::expm1(std::log1p(std::pow(params.a() / u, n)) / n)
                                                   : e_psi - 1.0;
    const double c = e_psi * phi(u, params) / u;
    const CVector& z = p.z();
    CMatrix d(n, n);
    for (int mu = 0; mu < n; ++mu) {
        d(mu, mu) = e_psi_minus_one - c * std::norm(z[mu]);
        for (int nu = mu + 1; nu < n; ++nu) {
            d(mu, nu) = -c * std::conj(z[mu]) * z[nu];
            d(nu, mu) = std::conj(d(mu, nu));
        }
    }
    return d;
}

HermitianForm metric_inverse(const QuotientPoint& p, const GeometryParams& params) {
    check_dim(p, params);
    const int n = params.n();
    const double u = p.u();
    const double e_minus_psi = 1.0 / f_prime(u, params);
    // phi/(1-phi) = (a/u)^n
    const double ratio = std::pow(params.a() / u, n);
    const CVector& z = p.z();
    CMatrix ginv(n, n);
    for (int nu = 0; nu < n; ++nu) {
        ginv(nu, nu) = e_minus_psi * (1.0 + ratio * std::norm(z[nu]) / u);
        for (int lam = nu + 1; lam < n; ++lam) {
            ginv(nu, lam) = e_minus_psi * ratio * std::conj(z[nu]) * z[lam] / u;
            ginv(lam, nu) = std::conj(ginv(nu, lam));
        }
    }
    return HermitianForm(std::move(ginv));
}

HermitianForm fubini_study(const CVector& zeta) {
    const int m = static_cast<int>(zeta.size());
    const double w = 1.0 + radius_sq(zeta);
    CMatrix g(m, m);
    for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
            const double delta = k == l ? 1.0 : 0.0;
            g(k, l) = (w * delta - std::conj(zeta[k]) * zeta[l]) / (w * w);
        }
    }
    return HermitianForm(std::move(g));
}

double homothety_pullback_check(const QuotientPoint& p, double alpha,
                                const GeometryParams& params) {
    if (!(alpha > 0.0)) {
        throw DomainError("homothety_pullback_check: alpha must be > 0");
    }
    const GeometryParams scaled = params.with_scale(alpha * alpha * params.a());
    const QuotientPoint q(alpha * p.z());
    const CMatrix lhs = metric(q, scaled).matrix();
    const CMatrix rhs = metric(p, params).matrix();
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

QuotientPoint random_point(const GeometryParams& params, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n = params.n();
    const double min_norm = 1e-3 * params.a();
    for (;;) {
        CVector z(n);
        for (int i = 0; i < n; ++i) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z[i] = cplx(re, im);
        }
        if (std::sqrt(radius_sq(z)) >= min_norm) {
            return QuotientPoint(std::move(z));
        }
    }
}

}  // namespace ceh
