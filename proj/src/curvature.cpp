#include "ceh/curvature.hpp"

#include <algorithm>
#include <cmath>

namespace ceh {

double ChristoffelTensor::max_abs() const {
    double m = 0.0;
    for (const cplx& c : data_) m = std::max(m, std::abs(c));
    return m;
}

double ChristoffelTensor::lower_symmetry_defect() const {
    double m = 0.0;
    for (int l = 0; l < n_; ++l)
        for (int mu = 0; mu < n_; ++mu)
            for (int al = 0; al < n_; ++al)
                m = std::max(m, std::abs((*this)(l, mu, al) - (*this)(l, al, mu)));
    return m;
}

ChristoffelTensor& ChristoffelTensor::operator+=(const ChristoffelTensor& o) {
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ChristoffelTensor& ChristoffelTensor::operator-=(const ChristoffelTensor& o) {
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ChristoffelTensor& ChristoffelTensor::operator*=(cplx s) {
    for (cplx& c : data_) c *= s;
    return *this;
}

ChristoffelTensor operator+(ChristoffelTensor a, const ChristoffelTensor& b) { return a += b; }
ChristoffelTensor operator-(ChristoffelTensor a, const ChristoffelTensor& b) { return a -= b; }
ChristoffelTensor operator*(cplx s, ChristoffelTensor a) { return a *= s; }

double RiemannTensor::max_abs() const {
    double m = 0.0;
    for (const cplx& c : data_) m = std::max(m, std::abs(c));
    return m;
}

double RiemannTensor::symmetry_defect() const {
    const RiemannTensor& r = *this;
    double m = 0.0;
    for (int mu = 0; mu < n_; ++mu)
        for (int nu = 0; nu < n_; ++nu)
            for (int al = 0; al < n_; ++al)
                for (int be = 0; be < n_; ++be) {
                    const cplx v = r(mu, nu, al, be);
                    m = std::max(m, std::abs(v - r(al, nu, mu, be)));
                    m = std::max(m, std::abs(v - r(mu, be, al, nu)));
                    m = std::max(m, std::abs(v - std::conj(r(nu, mu, be, al))));
                }
    return m;
}

namespace {

void check_dim(const QuotientPoint& p, const GeometryParams& params) {
    if (p.dim() != params.n()) {
        throw std::invalid_argument("point dimension does not match n");
    }
}

}  // namespace

ChristoffelTensor christoffel_rot_sym(const QuotientPoint& p, const RadialProfile& profile) {
    if (!(profile.phi < 1.0)) {
        throw DegenerateMetricError("christoffel_rot_sym: phi >= 1 gives a degenerate metric");
    }
    const int n = p.dim();
    const double u = p.u();
    const CVector& z = p.z();
    const double c1 = profile.phi / u;
    const double c2 = (profile.phi * (1.0 - profile.phi) - u * profile.dphi) /
                      (u * (1.0 - profile.phi));
    ChristoffelTensor gamma(n);
    for (int lam = 0; lam < n; ++lam)
        for (int mu = 0; mu < n; ++mu)
            for (int al = 0; al < n; ++al) {
                const cplx zbm = std::conj(z[mu]);
                const cplx zba = std::conj(z[al]);
                cplx v = c2 * zbm * zba * z[lam] / u;
                if (mu == lam) v -= c1 * zba;
                if (al == lam) v -= c1 * zbm;
                gamma(lam, mu, al) = v;
            }
    return gamma;
}

ChristoffelTensor christoffel_ceh(const QuotientPoint& p, const GeometryParams& params) {
    check_dim(p, params);
    const int n = params.n();
    const double u = p.u();
    const CVector& z = p.z();
    // a^n / (u (a^n + u^n)) = phi / u
    const double pre = -phi(u, params) / u;
    ChristoffelTensor gamma(n);
    for (int lam = 0; lam < n; ++lam)
        for (int mu = 0; mu < n; ++mu)
            for (int al = 0; al < n; ++al) {
                const cplx zbm = std::conj(z[mu]);
                const cplx zba = std::conj(z[al]);
                cplx bracket = -static_cast<double>(n + 1) * zba * zbm * z[lam] / u;
                if (al == lam) bracket += zbm;
                if (mu == lam) bracket += zba;
                gamma(lam, mu, al) = pre * bracket;
            }
    return gamma;
}

RiemannTensor riemann(const QuotientPoint& p, const GeometryParams& params) {
    check_dim(p, params);
    const int n = params.n();
    const double u = p.u();
    const CVector& z = p.z();
    const CMatrix g = metric(p, params).matrix();

    // s = u / (a^n+u^n)^(1/n) = (1-phi)^(1/n), and the overall prefactor
    // a^n / (a^n+u^n)^((n+1)/n) = phi s / u.
    const double ph = phi(u, params);
    const double omp = one_minus_phi(u, params);
    const double s = std::pow(omp, 1.0 / n);
    const double pre = ph * s / u;
    const double c1 = static_cast<double>(n + 1) * std::pow(s, n - 1);
    const double c2 = static_cast<double>((n + 1) * (n + 2)) * std::pow(s, 2 * n - 2);

    // w(mu, nu) = zbar_mu z_nu / u
    CMatrix w(n, n);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) w(mu, nu) = std::conj(z[mu]) * z[nu] / u;

    RiemannTensor r(n);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            for (int al = 0; al < n; ++al)
                for (int be = 0; be < n; ++be) {
                    cplx t = g(al, nu) * g(mu, be) + g(mu, nu) * g(al, be);
                    t -= c1 * (w(mu, be) * g(al, nu) + w(al, be) * g(mu, nu) +
                               w(mu, nu) * g(al, be) + w(al, nu) * g(mu, be));
                    t += c2 * w(mu, nu) * w(al, be);
                    r(mu, nu, al, be) = pre * t;
                }
    return r;
}

MixedRiemannTensor riemann_mixed(const QuotientPoint& p, const GeometryParams& params) {
    check_dim(p, params);
    const int n = params.n();
    const double u = p.u();
    const CVector& z = p.z();
    const CMatrix g = metric(p, params).matrix();
    const double ph = phi(u, params);
    const double omp = one_minus_phi(u, params);
    const double e_minus_psi = 1.0 / f_prime(u, params);
    const double n1 = n + 1;
    const double n2 = n + 2;

    // Stored as (lambda, mu, beta, alpha).
    MixedRiemannTensor r(n);
    for (int lam = 0; lam < n; ++lam)
        for (int mu = 0; mu < n; ++mu)
            for (int be = 0; be < n; ++be)
                for (int al = 0; al < n; ++al) {
                    const cplx zm = std::conj(z[mu]);
                    const cplx za = std::conj(z[al]);
                    const cplx zl = z[lam];
                    const cplx zb = z[be];
                    cplx t = 0.0;
                    if (lam == al) t += e_minus_psi * g(mu, be);
                    if (lam == mu) t += e_minus_psi * g(al, be);
                    t -= n1 * e_minus_psi * (zm * zl / u * g(al, be) + za * zl / u * g(mu, be));
                    cplx d = 0.0;
                    if (lam == al) d += zm * zb / u;
                    if (lam == mu) d += za * zb / u;
                    t -= n1 * omp * d;
                    t += n1 * n2 * omp * zm * zl * za * zb / (u * u);
                    r(lam, mu, be, al) = (ph / u) * t;
                }
    return r;
}

HermitianForm ricci_contraction(const RiemannTensor& r, const HermitianForm& ginv) {
    const int n = r.dim();
    CMatrix ric = CMatrix::Zero(n, n);
    for (int mu = 0; mu < n; ++mu)
        for (int be = 0; be < n; ++be) {
            cplx s = 0.0;
            for (int nu = 0; nu < n; ++nu)
                for (int al = 0; al < n; ++al) s += ginv(nu, al) * r(mu, nu, al, be);
            ric(mu, be) = s;
        }
    return HermitianForm(std::move(ric));
}

HermitianForm ricci(const QuotientPoint& p, const GeometryParams& params) {
    return ricci_contraction(riemann(p, params), metric_inverse(p, params));
}

CMatrix ricci_from_mixed_trace(const MixedRiemannTensor& mixed) {
    const int n = mixed.dim();
    CMatrix ric = CMatrix::Zero(n, n);
    for (int mu = 0; mu < n; ++mu)
        for (int be = 0; be < n; ++be)
            for (int lam = 0; lam < n; ++lam) ric(mu, be) += mixed(lam, mu, be, lam);
    return ric;
}

double kretschmann_u(double u, const GeometryParams& params) {
    if (u < 0.0) {
        throw DomainError("kretschmann_u: requires u >= 0");
    }
    const int n = params.n();
    const double coeff = static_cast<double>(n) * (n + 2) * (static_cast<double>(n) * n - 1);
    // a^(2n) / (a^n+u^n)^(2(n+1)/n) = a^-2 (1 + (u/a)^n)^(-2(n+1)/n)
    const double a = params.a();
    const double r = std::pow(u / a, n);
    return coeff / (a * a) * std::pow(1.0 + r, -2.0 * (n + 1) / n);
}

double kretschmann(const QuotientPoint& p, const GeometryParams& params) {
    check_dim(p, params);
    return kretschmann_u(p.u(), params);
}

double kretschmann_contracted(const RiemannTensor& r, const HermitianForm& ginv) {
    const int n = r.dim();
    const CMatrix& gi = ginv.matrix();
    // Raise every slot: up(rho, sigma, kappa, tau) = sum g^{rhobar mu} g^{nubar sigma}
    //   g^{kappabar al} g^{bbar tau} R_{mu nubar al bbar}, one index at a time.
    const size_t total = static_cast<size_t>(n) * n * n * n;
    std::vector<cplx> a(r.data().begin(), r.data().end());
    std::vector<cplx> b(total);
    auto idx = [n](int i, int j, int k, int l) {
        return ((static_cast<size_t>(i) * n + j) * n + k) * n + l;
    };
    for (int slot = 0; slot < 4; ++slot) {
        std::fill(b.begin(), b.end(), cplx(0.0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        int ijkl[4] = {i, j, k, l};
                        const int target = ijkl[slot];
                        cplx s = 0.0;
                        for (int m = 0; m < n; ++m) {
                            ijkl[slot] = m;
                            // slots 0, 2 are holomorphic (contract with g^{target-bar m});
                            // slots 1, 3 antiholomorphic (g^{m-bar target}).
                            const cplx gm = (slot % 2 == 0) ? gi(target, m) : gi(m, target);
                            s += gm * a[idx(ijkl[0], ijkl[1], ijkl[2], ijkl[3])];
                        }
                        b[idx(i, j, k, l)] = s;
                    }
        std::swap(a, b);
    }
    cplx k = 0.0;
    for (size_t i = 0; i < total; ++i) k += std::conj(a[i]) * r.data()[i];
    return k.real();
}

}  // namespace ceh
