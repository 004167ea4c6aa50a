#pragma once

#include <random>

#include "ceh/core.hpp"

namespace ceh {

// A point of (C^n \ {0}) / mu_n, stored as one lift z. Every quantity
// evaluated from it is invariant under z -> zeta z, zeta in mu_n.
class QuotientPoint {
public:
    explicit QuotientPoint(CVector z);

    const CVector& z() const { return z_; }
    int dim() const { return static_cast<int>(z_.size()); }
    double u() const { return u_; }

private:
    CVector z_;
    double u_;
};

// n x n complex Hermitian matrix of a metric-type tensor g_{mu nubar}
// (row mu, column nubar). The inverse metric g^{nubar lambda} uses the
// same storage with row nubar, column lambda.
class HermitianForm {
public:
    HermitianForm() = default;
    explicit HermitianForm(CMatrix entries) : m_(std::move(entries)) {}

    int dim() const { return static_cast<int>(m_.rows()); }
    cplx operator()(int row, int col) const { return m_(row, col); }
    const CMatrix& matrix() const { return m_; }

    // max |m(i,j) - conj(m(j,i))|
    double hermiticity_defect() const;
    double min_eigenvalue() const;
    cplx determinant() const;

    // Real symmetric form on (Re x_1, Im x_1, Re x_2, Im x_2, ...) with
    // ds^2 = sum h_{AB} dx^A conj(dx^B).
    Eigen::MatrixXd to_real() const;

private:
    CMatrix m_;
};

// g_{mu nubar} = e^psi (delta_{mu nu} - phi zbar_mu z_nu / u).
HermitianForm metric(const QuotientPoint& p, const GeometryParams& params);

// g^{nubar lambda} = e^-psi (delta + (phi/(1-phi)) zbar^nu z^lambda / u).
HermitianForm metric_inverse(const QuotientPoint& p, const GeometryParams& params);

// g - delta without cancellation, accurate where g is within rounding of the identity.
CMatrix metric_deviation(const QuotientPoint& p, const GeometryParams& params);

// Same closed form for an arbitrary rotationally symmetric profile.
HermitianForm rot_sym_metric(const CVector& z, const RadialProfile& profile);

// Fubini-Study metric in affine coordinates zeta in C^(n-1):
//   ((1+|zeta|^2) delta_kl - zetabar_k zeta_l) / (1+|zeta|^2)^2
HermitianForm fubini_study(const CVector& zeta);

// Max-norm of g_{alpha^2 a}(alpha z) - g_a(z); zero for an exact homothety.
double homothety_pullback_check(const QuotientPoint& p, double alpha,
                                const GeometryParams& params);

// Complex Gaussian lift with |z| >= 1e-3 a (rejection sampling).
QuotientPoint random_point(const GeometryParams& params, std::mt19937_64& rng);

}  // namespace ceh
