#pragma once

#include <vector>

#include "ceh/tensors.hpp"

namespace ceh {

// Thrown when a radial profile has phi >= 1, i.e. the metric is degenerate.
class DegenerateMetricError : public DomainError {
public:
    using DomainError::DomainError;
};

// Holomorphic Christoffel symbols Gamma^lambda_{mu alpha}; mixed-type
// symbols vanish on a Kahler manifold and are not stored.
class ChristoffelTensor {
public:
    explicit ChristoffelTensor(int n) : n_(n), data_(static_cast<size_t>(n) * n * n) {}

    int dim() const { return n_; }
    cplx& operator()(int lam, int mu, int al) { return data_[index(lam, mu, al)]; }
    cplx operator()(int lam, int mu, int al) const { return data_[index(lam, mu, al)]; }

    const std::vector<cplx>& data() const { return data_; }
    std::vector<cplx>& data() { return data_; }
    double max_abs() const;
    // max |Gamma^l_{ma} - Gamma^l_{am}|
    double lower_symmetry_defect() const;

    ChristoffelTensor& operator+=(const ChristoffelTensor& o);
    ChristoffelTensor& operator-=(const ChristoffelTensor& o);
    ChristoffelTensor& operator*=(cplx s);

private:
    size_t index(int lam, int mu, int al) const {
        return (static_cast<size_t>(lam) * n_ + mu) * n_ + al;
    }
    int n_;
    std::vector<cplx> data_;
};

ChristoffelTensor operator+(ChristoffelTensor a, const ChristoffelTensor& b);
ChristoffelTensor operator-(ChristoffelTensor a, const ChristoffelTensor& b);
ChristoffelTensor operator*(cplx s, ChristoffelTensor a);

// Fully lowered curvature R_{mu nubar alpha betabar}.
class RiemannTensor {
public:
    explicit RiemannTensor(int n) : n_(n), data_(static_cast<size_t>(n) * n * n * n) {}

    int dim() const { return n_; }
    cplx& operator()(int mu, int nu, int al, int be) { return data_[index(mu, nu, al, be)]; }
    cplx operator()(int mu, int nu, int al, int be) const {
        return data_[index(mu, nu, al, be)];
    }

    const std::vector<cplx>& data() const { return data_; }
    double max_abs() const;
    // Largest violation of R_{mu nubar al bbar} = R_{al nubar mu bbar} = R_{mu bbar al nubar}
    // and R_{mu nubar al bbar} = conj(R_{nu mubar be albar}).
    double symmetry_defect() const;

private:
    size_t index(int mu, int nu, int al, int be) const {
        return ((static_cast<size_t>(mu) * n_ + nu) * n_ + al) * n_ + be;
    }
    int n_;
    std::vector<cplx> data_;
};

// Mixed curvature R^lambda_{mu betabar alpha}, stored (lambda, mu, beta, alpha).
using MixedRiemannTensor = RiemannTensor;

// Gamma^l_{mu al} = -(phi/u)(delta_mu^l zbar_al + delta_al^l zbar_mu)
//                  + [(phi(1-phi) - u phi')/(u(1-phi))] zbar_mu zbar_al z^l / u
ChristoffelTensor christoffel_rot_sym(const QuotientPoint& p, const RadialProfile& profile);

// Calabi-Eguchi-Hanson specialisation:
// Gamma^l_{mu al} = -a^n/(u(a^n+u^n)) (zbar_mu d^l_al + zbar_al d^l_mu - (n+1) zbar_al zbar_mu z^l/u)
ChristoffelTensor christoffel_ceh(const QuotientPoint& p, const GeometryParams& params);

RiemannTensor riemann(const QuotientPoint& p, const GeometryParams& params);

// R^lambda_{mu betabar alpha} in the intermediate form that still carries
// explicit deltas (before lambda is lowered). Tracing lambda = alpha gives Ricci.
MixedRiemannTensor riemann_mixed(const QuotientPoint& p, const GeometryParams& params);

// R_{mu betabar} = g^{nubar alpha} R_{mu nubar alpha betabar}.
HermitianForm ricci_contraction(const RiemannTensor& r, const HermitianForm& ginv);
HermitianForm ricci(const QuotientPoint& p, const GeometryParams& params);

// sum_lambda R^lambda_{mu betabar lambda}
CMatrix ricci_from_mixed_trace(const MixedRiemannTensor& mixed);

// n(n+2)(n^2-1) a^(2n) / (a^n+u^n)^(2(n+1)/n); finite at u = 0.
double kretschmann_u(double u, const GeometryParams& params);
double kretschmann(const QuotientPoint& p, const GeometryParams& params);

// |R|^2 by explicit contraction with four inverse metrics.
double kretschmann_contracted(const RiemannTensor& r, const HermitianForm& ginv);

}  // namespace ceh
