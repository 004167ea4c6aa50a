#pragma once

#include <functional>
#include <string>
#include <type_traits>
#include <vector>

#include "ceh/curvature.hpp"

namespace ceh {

enum class FDScheme { central2, central4 };

// Step h = step * max(1, |z|) when relative, otherwise h = step.
struct FDConfig {
    double step = 1e-5;
    FDScheme scheme = FDScheme::central2;
    bool relative = true;

    double step_at(const CVector& z) const;
};

inline FDConfig first_derivative_config() { return {1e-5, FDScheme::central2, true}; }
inline FDConfig second_derivative_config() { return {1e-3, FDScheme::central4, true}; }

namespace detail {

// Scalars become cplx, Eigen expressions are evaluated into a CMatrix.
template <class T>
auto as_complex(const T& v) {
    if constexpr (std::is_arithmetic_v<T> || std::is_same_v<T, cplx>) {
        return cplx(v);
    } else {
        return CMatrix(v.template cast<cplx>());
    }
}

template <class F>
auto directional(const F& field, const CVector& z, const CVector& dir, double h) {
    using R = decltype(as_complex(field(z)));
    return R(as_complex(field(CVector(z + h * dir)) - field(CVector(z - h * dir))) *
             cplx(1.0 / (2.0 * h)));
}

template <class F>
auto second_directional(const F& field, const CVector& z, const CVector& e, const CVector& f,
                        double h) {
    const auto pp = field(CVector(z + h * e + h * f));
    const auto pm = field(CVector(z + h * e - h * f));
    const auto mp = field(CVector(z - h * e + h * f));
    const auto mm = field(CVector(z - h * e - h * f));
    using R = decltype(as_complex(pp));
    return R(as_complex(pp - pm - mp + mm) * cplx(1.0 / (4.0 * h * h)));
}

template <class D>
auto richardson(const D& d, double h, FDScheme scheme) {
    using R = decltype(d(h));
    if (scheme == FDScheme::central2) return R(d(h));
    return R((R(d(h)) * cplx(4.0) - R(d(2.0 * h))) * cplx(1.0 / 3.0));
}

inline CVector unit(int n, int mu, cplx scale) {
    CVector e = CVector::Zero(n);
    e[mu] = scale;
    return e;
}

}  // namespace detail

// d/dz^mu = (d/dx - i d/dy)/2, or d/dzbar^mu = (d/dx + i d/dy)/2 when conjugate.
// field maps a complex n-vector to a scalar (double or cplx) or an Eigen matrix.
template <class F>
auto wirtinger_partial(const F& field, const CVector& z, int mu, bool conjugate,
                       const FDConfig& cfg = {}) {
    const int n = static_cast<int>(z.size());
    const double h = cfg.step_at(z);
    const CVector ex = detail::unit(n, mu, 1.0);
    const CVector ey = detail::unit(n, mu, cplx(0.0, 1.0));
    auto dx = detail::richardson([&](double s) { return detail::directional(field, z, ex, s); }, h,
                                 cfg.scheme);
    auto dy = detail::richardson([&](double s) { return detail::directional(field, z, ey, s); }, h,
                                 cfg.scheme);
    const cplx sgn = conjugate ? cplx(0.0, 1.0) : cplx(0.0, -1.0);
    using R = decltype(dx);
    return R((dx + dy * sgn) * cplx(0.5));
}

// d^2/(dz^mu dzbar^nu) = 1/4 [(dxmu dxnu + dymu dynu) + i (dxmu dynu - dymu dxnu)]
template <class F>
auto mixed_partial(const F& field, const CVector& z, int mu, int nu,
                   const FDConfig& cfg = second_derivative_config()) {
    const int n = static_cast<int>(z.size());
    const double h = cfg.step_at(z);
    const CVector xm = detail::unit(n, mu, 1.0), ym = detail::unit(n, mu, cplx(0.0, 1.0));
    const CVector xn = detail::unit(n, nu, 1.0), yn = detail::unit(n, nu, cplx(0.0, 1.0));
    auto d = [&](const CVector& e, const CVector& f) {
        return detail::richardson(
            [&](double s) { return detail::second_directional(field, z, e, f, s); }, h, cfg.scheme);
    };
    using R = decltype(d(xm, xn));
    const cplx i(0.0, 1.0);
    return R((d(xm, xn) + d(ym, yn) + (d(xm, yn) - d(ym, xn)) * i) * cplx(0.25));
}

// d^2/(dz^mu dz^nu) = 1/4 [(dxmu dxnu - dymu dynu) - i (dxmu dynu + dymu dxnu)]
template <class F>
auto holomorphic_second_partial(const F& field, const CVector& z, int mu, int nu,
                                const FDConfig& cfg = second_derivative_config()) {
    const int n = static_cast<int>(z.size());
    const double h = cfg.step_at(z);
    const CVector xm = detail::unit(n, mu, 1.0), ym = detail::unit(n, mu, cplx(0.0, 1.0));
    const CVector xn = detail::unit(n, nu, 1.0), yn = detail::unit(n, nu, cplx(0.0, 1.0));
    auto d = [&](const CVector& e, const CVector& f) {
        return detail::richardson(
            [&](double s) { return detail::second_directional(field, z, e, f, s); }, h, cfg.scheme);
    };
    using R = decltype(d(xm, xn));
    const cplx i(0.0, 1.0);
    return R((d(xm, xn) - d(ym, yn) - (d(xm, yn) + d(ym, xn)) * i) * cplx(0.25));
}

// The closed-form pipeline under test. Each member can be swapped out, which
// is how the negative controls inject faults.
struct MetricModel {
    std::function<double(const CVector&)> potential;
    std::function<CMatrix(const CVector&)> metric;
    std::function<ChristoffelTensor(const CVector&)> christoffel;
    std::function<RiemannTensor(const CVector&)> riemann;
    std::function<double(const CVector&)> kretschmann;

    static MetricModel calabi_eguchi_hanson(const GeometryParams& params);
};

struct ResidualCheck {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct PipelineReport {
    std::vector<ResidualCheck> checks;

    bool passed() const;
    const ResidualCheck& at(const std::string& name) const;
};

struct PipelineConfig {
    FDConfig first = first_derivative_config();
    FDConfig second = second_derivative_config();
};

// Compares every closed-form quantity of the model against finite differences
// of the model's own lower-level quantity:
//   metric             g vs ddbar f                          1e-6
//   christoffel        Gamma vs (d_alpha g) g^-1             1e-6
//   riemann            R vs -d_al d_bbar g + g^-1 dg dbar g  1e-5
//   ricci_contraction  |g^{nubar al} R_{mu nubar al bbar}|   1e-9
//   ricci_logdet       |ddbar log det g|                     1e-5
//   det                |det g - 1|                           1e-12
//   kretschmann        relative |K_contracted - K|           1e-9
PipelineReport verify_pipeline(const QuotientPoint& p, const MetricModel& model,
                               const PipelineConfig& cfg = {});
PipelineReport verify_pipeline(const QuotientPoint& p, const GeometryParams& params,
                               const PipelineConfig& cfg = {});

}  // namespace ceh
