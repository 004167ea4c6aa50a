#include "ceh/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

#include "ceh/charts.hpp"
#include "ceh/curvature.hpp"

namespace ceh {

namespace {

namespace odeint = boost::numeric::odeint;
using State = std::vector<double>;
using Stepper = odeint::runge_kutta_dopri5<State>;
using DenseStepper = odeint::dense_output_runge_kutta<odeint::controlled_runge_kutta<Stepper>>;

// Packs (z, v) as [Re z, Im z, Re v, Im v].
State pack(const CVector& z, const CVector& v) {
    const int n = static_cast<int>(z.size());
    State x(4 * n);
    for (int i = 0; i < n; ++i) {
        x[i] = z[i].real();
        x[n + i] = z[i].imag();
        x[2 * n + i] = v[i].real();
        x[3 * n + i] = v[i].imag();
    }
    return x;
}

void unpack(const State& x, CVector& z, CVector& v) {
    const int n = static_cast<int>(x.size()) / 4;
    z.resize(n);
    v.resize(n);
    for (int i = 0; i < n; ++i) {
        z[i] = {x[i], x[n + i]};
        v[i] = {x[2 * n + i], x[3 * n + i]};
    }
}

cplx inner(const CVector& a, const CVector& b) { return a.dot(b); }  // sum conj(a) b

double u_dot(const State& x) {
    CVector z, v;
    unpack(x, z, v);
    return 2.0 * inner(z, v).real();
}

// Solves for t in [lo, hi] with f(lo) and f(hi) of opposite sign.
double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * std::abs(hi);
         ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

TrajectorySample make_sample(double t, const State& x, const GeometryParams& params) {
    TrajectorySample s;
    s.t = t;
    unpack(x, s.state.z, s.state.v);
    s.u = radius_sq(s.state.z);
    s.energy = energy(s.state, params);
    return s;
}

struct Flow {
    const GeometryParams& params;
    const FlowOptions& options;
    void operator()(const State& x, State& dxdt, double /*t*/) const {
        GeodesicState s;
        unpack(x, s.z, s.v);
        const CVector acc = geodesic_rhs(s, params, options);
        const int n = static_cast<int>(s.z.size());
        dxdt.resize(x.size());
        for (int i = 0; i < n; ++i) {
            dxdt[i] = x[2 * n + i];
            dxdt[n + i] = x[3 * n + i];
            dxdt[2 * n + i] = acc[i].real();
            dxdt[3 * n + i] = acc[i].imag();
        }
    }
};

// Drives a dense-output integration of the geodesic flow; on_step sees each
// accepted step and may stop the run by returning false.
template <class OnStep>
Termination run_flow(const GeodesicState& s0, double t_end,
                     const GeometryParams& params, const FlowOptions& options,
                     DenseStepper& dense, OnStep&& on_step) {
    Flow flow{params, options};
    const double u_min = options.u_min_factor * params.a();
    dense.initialize(pack(s0.z, s0.v), 0.0, std::min(options.initial_step, t_end));
    try {
        while (dense.current_time() < t_end) {
            dense.do_step(std::ref(flow));
            CVector z, v;
            unpack(dense.current_state(), z, v);
            const double u = radius_sq(z);
            if (u < u_min) return Termination::hit_inner_cutoff;
            if (!on_step(dense)) return Termination::completed;
            if (u > options.u_escape) return Termination::escaped;
        }
    } catch (const InnerCutoffError&) {
        return Termination::hit_inner_cutoff;
    } catch (const odeint::step_adjustment_error&) {
        return Termination::hit_inner_cutoff;
    }
    return Termination::completed;
}

DenseStepper make_dense(double tol) {
    return odeint::make_dense_output(tol, tol, Stepper());
}

}  // namespace

RadialProfile fubini_study_profile(double u, double a) {
    RadialProfile p;
    p.u = u;
    p.e_psi = a / (a + u);
    p.phi = u / (a + u);
    p.dphi = a / ((a + u) * (a + u));
    return p;
}

GeodesicState random_launch(const GeometryParams& params, std::mt19937_64& rng) {
    GeodesicState s;
    s.z = random_point(params, rng).z();
    std::normal_distribution<double> gauss(0.0, 1.0);
    s.v.resize(params.n());
    for (int i = 0; i < params.n(); ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        s.v[i] = cplx(re, im);
    }
    return s;
}

double energy(const GeodesicState& s, const GeometryParams& params) {
    const CMatrix g = metric(QuotientPoint(s.z), params).matrix();
    // g_{mu nubar} v^mu conj(v^nu) = v^T g conj(v)
    return (s.v.transpose() * g * s.v.conjugate())(0, 0).real();
}

CVector geodesic_rhs(const GeodesicState& s, const GeometryParams& params,
                     const FlowOptions& options) {
    const int n = params.n();
    if (s.z.size() != n || s.v.size() != n) {
        throw std::invalid_argument("geodesic_rhs: state dimension does not match n");
    }
    const double u = radius_sq(s.z);
    if (!(u >= options.u_min_factor * params.a())) {
        throw InnerCutoffError("geodesic_rhs: u below the inner cutoff");
    }
    const cplx w = inner(s.z, s.v);
    const double ph = phi(u, params);
    return ph * ((2.0 * w / u) * s.v - (static_cast<double>(n + 1) * w * w / (u * u)) * s.z);
}

Trajectory integrate(const GeodesicState& s0, double t_end, double tol,
                     const GeometryParams& params, const FlowOptions& options) {
    if (!(t_end > 0.0) || !(tol > 0.0)) {
        throw std::invalid_argument("integrate: t_end and tol must be positive");
    }
    (void)geodesic_rhs(s0, params, options);
    Trajectory traj;
    traj.samples.push_back(make_sample(0.0, pack(s0.z, s0.v), params));
    DenseStepper dense = make_dense(tol);
    traj.termination = run_flow(s0, t_end, params, options, dense, [&](DenseStepper& d) {
        if (d.current_time() <= t_end) {
            traj.samples.push_back(make_sample(d.current_time(), d.current_state(), params));
        } else {
            State x(4 * params.n());
            d.calc_state(t_end, x);
            traj.samples.push_back(make_sample(t_end, x, params));
        }
        return true;
    });
    return traj;
}

ArcLength radial_arclength(double u, const GeometryParams& params) {
    if (!(u >= 0.0)) throw DomainError("radial_arclength: requires u >= 0");
    ArcLength out;
    if (u == 0.0) return out;
    const int n = params.n();
    const double a = params.a();
    const double x = u / a;
    // tau = sinh(s) turns the integrand into cosh(s)^(1/n).
    const double upper = x < 1e100 ? std::asinh(std::pow(x, 0.5 * n))
                                   : std::log(2.0) + 0.5 * n * std::log(x);
    // Integrate over t = s / upper in [0, 1], where the integrand is >= 1.
    auto integrand = [n, upper](double t) { return std::pow(std::cosh(upper * t), 1.0 / n); };
    double err = 0.0;
    const double integral = upper * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
                                        integrand, 0.0, 1.0, 15, 1e-14, &err);
    out.sqrt_psi = std::sqrt(a) / n * integral;
    out.psi = out.sqrt_psi * out.sqrt_psi;
    return out;
}

ClosedReport classify_closed(const GeodesicState& s0, double t_max, double tol,
                             const GeometryParams& params, const ClosedOptions& options) {
    if (!(t_max > 0.0) || !(tol > 0.0)) {
        throw std::invalid_argument("classify_closed: t_max and tol must be positive");
    }
    ClosedReport report;
    if (s0.v.norm() <= options.rest_speed) {
        (void)geodesic_rhs(s0, params, options.flow);
        report.classification = ClosedClass::constant;
        report.trajectory.samples.push_back(make_sample(0.0, pack(s0.z, s0.v), params));
        return report;
    }
    const int n = params.n();
    (void)geodesic_rhs(s0, params, options.flow);
    Trajectory& traj = report.trajectory;
    traj.samples.push_back(make_sample(0.0, pack(s0.z, s0.v), params));

    bool returned = false;
    bool left_start = false;
    DenseStepper dense = make_dense(tol);
    State x(4 * n);
    auto distance_to_start = [&](const State& y) {
        CVector z, v;
        unpack(y, z, v);
        return std::max((z - s0.z).lpNorm<Eigen::Infinity>(), (v - s0.v).lpNorm<Eigen::Infinity>());
    };

    traj.termination = run_flow(s0, t_max, params, options.flow, dense, [&](DenseStepper& d) {
        const double t0 = d.previous_time();
        const double t1 = std::min(d.current_time(), t_max);
        if (t1 < d.current_time()) {
            d.calc_state(t1, x);
        } else {
            x = d.current_state();
        }
        traj.samples.push_back(make_sample(t1, x, params));

        // Critical points of u: sign change of du/dt = 2 Re <z, zdot>.
        const double d0 = u_dot(d.previous_state());
        const double d1 = u_dot(x);
        if ((d0 < 0.0 && d1 >= 0.0) || (d0 > 0.0 && d1 <= 0.0)) {
            State y(4 * n);
            const double tc = bisect(
                [&](double t) {
                    d.calc_state(t, y);
                    return u_dot(y);
                },
                t0, t1);
            d.calc_state(tc, y);
            GeodesicState s;
            unpack(y, s.z, s.v);
            CriticalPoint cp;
            cp.t = tc;
            cp.u = radius_sq(s.z);
            cp.alpha = inner(s.z, s.v).imag() / cp.u;
            cp.u_ddot_certificate =
                2.0 * (n - 1) * phi(cp.u, params) * cp.u * cp.alpha * cp.alpha + 2.0 * s.v.squaredNorm();
            const CVector acc = geodesic_rhs(s, params, options.flow);
            cp.u_ddot_flow = 2.0 * inner(s.z, acc).real() + 2.0 * s.v.squaredNorm();
            report.critical_points.push_back(cp);
        }

        const double dist = distance_to_start(x);
        if (!left_start) {
            left_start = dist > 10.0 * options.return_tol;
        } else {
            report.min_return_distance = std::min(report.min_return_distance, dist);
            if (dist < options.return_tol) returned = true;
        }
        return !returned;
    });

    if (returned) {
        report.classification = ClosedClass::returns_to_start;
    } else if (traj.termination == Termination::hit_inner_cutoff) {
        report.classification = ClosedClass::hit_inner_cutoff;
    } else if (traj.termination == Termination::escaped) {
        report.classification = ClosedClass::escapes;
    } else {
        // u(t) has no interior maximum, so once it increases it keeps increasing.
        const State end = pack(traj.samples.back().state.z, traj.samples.back().state.v);
        report.classification = u_dot(end) > 0.0 ? ClosedClass::escapes : ClosedClass::undetermined;
    }
    return report;
}

ZeroSectionOrbit zero_section_geodesic(const CVector& zeta0, const CVector& dzeta0,
                                       const GeometryParams& params, int chart, double tol,
                                       double t_max) {
    const int n = params.n();
    const int m = n - 1;
    if (zeta0.size() != m || dzeta0.size() != m) {
        throw std::invalid_argument("zero_section_geodesic: zeta must have n-1 entries");
    }
    if (chart < 0 || chart >= n) throw std::invalid_argument("zero_section_geodesic: bad chart");
    const double fs_speed_sq =
        (dzeta0.transpose() * fubini_study(zeta0).matrix() * dzeta0.conjugate())(0, 0).real();
    if (!(fs_speed_sq > 0.0)) throw DomainError("zero_section_geodesic: dzeta0 must be nonzero");

    ZeroSectionOrbit orbit;
    orbit.speed = std::sqrt(params.a() * fs_speed_sq);
    if (t_max <= 0.0) t_max = 4.0 * M_PI / std::sqrt(fs_speed_sq);

    auto homogeneous = [n](int c, const CVector& zeta) {
        ChartPoint p{c, 0.0, zeta};
        return p.homogeneous();
    };
    auto homogeneous_velocity = [n](int c, const CVector& dzeta) {
        CVector dxi = CVector::Zero(n);
        for (int k = 0, s = 0; k < n; ++k) {
            if (k != c) dxi[k] = dzeta[s++];
        }
        return dxi;
    };
    const CVector xi0 = homogeneous(chart, zeta0);
    const double xi0_sq = xi0.squaredNorm();

    // d(t) = |<xi0, xi>|^2 / (|xi0|^2 |xi|^2) equals 1 exactly when [xi] = [xi0].
    auto overlap = [&](int c, const CVector& zeta, const CVector& dzeta, double& deriv) {
        const CVector xi = homogeneous(c, zeta);
        const CVector dxi = homogeneous_velocity(c, dzeta);
        const cplx p = inner(xi0, xi);
        const cplx dp = inner(xi0, dxi);
        const double q = xi.squaredNorm();
        const double dq = 2.0 * inner(xi, dxi).real();
        const double num = std::norm(p);
        deriv = (2.0 * (std::conj(p) * dp).real() * q - num * dq) / (xi0_sq * q * q);
        return num / (xi0_sq * q);
    };

    // Geodesics of a g_FS coincide with those of g_FS.
    auto fs_rhs = [m](const State& x, State& dxdt, double) {
        CVector z, v;
        unpack(x, z, v);
        CVector acc = CVector::Zero(m);
        const double u = radius_sq(z);
        if (u > 0.0) {
            const ChristoffelTensor gamma =
                christoffel_rot_sym(QuotientPoint(z), fubini_study_profile(u, 1.0));
            for (int l = 0; l < m; ++l)
                for (int mu = 0; mu < m; ++mu)
                    for (int al = 0; al < m; ++al) acc[l] -= gamma(l, mu, al) * v[mu] * v[al];
        }
        dxdt.resize(x.size());
        for (int i = 0; i < m; ++i) {
            dxdt[i] = x[2 * m + i];
            dxdt[m + i] = x[3 * m + i];
            dxdt[2 * m + i] = acc[i].real();
            dxdt[3 * m + i] = acc[i].imag();
        }
    };

    int c = chart;
    DenseStepper dense = make_dense(tol);
    dense.initialize(pack(zeta0, dzeta0), 0.0, 1e-3);
    orbit.samples.push_back({0.0, c, zeta0, dzeta0});
    bool dipped = false;
    double prev_deriv = 0.0;
    {
        double dd = 0.0;
        overlap(c, zeta0, dzeta0, dd);
        prev_deriv = dd;
    }

    while (dense.current_time() < t_max) {
        dense.do_step(fs_rhs);
        CVector zeta, dzeta;
        unpack(dense.current_state(), zeta, dzeta);
        const double t1 = dense.current_time();
        orbit.samples.push_back({t1, c, zeta, dzeta});

        double deriv = 0.0;
        const double d = overlap(c, zeta, dzeta, deriv);
        if (dipped && prev_deriv > 0.0 && deriv <= 0.0) {
            State y(4 * m);
            const double tc = bisect(
                [&](double t) {
                    dense.calc_state(t, y);
                    CVector zz, vv;
                    unpack(y, zz, vv);
                    double dd = 0.0;
                    overlap(c, zz, vv, dd);
                    return dd;
                },
                dense.previous_time(), t1);
            dense.calc_state(tc, y);
            CVector zz, vv;
            unpack(y, zz, vv);
            double dd = 0.0;
            const double dmax = overlap(c, zz, vv, dd);
            orbit.closed = dmax > 1.0 - 1e-8;
            orbit.period = tc;
            orbit.length = tc * orbit.speed;
            break;
        }
        if (d < 0.5) dipped = true;
        prev_deriv = deriv;

        // Switch to the chart of the largest homogeneous coordinate once the
        // affine coordinates grow.
        if (zeta.lpNorm<Eigen::Infinity>() > 2.0) {
            const CVector xi = homogeneous(c, zeta);
            const CVector dxi = homogeneous_velocity(c, dzeta);
            int j = 0;
            xi.cwiseAbs().maxCoeff(&j);
            CVector nz(m), nv(m);
            for (int k = 0, s = 0; k < n; ++k) {
                if (k == j) continue;
                nz[s] = xi[k] / xi[j];
                nv[s] = (dxi[k] * xi[j] - xi[k] * dxi[j]) / (xi[j] * xi[j]);
                ++s;
            }
            c = j;
            ++orbit.chart_switches;
            dense.initialize(pack(nz, nv), t1, dense.current_time_step());
        }
    }
    return orbit;
}

}  // namespace ceh
