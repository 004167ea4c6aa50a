#include <doctest.h>

#include <cmath>
#include <random>

#include "ceh/geodesics.hpp"
#include "oracles.hpp"

using namespace ceh;

namespace {

CVector vec(std::initializer_list<cplx> v) {
    CVector out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index k = 0;
    for (cplx c : v) out[k++] = c;
    return out;
}

double max_energy_drift(const Trajectory& t) {
    const double e0 = t.samples.front().energy;
    double d = 0.0;
    for (const TrajectorySample& s : t.samples) d = std::max(d, std::abs(s.energy - e0) / e0);
    return d;
}

}  // namespace

TEST_CASE("geodesic acceleration") {
    const GeometryParams p(2, 1.0);
    const CVector acc = geodesic_rhs({vec({1.0, 0.0}), vec({1.0, 0.0})}, p);
    CHECK(std::abs(acc[0] + 0.5) < 1e-15);
    CHECK(std::abs(acc[1]) < 1e-15);
    // <z, v> = 0
    CHECK(geodesic_rhs({vec({1.0, cplx(0, 1)}), vec({cplx(0, 1), 1.0})}, p).norm() == 0.0);
    const CVector far = geodesic_rhs({vec({100.0, 0.0}), vec({1.0, 0.0})}, p);
    CHECK(far.norm() < 1e-8);
    CHECK_THROWS_AS(geodesic_rhs({vec({1e-5, 0.0}), vec({1.0, 0.0})}, p), InnerCutoffError);
}

TEST_CASE("energy is conserved") {
    std::mt19937_64 rng(42);
    for (int n : {2, 3}) {
        const GeometryParams p(n, 1.0);
        for (int k = 0; k < 10; ++k) {
            const GeodesicState s0 = random_launch(p, rng);
            const Trajectory t = integrate(s0, 10.0, 1e-10, p);
            REQUIRE(t.termination == Termination::completed);
            CHECK(max_energy_drift(t) < 1e-8);
            CHECK(max_energy_drift(t) <= 10 * 1e-10);
            CHECK(t.samples.back().t == 10.0);
            for (std::size_t i = 1; i < t.samples.size(); ++i) CHECK(t.samples[i].t > t.samples[i - 1].t);
        }
    }
}

TEST_CASE("radial data stays radial and grows distance linearly") {
    const GeometryParams p(3, 1.0);
    const CVector z0 = vec({cplx(0.3, 0.2), cplx(-0.1, 0.4), 0.25});
    const GeodesicState s0{z0, 0.7 * z0};
    const Trajectory t = integrate(s0, 5.0, 1e-11, p);
    REQUIRE(t.termination == Termination::completed);
    const double e = t.samples.front().energy;
    const double r0 = radial_arclength(radius_sq(z0), p).sqrt_psi;
    for (const TrajectorySample& s : t.samples) {
        for (int k = 0; k < 3; ++k) CHECK(std::abs(std::arg(s.state.z[k] / z0[k])) < 1e-9);
        CHECK(std::abs(radial_arclength(s.u, p).sqrt_psi - (r0 + std::sqrt(e) * s.t)) < 1e-6);
    }
}

TEST_CASE("geodesics are straight lines far out") {
    const GeometryParams p(2, 1.0);
    const CVector z0 = vec({cplx(70.0, 10.0), cplx(-60.0, 30.0)});
    const CVector v0 = vec({cplx(0.3, -0.5), cplx(0.6, 0.2)});
    const Trajectory t = integrate({z0, v0}, 1.0, 1e-12, p);
    for (const TrajectorySample& s : t.samples) {
        CHECK((s.state.z - (z0 + s.t * v0)).norm() < 1e-3);
    }
}

TEST_CASE("mu_n phase equivariance") {
    const GeometryParams p(3, 1.0);
    std::mt19937_64 rng(19);
    const GeodesicState s0 = random_launch(p, rng);
    const cplx w = root_of_unity(3);
    const Trajectory a = integrate(s0, 3.0, 1e-11, p);
    const Trajectory b = integrate({w * s0.z, w * s0.v}, 3.0, 1e-11, p);
    CHECK((b.samples.back().state.z - w * a.samples.back().state.z).norm() < 1e-8);
    CHECK((b.samples.back().state.v - w * a.samples.back().state.v).norm() < 1e-8);
}

TEST_CASE("radial arc length") {
    CHECK(radial_arclength(0.0, {2, 1.0}).psi == 0.0);
    CHECK_THROWS_AS(radial_arclength(-1.0, {2, 1.0}), DomainError);

    // Reference values computed independently at 20 digits.
    const ArcLength l = radial_arclength(1.0, {2, 1.0});
    CHECK(std::abs(l.sqrt_psi - 0.46874487537346810563) < 1e-14);
    CHECK(std::abs(radial_arclength(1.0, {3, 1.0}).sqrt_psi - 0.3060377769791937724) < 1e-14);
    CHECK(std::abs(radial_arclength(1.0, {2, 4.0}).sqrt_psi - 0.24872745113145885536) < 1e-14);
    CHECK(std::abs(radial_arclength(1e4, {2, 1.0}).psi / 1e4 - 0.98805448780987854539) < 1e-12);

    // Composite Simpson refinement of the original integrand.
    auto integrand = [](double tau) { return std::pow(tau * tau + 1.0, -0.25); };
    const double s1 = 0.5 * oracle::simpson(integrand, 0.0, 1.0, 200);
    const double s2 = 0.5 * oracle::simpson(integrand, 0.0, 1.0, 400);
    CHECK(std::abs(s1 - s2) < 1e-10);
    CHECK(std::abs(l.sqrt_psi - s2) < 1e-10);

    // psi(u)/u -> 1; the convergence is slow (about 1 - c/sqrt(u) for n = 2).
    CHECK(std::abs(radial_arclength(1e6, {2, 1.0}).psi / 1e6 - 1.0) < 1e-2);
    for (int n : {3, 4}) {
        CHECK(std::abs(radial_arclength(1e6, {n, 1.0}).psi / 1e6 - 1.0) < 1e-2);
    }
}

TEST_CASE("arc length derivative identity") {
    for (int n : {2, 3, 4}) {
        const GeometryParams p(n, 1.3);
        for (double u : {0.05, 0.5, 1.3, 4.0, 40.0}) {
            const double h = 1e-4 * u;
            const double fd = (radial_arclength(u + h, p).psi - radial_arclength(u - h, p).psi) / (2 * h);
            const ArcLength l = radial_arclength(u, p);
            const double closed =
                l.sqrt_psi / std::sqrt(u) * std::pow(one_minus_phi(u, p), (n - 1) / (2.0 * n));
            CHECK(std::abs(fd - closed) < 1e-8);
        }
    }
}

TEST_CASE("no closed geodesics off the zero section") {
    std::mt19937_64 rng(42);
    const GeometryParams p(2, 1.0);
    int escapes = 0, cutoff = 0, critical = 0;
    for (int k = 0; k < 100; ++k) {
        const ClosedReport r = classify_closed(random_launch(p, rng), 50.0, 1e-10, p);
        CHECK(r.classification != ClosedClass::returns_to_start);
        CHECK((r.classification == ClosedClass::escapes || r.classification == ClosedClass::hit_inner_cutoff));
        escapes += r.classification == ClosedClass::escapes;
        cutoff += r.classification == ClosedClass::hit_inner_cutoff;
        for (const CriticalPoint& cp : r.critical_points) {
            ++critical;
            CHECK(cp.u_ddot_certificate >= -1e-9);
            CHECK(std::abs(cp.u_ddot_certificate - cp.u_ddot_flow) < 1e-9 * std::max(1.0, cp.u_ddot_flow));
        }
    }
    CHECK(escapes + cutoff == 100);
    CHECK(critical > 0);
}

TEST_CASE("resting geodesic is constant") {
    const GeometryParams p(2, 1.0);
    const ClosedReport r = classify_closed({vec({1.0, 0.5}), CVector::Zero(2)}, 10.0, 1e-10, p);
    CHECK(r.classification == ClosedClass::constant);
    CHECK(r.trajectory.samples.size() == 1);
}

TEST_CASE("inner cutoff is reported") {
    const GeometryParams p(2, 1.0);
    // Radially inward: reaches the zero section in finite time.
    const CVector z0 = vec({0.5, 0.0});
    const Trajectory t = integrate({z0, -1.0 * z0}, 10.0, 1e-10, p);
    CHECK(t.termination == Termination::hit_inner_cutoff);
    const ClosedReport r = classify_closed({z0, -1.0 * z0}, 10.0, 1e-10, p);
    CHECK(r.classification == ClosedClass::hit_inner_cutoff);
}

TEST_CASE("zero-section geodesics close with length pi sqrt(a)") {
    CHECK(std::abs(oracle::great_circle_length(1.0) - M_PI) < 1e-6);
    CHECK(std::abs(oracle::great_circle_length(4.0) - 2 * M_PI) < 1e-6);

    for (double a : {1.0, 4.0}) {
        const GeometryParams p(2, a);
        const ZeroSectionOrbit o = zero_section_geodesic(vec({0.0}), vec({1.0 / std::sqrt(a)}), p);
        CHECK(o.closed);
        CHECK(std::abs(o.speed - 1.0) < 1e-15);
        CHECK(std::abs(o.length - M_PI * std::sqrt(a)) < 1e-6);
        CHECK(std::abs(o.length - oracle::great_circle_length(a)) < 1e-6);
        CHECK(o.chart_switches >= 1);
    }

    // Period does not depend on the direction.
    const GeometryParams p(2, 1.0);
    double lo = INFINITY, hi = -INFINITY;
    for (int k = 0; k < 10; ++k) {
        const ZeroSectionOrbit o = zero_section_geodesic(vec({0.0}), vec({std::polar(1.0, 0.6 * k)}), p);
        lo = std::min(lo, o.period);
        hi = std::max(hi, o.period);
    }
    CHECK(hi - lo < 1e-6);

    // Off-origin start and higher dimension.
    const GeometryParams p3(3, 2.0);
    const ZeroSectionOrbit o3 =
        zero_section_geodesic(vec({cplx(0.4, -0.2), 1.3}), vec({cplx(0.1, 0.3), -0.2}), p3, 1);
    CHECK(o3.closed);
    CHECK(std::abs(o3.length - M_PI * std::sqrt(2.0)) < 1e-6);

    CHECK_THROWS_AS(zero_section_geodesic(vec({0.0}), vec({0.0}), p), DomainError);
}
