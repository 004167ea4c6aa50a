#pragma once

#include <limits>
#include <vector>

#include "ceh/tensors.hpp"

namespace ceh {

struct GeodesicState {
    CVector z;  // position, |z| > 0
    CVector v;  // dz/dt
};

// Raised by the flow when u drops below the inner cutoff.
class InnerCutoffError : public DomainError {
public:
    using DomainError::DomainError;
};

enum class Termination { completed, escaped, hit_inner_cutoff };

struct TrajectorySample {
    double t = 0.0;
    GeodesicState state;
    double u = 0.0;
    double energy = 0.0;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    Termination termination = Termination::completed;
};

struct FlowOptions {
    // Inner cutoff u_min = u_min_factor * a.
    double u_min_factor = 1e-8;
    // Trajectories with u above this stop with Termination::escaped.
    double u_escape = std::numeric_limits<double>::infinity();
    double initial_step = 1e-3;
};

// E = g_{mu nubar} v^mu conj(v^nu)
double energy(const GeodesicState& s, const GeometryParams& params);

// zddot^l = [a^n/(a^n+u^n)] (2 <z,zdot>/u zdot^l - (n+1) <z,zdot>^2/u^2 z^l),
// <z,w> = sum conj(z_mu) w^mu.
CVector geodesic_rhs(const GeodesicState& s, const GeometryParams& params,
                     const FlowOptions& options = {});

// Adaptive Dormand-Prince 5(4) integration of the geodesic equation with
// abs = rel = tol. One sample per accepted step plus the end point.
Trajectory integrate(const GeodesicState& s0, double t_end, double tol,
                     const GeometryParams& params, const FlowOptions& options = {});

// Squared distance psi(u) to the zero section along the radial geodesic,
//   sqrt(psi) = (sqrt(a)/n) int_0^{(u/a)^(n/2)} (tau^2+1)^(-(n-1)/(2n)) dtau.
struct ArcLength {
    double psi = 0.0;
    double sqrt_psi = 0.0;
};
ArcLength radial_arclength(double u, const GeometryParams& params);

enum class ClosedClass { constant, escapes, returns_to_start, hit_inner_cutoff, undetermined };

// A critical point T of u(t) along a numerical trajectory.
struct CriticalPoint {
    double t = 0.0;
    double u = 0.0;
    // <z, zdot>(T) = i alpha u(T)
    double alpha = 0.0;
    // 2(n-1) [a^n/(a^n+u^n)] u alpha^2 + 2 |zdot|^2
    double u_ddot_certificate = 0.0;
    // 2 Re <z, zddot> + 2 |zdot|^2 with zddot from geodesic_rhs
    double u_ddot_flow = 0.0;
};

struct ClosedReport {
    ClosedClass classification = ClosedClass::undetermined;
    Trajectory trajectory;
    std::vector<CriticalPoint> critical_points;
    // Smallest max(|z - z0|, |v - v0|) seen after leaving the start.
    double min_return_distance = std::numeric_limits<double>::infinity();
};

struct ClosedOptions {
    FlowOptions flow;
    // Position and velocity must both match within this to count as a return.
    double return_tol = 1e-6;
    // Velocities below this norm are treated as the constant geodesic.
    double rest_speed = 1e-14;
};

ClosedReport classify_closed(const GeodesicState& s0, double t_max, double tol,
                             const GeometryParams& params, const ClosedOptions& options = {});

// Geodesic of a * g_FS on the zero section, integrated in affine charts with
// chart switches when a homogeneous coordinate outgrows the current one.
struct ZeroSectionSample {
    double t = 0.0;
    int chart = 0;
    CVector zeta;
    CVector dzeta;
};

struct ZeroSectionOrbit {
    std::vector<ZeroSectionSample> samples;
    bool closed = false;
    double period = 0.0;
    double speed = 0.0;   // sqrt(a g_FS(dzeta0, dzeta0)), constant along the flow
    double length = 0.0;  // period * speed
    int chart_switches = 0;
};

ZeroSectionOrbit zero_section_geodesic(const CVector& zeta0, const CVector& dzeta0,
                                       const GeometryParams& params, int chart = 0,
                                       double tol = 1e-12, double t_max = 0.0);

// Seeded launch: random_point position and a complex Gaussian velocity.
GeodesicState random_launch(const GeometryParams& params, std::mt19937_64& rng);

// Fubini-Study-type profile e^psi = a/(a+u), phi = u/(a+u), phi' = a/(a+u)^2.
RadialProfile fubini_study_profile(double u, double a);

}  // namespace ceh
