#include "ceh/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ceh/hessian.hpp"

namespace ceh {

ScanQuantity parse_scan_quantity(const std::string& name) {
    if (name == "kretschmann") return ScanQuantity::kretschmann;
    if (name == "psi") return ScanQuantity::psi;
    if (name == "spectrum") return ScanQuantity::spectrum;
    if (name == "fprime") return ScanQuantity::fprime;
    if (name == "metric_deviation") return ScanQuantity::metric_deviation;
    throw std::invalid_argument("unknown scan quantity: " + name);
}

std::string to_string(ScanQuantity q) {
    switch (q) {
        case ScanQuantity::kretschmann: return "kretschmann";
        case ScanQuantity::psi: return "psi";
        case ScanQuantity::spectrum: return "spectrum";
        case ScanQuantity::fprime: return "fprime";
        case ScanQuantity::metric_deviation: return "metric_deviation";
    }
    return "unknown";
}

std::vector<std::string> scan_columns(ScanQuantity q) {
    switch (q) {
        case ScanQuantity::kretschmann: return {"K"};
        case ScanQuantity::psi: return {"psi", "sqrt_psi", "psi_over_u"};
        case ScanQuantity::spectrum: return {"lambda1", "lambda2", "lambda3"};
        case ScanQuantity::fprime: return {"fprime"};
        case ScanQuantity::metric_deviation: return {"max_abs_g_minus_delta"};
    }
    return {};
}

std::vector<double> log_grid(double u_min, double u_max, int points) {
    if (!(u_min > 0.0) || !(u_max > u_min) || points < 2) {
        throw std::invalid_argument("log_grid: need 0 < u_min < u_max and points >= 2");
    }
    const double l0 = std::log10(u_min);
    const double step = (std::log10(u_max) - l0) / (points - 1);
    std::vector<double> grid(points);
    for (int k = 0; k < points; ++k) grid[k] = std::pow(10.0, l0 + k * step);
    return grid;
}

std::vector<double> scan_values(ScanQuantity q, double u, const GeometryParams& params) {
    switch (q) {
        case ScanQuantity::kretschmann: return {kretschmann_u(u, params)};
        case ScanQuantity::psi: {
            const ArcLength len = radial_arclength(u, params);
            return {len.psi, len.sqrt_psi, len.psi / u};
        }
        case ScanQuantity::spectrum: {
            const HessianSpectrum s = hessian_spectrum_u(u, params);
            return {s.lambda1, s.lambda2, s.lambda3};
        }
        case ScanQuantity::fprime: return {f_prime(u, params)};
        case ScanQuantity::metric_deviation: {
            CVector z = CVector::Zero(params.n());
            z[0] = std::sqrt(u);
            return {metric_deviation(QuotientPoint(z), params).cwiseAbs().maxCoeff()};
        }
    }
    return {};
}

LaunchSummary summarize(const ClosedReport& report) {
    LaunchSummary s;
    s.classification = report.classification;
    s.termination = report.trajectory.termination;
    s.steps = report.trajectory.samples.size();
    s.critical_points = report.critical_points.size();
    s.min_certificate = std::numeric_limits<double>::infinity();
    for (const CriticalPoint& cp : report.critical_points) {
        s.min_certificate = std::min(s.min_certificate, cp.u_ddot_certificate);
        s.max_certificate_gap = std::max(s.max_certificate_gap,
                                         std::abs(cp.u_ddot_certificate - cp.u_ddot_flow));
    }
    if (report.critical_points.empty()) s.min_certificate = 0.0;
    const auto& samples = report.trajectory.samples;
    if (!samples.empty() && samples.front().energy > 0.0) {
        const double e0 = samples.front().energy;
        for (const TrajectorySample& t : samples) {
            s.max_energy_drift = std::max(s.max_energy_drift, std::abs(t.energy - e0) / e0);
        }
    }
    s.min_return_distance = report.min_return_distance;
    return s;
}

namespace serial {

std::vector<PipelineReport> verify_points(const std::vector<QuotientPoint>& points,
                                          const GeometryParams& params, const PipelineConfig& cfg) {
    std::vector<PipelineReport> out;
    out.reserve(points.size());
    for (const QuotientPoint& p : points) out.push_back(verify_pipeline(p, params, cfg));
    return out;
}

std::vector<ScanRow> radial_scan(ScanQuantity q, const std::vector<double>& grid,
                                 const GeometryParams& params) {
    std::vector<ScanRow> out;
    out.reserve(grid.size());
    for (double u : grid) out.push_back({u, scan_values(q, u, params)});
    return out;
}

std::vector<LaunchSummary> classify_launches(const std::vector<GeodesicState>& launches, double t_max,
                                             double tol, const GeometryParams& params) {
    std::vector<LaunchSummary> out;
    out.reserve(launches.size());
    for (const GeodesicState& s : launches) {
        out.push_back(summarize(classify_closed(s, t_max, tol, params)));
    }
    return out;
}

}  // namespace serial

namespace omp {

namespace {

// Runs body(i) for every index and rethrows the first exception on the caller.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
    std::exception_ptr error;
    const long long m = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < m; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(ceh_parallel_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<PipelineReport> verify_points(const std::vector<QuotientPoint>& points,
                                          const GeometryParams& params, const PipelineConfig& cfg) {
    std::vector<PipelineReport> out(points.size());
    parallel_for(points.size(), [&](std::size_t i) { out[i] = verify_pipeline(points[i], params, cfg); });
    return out;
}

std::vector<ScanRow> radial_scan(ScanQuantity q, const std::vector<double>& grid,
                                 const GeometryParams& params) {
    std::vector<ScanRow> out(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { out[i] = {grid[i], scan_values(q, grid[i], params)}; });
    return out;
}

std::vector<LaunchSummary> classify_launches(const std::vector<GeodesicState>& launches, double t_max,
                                             double tol, const GeometryParams& params) {
    std::vector<LaunchSummary> out(launches.size());
    parallel_for(launches.size(), [&](std::size_t i) {
        out[i] = summarize(classify_closed(launches[i], t_max, tol, params));
    });
    return out;
}

}  // namespace omp

}  // namespace ceh
