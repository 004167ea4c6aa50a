#pragma once

#include <string>
#include <vector>

#include "ceh/geodesics.hpp"
#include "ceh/numdiff.hpp"

namespace ceh {

enum class ScanQuantity { kretschmann, psi, spectrum, fprime, metric_deviation };

ScanQuantity parse_scan_quantity(const std::string& name);
std::string to_string(ScanQuantity q);
// Column names following the leading "u" column.
std::vector<std::string> scan_columns(ScanQuantity q);

struct ScanRow {
    double u = 0.0;
    std::vector<double> values;
};

// u_k = 10^(log10(u_min) + k (log10(u_max) - log10(u_min)) / (points - 1))
std::vector<double> log_grid(double u_min, double u_max, int points);

// Values of one radial quantity at u:
//   kretschmann       K
//   psi               psi, sqrt(psi), psi/u
//   spectrum          lambda1, lambda2, lambda3
//   fprime            f'
//   metric_deviation  max |g - delta| on the ray through (1, 0, ..., 0)
std::vector<double> scan_values(ScanQuantity q, double u, const GeometryParams& params);

// Compact outcome of one launch; the trajectory itself is dropped.
struct LaunchSummary {
    ClosedClass classification = ClosedClass::undetermined;
    Termination termination = Termination::completed;
    std::size_t steps = 0;
    std::size_t critical_points = 0;
    double min_certificate = 0.0;        // smallest closed-form u'' at a critical point
    double max_certificate_gap = 0.0;    // largest |closed-form u'' - flow u''|
    double max_energy_drift = 0.0;       // relative
    double min_return_distance = 0.0;
};

LaunchSummary summarize(const ClosedReport& report);

// Reference kernels: plain loops, one item after another.
namespace serial {
std::vector<PipelineReport> verify_points(const std::vector<QuotientPoint>& points,
                                          const GeometryParams& params, const PipelineConfig& cfg = {});
std::vector<ScanRow> radial_scan(ScanQuantity q, const std::vector<double>& grid,
                                 const GeometryParams& params);
std::vector<LaunchSummary> classify_launches(const std::vector<GeodesicState>& launches, double t_max,
                                             double tol, const GeometryParams& params);
}  // namespace serial

// OpenMP kernels; output order and values match the serial versions exactly.
namespace omp {
std::vector<PipelineReport> verify_points(const std::vector<QuotientPoint>& points,
                                          const GeometryParams& params, const PipelineConfig& cfg = {});
std::vector<ScanRow> radial_scan(ScanQuantity q, const std::vector<double>& grid,
                                 const GeometryParams& params);
std::vector<LaunchSummary> classify_launches(const std::vector<GeodesicState>& launches, double t_max,
                                             double tol, const GeometryParams& params);
}  // namespace omp

}  // namespace ceh
