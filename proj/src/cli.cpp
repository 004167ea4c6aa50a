#include "ceh/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "ceh/charts.hpp"
#include "ceh/curvature.hpp"
#include "ceh/geodesics.hpp"
#include "ceh/hessian.hpp"
#include "ceh/io.hpp"
#include "ceh/numdiff.hpp"
#include "ceh/parallel.hpp"
#include "ceh/volform.hpp"

namespace ceh::cli {

namespace {

using nlohmann::json;

constexpr int kSchema = 1;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    int n = 2;
    double a = 1.0;
    std::uint64_t seed = 42;
    double tol = 1e-10;
    std::string format;
    std::string output;

    GeometryParams params() const { return {n, a}; }
};

void validate(const RunConfig& cfg) {
    if (cfg.n < 2) throw UsageError("--n must be >= 2");
    if (!(cfg.a > 0.0)) throw UsageError("--a must be > 0");
    if (!(cfg.tol > 0.0)) throw UsageError("--tol must be > 0");
    if (!cfg.format.empty() && cfg.format != "json" && cfg.format != "csv") {
        throw UsageError("--format must be json or csv");
    }
}

std::string format_or(const RunConfig& cfg, const std::string& fallback) {
    return cfg.format.empty() ? fallback : cfg.format;
}

json header(const std::string& command, const RunConfig& cfg) {
    return json{{"schema", kSchema}, {"command", command}, {"n", cfg.n}, {"a", cfg.a}};
}

std::string to_string(ClosedClass c) {
    switch (c) {
        case ClosedClass::constant: return "constant";
        case ClosedClass::escapes: return "escapes";
        case ClosedClass::returns_to_start: return "returns_to_start";
        case ClosedClass::hit_inner_cutoff: return "hit_inner_cutoff";
        case ClosedClass::undetermined: return "undetermined";
    }
    return "undetermined";
}

std::string to_string(Termination t) {
    switch (t) {
        case Termination::completed: return "completed";
        case Termination::escaped: return "escaped";
        case Termination::hit_inner_cutoff: return "hit_inner_cutoff";
    }
    return "completed";
}

// ---- eval -------------------------------------------------------------

json spectrum_json(const HessianSpectrum& s) {
    return json{{"lambda1", s.lambda1}, {"lambda2", s.lambda2}, {"lambda3", s.lambda3},
                {"Upsilon", s.Upsilon}, {"A", s.A},             {"B", s.B}};
}

void quotient_bundle(json& doc, const QuotientPoint& p, const GeometryParams& params) {
    const HermitianForm g = metric(p, params);
    const HermitianForm ginv = metric_inverse(p, params);
    const RiemannTensor r = riemann(p, params);
    const ArcLength len = radial_arclength(p.u(), params);
    io::put(doc, "z", io::to_json(p.z()));
    doc["u"] = p.u();
    io::put(doc, "g", io::to_json(g.matrix()));
    io::put(doc, "g_inv", io::to_json(ginv.matrix()));
    doc["det_g"] = g.determinant().real();
    io::put(doc, "christoffel", io::to_json(christoffel_ceh(p, params)));
    io::put(doc, "riemann", io::to_json(r));
    io::put(doc, "ricci", io::to_json(ricci_contraction(r, ginv).matrix()));
    doc["kretschmann"] = kretschmann(p, params);
    doc["kretschmann_contracted"] = kretschmann_contracted(r, ginv);
    doc["psi"] = len.psi;
    doc["sqrt_psi"] = len.sqrt_psi;
    doc["spectrum"] = spectrum_json(hessian_spectrum(p, params));
}

json cmd_eval(const RunConfig& cfg, const std::string& point, const std::string& chart) {
    if (point.empty() == chart.empty()) throw UsageError("eval needs exactly one of --point or --chart");
    const GeometryParams params = cfg.params();
    json doc = header("eval", cfg);
    if (!point.empty()) {
        const CVector z = io::parse_complex_vector(point);
        if (z.size() != cfg.n) {
            throw UsageError("--point has " + std::to_string(z.size()) + " entries, expected " +
                             std::to_string(cfg.n));
        }
        doc["zero_section"] = false;
        quotient_bundle(doc, QuotientPoint(z), params);
        return doc;
    }

    const ChartPoint cp = io::parse_chart_point(chart, cfg.n);
    const PullbackMetric pm = pullback_metric(cp, params);
    doc["chart"] = cp.chart + 1;
    io::put(doc, "chart_z", io::to_json(CVector(CVector::Constant(1, cp.z))));
    io::put(doc, "chart_zeta", io::to_json(cp.zeta));
    io::put(doc, "pullback_metric", io::to_json(pm.assembled().matrix()));
    io::put(doc, "base_block", io::to_json(pm.base_block));
    doc["fiber_block"] = pm.block_zz;
    doc["volform_coefficient"] = chart_pullback_volform(cp, params).real();
    const BlowDownImage image = chart_to_quotient(cp, params);
    if (const auto* q = std::get_if<QuotientPoint>(&image)) {
        doc["zero_section"] = false;
        quotient_bundle(doc, *q, params);
    } else {
        doc["zero_section"] = true;
        doc["u"] = 0.0;
        doc["kretschmann"] = kretschmann_u(0.0, params);
        doc["psi"] = 0.0;
        doc["sqrt_psi"] = 0.0;
        io::put(doc, "xi", io::to_json(std::get<ZeroSectionPoint>(image).xi));
    }
    return doc;
}

// ---- verify -----------------------------------------------------------

struct CheckAccumulator {
    std::vector<std::string> order;
    std::map<std::string, ResidualCheck> checks;

    void add(const std::string& name, double residual, double tol) {
        auto it = checks.find(name);
        if (it == checks.end()) {
            order.push_back(name);
            it = checks.emplace(name, ResidualCheck{name, 0.0, tol, true}).first;
        }
        ResidualCheck& c = it->second;
        if (std::isnan(residual)) {
            c.residual = residual;
        } else if (!std::isnan(c.residual)) {
            c.residual = std::max(c.residual, residual);
        }
        c.passed = c.passed && residual <= tol;
    }
};

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

void point_invariants(CheckAccumulator& acc, const QuotientPoint& p, const GeometryParams& params) {
    const int n = params.n();

    const HessianSpectrum s = hessian_spectrum(p, params);
    std::vector<double> expected(2 * n - 2, s.lambda1);
    expected.push_back(s.lambda2);
    expected.push_back(s.lambda3);
    std::sort(expected.begin(), expected.end());
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(hessian_blocks(p, params));
    double spec = 0.0;
    for (int k = 0; k < 2 * n; ++k) {
        spec = std::max(spec, std::abs(eig.eigenvalues()[k] - expected[k]) / std::max(1.0, expected[k]));
    }
    acc.add("hessian_spectrum", spec, 1e-6);
    acc.add("hessian_positive", expected.front() > 0.0 ? 0.0 : 1.0, 0.0);

    acc.add("volform_norm", std::abs(volform_norm_sq(p, params) - 1.0 / factorial(n)), 1e-12);
    if (n <= 6) acc.add("volform_parallel", covariant_derivative_epsilon(p, params).max_abs(), 1e-12);
    acc.add("homothety", homothety_pullback_check(p, 1.7, params), 1e-12);

    int chart = 0;
    p.z().cwiseAbs().maxCoeff(&chart);
    const ChartPoint cp = quotient_to_chart(p, chart);
    acc.add("chart_volform", std::abs(chart_pullback_volform(cp, params) - 1.0 / n), 1e-12);
    const CMatrix transported = pull_back(metric(p, params), blowdown_jacobian(cp)).matrix();
    const CMatrix closed = pullback_metric(cp, params).assembled().matrix();
    acc.add("chart_transport",
            (transported - closed).cwiseAbs().maxCoeff() / std::max(1.0, closed.cwiseAbs().maxCoeff()), 1e-10);
}

int cmd_verify(const RunConfig& cfg, int points, json& doc, std::ostream& err) {
    if (points < 1) throw UsageError("--points must be >= 1");
    const GeometryParams params = cfg.params();
    std::mt19937_64 rng(cfg.seed);
    std::vector<QuotientPoint> pts;
    pts.reserve(points);
    for (int k = 0; k < points; ++k) pts.push_back(random_point(params, rng));

    CheckAccumulator acc;
    for (const PipelineReport& rep : omp::verify_points(pts, params)) {
        for (const ResidualCheck& c : rep.checks) acc.add(c.name, c.residual, c.tolerance);
    }
    for (const QuotientPoint& p : pts) point_invariants(acc, p, params);

    doc = header("verify", cfg);
    doc["seed"] = cfg.seed;
    doc["points"] = points;
    json checks = json::array();
    bool all = true;
    for (const std::string& name : acc.order) {
        const ResidualCheck& c = acc.checks.at(name);
        checks.push_back(
            {{"name", name}, {"max_residual", c.residual}, {"tolerance", c.tolerance}, {"passed", c.passed}});
        if (!c.passed) {
            all = false;
            err << "verify: check " << name << " failed: max residual " << io::format_double(c.residual)
                << " > " << io::format_double(c.tolerance) << "\n";
        }
    }
    doc["checks"] = checks;
    doc["passed"] = all;
    return all ? success : verification_failed;
}

// ---- geodesic ---------------------------------------------------------

std::string cmd_geodesic(const RunConfig& cfg, const std::string& point, const std::string& velocity,
                         double t_end) {
    if (!(t_end > 0.0)) throw UsageError("--t-end must be > 0");
    if (point.empty() != velocity.empty()) throw UsageError("give both --point and --velocity, or neither");
    const GeometryParams params = cfg.params();
    GeodesicState s0;
    if (point.empty()) {
        std::mt19937_64 rng(cfg.seed);
        s0 = random_launch(params, rng);
    } else {
        s0.z = io::parse_complex_vector(point);
        s0.v = io::parse_complex_vector(velocity);
        if (s0.z.size() != cfg.n || s0.v.size() != cfg.n) {
            throw UsageError("--point and --velocity need " + std::to_string(cfg.n) + " entries");
        }
        (void)QuotientPoint(s0.z);
    }
    const ClosedReport report = classify_closed(s0, t_end, cfg.tol, params);
    const int n = cfg.n;

    std::vector<std::string> columns{"t"};
    for (int k = 1; k <= n; ++k) {
        columns.push_back("Re z_" + std::to_string(k));
        columns.push_back("Im z_" + std::to_string(k));
    }
    for (int k = 1; k <= n; ++k) {
        columns.push_back("Re v_" + std::to_string(k));
        columns.push_back("Im v_" + std::to_string(k));
    }
    columns.push_back("u");
    columns.push_back("E");

    auto row_of = [n](const TrajectorySample& s) {
        std::vector<double> row{s.t};
        for (int k = 0; k < n; ++k) {
            row.push_back(s.state.z[k].real());
            row.push_back(s.state.z[k].imag());
        }
        for (int k = 0; k < n; ++k) {
            row.push_back(s.state.v[k].real());
            row.push_back(s.state.v[k].imag());
        }
        row.push_back(s.u);
        row.push_back(s.energy);
        return row;
    };

    const std::string cls = to_string(report.classification);
    const std::string term = to_string(report.trajectory.termination);
    if (format_or(cfg, "csv") == "csv") {
        std::ostringstream out;
        out << io::csv_row(columns) << "\n";
        for (const TrajectorySample& s : report.trajectory.samples) out << io::csv_row(row_of(s)) << "\n";
        std::vector<std::string> footer(columns.size());
        footer[0] = "classification";
        footer[1] = cls;
        footer[2] = "termination";
        footer[3] = term;
        out << io::csv_row(footer) << "\n";
        return out.str();
    }
    json doc = header("geodesic", cfg);
    doc["seed"] = cfg.seed;
    doc["t_end"] = t_end;
    doc["tol"] = cfg.tol;
    doc["columns"] = columns;
    json rows = json::array();
    for (const TrajectorySample& s : report.trajectory.samples) rows.push_back(row_of(s));
    doc["rows"] = rows;
    doc["classification"] = cls;
    doc["termination"] = term;
    json crit = json::array();
    for (const CriticalPoint& cp : report.critical_points) {
        crit.push_back({{"t", cp.t},
                        {"u", cp.u},
                        {"alpha", cp.alpha},
                        {"u_ddot_certificate", cp.u_ddot_certificate},
                        {"u_ddot_flow", cp.u_ddot_flow}});
    }
    doc["critical_points"] = crit;
    return doc.dump(2) + "\n";
}

// ---- scan -------------------------------------------------------------

std::string cmd_scan(const RunConfig& cfg, const std::string& quantity, double u_min, double u_max,
                     int points) {
    ScanQuantity q{};
    try {
        q = parse_scan_quantity(quantity);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!(u_min > 0.0) || !(u_max > u_min)) throw UsageError("need 0 < --u-min < --u-max");
    if (points < 2) throw UsageError("--points must be >= 2");
    const GeometryParams params = cfg.params();
    const std::vector<ScanRow> rows = omp::radial_scan(q, log_grid(u_min, u_max, points), params);

    std::vector<std::string> columns{"u"};
    for (const std::string& c : scan_columns(q)) columns.push_back(c);
    if (format_or(cfg, "csv") == "csv") {
        std::ostringstream out;
        out << io::csv_row(columns) << "\n";
        for (const ScanRow& r : rows) {
            std::vector<double> row{r.u};
            row.insert(row.end(), r.values.begin(), r.values.end());
            out << io::csv_row(row) << "\n";
        }
        return out.str();
    }
    json doc = header("scan", cfg);
    doc["quantity"] = quantity;
    doc["columns"] = columns;
    json data = json::array();
    for (const ScanRow& r : rows) {
        std::vector<double> row{r.u};
        row.insert(row.end(), r.values.begin(), r.values.end());
        data.push_back(row);
    }
    doc["rows"] = data;
    return doc.dump(2) + "\n";
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw UsageError("cannot open --output file " + cfg.output);
    file << text;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--n", cfg.n, "complex dimension n >= 2")->capture_default_str();
    sub->add_option("--a", cfg.a, "scale a > 0")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--tol", cfg.tol, "integration tolerance")->capture_default_str();
    sub->add_option("--format", cfg.format, "json or csv");
    sub->add_option("--output", cfg.output, "write to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Calabi-Eguchi-Hanson metric toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::string point, chart, velocity, quantity;
    int points = 0;
    double t_end = 10.0, u_min = 1e-4, u_max = 1e4;

    CLI::App* eval = app.add_subcommand("eval", "tensors at one point");
    add_common(eval, cfg);
    eval->add_option("--point", point, "comma-separated complex coordinates, e.g. 1+0i,0+0i");
    eval->add_option("--chart", chart, "chart point i:z:zeta_1:...");

    CLI::App* verify = app.add_subcommand("verify", "invariant suite at seeded random points");
    add_common(verify, cfg);
    verify->add_option("--points", points, "number of points")->default_val(20);

    CLI::App* geodesic = app.add_subcommand("geodesic", "integrate one geodesic");
    add_common(geodesic, cfg);
    geodesic->add_option("--point", point, "initial position");
    geodesic->add_option("--velocity", velocity, "initial velocity");
    geodesic->add_option("--t-end", t_end, "final time")->capture_default_str();

    CLI::App* scan = app.add_subcommand("scan", "radial profile on a log grid");
    add_common(scan, cfg);
    scan->add_option("--quantity", quantity, "kretschmann, psi, spectrum, fprime or metric_deviation")
        ->required();
    scan->add_option("--u-min", u_min, "smallest u")->capture_default_str();
    scan->add_option("--u-max", u_max, "largest u")->capture_default_str();
    scan->add_option("--points", points, "grid size")->default_val(50);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? success : usage_error;
    }

    try {
        validate(cfg);
        if (*eval) {
            if (format_or(cfg, "json") != "json") throw UsageError("eval writes JSON only");
            emit(cfg, cmd_eval(cfg, point, chart).dump(2) + "\n", out);
            return success;
        }
        if (*verify) {
            if (format_or(cfg, "json") != "json") throw UsageError("verify writes JSON only");
            json doc;
            const int code = cmd_verify(cfg, points, doc, err);
            emit(cfg, doc.dump(2) + "\n", out);
            return code;
        }
        if (*geodesic) {
            emit(cfg, cmd_geodesic(cfg, point, velocity, t_end), out);
            return success;
        }
        if (*scan) {
            emit(cfg, cmd_scan(cfg, quantity, u_min, u_max, points), out);
            return success;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const io::ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return usage_error;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    return usage_error;
}

}  // namespace ceh::cli
