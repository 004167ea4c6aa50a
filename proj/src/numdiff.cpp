#include "ceh/numdiff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ceh {

double FDConfig::step_at(const CVector& z) const {
    if (!(step > 0.0)) throw std::invalid_argument("FDConfig: step must be positive");
    return relative ? step * std::max(1.0, z.norm()) : step;
}

MetricModel MetricModel::calabi_eguchi_hanson(const GeometryParams& params) {
    MetricModel m;
    m.potential = [params](const CVector& z) { return ceh::potential(radius_sq(z), params); };
    m.metric = [params](const CVector& z) { return ceh::metric(QuotientPoint(z), params).matrix(); };
    m.christoffel = [params](const CVector& z) { return christoffel_ceh(QuotientPoint(z), params); };
    m.riemann = [params](const CVector& z) { return ceh::riemann(QuotientPoint(z), params); };
    m.kretschmann = [params](const CVector& z) { return ceh::kretschmann(QuotientPoint(z), params); };
    return m;
}

bool PipelineReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ResidualCheck& c) { return c.passed; });
}

const ResidualCheck& PipelineReport::at(const std::string& name) const {
    for (const ResidualCheck& c : checks) {
        if (c.name == name) return c;
    }
    throw std::out_of_range("PipelineReport: no check named " + name);
}

namespace {

void add(PipelineReport& r, std::string name, double residual, double tol) {
    r.checks.push_back({std::move(name), residual, tol, residual <= tol});
}

}  // namespace

PipelineReport verify_pipeline(const QuotientPoint& p, const MetricModel& model,
                               const PipelineConfig& cfg) {
    const CVector& z = p.z();
    const int n = p.dim();
    const CMatrix g = model.metric(z);
    const CMatrix ginv = g.inverse();
    PipelineReport report;

    // g_{mu nubar} = d_mu d_nubar f
    double res = 0.0;
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
            const cplx fd = mixed_partial(model.potential, z, mu, nu, cfg.second);
            res = std::max(res, std::abs(g(mu, nu) - fd));
        }
    add(report, "metric", res, 1e-6);

    // First derivatives of g: dg[al](mu, nu) = d_al g_{mu nubar}; dgbar[be] = d_bbar g.
    std::vector<CMatrix> dg(n), dgbar(n);
    for (int al = 0; al < n; ++al) {
        dg[al] = wirtinger_partial(model.metric, z, al, false, cfg.first);
        dgbar[al] = wirtinger_partial(model.metric, z, al, true, cfg.first);
    }

    // Gamma^l_{mu al} = d_al g_{mu nubar} g^{nubar l}
    const ChristoffelTensor gamma = model.christoffel(z);
    res = 0.0;
    for (int al = 0; al < n; ++al) {
        const CMatrix prod = dg[al] * ginv;  // (mu, l)
        for (int mu = 0; mu < n; ++mu)
            for (int l = 0; l < n; ++l) res = std::max(res, std::abs(gamma(l, mu, al) - prod(mu, l)));
    }
    add(report, "christoffel", res, 1e-6);

    // R_{mu nubar al bbar} = -d_al d_bbar g_{mu nubar} + g^{sbar l} d_al g_{mu sbar} d_bbar g_{l nubar}
    const RiemannTensor r = model.riemann(z);
    res = 0.0;
    for (int al = 0; al < n; ++al)
        for (int be = 0; be < n; ++be) {
            const CMatrix d2 = mixed_partial(model.metric, z, al, be, cfg.second);
            const CMatrix quad = dg[al] * ginv * dgbar[be];
            for (int mu = 0; mu < n; ++mu)
                for (int nu = 0; nu < n; ++nu) {
                    const cplx oracle = -d2(mu, nu) + quad(mu, nu);
                    res = std::max(res, std::abs(r(mu, nu, al, be) - oracle));
                }
        }
    add(report, "riemann", res, 1e-5);

    const CMatrix ric = ricci_contraction(r, HermitianForm(ginv)).matrix();
    add(report, "ricci_contraction", ric.cwiseAbs().maxCoeff(), 1e-9);

    auto log_det = [&model](const CVector& w) { return std::log(std::abs(model.metric(w).determinant())); };
    res = 0.0;
    for (int mu = 0; mu < n; ++mu)
        for (int be = 0; be < n; ++be)
            res = std::max(res, std::abs(mixed_partial(log_det, z, mu, be, cfg.second)));
    add(report, "ricci_logdet", res, 1e-5);

    add(report, "det", std::abs(g.determinant() - cplx(1.0)), 1e-12);

    const double k_closed = model.kretschmann(z);
    const double k_contract = kretschmann_contracted(r, HermitianForm(ginv));
    add(report, "kretschmann", std::abs(k_contract - k_closed) / std::abs(k_closed), 1e-9);
    return report;
}

PipelineReport verify_pipeline(const QuotientPoint& p, const GeometryParams& params,
                               const PipelineConfig& cfg) {
    if (p.dim() != params.n()) throw std::invalid_argument("point dimension does not match n");
    return verify_pipeline(p, MetricModel::calabi_eguchi_hanson(params), cfg);
}

}  // namespace ceh
