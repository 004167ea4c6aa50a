#include "ceh/charts.hpp"

#include <cmath>

namespace ceh {

namespace {

void check_chart(int chart, int n) {
    if (chart < 0 || chart >= n) {
        throw std::invalid_argument("chart index " + std::to_string(chart) + " out of range for n = " +
                                    std::to_string(n));
    }
}

// Principal branch z^(1/n).
cplx principal_root(cplx z, int n) {
    if (n == 2) return std::sqrt(z);
    return std::polar(std::pow(std::abs(z), 1.0 / n), std::arg(z) / n);
}

cplx ipow(cplx z, int k) {
    cplx r = 1.0;
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

// Position of base index k in the zeta vector of chart i (k != i).
int zeta_slot(int k, int chart) { return k < chart ? k : k - 1; }

}  // namespace

CVector ChartPoint::homogeneous() const {
    const int n = dim();
    check_chart(chart, n);
    CVector xi(n);
    for (int k = 0; k < n; ++k) {
        xi[k] = k == chart ? cplx(1.0) : zeta[zeta_slot(k, chart)];
    }
    return xi;
}

HermitianForm PullbackMetric::assembled() const {
    const int m = static_cast<int>(block_zzeta.size());
    CMatrix h(m + 1, m + 1);
    h(0, 0) = block_zz;
    for (int k = 0; k < m; ++k) {
        h(0, k + 1) = block_zzeta[k];
        h(k + 1, 0) = std::conj(block_zzeta[k]);
    }
    h.bottomRightCorner(m, m) = block_zetazeta;
    return HermitianForm(std::move(h));
}

BlowDownImage chart_to_quotient(const ChartPoint& p, const GeometryParams& params) {
    const int n = params.n();
    if (p.dim() != n) throw std::invalid_argument("chart point dimension does not match n");
    const CVector xi = p.homogeneous();
    if (p.z == cplx(0.0)) {
        return ZeroSectionPoint{xi};
    }
    const cplx root = principal_root(p.z, n);
    return QuotientPoint(root * xi);
}

ChartPoint quotient_to_chart(const QuotientPoint& q, int chart) {
    const int n = q.dim();
    check_chart(chart, n);
    const CVector& w = q.z();
    const cplx wi = w[chart];
    if (wi == cplx(0.0)) {
        throw ChartDomainError("quotient_to_chart: w_" + std::to_string(chart + 1) +
                               " = 0, point is not in this chart");
    }
    ChartPoint p;
    p.chart = chart;
    p.z = ipow(wi, n);
    p.zeta.resize(n - 1);
    for (int k = 0; k < n; ++k) {
        if (k != chart) p.zeta[zeta_slot(k, chart)] = w[k] / wi;
    }
    return p;
}

ChartPoint zero_section_to_chart(const ZeroSectionPoint& s, int chart) {
    const int n = static_cast<int>(s.xi.size());
    check_chart(chart, n);
    const cplx xc = s.xi[chart];
    if (xc == cplx(0.0)) {
        throw ChartDomainError("zero_section_to_chart: point is not in this chart");
    }
    ChartPoint p;
    p.chart = chart;
    p.z = 0.0;
    p.zeta.resize(n - 1);
    for (int k = 0; k < n; ++k) {
        if (k != chart) p.zeta[zeta_slot(k, chart)] = s.xi[k] / xc;
    }
    return p;
}

double chart_radius_sq(const ChartPoint& p, int n) {
    return std::pow(std::abs(p.z), 2.0 / n) * (1.0 + radius_sq(p.zeta));
}

PullbackMetric pullback_metric(const ChartPoint& p, const GeometryParams& params) {
    const int n = params.n();
    if (p.dim() != n) throw std::invalid_argument("chart point dimension does not match n");
    const double a = params.a();
    const double w = 1.0 + radius_sq(p.zeta);
    const double u = chart_radius_sq(p, n);
    // (a^n + u^n)^(1/n), kept finite for large u.
    const double root = u <= a ? a * std::exp(std::log1p(std::pow(u / a, n)) / n)
                               : u * std::exp(std::log1p(std::pow(a / u, n)) / n);
    const double pn1 = std::pow(w / root, n - 1);
    const double base_scale = std::pow(a / root, n - 1) * a;

    PullbackMetric out;
    out.block_zz = pn1 * w / (static_cast<double>(n) * n);
    out.block_zzeta = (pn1 * std::conj(p.z) / static_cast<double>(n)) * p.zeta;
    out.base_block = base_scale * fubini_study(p.zeta).matrix();
    out.block_zetazeta = out.base_block;
    out.block_zetazeta.diagonal().array() += pn1 * std::norm(p.z);
    return out;
}

HermitianForm zero_section_restriction(const CVector& zeta, const GeometryParams& params) {
    return HermitianForm(params.a() * fubini_study(zeta).matrix());
}

ChartPoint transition(const ChartPoint& p, int target) {
    const int n = p.dim();
    check_chart(target, n);
    const CVector xi = p.homogeneous();
    const cplx xt = xi[target];
    if (xt == cplx(0.0)) {
        throw ChartDomainError("transition: point is not in the target chart (zeta_" +
                               std::to_string(target + 1) + " = 0)");
    }
    ChartPoint q;
    q.chart = target;
    q.z = p.z * ipow(xt, n);
    q.zeta.resize(n - 1);
    for (int k = 0; k < n; ++k) {
        if (k != target) q.zeta[zeta_slot(k, target)] = xi[k] / xt;
    }
    return q;
}

CMatrix transition_jacobian(const ChartPoint& p, int target) {
    const int n = p.dim();
    check_chart(target, n);
    const int i = p.chart;
    const CVector xi = p.homogeneous();
    const cplx xt = xi[target];
    if (xt == cplx(0.0)) throw ChartDomainError("transition_jacobian: point not in target chart");
    CMatrix jac = CMatrix::Zero(n, n);
    if (target == i) {
        jac.setIdentity();
        return jac;
    }
    // Columns: 0 -> z, 1 + zeta_slot(k, i) -> zeta_k. Rows likewise for target.
    const int col_t = 1 + zeta_slot(target, i);
    jac(0, 0) = ipow(xt, n);
    jac(0, col_t) = static_cast<double>(n) * p.z * ipow(xt, n - 1);
    for (int k = 0; k < n; ++k) {
        if (k == target) continue;
        const int row = 1 + zeta_slot(k, target);
        if (k == i) {
            jac(row, col_t) = -1.0 / (xt * xt);
        } else {
            jac(row, 1 + zeta_slot(k, i)) = 1.0 / xt;
            jac(row, col_t) = -xi[k] / (xt * xt);
        }
    }
    return jac;
}

CMatrix blowdown_jacobian(const ChartPoint& p) {
    const int n = p.dim();
    if (p.z == cplx(0.0)) throw DomainError("blowdown_jacobian: singular on the zero section");
    const CVector xi = p.homogeneous();
    const cplx root = principal_root(p.z, n);
    // d root / dz = root / (n z)
    const cplx droot = root / (static_cast<double>(n) * p.z);
    CMatrix jac = CMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        jac(k, 0) = droot * xi[k];
        if (k != p.chart) jac(k, 1 + zeta_slot(k, p.chart)) = root;
    }
    return jac;
}

HermitianForm pull_back(const HermitianForm& h, const CMatrix& jacobian) {
    return HermitianForm(jacobian.transpose() * h.matrix() * jacobian.conjugate());
}

}  // namespace ceh
