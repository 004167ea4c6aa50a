#pragma once

#include <variant>

#include "ceh/tensors.hpp"

namespace ceh {

// Point of O(-n)|U_i in the standard trivialisation: fiber coordinate z and
// base coordinates zeta_k = xi_k / xi_i for k != i, listed in increasing k.
// chart is 0-based (U_0 ... U_{n-1}); z = 0 is the zero section.
struct ChartPoint {
    int chart = 0;
    cplx z = 0.0;
    CVector zeta;

    int dim() const { return static_cast<int>(zeta.size()) + 1; }
    // Homogeneous base coordinates xi with xi_chart = 1.
    CVector homogeneous() const;
};

// Zero-section image of a chart point: only the line [xi] survives.
struct ZeroSectionPoint {
    CVector xi;
};

using BlowDownImage = std::variant<QuotientPoint, ZeroSectionPoint>;

class ChartDomainError : public DomainError {
public:
    using DomainError::DomainError;
};

// Pullback of the metric to chart coordinates (z, zeta_1, ...), with
//   P = (1+|zeta|^2) / (a^n+u^n)^(1/n),  u = |z|^(2/n) (1+|zeta|^2):
//   dz dzbar        : P^(n-1) (1+|zeta|^2) / n^2
//   dz dzetabar_k   : P^(n-1) zbar zeta_k / n
//   dzeta dzetabar  : P^(n-1) |z|^2 delta + (a/(a^n+u^n)^(1/n))^(n-1) a g_FS
struct PullbackMetric {
    double block_zz = 0.0;
    CVector block_zzeta;
    CMatrix block_zetazeta;
    // The Fubini-Study-proportional part of block_zetazeta.
    CMatrix base_block;

    // Hermitian form in the order (z, zeta_1, ..., zeta_{n-1}).
    HermitianForm assembled() const;
    // Real form on (Re z, Im z, Re zeta_1, Im zeta_1, ...).
    Eigen::MatrixXd real_form() const { return assembled().to_real(); }
};

// Principal n-th root; returns the zero section when z = 0.
BlowDownImage chart_to_quotient(const ChartPoint& p, const GeometryParams& params);

// Inverse of the slot-i identification: z = w_i^n, zeta_k = w_k / w_i.
ChartPoint quotient_to_chart(const QuotientPoint& q, int chart);

// Chart coordinates of a zero-section point [xi] with xi_chart != 0.
ChartPoint zero_section_to_chart(const ZeroSectionPoint& s, int chart);

// u = |z|^(2/n) (1 + |zeta|^2) computed in chart coordinates.
double chart_radius_sq(const ChartPoint& p, int n);

PullbackMetric pullback_metric(const ChartPoint& p, const GeometryParams& params);

// a * g_FS(zeta), the metric induced on the zero section.
HermitianForm zero_section_restriction(const CVector& zeta, const GeometryParams& params);

// Same point expressed in chart `target` (0-based): z' = z xi_target^n,
// zeta'_k = xi_k / xi_target. Valid on the zero section.
ChartPoint transition(const ChartPoint& p, int target);

// Holomorphic Jacobian d(chart target coords)/d(chart p.chart coords),
// rows and columns in the (z, zeta...) order.
CMatrix transition_jacobian(const ChartPoint& p, int target);

// Holomorphic Jacobian dw/d(z, zeta...) of the blow-down map (z != 0),
// rows w_1..w_n and columns in the (z, zeta...) order.
CMatrix blowdown_jacobian(const ChartPoint& p);

// Transport of a Hermitian form by a holomorphic Jacobian J:
// (J^T h conj(J))_{AB} = sum J^a_A h_{a bbar} conj(J^b_B).
HermitianForm pull_back(const HermitianForm& h, const CMatrix& jacobian);

}  // namespace ceh
