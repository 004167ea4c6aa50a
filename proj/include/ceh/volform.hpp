#pragma once

#include <vector>

#include "ceh/charts.hpp"
#include "ceh/curvature.hpp"

namespace ceh {

// Totally antisymmetric symbol with eps_{0,1,...,n-1} = +1 (0-based indices).
// Dense lookup table up to n = 5; sign by inversion counting up to n = 8.
class LeviCivita {
public:
    explicit LeviCivita(int n);

    int dim() const { return n_; }
    int operator()(const std::vector<int>& idx) const;
    bool dense() const { return !table_.empty(); }

private:
    int sign_by_inversions(const std::vector<int>& idx) const;
    int n_;
    std::vector<signed char> table_;
};

// |eta|^2_g = det(g) / n!
double volform_norm_sq(const QuotientPoint& p, const GeometryParams& params);

// nabla_alpha eps_{mu_1..mu_n} = -sum_k Gamma^lambda_{alpha mu_k} eps_{mu_1..lambda..mu_n},
// flattened with alpha as the slowest index and mu_n as the fastest.
class EpsilonDerivative {
public:
    explicit EpsilonDerivative(int n);

    int dim() const { return n_; }
    cplx operator()(int alpha, const std::vector<int>& mu) const;
    const std::vector<cplx>& data() const { return data_; }
    std::vector<cplx>& data() { return data_; }
    double max_abs() const;

private:
    int n_;
    std::vector<cplx> data_;
};

EpsilonDerivative covariant_derivative_epsilon(const ChristoffelTensor& gamma);
EpsilonDerivative covariant_derivative_epsilon(const QuotientPoint& p, const GeometryParams& params);

// Coefficient of dzeta^1 ^ ... ^ dz (slot i) ^ ... ^ dzeta^n for the pullback
// of dw^1 ^ ... ^ dw^n to chart i. Equals 1/n in every chart, including z = 0.
cplx chart_pullback_volform(const ChartPoint& p, const GeometryParams& params);

}  // namespace ceh
