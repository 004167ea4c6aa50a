#include "ceh/volform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ceh {

namespace {

constexpr int kDenseMax = 5;
constexpr int kSignMax = 8;
// n^(n+1) entries are stored for the covariant derivative.
constexpr int kDerivativeMax = 6;

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

size_t ipow(int base, int e) {
    size_t r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<size_t>(base);
    return r;
}

size_t flatten(const std::vector<int>& idx, int n) {
    size_t k = 0;
    for (int i : idx) k = k * n + i;
    return k;
}

}  // namespace

LeviCivita::LeviCivita(int n) : n_(n) {
    if (n < 1 || n > kSignMax) {
        throw std::invalid_argument("LeviCivita: supported for 1 <= n <= 8");
    }
    if (n > kDenseMax) return;
    table_.assign(ipow(n, n), 0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        table_[flatten(perm, n)] = static_cast<signed char>(sign_by_inversions(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

int LeviCivita::sign_by_inversions(const std::vector<int>& idx) const {
    int inversions = 0;
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            if (idx[i] == idx[j]) return 0;
            if (idx[i] > idx[j]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

int LeviCivita::operator()(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != n_) throw std::invalid_argument("LeviCivita: wrong rank");
    for (int i : idx) {
        if (i < 0 || i >= n_) throw std::out_of_range("LeviCivita: index out of range");
    }
    if (dense()) return table_[flatten(idx, n_)];
    return sign_by_inversions(idx);
}

double volform_norm_sq(const QuotientPoint& p, const GeometryParams& params) {
    return metric(p, params).determinant().real() / factorial(params.n());
}

EpsilonDerivative::EpsilonDerivative(int n) : n_(n) {
    if (n < 1 || n > kDerivativeMax) {
        throw std::invalid_argument("EpsilonDerivative: supported for 1 <= n <= 6");
    }
    data_.assign(ipow(n, n + 1), cplx(0.0));
}

cplx EpsilonDerivative::operator()(int alpha, const std::vector<int>& mu) const {
    std::vector<int> idx{alpha};
    idx.insert(idx.end(), mu.begin(), mu.end());
    return data_.at(flatten(idx, n_));
}

double EpsilonDerivative::max_abs() const {
    double m = 0.0;
    for (const cplx& c : data_) m = std::max(m, std::abs(c));
    return m;
}

EpsilonDerivative covariant_derivative_epsilon(const ChristoffelTensor& gamma) {
    const int n = gamma.dim();
    const LeviCivita eps(n);
    EpsilonDerivative out(n);
    std::vector<int> idx(n + 1, 0);
    std::vector<int> mu(n);
    for (size_t flat = 0; flat < out.data().size(); ++flat) {
        size_t rest = flat;
        for (int s = n; s >= 0; --s) {
            idx[s] = static_cast<int>(rest % n);
            rest /= n;
        }
        const int alpha = idx[0];
        std::copy(idx.begin() + 1, idx.end(), mu.begin());
        cplx total = 0.0;
        for (int k = 0; k < n; ++k) {
            const int saved = mu[k];
            for (int lam = 0; lam < n; ++lam) {
                mu[k] = lam;
                const int e = eps(mu);
                if (e != 0) total -= static_cast<double>(e) * gamma(lam, alpha, saved);
            }
            mu[k] = saved;
        }
        out.data()[flat] = total;
    }
    return out;
}

EpsilonDerivative covariant_derivative_epsilon(const QuotientPoint& p, const GeometryParams& params) {
    return covariant_derivative_epsilon(christoffel_ceh(p, params));
}

cplx chart_pullback_volform(const ChartPoint& p, const GeometryParams& params) {
    const int n = params.n();
    if (p.dim() != n) throw std::invalid_argument("chart point dimension does not match n");
    if (p.z == cplx(0.0)) return 1.0 / static_cast<double>(n);
    // Reorder columns (z, zeta...) so that dz sits in slot `chart`.
    const CMatrix jac = blowdown_jacobian(p);
    CMatrix slotted(n, n);
    for (int col = 0, src = 1; col < n; ++col) {
        slotted.col(col) = col == p.chart ? jac.col(0) : jac.col(src++);
    }
    return slotted.determinant();
}

}  // namespace ceh
