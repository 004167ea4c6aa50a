#include <doctest.h>

#include <cmath>
#include <random>

#include "ceh/tensors.hpp"
#include "oracles.hpp"

using namespace ceh;

namespace {

CVector vec(std::initializer_list<cplx> v) {
    CVector out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index k = 0;
    for (cplx c : v) out[k++] = c;
    return out;
}

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("quotient point rejects the zero vector") {
    CHECK_THROWS_AS(QuotientPoint(CVector::Zero(2)), DomainError);
    CHECK(QuotientPoint(vec({3.0, cplx(0, 4)})).u() == doctest::Approx(25.0));
}

TEST_CASE("metric at (1, 0)") {
    const GeometryParams p(2, 1.0);
    const QuotientPoint q(vec({1.0, 0.0}));
    const CMatrix g = metric(q, p).matrix();
    CHECK(std::abs(g(0, 0) - std::sqrt(2.0) / 2) < 1e-15);
    CHECK(std::abs(g(1, 1) - std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(g(0, 1)) == 0.0);
    const CMatrix gi = metric_inverse(q, p).matrix();
    CHECK(std::abs(gi(0, 0) - std::sqrt(2.0)) < 1e-14);
    CHECK(std::abs(gi(1, 1) - std::sqrt(2.0) / 2) < 1e-15);
}

TEST_CASE("small scale gives the Euclidean metric") {
    const QuotientPoint q(vec({1.0, 0.0}));
    CHECK(max_abs(metric(q, {2, 1e-6}).matrix() - CMatrix::Identity(2, 2)) < 1e-5);
}

TEST_CASE("metric is Hermitian, positive, unimodular and inverted exactly") {
    std::mt19937_64 rng(42);
    for (int n : {2, 3, 4}) {
        const GeometryParams p(n, 0.9);
        for (int k = 0; k < 100; ++k) {
            const QuotientPoint q = random_point(p, rng);
            const HermitianForm g = metric(q, p);
            CHECK(g.hermiticity_defect() == 0.0);
            CHECK(g.min_eigenvalue() > 0.0);
            CHECK(std::abs(g.determinant() - 1.0) < 1e-12);
            const CMatrix prod = g.matrix() * metric_inverse(q, p).matrix();
            CHECK(max_abs(prod - CMatrix::Identity(n, n)) < 1e-12);
        }
    }
}

TEST_CASE("z is an eigenvector of the inverse metric") {
    std::mt19937_64 rng(3);
    const GeometryParams p(3, 1.0);
    for (int k = 0; k < 10; ++k) {
        const QuotientPoint q = random_point(p, rng);
        const double u = q.u();
        const double expected = 1.0 / (f_prime(u, p) * one_minus_phi(u, p));
        // g^{nubar lambda} acting on z_lambda, stored (nubar, lambda) with zbar^nu z^lambda
        const CVector w = metric_inverse(q, p).matrix() * q.z().conjugate();
        CHECK(max_abs(w - expected * q.z().conjugate()) < 1e-12 * (1 + expected));
    }
}

TEST_CASE("Fubini-Study metric") {
    for (int n : {2, 3, 5}) {
        CHECK(max_abs(fubini_study(CVector::Zero(n - 1)).matrix() - CMatrix::Identity(n - 1, n - 1)) == 0.0);
    }
    CHECK(std::abs(fubini_study(vec({1.0}))(0, 0) - 0.25) < 1e-16);
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g(0.0, 2.0);
    for (int k = 0; k < 100; ++k) {
        const CVector zeta = vec({cplx(g(rng), g(rng)), cplx(g(rng), g(rng))});
        const HermitianForm fs = fubini_study(zeta);
        CHECK(fs.min_eigenvalue() > 0.0);
        CHECK(fs.hermiticity_defect() == 0.0);
    }
}

TEST_CASE("homothety") {
    const GeometryParams p(2, 1.0);
    const QuotientPoint q(vec({1.0, 0.0}));
    CHECK(homothety_pullback_check(q, 1.0, p) == 0.0);
    CHECK(homothety_pullback_check(q, 2.0, p) < 1e-14);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> la(std::log(0.1), std::log(10.0));
    for (int n : {2, 3}) {
        const GeometryParams pn(n, 1.7);
        for (int k = 0; k < 50; ++k) {
            CHECK(homothety_pullback_check(random_point(pn, rng), std::exp(la(rng)), pn) < 1e-12);
        }
    }
    CHECK_THROWS_AS(homothety_pullback_check(q, 0.0, p), DomainError);
}

TEST_CASE("mu_n and unitary equivariance") {
    std::mt19937_64 rng(17);
    for (int n : {2, 3, 4}) {
        const GeometryParams p(n, 1.2);
        for (int k = 0; k < 10; ++k) {
            const QuotientPoint q = random_point(p, rng);
            const CMatrix g = metric(q, p).matrix();
            for (int j = 1; j < n; ++j) {
                const QuotientPoint r(root_of_unity(n, j) * q.z());
                CHECK(max_abs(metric(r, p).matrix() - g) < 1e-14);
            }
            const CMatrix U = oracle::random_unitary(n, rng);
            const CMatrix gu = metric(QuotientPoint(U * q.z()), p).matrix();
            CHECK(max_abs(gu - U.conjugate() * g * U.transpose()) < 1e-12);
        }
    }
}

TEST_CASE("metric deviation from the identity") {
    std::mt19937_64 rng(8);
    for (int n : {2, 3, 4}) {
        const GeometryParams p(n, 1.0);
        for (int k = 0; k < 20; ++k) {
            const QuotientPoint q = random_point(p, rng);
            const CMatrix naive = metric(q, p).matrix() - CMatrix::Identity(n, n);
            CHECK(max_abs(metric_deviation(q, p) - naive) < 1e-15);
        }
    }
    // Far out: e^psi - 1 against the binomial series of (1 + x)^(1/n) - 1, x = (a/u)^n.
    for (int n : {2, 5, 8}) {
        const GeometryParams p(n, 1.0);
        const double u = 1e3;
        CVector z = CVector::Zero(n);
        z[0] = std::sqrt(u);
        const double x = std::pow(1.0 / u, n);
        const double series = x / n - (n - 1.0) * x * x / (2.0 * n * n);
        const CMatrix d = metric_deviation(QuotientPoint(z), p);
        CHECK(std::abs(d(1, 1).real() - series) < 1e-12 * series);
        CHECK(d(1, 1).real() > 0.0);
    }
}

TEST_CASE("metric decays to the identity like u^-n") {
    for (int n : {2, 3, 4, 5, 6}) {
        const GeometryParams p(n, 1.0);
        // Least-squares slope of log max|g - I| against log u over [10a, 1e4 a].
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int m = 0;
        for (double u = 10.0; u <= 1e4 * 1.0001; u *= std::pow(10.0, 0.25)) {
            CVector z = CVector::Zero(n);
            z[0] = std::sqrt(u);
            const double dev = max_abs(metric_deviation(QuotientPoint(z), p));
            REQUIRE(dev > 0.0);
            const double x = std::log(u), y = std::log(dev);
            sx += x, sy += y, sxx += x * x, sxy += x * y, ++m;
        }
        const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        CHECK(std::abs(-slope - n) < 0.05 * n);
    }
}

TEST_CASE("real form of a Hermitian matrix") {
    CMatrix h(2, 2);
    h << 2.0, cplx(0.5, 1.0), cplx(0.5, -1.0), 3.0;
    const Eigen::MatrixXd r = HermitianForm(h).to_real();
    CHECK((r - r.transpose()).cwiseAbs().maxCoeff() == 0.0);
    // |v|^2_h for v = (1, i) against the real quadratic form on (1, 0, 0, 1).
    CVector v(2);
    v << 1.0, cplx(0, 1);
    const double direct = (v.transpose() * h * v.conjugate())(0, 0).real();
    Eigen::VectorXd x(4);
    x << 1.0, 0.0, 0.0, 1.0;
    CHECK(std::abs(x.dot(r * x) - direct) < 1e-15);
}
