#include <doctest.h>

#include <cmath>
#include <random>

#include "ceh/numdiff.hpp"

using namespace ceh;

TEST_CASE("Wirtinger derivatives of simple fields") {
    std::mt19937_64 rng(42);
    const GeometryParams p(3, 1.0);
    auto u = [](const CVector& w) { return radius_sq(w); };
    auto square = [](const CVector& w) { return w[0] * w[0]; };
    for (int k = 0; k < 10; ++k) {
        const CVector z = random_point(p, rng).z();
        for (int mu = 0; mu < 3; ++mu) {
            CHECK(std::abs(wirtinger_partial(u, z, mu, false) - std::conj(z[mu])) < 1e-10);
            CHECK(std::abs(wirtinger_partial(u, z, mu, true) - z[mu]) < 1e-10);
        }
        CHECK(std::abs(wirtinger_partial(square, z, 0, true)) < 1e-10);
        CHECK(std::abs(wirtinger_partial(square, z, 0, false) - 2.0 * z[0]) < 1e-9);
        CHECK(std::abs(mixed_partial(u, z, 1, 1) - 1.0) < 1e-10);
        CHECK(std::abs(mixed_partial(u, z, 0, 2)) < 1e-10);
        CHECK(std::abs(holomorphic_second_partial(square, z, 0, 0) - 2.0) < 1e-8);
    }
}

TEST_CASE("matrix-valued fields") {
    auto outer = [](const CVector& w) { return CMatrix(w.conjugate() * w.transpose()); };
    CVector z(2);
    z << cplx(0.3, 0.4), cplx(-1.0, 0.2);
    // d_bar1 of zbar_mu z_nu is delta_{mu 1} z_nu.
    const CMatrix d = wirtinger_partial(outer, z, 1, true);
    CHECK(std::abs(d(1, 0) - z[0]) < 1e-10);
    CHECK(std::abs(d(1, 1) - z[1]) < 1e-10);
    CHECK(std::abs(d(0, 0)) < 1e-10);
}

TEST_CASE("potential recovers the metric") {
    std::mt19937_64 rng(1);
    for (int n : {2, 3}) {
        const GeometryParams p(n, 1.0);
        auto f = [&p](const CVector& w) { return potential(radius_sq(w), p); };
        for (int k = 0; k < 10; ++k) {
            const QuotientPoint q = random_point(p, rng);
            const CMatrix g = metric(q, p).matrix();
            for (int mu = 0; mu < n; ++mu)
                for (int nu = 0; nu < n; ++nu) CHECK(std::abs(mixed_partial(f, q.z(), mu, nu) - g(mu, nu)) < 1e-6);
        }
    }
}

TEST_CASE("fourth-order scheme is not worse than second order") {
    const GeometryParams p(2, 1.0);
    auto f = [&p](const CVector& w) { return potential(radius_sq(w), p); };
    CVector z(2);
    z << cplx(0.7, -0.3), cplx(0.2, 0.5);
    const CMatrix g = metric(QuotientPoint(z), p).matrix();
    const FDConfig c2{1e-3, FDScheme::central2, true};
    const FDConfig c4{1e-3, FDScheme::central4, true};
    double e2 = 0, e4 = 0;
    for (int mu = 0; mu < 2; ++mu)
        for (int nu = 0; nu < 2; ++nu) {
            e2 = std::max(e2, std::abs(mixed_partial(f, z, mu, nu, c2) - g(mu, nu)));
            e4 = std::max(e4, std::abs(mixed_partial(f, z, mu, nu, c4) - g(mu, nu)));
        }
    CHECK(e4 <= e2);
    CHECK_THROWS_AS(FDConfig({0.0}).step_at(z), std::invalid_argument);
}

TEST_CASE("pipeline verification passes at seeded points") {
    std::mt19937_64 rng(42);
    for (int n : {2, 3}) {
        const GeometryParams p(n, 1.0);
        for (int k = 0; k < 20; ++k) {
            const PipelineReport r = verify_pipeline(random_point(p, rng), p);
            CHECK(r.checks.size() == 7);
            for (const ResidualCheck& c : r.checks) {
                INFO(c.name << " residual " << c.residual);
                CHECK(c.passed);
            }
        }
    }
}

TEST_CASE("flat control") {
    std::mt19937_64 rng(5);
    const GeometryParams p(2, 1e-8);
    for (int k = 0; k < 5; ++k) {
        const QuotientPoint q = random_point(p, rng);
        if (q.u() < 1e-2) continue;
        CHECK(christoffel_ceh(q, p).max_abs() < 1e-6);
        CHECK(riemann(q, p).max_abs() < 1e-6);
        const PipelineReport r = verify_pipeline(q, p);
        CHECK(r.at("christoffel").residual < 1e-6);
        CHECK(r.at("riemann").residual < 1e-6);
    }
}

TEST_CASE("corrupted metric is caught") {
    std::mt19937_64 rng(42);
    const GeometryParams p(2, 1.0);
    MetricModel bad = MetricModel::calabi_eguchi_hanson(p);
    const auto good_metric = bad.metric;
    bad.metric = [good_metric](const CVector& z) {
        CMatrix g = good_metric(z);
        g(0, 0) += 1e-3;
        return g;
    };
    for (int k = 0; k < 5; ++k) {
        const PipelineReport r = verify_pipeline(random_point(p, rng), bad);
        CHECK(!r.passed());
        CHECK(!r.at("det").passed);
        CHECK(!r.at("ricci_contraction").passed);
    }
    CHECK_THROWS_AS(verify_pipeline(random_point(p, rng), p).at("nope"), std::out_of_range);
}
