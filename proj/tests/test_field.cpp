#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qcurv/analytic_field.hpp"
#include "qcurv/errors.hpp"
#include "qcurv/field_ops.hpp"
#include "qcurv/grid_field.hpp"
#include "qcurv/jet.hpp"
#include "qcurv/quadrature.hpp"
#include "qcurv/radial_profile.hpp"
#include "qcurv/stencil.hpp"

using namespace qcurv;

namespace {

std::vector<double> uniform_nodes(double a, double b, int count) {
    std::vector<double> r(count);
    for (int i = 0; i < count; ++i) r[i] = a + (b - a) * i / (count - 1);
    return r;
}

} // namespace

TEST_CASE("jet arithmetic reproduces derivatives of composite closures") {
    // f(r) = exp(-r^2) * log(2 + r) / (1 + r^2)
    auto f = [](const JetN& r) { return exp(-(r * r)) * log(r + 2.0) / (1.0 + r * r); };
    const double r0 = 0.7, h = 1e-2;
    JetN j = f(JetN::variable(r0));
    auto fd = [&](int m) {
        // 4th-order central differences of order m (m <= 2 checked)
        auto v = [&](double d) { return f(JetN::variable(r0 + d)).value(); };
        if (m == 1) return (-v(2 * h) + 8 * v(h) - 8 * v(-h) + v(-2 * h)) / (12 * h);
        return (-v(2 * h) + 16 * v(h) - 30 * v(0) + 16 * v(-h) - v(-2 * h)) / (12 * h * h);
    };
    CHECK(j.derivative(1) == doctest::Approx(fd(1)).epsilon(1e-7));
    CHECK(j.derivative(2) == doctest::Approx(fd(2)).epsilon(1e-6));
}

TEST_CASE("adaptive quadrature hits closed forms") {
    QuadResult q = integrate([](double x) { return std::exp(-x) ; }, 0.0, 30.0);
    CHECK(q.value == doctest::Approx(1.0).epsilon(1e-12));
    q = integrate([](double x) { return 1.0 / std::sqrt(x); }, 1e-12, 1.0, {1e-10, 1e-14});
    CHECK(q.value == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("fornberg weights match the classic uniform 5-point second derivative") {
    std::vector<double> x = {-2, -1, 0, 1, 2};
    auto w = fd_weights(0.0, x, 2);
    const double expect[5] = {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12};
    for (int i = 0; i < 5; ++i) CHECK(w[2][i] == doctest::Approx(expect[i]).epsilon(1e-12));
}

TEST_CASE("radial_laplacian: polynomial and closed-form fields") {
    auto nodes = uniform_nodes(0.0, 3.0, 301);

    SUBCASE("r^2 in n = 4 gives the constant 2n = 8") {
        auto f = sample_profile(nodes, [](double r) { return r * r; });
        auto lap = radial_laplacian(f, 4);
        for (double v : lap.values()) CHECK(v == doctest::Approx(8.0).epsilon(1e-10));
    }
    SUBCASE("log(1/r) is harmonic in n = 2 away from the origin") {
        auto pos = uniform_nodes(0.7, 4.0, 601);
        auto f = sample_profile(pos, [](double r) { return std::log(1.0 / r); });
        auto lap = radial_laplacian(f, 2);
        for (double v : lap.values()) CHECK(std::fabs(v) < 1e-9);
    }
    SUBCASE("exp(-r^2) in n = 4 matches (4r^2 - 8)exp(-r^2)") {
        auto f = sample_profile(nodes, [](double r) { return std::exp(-r * r); });
        auto lap = radial_laplacian(f, 4);
        for (std::size_t i = 0; i < lap.size(); ++i) {
            const double r = lap.nodes()[i];
            const double expect = (4 * r * r - 8) * std::exp(-r * r);
            CHECK(lap.values()[i] == doctest::Approx(expect).epsilon(5e-8));
        }
    }
    SUBCASE("degenerate grids and odd dimensions are rejected") {
        auto few = sample_profile(uniform_nodes(0.0, 1.0, 4), [](double r) { return r; });
        CHECK_THROWS_AS(radial_laplacian(few, 4), degenerate_grid_error);
        auto f = sample_profile(nodes, [](double r) { return r; });
        CHECK_THROWS_AS(radial_laplacian(f, 3), invalid_dimension_error);
    }
}

TEST_CASE("radial_laplacian is exact for cubics at interior nodes") {
    auto check_interior = [](const RadialProfile& lap, int n) {
        for (std::size_t i = 3; i + 3 < lap.size(); ++i) {
            const double r = lap.nodes()[i];
            if (r == 0.0) continue;
            const double expect =
                (-2.0 + 1.5 * r) + (n - 1) * (0.5 - 2.0 * r + 0.75 * r * r) / r;
            CHECK(lap.values()[i] == doctest::Approx(expect).epsilon(1e-12));
        }
    };
    auto cubic = [](double r) { return 2.0 + 0.5 * r - r * r + 0.25 * r * r * r; };
    check_interior(radial_laplacian(sample_profile(uniform_nodes(0.5, 3.5, 31), cubic), 2), 2);
    // log-spaced layout: exactness must not depend on node placement
    GridSpec spec;
    spec.uniform_to = 0.5;
    spec.uniform_count = 8;
    spec.r_max = 50.0;
    spec.log_count = 60;
    check_interior(radial_laplacian(sample_profile(spec.make_nodes(), cubic), 4), 4);
}

TEST_CASE("radial_polyharmonic") {
    SUBCASE("r^4 with n = 6, k = 2 gives 384") {
        auto f = sample_profile(uniform_nodes(0.0, 2.0, 51), [](double r) { return std::pow(r, 4); });
        auto d2 = radial_polyharmonic(f, 6, 2);
        for (double v : d2.values()) CHECK(v == doctest::Approx(384.0).epsilon(1e-9));
    }
    SUBCASE("r^2 is annihilated by Delta^2") {
        auto f = sample_profile(uniform_nodes(0.0, 2.0, 41), [](double r) { return r * r; });
        auto d2 = radial_polyharmonic(f, 4, 2);
        for (double v : d2.values()) CHECK(std::fabs(v) < 1e-8);
    }
    SUBCASE("log(1/r) is biharmonic in n = 4 away from the origin") {
        auto f = sample_profile(uniform_nodes(1.0, 6.0, 201), [](double r) { return std::log(1.0 / r); });
        auto d2 = radial_polyharmonic(f, 4, 2);
        for (double v : d2.values()) CHECK(std::fabs(v) < 1e-7);
    }
    SUBCASE("equals the k-fold laplacian composition bitwise on the trimmed set") {
        GridSpec spec;
        spec.uniform_to = 0.2;
        spec.uniform_count = 30;
        spec.r_max = 50.0;
        spec.log_count = 200;
        auto nodes = spec.make_nodes();
        auto f = sample_profile(nodes, [](double r) { return std::exp(-0.3 * r) * (1 + r); });
        auto via_op = radial_polyharmonic(f, 4, 2);
        auto composed = radial_laplacian(radial_laplacian(f, 4), 4);
        REQUIRE(via_op.size() <= composed.size());
        std::size_t off = 0;
        while (composed.nodes()[off] != via_op.nodes()[0]) ++off;
        for (std::size_t i = 0; i < via_op.size(); ++i) {
            CHECK(via_op.nodes()[i] == composed.nodes()[off + i]);
            CHECK(via_op.values()[i] == composed.values()[off + i]);  // bitwise
        }
    }
    SUBCASE("insufficient nodes for the requested power") {
        auto f = sample_profile(uniform_nodes(0.0, 1.0, 7), [](double r) { return r; });
        CHECK_THROWS_AS(radial_polyharmonic(f, 4, 2), degenerate_grid_error);
    }
}

TEST_CASE("radial_gradient_norm_sq") {
    auto nodes = uniform_nodes(0.0, 3.0, 301);
    auto f = sample_profile(nodes, [](double r) { return std::log(2.0 / (1.0 + r * r)); });
    auto g = radial_gradient_norm_sq(f);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double r = g.nodes()[i];
        const double expect = 4 * r * r / std::pow(1 + r * r, 2);
        CHECK(g.values()[i] == doctest::Approx(expect).epsilon(1e-9));
    }
    auto c = sample_profile(nodes, [](double) { return 3.25; });
    for (double v : radial_gradient_norm_sq(c).values()) CHECK(std::fabs(v) < 1e-18);
    auto q = sample_profile(nodes, [](double r) { return r * r; });
    auto gq = radial_gradient_norm_sq(q);
    for (std::size_t i = 0; i < gq.size(); ++i)
        CHECK(gq.values()[i] == doctest::Approx(4 * gq.nodes()[i] * gq.nodes()[i]).epsilon(1e-11));
}

TEST_CASE("annulus_average") {
    auto nodes = uniform_nodes(0.5, 50.0, 2000);

    SUBCASE("constant averages to itself") {
        auto f = sample_profile(nodes, [](double) { return 2.5; });
        CHECK(annulus_average(f, 4, 3.0) == doctest::Approx(2.5).epsilon(1e-12));
    }
    SUBCASE("f(s) = s in n = 2 at r = 1 gives 14/9") {
        auto f = sample_profile(nodes, [](double s) { return s; });
        CHECK(annulus_average(f, 2, 1.0) == doctest::Approx(14.0 / 9.0).epsilon(1e-10));
    }
    SUBCASE("f(s) = s^-2 in n = 4 at r = 10 gives 0.004") {
        auto f = sample_profile(nodes, [](double s) { return 1.0 / (s * s); });
        CHECK(annulus_average(f, 4, 10.0) == doctest::Approx(0.004).epsilon(1e-10));
    }
    SUBCASE("tail region is integrated in closed form") {
        std::vector<double> small = uniform_nodes(0.5, 10.0, 200);
        auto f = sample_profile(small, [](double s) { return 3.0 * std::log(s) + 1.0; },
                                LogTail{3.0, 1.0});
        // average over [20, 40], entirely inside the tail
        const double got = annulus_average(f, 2, 20.0);
        // closed form: int s (3 log s + 1) ds / int s ds over [20,40]
        auto F = [](double s) { return s * s * (3.0 * std::log(s) / 2.0 - 3.0 / 4.0 + 0.5); };
        const double expect = (F(40) - F(20)) / ((1600.0 - 400.0) / 2.0);
        CHECK(got == doctest::Approx(expect).epsilon(1e-10));
    }
    SUBCASE("coverage errors") {
        auto f = sample_profile(nodes, [](double s) { return s; });
        CHECK_THROWS_AS(annulus_average(f, 2, 40.0), coverage_error);
        CHECK_THROWS_AS(annulus_average(f, 2, 0.1), coverage_error);
    }
    SUBCASE("monotone: f <= g nodewise implies avg(f) <= avg(g)") {
        std::mt19937 rng(12345);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> fv(nodes.size()), gv(nodes.size());
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                fv[i] = std::sin(0.3 * nodes[i]) + u(rng);
                gv[i] = fv[i] + u(rng);
            }
            RadialProfile f(nodes, fv), g(nodes, gv);
            const double r = 0.6 + 20.0 * u(rng);
            CHECK(annulus_average(f, 4, r) <= annulus_average(g, 4, r) + 1e-12);
        }
    }
}

TEST_CASE("sphere_average") {
    SUBCASE("harmonic polynomial mean equals center value (n = 2, 4)") {
        for (int n : {2, 4}) {
            AnalyticField f;
            f.dim = n;
            f.value = [](const std::vector<double>& x) { return x[0]; };
            std::vector<double> p(n, 0.0);
            p[0] = 0.4;
            if (n > 1) p[1] = -0.2;
            CHECK(sphere_average(f, p, 1.7) == doctest::Approx(0.4).epsilon(1e-9));
        }
        // harmonic quadratic x1^2 - x2^2 in n = 4
        AnalyticField h;
        h.dim = 4;
        h.value = [](const std::vector<double>& x) { return x[0] * x[0] - x[1] * x[1]; };
        std::vector<double> p = {0.3, 0.1, -0.5, 0.2};
        CHECK(sphere_average(h, p, 2.0) == doctest::Approx(0.09 - 0.01).epsilon(1e-8));
    }
    SUBCASE("|x|^2 about the origin and off origin") {
        for (int n : {2, 4}) {
            AnalyticField f;
            f.dim = n;
            f.value = [](const std::vector<double>& x) {
                double s = 0;
                for (double xi : x) s += xi * xi;
                return s;
            };
            std::vector<double> zero(n, 0.0);
            CHECK(sphere_average(f, zero, 1.3) == doctest::Approx(1.69).epsilon(1e-10));
            std::vector<double> p(n, 0.5);
            const double expect = 0.25 * n + 1.69;
            CHECK(sphere_average(f, p, 1.3) == doctest::Approx(expect).epsilon(1e-9));
        }
    }
    SUBCASE("radial closure unlocks n = 6") {
        RadialFunction F([](const JetN& r) { return pow_int(r, 4); });
        AnalyticField f = make_radial_field(6, F);
        std::vector<double> p(6, 0.0);
        p[0] = 0.7;
        // mean of |x|^4 over sphere(p, r): c^2 + 4 r^2 |p|^2 / n with c = |p|^2 + r^2
        const double r = 1.3, c = 0.49 + r * r;
        const double expect = c * c + 4 * r * r * 0.49 / 6.0;
        CHECK(sphere_average(f, p, r) == doctest::Approx(expect).epsilon(1e-10));
    }
    SUBCASE("n = 6 without radial closure is unsupported") {
        AnalyticField f;
        f.dim = 6;
        f.value = [](const std::vector<double>& x) { return x[0]; };
        std::vector<double> p(6, 0.0);
        CHECK_THROWS_AS(sphere_average(f, p, 1.0), unsupported_dimension_error);
    }
}

TEST_CASE("profile CSV round trip with tail comment") {
    auto nodes = uniform_nodes(1.0, 9.0, 9);
    auto p = sample_profile(nodes, [](double r) { return -0.5 * std::log(r) + 2.0; },
                            LogTail{-0.5, 2.0});
    const std::string text = profile_to_csv(p);
    CHECK(text.find("r,value\n") == 0);
    CHECK(text.find("# tail: beta=") != std::string::npos);
    RadialProfile q = profile_from_csv(text);
    REQUIRE(q.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(q.nodes()[i] == p.nodes()[i]);
        CHECK(q.values()[i] == p.values()[i]);
    }
    REQUIRE(q.tail().has_value());
    CHECK(q.tail()->beta == -0.5);
    CHECK(q.eval(100.0) == doctest::Approx(-0.5 * std::log(100.0) + 2.0));
}

TEST_CASE("profile invariants are enforced") {
    CHECK_THROWS_AS(RadialProfile({1.0, 1.0, 2.0}, {0, 0, 0}), degenerate_grid_error);
    CHECK_THROWS_AS(RadialProfile({-1.0, 1.0}, {0, 0}), degenerate_grid_error);
    CHECK_THROWS_AS(RadialProfile({0.0, 1.0}, {0, std::nan("")}), degenerate_grid_error);
    // tail must agree with the last sample
    CHECK_THROWS_AS(RadialProfile({1.0, 2.0}, {0.0, 5.0}, LogTail{0.0, 0.0, 1e-8}),
                    degenerate_grid_error);
}

TEST_CASE("grid field midpoint integration") {
    // gaussian mass in 2D
    GridField g = GridField::from_function(2, 8.0, 256, [](const std::vector<double>& x) {
        return std::exp(-(x[0] * x[0] + x[1] * x[1]) / 2.0);
    });
    CHECK(g.integrate() == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-4));
    CHECK_THROWS_AS(GridField(3, 1.0, 4), unsupported_dimension_error);
}

TEST_CASE("analytic field derivative consistency probe") {
    AnalyticField f;
    f.dim = 2;
    f.value = [](const std::vector<double>& x) { return std::exp(-x[0] * x[0] - 0.5 * x[1] * x[1]); };
    f.gradient = [&](const std::vector<double>& x) {
        const double v = std::exp(-x[0] * x[0] - 0.5 * x[1] * x[1]);
        return std::vector<double>{-2 * x[0] * v, -x[1] * v};
    };
    f.laplacians.push_back([](const std::vector<double>& x) {
        const double v = std::exp(-x[0] * x[0] - 0.5 * x[1] * x[1]);
        return v * ((4 * x[0] * x[0] - 2) + (x[1] * x[1] - 1));
    });
    CHECK(derivative_consistency(f, {0.3, -0.7}, 1e-3) < 1e-9);
}
