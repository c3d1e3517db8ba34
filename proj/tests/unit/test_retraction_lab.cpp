#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fermat/errors.hpp"
#include "fermat/fermat_complex.hpp"
#include "fermat/retraction.hpp"
#include "fermat/sampling.hpp"
#include "fermat/verification.hpp"
#include "oracles.hpp"

using namespace fermat;
using std::numbers::pi;

namespace {

/// A broken stage 1 flow t Re w + (1 - t) i Im w; not the identity at t = 0.
Complex corrupted_rbar(Complex w, double t)
{
    return Complex(t * w.real(), (1.0 - t) * w.imag());
}

bool near(const RealTriple& a, const RealTriple& b, double tol)
{
    for (std::size_t i = 0; i < 3; ++i)
        if (std::abs(a[i] - b[i]) > tol)
            return false;
    return true;
}

double max_power_imag(const ComplexTriple& p, int d)
{
    double m = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        m = std::max(m, std::abs(ipow(p[i], d).imag()));
    return m;
}

Complex random_in_half_plane(std::mt19937_64& rng, bool upper)
{
    std::uniform_real_distribution<double> angle(0.0, pi);
    std::uniform_real_distribution<double> radius(0.01, 4.0);
    const double theta = upper ? angle(rng) : -angle(rng);
    return std::polar(radius(rng), theta);
}

} // namespace

TEST_CASE("rbar squeezes the imaginary part")
{
    CHECK(rbar({3.0, 2.0}, 1.0) == Complex(3.0, 0.0));
    CHECK(rbar({3.0, 2.0}, 0.0) == Complex(3.0, 2.0));
    for (double t : {0.0, 0.25, 0.5, 1.0})
        CHECK(rbar({5.0, 0.0}, t) == Complex(5.0, 0.0));
    CHECK_THROWS_AS(rbar({1.0, 1.0}, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(rbar({1.0, 1.0}, -0.1), std::invalid_argument);
}

TEST_CASE("r1 on the plane x + y + z = 1")
{
    const double third = 1.0 / 3.0;
    const ComplexTriple p{{Complex(third, 1.0), Complex(third, -2.0), Complex(third, 1.0)}};
    CHECK(distance(r1(p, 1.0), {{third, third, third}}) < 1e-15);
    CHECK(r1(p, 0.0) == p);
    const ComplexTriple real{{0.2, 1.1, -0.3}};
    for (double t : {0.0, 0.3, 1.0})
        CHECK(r1(real, t) == real);
    CHECK_THROWS_AS(r1({{1.0, 1.0, 1.0}}, 0.5), NotOnSurfaceError);
}

TEST_CASE("sign regions")
{
    const double third = 1.0 / 3.0;
    CHECK(region_of({third, third, third}, 1e-12) == RegionTag(true, true, true));
    CHECK(region_of({0.6, 0.6, -0.2}, 1e-12) == RegionTag(true, true, false));
    CHECK(region_of({1.5, -0.2, -0.3}, 1e-12) == RegionTag(true, false, false));
    CHECK(region_of({1.0, -1e-13, 1e-13}, 1e-12) == RegionTag(true, true, true));
    CHECK(RegionTag(true, true, false).to_string() == "(+,+,-)");
    CHECK(RegionTag(true, false, true).permuted({2, 0, 1}).positive_count() == 2);
    CHECK_THROWS_AS(RegionTag(false, false, false), RegionError);
    CHECK_THROWS_AS(region_of({0.5, 0.5, 0.5}, 1e-12), NotOnSurfaceError);
}

TEST_CASE("targets of the stage 2 flow")
{
    CHECK(near(target_q({0.6, 0.6, -0.2}), {0.5, 0.5, 0.0}, 1e-15));
    CHECK(near(target_q({1.5, -0.2, -0.3}), {1.0, 0.0, 0.0}, 0.0));
    CHECK(near(target_q({0.2, 0.3, 0.5}), {0.2, 0.3, 0.5}, 0.0));
    CHECK(near(r2({0.6, 0.6, -0.2}, 0.5), {0.55, 0.55, -0.1}, 1e-15));
    CHECK(near(target_q_in_region({0.0, 1.0, 0.0}, RegionTag(true, true, false)), {0.0, 1.0, 0.0}, 0.0));
    CHECK(near(target_q_in_region({0.0, 1.0, 0.0}, RegionTag(false, true, false)), {0.0, 1.0, 0.0}, 0.0));
    for (double t : {0.0, 0.4, 1.0})
        CHECK(near(r2({0.2, 0.3, 0.5}, t), {0.2, 0.3, 0.5}, 0.0));
}

TEST_CASE("region formulas agree on shared borders")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 1000; ++i)
    {
        // border x = 0 between (+,+,-) and (-,+,-): y > 1, z = 1 - y < 0
        const double y = 1.0 + std::abs(u(rng));
        const RealTriple q{0.0, y, 1.0 - y};
        for (double t : {0.0, 0.3, 0.7, 1.0})
            CHECK(near(r2_in_region(q, RegionTag(true, true, false), t),
                       r2_in_region(q, RegionTag(false, true, false), t), 1e-14));
        // border z = 0 between (+,+,+) and (+,+,-): x + y = 1 with both non-negative
        const double x = std::abs(u(rng)) / 2.0;
        if (x <= 1.0)
        {
            const RealTriple b{x, 1.0 - x, 0.0};
            CHECK(near(target_q_in_region(b, RegionTag(true, true, true)),
                       target_q_in_region(b, RegionTag(true, true, false)), 1e-15));
        }
    }
}

TEST_CASE("stage 2 keeps the plane and lands on the triangle")
{
    std::mt19937_64 rng(6);
    std::normal_distribution<double> n(0.0, 2.0);
    for (int i = 0; i < 2000; ++i)
    {
        const double x = n(rng), y = n(rng);
        const RealTriple q{x, y, 1.0 - x - y};
        const RealTriple target = target_q(q);
        CHECK(std::abs(target[0] + target[1] + target[2] - 1.0) < 1e-12);
        for (double v : target)
            CHECK(v >= 0.0);
        const RealTriple mid = r2(q, 0.5);
        CHECK(std::abs(mid[0] + mid[1] + mid[2] - 1.0) < 1e-12);
    }
}

TEST_CASE("sector assignment")
{
    CHECK(sector_of(std::polar(1.0, 0.3), 3).k() == 1);
    CHECK(sector_of(std::polar(1.0, 3.0 * pi / 4.0), 2).k() == 2);
    CHECK(sector_of(Complex(0.0, 1.0), 2).k() == 1);
    CHECK(sector_of(Complex(2.0, 0.0), 4).k() == 1);
    CHECK(sector_of(Complex(-1.0, 0.0), 1).k() == 1);
    CHECK(sector_of(Complex(0.0, -1.0), 1).k() == 2);
    CHECK(sector_of(std::polar(1.0, -0.1), 3).k() == 6);
    CHECK_THROWS_AS(sector_of(Complex(0.0, 0.0), 2), std::invalid_argument);
    CHECK_THROWS_AS(SectorIndex(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(SectorIndex(5, 2), std::invalid_argument);
}

TEST_CASE("sector homeomorphisms")
{
    const double r = 2.5, theta = 1.1;
    for (int d = 1; d <= 5; ++d)
        CHECK(std::abs(f_k(std::polar(r, theta), SectorIndex(1, d)) - std::polar(std::pow(r, 1.0 / d), theta / d)) <
              1e-14);
    CHECK(std::abs(f_k(Complex(-1.0, 0.0), SectorIndex(2, 2)) - Complex(0.0, 1.0)) < 1e-15);
    CHECK_THROWS_AS(f_k(Complex(0.0, -1.0), SectorIndex(1, 2)), std::domain_error);
    CHECK_THROWS_AS(f_k(Complex(0.0, 1.0), SectorIndex(2, 2)), std::domain_error);
    CHECK_THROWS_AS(f_k_inv(std::polar(1.0, 2.0), SectorIndex(1, 3)), std::domain_error);
}

TEST_CASE("f_k and its inverse are mutually inverse and map into sector k")
{
    std::mt19937_64 rng(8);
    for (int d = 1; d <= 5; ++d)
        for (int k = 1; k <= 2 * d; ++k)
        {
            const SectorIndex sector(k, d);
            const double lo = (k - 1) * pi / d, hi = k * pi / d;
            for (int i = 0; i < 1000; ++i)
            {
                const Complex w = random_in_half_plane(rng, sector.odd());
                const Complex image = f_k(w, sector);
                double arg = std::arg(image);
                if (arg < lo - 1e-12)
                    arg += 2.0 * pi;
                CHECK(arg >= lo - 1e-12);
                CHECK(arg <= hi + 1e-12);
                CHECK(std::abs(f_k_inv(image, sector) - w) <= 1e-12 * std::max(1.0, std::abs(w)));
            }
        }
}

TEST_CASE("lift of the planar flow: examples")
{
    CHECK(std::abs(lift_g(Complex(1.0, 1.0), 0.5, 2) - std::polar(1.0, pi / 4.0)) < 1e-12);
    // exp(i pi / 4)^2 is i only up to rounding (real part ~6e-17); the square root
    // turns that into a modulus of ~8e-9, so the exact answer 0 is met to 1e-7.
    const Complex end = lift_g(std::polar(1.0, pi / 4.0), 1.0, 2);
    CHECK(std::abs(end) < 1e-7);
    CHECK(std::abs(end * end) < 1e-15);
    CHECK(lift_g(Complex(0.0, 0.0), 0.4, 3) == Complex(0.0, 0.0));
}

TEST_CASE("lift of the planar flow is the identity at time 0")
{
    std::mt19937_64 rng(9);
    for (int d = 1; d <= 6; ++d)
        for (int i = 0; i < 2000; ++i)
        {
            const Complex w = standard_complex_normal(rng);
            CHECK(lift_g(w, 0.0, d) == w);
        }
}

TEST_CASE("lift compatibility G(w, t)^d = rbar(w^d, t)")
{
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> time(0.0, 1.0);
    for (int d = 1; d <= 6; ++d)
    {
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i)
        {
            const Complex w = standard_complex_normal(rng);
            const double t = time(rng);
            worst = std::max(worst, std::abs(ipow(lift_g(w, t, d), d) - rbar(ipow(w, d), t)));
        }
        CAPTURE(d);
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("stage 1 lift")
{
    std::mt19937_64 rng(12);
    for (int d = 1; d <= 4; ++d)
    {
        // points of the skeleton sit on rays of real powers and are not moved
        for (const auto& cell : affine_cells(d, 2))
        {
            const ComplexTriple p = realize(cell, oracle::interior_barycentric(cell, rng));
            for (double t : {0.0, 0.5, 1.0})
                CHECK(distance(lift_r1(p, t, d), p) <= 1e-15);
        }
        for (const auto& p : sample_md(d, 200, 40 + d))
        {
            const ComplexTriple end = lift_r1(p, 1.0, d);
            CHECK(max_power_imag(end, d) <= 1e-9);
            CHECK(std::abs(power_sum(end, d) - 1.0) <= 1e-9);
        }
    }
    for (const auto& p : sample_md(1, 100, 3))
        for (double t : {0.0, 0.2, 0.9, 1.0})
            CHECK(distance(lift_r1(p, t, 1), r1(p, t)) <= 1e-14);
    CHECK_THROWS_AS(lift_r1({{1.0, 1.0, 0.0}}, 0.5, 2), NotOnSurfaceError);
}

TEST_CASE("stage 2 lift: constant in the positive region")
{
    std::mt19937_64 rng(13);
    for (int d = 1; d <= 4; ++d)
        for (const auto& cell : affine_cells(d, 2))
        {
            const ComplexTriple p = realize(cell, oracle::interior_barycentric(cell, rng));
            for (double t : {0.0, 0.6, 1.0})
                CHECK(distance(lift_r2(p, t, d), p) <= 1e-15);
        }
}

TEST_CASE("stage 2 lift: two negative powers collapse")
{
    const ComplexTriple p{{Complex(0.0, std::sqrt(0.2)), Complex(0.0, -std::sqrt(0.3)), Complex(-std::sqrt(1.5), 0.0)}};
    LiftDiagnostics diag;
    const ComplexTriple end = lift_r2(p, 1.0, 2, &diag);
    CHECK(distance(end, {{0.0, 0.0, -1.0}}) <= 1e-15);
    CHECK_FALSE(diag.used_fallback_direction);
    const ComplexTriple mid = lift_r2(p, 0.5, 2);
    CHECK(std::abs(power_sum(mid, 2) - 1.0) <= 1e-14);
    // every coordinate stays on its ray
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(std::abs(std::arg(mid[i]) - std::arg(p[i])) <= 1e-15);
}

TEST_CASE("stage 2 lift: region formulas agree on the border x^d = 0")
{
    for (int d = 1; d <= 5; ++d)
    {
        // y^d = 1.4, z^d = -0.4
        const ComplexTriple p{{Complex(0.0, 0.0), Complex(std::pow(1.4, 1.0 / d), 0.0),
                               std::polar(std::pow(0.4, 1.0 / d), pi / d)}};
        REQUIRE(std::abs(power_sum(p, d) - 1.0) < 1e-12);
        for (double t : {0.0, 0.25, 0.5, 1.0})
        {
            const ComplexTriple a = lift_r2_in_region(p, RegionTag(true, true, false), t, d);
            const ComplexTriple b = lift_r2_in_region(p, RegionTag(false, true, false), t, d);
            CHECK(distance(a, b) <= 1e-14);
        }
    }
}

TEST_CASE("stage 2 lift preconditions")
{
    CHECK_THROWS_AS(lift_r2({{Complex(0.5, 0.5), 0.5, 0.0}}, 0.5, 2), NotOnSurfaceError);
    CHECK_THROWS_AS(lift_r2({{1.0, 1.0, 0.0}}, 0.5, 2), NotOnSurfaceError);
}

TEST_CASE("full retraction: identity, fixity, endpoint and joint")
{
    std::mt19937_64 rng(14);
    for (int d = 1; d <= 5; ++d)
    {
        for (const auto& cell : affine_cells(d, 2))
        {
            const ComplexTriple p = realize(cell, oracle::interior_barycentric(cell, rng));
            for (int j = 0; j <= 8; ++j)
                CHECK(distance(retract_full(p, j / 8.0, d), p) <= 1e-10);
        }
        for (const auto& p : sample_md(d, 300, 70 + d))
        {
            CHECK(retract_full(p, 0.0, d) == p);
            const ComplexTriple end = retract_full(p, 1.0, d);
            CHECK_NOTHROW(locate(end, d, 1e-8));
            CHECK(distance(retract_full(p, 0.5 - 1e-12, d), retract_full(p, 0.5, d)) <= 1e-8);
            CHECK(distance(retract_full(p, 0.5 + 1e-12, d), retract_full(p, 0.5, d)) <= 1e-8);
        }
    }
    CHECK_THROWS_AS(retract_full({{2.0, 0.0, 0.0}}, 0.5, 2), NotOnSurfaceError);
}

TEST_CASE("sampling the Fermat surface")
{
    const auto one = sample_md(1, 1, 17);
    REQUIRE(one.size() == 1);
    CHECK(std::abs(one[0][0] + one[0][1] + one[0][2] - 1.0) <= 1e-14);
    CHECK(sample_md(4, 50, 2) == sample_md(4, 50, 2));
    CHECK(sample_md(4, 50, 2) != sample_md(4, 50, 3));
    const auto cubic = sample_md(3, 100, 7);
    CHECK(cubic.size() == 100);
    for (const auto& p : cubic)
        CHECK(std::abs(power_sum(p, 3) - 1.0) <= 1e-12);
    CHECK_THROWS_AS(sample_md(3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_md(0, 5, 1), std::invalid_argument);
}

TEST_CASE("normalizing homogeneous points")
{
    const double s = 1.0 / std::sqrt(3.0);
    CHECK(distance(normalize_projective({{1.0, 1.0, 1.0}}, 2), {{s, s, s}}) <= 1e-15);
    for (int d = 1; d <= 6; ++d)
        CHECK(distance(normalize_projective({{1.0, 0.0, 0.0}}, d), {{1.0, 0.0, 0.0}}) <= 1e-15);
    CHECK_THROWS_AS(normalize_projective({{1.0, Complex(0.0, 1.0), 0.0}}, 2), OnCurveError);
    CHECK_THROWS_AS(normalize_projective({{0.0, 0.0, 0.0}}, 2), std::invalid_argument);
    std::mt19937_64 rng(15);
    for (int d = 1; d <= 5; ++d)
        for (int i = 0; i < 100; ++i)
        {
            const ComplexTriple h{{standard_complex_normal(rng), standard_complex_normal(rng),
                                   standard_complex_normal(rng)}};
            CHECK(std::abs(power_sum(normalize_projective(h, d), d) - 1.0) <= 1e-12);
        }
}

TEST_CASE("monte carlo verification passes for degrees 1 and 4")
{
    for (int d : {1, 4})
    {
        VerifyOptions options;
        options.degree = d;
        options.samples = 1000;
        options.seed = 3;
        options.tol = 1e-8;
        options.steps = 64;
        const RetractionReport report = verify_retraction(options);
        CAPTURE(report.to_text());
        CHECK(report.verdict);
        CHECK(report.samples == 1000);
        CHECK(report.max_identity_defect == 0.0);
        CHECK(report.max_fixedpoint_drift <= 1e-10);
        CHECK(report.max_surface_residual <= 1e-9);
        CHECK(report.max_border_ratio <= kBorderRatioBound);
        CHECK(report.to_text().find("verdict:                 PASS") != std::string::npos);
    }
}

TEST_CASE("monte carlo verification catches the corrupted stage 1 flow")
{
    VerifyOptions options;
    options.degree = 3;
    options.samples = 200;
    options.seed = 3;
    options.flow = corrupted_rbar;
    const RetractionReport report = verify_retraction(options);
    CHECK_FALSE(report.verdict);
    CHECK(report.max_identity_defect > options.tol);
    CHECK(report.to_text().find("FAIL") != std::string::npos);
}

TEST_CASE("verification does not depend on the worker count")
{
    VerifyOptions options;
    options.degree = 3;
    options.samples = 300;
    options.seed = 21;
    options.workers = 1;
    const RetractionReport one = verify_retraction(options);
    options.workers = 4;
    const RetractionReport four = verify_retraction(options);
    CHECK(one.to_text() == four.to_text());
    CHECK(one.max_surface_residual == four.max_surface_residual);
    CHECK(one.max_border_ratio == four.max_border_ratio);
}

TEST_CASE("projective representative independence")
{
    ProjectiveOptions options;
    options.degree = 1;
    options.samples = 200;
    options.seed = 4;
    const RetractionReport trivial = verify_projective_invariance(options);
    CHECK(trivial.verdict);
    CHECK(trivial.max_projective_mismatch == 0.0);

    options.degree = 2;
    options.samples = 1000;
    options.seed = 11;
    const RetractionReport conic = verify_projective_invariance(options);
    CHECK(conic.verdict);
    CHECK(conic.max_projective_mismatch <= 1e-8);

    options.scaling = RepresentativeScaling::TwoDegreeRoot;
    const RetractionReport control = verify_projective_invariance(options);
    CHECK_FALSE(control.verdict);
    // not only evaluation errors: some completed trajectories end off the skeleton
    CHECK(control.locate_failures > 0);
}

TEST_CASE("report merging keeps maxima and sums counts")
{
    RetractionReport a, b;
    a.samples = 3;
    a.tolerance = 1e-8;
    a.max_surface_residual = 1e-12;
    a.locate_failures = 1;
    b.samples = 4;
    b.max_surface_residual = 1e-11;
    b.locate_failures = 2;
    a.merge(b);
    CHECK(a.samples == 7);
    CHECK(a.max_surface_residual == 1e-11);
    CHECK(a.locate_failures == 3);
    a.finalize();
    CHECK_FALSE(a.verdict);
    a.locate_failures = 0;
    a.finalize();
    CHECK(a.verdict);
}
