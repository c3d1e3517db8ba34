#include "fermat/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "fermat/fermat_complex.hpp"
#include "fermat/sampling.hpp"

namespace fermat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
constexpr double kStraddleOffset = 1e-6;
constexpr std::size_t kProjectiveTimeSteps = 9;

enum StreamPurpose : std::uint64_t { kRetractionStream = 0, kProjectiveStream = 1 };

void raise(double& acc, double value)
{
    if (std::isnan(value))
        value = kInf;
    acc = std::max(acc, value);
}

template <typename PerSample>
RetractionReport run_samples(std::size_t n, unsigned workers, double tol, PerSample per_sample)
{
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));

    std::vector<RetractionReport> partial(workers);
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w)
    {
        pool.emplace_back([&, w] {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(n, begin + chunk);
            for (std::size_t i = begin; i < end; ++i)
                per_sample(i, partial[w]);
        });
    }
    for (auto& th : pool)
        th.join();

    RetractionReport report;
    for (const auto& p : partial)
        report.merge(p);
    report.samples = n;
    report.tolerance = tol;
    report.finalize();
    return report;
}

std::vector<double> time_grid(std::size_t steps)
{
    if (steps < 2)
        throw std::invalid_argument("time grid needs at least 2 points");
    std::vector<double> grid(steps);
    for (std::size_t j = 0; j < steps; ++j)
        grid[j] = static_cast<double>(j) / static_cast<double>(steps - 1);
    grid.back() = 1.0;
    return grid;
}

/// How far p is from S_d: non-real or negative powers, and the power sum.
double skeleton_defect(const ComplexTriple& p, int degree)
{
    double defect = 0.0;
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < 3; ++i)
    {
        const Complex pw = ipow(p[i], degree);
        sum += pw;
        raise(defect, std::abs(pw.imag()));
        raise(defect, -pw.real());
    }
    raise(defect, std::abs(sum - 1.0));
    return defect;
}

/// Coordinate with real d-th power `power` on ray number `ray`.
Complex lift_power(double power, int ray, int degree)
{
    const double angle = (2.0 * kPi * ray + (power < 0.0 ? kPi : 0.0)) / degree;
    return std::polar(std::pow(std::abs(power), 1.0 / degree), angle);
}

ComplexTriple lift_powers(const RealTriple& powers, const std::array<int, 3>& rays, int degree)
{
    return {{lift_power(powers[0], rays[0], degree), lift_power(powers[1], rays[1], degree),
             lift_power(powers[2], rays[2], degree)}};
}

/// A border of the region (+,+,-) in power space together with its neighbour.
struct BorderCase
{
    RealTriple point;
    RealTriple crossing;  ///< in-plane direction leaving side `a` for side `b`
    RegionTag a;
    RegionTag b;
};

BorderCase draw_border(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> pick(0, 2);
    const int type = pick(rng);
    BorderCase c{{}, {}, RegionTag(true, true, true), RegionTag(true, true, false)};
    if (type == 0)
    {
        // z = 0 between (+,+,+) and (+,+,-)
        const double a = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
        c = {{a, 1.0 - a, 0.0}, {0.5, 0.5, -1.0}, RegionTag(true, true, true), RegionTag(true, true, false)};
    }
    else if (type == 1)
    {
        // x = 0 between (+,+,-) and (-,+,-)
        const double z = std::uniform_real_distribution<double>(-3.0, -0.05)(rng);
        c = {{0.0, 1.0 - z, z}, {-1.0, 0.5, 0.5}, RegionTag(true, true, false), RegionTag(false, true, false)};
    }
    else
    {
        // y = 0 between (+,+,-) and (+,-,-)
        const double z = std::uniform_real_distribution<double>(-3.0, -0.05)(rng);
        c = {{1.0 - z, 0.0, z}, {0.5, -1.0, 0.5}, RegionTag(true, true, false), RegionTag(true, false, false)};
    }

    static constexpr std::array<std::array<std::size_t, 3>, 6> kPerms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    const auto& perm = kPerms[std::uniform_int_distribution<std::size_t>(0, 5)(rng)];
    BorderCase out = c;
    for (std::size_t i = 0; i < 3; ++i)
    {
        out.point[i] = c.point[perm[i]];
        out.crossing[i] = c.crossing[perm[i]];
    }
    out.a = c.a.permuted(perm);
    out.b = c.b.permuted(perm);
    return out;
}

std::array<int, 3> draw_rays(std::mt19937_64& rng, int degree)
{
    std::uniform_int_distribution<int> ray(0, degree - 1);
    return {ray(rng), ray(rng), ray(rng)};
}

std::array<double, 3> draw_barycentric(std::mt19937_64& rng, CellKind kind)
{
    std::exponential_distribution<double> expo(1.0);
    std::array<double, 3> b{0.0, 0.0, 0.0};
    double total = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        if (stores_coordinate(kind, i))
        {
            b[i] = expo(rng) + 1e-3;
            total += b[i];
        }
    for (auto& v : b)
        v /= total;
    // land exactly on the simplex
    std::size_t last = 2;
    while (!stores_coordinate(kind, last))
        --last;
    double rest = 1.0;
    for (std::size_t i = 0; i < 3; ++i)
        if (i != last)
            rest -= b[i];
    b[last] = rest;
    return b;
}

} // namespace

void RetractionReport::merge(const RetractionReport& other)
{
    samples += other.samples;
    raise(max_surface_residual, other.max_surface_residual);
    raise(max_endpoint_defect, other.max_endpoint_defect);
    raise(max_identity_defect, other.max_identity_defect);
    raise(max_fixedpoint_drift, other.max_fixedpoint_drift);
    raise(max_border_mismatch, other.max_border_mismatch);
    raise(max_border_ratio, other.max_border_ratio);
    raise(max_projective_mismatch, other.max_projective_mismatch);
    locate_failures += other.locate_failures;
    evaluation_failures += other.evaluation_failures;
    zero_direction_samples += other.zero_direction_samples;
}

void RetractionReport::finalize()
{
    const double residuals[] = {max_surface_residual, max_endpoint_defect, max_identity_defect,
                                max_fixedpoint_drift, max_border_mismatch,  max_projective_mismatch};
    verdict = std::all_of(std::begin(residuals), std::end(residuals), [&](double r) { return r <= tolerance; }) &&
              max_border_ratio <= kBorderRatioBound && locate_failures == 0 && evaluation_failures == 0;
}

std::string RetractionReport::to_text() const
{
    std::ostringstream out;
    out.precision(3);
    out << std::scientific;
    out << "samples:                 " << samples << '\n'
        << "tolerance:               " << tolerance << '\n'
        << "max surface residual:    " << max_surface_residual << '\n'
        << "max endpoint defect:     " << max_endpoint_defect << '\n'
        << "max identity defect:     " << max_identity_defect << '\n'
        << "max fixed-point drift:   " << max_fixedpoint_drift << '\n'
        << "max border mismatch:     " << max_border_mismatch << '\n'
        << "max border ratio:        " << max_border_ratio << " (bound " << kBorderRatioBound << ")\n"
        << "max projective mismatch: " << max_projective_mismatch << '\n'
        << "locate failures:         " << locate_failures << '\n'
        << "evaluation failures:     " << evaluation_failures << '\n'
        << "zero-direction samples:  " << zero_direction_samples << '\n'
        << "verdict:                 " << (verdict ? "PASS" : "FAIL") << '\n';
    return out.str();
}

RetractionReport verify_retraction(const VerifyOptions& options)
{
    const int d = options.degree;
    if (d < 1)
        throw std::invalid_argument("verify_retraction: degree must be at least 1");
    const auto grid = time_grid(options.steps);
    const std::array<std::vector<AffineCellLabel>, 3> cells = {affine_cells(d, 0), affine_cells(d, 1),
                                                               affine_cells(d, 2)};
    const PlanarFlow flow = options.flow;

    auto per_sample = [&](std::size_t index, RetractionReport& acc) {
        auto rng = sample_stream(options.seed, index, kRetractionStream);
        LiftDiagnostics diag;

        // trajectories from a generic point of M_d
        const ComplexTriple p = sample_md_point(d, rng);
        try
        {
            raise(acc.max_identity_defect, distance(retract_full(p, 0.0, d, flow, &diag), p));
            for (double t : grid)
            {
                const ComplexTriple q = retract_full(p, t, d, flow, &diag);
                raise(acc.max_surface_residual, std::abs(power_sum(q, d) - 1.0));
                if (t == 1.0)
                {
                    raise(acc.max_endpoint_defect, skeleton_defect(q, d));
                    try
                    {
                        (void)locate(q, d, options.tol);
                    }
                    catch (const std::exception&)
                    {
                        ++acc.locate_failures;
                    }
                }
            }
        }
        catch (const std::exception&)
        {
            ++acc.evaluation_failures;
        }

        // points of S_d must not move
        const int dim = std::uniform_int_distribution<int>(0, 2)(rng);
        const auto& pool = cells[static_cast<std::size_t>(dim)];
        const auto& cell = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        const ComplexTriple fixed = realize(cell, draw_barycentric(rng, cell.kind));
        try
        {
            for (double t : grid)
                raise(acc.max_fixedpoint_drift, distance(retract_full(fixed, t, d, flow, &diag), fixed));
        }
        catch (const std::exception&)
        {
            ++acc.evaluation_failures;
        }

        // gluing of the stage 2 region formulas
        const BorderCase border = draw_border(rng);
        const auto rays = draw_rays(rng, d);
        const ComplexTriple on_border = lift_powers(border.point, rays, d);
        RealTriple plus, minus;
        for (std::size_t i = 0; i < 3; ++i)
        {
            plus[i] = border.point[i] + kStraddleOffset * border.crossing[i];
            minus[i] = border.point[i] - kStraddleOffset * border.crossing[i];
        }
        const ComplexTriple side_b = lift_powers(plus, rays, d);
        const ComplexTriple side_a = lift_powers(minus, rays, d);
        const double input_gap = distance(side_a, side_b);
        try
        {
            for (double t : grid)
            {
                raise(acc.max_border_mismatch, distance(lift_r2_in_region(on_border, border.a, t, d, &diag),
                                                        lift_r2_in_region(on_border, border.b, t, d, &diag)));
                const double image_gap = distance(lift_r2(side_a, t, d, &diag), lift_r2(side_b, t, d, &diag));
                raise(acc.max_border_ratio, image_gap / input_gap);
            }
        }
        catch (const std::exception&)
        {
            ++acc.evaluation_failures;
        }

        if (diag.used_fallback_direction)
            ++acc.zero_direction_samples;
    };

    return run_samples(options.samples, options.workers, options.tol, per_sample);
}

RetractionReport verify_projective_invariance(const ProjectiveOptions& options)
{
    const int d = options.degree;
    if (d < 1)
        throw std::invalid_argument("verify_projective_invariance: degree must be at least 1");
    const auto grid = time_grid(kProjectiveTimeSteps);

    auto per_sample = [&](std::size_t index, RetractionReport& acc) {
        auto rng = sample_stream(options.seed, index, kProjectiveStream);
        ComplexTriple h;
        for (;;)
        {
            h = {{standard_complex_normal(rng), standard_complex_normal(rng), standard_complex_normal(rng)}};
            double scale = 0.0;
            for (std::size_t i = 0; i < 3; ++i)
                scale += std::pow(std::abs(h[i]), d);
            if (std::abs(power_sum(h, d)) >= 1e-6 * scale)
                break;
        }
        const ComplexTriple p = normalize_projective(h, d);

        Complex lambda{1.0, 0.0};
        if (options.scaling == RepresentativeScaling::UnityRoot)
        {
            const int k = d > 1 ? std::uniform_int_distribution<int>(1, d - 1)(rng) : 0;
            lambda = UnityIndex(d, k).value();
        }
        else
        {
            const int k = std::uniform_int_distribution<int>(0, d - 1)(rng);
            lambda = std::polar(1.0, kPi * (2 * k + 1) / d);
        }
        const ComplexTriple q{{lambda * p[0], lambda * p[1], lambda * p[2]}};

        try
        {
            for (double t : grid)
            {
                const ComplexTriple e1 = retract_full(p, t, d);
                const ComplexTriple e2 = options.scaling == RepresentativeScaling::UnityRoot
                                             ? retract_full(q, t, d)
                                             : detail::retract_unchecked(q, t, d, rbar);
                double best = kInf;
                for (int j = 0; j < d; ++j)
                {
                    const Complex w = UnityIndex(d, j).value();
                    best = std::min(best, distance(e2, ComplexTriple{{w * e1[0], w * e1[1], w * e1[2]}}));
                }
                raise(acc.max_projective_mismatch, best);

                if (t == 1.0)
                {
                    try
                    {
                        if (canonical_projective(locate(e1, d, options.tol)) !=
                            canonical_projective(locate(e2, d, options.tol)))
                            raise(acc.max_projective_mismatch, kInf);
                    }
                    catch (const std::exception&)
                    {
                        ++acc.locate_failures;
                    }
                }
            }
        }
        catch (const std::exception&)
        {
            ++acc.evaluation_failures;
            raise(acc.max_projective_mismatch, kInf);
        }
    };

    return run_samples(options.samples, options.workers, options.tol, per_sample);
}

} // namespace fermat
