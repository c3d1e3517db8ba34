#include "fermat/retraction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "fermat/errors.hpp"

namespace fermat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPlaneTolerance = 1e-9;
constexpr double kRealPowerTolerance = 1e-8;
// Powers this close to zero are treated as non-negative when picking a region.
constexpr double kPowerSignTolerance = 1e-14;
constexpr double kAngleTolerance = 1e-9;
constexpr double kSectorBoundaryTolerance = 1e-12;

void require_time(double t)
{
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("time parameter must lie in [0, 1], got " + std::to_string(t));
}

void require_degree(int degree)
{
    if (degree < 1)
        throw std::invalid_argument("degree must be at least 1");
}

void require_on_surface(const ComplexTriple& p, int degree, double tol)
{
    const Complex residual = power_sum(p, degree) - 1.0;
    if (!(std::abs(residual) <= tol))
    {
        std::ostringstream msg;
        msg << "point is not on x^" << degree << " + y^" << degree << " + z^" << degree
            << " = 1 (residual " << std::abs(residual) << ")";
        throw NotOnSurfaceError(msg.str());
    }
}

/// Angle of w in [lo, lo + 2 pi).
double angle_from(Complex w, double lo)
{
    double a = std::arg(w);
    while (a < lo)
        a += 2.0 * kPi;
    while (a >= lo + 2.0 * kPi)
        a -= 2.0 * kPi;
    return a;
}

RegionTag classify(const RealTriple& q, double sign_tol)
{
    return RegionTag(q[0] >= -sign_tol, q[1] >= -sign_tol, q[2] >= -sign_tol);
}

RealTriple flow_in_region(const RealTriple& q, const RegionTag& region, double t)
{
    const RealTriple target = target_q_in_region(q, region);
    RealTriple out;
    for (std::size_t i = 0; i < 3; ++i)
        out[i] = (1.0 - t) * q[i] + t * target[i];
    return out;
}

void require_on_plane(const RealTriple& q)
{
    if (!(std::abs(q[0] + q[1] + q[2] - 1.0) <= kPlaneTolerance))
        throw NotOnSurfaceError("point is not on the plane x + y + z = 1");
}

ComplexTriple lift_r1_unchecked(const ComplexTriple& p, double t, int degree, PlanarFlow flow)
{
    ComplexTriple out;
    for (std::size_t i = 0; i < 3; ++i)
        out[i] = lift_g(p[i], t, degree, flow);
    return out;
}

RealTriple real_powers(const ComplexTriple& p, int degree)
{
    return {ipow(p[0], degree).real(), ipow(p[1], degree).real(), ipow(p[2], degree).real()};
}

} // namespace

Complex rbar(Complex w, double t)
{
    require_time(t);
    return {w.real(), (1.0 - t) * w.imag()};
}

ComplexTriple r1(const ComplexTriple& p, double t)
{
    require_on_surface(p, 1, kPlaneTolerance);
    return {{rbar(p[0], t), rbar(p[1], t), rbar(p[2], t)}};
}

RegionTag::RegionTag(bool x_nonneg, bool y_nonneg, bool z_nonneg) : nonneg_{x_nonneg, y_nonneg, z_nonneg}
{
    if (!x_nonneg && !y_nonneg && !z_nonneg)
        throw RegionError("sign pattern (-,-,-) cannot occur on x + y + z = 1");
}

RegionTag RegionTag::permuted(const std::array<std::size_t, 3>& perm) const
{
    // coordinate i of the result is coordinate perm[i] of this
    return RegionTag(nonneg_[perm[0]], nonneg_[perm[1]], nonneg_[perm[2]]);
}

std::string RegionTag::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < 3; ++i)
    {
        s += nonneg_[i] ? '+' : '-';
        s += i < 2 ? ',' : ')';
    }
    return s;
}

RegionTag region_of(const RealTriple& q, double tol)
{
    if (!(std::abs(q[0] + q[1] + q[2] - 1.0) <= tol))
        throw NotOnSurfaceError("region_of: point is not on the plane x + y + z = 1");
    return classify(q, tol);
}

RealTriple target_q_in_region(const RealTriple& q, const RegionTag& region)
{
    switch (region.positive_count())
    {
    case 3: return q;
    case 1: {
        RealTriple e{0.0, 0.0, 0.0};
        for (std::size_t i = 0; i < 3; ++i)
            if (region.nonneg(i))
                e[i] = 1.0;
        return e;
    }
    default: {
        std::size_t m = 0;
        while (region.nonneg(m))
            ++m;
        const double scale = 1.0 - q[m];
        RealTriple out{0.0, 0.0, 0.0};
        for (std::size_t i = 0; i < 3; ++i)
            if (i != m)
                out[i] = q[i] / scale;
        return out;
    }
    }
}

RealTriple target_q(const RealTriple& q)
{
    require_on_plane(q);
    return target_q_in_region(q, classify(q, 0.0));
}

RealTriple r2_in_region(const RealTriple& q, const RegionTag& region, double t)
{
    require_time(t);
    return flow_in_region(q, region, t);
}

RealTriple r2(const RealTriple& q, double t)
{
    require_time(t);
    require_on_plane(q);
    return flow_in_region(q, classify(q, 0.0), t);
}

SectorIndex::SectorIndex(int k, int degree) : k_(k), degree_(degree)
{
    require_degree(degree);
    if (k < 1 || k > 2 * degree)
        throw std::invalid_argument("sector index " + std::to_string(k) + " outside 1.." +
                                    std::to_string(2 * degree));
}

SectorIndex sector_of(Complex w, int degree)
{
    require_degree(degree);
    if (w == Complex{0.0, 0.0})
        throw std::invalid_argument("sector_of: zero has no sector");
    const double q = angle_from(w, 0.0) * degree / kPi;
    const double m = std::round(q);
    if (std::abs(q - m) <= kSectorBoundaryTolerance)
        return SectorIndex(m < 1.0 ? 1 : static_cast<int>(m), degree);
    const int k = static_cast<int>(std::floor(q)) + 1;
    return SectorIndex(std::clamp(k, 1, 2 * degree), degree);
}

Complex f_k(Complex w, const SectorIndex& sector)
{
    if (w == Complex{0.0, 0.0})
        return w;
    const int d = sector.degree();
    const int k = sector.k();
    double theta;
    if (sector.odd())
    {
        theta = angle_from(w, -kPi / 2.0);
        if (theta < -kAngleTolerance || theta > kPi + kAngleTolerance)
            throw std::domain_error("f_k: odd sector expects the closed upper half-plane");
    }
    else
    {
        theta = angle_from(w, kPi / 2.0);
        if (theta < kPi - kAngleTolerance || theta > 2.0 * kPi + kAngleTolerance)
            throw std::domain_error("f_k: even sector expects the closed lower half-plane");
        theta -= kPi;
    }
    const double phi = theta / d + (k - 1) * kPi / d;
    return std::polar(std::pow(std::abs(w), 1.0 / d), phi);
}

Complex f_k_inv(Complex w, const SectorIndex& sector)
{
    if (w == Complex{0.0, 0.0})
        return w;
    const int d = sector.degree();
    const int k = sector.k();
    const double lo = (k - 1) * kPi / d;
    const double hi = k * kPi / d;
    const double phi = angle_from(w, (lo + hi) / 2.0 - kPi);
    if (phi < lo - kAngleTolerance || phi > hi + kAngleTolerance)
        throw std::domain_error("f_k_inv: point is outside sector " + std::to_string(k));
    double theta = d * (phi - lo);
    if (!sector.odd())
        theta += kPi;
    return std::polar(std::pow(std::abs(w), static_cast<double>(d)), theta);
}

Complex lift_g(Complex w, double t, int degree, PlanarFlow flow)
{
    require_degree(degree);
    if (w == Complex{0.0, 0.0})
        return w;
    const SectorIndex sector = sector_of(w, degree);
    const Complex down = f_k_inv(w, sector);
    const Complex moved = flow(down, t);
    if (moved == down)
        return w;
    return f_k(moved, sector);
}

ComplexTriple lift_r1(const ComplexTriple& p, double t, int degree, PlanarFlow flow)
{
    require_degree(degree);
    require_on_surface(p, degree, kPlaneTolerance);
    return lift_r1_unchecked(p, t, degree, flow);
}

ComplexTriple lift_r2_in_region(const ComplexTriple& p, const RegionTag& region, double t, int degree,
                                LiftDiagnostics* diag)
{
    require_degree(degree);
    require_time(t);
    const RealTriple powers = real_powers(p, degree);
    const RealTriple moved = flow_in_region(powers, region, t);
    ComplexTriple out;
    for (std::size_t i = 0; i < 3; ++i)
    {
        const double s = moved[i];
        if (s == powers[i])
        {
            out[i] = p[i];
            continue;
        }
        const double magnitude = std::pow(std::abs(s), 1.0 / degree);
        const double r = std::abs(p[i]);
        Complex direction;
        if (r > 0.0)
            direction = p[i] / r;
        else
        {
            // Only reachable if a zero coordinate has to grow.
            direction = s >= 0.0 ? Complex{1.0, 0.0} : std::polar(1.0, kPi / degree);
            if (s != 0.0 && diag)
                diag->used_fallback_direction = true;
        }
        out[i] = direction * magnitude;
    }
    return out;
}

ComplexTriple lift_r2(const ComplexTriple& p, double t, int degree, LiftDiagnostics* diag)
{
    require_degree(degree);
    double imag = 0.0;
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < 3; ++i)
    {
        const Complex pw = ipow(p[i], degree);
        imag = std::max(imag, std::abs(pw.imag()));
        sum += pw;
    }
    if (!(imag <= kRealPowerTolerance) || !(std::abs(sum - 1.0) <= kRealPowerTolerance))
        throw NotOnSurfaceError("lift_r2: coordinates must have real powers summing to 1");
    return lift_r2_in_region(p, classify(real_powers(p, degree), kPowerSignTolerance), t, degree, diag);
}

ComplexTriple retract_full(const ComplexTriple& p, double t, int degree, PlanarFlow flow, LiftDiagnostics* diag)
{
    require_degree(degree);
    require_time(t);
    require_on_surface(p, degree, kPlaneTolerance);
    if (t <= 0.5)
        return lift_r1_unchecked(p, 2.0 * t, degree, flow);
    return lift_r2(lift_r1_unchecked(p, 1.0, degree, flow), 2.0 * t - 1.0, degree, diag);
}

namespace detail {

ComplexTriple retract_unchecked(const ComplexTriple& p, double t, int degree, PlanarFlow flow)
{
    require_degree(degree);
    require_time(t);
    if (t <= 0.5)
        return lift_r1_unchecked(p, 2.0 * t, degree, flow);
    const ComplexTriple real_locus = lift_r1_unchecked(p, 1.0, degree, flow);
    const RealTriple powers = real_powers(real_locus, degree);
    return lift_r2_in_region(real_locus, classify(powers, kPowerSignTolerance), 2.0 * t - 1.0, degree);
}

} // namespace detail

} // namespace fermat
