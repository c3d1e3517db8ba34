/**
 * Deformation retraction of M_d = {x^d + y^d + z^d = 1} onto its real
 * skeleton S_d, built by lifting two planar flows on M_1 through the
 * branched cover (x, y, z) -> (x^d, y^d, z^d).
 *
 * Stage 1 squeezes imaginary parts: rbar(w, t) = Re w + (1 - t) i Im w,
 * lifted coordinatewise by G = f_k o rbar o f_k^{-1}, where f_k maps a
 * closed half-plane onto the k-th sector of angle pi/d.
 *
 * Stage 2 pushes the real plane x + y + z = 1 onto the triangle S_1 region
 * by region, and is lifted by moving every coordinate along its own ray.
 */
#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "fermat/complex_triple.hpp"

namespace fermat {

using RealTriple = std::array<double, 3>;

/// Planar flow on C; the stage 1 flow is rbar.
using PlanarFlow = Complex (*)(Complex, double);

Complex rbar(Complex w, double t);

/// Componentwise rbar on M_1. Throws NotOnSurfaceError if |x + y + z - 1| > 1e-9.
ComplexTriple r1(const ComplexTriple& p, double t);

/// One of the seven closed sign regions of the plane x + y + z = 1; never (-,-,-).
class RegionTag
{
public:
    /// Throws RegionError for the all-negative pattern.
    RegionTag(bool x_nonneg, bool y_nonneg, bool z_nonneg);

    bool nonneg(std::size_t i) const { return nonneg_[i]; }
    int positive_count() const { return nonneg_[0] + nonneg_[1] + nonneg_[2]; }
    RegionTag permuted(const std::array<std::size_t, 3>& perm) const;
    std::string to_string() const;  // "(+,+,-)"

    friend bool operator==(const RegionTag&, const RegionTag&) = default;

private:
    std::array<bool, 3> nonneg_;
};

/// Coordinates within tol of zero count as non-negative. Throws NotOnSurfaceError off the plane.
RegionTag region_of(const RealTriple& q, double tol);

/// Image of q under the completed stage 2 flow, i.e. its target in S_1.
RealTriple target_q(const RealTriple& q);
/// Same, but with the region formula forced (used for gluing checks on borders).
RealTriple target_q_in_region(const RealTriple& q, const RegionTag& region);

/// (1 - t) q + t target_q(q).
RealTriple r2(const RealTriple& q, double t);
RealTriple r2_in_region(const RealTriple& q, const RegionTag& region, double t);

/// Sector k in 1..2d of angle [(k-1) pi/d, k pi/d]; odd k pair with the upper half-plane.
class SectorIndex
{
public:
    SectorIndex(int k, int degree);

    int k() const { return k_; }
    int degree() const { return degree_; }
    bool odd() const { return k_ % 2 == 1; }

    friend bool operator==(const SectorIndex&, const SectorIndex&) = default;

private:
    int k_;
    int degree_;
};

/// Throws std::invalid_argument for w = 0. Boundary rays belong to the lower sector, arg 0 to sector 1.
SectorIndex sector_of(Complex w, int degree);

/// Half-plane -> sector k. Throws std::domain_error outside the closed half-plane.
Complex f_k(Complex w, const SectorIndex& sector);
/// Sector k -> half-plane. Throws std::domain_error outside the closed sector.
Complex f_k_inv(Complex w, const SectorIndex& sector);

/// Lift of a planar flow through w -> w^d: lift_g(w, t)^d == flow(w^d, t).
Complex lift_g(Complex w, double t, int degree, PlanarFlow flow = rbar);

/// Stage 1 on M_d.
ComplexTriple lift_r1(const ComplexTriple& p, double t, int degree, PlanarFlow flow = rbar);

struct LiftDiagnostics
{
    /// A zero coordinate had to grow and was given the residue-0 direction.
    bool used_fallback_direction = false;
};

/// Stage 2 on the real-power locus of M_d.
ComplexTriple lift_r2(const ComplexTriple& p, double t, int degree, LiftDiagnostics* diag = nullptr);
ComplexTriple lift_r2_in_region(const ComplexTriple& p, const RegionTag& region, double t, int degree,
                                LiftDiagnostics* diag = nullptr);

/// Stage 1 on [0, 1/2] then stage 2 on [1/2, 1], each reparameterized by 2t.
ComplexTriple retract_full(const ComplexTriple& p, double t, int degree, PlanarFlow flow = rbar,
                           LiftDiagnostics* diag = nullptr);

namespace detail {

/// retract_full without the surface precondition; used by negative controls.
ComplexTriple retract_unchecked(const ComplexTriple& p, double t, int degree, PlanarFlow flow);

} // namespace detail

} // namespace fermat
