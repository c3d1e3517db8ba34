#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "fermat/retraction.hpp"

namespace fermat {

/// Largest ratio |image difference| / |input difference| accepted for straddling border pairs.
inline constexpr double kBorderRatioBound = 10.0;

/**
 * Aggregated residuals of a Monte-Carlo run. Every max_* field is a
 * non-negative residual compared against `tolerance`; the verdict also
 * requires the border ratio to stay within kBorderRatioBound and no sample
 * to fail evaluation or location.
 */
struct RetractionReport
{
    std::size_t samples = 0;
    double tolerance = 0.0;

    double max_surface_residual = 0.0;     ///< |x^d + y^d + z^d - 1| along trajectories
    double max_endpoint_defect = 0.0;      ///< distance of the t = 1 image from S_d membership
    double max_identity_defect = 0.0;      ///< |H(P, 0) - P|
    double max_fixedpoint_drift = 0.0;     ///< motion of points of S_d
    double max_border_mismatch = 0.0;      ///< adjacent region formulas on a shared border
    double max_border_ratio = 0.0;         ///< straddling pairs, image vs input distance
    double max_projective_mismatch = 0.0;  ///< two representatives of one projective point

    std::size_t locate_failures = 0;
    std::size_t evaluation_failures = 0;
    std::size_t zero_direction_samples = 0;

    bool verdict = false;

    void merge(const RetractionReport& other);
    /// Recomputes `verdict` from the residuals.
    void finalize();
    std::string to_text() const;
};

struct VerifyOptions
{
    int degree = 1;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    double tol = 1e-8;
    std::size_t steps = 64;   ///< time grid t_j = j / (steps - 1)
    unsigned workers = 0;     ///< 0 = hardware concurrency
    PlanarFlow flow = rbar;   ///< replaced only by negative controls
};

RetractionReport verify_retraction(const VerifyOptions& options);

enum class RepresentativeScaling
{
    UnityRoot,      ///< lambda^d = 1, the valid change of representative
    TwoDegreeRoot,  ///< lambda^d = -1; negative control
};

struct ProjectiveOptions
{
    int degree = 1;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    double tol = 1e-8;
    unsigned workers = 0;
    RepresentativeScaling scaling = RepresentativeScaling::UnityRoot;
};

RetractionReport verify_projective_invariance(const ProjectiveOptions& options);

} // namespace fermat
