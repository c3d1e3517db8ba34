#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "fermat/complex_triple.hpp"

namespace fermat {

/// Independent generator for one sample; depends only on (seed, index, purpose).
std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t index, std::uint64_t purpose = 0);

Complex standard_complex_normal(std::mt19937_64& rng);

/**
 * One point of M_d: x, y complex standard normal, z a uniformly chosen d-th
 * root of 1 - x^d - y^d. Draws within 1e-6 of the curve, or whose residual
 * exceeds 1e-12, are redrawn.
 */
ComplexTriple sample_md_point(int degree, std::mt19937_64& rng);

/// n points; sample i comes from sample_stream(seed, i).
std::vector<ComplexTriple> sample_md(int degree, std::size_t n, std::uint64_t seed);

/// Scales a homogeneous point onto M_d with the principal d-th root. Throws OnCurveError on C_d.
ComplexTriple normalize_projective(const ComplexTriple& h, int degree);

} // namespace fermat
