#include "fermat/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fermat/errors.hpp"

namespace fermat {

namespace {

constexpr double kCurveRejection = 1e-6;
constexpr double kSampleResidual = 1e-12;
constexpr double kOnCurveRelative = 1e-12;

Complex principal_root(Complex w, int degree)
{
    return std::polar(std::pow(std::abs(w), 1.0 / degree), std::arg(w) / degree);
}

} // namespace

std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t index, std::uint64_t purpose)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                      static_cast<std::uint32_t>(purpose)};
    return std::mt19937_64(seq);
}

Complex standard_complex_normal(std::mt19937_64& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

ComplexTriple sample_md_point(int degree, std::mt19937_64& rng)
{
    if (degree < 1)
        throw std::invalid_argument("sample_md: degree must be at least 1");
    std::uniform_int_distribution<int> branch(0, degree - 1);
    for (;;)
    {
        const Complex x = standard_complex_normal(rng);
        const Complex y = standard_complex_normal(rng);
        const Complex rest = 1.0 - ipow(x, degree) - ipow(y, degree);
        const int k = branch(rng);
        if (std::abs(rest) < kCurveRejection)
            continue;
        const Complex z = principal_root(rest, degree) * std::polar(1.0, 2.0 * std::numbers::pi * k / degree);
        ComplexTriple p{{x, y, z}};
        if (std::abs(power_sum(p, degree) - 1.0) <= kSampleResidual)
            return p;
    }
}

std::vector<ComplexTriple> sample_md(int degree, std::size_t n, std::uint64_t seed)
{
    if (n < 1)
        throw std::invalid_argument("sample_md: need at least one sample");
    std::vector<ComplexTriple> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        auto rng = sample_stream(seed, i);
        out.push_back(sample_md_point(degree, rng));
    }
    return out;
}

ComplexTriple normalize_projective(const ComplexTriple& h, int degree)
{
    if (degree < 1)
        throw std::invalid_argument("normalize_projective: degree must be at least 1");
    const Complex s = power_sum(h, degree);
    double scale = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        scale += std::pow(std::abs(h[i]), degree);
    if (scale == 0.0)
        throw std::invalid_argument("normalize_projective: the zero vector is not a projective point");
    if (std::abs(s) <= kOnCurveRelative * scale)
        throw OnCurveError("normalize_projective: point lies on the Fermat curve");
    const Complex lambda = principal_root(1.0 / s, degree);
    return {{lambda * h[0], lambda * h[1], lambda * h[2]}};
}

} // namespace fermat
