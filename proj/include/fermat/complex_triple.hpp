#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace fermat {

using Complex = std::complex<double>;

/// A point of C^3.
struct ComplexTriple
{
    std::array<Complex, 3> c{};

    Complex& operator[](std::size_t i) { return c[i]; }
    const Complex& operator[](std::size_t i) const { return c[i]; }

    bool finite() const
    {
        return std::all_of(c.begin(), c.end(), [](const Complex& w) {
            return std::isfinite(w.real()) && std::isfinite(w.imag());
        });
    }

    friend bool operator==(const ComplexTriple&, const ComplexTriple&) = default;
};

/// w^n by repeated squaring; n >= 0.
inline Complex ipow(Complex w, int n)
{
    Complex result{1.0, 0.0};
    while (n > 0)
    {
        if (n & 1)
            result *= w;
        w *= w;
        n >>= 1;
    }
    return result;
}

inline Complex power_sum(const ComplexTriple& p, int d)
{
    return ipow(p[0], d) + ipow(p[1], d) + ipow(p[2], d);
}

/// Max over coordinates of |a_i - b_i|.
inline double distance(const ComplexTriple& a, const ComplexTriple& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace fermat
