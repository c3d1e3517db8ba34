#pragma once

#include <cstddef>
#include <vector>

#include "fermat/integer_matrix.hpp"

namespace fermat {

/// U * M * V = S with U, V unimodular and S diagonal, d1 | d2 | ... >= 0.
struct SNFResult
{
    IntegerMatrix S;
    IntegerMatrix U;
    IntegerMatrix V;

    /// Nonzero diagonal entries of S.
    std::vector<BigInt> invariant_factors() const;
    std::size_t rank() const { return invariant_factors().size(); }
};

/**
 * Smith normal form with exact transforms. The pivot is always the nonzero
 * entry of least absolute value; U * M * V == S is re-checked before
 * returning and a std::logic_error is thrown if it ever fails.
 */
SNFResult smith_normal_form(const IntegerMatrix& m);

/// Nonzero invariant factors only, without accumulating transforms.
std::vector<BigInt> smith_invariant_factors(const IntegerMatrix& m);

} // namespace fermat
