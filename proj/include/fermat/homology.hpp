#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "fermat/delta_complex.hpp"
#include "fermat/integer_matrix.hpp"

namespace fermat {

/// Z^rank + Z/t1 + Z/t2 + ... with t1 | t2 | ..., every ti >= 2.
struct AbelianGroup
{
    std::size_t rank = 0;
    std::vector<BigInt> torsion;

    std::string to_string() const;  // "0", "Z", "Z^3 + Z/2"

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// H0, H1, H2 over the integers. Throws std::invalid_argument on an invalid complex.
std::array<AbelianGroup, 3> homology(const DeltaComplex& complex);

struct HomologySummary
{
    std::array<std::size_t, 3> cell_counts{};
    std::array<AbelianGroup, 3> groups;
    long long euler_from_cells = 0;
    long long euler_from_betti = 0;

    bool euler_consistent() const { return euler_from_cells == euler_from_betti; }
    std::array<std::size_t, 3> betti() const { return {groups[0].rank, groups[1].rank, groups[2].rank}; }
    std::string to_text() const;
};

HomologySummary betti_and_torsion_summary(const DeltaComplex& complex);

} // namespace fermat
