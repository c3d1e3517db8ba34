#include "fermat/homology.hpp"

#include <sstream>
#include <stdexcept>

#include "fermat/smith.hpp"

namespace fermat {

std::string AbelianGroup::to_string() const
{
    std::vector<std::string> parts;
    if (rank == 1)
        parts.emplace_back("Z");
    else if (rank > 1)
        parts.push_back("Z^" + std::to_string(rank));
    for (const auto& t : torsion)
        parts.push_back("Z/" + t.get_str());
    if (parts.empty())
        return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        out += " + " + parts[i];
    return out;
}

namespace {

struct BoundaryData
{
    std::size_t rank = 0;
    std::vector<BigInt> torsion;
};

BoundaryData analyze(const IntegerMatrix& boundary)
{
    BoundaryData data;
    for (const auto& f : smith_invariant_factors(boundary))
    {
        ++data.rank;
        if (cmp(f, 1) > 0)
            data.torsion.push_back(f);
    }
    return data;
}

} // namespace

std::array<AbelianGroup, 3> homology(const DeltaComplex& complex)
{
    if (auto report = validate(complex); !report)
        throw std::invalid_argument("homology: invalid complex: " + report.message);

    const auto d1 = analyze(boundary_matrix(complex, 1));
    const auto d2 = analyze(boundary_matrix(complex, 2));
    const std::size_t n0 = complex.cell_count(0);
    const std::size_t n1 = complex.cell_count(1);
    const std::size_t n2 = complex.cell_count(2);

    std::array<AbelianGroup, 3> h;
    h[0] = AbelianGroup{n0 - d1.rank, d1.torsion};
    h[1] = AbelianGroup{n1 - d1.rank - d2.rank, d2.torsion};
    h[2] = AbelianGroup{n2 - d2.rank, {}};
    return h;
}

HomologySummary betti_and_torsion_summary(const DeltaComplex& complex)
{
    HomologySummary s;
    s.cell_counts = {complex.cell_count(0), complex.cell_count(1), complex.cell_count(2)};
    s.groups = homology(complex);
    s.euler_from_cells = euler_characteristic(complex);
    s.euler_from_betti = static_cast<long long>(s.groups[0].rank) - static_cast<long long>(s.groups[1].rank) +
                         static_cast<long long>(s.groups[2].rank);
    return s;
}

std::string HomologySummary::to_text() const
{
    std::ostringstream out;
    out << "cells: " << cell_counts[0] << " vertices, " << cell_counts[1] << " edges, " << cell_counts[2]
        << " faces\n";
    for (std::size_t i = 0; i < 3; ++i)
        out << "H" << i << " = " << groups[i].to_string() << '\n';
    const auto b = betti();
    out << "betti: (" << b[0] << ", " << b[1] << ", " << b[2] << ")\n";
    out << "euler characteristic: " << euler_from_cells << (euler_consistent() ? " (consistent)" : " (MISMATCH)")
        << '\n';
    return out.str();
}

} // namespace fermat
