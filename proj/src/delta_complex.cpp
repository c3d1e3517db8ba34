#include "fermat/delta_complex.hpp"

#include <sstream>
#include <stdexcept>

namespace fermat {

std::size_t DeltaComplex::cell_count(int dim) const
{
    switch (dim)
    {
    case 0: return vertex_count;
    case 1: return face1.size();
    case 2: return face2.size();
    default: throw std::invalid_argument("cell_count: dimension must be 0, 1 or 2");
    }
}

bool DeltaComplex::same_structure(const DeltaComplex& other) const
{
    return vertex_count == other.vertex_count && face1 == other.face1 && face2 == other.face2;
}

DeltaComplex base_triangle()
{
    DeltaComplex t;
    t.vertex_count = 3;
    // l0 = [v1,v2], l1 = [v0,v2], l2 = [v0,v1]
    t.face1 = {Face1{1, 2}, Face1{0, 2}, Face1{0, 1}};
    t.face2 = {Face2{0, 1, 2}};
    t.labels = {std::vector<std::string>{"v0", "v1", "v2"},
                std::vector<std::string>{"l0", "l1", "l2"},
                std::vector<std::string>{"X"}};
    return t;
}

IntegerMatrix boundary_matrix(const DeltaComplex& complex, int dim)
{
    if (dim == 2)
    {
        IntegerMatrix m(complex.face1.size(), complex.face2.size());
        for (std::size_t j = 0; j < complex.face2.size(); ++j)
        {
            const auto& f = complex.face2[j];
            m(f[0], j) += 1;
            m(f[1], j) -= 1;
            m(f[2], j) += 1;
        }
        return m;
    }
    if (dim == 1)
    {
        IntegerMatrix m(complex.vertex_count, complex.face1.size());
        for (std::size_t j = 0; j < complex.face1.size(); ++j)
        {
            const auto& f = complex.face1[j];
            m(f[1], j) += 1;
            m(f[0], j) -= 1;
        }
        return m;
    }
    throw std::invalid_argument("boundary_matrix: dimension must be 1 or 2, got " + std::to_string(dim));
}

namespace {

ValidationReport failure(int dim, std::size_t index, const std::string& what)
{
    std::ostringstream msg;
    msg << (dim == 2 ? "2-cell " : "1-cell ") << index << ": " << what;
    return ValidationReport{false, CellId{dim, index}, msg.str()};
}

} // namespace

ValidationReport validate(const DeltaComplex& complex)
{
    for (std::size_t j = 0; j < complex.face1.size(); ++j)
        for (std::size_t v : complex.face1[j])
            if (v >= complex.vertex_count)
                return failure(1, j, "face target " + std::to_string(v) + " out of range");

    for (std::size_t j = 0; j < complex.face2.size(); ++j)
    {
        const auto& f = complex.face2[j];
        for (std::size_t e : f)
            if (e >= complex.face1.size())
                return failure(2, j, "face target " + std::to_string(e) + " out of range");

        const auto& l0 = complex.face1[f[0]];
        const auto& l1 = complex.face1[f[1]];
        const auto& l2 = complex.face1[f[2]];
        // v0 is shared by d1 and d2, v1 by d2 and d0, v2 by d1 and d0
        if (l1[0] != l2[0])
            return failure(2, j, "d0(d1 X) != d0(d2 X)");
        if (l2[1] != l0[0])
            return failure(2, j, "d1(d2 X) != d0(d0 X)");
        if (l1[1] != l0[1])
            return failure(2, j, "d1(d1 X) != d1(d0 X)");
    }

    for (int dim = 0; dim < 3; ++dim)
    {
        const auto& labels = complex.labels[static_cast<std::size_t>(dim)];
        if (!labels.empty() && labels.size() != complex.cell_count(dim))
            return ValidationReport{false, std::nullopt,
                                    "label count mismatch in dimension " + std::to_string(dim)};
    }
    return {};
}

long long euler_characteristic(const DeltaComplex& complex)
{
    return static_cast<long long>(complex.vertex_count) - static_cast<long long>(complex.face1.size()) +
           static_cast<long long>(complex.face2.size());
}

} // namespace fermat
