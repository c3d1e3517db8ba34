/**
 * Finite 2-dimensional Delta-complexes with exact integer boundary operators.
 *
 * A 2-cell X carries an ordered triple of faces (d0 X, d1 X, d2 X) and a
 * 1-cell l carries an ordered pair (d0 l, d1 l) = (start, end). The base
 * triangle [v0, v1, v2] has d0 X = [v1,v2], d1 X = [v0,v2], d2 X = [v0,v1].
 *
 * Boundary maps use
 *
 *     boundary_2 = d2 - d1 + d0,      boundary_1 = d1 - d0,
 *
 * so an edge maps to (end - start). Coincident faces accumulate, which is
 * how quotients with self-glued cells are represented.
 */
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fermat/integer_matrix.hpp"

namespace fermat {

struct CellId
{
    int dim = 0;
    std::size_t index = 0;

    friend bool operator==(const CellId&, const CellId&) = default;
};

using Face2 = std::array<std::size_t, 3>;
using Face1 = std::array<std::size_t, 2>;

struct DeltaComplex
{
    std::size_t vertex_count = 0;
    std::vector<Face2> face2;  ///< per 2-cell: (d0, d1, d2) as 1-cell indices
    std::vector<Face1> face1;  ///< per 1-cell: (d0, d1) as 0-cell indices
    /// Optional human-readable labels; an empty vector means unlabeled.
    std::array<std::vector<std::string>, 3> labels;

    std::size_t cell_count(int dim) const;

    /// Structural equality: counts and face maps. Labels are ignored.
    bool same_structure(const DeltaComplex& other) const;
};

struct ValidationReport
{
    bool valid = true;
    std::optional<CellId> offending;
    std::string message;

    explicit operator bool() const { return valid; }
};

/// The single triangle [v0, v1, v2].
DeltaComplex base_triangle();

/// Matrix of the boundary map in dimension 1 or 2 (cell bases, columns = source cells).
IntegerMatrix boundary_matrix(const DeltaComplex& complex, int dim);

ValidationReport validate(const DeltaComplex& complex);

long long euler_characteristic(const DeltaComplex& complex);

} // namespace fermat
