/**
 * Delta-complexes of the real skeleton of the Fermat surface x^d + y^d + z^d = 1
 * (affine) and of its quotient by the diagonal roots of unity (projective).
 *
 * Roots of unity are exact residues modulo d: residue k stands for
 * exp(2 pi i k / d). Affine cells:
 *
 *     X(a,b,c)   2-cell, d^3 of them
 *     Lx(b,c), Ly(a,c), Lz(a,b)   1-cells on {x=0}, {y=0}, {z=0}
 *     Vx(a), Vy(b), Vz(c)         vertices
 *
 * Face maps are the mu_d^3 translates of those of X(0,0,0):
 *
 *     d0 X = Lx,  d1 X = Ly,  d2 X = Lz
 *     Lx: Vy -> Vz,   Ly: Vx -> Vz,   Lz: Vx -> Vy
 *
 * Within each dimension cells are ordered lexicographically by (kind,
 * stored residues); that order fixes every matrix and document layout.
 */
#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "fermat/complex_triple.hpp"
#include "fermat/delta_complex.hpp"

namespace fermat {

/// An element of mu_d, stored as its residue.
class UnityIndex
{
public:
    UnityIndex(int degree, long long k);

    int degree() const { return degree_; }
    int k() const { return k_; }
    Complex value() const;

    friend bool operator==(const UnityIndex&, const UnityIndex&) = default;

private:
    int degree_;
    int k_;
};

/// An element of mu_d^3; the group law is componentwise addition of residues.
class UnityTuple
{
public:
    UnityTuple(int degree, long long a, long long b, long long c);

    static UnityTuple identity(int degree) { return UnityTuple(degree, 0, 0, 0); }
    static UnityTuple diagonal(int degree, long long k) { return UnityTuple(degree, k, k, k); }

    int degree() const { return degree_; }
    int operator[](std::size_t i) const { return k_[i]; }
    UnityIndex component(std::size_t i) const { return UnityIndex(degree_, k_[i]); }

    friend UnityTuple operator*(const UnityTuple& g, const UnityTuple& h);
    friend bool operator==(const UnityTuple&, const UnityTuple&) = default;

private:
    int degree_;
    std::array<int, 3> k_;
};

enum class CellKind { X, Lx, Ly, Lz, Vx, Vy, Vz };

int cell_dimension(CellKind kind);
std::string_view kind_name(CellKind kind);
/// Throws ParseError on unknown names.
CellKind kind_from_name(std::string_view name);
/// Whether coordinate i (0 = x) carries a root in cells of this kind.
bool stores_coordinate(CellKind kind, std::size_t i);

/**
 * Cell label data. Residues are indexed by coordinate; coordinates the kind
 * does not store are held at 0 so equality and ordering only see stored
 * components.
 */
struct CellLabel
{
    CellKind kind = CellKind::X;
    int degree = 1;
    std::array<int, 3> residues{0, 0, 0};

    /// Stored components in coordinate order, e.g. (b, c) for Lx.
    std::vector<int> stored() const;

    friend auto operator<=>(const CellLabel&, const CellLabel&) = default;
};

struct AffineCellLabel : CellLabel
{
};

struct ProjectiveCellLabel : CellLabel
{
};

/// Builds a label from its stored components; validates count and range.
AffineCellLabel make_affine_label(CellKind kind, int degree, const std::vector<long long>& stored);

std::string format_label(const AffineCellLabel& label);      // X(0,1,2)
std::string format_label(const ProjectiveCellLabel& label);  // X[0:1:2]

AffineCellLabel act(const UnityTuple& g, const AffineCellLabel& cell);

/// Diagonal normalization: the first stored component becomes 0.
ProjectiveCellLabel canonical_projective(const AffineCellLabel& label);

enum class Space { Affine, Projective };

std::string_view space_name(Space space);
Space space_from_name(std::string_view name);

/// A built complex together with its typed cell labels.
struct FermatComplex
{
    int degree = 1;
    Space space = Space::Affine;
    DeltaComplex complex;
    std::array<std::vector<CellLabel>, 3> cells;

    std::size_t index_of(const CellLabel& label) const;
};

FermatComplex build_affine(int degree);
FermatComplex build_projective(int degree);
FermatComplex build(int degree, Space space);

/// All affine labels of one dimension in the documented order.
std::vector<AffineCellLabel> affine_cells(int degree, int dim);

/// Point of the cell with the given barycentric coordinates (roots taken real and non-negative).
ComplexTriple realize(const AffineCellLabel& cell, const std::array<double, 3>& barycentric);

/// Smallest cell of S_d containing p; throws NotOnSkeletonError off the skeleton.
AffineCellLabel locate(const ComplexTriple& p, int degree, double tol);

} // namespace fermat
