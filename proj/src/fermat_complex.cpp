#include "fermat/fermat_complex.hpp"

#include <numbers>
#include <sstream>
#include <stdexcept>

#include "fermat/errors.hpp"

namespace fermat {

namespace {

int residue(long long k, int degree)
{
    long long r = k % degree;
    return static_cast<int>(r < 0 ? r + degree : r);
}

void require_degree(int degree)
{
    if (degree < 1)
        throw std::invalid_argument("degree must be at least 1, got " + std::to_string(degree));
}

constexpr std::array<CellKind, 7> kAllKinds = {CellKind::X,  CellKind::Lx, CellKind::Ly, CellKind::Lz,
                                               CellKind::Vx, CellKind::Vy, CellKind::Vz};

std::vector<CellKind> kinds_of_dimension(int dim)
{
    switch (dim)
    {
    case 2: return {CellKind::X};
    case 1: return {CellKind::Lx, CellKind::Ly, CellKind::Lz};
    case 0: return {CellKind::Vx, CellKind::Vy, CellKind::Vz};
    default: throw std::invalid_argument("dimension must be 0, 1 or 2");
    }
}

std::size_t stored_count(CellKind kind)
{
    return static_cast<std::size_t>(cell_dimension(kind)) + 1;
}

std::size_t ipow_size(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    while (exp--)
        r *= base;
    return r;
}

/// Number of cells of one kind: all stored tuples (affine) or those with first component 0.
std::size_t kind_size(CellKind kind, int degree, Space space)
{
    const std::size_t n = stored_count(kind);
    return ipow_size(static_cast<std::size_t>(degree), space == Space::Affine ? n : n - 1);
}

CellLabel with_stored(CellKind kind, int degree, const std::vector<int>& stored)
{
    CellLabel label{kind, degree, {0, 0, 0}};
    std::size_t s = 0;
    for (std::size_t i = 0; i < 3; ++i)
        if (stores_coordinate(kind, i))
            label.residues[i] = stored[s++];
    return label;
}

/// Enumerates the stored tuples of one kind in lexicographic order.
std::vector<CellLabel> enumerate_kind(CellKind kind, int degree, Space space)
{
    const std::size_t n = stored_count(kind);
    const std::size_t count = kind_size(kind, degree, space);
    std::vector<CellLabel> out;
    out.reserve(count);
    std::vector<int> stored(n, 0);
    for (std::size_t idx = 0; idx < count; ++idx)
    {
        std::size_t rest = idx;
        for (std::size_t s = n; s-- > 0;)
        {
            if (space == Space::Projective && s == 0)
            {
                stored[0] = 0;
                break;
            }
            stored[s] = static_cast<int>(rest % static_cast<std::size_t>(degree));
            rest /= static_cast<std::size_t>(degree);
        }
        out.push_back(with_stored(kind, degree, stored));
    }
    return out;
}

std::array<AffineCellLabel, 3> affine_faces2(const CellLabel& x)
{
    const auto [a, b, c] = x.residues;
    const int d = x.degree;
    return {make_affine_label(CellKind::Lx, d, {b, c}), make_affine_label(CellKind::Ly, d, {a, c}),
            make_affine_label(CellKind::Lz, d, {a, b})};
}

std::array<AffineCellLabel, 2> affine_faces1(const CellLabel& l)
{
    const auto [a, b, c] = l.residues;
    const int d = l.degree;
    switch (l.kind)
    {
    case CellKind::Lx: return {make_affine_label(CellKind::Vy, d, {b}), make_affine_label(CellKind::Vz, d, {c})};
    case CellKind::Ly: return {make_affine_label(CellKind::Vx, d, {a}), make_affine_label(CellKind::Vz, d, {c})};
    case CellKind::Lz: return {make_affine_label(CellKind::Vx, d, {a}), make_affine_label(CellKind::Vy, d, {b})};
    default: throw std::logic_error("affine_faces1: not an edge");
    }
}

FermatComplex build_impl(int degree, Space space)
{
    require_degree(degree);
    FermatComplex fc;
    fc.degree = degree;
    fc.space = space;
    for (int dim = 0; dim < 3; ++dim)
        for (CellKind kind : kinds_of_dimension(dim))
        {
            auto cells = enumerate_kind(kind, degree, space);
            auto& dst = fc.cells[static_cast<std::size_t>(dim)];
            dst.insert(dst.end(), cells.begin(), cells.end());
        }

    auto face_index = [&](const AffineCellLabel& affine) {
        if (space == Space::Affine)
            return fc.index_of(affine);
        return fc.index_of(canonical_projective(affine));
    };

    DeltaComplex& dc = fc.complex;
    dc.vertex_count = fc.cells[0].size();
    dc.face1.reserve(fc.cells[1].size());
    for (const auto& edge : fc.cells[1])
    {
        const auto f = affine_faces1(edge);
        dc.face1.push_back(Face1{face_index(f[0]), face_index(f[1])});
    }
    dc.face2.reserve(fc.cells[2].size());
    for (const auto& tri : fc.cells[2])
    {
        const auto f = affine_faces2(tri);
        dc.face2.push_back(Face2{face_index(f[0]), face_index(f[1]), face_index(f[2])});
    }

    for (std::size_t dim = 0; dim < 3; ++dim)
    {
        auto& labels = dc.labels[dim];
        labels.reserve(fc.cells[dim].size());
        for (const auto& cell : fc.cells[dim])
            labels.push_back(space == Space::Affine ? format_label(AffineCellLabel{cell})
                                                    : format_label(ProjectiveCellLabel{cell}));
    }
    return fc;
}

} // namespace

UnityIndex::UnityIndex(int degree, long long k) : degree_(degree), k_(0)
{
    require_degree(degree);
    k_ = residue(k, degree);
}

Complex UnityIndex::value() const
{
    return std::polar(1.0, 2.0 * std::numbers::pi * k_ / degree_);
}

UnityTuple::UnityTuple(int degree, long long a, long long b, long long c) : degree_(degree), k_{0, 0, 0}
{
    require_degree(degree);
    k_ = {residue(a, degree), residue(b, degree), residue(c, degree)};
}

UnityTuple operator*(const UnityTuple& g, const UnityTuple& h)
{
    if (g.degree_ != h.degree_)
        throw std::invalid_argument("UnityTuple product: degrees differ");
    return UnityTuple(g.degree_, g.k_[0] + h.k_[0], g.k_[1] + h.k_[1], g.k_[2] + h.k_[2]);
}

int cell_dimension(CellKind kind)
{
    switch (kind)
    {
    case CellKind::X: return 2;
    case CellKind::Lx:
    case CellKind::Ly:
    case CellKind::Lz: return 1;
    default: return 0;
    }
}

std::string_view kind_name(CellKind kind)
{
    switch (kind)
    {
    case CellKind::X: return "X";
    case CellKind::Lx: return "Lx";
    case CellKind::Ly: return "Ly";
    case CellKind::Lz: return "Lz";
    case CellKind::Vx: return "Vx";
    case CellKind::Vy: return "Vy";
    case CellKind::Vz: return "Vz";
    }
    return "?";
}

CellKind kind_from_name(std::string_view name)
{
    for (CellKind kind : kAllKinds)
        if (kind_name(kind) == name)
            return kind;
    throw ParseError("unknown cell kind '" + std::string(name) + "'");
}

bool stores_coordinate(CellKind kind, std::size_t i)
{
    switch (kind)
    {
    case CellKind::X: return true;
    case CellKind::Lx: return i != 0;
    case CellKind::Ly: return i != 1;
    case CellKind::Lz: return i != 2;
    case CellKind::Vx: return i == 0;
    case CellKind::Vy: return i == 1;
    case CellKind::Vz: return i == 2;
    }
    return false;
}

std::vector<int> CellLabel::stored() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < 3; ++i)
        if (stores_coordinate(kind, i))
            out.push_back(residues[i]);
    return out;
}

AffineCellLabel make_affine_label(CellKind kind, int degree, const std::vector<long long>& stored)
{
    require_degree(degree);
    if (stored.size() != stored_count(kind))
        throw std::invalid_argument("cell " + std::string(kind_name(kind)) + " stores " +
                                    std::to_string(stored_count(kind)) + " residues, got " +
                                    std::to_string(stored.size()));
    std::vector<int> normalized;
    for (long long k : stored)
        normalized.push_back(residue(k, degree));
    return AffineCellLabel{with_stored(kind, degree, normalized)};
}

namespace {

std::string format_with(const CellLabel& label, char open, char sep, char close)
{
    std::ostringstream out;
    out << kind_name(label.kind) << open;
    const auto stored = label.stored();
    for (std::size_t i = 0; i < stored.size(); ++i)
        out << (i ? std::string(1, sep) : std::string()) << stored[i];
    out << close;
    return out.str();
}

} // namespace

std::string format_label(const AffineCellLabel& label)
{
    return format_with(label, '(', ',', ')');
}

std::string format_label(const ProjectiveCellLabel& label)
{
    return format_with(label, '[', ':', ']');
}

AffineCellLabel act(const UnityTuple& g, const AffineCellLabel& cell)
{
    if (g.degree() != cell.degree)
        throw std::invalid_argument("act: group element and cell have different degrees");
    AffineCellLabel out = cell;
    for (std::size_t i = 0; i < 3; ++i)
        if (stores_coordinate(cell.kind, i))
            out.residues[i] = residue(static_cast<long long>(cell.residues[i]) + g[i], cell.degree);
    return out;
}

ProjectiveCellLabel canonical_projective(const AffineCellLabel& label)
{
    const int shift = label.stored().front();
    const auto shifted = act(UnityTuple::diagonal(label.degree, -shift), label);
    return ProjectiveCellLabel{shifted};
}

std::string_view space_name(Space space)
{
    return space == Space::Affine ? "affine" : "projective";
}

Space space_from_name(std::string_view name)
{
    if (name == "affine")
        return Space::Affine;
    if (name == "projective")
        return Space::Projective;
    throw std::invalid_argument("unknown space '" + std::string(name) + "' (expected affine or projective)");
}

std::size_t FermatComplex::index_of(const CellLabel& label) const
{
    if (label.degree != degree)
        throw std::invalid_argument("index_of: label degree differs from complex degree");
    const int dim = cell_dimension(label.kind);
    std::size_t offset = 0;
    for (CellKind kind : kinds_of_dimension(dim))
    {
        if (kind == label.kind)
            break;
        offset += kind_size(kind, degree, space);
    }
    const auto stored = label.stored();
    std::size_t local = 0;
    for (std::size_t s = 0; s < stored.size(); ++s)
    {
        if (space == Space::Projective && s == 0)
        {
            if (stored[0] != 0)
                throw std::invalid_argument("index_of: projective label is not canonical");
            continue;
        }
        local = local * static_cast<std::size_t>(degree) + static_cast<std::size_t>(stored[s]);
    }
    return offset + local;
}

FermatComplex build_affine(int degree)
{
    return build_impl(degree, Space::Affine);
}

FermatComplex build_projective(int degree)
{
    return build_impl(degree, Space::Projective);
}

FermatComplex build(int degree, Space space)
{
    return build_impl(degree, space);
}

std::vector<AffineCellLabel> affine_cells(int degree, int dim)
{
    require_degree(degree);
    std::vector<AffineCellLabel> out;
    for (CellKind kind : kinds_of_dimension(dim))
        for (const auto& cell : enumerate_kind(kind, degree, Space::Affine))
            out.push_back(AffineCellLabel{cell});
    return out;
}

ComplexTriple realize(const AffineCellLabel& cell, const std::array<double, 3>& barycentric)
{
    const double sum = barycentric[0] + barycentric[1] + barycentric[2];
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("realize: barycentric coordinates sum to " + std::to_string(sum));
    ComplexTriple p;
    for (std::size_t i = 0; i < 3; ++i)
    {
        const double s = barycentric[i];
        if (s < 0.0)
            throw std::invalid_argument("realize: negative barycentric coordinate");
        if (!stores_coordinate(cell.kind, i))
        {
            if (s != 0.0)
                throw std::invalid_argument("realize: cell " + format_label(cell) +
                                            " has no extent along coordinate " + std::to_string(i));
            continue;
        }
        p[i] = UnityIndex(cell.degree, cell.residues[i]).value() * std::pow(s, 1.0 / cell.degree);
    }
    return p;
}

AffineCellLabel locate(const ComplexTriple& p, int degree, double tol)
{
    require_degree(degree);
    std::array<bool, 3> nonzero{};
    std::vector<long long> stored;
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < 3; ++i)
    {
        const Complex w = p[i];
        if (std::abs(w) <= tol)
            continue;
        const Complex power = ipow(w, degree);
        if (std::abs(power.imag()) > tol || power.real() < -tol)
        {
            std::ostringstream msg;
            msg << "locate: coordinate " << i << " has non-real or negative power " << power;
            throw NotOnSkeletonError(msg.str());
        }
        sum += power;
        nonzero[i] = true;
        double turns = std::arg(w) / (2.0 * std::numbers::pi) * degree;
        stored.push_back(std::llround(turns));
    }
    if (std::abs(sum - 1.0) > tol)
    {
        std::ostringstream msg;
        msg << "locate: powers sum to " << sum << ", not 1";
        throw NotOnSkeletonError(msg.str());
    }

    CellKind kind;
    const int count = nonzero[0] + nonzero[1] + nonzero[2];
    if (count == 3)
        kind = CellKind::X;
    else if (count == 2)
        kind = !nonzero[0] ? CellKind::Lx : (!nonzero[1] ? CellKind::Ly : CellKind::Lz);
    else
        kind = nonzero[0] ? CellKind::Vx : (nonzero[1] ? CellKind::Vy : CellKind::Vz);
    return make_affine_label(kind, degree, stored);
}

} // namespace fermat
