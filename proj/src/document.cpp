#include "fermat/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fermat/errors.hpp"

namespace fermat {

namespace {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what)
{
    throw ParseError(field + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& path)
{
    auto it = obj.find(key);
    if (it == obj.end())
        fail(path + key, "missing");
    return *it;
}

long long as_integer(const json& v, const std::string& field)
{
    if (!v.is_number_integer())
        fail(field, "expected an integer");
    return v.get<long long>();
}

std::size_t as_index(const json& v, const std::string& field, std::size_t bound)
{
    const long long i = as_integer(v, field);
    if (i < 0 || static_cast<unsigned long long>(i) >= bound)
        fail(field, "index " + std::to_string(i) + " out of range [0, " + std::to_string(bound) + ")");
    return static_cast<std::size_t>(i);
}

CellLabel parse_cell(const json& entry, const std::string& field, int dim, int degree, Space space)
{
    if (!entry.is_object())
        fail(field, "expected an object");
    const json& kind_json = member(entry, "kind", field + ".");
    if (!kind_json.is_string())
        fail(field + ".kind", "expected a string");
    CellKind kind;
    try
    {
        kind = kind_from_name(kind_json.get<std::string>());
    }
    catch (const ParseError& e)
    {
        fail(field + ".kind", e.what());
    }
    if (cell_dimension(kind) != dim)
        fail(field + ".kind", std::string(kind_name(kind)) + " is not a cell of dimension " + std::to_string(dim));

    const json& roots = member(entry, "roots", field + ".");
    if (!roots.is_array() || roots.size() != static_cast<std::size_t>(dim) + 1)
        fail(field + ".roots", "expected " + std::to_string(dim + 1) + " residues");
    std::vector<long long> stored;
    for (std::size_t i = 0; i < roots.size(); ++i)
    {
        const std::string rf = field + ".roots[" + std::to_string(i) + "]";
        const long long k = as_integer(roots[i], rf);
        if (k < 0 || k >= degree)
            fail(rf, "residue " + std::to_string(k) + " outside [0, " + std::to_string(degree) + ")");
        stored.push_back(k);
    }
    if (space == Space::Projective && stored.front() != 0)
        fail(field + ".roots", "projective labels must be diagonally normalized (first residue 0)");
    return make_affine_label(kind, degree, stored);
}

} // namespace

std::string complex_to_json(const FermatComplex& complex)
{
    ordered_json doc;
    doc["format_version"] = kComplexFormatVersion;
    doc["degree"] = complex.degree;
    doc["space"] = std::string(space_name(complex.space));
    ordered_json cells = ordered_json::array();
    for (const auto& dim_cells : complex.cells)
    {
        ordered_json list = ordered_json::array();
        for (const auto& cell : dim_cells)
        {
            ordered_json entry;
            entry["kind"] = std::string(kind_name(cell.kind));
            entry["roots"] = cell.stored();
            list.push_back(std::move(entry));
        }
        cells.push_back(std::move(list));
    }
    doc["cells"] = std::move(cells);
    doc["face1"] = complex.complex.face1;
    doc["face2"] = complex.complex.face2;
    return doc.dump(1) + "\n";
}

FermatComplex complex_from_json(const std::string& text)
{
    json doc;
    try
    {
        doc = json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        throw ParseError(std::string("document: ") + e.what());
    }
    if (!doc.is_object())
        fail("document", "expected a JSON object");

    const json& version = member(doc, "format_version", "");
    if (!version.is_string() || version.get<std::string>() != kComplexFormatVersion)
        fail("format_version", "unsupported version " + version.dump() + " (expected \"1\")");

    FermatComplex fc;
    const long long degree = as_integer(member(doc, "degree", ""), "degree");
    if (degree < 1 || degree > 1000)
        fail("degree", "must be in 1..1000, got " + std::to_string(degree));
    fc.degree = static_cast<int>(degree);

    const json& space = member(doc, "space", "");
    if (!space.is_string())
        fail("space", "expected a string");
    try
    {
        fc.space = space_from_name(space.get<std::string>());
    }
    catch (const std::invalid_argument& e)
    {
        fail("space", e.what());
    }

    const json& cells = member(doc, "cells", "");
    if (!cells.is_array() || cells.size() != 3)
        fail("cells", "expected three per-dimension arrays");
    for (int dim = 0; dim < 3; ++dim)
    {
        const std::string df = "cells[" + std::to_string(dim) + "]";
        const json& list = cells[static_cast<std::size_t>(dim)];
        if (!list.is_array())
            fail(df, "expected an array");
        auto& dst = fc.cells[static_cast<std::size_t>(dim)];
        for (std::size_t i = 0; i < list.size(); ++i)
        {
            const std::string field = df + "[" + std::to_string(i) + "]";
            CellLabel cell = parse_cell(list[i], field, dim, fc.degree, fc.space);
            if (!dst.empty() && !(dst.back() < cell))
                fail(field, "cells must be strictly increasing in (kind, roots) order");
            dst.push_back(cell);
        }
    }

    DeltaComplex& dc = fc.complex;
    dc.vertex_count = fc.cells[0].size();
    const json& face1 = member(doc, "face1", "");
    if (!face1.is_array() || face1.size() != fc.cells[1].size())
        fail("face1", "expected one entry per 1-cell");
    for (std::size_t j = 0; j < face1.size(); ++j)
    {
        const std::string field = "face1[" + std::to_string(j) + "]";
        if (!face1[j].is_array() || face1[j].size() != 2)
            fail(field, "expected a pair");
        dc.face1.push_back(Face1{as_index(face1[j][0], field + "[0]", dc.vertex_count),
                                 as_index(face1[j][1], field + "[1]", dc.vertex_count)});
    }
    const json& face2 = member(doc, "face2", "");
    if (!face2.is_array() || face2.size() != fc.cells[2].size())
        fail("face2", "expected one entry per 2-cell");
    for (std::size_t j = 0; j < face2.size(); ++j)
    {
        const std::string field = "face2[" + std::to_string(j) + "]";
        if (!face2[j].is_array() || face2[j].size() != 3)
            fail(field, "expected a triple");
        Face2 f{};
        for (std::size_t k = 0; k < 3; ++k)
            f[k] = as_index(face2[j][k], field + "[" + std::to_string(k) + "]", dc.face1.size());
        dc.face2.push_back(f);
    }

    for (std::size_t dim = 0; dim < 3; ++dim)
        for (const auto& cell : fc.cells[dim])
            dc.labels[dim].push_back(fc.space == Space::Affine ? format_label(AffineCellLabel{cell})
                                                               : format_label(ProjectiveCellLabel{cell}));

    if (auto report = validate(dc); !report)
        fail(report.offending && report.offending->dim == 2 ? "face2" : "face1", report.message);
    return fc;
}

void export_complex(const FermatComplex& complex, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << complex_to_json(complex);
    if (!out)
        throw std::runtime_error("failed writing " + path.string());
}

FermatComplex import_complex(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return complex_from_json(buffer.str());
}

} // namespace fermat
