#include "fermat/mesh.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

#include "fermat/fermat_complex.hpp"

namespace fermat {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b)
{
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

/// Grid point identity shared by every cell it lies on: lattice coordinates plus
/// the residue of each coordinate that is nonzero there.
using GridKey = std::array<int, 6>;

} // namespace

MeshDocument build_mesh_d2(int resolution)
{
    if (resolution < 1)
        throw std::invalid_argument("mesh resolution must be at least 1, got " + std::to_string(resolution));

    MeshDocument mesh;
    std::map<GridKey, std::size_t> index_of;
    const int n = resolution;

    for (const auto& cell : affine_cells(2, 2))
    {
        auto vertex = [&](int i, int j) {
            const int k = n - i - j;
            const GridKey key{i, j, k, i ? cell.residues[0] : -1, j ? cell.residues[1] : -1,
                              k ? cell.residues[2] : -1};
            auto [it, inserted] = index_of.try_emplace(key, mesh.vertices.size());
            if (inserted)
            {
                const ComplexTriple p = realize(cell, {static_cast<double>(i) / n, static_cast<double>(j) / n,
                                                       static_cast<double>(k) / n});
                mesh.vertices.push_back({p[0].real(), p[1].real(), p[2].real()});
            }
            return it->second;
        };
        auto emit = [&](std::size_t a, std::size_t b, std::size_t c) {
            // orient outward: the sphere is centred at the origin
            const Vec3& pa = mesh.vertices[a];
            const Vec3 normal = cross(sub(mesh.vertices[b], pa), sub(mesh.vertices[c], pa));
            const Vec3 centroid{pa[0] + mesh.vertices[b][0] + mesh.vertices[c][0],
                                pa[1] + mesh.vertices[b][1] + mesh.vertices[c][1],
                                pa[2] + mesh.vertices[b][2] + mesh.vertices[c][2]};
            if (dot(normal, centroid) < 0.0)
                std::swap(b, c);
            mesh.faces.push_back({a, b, c});
            mesh.face_labels.push_back(format_label(cell));
        };

        for (int i = 0; i < n; ++i)
            for (int j = 0; i + j < n; ++j)
            {
                emit(vertex(i, j), vertex(i + 1, j), vertex(i, j + 1));
                if (i + j + 2 <= n)
                    emit(vertex(i + 1, j), vertex(i + 1, j + 1), vertex(i, j + 1));
            }
    }
    return mesh;
}

std::string mesh_to_obj(const MeshDocument& mesh)
{
    std::string out = "# real sphere S_2 triangulated along the degree-2 Delta-complex\n";
    char line[128];
    for (const auto& v : mesh.vertices)
    {
        std::snprintf(line, sizeof line, "v %.17g %.17g %.17g\n", v[0], v[1], v[2]);
        out += line;
    }
    std::string group;
    for (std::size_t f = 0; f < mesh.faces.size(); ++f)
    {
        if (mesh.face_labels[f] != group)
        {
            group = mesh.face_labels[f];
            out += "g " + group + "\n";
        }
        const auto& tri = mesh.faces[f];
        std::snprintf(line, sizeof line, "f %zu %zu %zu\n", tri[0] + 1, tri[1] + 1, tri[2] + 1);
        out += line;
    }
    return out;
}

MeshDocument export_mesh_d2(int resolution, const std::filesystem::path& path)
{
    MeshDocument mesh = build_mesh_d2(resolution);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << mesh_to_obj(mesh);
    if (!out)
        throw std::runtime_error("failed writing " + path.string());
    return mesh;
}

} // namespace fermat
