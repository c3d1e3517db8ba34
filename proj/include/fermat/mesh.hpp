#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace fermat {

/// Triangle mesh of the real sphere S_2, one group of triangles per affine 2-cell.
struct MeshDocument
{
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<std::size_t, 3>> faces;  ///< 0-based vertex indices
    std::vector<std::string> face_labels;           ///< cell label of each face, e.g. "X(0,1,1)"
};

/// Each of the 8 cells of the degree-2 complex split into resolution^2 triangles.
MeshDocument build_mesh_d2(int resolution);

/// OBJ text: "v x y z" lines, then "g <cell>" groups of "f i j k" (1-based).
std::string mesh_to_obj(const MeshDocument& mesh);

MeshDocument export_mesh_d2(int resolution, const std::filesystem::path& path);

} // namespace fermat
