// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fermat/cli.hpp"
#include "fermat/fermat_complex.hpp"
#include "fermat/homology.hpp"
#include "fermat/mesh.hpp"
#include "fermat/retraction.hpp"
#include "fermat/sampling.hpp"
#include "fermat/verification.hpp"

using namespace fermat;

namespace {

struct Criterion
{
    int number;
    std::string title;
    double time_limit_s;
    /// Returns an empty string on success, otherwise the first problem found.
    std::function<std::string()> check;
};

AbelianGroup group(std::size_t rank, std::vector<long> torsion = {})
{
    AbelianGroup g;
    g.rank = rank;
    for (long t : torsion)
        g.torsion.emplace_back(t);
    return g;
}

std::string homology_text(const std::array<AbelianGroup, 3>& h)
{
    return "(" + h[0].to_string() + ", " + h[1].to_string() + ", " + h[2].to_string() + ")";
}

std::string cell_counts()
{
    for (std::size_t d = 1; d <= 10; ++d)
    {
        const DeltaComplex a = build_affine(static_cast<int>(d)).complex;
        const DeltaComplex p = build_projective(static_cast<int>(d)).complex;
        if (a.cell_count(0) != 3 * d || a.cell_count(1) != 3 * d * d || a.cell_count(2) != d * d * d)
            return "affine counts wrong at d = " + std::to_string(d);
        if (p.cell_count(0) != 3 || p.cell_count(1) != 3 * d || p.cell_count(2) != d * d)
            return "projective counts wrong at d = " + std::to_string(d);
    }
    return {};
}

std::string chain_complex()
{
    for (int d = 1; d <= 10; ++d)
        for (Space space : {Space::Affine, Space::Projective})
        {
            const DeltaComplex c = build(d, space).complex;
            if (!(boundary_matrix(c, 1) * boundary_matrix(c, 2)).is_zero())
                return std::string("boundary of boundary nonzero, ") + std::string(space_name(space)) +
                       " d = " + std::to_string(d);
        }
    return {};
}

std::string affine_homology()
{
    for (std::size_t d = 1; d <= 8; ++d)
    {
        const auto h = homology(build_affine(static_cast<int>(d)).complex);
        const std::array expected{group(1), group(0), group((d - 1) * (d - 1) * (d - 1))};
        if (h != expected)
            return "d = " + std::to_string(d) + ": got " + homology_text(h) + ", expected " + homology_text(expected);
    }
    return {};
}

std::string projective_homology()
{
    for (std::size_t d = 1; d <= 10; ++d)
    {
        const auto h = homology(build_projective(static_cast<int>(d)).complex);
        const std::array expected = d == 1 ? std::array{group(1), group(0), group(0)}
                                           : std::array{group(1), group(0, {static_cast<long>(d)}),
                                                        group((d - 1) * (d - 2))};
        if (h != expected)
            return "d = " + std::to_string(d) + ": got " + homology_text(h) + ", expected " + homology_text(expected);
    }
    return {};
}

std::string euler_consistency()
{
    for (int d = 1; d <= 10; ++d)
        for (Space space : {Space::Affine, Space::Projective})
        {
            if (space == Space::Affine && d > 8)
                continue;
            const HomologySummary s = betti_and_torsion_summary(build(d, space).complex);
            if (!s.euler_consistent())
                return "inconsistent at " + std::string(space_name(space)) + " d = " + std::to_string(d);
            if (space == Space::Projective && s.euler_from_cells != static_cast<long long>(d) * d - 3 * d + 3)
                return "projective chi differs from d^2 - 3d + 3 at d = " + std::to_string(d);
        }
    return {};
}

std::string lift_identity()
{
    std::uniform_real_distribution<double> time(0.0, 1.0);
    for (int d = 1; d <= 6; ++d)
    {
        std::mt19937_64 rng = sample_stream(6, static_cast<std::uint64_t>(d));
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i)
        {
            const Complex w = standard_complex_normal(rng);
            const double t = time(rng);
            worst = std::max(worst, std::abs(ipow(lift_g(w, t, d), d) - rbar(ipow(w, d), t)));
        }
        if (!(worst <= 1e-10))
        {
            std::ostringstream msg;
            msg << "d = " << d << ": max deviation " << worst;
            return msg.str();
        }
    }
    return {};
}

std::string retraction_contract()
{
    for (int d = 1; d <= 5; ++d)
    {
        std::ostringstream out, err;
        const int code = cli_main({"verify", "--degree", std::to_string(d), "--samples", "10000", "--steps", "64",
                                   "--tol", "1e-8", "--seed", "1"},
                                  out, err);
        if (code != 0)
            return "verify --degree " + std::to_string(d) + " exited with " + std::to_string(code) + "\n" + out.str() +
                   err.str();
    }
    return {};
}

std::string projective_invariance()
{
    for (int d = 2; d <= 5; ++d)
    {
        ProjectiveOptions options;
        options.degree = d;
        options.samples = 1000;
        options.seed = 8;
        options.tol = 1e-8;
        const RetractionReport report = verify_projective_invariance(options);
        if (!report.verdict)
            return "d = " + std::to_string(d) + " failed:\n" + report.to_text();
        options.scaling = RepresentativeScaling::TwoDegreeRoot;
        if (verify_projective_invariance(options).verdict)
            return "negative control with a 2d-th root passed at d = " + std::to_string(d);
    }
    return {};
}

std::string d2_fixture()
{
    std::ostringstream out, err;
    if (cli_main({"demo-d2"}, out, err) != 0)
        return "demo-d2 failed: " + err.str();
    const std::string text = out.str();
    const std::vector<std::string> required{
        "Affine complex, d = 2 (the real sphere S_2): 6 vertices, 12 edges, 8 faces",
        "V^x_(1,1,1) = (1, 0, 0)",
        "V^x_(-1,1,1) = (-1, 0, 0)",
        "V^y_(1,-1,1) = (0, -1, 0)",
        "V^z_(1,1,-1) = (0, 0, -1)",
        "X_(1,1,1): d0 = L^x_(1,1,1), d1 = L^y_(1,1,1), d2 = L^z_(1,1,1)",
        "homology: H0 = Z, H1 = 0, H2 = Z",
        "Projective complex, d = 2: 3 vertices, 6 edges, 4 faces",
        "X_[1:1:1] = X_[-1:-1:-1]",
        "X_[1:1:-1] = X_[-1:-1:1]",
        "X_[1:-1:1] = X_[-1:1:-1]",
        "X_[1:-1:-1] = X_[-1:1:1]",
        "L^x_[1:1:1] = L^x_[1:-1:-1]",
        "L^x_[1:1:-1] = L^x_[1:-1:1]",
        "V^x_[1:1:1] = V^x_[-1:1:1] = [1:0:0]",
        "homology: H0 = Z, H1 = Z/2, H2 = 0",
        "Mesh at resolution 1: 6 vertices, 8 faces (octahedron)",
    };
    for (const auto& line : required)
        if (text.find(line) == std::string::npos)
            return "demo-d2 output lacks \"" + line + "\"";

    const MeshDocument mesh = build_mesh_d2(1);
    std::set<std::array<double, 3>> vertices;
    for (const auto& v : mesh.vertices)
        vertices.insert({v[0] + 0.0, v[1] + 0.0, v[2] + 0.0});
    const std::set<std::array<double, 3>> octahedron{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                                     {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    if (mesh.faces.size() != 8 || mesh.vertices.size() != 6 || vertices != octahedron)
        return "resolution 1 mesh is not the octahedron";
    // each octahedron face is spanned by one vertex on each positive or negative axis
    for (const auto& f : mesh.faces)
    {
        std::set<int> axes;
        for (std::size_t corner : f)
            for (int axis = 0; axis < 3; ++axis)
                if (mesh.vertices[corner][static_cast<std::size_t>(axis)] != 0.0)
                    axes.insert(axis);
        if (axes.size() != 3)
            return "octahedron face does not meet all three axes";
    }
    return {};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "cell counts (3d, 3d^2, d^3) and (3, 3d, d^2) for d = 1..10", 1.0, cell_counts},
        {2, "boundary_1 * boundary_2 = 0 for d = 1..10, both spaces", 5.0, chain_complex},
        {3, "affine homology (Z, 0, Z^((d-1)^3)) for d = 1..8", 60.0, affine_homology},
        {4, "projective homology (Z, Z/d, Z^((d-1)(d-2))) for d = 2..10, (Z, 0, 0) for d = 1", 10.0,
         projective_homology},
        {5, "Euler characteristic from cells equals b0 - b1 + b2; projective chi = d^2 - 3d + 3", 60.0,
         euler_consistency},
        {6, "lift identity |G(w,t)^d - rbar(w^d,t)| <= 1e-10, 10^4 pairs, d = 1..6", 5.0, lift_identity},
        {7, "verify --samples 10000 --steps 64 --tol 1e-8 passes for d = 1..5", 60.0, retraction_contract},
        {8, "projective independence at tol 1e-8, 10^3 samples, d = 2..5; 2d-th root control fails", 30.0,
         projective_invariance},
        {9, "demo-d2 inventory and resolution 1 octahedron", 5.0, d2_fixture},
    };

    int failures = 0;
    for (const auto& c : criteria)
    {
        const auto start = std::chrono::steady_clock::now();
        std::string problem;
        try
        {
            problem = c.check();
        }
        catch (const std::exception& e)
        {
            problem = std::string("exception: ") + e.what();
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (problem.empty() && elapsed > c.time_limit_s)
        {
            std::ostringstream msg;
            msg << "runtime " << elapsed << " s exceeds the " << c.time_limit_s << " s limit";
            problem = msg.str();
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (problem.empty() ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << " ["
             << elapsed << " s / limit " << c.time_limit_s << " s]";
        std::cout << line.str() << '\n';
        if (!problem.empty())
        {
            std::cout << "      " << problem << '\n';
            ++failures;
        }
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
