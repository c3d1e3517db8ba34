#include "fermat/cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermat/document.hpp"
#include "fermat/errors.hpp"
#include "fermat/fermat_complex.hpp"
#include "fermat/homology.hpp"
#include "fermat/mesh.hpp"
#include "fermat/verification.hpp"

namespace fermat {

namespace {

std::string sign_of(int residue)
{
    return residue == 0 ? "1" : "-1";
}

/// Degree-2 label written with sign tuples; omitted coordinates print as 1.
std::string sign_notation(const CellLabel& cell, bool projective)
{
    std::string name;
    switch (cell.kind)
    {
    case CellKind::X: name = "X"; break;
    case CellKind::Lx: name = "L^x"; break;
    case CellKind::Ly: name = "L^y"; break;
    case CellKind::Lz: name = "L^z"; break;
    case CellKind::Vx: name = "V^x"; break;
    case CellKind::Vy: name = "V^y"; break;
    case CellKind::Vz: name = "V^z"; break;
    }
    std::string tuple = projective ? "[" : "(";
    for (std::size_t i = 0; i < 3; ++i)
    {
        tuple += stores_coordinate(cell.kind, i) ? sign_of(cell.residues[i]) : "1";
        tuple += i < 2 ? (projective ? ":" : ",") : (projective ? "]" : ")");
    }
    return name + "_" + tuple;
}

std::string point_text(const ComplexTriple& p)
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < 3; ++i)
    {
        const double v = p[i].real();
        out << (i ? ", " : "") << (v == 0.0 ? 0.0 : v);
    }
    out << ')';
    return out.str();
}

std::string homology_line(const DeltaComplex& complex)
{
    const auto h = homology(complex);
    return "H0 = " + h[0].to_string() + ", H1 = " + h[1].to_string() + ", H2 = " + h[2].to_string();
}

nlohmann::ordered_json summary_json(const HomologySummary& s, int degree, Space space)
{
    nlohmann::ordered_json j;
    j["degree"] = degree;
    j["space"] = std::string(space_name(space));
    j["cell_counts"] = s.cell_counts;
    nlohmann::ordered_json groups = nlohmann::ordered_json::array();
    for (const auto& g : s.groups)
    {
        nlohmann::ordered_json entry;
        entry["rank"] = g.rank;
        std::vector<std::string> torsion;
        for (const auto& t : g.torsion)
            torsion.push_back(t.get_str());
        entry["torsion"] = torsion;
        entry["text"] = g.to_string();
        groups.push_back(std::move(entry));
    }
    j["homology"] = std::move(groups);
    j["betti"] = s.betti();
    j["euler_characteristic"] = s.euler_from_cells;
    j["euler_consistent"] = s.euler_consistent();
    return j;
}

Space parse_space(const std::string& name)
{
    return space_from_name(name);
}

} // namespace

std::string demo_d2_text()
{
    std::ostringstream out;
    const FermatComplex affine = build_affine(2);
    const DeltaComplex& dc = affine.complex;
    auto name = [&](int dim, std::size_t i) { return sign_notation(affine.cells[static_cast<std::size_t>(dim)][i], false); };

    out << "Affine complex, d = 2 (the real sphere S_2): " << dc.cell_count(0) << " vertices, " << dc.cell_count(1)
        << " edges, " << dc.cell_count(2) << " faces\n";
    out << "vertices:\n";
    for (std::size_t i = 0; i < dc.cell_count(0); ++i)
    {
        const AffineCellLabel cell{affine.cells[0][i]};
        std::array<double, 3> bary{0.0, 0.0, 0.0};
        for (std::size_t c = 0; c < 3; ++c)
            if (stores_coordinate(cell.kind, c))
                bary[c] = 1.0;
        out << "  " << name(0, i) << " = " << point_text(realize(cell, bary)) << '\n';
    }
    out << "edges:\n";
    for (std::size_t i = 0; i < dc.cell_count(1); ++i)
        out << "  " << name(1, i) << ": " << name(0, dc.face1[i][0]) << " -> " << name(0, dc.face1[i][1]) << '\n';
    out << "faces:\n";
    for (std::size_t i = 0; i < dc.cell_count(2); ++i)
        out << "  " << name(2, i) << ": d0 = " << name(1, dc.face2[i][0]) << ", d1 = " << name(1, dc.face2[i][1])
            << ", d2 = " << name(1, dc.face2[i][2]) << '\n';
    out << "homology: " << homology_line(dc) << '\n';

    const FermatComplex proj = build_projective(2);
    out << "\nProjective complex, d = 2: " << proj.complex.cell_count(0) << " vertices, "
        << proj.complex.cell_count(1) << " edges, " << proj.complex.cell_count(2) << " faces\n";
    static const char* kTitles[] = {"vertices", "edges", "faces"};
    static const char* kPoints[] = {"[1:0:0]", "[0:1:0]", "[0:0:1]"};
    for (int dim = 0; dim < 3; ++dim)
    {
        out << kTitles[dim] << ":\n";
        std::map<std::size_t, std::vector<std::string>> classes;
        for (const auto& cell : affine_cells(2, dim))
            classes[proj.index_of(canonical_projective(cell))].push_back(sign_notation(cell, true));
        for (const auto& [index, members] : classes)
        {
            out << "  ";
            for (std::size_t m = 0; m < members.size(); ++m)
                out << (m ? " = " : "") << members[m];
            if (dim == 0)
                out << " = " << kPoints[index];
            out << '\n';
        }
    }
    out << "homology: " << homology_line(proj.complex) << '\n';

    const MeshDocument mesh = build_mesh_d2(1);
    out << "\nMesh at resolution 1: " << mesh.vertices.size() << " vertices, " << mesh.faces.size()
        << " faces (octahedron)\n";
    for (const auto& v : mesh.vertices)
        out << "  v " << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
    return out.str();
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Delta-complexes of Fermat curve complements: build, homology, retraction checks"};
    app.name("fermat");
    app.require_subcommand(1);

    int degree = 1;
    std::string space = "affine";
    std::string out_path;
    bool as_json = false;

    auto* build_cmd = app.add_subcommand("build", "write the complex as a JSON document");
    build_cmd->add_option("--degree", degree)->required()->check(CLI::PositiveNumber);
    build_cmd->add_option("--space", space)->required()->check(CLI::IsMember({"affine", "projective"}));
    build_cmd->add_option("--out", out_path)->required();

    auto* homology_cmd = app.add_subcommand("homology", "integer homology of the complex");
    homology_cmd->add_option("--degree", degree)->required()->check(CLI::PositiveNumber);
    homology_cmd->add_option("--space", space)->required()->check(CLI::IsMember({"affine", "projective"}));
    homology_cmd->add_flag("--json", as_json);

    auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic from cell counts");
    euler_cmd->add_option("--degree", degree)->required()->check(CLI::PositiveNumber);
    euler_cmd->add_option("--space", space)->required()->check(CLI::IsMember({"affine", "projective"}));

    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    double tol = 1e-8;
    std::size_t steps = 64;
    unsigned workers = 0;
    bool projective = false;
    auto* verify_cmd = app.add_subcommand("verify", "Monte-Carlo check of the deformation retraction");
    verify_cmd->add_option("--degree", degree)->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--samples", samples)->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", seed)->required();
    verify_cmd->add_option("--tol", tol)->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--steps", steps)->required()->check(CLI::Range(2, 1 << 20));
    verify_cmd->add_option("--workers", workers, "worker threads (0 = all cores)");
    verify_cmd->add_flag("--projective", projective, "also check independence of the projective representative");

    int resolution = 1;
    auto* mesh_cmd = app.add_subcommand("mesh", "OBJ mesh of the degree-2 sphere");
    mesh_cmd->add_option("--resolution", resolution)->required()->check(CLI::PositiveNumber);
    mesh_cmd->add_option("--out", out_path)->required();

    auto* demo_cmd = app.add_subcommand("demo-d2", "print the degree-2 cell inventory");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return kExitOk;
    }
    catch (const CLI::ParseError& e)
    {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitInvalidArguments;
    }

    try
    {
        if (build_cmd->parsed())
        {
            const FermatComplex complex = build(degree, parse_space(space));
            export_complex(complex, out_path);
            out << "wrote " << space << " complex of degree " << degree << " to " << out_path << '\n';
            return kExitOk;
        }
        if (homology_cmd->parsed())
        {
            const FermatComplex complex = build(degree, parse_space(space));
            const HomologySummary summary = betti_and_torsion_summary(complex.complex);
            if (as_json)
                out << summary_json(summary, degree, complex.space).dump(2) << '\n';
            else
                out << summary.to_text();
            return kExitOk;
        }
        if (euler_cmd->parsed())
        {
            out << euler_characteristic(build(degree, parse_space(space)).complex) << '\n';
            return kExitOk;
        }
        if (verify_cmd->parsed())
        {
            VerifyOptions options;
            options.degree = degree;
            options.samples = samples;
            options.seed = seed;
            options.tol = tol;
            options.steps = steps;
            options.workers = workers;
            const RetractionReport report = verify_retraction(options);
            out << "retraction M_" << degree << " -> S_" << degree << '\n' << report.to_text();
            bool ok = report.verdict;
            if (projective)
            {
                ProjectiveOptions popts;
                popts.degree = degree;
                popts.samples = samples;
                popts.seed = seed;
                popts.tol = tol;
                popts.workers = workers;
                const RetractionReport preport = verify_projective_invariance(popts);
                out << "\nprojective representative independence\n" << preport.to_text();
                ok = ok && preport.verdict;
            }
            return ok ? kExitOk : kExitVerificationFailed;
        }
        if (mesh_cmd->parsed())
        {
            const MeshDocument mesh = export_mesh_d2(resolution, out_path);
            out << "wrote " << mesh.vertices.size() << " vertices and " << mesh.faces.size() << " faces to "
                << out_path << '\n';
            return kExitOk;
        }
        if (demo_cmd->parsed())
        {
            out << demo_d2_text();
            return kExitOk;
        }
    }
    catch (const std::invalid_argument& e)
    {
        err << "error: " << e.what() << '\n';
        return kExitInvalidArguments;
    }
    return kExitInvalidArguments;
}

} // namespace fermat
