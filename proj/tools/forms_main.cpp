#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "oneforms/flat.hpp"
#include "oneforms/group.hpp"
#include "oneforms/json_io.hpp"
#include "oneforms/quotient.hpp"

using namespace oneforms;

namespace {

struct CliConfig {
    double tolerance = kDefaultTol;
    std::string output = "json"; // json | table
    long long seed = -1;         // reserved; all commands are deterministic
};

int exit_code_for(const FormsError& e) {
    switch (e.code()) {
        case ErrorCode::InfiniteIsotropy: return 3;
        case ErrorCode::ConvergenceFailure:
        case ErrorCode::TooManyPermutations: return 2;
        default: return 1;
    }
}

void print_error(const FormsError& e) {
    json out;
    out["error"] = error_code_name(e.code());
    out["message"] = e.what();
    std::cout << out.dump(2) << "\n";
}

json read_json(const std::string& path) {
    std::string text;
    if (path == "-" || path.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) fail(ErrorCode::InvalidDocument, "cannot open '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) fail(ErrorCode::InvalidDocument, "input is not valid JSON");
    return parsed;
}

FormDocument read_form(const std::string& path, double tol) {
    return validate(form_document_from_json(read_json(path)), tol);
}

ResiduePoleForm realize_from_spec(const std::string& spec) {
    if (spec == "A4" || spec == "tetrahedron") return realize_platonic(PlatonicSolid::Tetrahedron);
    if (spec == "S4" || spec == "cube") return realize_platonic(PlatonicSolid::Cube);
    if (spec == "octahedron") return realize_platonic(PlatonicSolid::Octahedron);
    if (spec == "A5" || spec == "dodecahedron") return realize_platonic(PlatonicSolid::Dodecahedron);
    if (spec == "icosahedron") return realize_platonic(PlatonicSolid::Icosahedron);
    if (spec.size() > 1 && (spec[0] == 'Z' || spec[0] == 'D')) {
        const std::string digits = spec.substr(spec[1] == '_' ? 2 : 1);
        int n = 0;
        try {
            n = std::stoi(digits);
        } catch (const std::exception&) {
            fail(ErrorCode::InvalidDocument, "cannot parse group spec '" + spec + "'");
        }
        return spec[0] == 'Z' ? realize_cyclic(n) : realize_dihedral(n);
    }
    fail(ErrorCode::InvalidDocument, "unknown group spec '" + spec + "'");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rational 1-forms on the Riemann sphere: conversions, symmetry "
                 "analysis, classification tables"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    app.add_option("--tol", cfg.tolerance, "comparison tolerance")->check(CLI::PositiveNumber);
    app.add_option("--output", cfg.output, "output style: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--seed", cfg.seed, "reserved; output is deterministic");

    std::string input = "-";
    std::string input_b;
    std::string target;
    std::string group_spec;
    int s_from = 3, s_to = 11;

    auto* convert_cmd = app.add_subcommand("convert", "convert between representations");
    convert_cmd->add_option("--to", target, "target representation")->required();
    convert_cmd->add_option("input", input, "form document (file or -)");

    auto* isotropy_cmd = app.add_subcommand("isotropy", "isotropy group of a form");
    isotropy_cmd->add_option("input", input, "form document (file or -)");

    auto* equivalent_cmd = app.add_subcommand("equivalent", "Mobius equivalence of two forms");
    equivalent_cmd->add_option("a", input, "first form document")->required();
    equivalent_cmd->add_option("b", input_b, "second form document")->required();

    auto* isometric_cmd = app.add_subcommand("isometric", "flat-surface isometry of two forms");
    isometric_cmd->add_option("a", input, "first form document")->required();
    isometric_cmd->add_option("b", input_b, "second form document")->required();

    auto* realize_cmd = app.add_subcommand("realize", "form with prescribed isotropy group");
    realize_cmd->add_option("--group", group_spec, "Z<n>, D<n>, A4, S4, A5 or a solid name")
        ->required();

    auto* table_cmd = app.add_subcommand("table", "nontrivial isotropy groups per pole count");
    table_cmd->add_option("--from", s_from, "first pole count");
    table_cmd->add_option("--to", s_to, "last pole count");

    auto* orbit_types_cmd = app.add_subcommand("orbit-types", "orbit type counts per pole count");
    orbit_types_cmd->add_option("--from", s_from, "first pole count");
    orbit_types_cmd->add_option("--to", s_to, "last pole count");

    auto* canonical_cmd = app.add_subcommand("canonical", "quotient coordinates of a form");
    canonical_cmd->add_option("input", input, "form document (file or -)");

    auto* component_cmd =
        app.add_subcommand("component4", "isochronous component label for s = 4");
    component_cmd->add_option("input", input, "form document or quotient point (file or -)");

    auto* invariants_cmd = app.add_subcommand("invariants", "flat-surface invariants");
    invariants_cmd->add_option("input", input, "form document (file or -)");

    CLI11_PARSE(app, argc, argv);

    try {
        const double tol = cfg.tolerance;
        if (convert_cmd->parsed()) {
            const FormDocument doc = read_form(input, tol);
            emit(to_json(convert(doc, representation_from_name(target), tol)));
        } else if (isotropy_cmd->parsed()) {
            const FormDocument doc = read_form(input, tol);
            emit(to_json(isotropy_group(as_residue_pole(doc, tol), tol)));
        } else if (equivalent_cmd->parsed()) {
            const ResiduePoleForm a = as_residue_pole(read_form(input, tol), tol);
            const ResiduePoleForm b = as_residue_pole(read_form(input_b, tol), tol);
            if (a.s() != b.s()) fail(ErrorCode::InvalidDocument, "pole counts differ");
            const auto witness = are_psl_equivalent(a, b, tol);
            json out;
            out["equivalent"] = witness.has_value();
            out["mobius"] = witness ? to_json(*witness) : json(nullptr);
            emit(out);
        } else if (isometric_cmd->parsed()) {
            const ResiduePoleForm a = as_residue_pole(read_form(input, tol), tol);
            const ResiduePoleForm b = as_residue_pole(read_form(input_b, tol), tol);
            if (a.s() != b.s()) fail(ErrorCode::InvalidDocument, "pole counts differ");
            const auto witness = are_isometric(a, b, tol);
            json out;
            out["equivalent"] = witness.has_value();
            out["mobius"] = witness ? to_json(witness->map) : json(nullptr);
            out["lambda"] = witness ? to_json(witness->lambda) : json(nullptr);
            emit(out);
        } else if (realize_cmd->parsed()) {
            emit(to_json(FormDocument::make(realize_from_spec(group_spec))));
        } else if (table_cmd->parsed()) {
            if (cfg.output == "table") {
                for (int s = s_from; s <= s_to; ++s) {
                    std::cout << s << " | ";
                    const auto tags = isotropy_table(s);
                    for (size_t i = 0; i < tags.size(); ++i)
                        std::cout << (i ? ", " : "") << tags[i].table_name();
                    std::cout << "\n";
                }
            } else {
                json rows = json::array();
                for (int s = s_from; s <= s_to; ++s) {
                    json row;
                    row["s"] = s;
                    json groups = json::array();
                    for (const GroupTag& tag : isotropy_table(s)) groups.push_back(tag.table_name());
                    row["groups"] = std::move(groups);
                    rows.push_back(std::move(row));
                }
                emit(rows);
            }
        } else if (orbit_types_cmd->parsed()) {
            if (cfg.output == "table") {
                for (int s = s_from; s <= s_to; ++s)
                    std::cout << s << " | " << orbit_type_count(s) << "\n";
            } else {
                json rows = json::array();
                for (int s = s_from; s <= s_to; ++s) {
                    json row;
                    row["s"] = s;
                    row["orbit_types"] = orbit_type_count(s);
                    rows.push_back(std::move(row));
                }
                emit(rows);
            }
        } else if (canonical_cmd->parsed()) {
            const FormDocument doc = read_form(input, tol);
            emit(to_json(canonicalize(as_residue_pole(doc, tol), tol)));
        } else if (component_cmd->parsed()) {
            const json raw = read_json(input);
            MPoint m;
            if (raw.contains("representation"))
                m = canonicalize(as_residue_pole(validate(form_document_from_json(raw), tol), tol),
                                 tol);
            else
                m = validate(mpoint_from_json(raw), tol);
            const IsochronousComponent comp = isochronous_component_s4(m, tol);
            json out;
            out["label"] = comp.label;
            out["class"] = comp.cls;
            emit(out);
        } else if (invariants_cmd->parsed()) {
            emit(to_json(invariants(read_form(input, tol), tol)));
        }
    } catch (const FormsError& e) {
        print_error(e);
        return exit_code_for(e);
    } catch (const std::exception& e) {
        json out;
        out["error"] = "InvalidDocument";
        out["message"] = e.what();
        std::cout << out.dump(2) << "\n";
        return 1;
    }
    return 0;
}
