#include "vmosaic/errors.hpp"
#include "vmosaic/fixtures.hpp"
#include "vmosaic/gauss.hpp"
#include "vmosaic/indexpoly.hpp"
#include "vmosaic/mosaic.hpp"
#include "vmosaic/moves.hpp"
#include "vmosaic/render.hpp"
#include "vmosaic/rowbuild.hpp"
#include "vmosaic/search.hpp"
#include "vmosaic/surface.hpp"
#include "vmosaic/trace.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

vmosaic::Mosaic load_mosaic(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw vmosaic::SyntaxError("cannot read " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return vmosaic::parse_mosaic(buffer.str());
}

// Bad code strings are domain errors (exit 1), unlike unreadable .vmos input.
vmosaic::GaussCode parse_code_arg(const std::string& text) {
    try {
        return vmosaic::parse_code(text);
    } catch (const vmosaic::ParseError& e) {
        throw vmosaic::BadCode(e.what());
    }
}

void emit(const std::string& json_path, const json& payload) {
    if (json_path.empty()) return;
    std::ofstream out(json_path);
    if (!out) throw vmosaic::Error("cannot write " + json_path);
    out << payload.dump(2) << "\n";
}

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw vmosaic::Error("cannot write " + out_path);
    out << text;
}

std::string sign_str(int s) { return s > 0 ? "+1" : "-1"; }

// Crossing cells keyed by trace id, for per-crossing reporting.
std::map<int, std::pair<int, int>> crossing_cells(const vmosaic::TraceResult& tr) {
    std::map<int, std::pair<int, int>> cells;
    for (const auto& component : tr.visits)
        for (const auto& visit : component)
            cells.try_emplace(visit.crossing_id, visit.row, visit.col);
    return cells;
}

json poly_json(const vmosaic::IndexPolynomial& poly) {
    json obj = json::object();
    for (const auto& [exp, coeff] : poly.coefficients) obj[std::to_string(exp)] = coeff;
    return obj;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rectangular virtual knot mosaics"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string json_path;
    app.add_option("--json", json_path, "write machine-readable output to this file");

    int exit_code = 0;

    // validate
    std::string validate_file;
    auto* cmd_validate = app.add_subcommand("validate", "check suitable connection and boundary pairing");
    cmd_validate->add_option("file", validate_file, ".vmos input")->required();
    cmd_validate->callback([&] {
        const auto mo = load_mosaic(validate_file);
        const auto report = vmosaic::validate(mo);
        json violations = json::array();
        for (const auto& violation : report.violations) {
            std::cout << "violation: " << violation.message << "\n";
            violations.push_back(violation.message);
        }
        if (report.valid())
            std::cout << "valid\n";
        else
            exit_code = 1;
        emit(json_path, {{"valid", report.valid()}, {"violations", violations}});
    });

    // genus
    std::string genus_file;
    auto* cmd_genus = app.add_subcommand("genus", "closure surface genus and virtual crossing count");
    cmd_genus->add_option("file", genus_file, ".vmos input")->required();
    cmd_genus->callback([&] {
        const auto mo = load_mosaic(genus_file);
        const auto report = vmosaic::genus(mo);
        std::cout << "v=" << report.v << " genus=" << report.genus
                  << " virtual_crossings=" << report.virtual_crossings << "\n";
        emit(json_path, {{"v", report.v},
                         {"genus", report.genus},
                         {"virtual_crossings", report.virtual_crossings}});
    });

    // trace
    std::string trace_file;
    auto* cmd_trace = app.add_subcommand("trace", "follow the strands and report the Gauss code");
    cmd_trace->add_option("file", trace_file, ".vmos input")->required();
    cmd_trace->callback([&] {
        const auto mo = load_mosaic(trace_file);
        const auto tr = vmosaic::trace(mo);
        std::cout << "components=" << tr.components << "\n";
        std::cout << "crossings=" << tr.crossings << "\n";
        if (!tr.signs.empty()) {
            std::cout << "signs=";
            bool first = true;
            for (const auto& [id, sign] : tr.signs) {
                if (!first) std::cout << " ";
                std::cout << id << ":" << sign_str(sign);
                first = false;
            }
            std::cout << "\n";
        }
        if (tr.gauss) std::cout << "code=" << vmosaic::print_code(*tr.gauss) << "\n";
        json signs = json::object();
        for (const auto& [id, sign] : tr.signs) signs[std::to_string(id)] = sign;
        emit(json_path, {{"components", tr.components},
                         {"crossings", tr.crossings},
                         {"signs", signs},
                         {"code", tr.gauss ? json(vmosaic::print_code(*tr.gauss)) : json()}});
    });

    // poly
    std::string poly_file;
    auto* cmd_poly = app.add_subcommand("poly", "intersection index polynomial");
    cmd_poly->add_option("file", poly_file, ".vmos input")->required();
    cmd_poly->callback([&] {
        const auto mo = load_mosaic(poly_file);
        const auto tr = vmosaic::trace(mo);
        if (tr.components != 1)
            throw vmosaic::NotAKnot("diagram has " + std::to_string(tr.components) +
                                    " components");
        const auto cells = crossing_cells(tr);
        std::vector<int> indices;
        for (const auto& [id, cell] : cells)
            indices.push_back(vmosaic::intersection_index(mo, cell.first, cell.second));
        const auto poly = vmosaic::index_polynomial(mo);

        bool first = true;
        for (int index : indices) {
            if (!first) std::cout << " ";
            std::cout << index;
            first = false;
        }
        std::cout << "\n" << vmosaic::to_string(poly) << "\n";
        emit(json_path, {{"indices", indices},
                         {"polynomial", poly_json(poly)},
                         {"text", vmosaic::to_string(poly)}});
    });

    // build-row
    std::string build_code, build_out;
    auto* cmd_build = app.add_subcommand("build-row", "realize a Gauss code as a 1 x w mosaic");
    cmd_build->add_option("code", build_code, "Gauss code, full or shorthand")->required();
    cmd_build->add_option("--out", build_out, "write the .vmos here instead of stdout");
    cmd_build->callback([&] {
        const auto code = parse_code_arg(build_code);
        const auto mo = vmosaic::build_row(code);
        const auto text = vmosaic::serialize(mo);
        write_text(build_out, text);
        emit(json_path, {{"width", mo.n}, {"vmos", text}});
    });

    // inject / eject share their option shape
    struct MoveArgs {
        std::string file;
        std::string out;
        std::optional<int> row;
        std::optional<int> col;
        std::vector<int> square;
    };
    const auto add_move_options = [](CLI::App* cmd, MoveArgs& args) {
        cmd->add_option("file", args.file, ".vmos input")->required();
        cmd->add_option("--out", args.out, "write the result here instead of stdout");
        cmd->add_option("--row", args.row, "row cut index");
        cmd->add_option("--col", args.col, "column cut index");
        cmd->add_option("--square", args.square, "row and column cut indices")->expected(2);
    };
    const auto site_of = [](const MoveArgs& args) {
        const int given = (args.row ? 1 : 0) + (args.col ? 1 : 0) + (args.square.empty() ? 0 : 1);
        if (given != 1)
            throw CLI::ValidationError("exactly one of --row, --col, --square is required");
        vmosaic::InjectionSite site;
        if (args.row) {
            site.kind = vmosaic::MoveKind::Row;
            site.i = *args.row;
        } else if (args.col) {
            site.kind = vmosaic::MoveKind::Column;
            site.j = *args.col;
        } else {
            site.kind = vmosaic::MoveKind::Square;
            site.i = args.square[0];
            site.j = args.square[1];
        }
        return site;
    };

    MoveArgs inject_args;
    auto* cmd_inject = app.add_subcommand("inject", "insert a straight two-row/two-column band");
    add_move_options(cmd_inject, inject_args);
    cmd_inject->callback([&] {
        const auto mo = load_mosaic(inject_args.file);
        const auto result = vmosaic::inject(mo, site_of(inject_args));
        const auto text = vmosaic::serialize(result);
        write_text(inject_args.out, text);
        emit(json_path, {{"vmos", text}});
    });

    MoveArgs eject_args;
    auto* cmd_eject = app.add_subcommand("eject", "remove a straight band (inverse of inject)");
    add_move_options(cmd_eject, eject_args);
    cmd_eject->callback([&] {
        const auto mo = load_mosaic(eject_args.file);
        const auto result = vmosaic::eject(mo, site_of(eject_args));
        const auto text = vmosaic::serialize(result);
        write_text(eject_args.out, text);
        emit(json_path, {{"vmos", text}});
    });

    // census
    int census_rows = 0, census_cols = 0;
    std::optional<int> census_genus;
    std::vector<int> census_crossings;
    int census_max_cells = 12;
    auto* cmd_census = app.add_subcommand("census", "enumerate all m x n mosaics up to code and genus");
    cmd_census->add_option("--rows", census_rows, "grid rows")->required();
    cmd_census->add_option("--cols", census_cols, "grid columns")->required();
    cmd_census->add_option("--genus", census_genus, "keep only this closure genus");
    cmd_census->add_option("--crossings", census_crossings, "inclusive crossing-count range")
        ->expected(2);
    cmd_census->add_option("--max-cells", census_max_cells, "search guard (default 12)");
    cmd_census->callback([&] {
        vmosaic::SearchOptions options;
        options.genus_filter = census_genus;
        options.require_knot = true;
        options.max_cells = census_max_cells;
        if (!census_crossings.empty())
            options.crossing_range = std::make_pair(census_crossings[0], census_crossings[1]);
        const auto entries = vmosaic::census(census_rows, census_cols, options);
        json arr = json::array();
        for (const auto& entry : entries) {
            const auto code = vmosaic::print_code(entry.code);
            std::cout << "crossings=" << entry.crossings << " genus=" << entry.genus
                      << " tiles=" << entry.tiles << " code=" << code << "\n";
            arr.push_back({{"code", code},
                           {"crossings", entry.crossings},
                           {"genus", entry.genus},
                           {"tiles", entry.tiles},
                           {"vmos", vmosaic::serialize(entry.mosaic)}});
        }
        std::cout << "entries=" << entries.size() << "\n";
        emit(json_path, arr);
    });

    // tile-number
    std::string tile_code;
    int tile_max_area = 12;
    std::string tile_out;
    auto* cmd_tile = app.add_subcommand("tile-number", "least mosaic area realizing a code, searched up to a bound");
    cmd_tile->add_option("code", tile_code, "Gauss code")->required();
    cmd_tile->add_option("--max-area", tile_max_area, "largest area to try (default 12)");
    cmd_tile->add_option("--out", tile_out, "write the witness .vmos here");
    cmd_tile->callback([&] {
        const auto code = parse_code_arg(tile_code);
        const auto [area, witness] = vmosaic::tile_number_bound(code, tile_max_area);
        std::cout << "tile_number_bound=" << area << "\n";
        const auto text = vmosaic::serialize(witness);
        if (tile_out.empty())
            std::cout << text;
        else
            write_text(tile_out, text);
        emit(json_path, {{"bound", area}, {"vmos", text}});
    });

    // row-number
    std::string row_code;
    int row_max_width = 12;
    std::string row_out;
    auto* cmd_row = app.add_subcommand("row-number", "least 1 x w width realizing a code, searched up to a bound");
    cmd_row->add_option("code", row_code, "Gauss code")->required();
    cmd_row->add_option("--max-width", row_max_width, "largest width to try (default 12)");
    cmd_row->add_option("--out", row_out, "write the witness .vmos here");
    cmd_row->callback([&] {
        const auto code = parse_code_arg(row_code);
        const auto [width, witness] = vmosaic::row_number_bound(code, row_max_width);
        std::cout << "row_number_bound=" << width << "\n";
        const auto text = vmosaic::serialize(witness);
        if (row_out.empty())
            std::cout << text;
        else
            write_text(row_out, text);
        emit(json_path, {{"bound", width}, {"vmos", text}});
    });

    // render
    std::string render_file, render_format = "ascii", render_out;
    bool render_closure = false;
    auto* cmd_render = app.add_subcommand("render", "draw a mosaic as ASCII art or SVG");
    cmd_render->add_option("file", render_file, ".vmos input")->required();
    cmd_render->add_option("--format", render_format, "ascii or svg (default ascii)")
        ->check(CLI::IsMember({"ascii", "svg"}));
    cmd_render->add_flag("--closure", render_closure, "draw the boundary gluing (svg only)");
    cmd_render->add_option("--out", render_out, "write the rendering here instead of stdout");
    cmd_render->callback([&] {
        if (render_closure && render_format != "svg")
            throw CLI::ValidationError("--closure requires --format svg");
        const auto mo = load_mosaic(render_file);
        const auto text = render_format == "svg" ? vmosaic::render_svg(mo, render_closure)
                                                 : vmosaic::render_ascii(mo);
        write_text(render_out, text);
    });

    // fixtures-check
    std::string fixtures_dir = "fixtures";
    auto* cmd_fixtures = app.add_subcommand("fixtures-check", "batch-verify the fixture corpus against its manifest");
    cmd_fixtures->add_option("--dir", fixtures_dir, "fixture directory (default: fixtures)");
    cmd_fixtures->callback([&] {
        const auto report = vmosaic::check_fixtures(fixtures_dir);
        std::cout << "checked " << report.checked << " fixtures\n";
        json failures = json::array();
        for (const auto& failure : report.failures) {
            std::cout << "mismatch: " << failure << "\n";
            failures.push_back(failure);
        }
        if (report.ok())
            std::cout << "all pass\n";
        else
            exit_code = 1;
        emit(json_path, {{"checked", report.checked}, {"failures", failures}});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const vmosaic::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const vmosaic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
