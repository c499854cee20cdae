#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tropdual/error.hpp"
#include "tropdual/io.hpp"
#include "tropdual/report.hpp"
#include "tropdual/svg.hpp"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitMismatch = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tropdual::InputError("cannot read input file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw tropdual::InputError("cannot write " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace tropdual;

    CLI::App app{"Tropical quadric duality, subdivisions and curves"};
    std::string command;
    std::string input;
    std::string sign_text = "examples";
    std::string svg_path;
    std::string out_path;
    app.add_option("command", command, "subdivide | curve | dual | regularity | oracle-check | render")
        ->required()
        ->check(CLI::IsMember({"subdivide", "curve", "dual", "regularity", "oracle-check", "render"}));
    app.add_option("input", input, "input JSON document")->required();
    app.add_option("--sign", sign_text, "lifting convention")->check(CLI::IsMember({"examples", "kapranov"}));
    app.add_option("--svg", svg_path, "write an SVG rendering");
    app.add_option("--out", out_path, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        SignConvention sign = parse_sign_convention(sign_text);
        Document doc = parse_document(read_file(input));
        std::string report;
        int status = 0;
        if (command == "subdivide") {
            report = subdivision_report(as_polynomial(doc), sign);
        } else if (command == "curve") {
            report = curve_report(as_polynomial(doc), sign);
        } else if (command == "dual") {
            report = dual_report(as_matrix(doc));
        } else if (command == "regularity") {
            report = regularity_report(as_matrix(doc));
        } else if (command == "oracle-check") {
            OracleCheck check = oracle_check(as_matrix(doc));
            report = check.report;
            if (!check.agree) status = kExitMismatch;
        } else {
            std::string svg = render_svg(as_polynomial(doc), sign);
            if (svg_path.empty()) {
                report = svg;
            } else {
                report = "wrote " + svg_path + "\n";
            }
        }
        if (!svg_path.empty()) {
            write_file(svg_path, render_svg(as_polynomial(doc), sign));
        }
        if (out_path.empty()) {
            std::cout << report;
        } else {
            write_file(out_path, report);
        }
        return status;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const UnsupportedShape& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const OverflowError& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kExitUnsupported;
    }
}
