#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dbr/corpus.hpp"
#include "dbr/error.hpp"
#include "dbr/report.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file)
        throw dbr::Error(dbr::ErrorKind::BadArgument, "cannot open file " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

int exit_code_for(dbr::ErrorKind kind) {
    switch (kind) {
        case dbr::ErrorKind::RouteDisagreement:
        case dbr::ErrorKind::InvariantViolation:
        case dbr::ErrorKind::AmbiguousClustering:
        case dbr::ErrorKind::CheckFailed:
        case dbr::ErrorKind::SupportMismatch:
        case dbr::ErrorKind::FixtureGateFailed:
            return 2;
        default:
            return 1;  // input errors
    }
}

void print_report(const nlohmann::json& report, const std::string& format) {
    if (format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << dbr::render_text(report);
}

void print_error(const dbr::Error& err, const std::string& format) {
    nlohmann::json record = {{"error", dbr::to_string(err.kind())},
                             {"message", err.what()},
                             {"detail", err.detail()}};
    if (format == "json")
        std::cout << record.dump(2) << "\n";
    else
        std::cout << "error: " << err.what() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distance-regular / distance-biregular graph recognition"};
    app.require_subcommand(1);

    double tol = dbr::kDefaultTol;
    if (const char* env = std::getenv("DBR_TOL")) tol = std::strtod(env, nullptr);
    std::string format = "text";
    app.add_option("--tol", tol, "clustering/comparison tolerance");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    std::string input;
    auto* analyze = app.add_subcommand("analyze", "full report");
    analyze->add_option("file", input, "edge-list file or - for stdin")->required();
    auto* classify = app.add_subcommand("classify", "classification only");
    classify->add_option("file", input, "edge-list file or - for stdin")->required();
    auto* excess = app.add_subcommand("excess", "excess report");
    excess->add_option("file", input, "edge-list file or - for stdin")->required();
    auto* halved = app.add_subcommand("halved", "halved graphs and route");
    halved->add_option("file", input, "edge-list file or - for stdin")->required();

    auto* gen = app.add_subcommand("gen", "generate a family graph");
    std::string family;
    std::vector<int> params;
    std::string out_path;
    gen->add_option("family", family, "family name")->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("-o,--output", out_path, "write edge list to file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            dbr::Graph g = dbr::generate(family, params);
            std::string text = dbr::to_edge_list(g);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream file(out_path);
                if (!file)
                    throw dbr::Error(dbr::ErrorKind::BadArgument,
                                     "cannot write " + out_path);
                file << text;
            }
            return 0;
        }
        dbr::Graph g = dbr::parse_edge_list(read_input(input));
        if (analyze->parsed()) print_report(dbr::analyze_report(g, tol), format);
        else if (classify->parsed()) print_report(dbr::classify_report(g, tol), format);
        else if (excess->parsed()) print_report(dbr::excess_command_report(g, tol), format);
        else if (halved->parsed()) print_report(dbr::halved_command_report(g, tol), format);
        return 0;
    } catch (const dbr::Error& err) {
        print_error(err, format);
        return exit_code_for(err.kind());
    } catch (const std::exception& err) {
        std::cout << "error: " << err.what() << "\n";
        return 1;
    }
}
