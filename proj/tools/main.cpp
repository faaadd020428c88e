#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
    using exactlin::cli::Command;
    using exactlin::cli::JobSpec;
    using exactlin::cli::OutputFormat;

    CLI::App app{"Exact linear algebra over arbitrary-precision integers: fraction-free "
                 "elimination for determinants, linear systems and adjugates"};
    app.require_subcommand(1);

    JobSpec job;
    std::string format = "text";
    std::string input_path;

    CLI::App* det = app.add_subcommand("det", "Determinant of the matrix");
    CLI::App* solve =
        app.add_subcommand("solve", "Solve A x = b exactly (input must carry an rhs line)");
    CLI::App* adjugate =
        app.add_subcommand("adjugate", "Adjugate matrix P, satisfying A P = det(A) I");
    for (CLI::App* command : {det, solve, adjugate}) {
        command->add_option("--input", input_path,
                            "Read the matrix from this file instead of standard input");
        command->add_option("--format", format, "Output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        command->add_flag("--trace", job.trace,
                          "Dump each elimination snapshot and each backward value to stderr");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (det->parsed()) job.command = Command::det;
    if (solve->parsed()) job.command = Command::solve;
    if (adjugate->parsed()) job.command = Command::adjugate;
    if (!input_path.empty()) job.input_path = input_path;
    job.format = format == "json" ? OutputFormat::json : OutputFormat::text;

    return exactlin::cli::run(job, std::cin, std::cout, std::cerr);
}
