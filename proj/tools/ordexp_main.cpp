#include "ordexp/experiments.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"ordered-product integrals of matrix-valued differential forms"};
    app.require_subcommand(1);

    std::string run_config, csv_path, validate_config;
    bool quiet = false;

    CLI::App* run = app.add_subcommand("run", "run one experiment config");
    run->add_option("config", run_config, "JSON config file")->required();
    run->add_option("--csv", csv_path, "write the convergence CSV to this file");
    run->add_flag("--quiet", quiet, "print only the STATUS line");

    CLI::App* validate = app.add_subcommand("validate", "check a config without running it");
    validate->add_option("config", validate_config, "JSON config file")->required();

    CLI::App* schema = app.add_subcommand("schema", "print the JSON schema of the config format");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;   // usage problems are config errors
    }

    if (schema->parsed()) {
        std::cout << ordexp::config_schema_json() << "\n";
        return 0;
    }

    if (validate->parsed()) {
        ordexp::RunResult res = ordexp::validate_config_file(validate_config);
        std::cout << res.report;
        return res.exit_code;
    }

    ordexp::RunResult res = ordexp::run_config_file(run_config);
    if (quiet)
        std::cout << "STATUS: " << res.status << "\n";
    else
        std::cout << res.report;

    if (!csv_path.empty()) {
        if (!res.csv.empty()) {
            std::ofstream out(csv_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write CSV file '" << csv_path << "'\n";
                return 3;
            }
            out << res.csv;
        } else if (res.exit_code == 0 || res.exit_code == 2) {
            std::cerr << "note: this experiment kind produces no CSV; '" << csv_path
                      << "' was not written\n";
        }
    }
    return res.exit_code;
}
