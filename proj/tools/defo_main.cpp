#include <CLI11.hpp>
#include <iostream>

#include "defo/io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"versal deformation data of affine toric varieties in a fixed negative degree"};
    defo::PipelineConfig config;

    app.add_option("subcommand", config.subcommand,
                   "one of: cross-section summands base-space eta-table hilbert toric-ideal "
                   "lift t1 t2 degrees all")
        ->required();
    app.add_option("--input", config.input_path, "cone description (JSON)")->required();
    app.add_option("--format", config.format, "text | json")->capture_default_str();
    app.add_option("--max-degree", config.max_degree, "total degree bound for the toric ideal")
        ->capture_default_str();
    app.add_option("--kmax", config.kmax, "compute T2 and W up to degree k")->capture_default_str();
    app.add_option("--extra-truncation", config.extra_truncation,
                   "extra degrees checked against the base ideal")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return defo::run_pipeline(config, std::cout, std::cerr);
}
