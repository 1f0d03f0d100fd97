#pragma once

#include <iosfwd>
#include <string>

#include "defo/cone.hpp"

namespace defo {

struct ConeInput {
    PointedCone cone;
    IVec r;
    IMat generator_order;  // optional preferred order of the non-R generators
};

// {"rays": [[int,...],...], "R": [int,...]} with exact integers only
ConeInput parse_cone_json(const std::string& text);
ConeInput load_cone(const std::string& path);

struct PipelineConfig {
    std::string input_path;
    std::string subcommand;
    std::string format = "text";  // text | json
    int max_degree = 6;           // toric ideal total degree bound
    int kmax = 3;                 // T^2 / W depth
    int extra_truncation = 1;     // extra degrees checked in the base ideal
};

// returns the process exit status: 0 ok, 2 input error, 3 hypothesis
// violation, 4 internal invariant failure
int run_pipeline(const PipelineConfig& config, std::ostream& out, std::ostream& err);

}  // namespace defo
