#pragma once

#include <optional>
#include <string>

#include "config.hpp"

namespace cylscat::cli {

struct Options {
    std::string config_path;
    std::optional<int> n;
    std::string out_dir = ".";
    bool quiet = false;
};

// Each command returns the process exit code: 0 success, 1 numeric failure,
// 2 configuration error.
int cmd_solve(const Options& opts);
int cmd_verify(const Options& opts);
int cmd_fieldmap(const Options& opts);
int cmd_convergence(const Options& opts);

}  // namespace cylscat::cli
